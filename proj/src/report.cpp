#include "blockcover/report.hpp"

#include <json.hpp>

#include <sstream>

namespace blockcover {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json label_list(const std::vector<VertexId> &ids, const std::vector<std::string> &labels) {
    ordered_json arr = ordered_json::array();
    for (VertexId v : ids) {
        arr.push_back(labels.at(v));
    }
    return arr;
}

ordered_json edge_list(const std::vector<Edge> &edges, const std::vector<std::string> &labels) {
    ordered_json arr = ordered_json::array();
    for (const Edge &e : edges) {
        arr.push_back(ordered_json::array({labels.at(e.a), labels.at(e.b)}));
    }
    return arr;
}

ordered_json component_object(const Decomposition &d, std::uint32_t i,
                              const std::vector<std::string> &labels) {
    const Block &b = d.blocks[i];
    ordered_json c;
    c["index"] = i + 1;  // reported 1-based, matching the B1..BN naming
    c["vertices"] = label_list(b.vertices, labels);
    c["edges"] = edge_list(b.edges, labels);
    c["size_class"] = b.vertices.size() == 2 ? "2" : ">=3";
    c["clique"] = is_clique(b);
    return c;
}

std::string vertex_set_text(const std::vector<VertexId> &ids,
                            const std::vector<std::string> &labels) {
    std::string out = "{";
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += labels.at(ids[i]);
    }
    out += "}";
    return out;
}

std::string render(const ordered_json &doc) { return doc.dump(2) + "\n"; }

}  // namespace

std::string emit_report(const CoverageReport &r, const DictatorAssignment *d, const Profile &p,
                        ReportFormat format) {
    const Decomposition &dec = r.decomposition;
    const auto &labels = p.alternatives;

    if (format == ReportFormat::json) {
        ordered_json doc;
        doc["holds"] = r.holds;
        ordered_json components = ordered_json::array();
        for (std::uint32_t i = 0; i < dec.blocks.size(); ++i) {
            ordered_json c = component_object(dec, i, labels);
            if (r.witnesses[i] >= 0) {
                c["witness"] = p.voters.at(static_cast<std::size_t>(r.witnesses[i]));
            } else {
                c["witness"] = nullptr;
            }
            components.push_back(std::move(c));
        }
        doc["components"] = std::move(components);
        ordered_json failures = ordered_json::array();
        for (std::uint32_t i : r.failures) {
            ordered_json f;
            f["index"] = i + 1;
            f["vertices"] = label_list(dec.blocks[i].vertices, labels);
            f["witness"] = nullptr;
            failures.push_back(std::move(f));
        }
        doc["failures"] = std::move(failures);

        if (d != nullptr) {
            ordered_json dict;
            ordered_json by_component = ordered_json::array();
            for (std::uint32_t i = 0; i < dec.blocks.size(); ++i) {
                ordered_json entry;
                entry["index"] = i + 1;
                entry["voter"] = p.voters.at(static_cast<std::size_t>(d->dictators[i]));
                by_component.push_back(std::move(entry));
            }
            dict["by_component"] = std::move(by_component);
            ordered_json edge_dict = ordered_json::array();
            for (const auto &[edge, voter] : d->edge_dictators) {
                ordered_json entry;
                entry["edge"] = ordered_json::array({labels.at(edge.a), labels.at(edge.b)});
                entry["voter"] = p.voters.at(static_cast<std::size_t>(voter));
                edge_dict.push_back(std::move(entry));
            }
            dict["edge_dictators"] = std::move(edge_dict);
            doc["dictators"] = std::move(dict);

            ordered_json cycles = ordered_json::array();
            for (const auto &set : d->maximal_cycle_vertex_sets) {
                cycles.push_back(label_list(set, labels));
            }
            doc["maximal_cycles"] = std::move(cycles);
            doc["a0"] = label_list(d->a0, labels);
        }
        return render(doc);
    }

    std::ostringstream out;
    out << "holds: " << (r.holds ? "true" : "false") << "\n";
    out << "components: " << dec.blocks.size() << " (size-2: " << dec.size2.size()
        << ", size>=3: " << dec.size3plus.size() << ")\n";
    for (std::uint32_t i = 0; i < dec.blocks.size(); ++i) {
        out << "B" << (i + 1) << ": " << vertex_set_text(dec.blocks[i].vertices, labels)
            << " class " << (dec.blocks[i].vertices.size() == 2 ? "2" : ">=3") << " clique "
            << (r.clique[i] ? "yes" : "no") << " witness ";
        if (r.witnesses[i] >= 0) {
            out << p.voters.at(static_cast<std::size_t>(r.witnesses[i]));
        } else {
            out << "-";
        }
        out << "\n";
    }
    if (!r.failures.empty()) {
        out << "uncovered:\n";
        for (std::uint32_t i : r.failures) {
            out << "B" << (i + 1) << ": " << vertex_set_text(dec.blocks[i].vertices, labels)
                << "\n";
        }
    }
    if (d != nullptr) {
        out << "dictators:\n";
        for (std::uint32_t i = 0; i < dec.blocks.size(); ++i) {
            out << "  B" << (i + 1) << " -> "
                << p.voters.at(static_cast<std::size_t>(d->dictators[i])) << "\n";
        }
        out << "maximal cycles:\n";
        for (std::size_t x = 0; x < d->maximal_cycle_vertex_sets.size(); ++x) {
            const std::uint32_t block = d->maximal_cycle_blocks[x];
            out << "  C" << (x + 1) << ": "
                << vertex_set_text(d->maximal_cycle_vertex_sets[x], labels) << " dictator "
                << p.voters.at(static_cast<std::size_t>(d->dictators[block])) << "\n";
        }
        out << "a0: " << vertex_set_text(d->a0, labels) << "\n";
        out << "edge dictators:\n";
        for (const auto &[edge, voter] : d->edge_dictators) {
            out << "  {" << labels.at(edge.a) << ", " << labels.at(edge.b) << "} -> "
                << p.voters.at(static_cast<std::size_t>(voter)) << "\n";
        }
    }
    return out.str();
}

std::string emit_decomposition(const Decomposition &d, const std::vector<std::string> &labels,
                               ReportFormat format) {
    if (format == ReportFormat::json) {
        ordered_json doc;
        ordered_json components = ordered_json::array();
        for (std::uint32_t i = 0; i < d.blocks.size(); ++i) {
            components.push_back(component_object(d, i, labels));
        }
        doc["components"] = std::move(components);
        doc["articulation_vertices"] = label_list(d.articulation_vertices, labels);
        ordered_json size2 = ordered_json::array();
        for (std::uint32_t i : d.size2) {
            size2.push_back(i + 1);
        }
        doc["size2_indices"] = std::move(size2);
        ordered_json size3 = ordered_json::array();
        for (std::uint32_t i : d.size3plus) {
            size3.push_back(i + 1);
        }
        doc["size3plus_indices"] = std::move(size3);
        return render(doc);
    }

    std::ostringstream out;
    out << "components: " << d.blocks.size() << " (size-2: " << d.size2.size()
        << ", size>=3: " << d.size3plus.size() << ")\n";
    out << "articulation vertices: " << vertex_set_text(d.articulation_vertices, labels) << "\n";
    for (std::uint32_t i = 0; i < d.blocks.size(); ++i) {
        out << "B" << (i + 1) << ": " << vertex_set_text(d.blocks[i].vertices, labels)
            << " class " << (d.blocks[i].vertices.size() == 2 ? "2" : ">=3") << " clique "
            << (is_clique(d.blocks[i]) ? "yes" : "no") << " edges " << d.blocks[i].edges.size()
            << "\n";
    }
    return out.str();
}

}  // namespace blockcover
