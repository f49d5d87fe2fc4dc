#include "simptree/json_io.hpp"

#include <fstream>

#include "simptree/errors.hpp"

namespace simptree {

json to_json(const Simplex& s) { return json(s.vertices()); }

json to_json(const std::vector<Simplex>& simplices) {
    json arr = json::array();
    for (const auto& s : simplices) arr.push_back(to_json(s));
    return arr;
}

json to_json(const PureComplex& k) {
    return json{{"n", k.dim()}, {"facets", to_json(k.facets())}};
}

json to_json(const AltSequence& seq) {
    json items = json::array();
    for (const auto& s : seq.items) items.push_back(to_json(s));
    return json{{"m", seq.m}, {"items", std::move(items)}};
}

json to_json(const ReducedWitness& w) {
    json j = to_json(w.base);
    j["connectors"] = to_json(w.connectors);
    return j;
}

json to_json(const Ordering& o) {
    return json{{"facets", to_json(o.facets)}, {"complete", o.complete}};
}

json to_json(const CycleWitness& w) {
    json j = to_json(w.seq);
    j["connectors"] = to_json(w.connectors);
    return j;
}

json to_json(const UniquePathsReport& r) {
    return json{{"holds", r.verdict()},
                {"connected", r.connected},
                {"unique_top_paths", r.unique_top_paths},
                {"unique_lower_paths", r.unique_lower_paths},
                {"no_lower_cycles", r.no_lower_cycles}};
}

json to_json(const CertReport& r) {
    json per_k = json::object();
    for (const auto& [key, ok] : r.by_count) per_k[std::to_string(key)] = ok;

    json witnesses = json::object();
    witnesses["cycle"] = r.cycle_witness ? to_json(*r.cycle_witness) : json(nullptr);
    if (r.duplicate_path_witness) {
        witnesses["duplicate_paths"] = json::array(
            {to_json((*r.duplicate_path_witness)[0]), to_json((*r.duplicate_path_witness)[1])});
    } else {
        witnesses["duplicate_paths"] = nullptr;
    }
    witnesses["disconnection"] =
        r.disconnection ? components_to_json(*r.disconnection) : json(nullptr);

    return json{
        {"by_definition", r.by_definition},
        {"by_complete_ordering",
         json{{"holds", r.by_complete_ordering},
              {"ordering", r.complete_ordering ? to_json(*r.complete_ordering) : json(nullptr)}}},
        {"by_count", json{{"any", r.by_count_any}, {"per_k", std::move(per_k)}}},
        {"by_acyclic_counts", r.by_acyclic_counts},
        {"by_unique_paths", to_json(r.unique_paths)},
        {"agree", r.agree},
        {"witnesses", std::move(witnesses)}};
}

json to_json(const BoundsReport& r) {
    json entries = json::array();
    for (const auto& e : r.entries) {
        entries.push_back(json{{"name", e.name},
                               {"premise", e.premise},
                               {"conclusion", e.conclusion},
                               {"holds", e.holds}});
    }
    return json{{"entries", std::move(entries)}, {"all_hold", r.all_hold()}};
}

json to_json(const ConjectureVerdict& v) {
    return json{{"conjecture", conjecture_name(v.which)},
                {"complex", json{{"facets", to_json(v.facets)}}},
                {"canonical", to_json(v.canonical)},
                {"premises_hold", v.premises_hold},
                {"is_tree", v.is_tree},
                {"status", v.counterexample ? "counterexample" : "consistent"}};
}

json components_to_json(const std::vector<std::vector<Simplex>>& classes) {
    json arr = json::array();
    for (const auto& cls : classes) arr.push_back(to_json(cls));
    return arr;
}

json error_to_json(const std::string& code, const std::string& message) {
    return json{{"error", json{{"code", code}, {"message", message}}}};
}

Simplex simplex_from_json(const json& j) {
    if (!j.is_array() || j.empty()) {
        throw ParseError("a simplex must be a nonempty array of vertex ids");
    }
    std::vector<VertexId> verts;
    for (const auto& v : j) {
        if (!v.is_number_integer()) {
            throw ParseError("vertex ids must be integers");
        }
        verts.push_back(v.get<VertexId>());
    }
    try {
        return Simplex(std::move(verts));
    } catch (const InvalidSimplexError& e) {
        throw ParseError(e.what());
    }
}

PureComplex complex_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("facets")) {
        throw ParseError(R"(expected {"n": <int>, "facets": [[v,...],...]})");
    }
    if (!j["n"].is_number_integer() || !j["facets"].is_array()) {
        throw ParseError("\"n\" must be an integer and \"facets\" an array");
    }
    const int n = j["n"].get<int>();
    std::vector<Simplex> facets;
    for (const auto& f : j["facets"]) facets.push_back(simplex_from_json(f));
    for (const auto& f : facets) {
        if (f.dim() != n) {
            throw MixedDimensionError("facet of dimension " + std::to_string(f.dim()) +
                                      " in a complex declared with n=" + std::to_string(n));
        }
    }
    return PureComplex::from_facets(std::move(facets));
}

AltSequence sequence_from_json(const json& j) {
    if (!j.is_object() || !j.contains("m") || !j.contains("items") ||
        !j["m"].is_number_integer() || !j["items"].is_array()) {
        throw ParseError(R"(expected {"m": <int>, "items": [[v,...],...]})");
    }
    AltSequence seq;
    seq.m = j["m"].get<int>();
    for (const auto& item : j["items"]) seq.items.push_back(simplex_from_json(item));
    return seq;
}

PureComplex read_complex_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open " + path);
    }
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
    return complex_from_json(j);
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) {
        throw ParseError("cannot write " + path);
    }
    out << j.dump(2) << "\n";
}

}  // namespace simptree
