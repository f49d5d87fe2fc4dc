// Command-line front end: every subcommand reads the facet-list JSON format
// and prints a single JSON document (JSON-lines for `search`).
//
// Exit codes: 0 = verdict computed, 1 = negative check-tree verdict,
// 2 = input error.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "simptree/certify.hpp"
#include "simptree/counting.hpp"
#include "simptree/cycles.hpp"
#include "simptree/enumerate.hpp"
#include "simptree/errors.hpp"
#include "simptree/fixtures.hpp"
#include "simptree/json_io.hpp"
#include "simptree/paths.hpp"

namespace {

using simptree::json;

simptree::Simplex parse_simplex_arg(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw simptree::ParseError(std::string("invalid simplex argument: ") + e.what());
    }
    return simptree::simplex_from_json(j);
}

json count_report(const simptree::PureComplex& k) {
    const int n = k.dim();
    const long long p = static_cast<long long>(k.vertex_count());
    json alpha = json::array();
    for (int i = 0; i <= n; ++i) alpha.push_back(k.alpha(i));

    json tree = json::object();
    bool all_match = true, any_match = false;
    for (int key = 1; key <= n; ++key) {
        const long long expected = simptree::tree_count_formula(p, n, key);
        const bool match = expected == static_cast<long long>(k.alpha(key));
        all_match = all_match && match;
        any_match = any_match || match;
        tree[std::to_string(key)] =
            json{{"expected", expected}, {"actual", k.alpha(key)}, {"match", match}};
    }

    json dewdney = json::object();
    for (int key = 1; key <= n; ++key) {
        const auto value = simptree::dewdney_count_formula(p, n - 1, n, key);
        json entry{{"num", value.numerator()},
                   {"den", value.denominator()},
                   {"integral", simptree::is_integral(value)}};
        entry["match"] = simptree::is_integral(value) &&
                         value.numerator() == static_cast<long long>(k.alpha(key));
        dewdney[std::to_string(key)] = std::move(entry);
    }

    return json{{"n", n},
                {"p", p},
                {"alpha", std::move(alpha)},
                {"tree_formula", json{{"per_k", std::move(tree)},
                                      {"all_match", all_match},
                                      {"any_match", any_match}}},
                {"dewdney_formula", json{{"m", n - 1}, {"per_k", std::move(dewdney)}}}};
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pure n-simplicial complexes: paths, cycles and tree certification"};
    app.require_subcommand(1);

    std::string input_file, from_text, to_text, out_path, fixtures_dir = ".";
    int m_arg = 0;
    bool complete_flag = false;
    int space_n = 2, space_facets = 1, space_vertices = 3;
    bool iso = true;
    std::string conjecture_arg;

    auto* check_tree = app.add_subcommand("check-tree", "run all five tree certifiers");
    check_tree->add_option("input", input_file, "facet-list JSON file")->required();

    auto* comps = app.add_subcommand("components", "facet classes of the components");
    comps->add_option("input", input_file)->required();

    auto* find_path_cmd = app.add_subcommand("find-path", "(m,n)-path sequence between two simplices");
    find_path_cmd->add_option("input", input_file)->required();
    find_path_cmd->add_option("--from", from_text, "start simplex, e.g. [1]")->required();
    find_path_cmd->add_option("--to", to_text, "end simplex, e.g. [4]")->required();

    auto* find_reduced_cmd =
        app.add_subcommand("find-reduced-path", "reduced (m,n)-path sequence");
    find_reduced_cmd->add_option("input", input_file)->required();
    find_reduced_cmd->add_option("--from", from_text)->required();
    find_reduced_cmd->add_option("--to", to_text)->required();

    auto* find_cycle_cmd = app.add_subcommand("find-cycle", "(m,n)-simplicial cycle sequence");
    find_cycle_cmd->add_option("input", input_file)->required();
    find_cycle_cmd->add_option("--m", m_arg, "dimension of the base simplices")->required();

    auto* count_cmd = app.add_subcommand("count", "simplex counts and formula comparisons");
    count_cmd->add_option("input", input_file)->required();

    auto* ordering_cmd = app.add_subcommand("ordering", "(n-1)-ordering of the facets");
    ordering_cmd->add_option("input", input_file)->required();
    ordering_cmd->add_flag("--complete", complete_flag,
                           "search for an (n-1)-complete ordering instead");

    auto* search_cmd = app.add_subcommand("search", "conjecture counterexample search");
    search_cmd->add_option("--n", space_n, "complex dimension")->required();
    search_cmd->add_option("--max-facets", space_facets)->required();
    search_cmd->add_option("--max-vertices", space_vertices)->required();
    search_cmd->add_option("--conjecture", conjecture_arg, "one of c1, c2, new")->required();
    search_cmd->add_flag("--iso,!--no-iso", iso, "deduplicate up to isomorphism");
    search_cmd->add_option("--out", out_path, "write the premises-hold audit trail here");

    auto* fixtures_cmd = app.add_subcommand("fixtures", "write the built-in example complexes");
    fixtures_cmd->add_option("--dir", fixtures_dir, "output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check_tree->parsed()) {
            auto k = simptree::read_complex_file(input_file);
            auto report = simptree::certify_tree(k);
            print(simptree::to_json(report));
            return report.by_definition ? 0 : 1;
        }
        if (comps->parsed()) {
            auto k = simptree::read_complex_file(input_file);
            print(json{{"components", simptree::components_to_json(simptree::components(k))}});
            return 0;
        }
        if (find_path_cmd->parsed() || find_reduced_cmd->parsed()) {
            auto k = simptree::read_complex_file(input_file);
            auto a = parse_simplex_arg(from_text);
            auto b = parse_simplex_arg(to_text);
            auto seq = find_path_cmd->parsed() ? simptree::find_path(k, a, b)
                                               : simptree::find_reduced_path(k, a, b);
            print(seq ? simptree::to_json(*seq) : json(nullptr));
            return 0;
        }
        if (find_cycle_cmd->parsed()) {
            auto k = simptree::read_complex_file(input_file);
            if (m_arg < 0 || m_arg > k.dim() - 1) {
                throw simptree::DimensionOutOfRangeError("--m must lie between 0 and n-1");
            }
            auto witness = simptree::find_cycle(k, m_arg);
            print(witness ? simptree::to_json(*witness) : json(nullptr));
            return 0;
        }
        if (count_cmd->parsed()) {
            auto k = simptree::read_complex_file(input_file);
            print(count_report(k));
            return 0;
        }
        if (ordering_cmd->parsed()) {
            auto k = simptree::read_complex_file(input_file);
            auto ordering = complete_flag ? simptree::certify_by_complete_ordering(k)
                                          : simptree::find_ordering(k);
            print(ordering ? simptree::to_json(*ordering) : json(nullptr));
            return 0;
        }
        if (search_cmd->parsed()) {
            simptree::Conjecture which;
            if (conjecture_arg == "c1") {
                which = simptree::Conjecture::C1;
            } else if (conjecture_arg == "c2") {
                which = simptree::Conjecture::C2;
            } else if (conjecture_arg == "new") {
                which = simptree::Conjecture::NewConjecture;
            } else {
                throw simptree::ParseError("--conjecture must be c1, c2 or new");
            }
            simptree::EnumSpace space{space_n, space_facets, space_vertices, iso};
            auto outcome = simptree::search_counterexamples(space, which);
            for (const auto& verdict : outcome.counterexamples) {
                std::cout << simptree::to_json(verdict).dump() << "\n";
            }
            if (!out_path.empty()) {
                std::ofstream audit(out_path);
                if (!audit) throw simptree::ParseError("cannot write " + out_path);
                for (const auto& verdict : outcome.premise_holders) {
                    audit << simptree::to_json(verdict).dump() << "\n";
                }
            }
            return 0;
        }
        if (fixtures_cmd->parsed()) {
            auto paths = simptree::write_fixtures(fixtures_dir);
            print(json{{"written", paths}});
            return 0;
        }
    } catch (const simptree::Error& e) {
        print(simptree::error_to_json(e.code(), e.what()));
        return 2;
    } catch (const std::exception& e) {
        print(simptree::error_to_json("internal", e.what()));
        return 2;
    }
    return 2;
}
