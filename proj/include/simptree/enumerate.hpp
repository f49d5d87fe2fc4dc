#pragma once

#include <functional>
#include <string>
#include <vector>

#include "simptree/complex.hpp"

namespace simptree {

/// Bounds for exhaustive generation of pure n-complexes. `max_facets` and
/// `max_vertices` are inclusive upper bounds; vertices are labeled 1..p with
/// no gaps.
struct EnumSpace {
    int n = 2;
    int max_facets = 1;
    int max_vertices = 3;
    bool up_to_iso = true;
};

/// Default cap on the vertex count accepted by canonical_form.
inline constexpr int kCanonicalVertexBudget = 12;

/// Lexicographically least facet list over all relabelings of the vertices
/// onto 1..p. Isomorphic complexes map to identical forms. Throws
/// TooLargeError when the vertex count exceeds the budget.
std::vector<Simplex> canonical_form(const std::vector<Simplex>& facets,
                                    int vertex_budget = kCanonicalVertexBudget);
std::vector<Simplex> canonical_form(const PureComplex& k,
                                    int vertex_budget = kCanonicalVertexBudget);

/// True iff the facet list equals its own canonical form.
bool is_canonical_form(const std::vector<Simplex>& facets,
                       int vertex_budget = kCanonicalVertexBudget);

/// Streams every complex in the space, in lexicographic facet-list order,
/// as facet lists. With up_to_iso, exactly the canonical representatives.
void for_each_complex(const EnumSpace& space,
                      const std::function<void(const std::vector<Simplex>&)>& fn);

/// Materialized version of for_each_complex.
std::vector<PureComplex> enumerate_complexes(const EnumSpace& space);

enum class Conjecture { C1, C2, NewConjecture };

std::string conjecture_name(Conjecture c);

struct ConjectureVerdict {
    Conjecture which = Conjecture::C1;
    std::vector<Simplex> facets;
    std::vector<Simplex> canonical;
    bool premises_hold = false;
    bool is_tree = false;
    bool counterexample = false;  // premises_hold && !is_tree
};

/// Evaluates the conjecture premises (C1/C2 at m = n-1) and the tree verdict.
ConjectureVerdict test_conjecture(const PureComplex& k, Conjecture which);

struct SearchOutcome {
    std::vector<ConjectureVerdict> counterexamples;  // sorted by canonical form
    std::vector<ConjectureVerdict> premise_holders;  // audit trail, sorted
};

/// Runs test_conjecture over the space with a worker pool; results are
/// collected unordered and sorted by canonical form at the end.
SearchOutcome search_counterexamples(const EnumSpace& space, Conjecture which,
                                     unsigned threads = 0);

}  // namespace simptree
