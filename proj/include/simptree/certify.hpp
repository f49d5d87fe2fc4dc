#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "simptree/cycles.hpp"
#include "simptree/paths.hpp"

namespace simptree {

/// Connected and acyclic.
bool certify_by_definition(const PureComplex& k);

/// Backtracking search for an (n-1)-complete ordering; exists iff K is a
/// simplicial tree.
std::optional<Ordering> certify_by_complete_ordering(const PureComplex& k);

/// Connected and alpha_k matches the tree count formula.
bool certify_by_count(const PureComplex& k, int key);

/// Cycle-free for some m, with alpha_{n-1} = (p-n)n + 1 and alpha_n = p - n.
bool certify_by_acyclic_counts(const PureComplex& k);

/// All reduced (m,n)-path sequences between the given endpoints. Paths never
/// repeat facets, so the enumeration is finite. With max_count > 0 the search
/// stops after that many sequences.
std::vector<AltSequence> enumerate_reduced_paths(const PureComplex& k, const Simplex& a,
                                                 const Simplex& b,
                                                 std::size_t max_count = 0);

/// Per-condition breakdown of the unique-path characterization.
struct UniquePathsReport {
    bool connected = false;
    bool unique_top_paths = false;    // exactly one reduced (n-1,n)-path per pair
    bool unique_lower_paths = false;  // one closure per qualifying lower pair
    bool no_lower_cycles = false;     // no (m,n)-cycle for any m <= n-2
    std::optional<std::array<AltSequence, 2>> duplicate_witness;
    std::optional<CycleWitness> cycle_witness;

    bool verdict() const {
        return connected && unique_top_paths && unique_lower_paths && no_lower_cycles;
    }
};

UniquePathsReport unique_paths_report(const PureComplex& k);
bool certify_by_unique_paths(const PureComplex& k);

/// Every k-complete subcomplex on at most n+1 vertices lies inside a single
/// facet. Throws NotATreeError unless diagnostic is set; in diagnostic mode
/// the result is informative for non-trees.
bool check_complete_subcomplex_containment(const PureComplex& k, bool diagnostic = false);

/// First violating vertex set found, for diagnostics.
std::optional<Simplex> find_complete_subcomplex_violation(const PureComplex& k);

struct BoundsReport {
    struct Entry {
        std::string name;
        bool premise = false;
        bool conclusion = false;
        bool holds = false;  // premise implies conclusion
    };
    std::vector<Entry> entries;
    bool all_hold() const;
};

/// Evaluates the alpha_{n-1} bounds (acyclic lower, connected upper) and the
/// per-k lower bounds for connected complexes.
BoundsReport count_bounds(const PureComplex& k);

struct CertReport {
    bool by_definition = false;
    std::optional<Ordering> complete_ordering;
    bool by_complete_ordering = false;
    std::map<int, bool> by_count;  // k in 1..n
    bool by_count_any = false;
    bool by_acyclic_counts = false;
    UniquePathsReport unique_paths;
    bool by_unique_paths = false;
    bool agree = false;

    // Witnesses, populated whenever some certifier is negative.
    std::optional<CycleWitness> cycle_witness;
    std::optional<std::array<AltSequence, 2>> duplicate_path_witness;
    std::optional<std::vector<std::vector<Simplex>>> disconnection;
};

/// Runs all five certifiers and cross-checks their agreement.
CertReport certify_tree(const PureComplex& k);

}  // namespace simptree
