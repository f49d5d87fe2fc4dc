#pragma once

#include <optional>
#include <vector>

#include "simptree/complex.hpp"

namespace simptree {

/// An alternating sequence sigma_1, eta_1, sigma_2, ..., eta_r, sigma_{r+1}
/// of m-simplices (even positions) and facets (odd positions).
struct AltSequence {
    int m = 0;
    std::vector<Simplex> items;

    /// Number of facets r; the item count is 2r + 1.
    int length() const { return (static_cast<int>(items.size()) - 1) / 2; }
    /// sigma_i, 1-based, i in 1..r+1.
    const Simplex& m_simplex(int i) const { return items[2 * (i - 1)]; }
    /// eta_i, 1-based, i in 1..r.
    const Simplex& facet(int i) const { return items[2 * i - 1]; }

    bool operator==(const AltSequence&) const = default;
};

/// Certificate that a sequence is a reduced path: the forced connector
/// sigma'_2..sigma'_r, one per interior m-simplex.
struct ReducedWitness {
    AltSequence base;
    std::vector<Simplex> connectors;
};

/// A facet permutation realizing an (n-1)-ordering; `complete` marks an
/// (n-1)-complete ordering.
struct Ordering {
    std::vector<Simplex> facets;
    bool complete = false;
};

enum class PathRelation { XDependsOnY, YDependsOnX, Equal, Independent };

/// True iff consecutive m-simplices are distinct and incident to the facet
/// between them. Throws ForeignSimplexError for items outside K.
bool validate_walk(const AltSequence& seq, const PureComplex& k);

/// Walk with all items pairwise distinct.
bool validate_path(const AltSequence& seq, const PureComplex& k);

/// Returns the connector witness iff seq is a reduced (m,n)-path sequence:
/// a path whose endpoints meet only their own end facets and whose interior
/// m-simplices lie in pairwise distinct common (n-1)-faces of consecutive
/// facets.
std::optional<ReducedWitness> validate_reduced_path(const AltSequence& seq,
                                                    const PureComplex& k);

/// Shortcut-removal reduction of an (n-1,n)-walk with distinct endpoints to
/// a reduced (n-1,n)-path sequence between the same endpoints.
AltSequence reduce_walk(const AltSequence& seq, const PureComplex& k);

/// Shortest (m,n)-path sequence from a to b, breadth-first over the facet
/// incidence structure with lexicographic tie-breaking, or nullopt.
std::optional<AltSequence> find_path(const PureComplex& k, const Simplex& a,
                                     const Simplex& b);

/// Reduced (m,n)-path sequence from a to b: lifts the endpoints to
/// (n-1)-simplices, reduces the lifted walk, trims it to the last facet
/// containing a and the first later facet containing b, and projects the
/// connectors onto distinct m-simplices. nullopt when no lift pair is
/// path-connected.
std::optional<AltSequence> find_reduced_path(const PureComplex& k, const Simplex& a,
                                             const Simplex& b);

/// True iff an (n-1,n)-path sequence exists between every pair of distinct
/// (n-1)-simplices.
bool is_connected(const PureComplex& k);

/// Facet classes whose closures are the components of K. Classes and their
/// facets are sorted lexicographically.
std::vector<std::vector<Simplex>> components(const PureComplex& k);

/// Greedy (n-1)-ordering starting from the lexicographically least facet;
/// exists iff K is connected. `complete` reports whether every attachment
/// along this ordering is a complete complex on n vertices.
std::optional<Ordering> find_ordering(const PureComplex& k);

/// Classifies two reduced (m,n)-path sequences with common endpoints by
/// subcomplex containment of their closures. Equal closures are reported as
/// Equal (mutual dependence).
PathRelation compare_paths(const AltSequence& x, const AltSequence& y,
                           const PureComplex& k);

}  // namespace simptree
