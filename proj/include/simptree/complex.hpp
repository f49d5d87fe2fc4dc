#pragma once

#include <cstddef>
#include <vector>

#include "simptree/simplex.hpp"

namespace simptree {

/// A pure n-simplicial complex, represented by its facet list plus the fully
/// materialized face index K^0..K^n. Immutable after construction; all
/// member functions are const and safe to call concurrently.
class PureComplex {
public:
    /// Builds the closure of the given facet set. Facets are deduplicated.
    /// Throws EmptyInputError / MixedDimensionError.
    static PureComplex from_facets(std::vector<Simplex> facets);

    int dim() const noexcept { return n_; }
    const std::vector<Simplex>& facets() const noexcept { return facets_; }
    std::size_t facet_count() const noexcept { return facets_.size(); }

    /// K^k, sorted lexicographically. Throws DimensionOutOfRangeError.
    const std::vector<Simplex>& simplices(int k) const;
    /// alpha_k = |K^k|. Throws DimensionOutOfRangeError.
    std::size_t alpha(int k) const;
    /// Number of vertices (= alpha_0).
    std::size_t vertex_count() const { return by_dim_[0].size(); }

    bool contains(const Simplex& s) const;
    bool is_facet(const Simplex& s) const;
    /// Indices into facets() of the facets having s as a face, ascending.
    std::vector<int> facets_containing(const Simplex& s) const;

    /// The attachment A(f, K): proper faces of f shared with another facet.
    /// Sorted. Throws NotAFacetError.
    std::vector<Simplex> attachment(const Simplex& facet) const;

    /// True iff dim K == m and every (m+1)-subset of the vertex set is a
    /// simplex of K.
    bool is_m_complete(int m) const;

    /// All simplices of dimension <= k, sorted. Throws DimensionOutOfRangeError.
    std::vector<Simplex> k_skeleton(int k) const;

    /// All m-simplices contained in at least two facets, sorted.
    std::vector<Simplex> joint_simplices(int m) const;

    /// The 1-skeleton viewed as a graph.
    Graph one_skeleton_graph() const;

private:
    PureComplex() = default;

    int n_ = 0;
    std::vector<Simplex> facets_;                 // sorted, unique
    std::vector<std::vector<Simplex>> by_dim_;    // by_dim_[k] sorted
};

/// All cliques of G as simplices (the clique complex). Sorted.
std::vector<Simplex> clique_complex(const Graph& g);

}  // namespace simptree
