#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "simptree/complex.hpp"
#include "simptree/cycles.hpp"
#include "simptree/paths.hpp"

namespace simptree::testing {

inline PureComplex make(std::vector<Simplex> facets) {
    return PureComplex::from_facets(std::move(facets));
}

inline AltSequence seq(int m, std::vector<Simplex> items) {
    return AltSequence{m, std::move(items)};
}

inline std::set<Simplex> as_set(const std::vector<Simplex>& v) {
    return std::set<Simplex>(v.begin(), v.end());
}

// Brute-force oracles, kept independent of the library data structures they
// double-check: everything below recomputes from raw vertex lists.

/// Every nonempty subset of every facet.
inline std::set<Simplex> closure_oracle(const std::vector<Simplex>& facets) {
    std::set<Simplex> out;
    for (const auto& f : facets) {
        const auto& vs = f.vertices();
        const unsigned full = 1u << vs.size();
        for (unsigned mask = 1; mask < full; ++mask) {
            std::vector<VertexId> sub;
            for (std::size_t i = 0; i < vs.size(); ++i) {
                if (mask & (1u << i)) sub.push_back(vs[i]);
            }
            out.insert(Simplex(std::move(sub)));
        }
    }
    return out;
}

/// Faces of `facet` that also lie in a different facet.
inline std::set<Simplex> attachment_oracle(const Simplex& facet,
                                           const std::vector<Simplex>& facets) {
    std::set<Simplex> out;
    for (const auto& face : facet.proper_faces()) {
        for (const auto& other : facets) {
            if (!(other == facet) && face.is_face_of(other)) {
                out.insert(face);
                break;
            }
        }
    }
    return out;
}

/// m-simplices of the closure lying in at least two facets.
inline std::set<Simplex> joint_oracle(const std::vector<Simplex>& facets, int m) {
    std::set<Simplex> out;
    for (const auto& s : closure_oracle(facets)) {
        if (s.dim() != m) continue;
        int count = 0;
        for (const auto& f : facets) {
            if (s.is_face_of(f)) ++count;
        }
        if (count >= 2) out.insert(s);
    }
    return out;
}

/// Exhaustive search for an (m,n)-simplicial cycle sequence: enumerate every
/// closed walk with distinct interior items and validate each candidate
/// against the definition. Cross-checks the characterization-based search.
inline bool cycle_oracle(const PureComplex& k, int m) {
    struct Search {
        const PureComplex& k;
        int m;
        std::vector<Simplex> items;
        std::set<Simplex> used_sigmas;
        std::set<Simplex> used_facets;

        bool extend(const Simplex& cur) {
            for (int fi : k.facets_containing(cur)) {
                const Simplex& facet = k.facets()[fi];
                if (used_facets.count(facet)) continue;
                const Simplex& base = items.front();
                if (used_facets.size() >= 2 && base != cur && base.is_face_of(facet)) {
                    auto candidate = items;
                    candidate.push_back(facet);
                    candidate.push_back(base);
                    if (validate_cycle(AltSequence{m, std::move(candidate)}, k)) return true;
                }
                used_facets.insert(facet);
                items.push_back(facet);
                for (const auto& next : facet.faces_of_dim(m)) {
                    if (used_sigmas.count(next)) continue;
                    used_sigmas.insert(next);
                    items.push_back(next);
                    if (extend(next)) return true;
                    items.pop_back();
                    used_sigmas.erase(next);
                }
                items.pop_back();
                used_facets.erase(facet);
            }
            return false;
        }
    };
    for (const auto& base : k.simplices(m)) {
        Search s{k, m, {base}, {base}, {}};
        if (s.extend(base)) return true;
    }
    return false;
}

/// Every (m,n)-path sequence from a to b by unpruned DFS over distinct
/// items, filtered through the definitional reduced-path validator.
/// Cross-checks the pruned enumerator.
inline std::vector<AltSequence> reduced_paths_oracle(const PureComplex& k,
                                                     const Simplex& a, const Simplex& b) {
    std::vector<AltSequence> found;
    struct Search {
        const PureComplex& k;
        const Simplex& b;
        int m;
        std::vector<AltSequence>& found;
        std::vector<Simplex> items;
        std::set<Simplex> used;

        void extend(const Simplex& cur) {
            if (cur == b) {
                if (validate_reduced_path(AltSequence{m, items}, k)) {
                    found.push_back(AltSequence{m, items});
                }
                return;
            }
            for (int fi : k.facets_containing(cur)) {
                const Simplex& facet = k.facets()[fi];
                if (used.count(facet)) continue;
                used.insert(facet);
                items.push_back(facet);
                for (const auto& next : facet.faces_of_dim(m)) {
                    if (used.count(next)) continue;
                    used.insert(next);
                    items.push_back(next);
                    extend(next);
                    items.pop_back();
                    used.erase(next);
                }
                items.pop_back();
                used.erase(facet);
            }
        }
    };
    Search s{k, b, a.dim(), found, {a}, {a}};
    s.extend(a);
    return found;
}

/// Minimum of sort(relabel(facets)) over every permutation of the vertices,
/// by explicit enumeration. Usable up to ~8 vertices.
inline std::vector<Simplex> canonical_oracle(const std::vector<Simplex>& facets) {
    std::set<VertexId> vert_set;
    for (const auto& f : facets) vert_set.insert(f.vertices().begin(), f.vertices().end());
    std::vector<VertexId> verts(vert_set.begin(), vert_set.end());
    std::vector<int> labels(verts.size());
    for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = static_cast<int>(i) + 1;

    std::vector<std::vector<VertexId>> best;
    do {
        std::vector<std::vector<VertexId>> relabeled;
        for (const auto& f : facets) {
            std::vector<VertexId> row;
            for (VertexId v : f.vertices()) {
                const auto pos = std::lower_bound(verts.begin(), verts.end(), v) - verts.begin();
                row.push_back(labels[pos]);
            }
            std::sort(row.begin(), row.end());
            relabeled.push_back(std::move(row));
        }
        std::sort(relabeled.begin(), relabeled.end());
        if (best.empty() || relabeled < best) best = std::move(relabeled);
    } while (std::next_permutation(labels.begin(), labels.end()));

    std::vector<Simplex> out;
    for (const auto& row : best) out.emplace_back(row);
    return out;
}

}  // namespace simptree::testing
