#include "simptree/complex.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "simptree/errors.hpp"

namespace simptree {

PureComplex PureComplex::from_facets(std::vector<Simplex> facets) {
    if (facets.empty()) {
        throw EmptyInputError("facet set must be nonempty");
    }
    const int n = facets.front().dim();
    if (n < 1) {
        throw DimensionOutOfRangeError("complex dimension must be at least 1");
    }
    for (const auto& f : facets) {
        if (f.dim() != n) {
            throw MixedDimensionError("facets of dimension " + std::to_string(f.dim()) +
                                      " and " + std::to_string(n) + " in one complex");
        }
    }
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());

    PureComplex k;
    k.n_ = n;
    k.facets_ = std::move(facets);
    std::vector<std::set<Simplex>> by_dim(n + 1);
    for (const auto& f : k.facets_) {
        for (int d = 0; d <= n; ++d) {
            for (auto& face : f.faces_of_dim(d)) {
                by_dim[d].insert(std::move(face));
            }
        }
    }
    k.by_dim_.resize(n + 1);
    for (int d = 0; d <= n; ++d) {
        k.by_dim_[d].assign(by_dim[d].begin(), by_dim[d].end());
    }
    return k;
}

const std::vector<Simplex>& PureComplex::simplices(int k) const {
    if (k < 0 || k > n_) {
        throw DimensionOutOfRangeError("no simplices of dimension " + std::to_string(k) +
                                       " in a complex of dimension " + std::to_string(n_));
    }
    return by_dim_[k];
}

std::size_t PureComplex::alpha(int k) const { return simplices(k).size(); }

bool PureComplex::contains(const Simplex& s) const {
    if (s.dim() < 0 || s.dim() > n_) return false;
    const auto& level = by_dim_[s.dim()];
    return std::binary_search(level.begin(), level.end(), s);
}

bool PureComplex::is_facet(const Simplex& s) const {
    return s.dim() == n_ && std::binary_search(facets_.begin(), facets_.end(), s);
}

std::vector<int> PureComplex::facets_containing(const Simplex& s) const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(facets_.size()); ++i) {
        if (s.is_face_of(facets_[i])) out.push_back(i);
    }
    return out;
}

std::vector<Simplex> PureComplex::attachment(const Simplex& facet) const {
    if (!is_facet(facet)) {
        throw NotAFacetError("attachment is defined for facets only");
    }
    std::vector<Simplex> out;
    for (const auto& face : facet.proper_faces()) {
        for (const auto& other : facets_) {
            if (other != facet && face.is_face_of(other)) {
                out.push_back(face);
                break;
            }
        }
    }
    return out;  // proper_faces() is sorted, hence so is out
}

bool PureComplex::is_m_complete(int m) const {
    if (m != n_) return false;
    const auto& verts = by_dim_[0];
    const int p = static_cast<int>(verts.size());
    if (m + 1 > p) return true;
    std::vector<int> idx(m + 1);
    for (int i = 0; i <= m; ++i) idx[i] = i;
    while (true) {
        std::vector<VertexId> v(m + 1);
        for (int i = 0; i <= m; ++i) v[i] = verts[idx[i]].vertices()[0];
        if (!contains(Simplex(std::move(v)))) return false;
        int i = m;
        while (i >= 0 && idx[i] == p - (m + 1) + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j <= m; ++j) idx[j] = idx[j - 1] + 1;
    }
    return true;
}

std::vector<Simplex> PureComplex::k_skeleton(int k) const {
    if (k < 0 || k > n_) {
        throw DimensionOutOfRangeError("skeleton dimension " + std::to_string(k) +
                                       " out of range for dimension " + std::to_string(n_));
    }
    std::vector<Simplex> out;
    for (int d = 0; d <= k; ++d) {
        out.insert(out.end(), by_dim_[d].begin(), by_dim_[d].end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Simplex> PureComplex::joint_simplices(int m) const {
    if (m < 0 || m > n_ - 1) {
        throw DimensionOutOfRangeError("joint simplices are defined for 0 <= m <= n-1");
    }
    std::vector<Simplex> out;
    for (const auto& s : by_dim_[m]) {
        if (facets_containing(s).size() >= 2) out.push_back(s);
    }
    return out;
}

Graph PureComplex::one_skeleton_graph() const {
    std::vector<std::pair<VertexId, VertexId>> edges;
    if (n_ >= 1) {
        for (const auto& e : by_dim_[1]) {
            edges.emplace_back(e.vertices()[0], e.vertices()[1]);
        }
    }
    std::vector<VertexId> verts;
    for (const auto& v : by_dim_[0]) verts.push_back(v.vertices()[0]);
    return Graph::from_edges(std::move(edges), std::move(verts));
}

namespace {

void extend_clique(const Graph& g, std::vector<VertexId>& clique,
                   const std::vector<VertexId>& candidates, std::vector<Simplex>& out) {
    out.emplace_back(clique);
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        const VertexId v = candidates[i];
        std::vector<VertexId> next;
        for (std::size_t j = i + 1; j < candidates.size(); ++j) {
            if (g.adjacent(v, candidates[j])) next.push_back(candidates[j]);
        }
        clique.push_back(v);
        extend_clique(g, clique, next, out);
        clique.pop_back();
    }
}

}  // namespace

std::vector<Simplex> clique_complex(const Graph& g) {
    std::vector<Simplex> out;
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        const VertexId v = g.vertices[i];
        std::vector<VertexId> candidates;
        for (std::size_t j = i + 1; j < g.vertices.size(); ++j) {
            if (g.adjacent(v, g.vertices[j])) candidates.push_back(g.vertices[j]);
        }
        std::vector<VertexId> clique{v};
        extend_clique(g, clique, candidates, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace simptree
