#include "simptree/simplex.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "simptree/errors.hpp"

namespace simptree {

Simplex::Simplex(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) {
        throw InvalidSimplexError("a simplex needs at least one vertex");
    }
    std::sort(vertices_.begin(), vertices_.end());
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (vertices_[i] < 0) {
            throw InvalidSimplexError("vertex ids must be non-negative");
        }
        if (i > 0 && vertices_[i] == vertices_[i - 1]) {
            throw InvalidSimplexError("duplicate vertex " + std::to_string(vertices_[i]));
        }
    }
}

bool Simplex::contains(VertexId v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Simplex::is_face_of(const Simplex& other) const {
    return std::includes(other.vertices_.begin(), other.vertices_.end(),
                         vertices_.begin(), vertices_.end());
}

std::vector<Simplex> Simplex::faces_of_dim(int k) const {
    std::vector<Simplex> out;
    if (k < 0 || k > dim()) return out;
    const int m = k + 1;
    const int n = static_cast<int>(vertices_.size());
    std::vector<int> idx(m);
    for (int i = 0; i < m; ++i) idx[i] = i;
    while (true) {
        std::vector<VertexId> verts(m);
        for (int i = 0; i < m; ++i) verts[i] = vertices_[idx[i]];
        out.emplace_back(std::move(verts));
        int i = m - 1;
        while (i >= 0 && idx[i] == n - m + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

std::vector<Simplex> Simplex::all_faces() const {
    std::vector<Simplex> out;
    for (int k = 0; k <= dim(); ++k) {
        auto faces = faces_of_dim(k);
        out.insert(out.end(), faces.begin(), faces.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Simplex> Simplex::proper_faces() const {
    auto out = all_faces();
    out.erase(std::remove(out.begin(), out.end(), *this), out.end());
    return out;
}

std::vector<VertexId> intersect(const Simplex& a, const Simplex& b) {
    std::vector<VertexId> out;
    std::set_intersection(a.vertices().begin(), a.vertices().end(),
                          b.vertices().begin(), b.vertices().end(),
                          std::back_inserter(out));
    return out;
}

std::vector<VertexId> unite(const Simplex& a, const Simplex& b) {
    std::vector<VertexId> out;
    std::set_union(a.vertices().begin(), a.vertices().end(),
                   b.vertices().begin(), b.vertices().end(),
                   std::back_inserter(out));
    return out;
}

Graph Graph::from_edges(std::vector<std::pair<VertexId, VertexId>> edges,
                        std::vector<VertexId> extra_vertices) {
    Graph g;
    std::set<VertexId> verts(extra_vertices.begin(), extra_vertices.end());
    std::set<std::pair<VertexId, VertexId>> es;
    for (auto [a, b] : edges) {
        if (a == b) throw InvalidSimplexError("self-loop in graph");
        if (a > b) std::swap(a, b);
        es.emplace(a, b);
        verts.insert(a);
        verts.insert(b);
    }
    g.vertices.assign(verts.begin(), verts.end());
    g.edges.assign(es.begin(), es.end());
    return g;
}

bool Graph::adjacent(VertexId a, VertexId b) const {
    if (a > b) std::swap(a, b);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(a, b));
}

}  // namespace simptree
