#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

namespace simptree {

using VertexId = int;

/// A simplex stored as its strictly increasing list of vertex ids.
/// Dimension is one less than the number of vertices.
class Simplex {
public:
    Simplex() = default;

    /// Sorts the input and validates it (nonempty, non-negative, no duplicates).
    explicit Simplex(std::vector<VertexId> vertices);
    Simplex(std::initializer_list<VertexId> vertices)
        : Simplex(std::vector<VertexId>(vertices)) {}

    int dim() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
    std::size_t size() const noexcept { return vertices_.size(); }
    const std::vector<VertexId>& vertices() const noexcept { return vertices_; }

    bool contains(VertexId v) const;
    bool is_face_of(const Simplex& other) const;

    /// All k-dimensional faces, in lexicographic order.
    std::vector<Simplex> faces_of_dim(int k) const;
    /// All faces including the simplex itself, in lexicographic order.
    std::vector<Simplex> all_faces() const;
    /// All faces except the simplex itself, in lexicographic order.
    std::vector<Simplex> proper_faces() const;

    auto operator<=>(const Simplex&) const = default;

private:
    std::vector<VertexId> vertices_;
};

/// Vertices common to both simplices (may be empty, hence not a Simplex).
std::vector<VertexId> intersect(const Simplex& a, const Simplex& b);

/// Union of the two vertex sets.
std::vector<VertexId> unite(const Simplex& a, const Simplex& b);

/// A simple undirected graph, the 1-dimensional counterpart of a complex.
struct Graph {
    std::vector<VertexId> vertices;                       // sorted, unique
    std::vector<std::pair<VertexId, VertexId>> edges;     // sorted, each (a,b) with a < b

    static Graph from_edges(std::vector<std::pair<VertexId, VertexId>> edges,
                            std::vector<VertexId> extra_vertices = {});
    bool adjacent(VertexId a, VertexId b) const;
};

}  // namespace simptree
