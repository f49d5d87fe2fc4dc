#pragma once

#include <string>
#include <vector>

#include "simptree/complex.hpp"

namespace simptree {

/// Built-in example complexes used throughout the test suite and exposed by
/// the CLI `fixtures` command:
///   fig1 - three-component 2-complex with a (1,2)-cycle in one component
///   fig9 - connected 2-complex with unique reduced paths but a (0,2)-cycle
///   t_a  - chain of four triangles (a simplicial tree)
///   t_b  - fan of three triangles (a simplicial tree)
///   ce_a - three triangles glued pairwise at vertices: circuit-free,
///          count-matching, disconnected
///   ce_b - two edge-glued pairs: acyclic, facet count matches, edge count
///          does not
struct Fixture {
    std::string name;
    PureComplex complex;
};

const std::vector<Fixture>& builtin_fixtures();
const PureComplex& fixture(const std::string& name);

/// Writes each fixture to <dir>/<name>.json; returns the file paths.
std::vector<std::string> write_fixtures(const std::string& dir);

}  // namespace simptree
