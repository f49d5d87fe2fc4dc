#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "simptree/paths.hpp"

namespace simptree {

/// A validated (m,n)-simplicial cycle sequence together with its forced
/// connectors sigma'_2..sigma'_r.
struct CycleWitness {
    AltSequence seq;
    std::vector<Simplex> connectors;
};

/// Closed walk with pairwise distinct facets and pairwise distinct interior
/// m-simplices.
bool validate_circuit(const AltSequence& seq, const PureComplex& k);

/// Circuit of length >= 3 whose base point avoids the interior facets and
/// whose interior m-simplices lie in pairwise distinct common (n-1)-faces.
std::optional<CycleWitness> validate_cycle(const AltSequence& seq, const PureComplex& k);

/// First (m,n)-circuit sequence in lexicographic search order, if any.
std::optional<AltSequence> find_circuit(const PureComplex& k, int m);

/// Searches facet sequences with consecutive common (n-1)-faces for one
/// admitting a base m-simplex shared by the two ends but absent from some
/// interior facet, then assembles the cycle from it. Exhaustive: nullopt
/// means no (m,n)-simplicial cycle sequence exists.
std::optional<CycleWitness> find_cycle(const PureComplex& k, int m);

/// No (m,n)-simplicial cycle sequence for any 0 <= m <= n-1.
bool is_acyclic(const PureComplex& k);

/// Some joint m-simplex (m <= n-2) not contained in any joint (n-1)-simplex,
/// which certifies cyclicity of a connected complex. Throws NotConnectedError.
std::optional<std::pair<int, Simplex>> joint_cyclicity_premise(const PureComplex& k);

}  // namespace simptree
