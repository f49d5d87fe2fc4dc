#include "simptree/cycles.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <set>

#include "simptree/errors.hpp"

namespace simptree {

namespace {

std::optional<Simplex> shared_top_face(const Simplex& f1, const Simplex& f2, int n) {
    auto common = intersect(f1, f2);
    if (static_cast<int>(common.size()) == n) return Simplex(std::move(common));
    return std::nullopt;
}

}  // namespace

bool validate_circuit(const AltSequence& seq, const PureComplex& k) {
    if (!validate_walk(seq, k)) return false;
    const int r = seq.length();
    if (seq.m_simplex(1) != seq.m_simplex(r + 1)) return false;
    std::set<Simplex> sigmas, etas;
    for (int i = 1; i <= r; ++i) {
        sigmas.insert(seq.m_simplex(i));
        etas.insert(seq.facet(i));
    }
    return static_cast<int>(sigmas.size()) == r && static_cast<int>(etas.size()) == r;
}

std::optional<CycleWitness> validate_cycle(const AltSequence& seq, const PureComplex& k) {
    if (!validate_circuit(seq, k)) return std::nullopt;
    const int r = seq.length();
    if (r < 3) return std::nullopt;
    const auto& base = seq.m_simplex(1);
    for (int t = 2; t <= r - 1; ++t) {
        if (base.is_face_of(seq.facet(t))) return std::nullopt;
    }
    std::vector<Simplex> connectors;
    for (int z = 2; z <= r; ++z) {
        auto conn = shared_top_face(seq.facet(z - 1), seq.facet(z), k.dim());
        if (!conn || !seq.m_simplex(z).is_face_of(*conn)) return std::nullopt;
        connectors.push_back(std::move(*conn));
    }
    std::set<Simplex> distinct(connectors.begin(), connectors.end());
    if (distinct.size() != connectors.size()) return std::nullopt;
    return CycleWitness{seq, std::move(connectors)};
}

namespace {

struct CircuitSearch {
    const PureComplex& k;
    int m;
    std::vector<Simplex> items;
    std::set<Simplex> used_sigmas;
    std::set<Simplex> used_facets;
    std::optional<AltSequence> found;

    bool extend(const Simplex& cur) {
        for (int fi : k.facets_containing(cur)) {
            const Simplex& facet = k.facets()[fi];
            if (used_facets.count(facet)) continue;
            used_facets.insert(facet);
            items.push_back(facet);

            const Simplex& base = items.front();
            if (used_facets.size() >= 2 && base.is_face_of(facet) && base != cur) {
                items.push_back(base);
                found = AltSequence{m, items};
                return true;
            }
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

}  // namespace

std::optional<AltSequence> find_circuit(const PureComplex& k, int m) {
    if (m < 0 || m > k.dim() - 1) {
        throw DimensionOutOfRangeError("circuits require 0 <= m <= n-1");
    }
    for (const auto& start : k.simplices(m)) {
        CircuitSearch search{k, m, {start}, {start}, {}, std::nullopt};
        if (search.extend(start)) return search.found;
    }
    return std::nullopt;
}

namespace {

/// Breadth-first (n-1,n)-path restricted to an allowed facet subset.
std::optional<AltSequence> restricted_top_path(const PureComplex& k, const Simplex& a,
                                               const Simplex& b,
                                               const std::set<Simplex>& allowed) {
    const int m = k.dim() - 1;
    std::map<Simplex, std::pair<Simplex, Simplex>> parent;
    std::set<Simplex> seen{a};
    std::deque<Simplex> queue{a};
    while (!queue.empty()) {
        Simplex cur = queue.front();
        queue.pop_front();
        if (cur == b) break;
        for (int fi : k.facets_containing(cur)) {
            const Simplex& facet = k.facets()[fi];
            if (!allowed.count(facet)) continue;
            for (const auto& next : facet.faces_of_dim(m)) {
                if (next == cur || seen.count(next)) continue;
                seen.insert(next);
                parent.emplace(next, std::make_pair(cur, facet));
                queue.push_back(next);
            }
        }
    }
    if (!seen.count(b)) return std::nullopt;
    std::vector<Simplex> rev{b};
    Simplex cur = b;
    while (cur != a) {
        const auto& [prev, via] = parent.at(cur);
        rev.push_back(via);
        rev.push_back(prev);
        cur = prev;
    }
    std::reverse(rev.begin(), rev.end());
    return AltSequence{m, std::move(rev)};
}

bool assign_distinct_faces(const std::vector<Simplex>& hosts, int m, std::size_t pos,
                           std::set<Simplex>& used, std::vector<Simplex>& out) {
    if (pos == hosts.size()) return true;
    for (auto& cand : hosts[pos].faces_of_dim(m)) {
        if (used.count(cand)) continue;
        used.insert(cand);
        out.push_back(cand);
        if (assign_distinct_faces(hosts, m, pos + 1, used, out)) return true;
        out.pop_back();
        used.erase(cand);
    }
    return false;
}

/// Assembles an (m,n)-cycle from a facet sequence with consecutive common
/// (n-1)-faces and a base simplex present in both ends but absent from some
/// interior facet.
std::optional<CycleWitness> build_cycle(const PureComplex& k,
                                        const std::vector<Simplex>& etas,
                                        const std::vector<Simplex>& shared,
                                        const Simplex& base, int m) {
    const int r = static_cast<int>(etas.size());
    int p = -1;
    for (int q = 2; q <= r - 1; ++q) {
        if (!base.is_face_of(etas[q - 1])) {
            p = q;
            break;
        }
    }
    if (p < 0) return std::nullopt;
    int kk = -1;
    for (int l = p + 1; l <= r; ++l) {
        if (base.is_face_of(etas[l - 1])) {
            kk = l;
            break;
        }
    }
    if (kk < 0) return std::nullopt;

    const Simplex& sigma_p = shared[p - 2];   // shared face of eta_{p-1}, eta_p
    const Simplex& sigma_k = shared[kk - 2];  // shared face of eta_{k-1}, eta_k
    assert(sigma_p != sigma_k);

    std::set<Simplex> window(etas.begin() + (p - 1), etas.begin() + (kk - 1));
    auto path = restricted_top_path(k, sigma_p, sigma_k, window);
    if (!path) return std::nullopt;

    std::vector<Simplex> hosts;
    for (int i = 1; i <= path->length() + 1; ++i) hosts.push_back(path->m_simplex(i));
    std::set<Simplex> used;
    std::vector<Simplex> taus;
    if (!assign_distinct_faces(hosts, m, 0, used, taus)) return std::nullopt;

    std::vector<Simplex> items{base, etas[p - 2]};
    for (int i = 0; i <= path->length(); ++i) {
        items.push_back(taus[i]);
        if (i < path->length()) items.push_back(path->facet(i + 1));
    }
    items.push_back(etas[kk - 1]);
    items.push_back(base);
    return validate_cycle(AltSequence{m, std::move(items)}, k);
}

struct CycleSearch {
    const PureComplex& k;
    int m;
    const std::vector<std::vector<std::pair<int, Simplex>>>& adjacency;
    std::vector<int> seq;
    std::vector<Simplex> shared;
    std::vector<bool> used;
    std::optional<CycleWitness> found;

    bool try_close() {
        if (seq.size() < 3) return false;
        std::vector<Simplex> etas;
        for (int i : seq) etas.push_back(k.facets()[i]);
        auto common = intersect(etas.front(), etas.back());
        if (static_cast<int>(common.size()) < m + 1) return false;
        Simplex span(common);
        for (const auto& base : span.faces_of_dim(m)) {
            bool misses_interior = false;
            for (std::size_t t = 1; t + 1 < etas.size(); ++t) {
                if (!base.is_face_of(etas[t])) {
                    misses_interior = true;
                    break;
                }
            }
            if (!misses_interior) continue;
            if (auto witness = build_cycle(k, etas, shared, base, m)) {
                found = std::move(witness);
                return true;
            }
        }
        return false;
    }

    bool extend(int last) {
        if (try_close()) return true;
        for (const auto& [next, face] : adjacency[last]) {
            if (used[next]) continue;
            used[next] = true;
            seq.push_back(next);
            shared.push_back(face);
            if (extend(next)) return true;
            shared.pop_back();
            seq.pop_back();
            used[next] = false;
        }
        return false;
    }
};

}  // namespace

std::optional<CycleWitness> find_cycle(const PureComplex& k, int m) {
    if (m < 0 || m > k.dim() - 1) {
        throw DimensionOutOfRangeError("cycles require 0 <= m <= n-1");
    }
    const auto& facets = k.facets();
    const int t = static_cast<int>(facets.size());
    if (t < 3) return std::nullopt;

    std::vector<std::vector<std::pair<int, Simplex>>> adjacency(t);
    for (int i = 0; i < t; ++i) {
        for (int j = 0; j < t; ++j) {
            if (i == j) continue;
            if (auto face = shared_top_face(facets[i], facets[j], k.dim())) {
                adjacency[i].emplace_back(j, std::move(*face));
            }
        }
    }

    for (int start = 0; start < t; ++start) {
        CycleSearch search{k, m, adjacency, {start}, {}, std::vector<bool>(t, false), std::nullopt};
        search.used[start] = true;
        if (search.extend(start)) return search.found;
    }
    return std::nullopt;
}

bool is_acyclic(const PureComplex& k) {
    for (int m = 0; m <= k.dim() - 1; ++m) {
        if (find_cycle(k, m)) return false;
    }
    return true;
}

std::optional<std::pair<int, Simplex>> joint_cyclicity_premise(const PureComplex& k) {
    if (!is_connected(k)) {
        throw NotConnectedError("joint cyclicity premise requires a connected complex");
    }
    const auto joint_tops = k.joint_simplices(k.dim() - 1);
    for (int m = 0; m <= k.dim() - 2; ++m) {
        for (const auto& s : k.joint_simplices(m)) {
            bool inside_joint_top = false;
            for (const auto& top : joint_tops) {
                if (s.is_face_of(top)) {
                    inside_joint_top = true;
                    break;
                }
            }
            if (!inside_joint_top) return std::make_pair(m, s);
        }
    }
    return std::nullopt;
}

}  // namespace simptree
