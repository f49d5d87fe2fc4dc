#include "simptree/paths.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "simptree/errors.hpp"

namespace simptree {

namespace {

void check_items_in_complex(const AltSequence& seq, const PureComplex& k) {
    for (const auto& item : seq.items) {
        if (!k.contains(item)) {
            throw ForeignSimplexError("sequence item is not a simplex of the complex");
        }
    }
}

bool shape_ok(const AltSequence& seq, const PureComplex& k) {
    if (seq.items.size() < 3 || seq.items.size() % 2 == 0) return false;
    if (seq.m < 0 || seq.m > k.dim() - 1) return false;
    for (std::size_t i = 0; i < seq.items.size(); ++i) {
        const int want = (i % 2 == 0) ? seq.m : k.dim();
        if (seq.items[i].dim() != want) return false;
    }
    return true;
}

/// The common (n-1)-face of two distinct facets, if any. Two distinct facets
/// share at most n vertices, so the face is unique when it exists.
std::optional<Simplex> shared_top_face(const Simplex& f1, const Simplex& f2, int n) {
    auto common = intersect(f1, f2);
    if (static_cast<int>(common.size()) == n) return Simplex(std::move(common));
    return std::nullopt;
}

struct FacetUnionFind {
    std::vector<int> parent;
    explicit FacetUnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

bool validate_walk(const AltSequence& seq, const PureComplex& k) {
    check_items_in_complex(seq, k);
    if (!shape_ok(seq, k)) return false;
    for (int i = 1; i <= seq.length(); ++i) {
        const auto& lo = seq.m_simplex(i);
        const auto& hi = seq.m_simplex(i + 1);
        const auto& facet = seq.facet(i);
        if (lo == hi) return false;
        if (!lo.is_face_of(facet) || !hi.is_face_of(facet)) return false;
    }
    return true;
}

bool validate_path(const AltSequence& seq, const PureComplex& k) {
    if (!validate_walk(seq, k)) return false;
    std::set<Simplex> seen(seq.items.begin(), seq.items.end());
    return seen.size() == seq.items.size();
}

std::optional<ReducedWitness> validate_reduced_path(const AltSequence& seq,
                                                    const PureComplex& k) {
    if (!validate_path(seq, k)) return std::nullopt;
    const int r = seq.length();
    const auto& start = seq.m_simplex(1);
    const auto& end = seq.m_simplex(r + 1);
    for (int i = 1; i <= r; ++i) {
        if (i != 1 && start.is_face_of(seq.facet(i))) return std::nullopt;
        if (i != r && end.is_face_of(seq.facet(i))) return std::nullopt;
    }
    // The connector for position z is forced: it must be an (n-1)-simplex
    // inside the intersection of two distinct facets, which holds at most
    // n vertices.
    std::vector<Simplex> connectors;
    for (int z = 2; z <= r; ++z) {
        auto conn = shared_top_face(seq.facet(z - 1), seq.facet(z), k.dim());
        if (!conn || !seq.m_simplex(z).is_face_of(*conn)) return std::nullopt;
        connectors.push_back(std::move(*conn));
    }
    std::set<Simplex> distinct(connectors.begin(), connectors.end());
    if (distinct.size() != connectors.size()) return std::nullopt;
    return ReducedWitness{seq, std::move(connectors)};
}

AltSequence reduce_walk(const AltSequence& seq, const PureComplex& k) {
    if (seq.m != k.dim() - 1) {
        throw DimensionMismatchError("reduce_walk expects an (n-1,n)-walk sequence");
    }
    if (!validate_walk(seq, k)) {
        throw ForeignSimplexError("reduce_walk expects a valid walk sequence");
    }
    if (seq.items.front() == seq.items.back()) {
        throw SameEndpointsError("walk endpoints must be distinct");
    }

    std::vector<Simplex> items = seq.items;
    auto sigma_at = [&](int i) -> const Simplex& { return items[2 * (i - 1)]; };
    auto eta_at = [&](int i) -> const Simplex& { return items[2 * i - 1]; };
    auto r_of = [&]() { return (static_cast<int>(items.size()) - 1) / 2; };

    bool changed = true;
    while (changed) {
        changed = false;
        const int r = r_of();

        // Repeated m-simplex: splice out the loop between the occurrences.
        for (int p = 1; p <= r + 1 && !changed; ++p) {
            for (int q = p + 1; q <= r + 1 && !changed; ++q) {
                if (sigma_at(p) == sigma_at(q)) {
                    std::vector<Simplex> next(items.begin(), items.begin() + 2 * (p - 1) + 1);
                    next.insert(next.end(), items.begin() + 2 * q - 2 + 1, items.end());
                    items = std::move(next);
                    changed = true;
                }
            }
        }
        if (changed) continue;

        // Repeated facet: keep a single occurrence.
        for (int x = 1; x <= r && !changed; ++x) {
            for (int y = x + 1; y <= r && !changed; ++y) {
                if (eta_at(x) == eta_at(y)) {
                    std::vector<Simplex> next(items.begin(), items.begin() + 2 * x);
                    next.insert(next.end(), items.begin() + 2 * y, items.end());
                    items = std::move(next);
                    changed = true;
                }
            }
        }
        if (changed) continue;

        // Start endpoint inside a later facet: keep the suffix from the
        // largest such facet.
        for (int s = r; s >= 2 && !changed; --s) {
            if (items.front().is_face_of(eta_at(s))) {
                std::vector<Simplex> next{items.front()};
                next.insert(next.end(), items.begin() + 2 * s - 1, items.end());
                items = std::move(next);
                changed = true;
            }
        }
        if (changed) continue;

        // End endpoint inside an earlier facet: keep the prefix up to the
        // smallest such facet.
        for (int s = 1; s <= r - 1 && !changed; ++s) {
            if (items.back().is_face_of(eta_at(s))) {
                std::vector<Simplex> next(items.begin(), items.begin() + 2 * s);
                next.push_back(items.back());
                items = std::move(next);
                changed = true;
            }
        }
    }

    return AltSequence{seq.m, std::move(items)};
}

namespace {

void check_endpoint_pair(const PureComplex& k, const Simplex& a, const Simplex& b) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatchError("endpoints must share one dimension");
    }
    if (a.dim() < 0 || a.dim() > k.dim() - 1) {
        throw DimensionMismatchError("endpoints must have dimension between 0 and n-1");
    }
    if (!k.contains(a) || !k.contains(b)) {
        throw ForeignSimplexError("endpoint is not a simplex of the complex");
    }
    if (a == b) {
        throw SameEndpointsError("endpoints must be distinct");
    }
}

}  // namespace

std::optional<AltSequence> find_path(const PureComplex& k, const Simplex& a,
                                     const Simplex& b) {
    check_endpoint_pair(k, a, b);
    const int m = a.dim();

    std::map<Simplex, std::pair<Simplex, Simplex>> parent;  // sigma -> (prev sigma, via facet)
    std::set<Simplex> seen{a};
    std::deque<Simplex> queue{a};
    while (!queue.empty()) {
        Simplex cur = queue.front();
        queue.pop_front();
        if (cur == b) break;
        for (int fi : k.facets_containing(cur)) {
            const Simplex& facet = k.facets()[fi];
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

namespace {

/// Backtracking assignment of pairwise distinct m-faces tau_i within the
/// given (n-1)-simplices, lexicographically least. The endpoints a and b are
/// never candidates (they cannot lie inside the trimmed window).
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

}  // namespace

std::optional<AltSequence> find_reduced_path(const PureComplex& k, const Simplex& a,
                                             const Simplex& b) {
    check_endpoint_pair(k, a, b);
    const int n = k.dim();
    const int m = a.dim();

    if (m == n - 1) {
        auto walk = find_path(k, a, b);
        if (!walk) return std::nullopt;
        return reduce_walk(*walk, k);
    }

    // Lifts of the endpoints to (n-1)-simplices, in lexicographic order.
    std::vector<Simplex> lifts_a, lifts_b;
    for (const auto& s : k.simplices(n - 1)) {
        if (a.is_face_of(s)) lifts_a.push_back(s);
        if (b.is_face_of(s)) lifts_b.push_back(s);
    }

    for (const auto& la : lifts_a) {
        for (const auto& lb : lifts_b) {
            if (la == lb) continue;
            auto walk = find_path(k, la, lb);
            if (!walk) continue;
            AltSequence reduced = reduce_walk(*walk, k);
            const int r = reduced.length();

            int p = 1;
            for (int q = 1; q <= r; ++q) {
                if (a.is_face_of(reduced.facet(q))) p = q;
            }
            int x = -1;
            for (int y = p; y <= r; ++y) {
                if (b.is_face_of(reduced.facet(y))) {
                    x = y;
                    break;
                }
            }
            if (x < 0 || !a.is_face_of(reduced.facet(p))) continue;

            std::vector<Simplex> hosts;  // sigma_{p+1} .. sigma_x
            for (int z = p + 1; z <= x; ++z) hosts.push_back(reduced.m_simplex(z));
            std::set<Simplex> used;
            std::vector<Simplex> taus;
            if (!assign_distinct_faces(hosts, m, 0, used, taus)) continue;

            std::vector<Simplex> items{a};
            for (int z = p; z <= x; ++z) {
                items.push_back(reduced.facet(z));
                items.push_back(z < x ? taus[z - p] : b);
            }
            AltSequence out{m, std::move(items)};
            if (validate_reduced_path(out, k)) return out;
        }
    }
    return std::nullopt;
}

std::vector<std::vector<Simplex>> components(const PureComplex& k) {
    const auto& facets = k.facets();
    FacetUnionFind uf(facets.size());
    const auto& tops = k.simplices(k.dim() - 1);
    for (const auto& s : tops) {
        auto holders = k.facets_containing(s);
        for (std::size_t i = 1; i < holders.size(); ++i) {
            uf.unite(holders[0], holders[i]);
        }
    }
    std::map<int, std::vector<Simplex>> classes;
    for (std::size_t i = 0; i < facets.size(); ++i) {
        classes[uf.find(static_cast<int>(i))].push_back(facets[i]);
    }
    std::vector<std::vector<Simplex>> out;
    for (auto& [root, cls] : classes) {
        std::sort(cls.begin(), cls.end());
        out.push_back(std::move(cls));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_connected(const PureComplex& k) { return components(k).size() == 1; }

std::optional<Ordering> find_ordering(const PureComplex& k) {
    const int n = k.dim();
    const auto& facets = k.facets();
    const std::size_t t = facets.size();

    std::vector<bool> used(t, false);
    std::vector<Simplex> order{facets[0]};
    used[0] = true;
    std::set<Simplex> closure_faces;
    for (const auto& f : facets[0].all_faces()) closure_faces.insert(f);

    bool complete = true;
    while (order.size() < t) {
        int chosen = -1;
        for (std::size_t i = 0; i < t; ++i) {
            if (used[i]) continue;
            bool shares_top = false;
            for (const auto& f : facets[i].faces_of_dim(n - 1)) {
                if (closure_faces.count(f)) {
                    shares_top = true;
                    break;
                }
            }
            if (shares_top) {
                chosen = static_cast<int>(i);
                break;
            }
        }
        if (chosen < 0) return std::nullopt;  // disconnected

        // Attachment of the new facet inside the grown closure.
        std::vector<Simplex> shared;
        for (const auto& f : facets[chosen].proper_faces()) {
            if (closure_faces.count(f)) shared.push_back(f);
        }
        std::vector<Simplex> shared_tops;
        for (const auto& f : shared) {
            if (f.dim() == n - 1) shared_tops.push_back(f);
        }
        bool step_complete = shared_tops.size() == 1;
        if (step_complete) {
            for (const auto& f : shared) {
                if (!f.is_face_of(shared_tops[0])) {
                    step_complete = false;
                    break;
                }
            }
        }
        complete = complete && step_complete;

        used[chosen] = true;
        order.push_back(facets[chosen]);
        for (const auto& f : facets[chosen].all_faces()) closure_faces.insert(f);
    }
    return Ordering{std::move(order), complete};
}

PathRelation compare_paths(const AltSequence& x, const AltSequence& y,
                           const PureComplex& k) {
    if (!validate_reduced_path(x, k) || !validate_reduced_path(y, k)) {
        throw EndpointMismatchError("compare_paths expects two reduced path sequences");
    }
    if (x.m != y.m || x.items.front() != y.items.front() ||
        x.items.back() != y.items.back()) {
        throw EndpointMismatchError("path sequences must share both endpoints");
    }
    std::set<Simplex> fx, fy;
    for (int i = 1; i <= x.length(); ++i) fx.insert(x.facet(i));
    for (int i = 1; i <= y.length(); ++i) fy.insert(y.facet(i));
    const bool x_in_y = std::includes(fy.begin(), fy.end(), fx.begin(), fx.end());
    const bool y_in_x = std::includes(fx.begin(), fx.end(), fy.begin(), fy.end());
    if (x_in_y && y_in_x) return PathRelation::Equal;
    if (x_in_y) return PathRelation::XDependsOnY;
    if (y_in_x) return PathRelation::YDependsOnX;
    return PathRelation::Independent;
}

}  // namespace simptree
