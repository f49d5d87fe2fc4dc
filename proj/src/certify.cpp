#include "simptree/certify.hpp"

#include <algorithm>
#include <set>

#include "simptree/counting.hpp"
#include "simptree/errors.hpp"

namespace simptree {

bool certify_by_definition(const PureComplex& k) {
    return is_connected(k) && is_acyclic(k);
}

namespace {

/// Attachment of `candidate` inside the closure described by `closure_faces`
/// must be the closure of exactly one (n-1)-face.
bool attachment_is_complete(const Simplex& candidate, const std::set<Simplex>& closure_faces,
                            int n) {
    std::vector<Simplex> shared;
    for (const auto& f : candidate.proper_faces()) {
        if (closure_faces.count(f)) shared.push_back(f);
    }
    const Simplex* top = nullptr;
    for (const auto& f : shared) {
        if (f.dim() == n - 1) {
            if (top) return false;
            top = &f;
        }
    }
    if (!top) return false;
    for (const auto& f : shared) {
        if (!f.is_face_of(*top)) return false;
    }
    return true;
}

bool complete_ordering_dfs(const std::vector<Simplex>& facets, std::vector<bool>& used,
                           std::set<Simplex>& closure_faces, std::vector<Simplex>& order,
                           int n) {
    if (order.size() == facets.size()) return true;
    for (std::size_t i = 0; i < facets.size(); ++i) {
        if (used[i]) continue;
        if (!attachment_is_complete(facets[i], closure_faces, n)) continue;
        used[i] = true;
        order.push_back(facets[i]);
        std::vector<Simplex> added;
        for (const auto& f : facets[i].all_faces()) {
            if (closure_faces.insert(f).second) added.push_back(f);
        }
        if (complete_ordering_dfs(facets, used, closure_faces, order, n)) return true;
        for (const auto& f : added) closure_faces.erase(f);
        order.pop_back();
        used[i] = false;
    }
    return false;
}

}  // namespace

std::optional<Ordering> certify_by_complete_ordering(const PureComplex& k) {
    const auto& facets = k.facets();
    const int n = k.dim();
    for (std::size_t first = 0; first < facets.size(); ++first) {
        std::vector<bool> used(facets.size(), false);
        used[first] = true;
        std::vector<Simplex> order{facets[first]};
        std::set<Simplex> closure_faces;
        for (const auto& f : facets[first].all_faces()) closure_faces.insert(f);
        if (complete_ordering_dfs(facets, used, closure_faces, order, n)) {
            return Ordering{std::move(order), true};
        }
    }
    return std::nullopt;
}

bool certify_by_count(const PureComplex& k, int key) {
    if (key < 1 || key > k.dim()) {
        throw DimensionOutOfRangeError("count certificate needs 1 <= k <= n");
    }
    if (!is_connected(k)) return false;
    const long long expected =
        tree_count_formula(static_cast<long long>(k.vertex_count()), k.dim(), key);
    if (expected < 0) return false;
    return static_cast<long long>(k.alpha(key)) == expected;
}

bool certify_by_acyclic_counts(const PureComplex& k) {
    const int n = k.dim();
    const long long p = static_cast<long long>(k.vertex_count());
    if (static_cast<long long>(k.alpha(n)) != p - n) return false;
    if (static_cast<long long>(k.alpha(n - 1)) != (p - n) * n + 1) return false;
    for (int m = 0; m <= n - 1; ++m) {
        if (!find_cycle(k, m)) return true;
    }
    return false;
}

namespace {

struct ReducedPathSearch {
    const PureComplex& k;
    Simplex a, b;
    int m;
    std::size_t max_count;
    std::vector<Simplex> items;
    std::set<Simplex> used_items;
    std::set<Simplex> used_facets;
    std::set<Simplex> used_connectors;
    std::vector<AltSequence> found;

    bool full() const { return max_count > 0 && found.size() >= max_count; }

    void extend(const Simplex& cur) {
        if (full()) return;
        for (int fi : k.facets_containing(cur)) {
            const Simplex& facet = k.facets()[fi];
            if (used_facets.count(facet)) continue;
            // Endpoint exclusivity: a belongs to the first facet only, b to
            // the last facet only.
            if (!items.empty() && a.is_face_of(facet)) continue;
            std::optional<Simplex> connector;
            if (!items.empty()) {
                // items ends with the current m-simplex; the facet before it
                // sits one slot earlier.
                const Simplex& prev_facet = items[items.size() - 2];
                auto common = intersect(prev_facet, facet);
                if (static_cast<int>(common.size()) != k.dim()) continue;
                Simplex conn{std::move(common)};
                if (!cur.is_face_of(conn)) continue;
                if (used_connectors.count(conn)) continue;
                connector = std::move(conn);
            }
            const bool ends_here = b.is_face_of(facet);

            if (connector) used_connectors.insert(*connector);
            used_facets.insert(facet);
            items.push_back(facet);

            if (ends_here) {
                items.push_back(b);
                std::vector<Simplex> seq{a};
                seq.insert(seq.end(), items.begin(), items.end());
                found.push_back(AltSequence{m, std::move(seq)});
                items.pop_back();
            } else {
                for (const auto& next : facet.faces_of_dim(m)) {
                    if (next == a || next == b || used_items.count(next)) continue;
                    used_items.insert(next);
                    items.push_back(next);
                    extend(next);
                    items.pop_back();
                    used_items.erase(next);
                    if (full()) break;
                }
            }

            items.pop_back();
            used_facets.erase(facet);
            if (connector) used_connectors.erase(*connector);
            if (full()) return;
        }
    }
};

}  // namespace

std::vector<AltSequence> enumerate_reduced_paths(const PureComplex& k, const Simplex& a,
                                                 const Simplex& b, std::size_t max_count) {
    if (a.dim() != b.dim() || a.dim() < 0 || a.dim() > k.dim() - 1) {
        throw DimensionMismatchError("endpoints must be m-simplices for one 0 <= m <= n-1");
    }
    if (!k.contains(a) || !k.contains(b)) {
        throw ForeignSimplexError("endpoint is not a simplex of the complex");
    }
    if (a == b) {
        throw SameEndpointsError("endpoints must be distinct");
    }
    ReducedPathSearch search{k, a, b, a.dim(), max_count, {}, {a}, {}, {}, {}};
    search.extend(a);
    return std::move(search.found);
}

UniquePathsReport unique_paths_report(const PureComplex& k) {
    UniquePathsReport report;
    report.connected = is_connected(k);
    if (!report.connected) return report;

    const int n = k.dim();

    // Condition 1: exactly one reduced (n-1,n)-path sequence per pair.
    report.unique_top_paths = true;
    const auto& tops = k.simplices(n - 1);
    for (std::size_t i = 0; i < tops.size() && report.unique_top_paths; ++i) {
        for (std::size_t j = i + 1; j < tops.size(); ++j) {
            auto paths = enumerate_reduced_paths(k, tops[i], tops[j], 2);
            if (paths.size() != 1) {
                report.unique_top_paths = false;
                if (paths.size() == 2) {
                    report.duplicate_witness = {paths[0], paths[1]};
                }
                break;
            }
        }
    }

    // Condition 2: unique reduced simplicial path (one closure) for every
    // pair of m-simplices, m <= n-2, not lying in a common joint (n-1)-simplex.
    report.unique_lower_paths = true;
    const auto joint_tops = k.joint_simplices(n - 1);
    for (int m = 0; m <= n - 2 && report.unique_lower_paths; ++m) {
        const auto& level = k.simplices(m);
        for (std::size_t i = 0; i < level.size() && report.unique_lower_paths; ++i) {
            for (std::size_t j = i + 1; j < level.size(); ++j) {
                bool in_common_joint_top = false;
                for (const auto& top : joint_tops) {
                    if (level[i].is_face_of(top) && level[j].is_face_of(top)) {
                        in_common_joint_top = true;
                        break;
                    }
                }
                if (in_common_joint_top) continue;
                auto paths = enumerate_reduced_paths(k, level[i], level[j]);
                if (paths.empty()) {
                    report.unique_lower_paths = false;
                    break;
                }
                std::set<std::set<Simplex>> closures;
                for (const auto& path : paths) {
                    std::set<Simplex> facets;
                    for (int z = 1; z <= path.length(); ++z) facets.insert(path.facet(z));
                    closures.insert(std::move(facets));
                }
                if (closures.size() != 1) {
                    report.unique_lower_paths = false;
                    report.duplicate_witness = {paths[0], paths[1]};
                    break;
                }
            }
        }
    }

    // Condition 3: no (m,n)-simplicial cycle sequence for any m <= n-2.
    report.no_lower_cycles = true;
    for (int m = 0; m <= n - 2; ++m) {
        if (auto cycle = find_cycle(k, m)) {
            report.no_lower_cycles = false;
            report.cycle_witness = std::move(cycle);
            break;
        }
    }
    return report;
}

bool certify_by_unique_paths(const PureComplex& k) {
    return unique_paths_report(k).verdict();
}

std::optional<Simplex> find_complete_subcomplex_violation(const PureComplex& k) {
    const int n = k.dim();
    const auto& verts = k.simplices(0);
    const int p = static_cast<int>(verts.size());
    // Vertex subsets S with k+1 <= |S| <= n+1 whose (k+1)-subsets all lie in
    // K form a k-complete subcomplex; it must fit inside a single facet.
    for (int size = 2; size <= n + 1 && size <= p; ++size) {
        std::vector<int> idx(size);
        for (int i = 0; i < size; ++i) idx[i] = i;
        while (true) {
            std::vector<VertexId> vs(size);
            for (int i = 0; i < size; ++i) vs[i] = verts[idx[i]].vertices()[0];
            Simplex span{vs};
            for (int kk = 1; kk <= n && kk + 1 <= size; ++kk) {
                bool complete = true;
                for (const auto& face : span.faces_of_dim(kk)) {
                    if (!k.contains(face)) {
                        complete = false;
                        break;
                    }
                }
                if (!complete) continue;
                bool inside_facet = false;
                for (const auto& facet : k.facets()) {
                    if (span.is_face_of(facet)) {
                        inside_facet = true;
                        break;
                    }
                }
                if (!inside_facet) return span;
            }
            int i = size - 1;
            while (i >= 0 && idx[i] == p - size + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return std::nullopt;
}

bool check_complete_subcomplex_containment(const PureComplex& k, bool diagnostic) {
    if (!diagnostic && !certify_by_definition(k)) {
        throw NotATreeError("complete-subcomplex containment is a tree property");
    }
    return !find_complete_subcomplex_violation(k).has_value();
}

bool BoundsReport::all_hold() const {
    return std::all_of(entries.begin(), entries.end(),
                       [](const Entry& e) { return e.holds; });
}

BoundsReport count_bounds(const PureComplex& k) {
    BoundsReport report;
    const int n = k.dim();
    const long long p = static_cast<long long>(k.vertex_count());
    const long long a_top = static_cast<long long>(k.alpha(n));
    const long long a_sub = static_cast<long long>(k.alpha(n - 1));

    const bool no_top_cycle = !find_cycle(k, n - 1).has_value();
    const bool connected = is_connected(k);

    report.entries.push_back({"acyclic_lower_bound", no_top_cycle,
                              a_sub >= n * a_top + 1,
                              !no_top_cycle || a_sub >= n * a_top + 1});
    report.entries.push_back({"connected_upper_bound", connected,
                              a_sub <= n * a_top + 1,
                              !connected || a_sub <= n * a_top + 1});
    for (int key = 1; key <= n - 1; ++key) {
        const long long bound = tree_count_formula(p, n, key);
        const bool conclusion = static_cast<long long>(k.alpha(key)) >= bound;
        report.entries.push_back({"connected_alpha_" + std::to_string(key) + "_lower_bound",
                                  connected, conclusion, !connected || conclusion});
    }
    return report;
}

CertReport certify_tree(const PureComplex& k) {
    CertReport report;
    report.by_definition = certify_by_definition(k);
    report.complete_ordering = certify_by_complete_ordering(k);
    report.by_complete_ordering = report.complete_ordering.has_value();
    report.by_count_any = false;
    for (int key = 1; key <= k.dim(); ++key) {
        const bool ok = certify_by_count(k, key);
        report.by_count[key] = ok;
        report.by_count_any = report.by_count_any || ok;
    }
    report.by_acyclic_counts = certify_by_acyclic_counts(k);
    report.unique_paths = unique_paths_report(k);
    report.by_unique_paths = report.unique_paths.verdict();

    report.agree = report.by_definition == report.by_complete_ordering &&
                   report.by_definition == report.by_count_any &&
                   report.by_definition == report.by_acyclic_counts &&
                   report.by_definition == report.by_unique_paths;

    const bool any_negative = !(report.by_definition && report.by_complete_ordering &&
                                report.by_count_any && report.by_acyclic_counts &&
                                report.by_unique_paths);
    if (any_negative) {
        if (auto comps = components(k); comps.size() > 1) {
            report.disconnection = std::move(comps);
        }
        for (int m = 0; m <= k.dim() - 1; ++m) {
            if (auto cycle = find_cycle(k, m)) {
                report.cycle_witness = std::move(cycle);
                break;
            }
        }
        report.duplicate_path_witness = report.unique_paths.duplicate_witness;
    }
    return report;
}

}  // namespace simptree
