#include "simptree/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "simptree/certify.hpp"
#include "simptree/counting.hpp"
#include "simptree/cycles.hpp"
#include "simptree/errors.hpp"

namespace simptree {

namespace {

using FacetList = std::vector<std::vector<int>>;  // facets over vertex indices

/// Branch-and-bound search for the lexicographically least relabeled facet
/// list. Output facets are built smallest-first; the image of a facet whose
/// unlabeled vertices receive the next consecutive labels is independent of
/// how those labels are distributed, so ties branch only on that
/// distribution.
struct CanonicalSearch {
    const FacetList& facets;
    int p;
    std::vector<int> label_of;   // vertex index -> label (1-based), 0 = none
    std::vector<bool> used;      // facet consumed
    FacetList current;
    FacetList best;
    int next_label = 1;

    CanonicalSearch(const FacetList& facets, int p)
        : facets(facets), p(p), label_of(p, 0), used(facets.size(), false) {}

    std::vector<int> image_of(std::size_t fi) const {
        std::vector<int> img;
        int unlabeled = 0;
        for (int v : facets[fi]) {
            if (label_of[v] > 0) {
                img.push_back(label_of[v]);
            } else {
                ++unlabeled;
            }
        }
        std::sort(img.begin(), img.end());
        for (int j = 0; j < unlabeled; ++j) img.push_back(next_label + j);
        return img;
    }

    void dfs(bool tight) {
        if (current.size() == facets.size()) {
            if (best.empty() || current < best) best = current;
            return;
        }
        std::vector<int> min_image;
        std::vector<std::size_t> candidates;
        for (std::size_t fi = 0; fi < facets.size(); ++fi) {
            if (used[fi]) continue;
            auto img = image_of(fi);
            if (min_image.empty() || img < min_image) {
                min_image = std::move(img);
                candidates.assign(1, fi);
            } else if (img == min_image) {
                candidates.push_back(fi);
            }
        }
        if (tight && !best.empty()) {
            const auto& ref = best[current.size()];
            if (min_image > ref) return;
            if (min_image < ref) tight = false;
        }
        for (std::size_t fi : candidates) {
            std::vector<int> unlabeled;
            for (int v : facets[fi]) {
                if (label_of[v] == 0) unlabeled.push_back(v);
            }
            std::sort(unlabeled.begin(), unlabeled.end());
            do {
                for (std::size_t j = 0; j < unlabeled.size(); ++j) {
                    label_of[unlabeled[j]] = next_label + static_cast<int>(j);
                }
                next_label += static_cast<int>(unlabeled.size());
                used[fi] = true;
                current.push_back(min_image);
                dfs(tight);
                current.pop_back();
                used[fi] = false;
                next_label -= static_cast<int>(unlabeled.size());
                for (int v : unlabeled) label_of[v] = 0;
            } while (std::next_permutation(unlabeled.begin(), unlabeled.end()));
        }
    }
};

FacetList run_canonical(const FacetList& indexed, int p) {
    CanonicalSearch search(indexed, p);
    search.dfs(false);
    return search.best;
}

std::pair<FacetList, int> index_facets(const std::vector<Simplex>& facets,
                                       int vertex_budget) {
    std::set<VertexId> verts;
    for (const auto& f : facets) {
        verts.insert(f.vertices().begin(), f.vertices().end());
    }
    if (static_cast<int>(verts.size()) > vertex_budget) {
        throw TooLargeError("canonical form limited to " + std::to_string(vertex_budget) +
                            " vertices");
    }
    std::map<VertexId, int> index;
    int next = 0;
    for (VertexId v : verts) index[v] = next++;
    FacetList indexed;
    for (const auto& f : facets) {
        std::vector<int> row;
        for (VertexId v : f.vertices()) row.push_back(index[v]);
        std::sort(row.begin(), row.end());
        indexed.push_back(std::move(row));
    }
    std::sort(indexed.begin(), indexed.end());
    return {std::move(indexed), next};
}

std::vector<Simplex> to_simplices(const FacetList& rows) {
    std::vector<Simplex> out;
    for (const auto& row : rows) {
        std::vector<VertexId> verts(row.begin(), row.end());
        out.emplace_back(std::move(verts));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<Simplex> canonical_form(const std::vector<Simplex>& facets, int vertex_budget) {
    if (facets.empty()) {
        throw EmptyInputError("canonical form of an empty facet set");
    }
    auto [indexed, p] = index_facets(facets, vertex_budget);
    return to_simplices(run_canonical(indexed, p));
}

std::vector<Simplex> canonical_form(const PureComplex& k, int vertex_budget) {
    return canonical_form(k.facets(), vertex_budget);
}

bool is_canonical_form(const std::vector<Simplex>& facets, int vertex_budget) {
    auto sorted = facets;
    std::sort(sorted.begin(), sorted.end());
    return canonical_form(sorted, vertex_budget) == sorted;
}

namespace {

struct Generator {
    const EnumSpace& space;
    const std::function<void(const std::vector<Simplex>&)>& fn;
    std::vector<Simplex> chosen;
    std::vector<int> cover;  // cover[v-1] = number of chosen facets containing v
    int max_used = 0;

    bool covered_contiguously() const {
        for (int v = 1; v <= max_used; ++v) {
            if (cover[v - 1] == 0) return false;
        }
        return true;
    }

    void emit_if_valid() {
        if (chosen.empty() || !covered_contiguously()) return;
        if (space.up_to_iso && !is_canonical_form(chosen, space.max_vertices)) return;
        fn(chosen);
    }

    /// Candidate facets strictly greater than `after` (lexicographically).
    /// In iso mode a facet may use already-seen vertices plus the next
    /// consecutive unseen labels only; the least-labeled representative of
    /// every isomorphism class survives this pruning.
    std::vector<Simplex> candidates(const Simplex* after) const {
        const int size = space.n + 1;
        const int pool_max = std::min(space.max_vertices, max_used + size);
        std::vector<Simplex> out;
        std::vector<int> idx(size);
        for (int i = 0; i < size; ++i) idx[i] = i + 1;
        if (pool_max < size) return out;
        while (true) {
            bool ok = true;
            if (space.up_to_iso) {
                int expected_new = max_used + 1;
                for (int v : idx) {
                    if (v > max_used) {
                        if (v != expected_new) {
                            ok = false;
                            break;
                        }
                        ++expected_new;
                    }
                }
            }
            if (ok) {
                std::vector<VertexId> verts(idx.begin(), idx.end());
                Simplex cand{std::move(verts)};
                if (after == nullptr || *after < cand) {
                    // Vertices below the facet's least vertex can never be
                    // covered by later (larger) facets.
                    bool cover_ok = true;
                    for (int v = 1; v < cand.vertices().front() && v <= max_used; ++v) {
                        if (cover[v - 1] == 0) {
                            cover_ok = false;
                            break;
                        }
                    }
                    if (cover_ok) out.push_back(std::move(cand));
                }
            }
            int i = size - 1;
            while (i >= 0 && idx[i] == pool_max - size + i + 1) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    void grow() {
        emit_if_valid();
        if (static_cast<int>(chosen.size()) >= space.max_facets) return;
        const Simplex* after = chosen.empty() ? nullptr : &chosen.back();
        for (const auto& cand : candidates(after)) {
            chosen.push_back(cand);
            const int prev_max = max_used;
            for (VertexId v : cand.vertices()) {
                ++cover[v - 1];
                max_used = std::max(max_used, v);
            }
            grow();
            for (VertexId v : cand.vertices()) --cover[v - 1];
            max_used = prev_max;
            chosen.pop_back();
        }
    }
};

}  // namespace

void for_each_complex(const EnumSpace& space,
                      const std::function<void(const std::vector<Simplex>&)>& fn) {
    if (space.n < 1 || space.max_facets < 1 || space.max_vertices < space.n + 1) {
        throw DimensionOutOfRangeError("enumeration space is degenerate");
    }
    Generator gen{space, fn, {}, std::vector<int>(space.max_vertices, 0), 0};
    gen.grow();
}

std::vector<PureComplex> enumerate_complexes(const EnumSpace& space) {
    std::vector<PureComplex> out;
    for_each_complex(space, [&](const std::vector<Simplex>& facets) {
        out.push_back(PureComplex::from_facets(facets));
    });
    return out;
}

std::string conjecture_name(Conjecture c) {
    switch (c) {
        case Conjecture::C1: return "c1";
        case Conjecture::C2: return "c2";
        case Conjecture::NewConjecture: return "new";
    }
    return "?";
}

ConjectureVerdict test_conjecture(const PureComplex& k, Conjecture which) {
    ConjectureVerdict verdict;
    verdict.which = which;
    verdict.facets = k.facets();
    verdict.canonical = canonical_form(k);

    const int n = k.dim();
    const long long p = static_cast<long long>(k.vertex_count());

    bool premises = false;
    if (which == Conjecture::C1 || which == Conjecture::C2) {
        // Dewdney's conjectures, tested at m = n-1.
        const int m = n - 1;
        const bool circuit_free = !find_circuit(k, m).has_value();
        bool count_ok = which == Conjecture::C2;
        for (int key = 1; key <= m; ++key) {
            const Rational expected = dewdney_count_formula(p, m, n, key);
            const bool match = is_integral(expected) &&
                               expected.numerator() == static_cast<long long>(k.alpha(key));
            if (which == Conjecture::C1) {
                count_ok = count_ok || match;
            } else {
                count_ok = count_ok && match;
            }
        }
        premises = circuit_free && count_ok;
    } else {
        bool cycle_free_some_m = false;
        for (int m = 0; m <= n - 1 && !cycle_free_some_m; ++m) {
            cycle_free_some_m = !find_cycle(k, m).has_value();
        }
        bool count_ok = false;
        for (int key = 1; key <= n - 1 && !count_ok; ++key) {
            count_ok = static_cast<long long>(k.alpha(key)) == tree_count_formula(p, n, key);
        }
        const bool facet_count_ok = static_cast<long long>(k.alpha(n)) == p - n;
        premises = cycle_free_some_m && count_ok && facet_count_ok;
    }

    verdict.premises_hold = premises;
    verdict.is_tree = certify_by_definition(k);
    verdict.counterexample = premises && !verdict.is_tree;
    return verdict;
}

SearchOutcome search_counterexamples(const EnumSpace& space, Conjecture which,
                                     unsigned threads) {
    std::vector<PureComplex> complexes = enumerate_complexes(space);
    if (threads == 0) {
        threads = std::max(1u, std::min(std::thread::hardware_concurrency(), 8u));
    }
    threads = std::min(threads,
                       static_cast<unsigned>(std::max<std::size_t>(complexes.size(), 1)));

    std::mutex collect_mutex;
    SearchOutcome outcome;
    std::atomic<std::size_t> cursor{0};

    auto worker = [&]() {
        while (true) {
            const std::size_t i = cursor.fetch_add(1);
            if (i >= complexes.size()) break;
            ConjectureVerdict verdict = test_conjecture(complexes[i], which);
            if (verdict.premises_hold) {
                std::lock_guard<std::mutex> lock(collect_mutex);
                outcome.premise_holders.push_back(verdict);
                if (verdict.counterexample) {
                    outcome.counterexamples.push_back(std::move(verdict));
                }
            }
        }
    };

    std::vector<std::thread> pool;
    for (unsigned i = 0; i + 1 < threads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    auto by_canonical = [](const ConjectureVerdict& a, const ConjectureVerdict& b) {
        return a.canonical < b.canonical;
    };
    std::sort(outcome.counterexamples.begin(), outcome.counterexamples.end(), by_canonical);
    std::sort(outcome.premise_holders.begin(), outcome.premise_holders.end(), by_canonical);
    return outcome;
}

}  // namespace simptree
