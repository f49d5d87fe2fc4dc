#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "simptree/complex.hpp"
#include "simptree/counting.hpp"
#include "simptree/errors.hpp"
#include "simptree/fixtures.hpp"

using namespace simptree;
using namespace simptree::testing;

TEST_SUITE_BEGIN("complex-core");

TEST_CASE("simplex canonicalization and faces") {
    Simplex s{3, 1, 2};
    CHECK(s.vertices() == std::vector<VertexId>{1, 2, 3});
    CHECK(s.dim() == 2);
    CHECK(s.contains(2));
    CHECK_FALSE(s.contains(4));
    CHECK(Simplex{1, 2}.is_face_of(s));
    CHECK_FALSE(Simplex{1, 4}.is_face_of(s));
    CHECK(s.faces_of_dim(1) == std::vector<Simplex>{{1, 2}, {1, 3}, {2, 3}});
    CHECK(s.proper_faces().size() == 6);

    CHECK_THROWS_AS((Simplex{1, 1, 2}), InvalidSimplexError);
    CHECK_THROWS_AS((Simplex{-1, 2}), InvalidSimplexError);
    CHECK_THROWS_AS(Simplex(std::vector<VertexId>{}), InvalidSimplexError);
}

TEST_CASE("build_complex computes the closure") {
    const auto& fig1 = fixture("fig1");
    CHECK(fig1.dim() == 2);
    CHECK(fig1.alpha(0) == 10);
    CHECK(fig1.alpha(1) == 14);
    CHECK(fig1.alpha(2) == 6);

    auto edge = make({{1, 2}});
    CHECK(edge.alpha(0) == 2);
    CHECK(edge.alpha(1) == 1);

    auto tetra = make({{1, 2, 3, 4}});
    for (int k = 0; k <= 3; ++k) {
        CHECK(static_cast<long long>(tetra.alpha(k)) == binomial(4, k + 1));
    }
}

TEST_CASE("build_complex rejects bad input") {
    CHECK_THROWS_AS(make({}), EmptyInputError);
    CHECK_THROWS_AS(make({{1, 2, 3}, {4, 5}}), MixedDimensionError);
    CHECK_THROWS_AS(make({{1}}), DimensionOutOfRangeError);

    // Duplicate facets collapse.
    auto k = make({{1, 2, 3}, {3, 2, 1}});
    CHECK(k.facet_count() == 1);
}

TEST_CASE("closure matches the subset oracle and rebuilding is idempotent") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 3);
        const int facet_count = 1 + static_cast<int>(rng() % 4);
        std::vector<Simplex> facets;
        for (int i = 0; i < facet_count; ++i) {
            std::set<VertexId> verts;
            while (static_cast<int>(verts.size()) < n + 1) {
                verts.insert(1 + static_cast<int>(rng() % 9));
            }
            facets.emplace_back(std::vector<VertexId>(verts.begin(), verts.end()));
        }
        auto k = PureComplex::from_facets(facets);

        auto oracle = closure_oracle(facets);
        std::size_t total = 0;
        for (int d = 0; d <= k.dim(); ++d) {
            for (const auto& s : k.simplices(d)) {
                CHECK(oracle.count(s) == 1);
            }
            total += k.alpha(d);
        }
        CHECK(total == oracle.size());

        auto rebuilt = PureComplex::from_facets(k.facets());
        CHECK(rebuilt.facets() == k.facets());
        for (int d = 0; d <= k.dim(); ++d) {
            CHECK(rebuilt.simplices(d) == k.simplices(d));
        }
    }
}

TEST_CASE("attachment") {
    const auto& fig1 = fixture("fig1");
    CHECK(fig1.attachment({4, 5, 6}) == std::vector<Simplex>{{4}});

    auto single = make({{1, 2, 3}});
    CHECK(single.attachment({1, 2, 3}).empty());

    // Every face of {8,9,10} except {9,10} lies in another facet: {9,10} is
    // in no facet besides {8,9,10} itself.
    auto att = fig1.attachment({8, 9, 10});
    CHECK(as_set(att) == std::set<Simplex>{{8}, {9}, {10}, {8, 9}, {8, 10}});
    CHECK(as_set(att) == attachment_oracle({8, 9, 10}, fig1.facets()));

    CHECK_THROWS_AS(fig1.attachment({1, 2, 4}), NotAFacetError);

    // Attachments are subcomplexes: closed under taking faces.
    for (const auto& f : fig1.facets()) {
        auto a = as_set(fig1.attachment(f));
        for (const auto& s : a) {
            for (const auto& face : s.all_faces()) {
                CHECK(a.count(face) == 1);
            }
        }
    }
}

TEST_CASE("is_m_complete") {
    CHECK(make({{1, 2, 3}}).is_m_complete(2));
    CHECK_FALSE(fixture("fig1").is_m_complete(2));

    // Complete graph on four vertices as a 1-complex.
    auto k4 = make({{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    CHECK(k4.is_m_complete(1));
    CHECK_FALSE(k4.is_m_complete(2));
    auto p3 = make({{1, 2}, {2, 3}});
    CHECK_FALSE(p3.is_m_complete(1));
}

TEST_CASE("alpha bounds checking") {
    const auto& fig9 = fixture("fig9");
    CHECK(fig9.alpha(2) == 8);
    CHECK(fig9.alpha(0) == 9);
    CHECK_THROWS_AS(fig9.alpha(3), DimensionOutOfRangeError);
    CHECK_THROWS_AS(fig9.alpha(-1), DimensionOutOfRangeError);
}

TEST_CASE("k_skeleton") {
    const auto& fig1 = fixture("fig1");
    CHECK(fig1.k_skeleton(1).size() == 10 + 14);
    CHECK(fig1.k_skeleton(2).size() == 10 + 14 + 6);

    const auto& t_b = fixture("t_b");
    CHECK(t_b.k_skeleton(1).size() == 5 + 7);
    CHECK_THROWS_AS(t_b.k_skeleton(3), DimensionOutOfRangeError);

    // alpha(k) equals the size difference of consecutive skeleta.
    for (int k = 0; k <= fig1.dim(); ++k) {
        const std::size_t below = k == 0 ? 0 : fig1.k_skeleton(k - 1).size();
        CHECK(fig1.alpha(k) == fig1.k_skeleton(k).size() - below);
    }
}

TEST_CASE("clique_complex") {
    auto triangle = Graph::from_edges({{1, 2}, {1, 3}, {2, 3}});
    auto cl = clique_complex(triangle);
    CHECK(as_set(cl) ==
          std::set<Simplex>{{1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3}});

    auto path = Graph::from_edges({{1, 2}, {2, 3}});
    CHECK(as_set(clique_complex(path)) == std::set<Simplex>{{1}, {2}, {3}, {1, 2}, {2, 3}});

    // The clique complex of the 1-skeleton of a tree reproduces the tree.
    const auto& t_a = fixture("t_a");
    auto round_trip = clique_complex(t_a.one_skeleton_graph());
    std::set<Simplex> all;
    for (int d = 0; d <= t_a.dim(); ++d) {
        for (const auto& s : t_a.simplices(d)) all.insert(s);
    }
    CHECK(as_set(round_trip) == all);
}

TEST_CASE("joint_simplices") {
    const auto& fig1 = fixture("fig1");
    auto joint_edges = fig1.joint_simplices(1);
    CHECK(as_set(joint_edges) == std::set<Simplex>{{2, 3}, {7, 8}, {8, 9}, {8, 10}});
    CHECK(as_set(joint_edges) == joint_oracle(fig1.facets(), 1));

    auto joint_verts = fig1.joint_simplices(0);
    CHECK(as_set(joint_verts) == joint_oracle(fig1.facets(), 0));
    CHECK(as_set(joint_verts).count({4}) == 1);

    CHECK(make({{1, 2, 3}}).joint_simplices(0).empty());
    CHECK(make({{1, 2, 3}}).joint_simplices(1).empty());
    CHECK_THROWS_AS(fig1.joint_simplices(2), DimensionOutOfRangeError);
}

TEST_SUITE_END();
