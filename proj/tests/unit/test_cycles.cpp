#include "doctest.h"
#include "helpers.hpp"
#include "simptree/certify.hpp"
#include "simptree/cycles.hpp"
#include "simptree/enumerate.hpp"
#include "simptree/errors.hpp"
#include "simptree/fixtures.hpp"

using namespace simptree;
using namespace simptree::testing;

TEST_SUITE_BEGIN("cycles");

namespace {

const AltSequence kFig1Cycle =
    seq(1, {{7, 8}, {7, 8, 9}, {8, 9}, {8, 9, 10}, {8, 10}, {7, 8, 10}, {7, 8}});
const AltSequence kFig9Cycle = seq(0, {{1}, {1, 2, 3}, {2}, {2, 3, 4}, {3},
                                       {3, 4, 5}, {5}, {1, 4, 5}, {1}});

std::set<Simplex> facet_set(const AltSequence& s) {
    std::set<Simplex> out;
    for (int i = 1; i <= s.length(); ++i) out.insert(s.facet(i));
    return out;
}

}  // namespace

TEST_CASE("validate_circuit") {
    const auto& fig1 = fixture("fig1");
    CHECK(validate_circuit(kFig1Cycle, fig1));
    // Open paths are not circuits.
    CHECK_FALSE(validate_circuit(seq(0, {{1}, {1, 2, 3}, {2}, {2, 3, 4}, {4}}), fig1));
    // Closed walks reusing a facet are not circuits.
    auto reuse = seq(1, {{2, 3}, {1, 2, 3}, {1, 2}, {1, 2, 3}, {2, 3}});
    CHECK(validate_walk(reuse, fig1));
    CHECK_FALSE(validate_circuit(reuse, fig1));
}

TEST_CASE("validate_cycle accepts the goldens") {
    auto w1 = validate_cycle(kFig1Cycle, fixture("fig1"));
    REQUIRE(w1);
    CHECK(w1->connectors == std::vector<Simplex>{{8, 9}, {8, 10}});

    auto w9 = validate_cycle(kFig9Cycle, fixture("fig9"));
    REQUIRE(w9);
    CHECK(w9->connectors == std::vector<Simplex>{{2, 3}, {3, 4}, {4, 5}});
}

TEST_CASE("validate_cycle rejects short circuits") {
    // Two triangles around the edge {1,2}: {1},{123},{2},{124},{1} is a
    // circuit of length two, below the cycle threshold.
    auto pair = make({{1, 2, 3}, {1, 2, 4}});
    auto r2 = seq(0, {{1}, {1, 2, 3}, {2}, {1, 2, 4}, {1}});
    CHECK(validate_circuit(r2, pair));
    CHECK_FALSE(validate_cycle(r2, pair));
}

TEST_CASE("validate_cycle enforces base point exclusion") {
    // {8} belongs to every facet of the fig1 triple, so no cycle may start
    // from it.
    const auto& fig1 = fixture("fig1");
    auto through8 = seq(0, {{8}, {7, 8, 9}, {9}, {8, 9, 10}, {10}, {7, 8, 10}, {8}});
    CHECK(validate_circuit(through8, fig1));
    CHECK_FALSE(validate_cycle(through8, fig1));
}

TEST_CASE("find_circuit") {
    const auto& fig1 = fixture("fig1");
    auto circuit = find_circuit(fig1, 1);
    REQUIRE(circuit);
    CHECK(validate_circuit(*circuit, fig1));

    CHECK_FALSE(find_circuit(fixture("t_a"), 1));
    CHECK_FALSE(find_circuit(fixture("ce_a"), 1));

    // Circuit-freedom is a top-dimension notion: ce_a closes a vertex
    // triangle 1-3-5 and trees close length-two circuits over shared edges,
    // yet neither admits a (0,2)-cycle.
    auto around = find_circuit(fixture("ce_a"), 0);
    REQUIRE(around);
    CHECK_FALSE(find_cycle(fixture("ce_a"), 0));
    auto low = find_circuit(fixture("t_a"), 0);
    REQUIRE(low);
    CHECK(low->length() == 2);

    // Two facets sharing two lower simplices form a length-two circuit even
    // though no cycle exists.
    auto pair = make({{1, 2, 3}, {1, 2, 4}});
    auto r2 = find_circuit(pair, 0);
    REQUIRE(r2);
    CHECK(r2->length() == 2);
    CHECK_FALSE(find_cycle(pair, 0));
}

TEST_CASE("find_cycle on the fixtures") {
    const auto& fig1 = fixture("fig1");
    auto w = find_cycle(fig1, 1);
    REQUIRE(w);
    CHECK(facet_set(w->seq) == std::set<Simplex>{{7, 8, 9}, {8, 9, 10}, {7, 8, 10}});
    CHECK(validate_cycle(w->seq, fig1));

    CHECK_FALSE(find_cycle(fixture("t_a"), 0));
    CHECK_FALSE(find_cycle(fixture("t_a"), 1));

    const auto& fig9 = fixture("fig9");
    auto w9 = find_cycle(fig9, 0);
    REQUIRE(w9);
    CHECK(validate_cycle(w9->seq, fig9));
    // fig9's facet adjacency is a tree, so no (1,2)-cycle exists.
    CHECK_FALSE(find_cycle(fig9, 1));

    CHECK_THROWS_AS(find_cycle(fig1, 2), DimensionOutOfRangeError);
}

TEST_CASE("is_acyclic") {
    CHECK(is_acyclic(fixture("t_b")));
    CHECK(is_acyclic(fixture("ce_a")));
    CHECK(is_acyclic(fixture("ce_b")));
    CHECK_FALSE(is_acyclic(fixture("fig9")));
    CHECK_FALSE(is_acyclic(fixture("fig1")));
}

TEST_CASE("joint_cyclicity_premise") {
    // Every joint vertex of fig9 lies inside a joint edge, so the premise
    // does not fire even though fig9 is cyclic.
    const auto& fig9 = fixture("fig9");
    CHECK_FALSE(joint_cyclicity_premise(fig9));
    {
        auto joint_tops = fig9.joint_simplices(1);
        for (const auto& v : fig9.joint_simplices(0)) {
            bool covered = false;
            for (const auto& e : joint_tops) covered = covered || v.is_face_of(e);
            CHECK(covered);
        }
    }

    CHECK_FALSE(joint_cyclicity_premise(fixture("t_b")));
    CHECK_FALSE(joint_cyclicity_premise(make({{1, 2, 3}})));
    CHECK_THROWS_AS(joint_cyclicity_premise(fixture("fig1")), NotConnectedError);

    // The four-triangle band closes through vertex 1, which lies in no
    // joint edge: the premise fires and a cycle must exist.
    auto band = make({{1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {1, 4, 5}});
    auto premise = joint_cyclicity_premise(band);
    REQUIRE(premise);
    CHECK(premise->first == 0);
    CHECK(premise->second == Simplex{1});
    CHECK(find_cycle(band, premise->first));
}

TEST_CASE("premise witnesses always come with cycles") {
    for (const auto& k : enumerate_complexes({2, 4, 7, true})) {
        if (!is_connected(k)) continue;
        if (auto premise = joint_cyclicity_premise(k)) {
            CHECK(find_cycle(k, premise->first));
        }
    }
}

TEST_CASE("circuits and cycles coincide at the top dimension") {
    for (const auto& k : enumerate_complexes({2, 4, 7, true})) {
        const int m = k.dim() - 1;
        CHECK(find_circuit(k, m).has_value() == find_cycle(k, m).has_value());
    }
    for (const auto& k : enumerate_complexes({1, 4, 5, true})) {
        CHECK(find_circuit(k, 0).has_value() == find_cycle(k, 0).has_value());
    }
}

TEST_CASE("cycles propagate downward from the top dimension") {
    for (const auto& k : enumerate_complexes({2, 5, 7, true})) {
        if (find_cycle(k, k.dim() - 1)) {
            for (int m = 0; m <= k.dim() - 2; ++m) {
                CHECK(find_cycle(k, m));
            }
        }
    }
    // Contrapositive: cycle-free at some lower m forces top-level freedom.
    for (const auto& k : enumerate_complexes({2, 4, 7, true})) {
        for (int m = 0; m <= k.dim() - 2; ++m) {
            if (!find_cycle(k, m)) {
                CHECK_FALSE(find_cycle(k, k.dim() - 1));
            }
        }
    }
}

TEST_CASE("dependent reduced top paths in acyclic complexes are identical") {
    for (const auto& k : enumerate_complexes({2, 4, 7, true})) {
        if (!is_acyclic(k)) continue;
        const auto& tops = k.simplices(k.dim() - 1);
        for (std::size_t i = 0; i < tops.size(); ++i) {
            for (std::size_t j = i + 1; j < tops.size(); ++j) {
                auto paths = enumerate_reduced_paths(k, tops[i], tops[j]);
                for (std::size_t x = 0; x < paths.size(); ++x) {
                    for (std::size_t y = x + 1; y < paths.size(); ++y) {
                        auto rel = compare_paths(paths[x], paths[y], k);
                        if (rel != PathRelation::Independent) {
                            CHECK(paths[x] == paths[y]);
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("find_cycle agrees with the brute-force oracle") {
    for (const auto& k : enumerate_complexes({2, 4, 7, true})) {
        for (int m = 0; m <= k.dim() - 1; ++m) {
            CHECK(find_cycle(k, m).has_value() == cycle_oracle(k, m));
        }
    }
    for (const auto& k : enumerate_complexes({3, 3, 7, true})) {
        for (int m = 0; m <= k.dim() - 1; ++m) {
            CHECK(find_cycle(k, m).has_value() == cycle_oracle(k, m));
        }
    }
    for (const auto& k : enumerate_complexes({1, 5, 6, true})) {
        CHECK(find_cycle(k, 0).has_value() == cycle_oracle(k, 0));
    }
}

TEST_CASE("every validated cycle is a circuit") {
    const auto& fig1 = fixture("fig1");
    const auto& fig9 = fixture("fig9");
    CHECK(validate_circuit(kFig1Cycle, fig1));
    CHECK(validate_circuit(kFig9Cycle, fig9));
    for (const auto& k : enumerate_complexes({2, 4, 6, true})) {
        for (int m = 0; m <= k.dim() - 1; ++m) {
            if (auto w = find_cycle(k, m)) {
                CHECK(validate_circuit(w->seq, k));
                CHECK(validate_cycle(w->seq, k));
            }
        }
    }
}

TEST_SUITE_END();
