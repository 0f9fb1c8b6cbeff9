#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "helpers.hpp"
#include "matchpack/generators.hpp"
#include "matchpack/matching.hpp"
#include "matchpack/packers.hpp"

using namespace matchpack;
using matchpack::testing::pts;

TEST_CASE("is_plane_matching") {
  const PointSet sq = pts({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  CHECK(is_plane_matching(sq, Matching(4, {Edge(0, 1), Edge(2, 3)})));
  CHECK_FALSE(is_plane_matching(sq, Matching(4, {Edge(0, 2), Edge(1, 3)})));
  CHECK_THROWS_AS(is_plane_matching(sq, Matching(4, {Edge(0, 1), Edge(1, 2)})),
                  std::invalid_argument);
  const PointSet C = gen_convex(6, 2);
  const Packing pack = pack_convex(C);
  CHECK(is_plane_matching(C, pack.matchings[0]));
}

TEST_CASE("verify_packing findings") {
  const PointSet C = gen_convex(8, 3);
  SECTION("constructed packing is valid and plane") {
    const Packing pack = pack_convex(C);
    const VerifyReport rep = verify_packing(C, pack, true, false);
    CHECK(rep.valid);
    CHECK(pack.size() == 4);
  }
  SECTION("duplicated edge across matchings is flagged") {
    Packing pack = pack_convex(C);
    pack.matchings[1] = pack.matchings[0];
    const VerifyReport rep = verify_packing(C, pack, true, false);
    CHECK_FALSE(rep.valid);
    bool mentions_shared = false;
    for (const auto& p : rep.problems)
      if (p.find("shared") != std::string::npos) mentions_shared = true;
    CHECK(mentions_shared);
  }
  SECTION("a crossing within a matching is flagged") {
    const PointSet sq = pts({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    Packing pack;
    pack.n = 4;
    pack.matchings.push_back(Matching(4, {Edge(0, 2), Edge(1, 3)}));
    const VerifyReport rep = verify_packing(sq, pack, true, false);
    CHECK_FALSE(rep.valid);
  }
  SECTION("cycle split is valid and pairwise non-crossing") {
    const PointSet P = gen_random(10, 17);
    const Cycle cyc = plane_hamiltonian_cycle(P);
    auto [m1, m2] = split_cycle(P.size(), cyc);
    Packing pack;
    pack.n = P.size();
    pack.matchings = {m1, m2};
    const VerifyReport rep = verify_packing(P, pack, true, true);
    CHECK(rep.valid);
  }
}

TEST_CASE("plane_hamiltonian_cycle") {
  SECTION("convex points give the hull cycle") {
    const PointSet C = gen_convex(8, 5);
    const Cycle cyc = plane_hamiltonian_cycle(C);
    REQUIRE(cyc.size() == 8);
    // cyclic rotation (possibly reflected) of 0..7
    const int start = cyc[0];
    bool forward = true, backward = true;
    for (int i = 0; i < 8; ++i) {
      if (cyc[i] != (start + i) % 8) forward = false;
      if (cyc[i] != ((start - i) % 8 + 8) % 8) backward = false;
    }
    CHECK((forward || backward));
  }
  SECTION("square plus center is a plane 5-cycle") {
    const PointSet P = pts({{0, 0}, {2, 0}, {2, 2}, {0, 2}, {1, 1}});
    const Cycle cyc = plane_hamiltonian_cycle(P);
    REQUIRE(cyc.size() == 5);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = i + 1; j < 5; ++j)
        CHECK_FALSE(segments_cross(P, Edge(cyc[i], cyc[(i + 1) % 5]),
                                   Edge(cyc[j], cyc[(j + 1) % 5])));
  }
  SECTION("random sets come out crossing-free") {
    for (std::uint64_t seed : {2ULL, 4ULL, 6ULL}) {
      const PointSet P = gen_random(12, seed);
      const Cycle cyc = plane_hamiltonian_cycle(P);
      const int m = static_cast<int>(cyc.size());
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
          CHECK_FALSE(segments_cross(P, Edge(cyc[i], cyc[(i + 1) % m]),
                                     Edge(cyc[j], cyc[(j + 1) % m])));
    }
  }
}

TEST_CASE("uncross_cycle repairs a deliberately tangled tour") {
  const PointSet P = gen_random(14, 33);
  Cycle tangled(14);
  std::iota(tangled.begin(), tangled.end(), 0);  // index order, not radial
  std::mt19937_64 rng(1);
  std::shuffle(tangled.begin(), tangled.end(), rng);
  const int moves = uncross_cycle(P, tangled);
  INFO("moves=" << moves);
  const int m = static_cast<int>(tangled.size());
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      CHECK_FALSE(segments_cross(P, Edge(tangled[i], tangled[(i + 1) % m]),
                                 Edge(tangled[j], tangled[(j + 1) % m])));
}

TEST_CASE("split_cycle") {
  SECTION("square splits into opposite sides") {
    const PointSet sq = pts({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    auto [m1, m2] = split_cycle(4, Cycle{0, 1, 2, 3});
    CHECK(m1.sorted_edges() == EdgeList{Edge(0, 1), Edge(2, 3)});
    CHECK(m2.sorted_edges() == EdgeList{Edge(0, 3), Edge(1, 2)});
  }
  SECTION("edge sets partition the cycle") {
    const PointSet P = gen_random(12, 8);
    const Cycle cyc = plane_hamiltonian_cycle(P);
    auto [m1, m2] = split_cycle(12, cyc);
    std::set<Edge> uni(m1.edges.begin(), m1.edges.end());
    uni.insert(m2.edges.begin(), m2.edges.end());
    CHECK(uni.size() == 12);
    for (int i = 0; i < 12; ++i)
      CHECK(uni.count(Edge(cyc[static_cast<std::size_t>(i)],
                           cyc[static_cast<std::size_t>((i + 1) % 12)])) == 1);
  }
  CHECK_THROWS_AS(split_cycle(5, Cycle{0, 1, 2, 3, 4}), std::invalid_argument);
}

TEST_CASE("union_cycles") {
  SECTION("two matchings of a square form one 4-cycle") {
    const Matching m1(4, {Edge(0, 1), Edge(2, 3)});
    const Matching m2(4, {Edge(1, 2), Edge(3, 0)});
    const CycleDecomposition dec = union_cycles(m1, m2);
    REQUIRE(dec.cycles.size() == 1);
    CHECK(dec.cycles[0].size() == 4);
  }
  SECTION("pack_convex pairs decompose into even cycles covering all points") {
    const PointSet C = gen_convex(8, 6);
    const Packing pack = pack_convex(C);
    const CycleDecomposition dec =
        union_cycles(pack.matchings[0], pack.matchings[1]);
    std::size_t total = 0;
    for (const Cycle& c : dec.cycles) {
      CHECK(c.size() % 2 == 0);
      CHECK(c.size() >= 4);
      total += c.size();
    }
    CHECK(total == 8);
  }
  SECTION("shared edges are rejected") {
    const Matching m1(4, {Edge(0, 1), Edge(2, 3)});
    CHECK_THROWS_AS(union_cycles(m1, m1), std::invalid_argument);
  }
  SECTION("cycles alternate between the two matchings") {
    const PointSet P = gen_random(12, 21);
    const Cycle cyc = plane_hamiltonian_cycle(P);
    auto [m1, m2] = split_cycle(12, cyc);
    const CycleDecomposition dec = union_cycles(m1, m2);
    for (const Cycle& c : dec.cycles) {
      const int L = static_cast<int>(c.size());
      for (int i = 0; i < L; ++i) {
        const Edge e(c[static_cast<std::size_t>(i)],
                     c[static_cast<std::size_t>((i + 1) % L)]);
        CHECK((m1.contains(e) || m2.contains(e)));
        if (i % 2 == 0)
          CHECK(m1.contains(e));
        else
          CHECK(m2.contains(e));
      }
    }
  }
}
