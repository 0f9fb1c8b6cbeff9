// Acceptance suite: every claim the library is contracted to reproduce, one
// pass/fail line per criterion. Pass the CLI binary path as argv[1]; it is
// exercised by the determinism criterion.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "matchpack/matchpack.hpp"

using namespace matchpack;
namespace fs = std::filesystem;

namespace {

struct Criterion {
  int id;
  std::string title;
  std::vector<std::string> failures;
  double seconds = 0;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

std::vector<Criterion> results;

void run(int id, const std::string& title,
         const std::function<void(Criterion&)>& body) {
  Criterion c{id, title, {}, 0};
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.failures.push_back(std::string("exception: ") + e.what());
  }
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  results.push_back(std::move(c));
}

bool valid_packing(Criterion& c, const PointSet& P, const Packing& pack,
                   const std::string& what) {
  const VerifyReport rep = verify_packing(P, pack, true, false);
  if (!rep.valid)
    c.expect(false, what + ": " + rep.problems.front());
  return rep.valid;
}

int hull_edge_count(const PlaneContext& ctx, const Matching& M) {
  return static_cast<int>((ctx.mask_of(M) & ctx.hull_mask()).count());
}

int ceil_log2(int n) {
  int k = 0;
  while ((1 << k) < n) ++k;
  return k;
}

PointSet shared_red_fixture() {
  PointSet P;
  const std::int64_t c[14][2] = {
      {0, 0},        {-10000, -50}, {-10100, 31},  {-10200, -23},
      {-10300, 61},  {-10400, 7},   {-10500, 79},  {10000, 40},
      {10100, -70},  {10200, 91},   {10300, -100}, {10400, 23},
      {10500, -41},  {10600, 97}};
  for (const auto& q : c) P.points.emplace_back(q[0], q[1]);
  return P;
}

std::string slurp(const fs::path& p) {
  return detail::read_file(p.string());
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const fs::path work = fs::temp_directory_path() / "matchpack_acceptance";
  fs::create_directories(work);

  run(1, "convex tightness: pack_convex = max_packing = n/2 for n in 4..12",
      [](Criterion& c) {
        for (int n : {4, 6, 8, 10, 12}) {
          const PointSet P = gen_convex(n, 1);
          const Packing pack = pack_convex(P);
          c.expect(pack.size() == n / 2,
                   "pack_convex size at n=" + std::to_string(n));
          valid_packing(c, P, pack, "pack_convex n=" + std::to_string(n));
          const OracleReport rep = max_packing(P);
          c.expect(rep.value == n / 2,
                   "max_packing(convex " + std::to_string(n) + ") = " +
                       rep.value.str() + ", expected " + std::to_string(n / 2));
        }
      });
  if (!results.empty() && results.back().seconds > 60)
    results.back().failures.push_back("runtime exceeded 60 s");

  run(2, "wheel tightness: pack_wheel = n/2 - 1; oracle agrees for n <= 10",
      [](Criterion& c) {
        for (int n : {6, 8, 10, 12}) {
          const PointSet P = gen_regular_wheel(n);
          const Packing pack = pack_wheel(P);
          c.expect(pack.size() == n / 2 - 1,
                   "pack_wheel size at n=" + std::to_string(n));
          valid_packing(c, P, pack, "pack_wheel n=" + std::to_string(n));
          if (n <= 10) {
            const OracleReport rep = max_packing(P);
            c.expect(rep.value == n / 2 - 1,
                     "max_packing(wheel " + std::to_string(n) + ") = " +
                         rep.value.str());
          }
        }
      });

  run(3, "wheel variation n=12: max packing <= ceil(n/3); every plane "
         "matching uses >= 2 hull edges",
      [](Criterion& c) {
        const PointSet P = gen_wheel_variation(12);
        const OracleReport rep = max_packing(P);
        c.expect(rep.value <= 4, "max_packing = " + rep.value.str() + " > 4");
        const PlaneContext ctx(P);
        for (const Matching& M : enumerate_plane_matchings(P))
          c.expect(hull_edge_count(ctx, M) >= 2,
                   "plane matching with fewer than 2 hull edges");
      });

  run(4, "convex n in 4..12: every plane matching uses >= 2 hull edges",
      [](Criterion& c) {
        for (int n : {4, 6, 8, 10, 12}) {
          const PointSet P = gen_convex(n, 2);
          const PlaneContext ctx(P);
          for (const Matching& M : enumerate_plane_matchings(P))
            c.expect(hull_edge_count(ctx, M) >= 2,
                     "n=" + std::to_string(n) +
                         ": plane matching with fewer than 2 hull edges");
        }
      });

  run(5, "three matchings on 50 seeds per n in {8..16}; all cases exercised",
      [](Criterion& c) {
        std::set<ThreeCase> seen;
        for (int n : {8, 10, 12, 14, 16}) {
          for (std::uint64_t seed = 1; seed <= 50; ++seed) {
            const PointSet P = gen_random(n, seed);
            ThreeInfo info;
            const Packing pack = pack_three(P, &info);
            seen.insert(info.kind);
            if (pack.size() != 3) {
              c.expect(false, "pack_three returned " +
                                  std::to_string(pack.size()) + " matchings");
              continue;
            }
            valid_packing(c, P, pack,
                          "pack_three n=" + std::to_string(n) + " seed=" +
                              std::to_string(seed));
          }
        }
        {
          PointSet P = shared_red_fixture();
          ThreeInfo info;
          const Packing pack = pack_three(P, &info);
          valid_packing(c, P, pack, "shared-red fixture");
          c.expect(info.kind == ThreeCase::SharedRed,
                   "fixture did not trigger the shared-red subcase");
          seen.insert(info.kind);
          for (Point& p : P.points) {
            p.x = -p.x;
            p.refresh();
          }
          const Packing pack2 = pack_three(P, &info);
          valid_packing(c, P, pack2, "shared-blue fixture");
          c.expect(info.kind == ThreeCase::SharedBlue,
                   "fixture did not trigger the shared-blue subcase");
          seen.insert(info.kind);
        }
        c.expect(seen.count(ThreeCase::FourK) == 1, "4k parity case not seen");
        c.expect(seen.count(ThreeCase::InteriorCross) == 1,
                 "4k+2 interior case not seen");
        c.expect(seen.count(ThreeCase::SharedRed) == 1 &&
                     seen.count(ThreeCase::SharedBlue) == 1,
                 "shared-endpoint subcase not seen");
      });

  run(6, "log-n packing at n in {16,64,256,1024}; halving-tree invariants to n=4096; "
         "n=1024 under 10 s",
      [](Criterion& c) {
        for (int n = 2; n <= 4096; n += 2) {
          const PackTree t = build_pack_tree(n);
          int max_leaf = 0;
          for (const PackTreeNode& u : t.nodes) {
            if (u.is_leaf())
              max_leaf = std::max(max_leaf, u.level);
            else {
              const int lm = t.nodes[static_cast<std::size_t>(u.left)].m;
              const int rm = t.nodes[static_cast<std::size_t>(u.right)].m;
              if (lm + rm != u.m || (u.m % 4 != 0 && std::abs(lm - rm) != 2) ||
                  (u.m % 4 == 0 && lm != rm)) {
                c.expect(false, "tree split rule violated at n=" + std::to_string(n));
                break;
              }
            }
          }
          for (const auto& level : t.levels()) {
            int lo = 1 << 30, hi = 0;
            for (int id : level) {
              lo = std::min(lo, t.nodes[static_cast<std::size_t>(id)].m);
              hi = std::max(hi, t.nodes[static_cast<std::size_t>(id)].m);
            }
            if (hi - lo > 2) {
              c.expect(false, "level spread > 2 at n=" + std::to_string(n));
              break;
            }
          }
          if (max_leaf - t.min_leaf_depth > 1)
            c.expect(false, "leaves outside last two levels at n=" +
                                std::to_string(n));
          if (t.min_leaf_depth < ceil_log2(n) - 2)
            c.expect(false, "L below the bound at n=" + std::to_string(n));
        }
        for (int n : {16, 64, 256, 1024}) {
          const PointSet P = gen_random(n, 1000 + static_cast<unsigned>(n));
          const auto t0 = std::chrono::steady_clock::now();
          const Packing pack = pack_logn(P);
          const double secs =
              std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                  .count();
          c.expect(pack.size() >= ceil_log2(n) - 2,
                   "pack_logn too small at n=" + std::to_string(n));
          valid_packing(c, P, pack, "pack_logn n=" + std::to_string(n));
          if (n == 1024)
            c.expect(secs < 10.0, "pack_logn(1024) took " +
                                      std::to_string(secs) + " s");
          // per-level blocks partition the points into x-separated runs
          const PackTree tree = build_pack_tree(n);
          for (const auto& level : tree.levels()) {
            bool internal_level = true;
            int covered = 0;
            std::vector<std::pair<int, int>> spans;
            for (int id : level) {
              const PackTreeNode& u = tree.nodes[static_cast<std::size_t>(id)];
              if (u.is_leaf()) internal_level = false;
              covered += u.leaf_hi - u.leaf_lo;
              spans.emplace_back(u.leaf_lo, u.leaf_hi);
            }
            if (!internal_level) break;
            std::sort(spans.begin(), spans.end());
            bool contiguous = covered == n;
            for (std::size_t i = 1; i < spans.size(); ++i)
              if (spans[i - 1].second != spans[i].first) contiguous = false;
            c.expect(contiguous,
                     "level blocks do not partition at n=" + std::to_string(n));
          }
        }
      });

  run(7, "power-of-two packing: >= log2(n) matchings at n in {8,16,32,64}",
      [](Criterion& c) {
        for (int n : {8, 16, 32, 64}) {
          const PointSet P = gen_random(n, 31 + static_cast<unsigned>(n));
          const Packing pack = pack_power_of_two(P);
          c.expect(pack.size() >= ceil_log2(n),
                   "pack_power_of_two size at n=" + std::to_string(n));
          valid_packing(c, P, pack, "pow2 n=" + std::to_string(n));
        }
      });

  run(8, "counting: double factorial vs recurrence to n=40; convex plane "
         "counts are Catalan; random counts dominate them",
      [](Criterion& c) {
        for (int n = 2; n <= 40; n += 2) count_abstract_matchings(n);
        const std::int64_t expected[] = {2, 5, 14, 42, 132};
        int at = 0;
        for (int n : {4, 6, 8, 10, 12}) {
          const auto count = enumerate_plane_matchings(gen_convex(n, 3)).size();
          c.expect(static_cast<std::int64_t>(count) == expected[at],
                   "convex n=" + std::to_string(n) + " count " +
                       std::to_string(count));
          for (std::uint64_t seed : {4ULL, 9ULL}) {
            const auto rc =
                enumerate_plane_matchings(gen_random(n, seed)).size();
            c.expect(static_cast<std::int64_t>(rc) >= expected[at],
                     "random n=" + std::to_string(n) + " count below Catalan");
          }
          ++at;
        }
      });

  run(9, "non-crossing: convex maximum is exactly 2; random in [2,5]; "
         "matching unions decompose into even cycles",
      [](Criterion& c) {
        for (int n : {4, 6, 8, 10}) {
          const OracleReport rep = max_noncrossing_packing(gen_convex(n, 5));
          c.expect(rep.value == 2, "convex n=" + std::to_string(n) +
                                       " noncrossing max = " + rep.value.str());
        }
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
          const PointSet P = gen_random(8, seed);
          const OracleReport rep = max_noncrossing_packing(P);
          c.expect(rep.value >= 2 && rep.value <= 5,
                   "random noncrossing max out of [2,5]");
        }
        std::mt19937_64 rng(17);
        int checked = 0;
        for (std::uint64_t seed = 1; checked < 60; ++seed) {
          const PointSet P = gen_random(8, seed);
          const auto planes = enumerate_plane_matchings(P);
          for (int t = 0; t < 4; ++t) {
            const Matching& a = planes[rng() % planes.size()];
            const Matching& b = planes[rng() % planes.size()];
            bool disjoint = true;
            for (const Edge& e : a.edges)
              if (b.contains(e)) disjoint = false;
            if (!disjoint) continue;
            ++checked;
            for (const Cycle& cyc : union_cycles(a, b).cycles)
              c.expect(cyc.size() % 2 == 0 && cyc.size() >= 4,
                       "odd or short alternating cycle");
          }
        }
      });

  run(10, "persistency: colored-survival on 100 instances; convex pmp = 2; "
          "nested triangles pmp >= 3; bipartite kill set works; random "
          "sub-critical removals never kill K_n",
      [](Criterion& c) {
        std::mt19937_64 rng(99);
        int done = 0;
        for (std::uint64_t seed = 1; done < 100; ++seed) {
          for (int n : {6, 8, 10}) {
            const PointSet P = gen_random(n, seed * 3 + static_cast<unsigned>(n));
            const auto planes = enumerate_plane_matchings(P);
            const Matching& M = planes[rng() % planes.size()];
            const Matching M2 = survive_plane_matching_removal(P, M);
            bool ok = is_plane_matching(P, M2);
            for (const Edge& e : M2.edges)
              if (M.contains(e)) ok = false;
            c.expect(ok, "survival failed at n=" + std::to_string(n));
            ++done;
          }
        }
        for (int n : {4, 6, 8})
          c.expect(pmp_exact(gen_convex(n, 6)).value == 2,
                   "convex pmp at n=" + std::to_string(n));
        c.expect(pmp_exact(gen_nested_triangles(2)).value >= 3,
                 "nested-triangle pmp below 3");
        for (int n : {6, 10}) {
          AbstractGraph g = AbstractGraph::complete(n);
          for (const Matching& M : bipartite_kill_set(n)) g.remove_matching(M);
          c.expect(!has_perfect_matching(g),
                   "kill set left a perfect matching at n=" + std::to_string(n));
          const auto fac = one_factorize_kn(n);
          for (int trial = 0; trial < 200; ++trial) {
            const int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(n / 2 - 1));
            std::set<int> pick;
            while (static_cast<int>(pick.size()) < k)
              pick.insert(static_cast<int>(rng() % fac.size()));
            AbstractGraph h = AbstractGraph::complete(n);
            for (int id : pick) h.remove_matching(fac[static_cast<std::size_t>(id)]);
            c.expect(has_perfect_matching(h),
                     "removing k < n/2 matchings killed K_" + std::to_string(n));
          }
        }
      });

  run(11, "bichromatic: three RB algorithms plane-perfect on 100 instances "
          "each; exact minimum matches brute force at k <= 6; tangent "
          "matching avoids the crossing tangents",
      [](Criterion& c) {
        auto random_pair = [](int k, std::uint64_t seed, bool separated) {
          std::mt19937_64 rng(seed);
          PointSet P;
          std::vector<int> red, blue;
          while (true) {
            P.points.clear();
            for (int i = 0; i < 2 * k; ++i) {
              std::int64_t x = static_cast<std::int64_t>(rng() % 100000);
              if (separated)
                x = i < k ? -x - 10 : x + 10;
              else
                x -= 50000;
              P.points.emplace_back(
                  x, static_cast<std::int64_t>(rng() % 200000) - 100000);
            }
            if (in_general_position(P)) break;
          }
          red.clear();
          blue.clear();
          for (int i = 0; i < k; ++i) red.push_back(i);
          for (int i = k; i < 2 * k; ++i) blue.push_back(i);
          return std::tuple{P, red, blue};
        };
        auto check_rb = [&](Criterion& cc, const PointSet& P,
                            const std::vector<int>& red, const EdgeList& edges,
                            const char* algo) {
          bool ok = edges.size() == red.size() && is_plane_edges(P, edges);
          std::set<int> seen;
          for (const Edge& e : edges) {
            const bool a_red = e.a < static_cast<int>(red.size());
            const bool b_red = e.b < static_cast<int>(red.size());
            if (a_red == b_red) ok = false;
            seen.insert(e.a);
            seen.insert(e.b);
          }
          if (seen.size() != 2 * red.size()) ok = false;
          cc.expect(ok, std::string(algo) + " produced a bad matching");
        };
        for (int t = 0; t < 100; ++t) {
          const int k = 2 + t % 31;  // sizes 2..32 per side
          {
            auto [P, red, blue] = random_pair(k, 100 + t, false);
            check_rb(c, P, red, min_rb_matching(P, red, blue).edges, "min");
          }
          {
            auto [P, red, blue] = random_pair(k, 300 + t, false);
            check_rb(c, P, red, cut_rb_matching(P, red, blue), "cut");
          }
          {
            auto [P, red, blue] = random_pair(k, 500 + t, true);
            check_rb(c, P, red, tangent_rb_matching(P, red, blue), "tangent");
          }
        }
        for (int t = 0; t < 30; ++t) {
          const int k = 2 + t % 5;
          auto [P, red, blue] = random_pair(k, 700 + t, false);
          const RbResult res = min_rb_matching(P, red, blue);
          std::vector<int> perm(static_cast<std::size_t>(k));
          std::iota(perm.begin(), perm.end(), 0);
          double best = 1e300;
          do {
            double total = 0;
            for (int i = 0; i < k; ++i)
              total += dist(P[red[static_cast<std::size_t>(i)]],
                            P[blue[static_cast<std::size_t>(
                                perm[static_cast<std::size_t>(i)])]]);
            best = std::min(best, total);
          } while (std::next_permutation(perm.begin(), perm.end()));
          const double got = edges_length(P, res.edges);
          c.expect(std::abs(got - best) <= 1e-9 * (1 + best),
                   "exact minimum mismatch vs permutation brute force");
        }
        for (int n : {10, 14}) {
          for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            const PointSet P = gen_random(n, seed);
            ThreeInfo info;
            const Packing pack = pack_three(P, &info);
            c.expect(info.kind != ThreeCase::FourK,
                     "expected a 4k+2 instance");
            const Matching& m3 = pack.matchings[2];
            c.expect(!m3.contains(info.tangent1) && !m3.contains(info.tangent2),
                     "tangent matching used a crossing-tangent edge");
          }
        }
      });

  run(12, "determinism: CLI round trips and SVG goldens byte-stable",
      [&](Criterion& c) {
        if (cli.empty()) {
          c.expect(false, "CLI binary path not supplied (argv[1])");
          return;
        }
        auto sh = [&](const std::string& cmd) {
          const int rc = std::system((cmd + " >/dev/null 2>&1").c_str());
          return rc == 0;
        };
        const std::string d = work.string();
        c.expect(sh(cli + " generate --family wheel --n 8 --out " + d + "/a.json"),
                 "generate run 1");
        c.expect(sh(cli + " generate --family wheel --n 8 --out " + d + "/b.json"),
                 "generate run 2");
        c.expect(sh(cli + " pack --in " + d + "/a.json --method wheel --out " +
                    d + "/ap.json"),
                 "pack run 1");
        c.expect(sh(cli + " pack --in " + d + "/b.json --method wheel --out " +
                    d + "/bp.json"),
                 "pack run 2");
        c.expect(sh(cli + " render --points " + d + "/a.json --packing " + d +
                    "/ap.json --out " + d + "/a.svg"),
                 "render run 1");
        c.expect(sh(cli + " render --points " + d + "/b.json --packing " + d +
                    "/bp.json --out " + d + "/b.svg"),
                 "render run 2");
        c.expect(slurp(work / "a.json") == slurp(work / "b.json"),
                 "point files differ between runs");
        c.expect(slurp(work / "ap.json") == slurp(work / "bp.json"),
                 "packing files differ between runs");
        c.expect(slurp(work / "a.svg") == slurp(work / "b.svg"),
                 "SVG files differ between runs");
        const PointSet P = load_pointset((work / "a.json").string());
        const PointSet W = gen_regular_wheel(8);
        bool same = P.size() == W.size();
        for (int i = 0; same && i < P.size(); ++i) same = P[i] == W[i];
        c.expect(same, "CLI round trip lost coordinates");
      });

  int failures = 0;
  for (const Criterion& c : results) {
    const bool ok = c.failures.empty();
    if (!ok) ++failures;
    std::printf("%s  criterion %2d: %s  (%.1fs)\n", ok ? "PASS" : "FAIL", c.id,
                c.title.c_str(), c.seconds);
    for (const std::string& f : c.failures)
      std::printf("      - %s\n", f.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failures,
              results.size());
  return failures == 0 ? 0 : 1;
}
