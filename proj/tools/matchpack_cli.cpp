#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "matchpack/matchpack.hpp"

namespace {

using namespace matchpack;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

int cmd_generate(const std::string& family, int n, std::uint64_t seed,
                 const std::string& out) {
  PointSet P;
  if (family == "convex")
    P = gen_convex(n, seed);
  else if (family == "wheel")
    P = gen_regular_wheel(n);
  else if (family == "wheel-variation")
    P = gen_wheel_variation(n);
  else if (family == "random")
    P = gen_random(n, seed);
  else if (family == "nested-triangles")
    P = gen_nested_triangles(n);  // n counts triangles here, 3n points
  else
    throw CLI::ValidationError("--family", "unknown family " + family);
  save_pointset(P, out);
  std::cout << "wrote " << P.size() << " points to " << out << "\n";
  return 0;
}

int cmd_pack(const std::string& in, const std::string& method,
             const std::string& out) {
  const PointSet P = load_pointset(in);
  Packing pack;
  std::string how = method;
  if (method == "convex")
    pack = pack_convex(P);
  else if (method == "wheel")
    pack = pack_wheel(P);
  else if (method == "three")
    pack = pack_three(P);
  else if (method == "logn")
    pack = pack_logn(P);
  else if (method == "pow2")
    pack = pack_power_of_two(P);
  else if (method == "auto") {
    AutoStrategy used{};
    pack = pack_auto(P, &used);
    how = std::string("auto/") + to_string(used);
  } else {
    throw CLI::ValidationError("--method", "unknown method " + method);
  }
  const VerifyReport rep = verify_packing(P, pack, true, false);
  if (!rep.valid)
    throw std::logic_error("internal: produced packing failed verification: " +
                           rep.problems.front());
  if (!out.empty()) save_packing(pack, out);
  std::cout << "packed " << pack.size() << " plane matchings (" << how << ")"
            << (out.empty() ? "" : " -> " + out) << "\n";
  return 0;
}

int cmd_verify(const std::string& points, const std::string& packing,
               bool plane, bool noncrossing) {
  const PointSet P = load_pointset(points);
  const Packing pack = load_packing(packing);
  const VerifyReport rep = verify_packing(P, pack, plane, noncrossing);
  if (rep.valid) {
    std::cout << "valid: " << pack.size() << " matchings on " << P.size()
              << " points\n";
    return 0;
  }
  for (const std::string& p : rep.problems) std::cout << "violation: " << p << "\n";
  return kExitVerifyFailed;
}

int cmd_count(int n) {
  std::cout << count_abstract_matchings(n).str() << "\n";
  return 0;
}

int cmd_oracle(const std::string& points, const std::string& kind, int budget,
               const std::string& witness_out) {
  const PointSet P = load_pointset(points);
  const OracleLimits limits = OracleLimits::from_env().with_budget(budget);
  OracleReport rep;
  if (kind == "count")
    rep = count_plane_matchings(P, limits);
  else if (kind == "max-packing")
    rep = max_packing(P, limits);
  else if (kind == "max-noncrossing")
    rep = max_noncrossing_packing(P, limits);
  else if (kind == "pmp")
    rep = pmp_exact(P, limits);
  else
    throw CLI::ValidationError("--kind", "unknown oracle kind " + kind);
  nlohmann::json j{{"kind", rep.kind},
                   {"value", rep.value.str()},
                   {"witness_size", rep.witness.size()},
                   {"nodes_explored", rep.nodes_explored},
                   {"time_ms", rep.time_ms}};
  std::cout << j.dump(2) << "\n";
  if (!witness_out.empty() && rep.witness.size() > 0)
    save_packing(rep.witness, witness_out);
  return 0;
}

int cmd_render(const std::string& points, const std::string& packing,
               const std::string& out) {
  const PointSet P = load_pointset(points);
  std::string svg;
  if (packing.empty()) {
    svg = render_svg(P);
  } else {
    const Packing pack = load_packing(packing);
    svg = render_svg(P, &pack);
  }
  detail::write_file(out, svg);
  std::cout << "wrote " << out << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matchpack: pack, verify, and certify plane perfect matchings"};
  app.require_subcommand(1);

  std::string family = "random", gen_out;
  int gen_n = 8;
  std::uint64_t seed = 1;
  auto* gen = app.add_subcommand("generate", "generate a point-set family");
  gen->add_option("--family", family,
                  "convex|wheel|wheel-variation|random|nested-triangles");
  gen->add_option("--n", gen_n,
                  "point count (nested-triangles: triangle count, 3n points)")
      ->required();
  gen->add_option("--seed", seed, "RNG seed (convex/random)");
  gen->add_option("--out", gen_out, "output JSON path")->required();

  std::string pack_in, method = "auto", pack_out;
  auto* pk = app.add_subcommand("pack", "construct a packing of plane matchings");
  pk->add_option("--in", pack_in, "input PointSet JSON")->required();
  pk->add_option("--method", method, "convex|wheel|three|logn|pow2|auto");
  pk->add_option("--out", pack_out, "output Packing JSON");

  std::string ver_points, ver_packing;
  bool ver_plane = false, ver_noncross = false;
  auto* ver = app.add_subcommand("verify", "verify a packing exactly");
  ver->add_option("--points", ver_points)->required();
  ver->add_option("--packing", ver_packing)->required();
  ver->add_flag("--plane", ver_plane, "require each matching crossing-free");
  ver->add_flag("--noncrossing", ver_noncross,
                "require pairwise non-crossing matchings");

  int count_n = 0;
  auto* cnt = app.add_subcommand("count", "perfect matchings of K_n (exact)");
  cnt->add_option("--n", count_n)->required();

  std::string ora_points, ora_kind = "count", ora_witness;
  int budget = 0;
  auto* ora = app.add_subcommand("oracle", "exact brute-force certification");
  ora->add_option("--points", ora_points)->required();
  ora->add_option("--kind", ora_kind, "count|max-packing|max-noncrossing|pmp");
  ora->add_option("--budget", budget, "raise the search caps up to this n");
  ora->add_option("--witness", ora_witness, "write witness packing here");

  std::string ren_points, ren_packing, ren_out;
  auto* ren = app.add_subcommand("render", "deterministic SVG figure");
  ren->add_option("--points", ren_points)->required();
  ren->add_option("--packing", ren_packing);
  ren->add_option("--out", ren_out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (gen->parsed()) return cmd_generate(family, gen_n, seed, gen_out);
    if (pk->parsed()) return cmd_pack(pack_in, method, pack_out);
    if (ver->parsed())
      return cmd_verify(ver_points, ver_packing, ver_plane, ver_noncross);
    if (cnt->parsed()) return cmd_count(count_n);
    if (ora->parsed())
      return cmd_oracle(ora_points, ora_kind, budget, ora_witness);
    if (ren->parsed()) return cmd_render(ren_points, ren_packing, ren_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
