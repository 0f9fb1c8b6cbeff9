// Minimal library walkthrough: generate a point set, pack it, certify the
// result, and drop an SVG next to the binary.
#include <iostream>

#include "matchpack/matchpack.hpp"

int main() {
  using namespace matchpack;
  const PointSet P = gen_random(12, /*seed=*/7);

  AutoStrategy used{};
  const Packing pack = pack_auto(P, &used);
  std::cout << "packed " << pack.size() << " plane matchings via "
            << to_string(used) << "\n";

  const VerifyReport rep = verify_packing(P, pack, /*require_plane=*/true);
  std::cout << (rep.valid ? "verification: ok" : "verification: FAILED")
            << "\n";

  const OracleReport best = max_packing(P);
  std::cout << "exact maximum packing on this set: " << best.value.str()
            << "\n";

  detail::write_file("pack_demo.svg", render_svg(P, &pack));
  std::cout << "wrote pack_demo.svg\n";
  return rep.valid ? 0 : 1;
}
