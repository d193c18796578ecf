#include <chrono>
#include <cstdio>
#include "goodinv/goodness.hpp"
int main() {
  using namespace goodinv;
  using clock = std::chrono::steady_clock;
  const char* dir = GOODINV_DEFAULT_CATALOG_DIR;
  NumericOptions opt;
  for (const std::string& name : primitive_catalog_names()) {
    auto t0 = clock::now();
    try {
      GroupPtr g = catalog_group(name, dir);
      AdmissibleFrame f = catalog_frame(g);
      std::vector<CycPoly> xg = graded_good_invariants(*g, f);
      GoodnessReport rep = check_goodness_graded(xg, g->degrees, f.norm_sq, opt);
      double s = std::chrono::duration<double>(clock::now() - t0).count();
      int nc = (int)rep.conditions.size();
      std::printf("%-4s goodness: %s  (%d conditions, jac residual %s) [%.2fs]\n",
                  name.c_str(), rep.pass ? "PASS" : "FAIL", nc,
                  rep.jacobian_residual.c_str(), s);
      if (!rep.pass) {
        for (auto& c : rep.conditions)
          if (!c.pass) {
            std::printf("  alpha=%d idx=(", c.alpha);
            for (int v : c.multi_index) std::printf("%d,", v);
            std::printf(") value=%s\n", c.value.to_string().c_str());
          }
        if (!rep.jacobian_ok) std::printf("  jacobian check failed\n");
      }
    } catch (const std::exception& e) {
      std::printf("%-4s ERROR: %s\n", name.c_str(), e.what());
    }
  }
  return 0;
}
