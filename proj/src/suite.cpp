#include <chrono>
#include <stdexcept>

#include "affcat/verify.hpp"

namespace affcat {

Report run_suite(const std::string& name, const SuiteParams& p) {
  using Clock = std::chrono::steady_clock;
  auto start = Clock::now();
  Report rep;
  if (name == "weyl") rep = verify_weyl(p);
  else if (name == "hecke") rep = verify_hecke(p);
  else if (name == "schur") rep = verify_schur(p);
  else if (name == "soergel") rep = verify_soergel(p);
  else if (name == "rouquier") rep = verify_rouquier(p);
  else if (name == "singular") rep = verify_singular(p);
  else if (name == "all") {
    // Check the range up front so that a bad (r, n) fails before the long
    // suites run.
    require_schur_range(p);
    rep = Report("all");
    for (const char* s : {"weyl", "hecke", "schur", "soergel", "rouquier", "singular"})
      rep.append(run_suite(s, p));
  } else {
    throw std::invalid_argument("unknown suite '" + name +
                                "' (expected weyl, hecke, schur, soergel, rouquier, singular or all)");
  }
  rep.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return rep;
}

}  // namespace affcat
