#pragma once

// Verification sweeps for every module.  Each suite returns a Report with
// one case per checked instance; the CLI `verify` command and the
// acceptance binary are thin wrappers around these.

#include <cstdint>
#include <string>

#include "affcat/report.hpp"

namespace affcat {

struct SuiteParams {
  int r = 3;
  int n = 4;
  int window = 0;       // 0: the per-relation default window
  int max_length = 4;   // KL length budget, braid word length for Rouquier
  int samples = 200;    // random samples for property checks
  int jobs = 1;
  std::uint64_t seed = 1;
};

// Throws std::invalid_argument unless 3 <= r < n.
void require_schur_range(const SuiteParams& p);

Report verify_weyl(const SuiteParams& p);
Report verify_hecke(const SuiteParams& p);

// Parts of the schur suite, exposed separately for the acceptance checks.
Report verify_schur_presentation(const SuiteParams& p);  // window and window + 2
Report verify_schur_sigma(const SuiteParams& p);
Report verify_schur_rho(const SuiteParams& p);
Report verify_schur_iota(const SuiteParams& p);
Report verify_schur(const SuiteParams& p);

Report verify_soergel(const SuiteParams& p);
Report verify_rouquier(const SuiteParams& p);
Report verify_singular(const SuiteParams& p);

// name in {weyl, hecke, schur, soergel, rouquier, singular, all}.
Report run_suite(const std::string& name, const SuiteParams& p);

}  // namespace affcat
