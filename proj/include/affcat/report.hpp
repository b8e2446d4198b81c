#pragma once

// Verification reports: one line per case, `SUITE CASE-ID PASS|FAIL [witness]`.

#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace affcat {

struct CaseResult {
  std::string suite;
  std::string id;
  bool pass = true;
  std::string witness;
  // Observational cases are reported but do not affect ok().
  bool observational = false;
};

class Report {
 public:
  Report() = default;
  explicit Report(std::string suite) : suite_(std::move(suite)) {}

  const std::string& suite() const { return suite_; }
  const std::vector<CaseResult>& cases() const { return cases_; }

  void add(const std::string& id, bool pass, const std::string& witness = "");
  void add_observation(const std::string& id, bool pass, const std::string& witness = "");
  void add(CaseResult c) { cases_.push_back(std::move(c)); }
  void append(const Report& other);

  bool ok() const;
  size_t failures() const;
  double seconds = 0;

  // Cases sorted by (suite, id); the sort is stable so repeated ids keep
  // their insertion order.
  void print(std::ostream& os) const;
  // key=value records, one per case, same order as print().
  void dump(std::ostream& os) const;

 private:
  std::vector<const CaseResult*> sorted() const;
  std::string suite_;
  std::vector<CaseResult> cases_;
};

// Runs independent cases on up to `jobs` threads and appends their results
// in task order.  A case that throws is recorded as a failure.
void run_cases(Report& report, const std::vector<std::function<CaseResult()>>& tasks, int jobs);

}  // namespace affcat
