#include "affcat/report.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

namespace affcat {

namespace {

// Witnesses may span several lines; reports keep one line per case.
std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

}  // namespace

void Report::add(const std::string& id, bool pass, const std::string& witness) {
  cases_.push_back({suite_, id, pass, witness, false});
}

void Report::add_observation(const std::string& id, bool pass, const std::string& witness) {
  cases_.push_back({suite_, id, pass, witness, true});
}

void Report::append(const Report& other) {
  cases_.insert(cases_.end(), other.cases_.begin(), other.cases_.end());
  seconds += other.seconds;
}

bool Report::ok() const { return failures() == 0; }

size_t Report::failures() const {
  return static_cast<size_t>(std::count_if(cases_.begin(), cases_.end(), [](const CaseResult& c) {
    return !c.pass && !c.observational;
  }));
}

std::vector<const CaseResult*> Report::sorted() const {
  std::vector<const CaseResult*> out;
  for (const auto& c : cases_) out.push_back(&c);
  std::stable_sort(out.begin(), out.end(), [](const CaseResult* a, const CaseResult* b) {
    return a->suite != b->suite ? a->suite < b->suite : a->id < b->id;
  });
  return out;
}

void Report::print(std::ostream& os) const {
  for (const CaseResult* c : sorted()) {
    os << c->suite << " " << c->id << " " << (c->pass ? "PASS" : "FAIL");
    if (c->observational) os << " (observation)";
    if (!c->witness.empty()) os << " " << one_line(c->witness);
    os << "\n";
  }
}

void Report::dump(std::ostream& os) const {
  for (const CaseResult* c : sorted()) {
    os << "suite=" << c->suite << " case=" << c->id << " status=" << (c->pass ? "pass" : "fail")
       << " observational=" << (c->observational ? 1 : 0);
    if (!c->witness.empty()) os << " witness=\"" << one_line(c->witness) << "\"";
    os << "\n";
  }
}

void run_cases(Report& report, const std::vector<std::function<CaseResult()>>& tasks, int jobs) {
  std::vector<CaseResult> results(tasks.size());
  auto run_one = [&](size_t k) {
    try {
      results[k] = tasks[k]();
    } catch (const std::exception& e) {
      results[k] = {report.suite(), "task-" + std::to_string(k), false,
                    std::string("exception: ") + e.what(), false};
    }
    if (results[k].suite.empty()) results[k].suite = report.suite();
  };
  if (jobs <= 1 || tasks.size() < 2) {
    for (size_t k = 0; k < tasks.size(); ++k) run_one(k);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    size_t nthreads = std::min(tasks.size(), static_cast<size_t>(jobs));
    for (size_t t = 0; t < nthreads; ++t)
      pool.emplace_back([&]() {
        for (size_t k = next++; k < tasks.size(); k = next++) run_one(k);
      });
    for (auto& th : pool) th.join();
  }
  for (auto& r : results) report.add(std::move(r));
}

}  // namespace affcat
