#include <gtest/gtest.h>

#include <sstream>
#include <stdexcept>

#include "affcat/verify.hpp"

using namespace affcat;

TEST(Report, LinesAreSortedAndOnePerCase) {
  Report rep("demo");
  rep.add("b", true);
  rep.add("a", false, "first line\nsecond line");
  rep.add_observation("c", false, "noted");
  std::ostringstream os;
  rep.print(os);
  EXPECT_EQ(os.str(),
            "demo a FAIL first line second line\n"
            "demo b PASS\n"
            "demo c FAIL (observation) noted\n");
  EXPECT_EQ(rep.failures(), 1u);
  EXPECT_FALSE(rep.ok());
}

TEST(Report, DumpIsKeyValue) {
  Report rep("demo");
  rep.add("x", true);
  std::ostringstream os;
  rep.dump(os);
  EXPECT_EQ(os.str(), "suite=demo case=x status=pass observational=0\n");
}

TEST(Report, ObservationsDoNotFail) {
  Report rep("demo");
  rep.add_observation("o", false);
  EXPECT_TRUE(rep.ok());
}

TEST(RunCases, ThrowingTaskIsAFailureAndOrderIsKept) {
  for (int jobs : {1, 3}) {
    Report rep("demo");
    std::vector<std::function<CaseResult()>> tasks;
    for (int k = 0; k < 5; ++k)
      tasks.push_back([k]() -> CaseResult {
        if (k == 2) throw std::runtime_error("boom");
        return {"demo", "case" + std::to_string(k), true, "", false};
      });
    run_cases(rep, tasks, jobs);
    ASSERT_EQ(rep.cases().size(), 5u);
    EXPECT_EQ(rep.cases()[0].id, "case0");
    EXPECT_FALSE(rep.cases()[2].pass);
    EXPECT_NE(rep.cases()[2].witness.find("boom"), std::string::npos);
    EXPECT_EQ(rep.failures(), 1u);
  }
}

TEST(RunSuite, UnknownNameThrows) { EXPECT_THROW(run_suite("nope", SuiteParams{}), std::invalid_argument); }

TEST(RunSuite, RangeIsCheckedForSchurSideSuites) {
  SuiteParams p;
  p.r = 4;
  p.n = 4;
  EXPECT_THROW(run_suite("schur", p), std::invalid_argument);
  EXPECT_THROW(run_suite("singular", p), std::invalid_argument);
  EXPECT_THROW(run_suite("all", p), std::invalid_argument);
  try {
    run_suite("all", p);
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("3 <= r < n"), std::string::npos);
  }
}

TEST(RunSuite, NamedSuitesCarryTheirName) {
  SuiteParams p;
  p.samples = 20;
  for (const char* s : {"weyl", "hecke", "singular"}) {
    Report rep = run_suite(s, p);
    ASSERT_FALSE(rep.cases().empty()) << s;
    EXPECT_EQ(rep.cases().front().suite, s);
    EXPECT_TRUE(rep.ok()) << s;
  }
}

TEST(RunSuite, DeterministicForFixedSeed) {
  SuiteParams p;
  p.samples = 30;
  std::ostringstream a, b;
  run_suite("weyl", p).print(a);
  run_suite("weyl", p).print(b);
  EXPECT_EQ(a.str(), b.str());
}
