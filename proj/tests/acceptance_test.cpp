// Acceptance gate: one test per criterion, each printing a single
// "criterion N: PASS/FAIL" line.  Criteria 2 and 8 document genuine
// discrepancies (see README, "Known discrepancies") and are expected to fail.
#include <cstdio>

#include <gtest/gtest.h>

#include "oddcore/suites.hpp"

namespace oddcore {
namespace {

void run_criterion(int number, const char* label,
                   void (*check)(VerificationReport&)) {
  VerificationReport rep;
  rep.suite = label;
  check(rep);
  bool ok = rep.all_passed();
  std::printf("criterion %d: %s (%d passed, %d failed)\n", number,
              ok ? "PASS" : "FAIL", rep.passed, rep.failed);
  std::fflush(stdout);
  EXPECT_TRUE(ok) << label << ": " << rep.failed << " record(s) failed";
}

TEST(Acceptance, Criterion1ClosedFormFormulas) {
  run_criterion(1, "formulas", check_formulas);
}

TEST(Acceptance, Criterion2SolverValuesOnSharedCliqueFamily) {
  run_criterion(2, "solver-values", check_tstar_solver_values);
}

TEST(Acceptance, Criterion3LargeRegimeDecomposition) {
  run_criterion(3, "regime-decomposition", check_regime_decomposition);
}

TEST(Acceptance, Criterion4PlantedRecovery) {
  run_criterion(4, "planted-recovery", check_planted_recovery);
}

TEST(Acceptance, Criterion5SolverOracleAgreement) {
  run_criterion(5, "solver-oracles", check_solver_oracles);
}

TEST(Acceptance, Criterion6CoreMachinery) {
  run_criterion(6, "core-machinery", check_core_machinery);
}

TEST(Acceptance, Criterion7StructuralProperties) {
  run_criterion(7, "structural-properties", check_structural_properties);
}

TEST(Acceptance, Criterion8TinyExtremalSearch) {
  run_criterion(8, "tiny-extremal", check_tiny_extremal);
}

}  // namespace
}  // namespace oddcore
