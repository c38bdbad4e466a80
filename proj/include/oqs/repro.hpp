#pragma once

// Reproduction scenarios and the acceptance suite shared by the CLI
// (`repro --case/--suite`) and the standalone acceptance binary.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace oqs::repro {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double measured = 0.0;   // worst observed deviation (smaller is better)
  double expected = 0.0;   // target for the measured value
  double tolerance = 0.0;  // pinned acceptance tolerance
  std::string detail;      // sub-check values
};

// Runs all acceptance criteria (11 rows).
std::vector<CriterionResult> acceptance_suite();

nlohmann::json criteria_report(const std::vector<CriterionResult>& rows);

struct CaseOutput {
  std::vector<std::string> columns;                // empty for JSON-only cases
  std::vector<std::vector<std::string>> rows;
  nlohmann::json summary;
};

std::vector<std::string> case_names();
// Named cases: "werner-concurrence", "two-atom-asymptotic".
// beta applies to the two-atom case (+infinity allowed).
CaseOutput run_case(const std::string& name, double beta);

}  // namespace oqs::repro
