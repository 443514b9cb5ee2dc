#pragma once
// The acceptance gate: every number the library promises, measured in one
// place with its tolerance pinned next to it. The report runs each check,
// keeps the measured values, and finishes with a mutation probe that
// deliberately breaks the flow to confirm the checks have teeth.

#include <string>
#include <vector>

namespace spin7 {

struct CriterionResult {
    int id = 0;
    std::string label;
    bool pass = false;
    std::string detail;  // measured values, formatted
};

std::vector<CriterionResult> run_acceptance();

// one criterion by id (1..12), for targeted verification runs
CriterionResult run_criterion(int id);

struct MutationCheck {
    double gradient_mismatch;  // mutated flow no longer matches grad W
    double ricci_residual;     // mutated flow is visibly not Ricci-flat
    bool detected;
};

MutationCheck run_mutation_check();

// full dossier as a JSON string: criteria, measured values, mutation check
std::string acceptance_report_json();

}  // namespace spin7
