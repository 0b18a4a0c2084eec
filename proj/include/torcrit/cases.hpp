#pragma once

// The built-in catalog of case studies: every torsion group the criterion
// certifies as impossible over its stated family of fields, plus the
// companion cases that were settled by other methods and are listed as
// out of scope for this engine.

#include <string>
#include <vector>

#include "torcrit/criterion.hpp"

namespace torcrit {

struct CaseStudy {
    std::string label;        // sort key, e.g. "cubic/C55"
    std::string description;  // one-line statement of what is ruled out
    TorsionTarget target;
    BaseFieldSetup setup;
    QuotientRef quotient;
};

struct OutOfScopeCase {
    std::string label;
    std::string group;
    std::string method;  // why this engine does not decide it
};

// All criterion-decided cases, sorted by label.
std::vector<CaseStudy> builtin_case_studies();

// Cases settled by non-criterion arguments, sorted by label.
std::vector<OutOfScopeCase> out_of_scope_cases();

struct CaseResult {
    CaseStudy case_study;
    CriterionReport report;
};

struct ReproduceResult {
    std::vector<CaseResult> results;  // sorted by case label
    bool all_certified = false;
};

// Evaluates every built-in case against the given registry. Cases may run
// in parallel; the result order is always the label order.
ReproduceResult reproduce_cases(const FactsRegistry& facts, const EvalOptions& options = {});

}  // namespace torcrit
