#pragma once

// Orchestration of the six-condition certification criterion: build the
// effective subgroup, the permitted residue-degree set S and the
// ramification lcm h, evaluate conditions i)-vi) (i-iii cited from the
// facts registry, iv-vi computed), and emit a CriterionReport.

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "torcrit/cusps.hpp"
#include "torcrit/curves.hpp"
#include "torcrit/facts.hpp"

namespace torcrit {

enum class SetupMode { Corollary, TheoremAbelian, TheoremExplicit };

std::string to_string(SetupMode m);

// Ramification/residue data for one prime of K above the base prime,
// with e and f taken over Q.
struct PrimeDatum {
    i64 e_abs = 1;
    i64 f_abs = 1;

    bool operator==(const PrimeDatum&) const = default;
};

struct BaseFieldSetup {
    AbelianFieldSpec L;  // base field, must sit inside Q(zeta_m)
    i64 p = 2;           // rational prime under the chosen prime of L
    SetupMode mode = SetupMode::Corollary;

    i64 degree = 1;                      // Corollary: d = [K:L] for all K considered
    std::optional<AbelianFieldSpec> K;   // TheoremAbelian
    std::vector<PrimeDatum> prime_data;  // TheoremExplicit: all primes of K over p0
    std::optional<i64> explicit_e_max;   // TheoremExplicit
};

BaseFieldSetup corollary_setup(AbelianFieldSpec L, i64 p, i64 degree);
BaseFieldSetup theorem_setup(AbelianFieldSpec L, i64 p, AbelianFieldSpec K);
BaseFieldSetup explicit_setup(AbelianFieldSpec L, i64 p, std::vector<PrimeDatum> prime_data,
                              i64 e_max);

// Strips the p-part: C_m (+) C_n -> C_{m/p^v} (+) C_{n/p^v}.
TorsionTarget prime_to_p_part(const TorsionTarget& target, i64 p);

// The subgroup whose reduction mod p stays injective: the whole target when
// p exceeds the ramification threshold plus one, its prime-to-p part
// otherwise.
TorsionTarget effective_subgroup(const TorsionTarget& target, const BaseFieldSetup& setup);

// The set S of divisors of possible relative residue degrees [k(p):k(p0)]
// over the primes of K above p0. Requires L <= Q(zeta_m).
std::set<i64> allowed_residue_degrees(const BaseFieldSetup& setup, i64 m);

enum class ConditionStatus { ComputedPass, ComputedFail, CitedPass, MissingFact, Inconclusive };
enum class Verdict { Certified, NotCertified };

std::string to_string(ConditionStatus s);
std::string to_string(Verdict v);

struct ConditionRecord {
    std::string id;  // "i" .. "vi"
    ConditionStatus status = ConditionStatus::MissingFact;
    std::string evidence;
    std::string citation;  // empty unless the condition is cited

    bool operator==(const ConditionRecord&) const = default;
};

struct CriterionReport {
    TorsionTarget target;
    TorsionTarget effective;     // A'
    std::string base_name;       // display name of L
    i64 p = 2;
    std::string mode;
    i64 degree = 1;              // d
    i64 norm_p0 = 2;             // q = p^{f_L}
    std::string quotient_label;  // X'
    std::string niceness_citation;
    std::vector<i64> allowed_degrees;  // S, sorted
    i64 ramification_lcm = 1;          // h
    std::vector<ConditionRecord> conditions;
    Verdict verdict = Verdict::NotCertified;

    bool operator==(const CriterionReport&) const = default;
};

// Which cusp data to use: the identity quotient of X1(m,n), or a
// registry-supplied quotient curve.
struct QuotientRef {
    bool auto_from_target = true;
    std::string label;  // facts key when not auto
};

inline QuotientRef auto_quotient() { return QuotientRef{}; }
inline QuotientRef named_quotient(std::string label) { return {false, std::move(label)}; }

struct EvalOptions {
    i64 census_budget = kDefaultCensusBudget;
    int threads = 1;
};

// Runs the full criterion. Missing registry facts surface as per-condition
// MissingFact records, never as errors.
CriterionReport evaluate(const TorsionTarget& target, const BaseFieldSetup& setup,
                         const QuotientRef& quotient, const FactsRegistry& facts,
                         const EvalOptions& options = {});

// Plumbing: evaluates the Corollary setup at every prime p <= p_bound.
std::vector<std::pair<i64, CriterionReport>> scan_primes(const TorsionTarget& target,
                                                         const AbelianFieldSpec& L, i64 degree,
                                                         const QuotientRef& quotient,
                                                         const FactsRegistry& facts,
                                                         i64 p_bound,
                                                         const EvalOptions& options = {});

}  // namespace torcrit
