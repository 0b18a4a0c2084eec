#pragma once

// Elliptic curves over small finite fields: exhaustive enumeration with
// point counting and group structure, the admissible-order classification
// of curve orders by trace of Frobenius, and the two finite-field checks
// of the criterion engine.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "torcrit/gf.hpp"

namespace torcrit {

// Long Weierstrass equation y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
struct WeierstrassCurve {
    Fe a1 = 0, a2 = 0, a3 = 0, a4 = 0, a6 = 0;

    bool operator==(const WeierstrassCurve&) const = default;
};

Fe discriminant(const FiniteField& F, const WeierstrassCurve& E);

struct Point {
    Fe x = 0, y = 0;
    bool infinity = true;

    bool operator==(const Point&) const = default;
};

Point add_points(const FiniteField& F, const WeierstrassCurve& E, const Point& a,
                 const Point& b);
Point scalar_mul(const FiniteField& F, const WeierstrassCurve& E, i64 n, const Point& a);

// #E(F_q), including the point at infinity. Asserts the Hasse bound.
i64 count_points(const FiniteField& F, const WeierstrassCurve& E);

// All points of E(F_q).
std::vector<Point> rational_points(const FiniteField& F, const WeierstrassCurve& E);

// Invariant factors of E(F_q): d1 | d2, d1 * d2 = #E(F_q), d1 | q - 1.
struct CurveGroupStructure {
    i64 d1 = 1, d2 = 1;

    bool operator==(const CurveGroupStructure&) const = default;
};

CurveGroupStructure group_structure(const FiniteField& F, const WeierstrassCurve& E);

// The target group C_m (+) C_n with m | n.
struct TorsionTarget {
    i64 m = 1, n = 1;

    i64 order() const { return m * n; }
    bool trivial() const { return m == 1 && n == 1; }
    bool operator==(const TorsionTarget&) const = default;
};

TorsionTarget make_torsion_target(i64 m, i64 n);
std::string group_name(const TorsionTarget& t);

// C_m (+) C_n embeds in C_d1 (+) C_d2 iff m | d1 and n | d2.
bool has_subgroup(const CurveGroupStructure& s, const TorsionTarget& target);

// Enumeration families covering every isomorphism class (duplicates are
// possible and harmless). Candidates are indexed deterministically; a
// candidate may still be singular and must be filtered by discriminant.
i64 curve_candidate_count(const FiniteField& F);
WeierstrassCurve curve_candidate(const FiniteField& F, i64 index);

// All nonsingular members of the enumeration family, in index order.
// Refuses fields larger than `budget` elements.
std::vector<WeierstrassCurve> enumerate_curves(const FiniteField& F, i64 budget);

inline constexpr i64 kDefaultCensusBudget = 128;

struct CensusRecord {
    WeierstrassCurve curve;
    i64 n_points = 0;
    CurveGroupStructure structure;
};

// Point count and group structure of every curve in the enumeration family,
// in enumeration order regardless of thread count.
// only_order restricts the records (not the enumeration) to one point count.
std::vector<CensusRecord> census(const FiniteField& F, i64 budget = kDefaultCensusBudget,
                                 int threads = 1, std::optional<i64> only_order = {});

// Exact integer floor(sqrt(v)).
i64 isqrt_i64(i64 v);

// Whether some elliptic curve over F_q has exactly n_points points,
// by the trace-of-Frobenius classification. q = p^k.
bool is_admissible_order(i64 p, i64 k, i64 q, i64 n_points);

// The full set of realized point counts over F_q (q a prime power).
std::set<i64> admissible_orders(i64 q);

// Factors a prime power; domain error otherwise.
void split_prime_power(i64 q, i64& p, i64& k);

enum class ConditionIvOutcome { CertifiedByOrder, CertifiedByCensus, Failed, Inconclusive };

std::string to_string(ConditionIvOutcome o);

struct ConditionIvExponentReport {
    i64 exponent = 1;       // element of S
    i64 field_size = 0;     // q_base^exponent
    ConditionIvOutcome outcome = ConditionIvOutcome::Inconclusive;
    std::string evidence;
    std::optional<CensusRecord> witness;  // set when outcome == Failed
};

struct ConditionIvReport {
    bool passes = false;
    std::vector<ConditionIvExponentReport> exponents;
};

// Condition iv: for every i in S there is no elliptic curve over the field
// of q_base^i elements with a subgroup isomorphic to `target`. Certification
// is by order obstruction where possible, by exhaustive census when the
// field fits the budget, and Inconclusive otherwise (soundness over
// completeness: an Inconclusive exponent never certifies).
ConditionIvReport check_condition_iv(i64 q_base, const std::set<i64>& S,
                                     const TorsionTarget& target,
                                     i64 budget = kDefaultCensusBudget, int threads = 1);

// Condition v for one residue-field size: #target divides neither 3q nor 4q.
bool check_condition_v(i64 q_power, const TorsionTarget& target);

}  // namespace torcrit
