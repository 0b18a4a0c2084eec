#pragma once

// Fields of definition of the cusps of X1(m,n), one component record per
// divisor r of n, plus the two per-component checks the criterion engine
// needs: the residue-degree condition and the lcm of ramification indices.

#include <set>
#include <string>
#include <vector>

#include "torcrit/abelian.hpp"

namespace torcrit {

struct CuspComponent {
    i64 r = 0;  // divisor of n for generated components; 0 for external data
    AbelianFieldSpec field;
    std::string label;
};

struct QuotientCuspData {
    std::string curve_label;
    std::vector<CuspComponent> components;
    std::string niceness_citation;
};

// The field of definition of the cusps (a:b) of X1(m,n) with gcd(b,n) = r:
// conductor n, fixing subgroup generated by the units congruent to 1 mod
// lcm(m, n/r), together with -1 when gcd(m*r, n) <= 2.
AbelianFieldSpec cusp_field(i64 m, i64 n, i64 r);

// One component per divisor r of n, labelled "r=<r>".
std::vector<CuspComponent> enumerate_components(i64 m, i64 n);

// QuotientCuspData for the identity quotient X' = X1(m,n).
QuotientCuspData identity_quotient(i64 m, i64 n);

struct ComponentSplittingReport {
    std::string label;
    std::string field_name;
    RelativeSplitting splitting;
    bool passes = false;
    std::string reason;
};

struct ConditionViReport {
    bool passes = false;
    std::vector<ComponentSplittingReport> components;
};

// A component passes iff its relative residue degree over L lies outside S
// or the prime of L has a unique prime above it in the component field.
// Every component field must contain L.
ConditionViReport check_condition_vi(const QuotientCuspData& data, const AbelianFieldSpec& L,
                                     i64 p, const std::set<i64>& S);

// lcm over components of the relative ramification index over L at p.
i64 ramification_lcm(const QuotientCuspData& data, const AbelianFieldSpec& L, i64 p);

}  // namespace torcrit
