#include "torcrit/cusps.hpp"

#include <sstream>
#include <stdexcept>

namespace torcrit {

AbelianFieldSpec cusp_field(i64 m, i64 n, i64 r) {
    require_modulus(n);
    if (m < 1 || n % m != 0)
        throw std::domain_error("m = " + std::to_string(m) + " does not divide n = " +
                                std::to_string(n));
    if (r < 1 || n % r != 0)
        throw std::domain_error("r = " + std::to_string(r) + " does not divide n = " +
                                std::to_string(n));
    const i64 c = lcm_i64(m, n / r);
    const auto base = congruence_subgroup(n, c);
    const bool adjoin = gcd_i64(m * r, n) <= 2;
    if (!adjoin) return make_abelian_field(base);
    auto with_minus_one = subgroup_closure(n, base.elements, true);
    return make_abelian_field(std::move(with_minus_one));
}

std::vector<CuspComponent> enumerate_components(i64 m, i64 n) {
    std::vector<CuspComponent> components;
    for (i64 r = 1; r <= n; ++r) {
        if (n % r != 0) continue;
        CuspComponent c;
        c.r = r;
        c.field = cusp_field(m, n, r);
        c.label = "r=" + std::to_string(r);
        components.push_back(std::move(c));
    }
    return components;
}

QuotientCuspData identity_quotient(i64 m, i64 n) {
    QuotientCuspData data;
    std::ostringstream label;
    if (m == 1)
        label << "X1(" << n << ")";
    else
        label << "X1(" << m << "," << n << ")";
    data.curve_label = label.str();
    data.components = enumerate_components(m, n);
    data.niceness_citation = "identity quotient of X1(m,n)";
    return data;
}

ConditionViReport check_condition_vi(const QuotientCuspData& data, const AbelianFieldSpec& L,
                                     i64 p, const std::set<i64>& S) {
    if (data.components.empty()) throw std::domain_error("cusp data has no components");
    ConditionViReport report;
    report.passes = true;
    for (const auto& comp : data.components) {
        ComponentSplittingReport r;
        r.label = comp.label;
        r.field_name = field_name(comp.field);
        r.splitting = relative_splitting(comp.field, L, p);
        if (S.count(r.splitting.f_rel) == 0) {
            r.passes = true;
            r.reason = "residue degree " + std::to_string(r.splitting.f_rel) +
                       " over the base is outside S";
        } else if (r.splitting.count_per_prime == 1) {
            r.passes = true;
            r.reason = "unique prime above the base prime (residue degree " +
                       std::to_string(r.splitting.f_rel) + ")";
        } else {
            r.passes = false;
            r.reason = "residue degree " + std::to_string(r.splitting.f_rel) +
                       " lies in S but " + std::to_string(r.splitting.count_per_prime) +
                       " primes lie above the base prime";
        }
        report.passes = report.passes && r.passes;
        report.components.push_back(std::move(r));
    }
    return report;
}

i64 ramification_lcm(const QuotientCuspData& data, const AbelianFieldSpec& L, i64 p) {
    if (data.components.empty()) throw std::domain_error("cusp data has no components");
    i64 h = 1;
    for (const auto& comp : data.components)
        h = lcm_i64(h, relative_splitting(comp.field, L, p).e_rel);
    return h;
}

}  // namespace torcrit
