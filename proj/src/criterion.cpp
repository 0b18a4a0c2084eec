#include "torcrit/criterion.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace torcrit {

std::string to_string(SetupMode m) {
    switch (m) {
        case SetupMode::Corollary: return "corollary";
        case SetupMode::TheoremAbelian: return "theorem-abelian";
        case SetupMode::TheoremExplicit: return "theorem-explicit";
    }
    return "?";
}

std::string to_string(ConditionStatus s) {
    switch (s) {
        case ConditionStatus::ComputedPass: return "computed_pass";
        case ConditionStatus::ComputedFail: return "computed_fail";
        case ConditionStatus::CitedPass: return "cited_pass";
        case ConditionStatus::MissingFact: return "missing_fact";
        case ConditionStatus::Inconclusive: return "inconclusive";
    }
    return "?";
}

std::string to_string(Verdict v) {
    return v == Verdict::Certified ? "certified" : "not_certified";
}

BaseFieldSetup corollary_setup(AbelianFieldSpec L, i64 p, i64 degree) {
    if (degree < 1) throw std::domain_error("extension degree must be at least 1");
    BaseFieldSetup s;
    s.L = std::move(L);
    s.p = p;
    s.mode = SetupMode::Corollary;
    s.degree = degree;
    return s;
}

BaseFieldSetup theorem_setup(AbelianFieldSpec L, i64 p, AbelianFieldSpec K) {
    if (!subfield_test(K, L))
        throw std::domain_error("theorem setup requires L to be a subfield of K");
    BaseFieldSetup s;
    s.L = std::move(L);
    s.p = p;
    s.mode = SetupMode::TheoremAbelian;
    s.K = std::move(K);
    return s;
}

BaseFieldSetup explicit_setup(AbelianFieldSpec L, i64 p, std::vector<PrimeDatum> prime_data,
                              i64 e_max) {
    if (prime_data.empty())
        throw std::domain_error("explicit setup needs at least one prime datum");
    if (e_max < 1) throw std::domain_error("largest ramification index must be at least 1");
    BaseFieldSetup s;
    s.L = std::move(L);
    s.p = p;
    s.mode = SetupMode::TheoremExplicit;
    s.prime_data = std::move(prime_data);
    s.explicit_e_max = e_max;
    return s;
}

TorsionTarget prime_to_p_part(const TorsionTarget& target, i64 p) {
    if (!is_prime(p)) throw std::domain_error(std::to_string(p) + " is not prime");
    i64 m = target.m, n = target.n;
    while (m % p == 0) m /= p;
    while (n % p == 0) n /= p;
    return make_torsion_target(m, n);
}

namespace {

// The threshold against which p is compared when deciding whether the whole
// target reduces injectively: d in corollary mode, the largest absolute
// ramification index over p in theorem mode.
i64 ramification_threshold(const BaseFieldSetup& setup) {
    switch (setup.mode) {
        case SetupMode::Corollary: return setup.degree;
        case SetupMode::TheoremAbelian: return splitting_over_q(*setup.K, setup.p).e;
        case SetupMode::TheoremExplicit:
            if (!setup.explicit_e_max)
                throw std::domain_error("explicit setup is missing the largest "
                                        "ramification index");
            return *setup.explicit_e_max;
    }
    throw std::logic_error("unreachable");
}

// [K:L] for condition i; for the corollary this is the given degree.
i64 extension_degree(const BaseFieldSetup& setup) {
    switch (setup.mode) {
        case SetupMode::Corollary: return setup.degree;
        case SetupMode::TheoremAbelian: {
            if (setup.K->degree % setup.L.degree != 0)
                throw std::logic_error("[K:Q] not divisible by [L:Q]");
            return setup.K->degree / setup.L.degree;
        }
        case SetupMode::TheoremExplicit: {
            const auto sL = splitting_over_q(setup.L, setup.p);
            i64 total = 0;
            for (const auto& datum : setup.prime_data) {
                if (datum.e_abs % sL.e != 0 || datum.f_abs % sL.f != 0)
                    throw std::domain_error("prime datum (e=" + std::to_string(datum.e_abs) +
                                            ",f=" + std::to_string(datum.f_abs) +
                                            ") is not divisible by the base datum");
                total += (datum.e_abs / sL.e) * (datum.f_abs / sL.f);
            }
            return total;
        }
    }
    throw std::logic_error("unreachable");
}

i64 checked_pow(i64 base, i64 exp, const std::string& what) {
    constexpr i64 cap = i64{1} << 50;
    i64 result = 1;
    for (i64 i = 0; i < exp; ++i) {
        if (result > cap / base) throw std::domain_error(what + " exceeds 2^50");
        result *= base;
    }
    return result;
}

std::set<i64> divisors_of(i64 v) {
    std::set<i64> divs;
    for (i64 d = 1; d * d <= v; ++d)
        if (v % d == 0) {
            divs.insert(d);
            divs.insert(v / d);
        }
    return divs;
}

}  // namespace

TorsionTarget effective_subgroup(const TorsionTarget& target, const BaseFieldSetup& setup) {
    if (!is_prime(setup.p))
        throw std::domain_error(std::to_string(setup.p) + " is not prime");
    const i64 threshold = ramification_threshold(setup);
    if (setup.p > threshold + 1) return target;
    return prime_to_p_part(target, setup.p);
}

std::set<i64> allowed_residue_degrees(const BaseFieldSetup& setup, i64 m) {
    const auto zeta_m = cyclotomic(m);
    if (!subfield_test(zeta_m, setup.L))
        throw std::domain_error("base field " + field_name(setup.L) +
                                " is not contained in Q(zeta" + std::to_string(m) + ")");
    std::set<i64> degrees;
    switch (setup.mode) {
        case SetupMode::Corollary: {
            const i64 deg_over_l = zeta_m.degree / setup.L.degree;
            if (setup.degree % deg_over_l != 0)
                throw std::domain_error("no degree-" + std::to_string(setup.degree) +
                                        " extension of " + field_name(setup.L) +
                                        " contains Q(zeta" + std::to_string(m) +
                                        ") (degree mismatch)");
            const i64 f0 = relative_splitting(zeta_m, setup.L, setup.p).f_rel;
            const i64 headroom = setup.degree / deg_over_l;
            for (i64 j = 1; j <= headroom; ++j)
                for (i64 d : divisors_of(f0 * j)) degrees.insert(d);
            break;
        }
        case SetupMode::TheoremAbelian: {
            if (!subfield_test(*setup.K, zeta_m))
                throw std::domain_error("theorem setup requires Q(zeta_m) inside K");
            const i64 f_rel = relative_splitting(*setup.K, setup.L, setup.p).f_rel;
            degrees = divisors_of(f_rel);
            break;
        }
        case SetupMode::TheoremExplicit: {
            const auto sL = splitting_over_q(setup.L, setup.p);
            for (const auto& datum : setup.prime_data) {
                if (datum.f_abs % sL.f != 0)
                    throw std::domain_error("explicit residue degree not divisible by the "
                                            "base residue degree");
                for (i64 d : divisors_of(datum.f_abs / sL.f)) degrees.insert(d);
            }
            break;
        }
    }
    return degrees;
}

namespace {

std::string join_int_set(const std::set<i64>& s) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (i64 v : s) {
        if (!first) os << ",";
        first = false;
        os << v;
    }
    os << "}";
    return os.str();
}

std::string auto_quotient_label(const TorsionTarget& target, const AbelianFieldSpec& L) {
    std::ostringstream os;
    if (target.m == 1)
        os << "X1(" << target.n << ")";
    else
        os << "X1(" << target.m << "," << target.n << ")";
    if (L.degree > 1) os << "/" << field_name(L);
    return os.str();
}

// Residue-field sizes at which condition v must be checked.
std::vector<i64> condition_v_sizes(const BaseFieldSetup& setup, i64 norm_p0) {
    std::vector<i64> sizes;
    switch (setup.mode) {
        case SetupMode::Corollary:
            sizes.push_back(checked_pow(norm_p0, setup.degree, "q^d"));
            break;
        case SetupMode::TheoremAbelian: {
            const i64 f_rel = relative_splitting(*setup.K, setup.L, setup.p).f_rel;
            sizes.push_back(checked_pow(norm_p0, f_rel, "Norm(p)"));
            break;
        }
        case SetupMode::TheoremExplicit:
            for (const auto& datum : setup.prime_data)
                sizes.push_back(checked_pow(setup.p, datum.f_abs, "Norm(p)"));
            break;
    }
    std::sort(sizes.begin(), sizes.end());
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
    return sizes;
}

}  // namespace

CriterionReport evaluate(const TorsionTarget& target, const BaseFieldSetup& setup,
                         const QuotientRef& quotient, const FactsRegistry& facts,
                         const EvalOptions& options) {
    make_torsion_target(target.m, target.n);  // validates m | n
    if (!is_prime(setup.p))
        throw std::domain_error(std::to_string(setup.p) + " is not prime");
    const auto zeta_m = cyclotomic(target.m);
    if (!subfield_test(zeta_m, setup.L))
        throw std::domain_error("base field " + field_name(setup.L) +
                                " is not contained in Q(zeta" + std::to_string(target.m) + ")");

    CriterionReport report;
    report.target = target;
    report.base_name = field_name(setup.L);
    report.p = setup.p;
    report.mode = to_string(setup.mode);
    report.degree = extension_degree(setup);

    const i64 f_L = splitting_over_q(setup.L, setup.p).f;
    report.norm_p0 = checked_pow(setup.p, f_L, "Norm(p0)");

    report.effective = effective_subgroup(target, setup);
    const auto S = allowed_residue_degrees(setup, target.m);
    report.allowed_degrees.assign(S.begin(), S.end());

    // Resolve cusp data for the quotient curve.
    std::optional<QuotientCuspData> cusp_data;
    if (quotient.auto_from_target) {
        cusp_data = identity_quotient(target.m, target.n);
        report.quotient_label = auto_quotient_label(target, setup.L);
        report.niceness_citation = cusp_data->niceness_citation;
    } else {
        report.quotient_label = quotient.label;
        cusp_data = facts.quotient_cusp_data(quotient.label);
        if (cusp_data) report.niceness_citation = cusp_data->niceness_citation;
    }

    std::optional<i64> h;
    if (cusp_data) {
        h = ramification_lcm(*cusp_data, setup.L, setup.p);
        report.ramification_lcm = *h;
    }

    auto push = [&report](std::string id, ConditionStatus status, std::string evidence,
                          std::string citation = "") {
        report.conditions.push_back(
            {std::move(id), status, std::move(evidence), std::move(citation)});
    };

    // i) gonality of X' over L at least d*h + 1.
    const auto gonality = facts.gonality_lower_bound(report.quotient_label);
    if (!gonality) {
        push("i", ConditionStatus::MissingFact,
             "no gonality_lower_bound entry for '" + report.quotient_label + "'");
    } else if (!h) {
        push("i", ConditionStatus::MissingFact,
             "no cusp data for '" + report.quotient_label + "'; h is unknown");
    } else {
        const i64 needed = report.degree * *h + 1;
        const auto entry = facts.find(report.quotient_label, FactKind::GonalityLowerBound);
        if (*gonality >= needed)
            push("i", ConditionStatus::CitedPass,
                 "gonality >= " + std::to_string(*gonality) + " meets d*h+1 = " +
                     std::to_string(needed),
                 entry->citation);
        else
            push("i", ConditionStatus::ComputedFail,
                 "cited gonality bound " + std::to_string(*gonality) + " is below d*h+1 = " +
                     std::to_string(needed),
                 entry->citation);
    }

    // ii) rank of the Jacobian of X' over L is 0.
    if (const auto cite = facts.rank_zero_citation(report.quotient_label))
        push("ii", ConditionStatus::CitedPass,
             "Jacobian of " + report.quotient_label + " has Mordell-Weil rank 0", *cite);
    else
        push("ii", ConditionStatus::MissingFact,
             "no jacobian_rank_zero entry for '" + report.quotient_label + "'");

    // iii) trivial 2-torsion of the Jacobian, needed only at p = 2.
    if (setup.p != 2) {
        push("iii", ConditionStatus::ComputedPass,
             "vacuous: residue characteristic is " + std::to_string(setup.p));
    } else if (const auto cite = facts.two_torsion_trivial_citation(report.quotient_label)) {
        push("iii", ConditionStatus::CitedPass,
             "Jacobian of " + report.quotient_label + " has trivial 2-torsion over the base",
             *cite);
    } else {
        push("iii", ConditionStatus::MissingFact,
             "no jacobian_two_torsion_trivial entry for '" + report.quotient_label + "'");
    }

    // iv) and v): finite-field obstructions for the effective subgroup.
    if (report.effective.trivial()) {
        push("iv", ConditionStatus::ComputedFail,
             "the effective subgroup A' is trivial, so every curve over every residue "
             "field contains it");
        push("v", ConditionStatus::ComputedFail,
             "#A' = 1 divides every residue field bound");
    } else {
        const auto iv =
            check_condition_iv(report.norm_p0, S, report.effective, options.census_budget,
                               options.threads);
        std::ostringstream iv_evidence;
        bool iv_failed = false, iv_inconclusive = false;
        for (const auto& er : iv.exponents) {
            if (er.outcome == ConditionIvOutcome::Failed) iv_failed = true;
            if (er.outcome == ConditionIvOutcome::Inconclusive) iv_inconclusive = true;
            if (&er != &iv.exponents.front()) iv_evidence << "; ";
            iv_evidence << "i=" << er.exponent << ": " << er.evidence;
        }
        if (iv_failed)
            push("iv", ConditionStatus::ComputedFail, iv_evidence.str());
        else if (iv_inconclusive)
            push("iv", ConditionStatus::Inconclusive, iv_evidence.str());
        else
            push("iv", ConditionStatus::ComputedPass, iv_evidence.str());

        const auto sizes = condition_v_sizes(setup, report.norm_p0);
        bool v_ok = true;
        std::ostringstream v_evidence;
        for (i64 size : sizes) {
            const bool ok = check_condition_v(size, report.effective);
            v_ok = v_ok && ok;
            if (size != sizes.front()) v_evidence << "; ";
            if (ok)
                v_evidence << "#A' = " << report.effective.order() << " divides neither 3*"
                           << size << " nor 4*" << size;
            else
                v_evidence << "#A' = " << report.effective.order() << " divides 3*" << size
                           << " or 4*" << size;
        }
        push("v", v_ok ? ConditionStatus::ComputedPass : ConditionStatus::ComputedFail,
             v_evidence.str());
    }

    // vi) unique primes above p0 in every cusp component whose residue
    // degree lies in S.
    if (!cusp_data) {
        push("vi", ConditionStatus::MissingFact,
             "no quotient_cusp_data entry for '" + report.quotient_label + "'");
    } else {
        const auto vi = check_condition_vi(*cusp_data, setup.L, setup.p, S);
        std::ostringstream vi_evidence;
        vi_evidence << "S = " << join_int_set(S);
        for (const auto& comp : vi.components)
            vi_evidence << "; " << comp.label << " " << comp.field_name << ": " << comp.reason;
        push("vi", vi.passes ? ConditionStatus::ComputedPass : ConditionStatus::ComputedFail,
             vi_evidence.str());
    }

    const bool all_pass = std::all_of(
        report.conditions.begin(), report.conditions.end(), [](const ConditionRecord& c) {
            return c.status == ConditionStatus::ComputedPass ||
                   c.status == ConditionStatus::CitedPass;
        });
    report.verdict = all_pass ? Verdict::Certified : Verdict::NotCertified;
    return report;
}

std::vector<std::pair<i64, CriterionReport>> scan_primes(const TorsionTarget& target,
                                                         const AbelianFieldSpec& L, i64 degree,
                                                         const QuotientRef& quotient,
                                                         const FactsRegistry& facts,
                                                         i64 p_bound,
                                                         const EvalOptions& options) {
    std::vector<std::pair<i64, CriterionReport>> results;
    for (i64 p = 2; p <= p_bound; ++p) {
        if (!is_prime(p)) continue;
        results.emplace_back(p,
                             evaluate(target, corollary_setup(L, p, degree), quotient, facts,
                                      options));
    }
    return results;
}

}  // namespace torcrit
