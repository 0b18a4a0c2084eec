#include "torcrit/cases.hpp"

#include <algorithm>

namespace torcrit {

namespace {

// The cyclic cubic field of conductor 13, fixed field of <5> = {1,5,8,12}.
AbelianFieldSpec conductor13_cubic() { return make_abelian_field(13, {5}); }

CaseStudy theorem_case(std::string label, std::string description, i64 m, i64 n,
                       AbelianFieldSpec L, i64 p, AbelianFieldSpec K,
                       QuotientRef quotient = auto_quotient()) {
    return {std::move(label), std::move(description), make_torsion_target(m, n),
            theorem_setup(std::move(L), p, std::move(K)), std::move(quotient)};
}

CaseStudy corollary_case(std::string label, std::string description, i64 m, i64 n,
                         AbelianFieldSpec L, i64 p, i64 d,
                         QuotientRef quotient = auto_quotient()) {
    return {std::move(label), std::move(description), make_torsion_target(m, n),
            corollary_setup(std::move(L), p, d), std::move(quotient)};
}

}  // namespace

std::vector<CaseStudy> builtin_case_studies() {
    const auto K13 = conductor13_cubic();
    const auto Q = rationals();
    const auto z3 = cyclotomic(3);
    const auto z4 = cyclotomic(4);
    const auto z5 = cyclotomic(5);

    std::vector<CaseStudy> cases;
    const std::string over_k13 = " over the cyclic cubic field of conductor 13";
    cases.push_back(theorem_case("K13/C21", "no C21" + over_k13, 1, 21, Q, 5, K13));
    cases.push_back(theorem_case("K13/C25", "no C25" + over_k13, 1, 25, Q, 13, K13));
    cases.push_back(theorem_case("K13/C27", "no C27" + over_k13, 1, 27, Q, 5, K13));
    cases.push_back(theorem_case("K13/C35", "no C35" + over_k13, 1, 35, Q, 13, K13));
    cases.push_back(theorem_case("K13/C49", "no C49" + over_k13, 1, 49, Q, 5, K13));

    const std::string over_z5 = " over Q(zeta5)";
    cases.push_back(theorem_case("Qzeta5/C25", "no C25" + over_z5, 1, 25, Q, 2, z5));
    cases.push_back(theorem_case("Qzeta5/C27", "no C27" + over_z5, 1, 27, Q, 11, z5));
    cases.push_back(theorem_case("Qzeta5/C2+C16", "no C2+C16" + over_z5, 2, 16, Q, 11, z5));
    cases.push_back(theorem_case("Qzeta5/C32", "no C32" + over_z5, 1, 32, Q, 11, z5));
    cases.push_back(theorem_case("Qzeta5/C35", "no C35" + over_z5, 1, 35, Q, 3, z5));
    cases.push_back(theorem_case("Qzeta5/C5+C10", "no C5+C10" + over_z5, 5, 10, z5, 11, z5,
                                 named_quotient("X0(50)/Q(zeta5)")));

    const std::string cubic = " over any cubic field";
    cases.push_back(corollary_case("cubic/C2+C20", "no C2+C20" + cubic, 2, 20, Q, 3, 3));
    cases.push_back(corollary_case("cubic/C49", "no C49" + cubic, 1, 49, Q, 3, 3));
    cases.push_back(corollary_case("cubic/C55", "no C55" + cubic, 1, 55, Q, 3, 3));

    const std::string quartic = " over any quartic field";
    cases.push_back(
        corollary_case("quartic/C3+C12", "no C3+C12" + quartic, 3, 12, z3, 7, 2));
    cases.push_back(
        corollary_case("quartic/C3+C18", "no C3+C18" + quartic, 3, 18, z3, 2, 2));
    cases.push_back(corollary_case("quartic/C3+C27", "no C3+C27" + quartic, 3, 27, Q, 2, 4,
                                   named_quotient("X1(27)")));
    cases.push_back(
        corollary_case("quartic/C4+C12", "no C4+C12" + quartic, 4, 12, z4, 5, 2));
    cases.push_back(corollary_case("quartic/C4+C16", "no C4+C16" + quartic, 4, 16, z4, 5, 2,
                                   named_quotient("X1(2,16)/Q(zeta4)")));
    cases.push_back(corollary_case("quartic/C4+C28", "no C4+C28" + quartic, 4, 28, Q, 3, 4,
                                   named_quotient("X1(28)")));
    cases.push_back(corollary_case("quartic/C4+C44", "no C4+C44" + quartic, 4, 44, Q, 3, 4,
                                   named_quotient("X1(44)")));
    cases.push_back(corollary_case("quartic/C4+C52", "no C4+C52" + quartic, 4, 52, Q, 3, 4,
                                   named_quotient("X1(26)")));
    cases.push_back(corollary_case("quartic/C4+C68", "no C4+C68" + quartic, 4, 68, Q, 3, 4,
                                   named_quotient("X1(34)")));

    std::sort(cases.begin(), cases.end(),
              [](const CaseStudy& a, const CaseStudy& b) { return a.label < b.label; });
    return cases;
}

std::vector<OutOfScopeCase> out_of_scope_cases() {
    std::vector<OutOfScopeCase> cases = {
        {"K13/C11", "C11", "Mordell-Weil computation: X1(11)(K) equals X1(11)(Q), cusps only"},
        {"K13/C13", "C13", "genus-2 Jacobian argument: J1(13)(K) = J1(13)(Q) via reduction"},
        {"K13/C14", "C14", "Mordell-Weil computation: X1(14)(K) equals X1(14)(Q), cusps only"},
        {"K13/C15", "C15", "Mordell-Weil computation: X1(15)(K) equals X1(15)(Q), cusps only"},
        {"K13/C16", "C16", "genus-2 Jacobian argument with two reduction primes"},
        {"K13/C18", "C18", "genus-2 Jacobian argument: J1(18)(K) = J1(18)(Q) via reduction"},
        {"K13/C2+C10", "C2+C10", "Mordell-Weil computation on the elliptic curve X0(20)"},
        {"K13/C2+C12", "C2+C12", "Mordell-Weil computation on the elliptic curve X0(24)"},
        {"K13/C20", "C20", "Mordell-Weil computation on the elliptic curve X0(20)"},
        {"K13/C24", "C24", "Mordell-Weil computation on the elliptic curve X0(24)"},
        {"Qzeta5/C11", "C11", "Mordell-Weil computation: X1(11)(K) equals X1(11)(Q)"},
        {"Qzeta5/C13", "C13", "genus-2 Jacobian argument as over the cubic field"},
        {"Qzeta5/C14", "C14", "Mordell-Weil computation: X1(14)(K) equals X1(14)(Q)"},
        {"Qzeta5/C15-multiples", "C15n (n>1), C5+C15",
         "all order-15 points lie on curves with torsion exactly C15"},
        {"Qzeta5/C17", "C17", "order-17 points over quartic fields need a D4 or S4 field"},
        {"Qzeta5/C18", "C18", "genus-2 Jacobian argument as over the cubic field"},
        {"Qzeta5/C2+C10", "C2+C10", "Mordell-Weil computation on X0(20)"},
        {"Qzeta5/C2+C12", "C2+C12", "Mordell-Weil computation on X0(24)"},
        {"Qzeta5/C20", "C20", "Mordell-Weil computation on X0(20)"},
        {"Qzeta5/C21", "C21", "isogeny descent on X0(21) plus division polynomials"},
        {"Qzeta5/C24", "C24", "Mordell-Weil computation on X0(24)"},
        {"Qzeta5/C49", "C49", "Mordell-Weil computation on the elliptic curve X0(49)"},
        {"cubic/C40", "C40", "follows from cubic/C2+C20 via the covering X1(40) -> X1(2,20)"},
        {"quartic/C3+C33", "C3+C33",
         "hyperelliptic involution argument on X0(33): the involution acts freely on cusps"},
        {"quartic/C3+C39", "C3+C39",
         "hyperelliptic involution argument on X0(39)/w13: the involution swaps the cusps"},
        {"quartic/C8+C8", "C8+C8",
         "Mordell-Weil computation: X1(4,8)(Q(zeta8)) is finite and cuspidal"},
    };
    std::sort(cases.begin(), cases.end(),
              [](const OutOfScopeCase& a, const OutOfScopeCase& b) { return a.label < b.label; });
    return cases;
}

ReproduceResult reproduce_cases(const FactsRegistry& facts, const EvalOptions& options) {
    ReproduceResult result;
    result.all_certified = true;
    for (const auto& cs : builtin_case_studies()) {
        CriterionReport report = evaluate(cs.target, cs.setup, cs.quotient, facts, options);
        result.all_certified =
            result.all_certified && report.verdict == Verdict::Certified;
        result.results.push_back({cs, std::move(report)});
    }
    return result;
}

}  // namespace torcrit
