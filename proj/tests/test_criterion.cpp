#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <stdexcept>

#include "torcrit/cases.hpp"
#include "torcrit/report.hpp"

using namespace torcrit;

namespace {

const AbelianFieldSpec kQ = rationals();

AbelianFieldSpec conductor13_cubic() { return make_abelian_field(13, {5}); }

bool has_status(const CriterionReport& r, const std::string& id, ConditionStatus status) {
    for (const auto& c : r.conditions)
        if (c.id == id) return c.status == status;
    return false;
}

}  // namespace

TEST_CASE("prime_to_p_part strips exactly the p-primary component") {
    CHECK(prime_to_p_part(make_torsion_target(3, 18), 2) == make_torsion_target(3, 9));
    CHECK(prime_to_p_part(make_torsion_target(1, 35), 5) == make_torsion_target(1, 7));
    CHECK(prime_to_p_part(make_torsion_target(1, 55), 3) == make_torsion_target(1, 55));
    CHECK(prime_to_p_part(make_torsion_target(4, 16), 2) == make_torsion_target(1, 1));
}

TEST_CASE("effective_subgroup thresholds") {
    // 13 is totally ramified in the cubic field: e = 3 and 13 > e + 1.
    const auto setup13 = theorem_setup(kQ, 13, conductor13_cubic());
    CHECK(effective_subgroup(make_torsion_target(1, 25), setup13) ==
          make_torsion_target(1, 25));

    // p = 2 <= d + 1 strips the 2-part.
    const auto setup2 = corollary_setup(cyclotomic(3), 2, 2);
    CHECK(effective_subgroup(make_torsion_target(3, 18), setup2) == make_torsion_target(3, 9));

    // Large p never strips.
    const auto setup11 = corollary_setup(kQ, 11, 3);
    CHECK(effective_subgroup(make_torsion_target(2, 20), setup11) ==
          make_torsion_target(2, 20));

    // Idempotence.
    for (i64 p : {2, 3, 5}) {
        const auto setup = corollary_setup(kQ, p, 4);
        const auto once = effective_subgroup(make_torsion_target(4, 36), setup);
        CHECK(effective_subgroup(once, setup) == once);
    }
}

TEST_CASE("allowed residue degrees in corollary mode") {
    CHECK(allowed_residue_degrees(corollary_setup(kQ, 3, 3), 1) == std::set<i64>{1, 2, 3});
    CHECK(allowed_residue_degrees(corollary_setup(kQ, 3, 3), 2) == std::set<i64>{1, 2, 3});
    CHECK(allowed_residue_degrees(corollary_setup(kQ, 3, 4), 4) == std::set<i64>{1, 2, 4});

    // [Q(zeta4):Q] = 2 does not divide 3: no such K exists.
    CHECK_THROWS_AS(allowed_residue_degrees(corollary_setup(kQ, 3, 3), 4), std::domain_error);
    // The base must sit inside Q(zeta_m).
    CHECK_THROWS_AS(allowed_residue_degrees(corollary_setup(cyclotomic(3), 5, 2), 4),
                    std::domain_error);
}

TEST_CASE("allowed residue degrees in theorem modes") {
    // 2 has order 4 mod 5: S = divisors of 4.
    CHECK(allowed_residue_degrees(theorem_setup(kQ, 2, cyclotomic(5)), 1) ==
          std::set<i64>{1, 2, 4});
    // 5 splits completely in the conductor-13 cubic field: S = {1}.
    CHECK(allowed_residue_degrees(theorem_setup(kQ, 5, conductor13_cubic()), 1) ==
          std::set<i64>{1});

    // Explicit data: three split primes.
    const auto expl = explicit_setup(kQ, 5, {{1, 1}, {1, 1}, {1, 1}}, 1);
    CHECK(allowed_residue_degrees(expl, 1) == std::set<i64>{1});
    // Mixed residue degrees: divisors of 2 and of 3.
    const auto mixed = explicit_setup(kQ, 5, {{1, 2}, {1, 3}}, 1);
    CHECK(allowed_residue_degrees(mixed, 1) == std::set<i64>{1, 2, 3});
}

TEST_CASE("allowed residue degrees always contain 1 and are divisor-closed") {
    for (i64 p : {2, 3, 5, 7})
        for (i64 m : {1, 2, 3, 4}) {
            for (i64 d : {1, 2, 3, 4, 6}) {
                const i64 deg_m = cyclotomic(m).degree;
                if (d % deg_m != 0) continue;
                const auto S = allowed_residue_degrees(corollary_setup(kQ, p, d), m);
                CHECK(S.count(1) == 1);
                for (i64 s : S)
                    for (i64 t = 1; t <= s; ++t)
                        if (s % t == 0) CHECK(S.count(t) == 1);
            }
        }
}

TEST_CASE("evaluate certifies C55 over cubic fields with the shipped registry") {
    const auto report = evaluate(make_torsion_target(1, 55), corollary_setup(kQ, 3, 3),
                                 auto_quotient(), builtin_facts());
    CHECK(report.verdict == Verdict::Certified);
    CHECK(report.allowed_degrees == std::vector<i64>{1, 2, 3});
    CHECK(report.ramification_lcm == 1);
    CHECK(report.norm_p0 == 3);
    for (const auto& c : report.conditions)
        CHECK((c.status == ConditionStatus::ComputedPass ||
               c.status == ConditionStatus::CitedPass));
    // Cited conditions carry their citations verbatim.
    for (const auto& c : report.conditions)
        if (c.status == ConditionStatus::CitedPass) CHECK(!c.citation.empty());
}

TEST_CASE("evaluate with an empty registry reports missing facts, never crashes") {
    const FactsRegistry empty;
    const auto report = evaluate(make_torsion_target(1, 55), corollary_setup(kQ, 3, 3),
                                 auto_quotient(), empty);
    CHECK(report.verdict == Verdict::NotCertified);
    CHECK(has_status(report, "i", ConditionStatus::MissingFact));
    CHECK(has_status(report, "ii", ConditionStatus::MissingFact));
    CHECK(has_status(report, "iv", ConditionStatus::ComputedPass));  // still computed
}

TEST_CASE("evaluate flags condition vi failures instead of crashing") {
    // 13 is totally split in Q(zeta12) over Q(zeta3): residue degree 1 is in
    // S and several primes lie above, so condition vi fails.
    const auto report = evaluate(make_torsion_target(3, 12),
                                 corollary_setup(cyclotomic(3), 13, 2), auto_quotient(),
                                 builtin_facts());
    CHECK(report.verdict == Verdict::NotCertified);
    CHECK(has_status(report, "vi", ConditionStatus::ComputedFail));
}

TEST_CASE("evaluate reports a trivial effective subgroup as uncertifiable") {
    // C4 + C16 at p = 2 with d = 4: the prime-to-2 part is trivial.
    const auto report = evaluate(make_torsion_target(4, 16), corollary_setup(kQ, 2, 8),
                                 auto_quotient(), FactsRegistry{});
    CHECK(report.effective == make_torsion_target(1, 1));
    CHECK(has_status(report, "iv", ConditionStatus::ComputedFail));
    CHECK(has_status(report, "v", ConditionStatus::ComputedFail));
    CHECK(report.verdict == Verdict::NotCertified);
}

TEST_CASE("an inconclusive census branch never certifies") {
    // p = 13, d = 3 for C55: F_169 and F_2197 stay beyond the default budget.
    FactsRegistry facts = builtin_facts();
    const auto report = evaluate(make_torsion_target(1, 55), corollary_setup(kQ, 13, 3),
                                 auto_quotient(), facts);
    CHECK(has_status(report, "iv", ConditionStatus::Inconclusive));
    CHECK(report.verdict == Verdict::NotCertified);
}

TEST_CASE("theorem-explicit mode matches theorem-abelian on an abelian field") {
    // 5 splits into three degree-1 primes of the cubic field, unramified.
    const auto abelian = evaluate(make_torsion_target(1, 21),
                                  theorem_setup(kQ, 5, conductor13_cubic()), auto_quotient(),
                                  builtin_facts());
    const auto expl = evaluate(make_torsion_target(1, 21),
                               explicit_setup(kQ, 5, {{1, 1}, {1, 1}, {1, 1}}, 1),
                               auto_quotient(), builtin_facts());
    CHECK(abelian.verdict == Verdict::Certified);
    CHECK(expl.verdict == Verdict::Certified);
    CHECK(abelian.allowed_degrees == expl.allowed_degrees);
    CHECK(abelian.degree == expl.degree);

    CHECK_THROWS_AS(evaluate(make_torsion_target(1, 21),
                             explicit_setup(cyclotomic(3), 5, {{1, 1}}, 1), auto_quotient(),
                             builtin_facts()),
                    std::domain_error);  // f_abs = 1 not divisible by f_L = 2
}

TEST_CASE("input validation of evaluate") {
    // m must divide n.
    CHECK_THROWS_AS(evaluate(TorsionTarget{4, 6}, corollary_setup(kQ, 3, 2), auto_quotient(),
                             builtin_facts()),
                    std::domain_error);
    // L must lie in Q(zeta_m).
    CHECK_THROWS_AS(evaluate(make_torsion_target(4, 16), corollary_setup(cyclotomic(3), 5, 2),
                             auto_quotient(), builtin_facts()),
                    std::domain_error);
    // p must be prime.
    CHECK_THROWS_AS(evaluate(make_torsion_target(1, 55), corollary_setup(kQ, 6, 3),
                             auto_quotient(), builtin_facts()),
                    std::domain_error);
}

TEST_CASE("scan_primes runs the corollary across a prime range") {
    const auto results = scan_primes(make_torsion_target(1, 55), kQ, 3, auto_quotient(),
                                     builtin_facts(), 12);
    REQUIRE(results.size() == 5);  // 2, 3, 5, 7, 11
    bool certified_at_3 = false;
    for (const auto& [p, report] : results)
        if (p == 3) certified_at_3 = report.verdict == Verdict::Certified;
    CHECK(certified_at_3);
}

TEST_CASE("report serialization round-trips losslessly") {
    for (const auto& [target, setup] :
         {std::pair<TorsionTarget, BaseFieldSetup>{make_torsion_target(1, 55),
                                                   corollary_setup(kQ, 3, 3)},
          {make_torsion_target(3, 12), corollary_setup(cyclotomic(3), 7, 2)},
          {make_torsion_target(1, 25), theorem_setup(kQ, 2, cyclotomic(5))}}) {
        const auto report = evaluate(target, setup, auto_quotient(), builtin_facts());
        const auto j = report_to_json(report);
        const auto back = report_from_json(j);
        CHECK(back == report);
        CHECK(report_to_json(back) == j);
    }
}

TEST_CASE("facts registry parsing and validation") {
    const auto& reg = builtin_facts();
    CHECK(reg.size() >= 40);
    CHECK(reg.gonality_lower_bound("X1(55)") == 4);
    CHECK(reg.gonality_lower_bound("X1(2,16)") == 5);
    CHECK(reg.gonality_lower_bound("X1(2,16)/Q(zeta4)") == 4);
    CHECK(reg.rank_zero_citation("X1(3,12)/Q(zeta3)").has_value());
    CHECK(reg.two_torsion_trivial_citation("X1(27)").has_value());
    CHECK_FALSE(reg.find("X1(999)", FactKind::GonalityLowerBound).has_value());

    const auto x050 = reg.quotient_cusp_data("X0(50)/Q(zeta5)");
    REQUIRE(x050.has_value());
    REQUIRE(x050->components.size() == 1);
    CHECK(same_field(x050->components[0].field, cyclotomic(5)));

    const auto x27 = reg.quotient_cusp_data("X1(27)");
    REQUIRE(x27.has_value());
    CHECK(x27->components.size() == 4);  // divisors of 27

    CHECK_THROWS_AS(FactsRegistry::parse("X | gonality_lower_bound | 4"), std::domain_error);
    CHECK_THROWS_AS(FactsRegistry::parse("X | gonality_lower_bound | 4 | "),
                    std::domain_error);  // empty citation
    CHECK_THROWS_AS(FactsRegistry::parse("X | not_a_kind | 4 | c"), std::domain_error);
    CHECK_THROWS_AS(FactsRegistry::parse("X | jacobian_rank_zero | false | c"),
                    std::domain_error);
    CHECK_THROWS_AS(FactsRegistry::parse("X | quotient_cusp_data | nonsense 3 4 | c").
                    quotient_cusp_data("X"), std::domain_error);
}

TEST_CASE("reproduce with an empty registry: everything misses its citations") {
    const auto result = reproduce_cases(FactsRegistry{}, {128, 1});
    CHECK_FALSE(result.all_certified);
    for (const auto& r : result.results) {
        CHECK(r.report.verdict == Verdict::NotCertified);
        bool missing = false;
        for (const auto& c : r.report.conditions)
            missing = missing || c.status == ConditionStatus::MissingFact;
        CHECK(missing);
    }
}

TEST_CASE("shipped compositum cusp data matches the computed composita") {
    // The registry stores the cusp components of X1(2,16) over Q(i) as the
    // composita of the plain cusp fields with Q(i); recompute them.
    const auto stored = builtin_facts().quotient_cusp_data("X1(2,16)/Q(zeta4)");
    REQUIRE(stored.has_value());
    std::vector<AbelianFieldSpec> computed;
    for (const auto& comp : enumerate_components(2, 16)) {
        const auto joined = compositum(comp.field, cyclotomic(4));
        bool seen = false;
        for (const auto& f : computed) seen = seen || same_field(f, joined);
        if (!seen) computed.push_back(joined);
    }
    REQUIRE(stored->components.size() == computed.size());
    for (const auto& f : computed) {
        bool found = false;
        for (const auto& comp : stored->components)
            found = found || same_field(comp.field, f);
        CHECK(found);
    }
}

TEST_CASE("removing a fact flips the dependent case to missing-fact") {
    FactsRegistry facts = builtin_facts();
    CHECK(facts.remove("X1(55)", FactKind::JacobianRankZero));
    const auto report = evaluate(make_torsion_target(1, 55), corollary_setup(kQ, 3, 3),
                                 auto_quotient(), facts);
    CHECK(report.verdict == Verdict::NotCertified);
    CHECK(has_status(report, "ii", ConditionStatus::MissingFact));
}
