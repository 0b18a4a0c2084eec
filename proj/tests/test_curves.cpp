#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <stdexcept>

#include "torcrit/curves.hpp"

using namespace torcrit;

namespace {

bool on_curve(const FiniteField& F, const WeierstrassCurve& E, const Point& pt) {
    if (pt.infinity) return true;
    const Fe lhs = F.add(F.mul(pt.y, pt.y),
                         F.add(F.mul(F.mul(E.a1, pt.x), pt.y), F.mul(E.a3, pt.y)));
    const Fe rhs = F.add(F.mul(F.add(F.mul(F.add(pt.x, E.a2), pt.x), E.a4), pt.x), E.a6);
    return lhs == rhs;
}

// Independent oracle: count points by testing all q^2 affine pairs.
i64 oracle_count(const FiniteField& F, const WeierstrassCurve& E) {
    i64 n = 1;
    for (i64 x = 0; x < F.q(); ++x)
        for (i64 y = 0; y < F.q(); ++y)
            if (on_curve(F, E, {static_cast<Fe>(x), static_cast<Fe>(y), false})) ++n;
    return n;
}

}  // namespace

TEST_CASE("field construction is deterministic") {
    const auto f4 = FiniteField::make(2, 2);
    CHECK(f4.modulus() == std::vector<i64>{1, 1, 1});  // x^2 + x + 1
    const auto f8 = FiniteField::make(2, 3);
    CHECK(f8.modulus() == std::vector<i64>{1, 0, 1, 1});  // x^3 + x^2 + 1 beats x^3 + x + 1
    const auto f9 = FiniteField::make(3, 2);
    CHECK(f9.modulus() == std::vector<i64>{1, 0, 1});  // x^2 + 1
    CHECK_THROWS_AS(FiniteField::make(4, 1), std::domain_error);
    CHECK_THROWS_AS(FiniteField::make(2, 12), std::domain_error);  // above the size cap
}

TEST_CASE("field arithmetic basics") {
    const auto F = FiniteField::make(7, 2);
    CHECK(F.q() == 49);
    for (i64 a = 0; a < F.q(); ++a) {
        const Fe fa = static_cast<Fe>(a);
        CHECK(F.add(fa, F.neg(fa)) == 0);
        if (a != 0) CHECK(F.mul(fa, F.inv(fa)) == F.one());
        CHECK(F.pow(fa, 49) == fa);  // Frobenius power of the full field
    }
    // Squares: exactly (q-1)/2 nonzero squares in odd characteristic.
    i64 squares = 0;
    for (i64 a = 1; a < F.q(); ++a)
        if (F.square_root_count(static_cast<Fe>(a)) == 2) ++squares;
    CHECK(squares == 24);
}

TEST_CASE("count_points on the worked examples") {
    // y^2 = x^3 + x over F_5 has 4 points.
    const auto f5 = FiniteField::make(5, 1);
    WeierstrassCurve e1;
    e1.a4 = f5.one();
    CHECK(oracle_count(f5, e1) == 4);
    CHECK(count_points(f5, e1) == 4);
    CHECK(group_structure(f5, e1) == CurveGroupStructure{2, 2});

    // y^2 + y = x^3 over F_2 has 3 points.
    const auto f2 = FiniteField::make(2, 1);
    WeierstrassCurve e2;
    e2.a3 = f2.one();
    CHECK(oracle_count(f2, e2) == 3);
    CHECK(count_points(f2, e2) == 3);

    // Singular input is rejected.
    WeierstrassCurve sing;  // y^2 = x^3
    CHECK_THROWS_AS(count_points(f5, sing), std::domain_error);
    CHECK_THROWS_AS(group_structure(f5, sing), std::domain_error);
}

TEST_CASE("count_points matches the brute-force oracle") {
    for (auto [p, k] : {std::pair<i64, i64>{2, 2}, {2, 3}, {3, 2}, {5, 1}, {7, 1}, {11, 1}}) {
        const auto F = FiniteField::make(p, k);
        for (const auto& E : enumerate_curves(F, 16))
            CHECK(count_points(F, E) == oracle_count(F, E));
    }
}

TEST_CASE("group law closes and respects the group order") {
    for (auto [p, k] : {std::pair<i64, i64>{2, 3}, {3, 2}, {7, 1}}) {
        const auto F = FiniteField::make(p, k);
        for (const auto& E : enumerate_curves(F, 16)) {
            const auto pts = rational_points(F, E);
            const i64 n = static_cast<i64>(pts.size());
            for (std::size_t i = 0; i < pts.size(); i += 3)
                for (std::size_t j = i; j < pts.size(); j += 5) {
                    const auto sum = add_points(F, E, pts[i], pts[j]);
                    CHECK(on_curve(F, E, sum));
                }
            for (const auto& pt : pts) CHECK(scalar_mul(F, E, n, pt).infinity);
        }
    }
}

TEST_CASE("enumeration families over F_2") {
    const auto f2 = FiniteField::make(2, 1);
    // 2*1 ordinary candidates plus 1*4 supersingular candidates.
    CHECK(curve_candidate_count(f2) == 6);
    const auto curves = enumerate_curves(f2, 4);
    // All six candidates are nonsingular, and together they realize every
    // admissible point count over F_2 (five distinct values).
    CHECK(curves.size() == 6);
    std::set<i64> counts;
    for (const auto& E : curves) counts.insert(count_points(f2, E));
    CHECK(counts == std::set<i64>{1, 2, 3, 4, 5});
    CHECK(counts == admissible_orders(2));
}

TEST_CASE("enumeration family shape over F_5") {
    const auto f5 = FiniteField::make(5, 1);
    CHECK(curve_candidate_count(f5) == 25);  // (a4, a6) pairs
    CHECK(enumerate_curves(f5, 8).size() == 20);  // minus the five singular ones
    CHECK_THROWS_WITH_AS(
        (void)enumerate_curves(FiniteField::make(2, 4), 8),
        doctest::Contains("exceeds the census budget 8"), std::domain_error);
}

TEST_CASE("census invariants and determinism") {
    for (auto [p, k] : {std::pair<i64, i64>{2, 2}, {2, 3}, {3, 2}, {5, 1}, {7, 1}, {3, 1}}) {
        const auto F = FiniteField::make(p, k);
        const auto records = census(F, 128, 1);
        const i64 bound = isqrt_i64(4 * F.q());
        for (const auto& r : records) {
            CHECK(r.structure.d1 * r.structure.d2 == r.n_points);
            CHECK(r.structure.d2 % r.structure.d1 == 0);
            CHECK((F.q() - 1) % r.structure.d1 == 0);
            CHECK(r.n_points >= F.q() + 1 - bound);
            CHECK(r.n_points <= F.q() + 1 + bound);
            // A squarefree order forces a cyclic group.
            bool squarefree = true;
            for (i64 d = 2; d * d <= r.n_points; ++d)
                if (r.n_points % (d * d) == 0) squarefree = false;
            if (squarefree) CHECK(r.structure.d1 == 1);
        }
        // Identical records for any thread count.
        const auto records3 = census(F, 128, 3);
        REQUIRE(records.size() == records3.size());
        for (std::size_t i = 0; i < records.size(); ++i) {
            CHECK(records[i].curve == records3[i].curve);
            CHECK(records[i].n_points == records3[i].n_points);
            CHECK(records[i].structure == records3[i].structure);
        }
    }
}

TEST_CASE("the F_16 search: every 25-point curve is C5 x C5") {
    const auto F = FiniteField::make(2, 4);
    const auto hits = census(F, 128, 2, 25);
    CHECK(!hits.empty());
    for (const auto& r : hits) CHECK(r.structure == CurveGroupStructure{5, 5});
    CHECK_FALSE(has_subgroup(CurveGroupStructure{5, 5}, make_torsion_target(1, 25)));
}

namespace {

// Independent structure oracle: the exponent of the group is the lcm of the
// point orders, and a rank-<=-2 abelian group is determined by (order,
// exponent) as (N/exponent, exponent).
CurveGroupStructure oracle_structure(const FiniteField& F, const WeierstrassCurve& E) {
    const auto pts = rational_points(F, E);
    const i64 n = static_cast<i64>(pts.size());
    i64 exponent = 1;
    for (const auto& pt : pts) {
        i64 order = 0;
        for (i64 t = 1; t <= n; ++t) {
            if (n % t != 0) continue;
            if (scalar_mul(F, E, t, pt).infinity) {
                order = t;
                break;
            }
        }
        exponent = lcm_i64(exponent, order);
    }
    return {n / exponent, exponent};
}

}  // namespace

TEST_CASE("group_structure matches the exponent oracle") {
    for (auto [p, k] : {std::pair<i64, i64>{2, 2}, {2, 3}, {2, 4}, {3, 2}, {5, 1}, {7, 1},
                        {11, 1}, {13, 1}}) {
        const auto F = FiniteField::make(p, k);
        for (const auto& E : enumerate_curves(F, 16))
            CHECK(group_structure(F, E) == oracle_structure(F, E));
    }
}

TEST_CASE("has_subgroup embedding criterion") {
    CHECK_FALSE(has_subgroup({5, 5}, make_torsion_target(1, 25)));
    CHECK(has_subgroup({6, 6}, make_torsion_target(3, 3)));
    CHECK(has_subgroup({1, 20}, make_torsion_target(1, 20)));
    CHECK(has_subgroup({2, 40}, make_torsion_target(2, 20)));
    CHECK_FALSE(has_subgroup({6, 6}, make_torsion_target(3, 12)));
    CHECK_THROWS_AS(make_torsion_target(4, 6), std::domain_error);
}

TEST_CASE("admissible orders") {
    // No multiple of 35 is realized over F_81.
    const auto a81 = admissible_orders(81);
    for (i64 n : a81) CHECK(n % 35 != 0);
    CHECK(a81.count(70) == 0);  // 70 sits in the Hasse interval but has trace 12

    // 25 is realized over F_16 (supersingular trace -8).
    CHECK(admissible_orders(16).count(25) == 1);

    CHECK_THROWS_AS(admissible_orders(12), std::domain_error);
    CHECK_THROWS_AS(admissible_orders(1), std::domain_error);
}

TEST_CASE("oracle equivalence between census and admissible orders, small fields") {
    for (i64 q : {2, 3, 4, 5, 7, 8, 9}) {
        i64 p = 0, k = 0;
        split_prime_power(q, p, k);
        const auto F = FiniteField::make(p, k);
        std::set<i64> realized;
        for (const auto& E : enumerate_curves(F, 16)) realized.insert(count_points(F, E));
        CHECK(realized == admissible_orders(q));
    }
}

TEST_CASE("condition iv: order obstructions at q = 3 for the cubic-field groups") {
    for (i64 order : {55, 49, 40}) {
        const auto target = order == 40 ? make_torsion_target(2, 20)
                                        : make_torsion_target(1, order);
        const auto report = check_condition_iv(3, {1, 2, 3}, target);
        CHECK(report.passes);
        for (const auto& er : report.exponents)
            CHECK(er.outcome == ConditionIvOutcome::CertifiedByOrder);
    }
}

TEST_CASE("condition iv: census certification at F_16 and F_49") {
    const auto c25 = check_condition_iv(2, {1, 2, 4}, make_torsion_target(1, 25));
    CHECK(c25.passes);
    CHECK(c25.exponents.back().outcome == ConditionIvOutcome::CertifiedByCensus);

    const auto c312 = check_condition_iv(7, {1, 2}, make_torsion_target(3, 12));
    CHECK(c312.passes);
    CHECK(c312.exponents[0].outcome == ConditionIvOutcome::CertifiedByOrder);
    CHECK(c312.exponents[1].outcome == ConditionIvOutcome::CertifiedByCensus);
}

TEST_CASE("condition iv: inconclusive beyond the budget, witness within it") {
    // Over F_169 the order 165 = 3*5*11 is admissible and cyclic, so C55
    // does embed; the order test alone cannot certify i = 2 and the census
    // is only allowed to settle it when the budget covers 169.
    const auto capped = check_condition_iv(13, {1, 2}, make_torsion_target(1, 55), 128);
    CHECK_FALSE(capped.passes);
    CHECK(capped.exponents[0].outcome == ConditionIvOutcome::CertifiedByOrder);
    CHECK(capped.exponents[1].outcome == ConditionIvOutcome::Inconclusive);

    const auto swept = check_condition_iv(13, {1, 2}, make_torsion_target(1, 55), 256);
    CHECK_FALSE(swept.passes);
    CHECK(swept.exponents[1].outcome == ConditionIvOutcome::Failed);
    REQUIRE(swept.exponents[1].witness.has_value());
    const auto& witness = *swept.exponents[1].witness;
    CHECK(witness.n_points % 55 == 0);
    CHECK(has_subgroup(witness.structure, make_torsion_target(1, 55)));
}

TEST_CASE("condition v divisibility") {
    CHECK(check_condition_v(81, make_torsion_target(1, 35)));
    const i64 eleven4 = 11 * 11 * 11 * 11;
    CHECK(check_condition_v(eleven4, make_torsion_target(1, 27)));
    for (i64 q : {3, 4, 5, 49, 81})
        CHECK_FALSE(check_condition_v(q, make_torsion_target(2, 2)));  // 4 divides 4q
}
