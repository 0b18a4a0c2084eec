#include "torcrit/curves.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "torcrit/abelian.hpp"

namespace torcrit {

Fe discriminant(const FiniteField& F, const WeierstrassCurve& E) {
    const Fe b2 = F.add(F.mul(E.a1, E.a1), F.mul(F.from_int(4), E.a2));
    const Fe b4 = F.add(F.mul(F.from_int(2), E.a4), F.mul(E.a1, E.a3));
    const Fe b6 = F.add(F.mul(E.a3, E.a3), F.mul(F.from_int(4), E.a6));
    const Fe b8 = F.add(
        F.sub(F.add(F.mul(F.mul(E.a1, E.a1), E.a6), F.mul(F.mul(F.from_int(4), E.a2), E.a6)),
              F.mul(F.mul(E.a1, E.a3), E.a4)),
        F.sub(F.mul(E.a2, F.mul(E.a3, E.a3)), F.mul(E.a4, E.a4)));
    const Fe t1 = F.neg(F.mul(F.mul(b2, b2), b8));
    const Fe t2 = F.neg(F.mul(F.from_int(8), F.mul(b4, F.mul(b4, b4))));
    const Fe t3 = F.neg(F.mul(F.from_int(27), F.mul(b6, b6)));
    const Fe t4 = F.mul(F.from_int(9), F.mul(b2, F.mul(b4, b6)));
    return F.add(F.add(t1, t2), F.add(t3, t4));
}

namespace {

void require_nonsingular(const FiniteField& F, const WeierstrassCurve& E) {
    if (discriminant(F, E) == 0) throw std::domain_error("curve is singular");
}

Fe rhs_at(const FiniteField& F, const WeierstrassCurve& E, Fe x) {
    // x^3 + a2 x^2 + a4 x + a6 by Horner.
    return F.add(F.mul(F.add(F.mul(F.add(x, E.a2), x), E.a4), x), E.a6);
}

Fe neg_y(const FiniteField& F, const WeierstrassCurve& E, const Point& pt) {
    return F.neg(F.add(F.add(pt.y, F.mul(E.a1, pt.x)), E.a3));
}

}  // namespace

Point add_points(const FiniteField& F, const WeierstrassCurve& E, const Point& a,
                 const Point& b) {
    if (a.infinity) return b;
    if (b.infinity) return a;
    if (a.x == b.x && b.y == neg_y(F, E, a)) return Point{};

    Fe lambda, nu;
    if (a.x != b.x) {
        const Fe dx = F.inv(F.sub(b.x, a.x));
        lambda = F.mul(F.sub(b.y, a.y), dx);
        nu = F.mul(F.sub(F.mul(a.y, b.x), F.mul(b.y, a.x)), dx);
    } else {
        // Tangent line; the vertical case was handled above.
        const Fe den = F.inv(F.add(F.add(F.mul(F.from_int(2), a.y), F.mul(E.a1, a.x)), E.a3));
        const Fe x2 = F.mul(a.x, a.x);
        lambda = F.mul(F.sub(F.add(F.add(F.mul(F.from_int(3), x2),
                                         F.mul(F.from_int(2), F.mul(E.a2, a.x))),
                                   E.a4),
                             F.mul(E.a1, a.y)),
                       den);
        nu = F.mul(F.sub(F.add(F.add(F.neg(F.mul(x2, a.x)), F.mul(E.a4, a.x)),
                               F.mul(F.from_int(2), E.a6)),
                         F.mul(E.a3, a.y)),
                   den);
    }

    Point c;
    c.infinity = false;
    c.x = F.sub(F.sub(F.sub(F.add(F.mul(lambda, lambda), F.mul(E.a1, lambda)), E.a2), a.x),
                b.x);
    c.y = F.sub(F.sub(F.neg(F.mul(F.add(lambda, E.a1), c.x)), nu), E.a3);
    return c;
}

Point scalar_mul(const FiniteField& F, const WeierstrassCurve& E, i64 n, const Point& a) {
    if (n < 0) throw std::domain_error("negative scalar");
    Point result;  // infinity
    Point base = a;
    while (n > 0) {
        if (n & 1) result = add_points(F, E, result, base);
        base = add_points(F, E, base, base);
        n >>= 1;
    }
    return result;
}

namespace {

// Number of y with y^2 + by = c.
int solutions_in_y(const FiniteField& F, Fe b, Fe c) {
    if (F.p() == 2) {
        if (b == 0) return 1;  // y -> y^2 is bijective
        const Fe ib = F.inv(b);
        const Fe t = F.mul(c, F.mul(ib, ib));
        return F.artin_schreier_root(t) == kNoElement ? 0 : 2;
    }
    // Complete the square: (y + b/2)^2 = c + b^2/4.
    const Fe half = F.inv(F.from_int(2));
    const Fe shift = F.mul(b, half);
    const Fe s = F.add(c, F.mul(shift, shift));
    return F.square_root_count(s);
}

void append_points_at_x(const FiniteField& F, const WeierstrassCurve& E, Fe x,
                        std::vector<Point>& out) {
    const Fe b = F.add(F.mul(E.a1, x), E.a3);
    const Fe c = rhs_at(F, E, x);
    if (F.p() == 2) {
        if (b == 0) {
            out.push_back({x, F.square_root(c), false});
            return;
        }
        const Fe ib = F.inv(b);
        const Fe z = F.artin_schreier_root(F.mul(c, F.mul(ib, ib)));
        if (z == kNoElement) return;
        const Fe y = F.mul(b, z);
        out.push_back({x, y, false});
        out.push_back({x, F.add(y, b), false});
        return;
    }
    const Fe half = F.inv(F.from_int(2));
    const Fe shift = F.mul(b, half);
    const Fe s = F.add(c, F.mul(shift, shift));
    const int count = F.square_root_count(s);
    if (count == 0) return;
    if (count == 1) {
        out.push_back({x, F.neg(shift), false});
        return;
    }
    const Fe r = F.square_root(s);
    out.push_back({x, F.sub(r, shift), false});
    out.push_back({x, F.sub(F.neg(r), shift), false});
}

void assert_hasse(i64 q, i64 n_points) {
    const i64 a = q + 1 - n_points;
    if (a * a > 4 * q) throw std::logic_error("point count violates the Hasse bound");
}

}  // namespace

i64 count_points(const FiniteField& F, const WeierstrassCurve& E) {
    require_nonsingular(F, E);
    i64 n = 1;  // point at infinity
    for (i64 x = 0; x < F.q(); ++x) {
        const Fe xe = static_cast<Fe>(x);
        n += solutions_in_y(F, F.add(F.mul(E.a1, xe), E.a3), rhs_at(F, E, xe));
    }
    assert_hasse(F.q(), n);
    return n;
}

std::vector<Point> rational_points(const FiniteField& F, const WeierstrassCurve& E) {
    require_nonsingular(F, E);
    std::vector<Point> pts;
    pts.push_back(Point{});  // infinity
    for (i64 x = 0; x < F.q(); ++x) append_points_at_x(F, E, static_cast<Fe>(x), pts);
    assert_hasse(F.q(), static_cast<i64>(pts.size()));
    return pts;
}

CurveGroupStructure group_structure(const FiniteField& F, const WeierstrassCurve& E) {
    const auto pts = rational_points(F, E);
    const i64 n = static_cast<i64>(pts.size());

    CurveGroupStructure s;
    i64 rest = n;
    for (i64 ell = 2; ell * ell <= rest || rest > 1; ++ell) {
        if (ell * ell > rest) ell = rest;  // remaining part is prime
        if (rest % ell != 0) continue;
        i64 valuation = 0;
        while (rest % ell == 0) {
            rest /= ell;
            ++valuation;
        }
        // Largest i with full ell^i-torsion of size ell^(2i).
        i64 alpha = 0;
        i64 level = 1;  // ell^i
        for (i64 i = 1; 2 * i <= valuation; ++i) {
            level *= ell;
            i64 killed = 0;
            for (const auto& pt : pts)
                if (scalar_mul(F, E, level, pt).infinity) ++killed;
            if (killed != level * level) break;
            alpha = i;
        }
        const i64 exponent = std::min(alpha, valuation - alpha);
        for (i64 i = 0; i < exponent; ++i) s.d1 *= ell;
    }
    s.d2 = n / s.d1;

    if (s.d2 % s.d1 != 0 || s.d1 * s.d2 != n || (F.q() - 1) % s.d1 != 0)
        throw std::logic_error("group structure invariants violated");
    return s;
}

TorsionTarget make_torsion_target(i64 m, i64 n) {
    if (m < 1 || n < 1 || n % m != 0)
        throw std::domain_error("torsion target needs m | n, got m = " + std::to_string(m) +
                                ", n = " + std::to_string(n));
    return TorsionTarget{m, n};
}

std::string group_name(const TorsionTarget& t) {
    if (t.m == 1) return "C" + std::to_string(t.n);
    return "C" + std::to_string(t.m) + "+C" + std::to_string(t.n);
}

bool has_subgroup(const CurveGroupStructure& s, const TorsionTarget& target) {
    return s.d1 % target.m == 0 && s.d2 % target.n == 0;
}

i64 curve_candidate_count(const FiniteField& F) {
    const i64 q = F.q();
    if (F.p() == 2) return q * (q - 1) + (q - 1) * q * q;
    if (F.p() == 3) return q * q * q;
    return q * q;
}

WeierstrassCurve curve_candidate(const FiniteField& F, i64 index) {
    const i64 q = F.q();
    if (index < 0 || index >= curve_candidate_count(F))
        throw std::domain_error("curve candidate index out of range");
    WeierstrassCurve E;
    if (F.p() == 2) {
        const i64 ordinary = q * (q - 1);
        if (index < ordinary) {
            // y^2 + xy = x^3 + a2 x^2 + a6, a6 != 0 (the ordinary family)
            E.a1 = F.one();
            E.a2 = static_cast<Fe>(index / (q - 1));
            E.a6 = static_cast<Fe>(1 + index % (q - 1));
        } else {
            // y^2 + a3 y = x^3 + a4 x + a6, a3 != 0 (the supersingular family)
            const i64 i = index - ordinary;
            E.a3 = static_cast<Fe>(1 + i / (q * q));
            E.a4 = static_cast<Fe>((i / q) % q);
            E.a6 = static_cast<Fe>(i % q);
        }
    } else if (F.p() == 3) {
        // y^2 = x^3 + a2 x^2 + a4 x + a6
        E.a2 = static_cast<Fe>(index / (q * q));
        E.a4 = static_cast<Fe>((index / q) % q);
        E.a6 = static_cast<Fe>(index % q);
    } else {
        // y^2 = x^3 + a4 x + a6
        E.a4 = static_cast<Fe>(index / q);
        E.a6 = static_cast<Fe>(index % q);
    }
    return E;
}

std::vector<WeierstrassCurve> enumerate_curves(const FiniteField& F, i64 budget) {
    if (F.q() > budget)
        throw std::domain_error("field of " + std::to_string(F.q()) +
                                " elements exceeds the census budget " + std::to_string(budget));
    std::vector<WeierstrassCurve> curves;
    const i64 total = curve_candidate_count(F);
    for (i64 i = 0; i < total; ++i) {
        const WeierstrassCurve E = curve_candidate(F, i);
        if (discriminant(F, E) != 0) curves.push_back(E);
    }
    return curves;
}

namespace {

template <typename Fn>
void parallel_chunks(i64 total, int threads, Fn&& per_chunk) {
    const int nt = std::max(1, std::min<int>(threads, 64));
    if (nt == 1 || total < 1024) {
        per_chunk(0, 0, total);
        return;
    }
    const i64 chunk = (total + nt - 1) / nt;
    std::vector<std::thread> pool;
    for (int t = 0; t < nt; ++t) {
        const i64 lo = t * chunk;
        const i64 hi = std::min(total, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&per_chunk, t, lo, hi] { per_chunk(t, lo, hi); });
    }
    for (auto& th : pool) th.join();
}

}  // namespace

std::vector<CensusRecord> census(const FiniteField& F, i64 budget, int threads,
                                 std::optional<i64> only_order) {
    if (F.q() > budget)
        throw std::domain_error("field of " + std::to_string(F.q()) +
                                " elements exceeds the census budget " + std::to_string(budget));
    const i64 total = curve_candidate_count(F);
    const int nt = std::max(1, std::min<int>(threads, 64));
    std::vector<std::vector<CensusRecord>> partial(static_cast<std::size_t>(
        std::min<i64>(nt, std::max<i64>(1, (total + 1023) / 1024))));

    parallel_chunks(total, static_cast<int>(partial.size()),
                    [&](int chunk_id, i64 lo, i64 hi) {
                        auto& out = partial[static_cast<std::size_t>(chunk_id)];
                        for (i64 i = lo; i < hi; ++i) {
                            const WeierstrassCurve E = curve_candidate(F, i);
                            if (discriminant(F, E) == 0) continue;
                            const i64 n = count_points(F, E);
                            if (only_order && n != *only_order) continue;
                            out.push_back({E, n, group_structure(F, E)});
                        }
                    });

    std::vector<CensusRecord> records;
    for (auto& part : partial)
        records.insert(records.end(), part.begin(), part.end());
    return records;
}

i64 isqrt_i64(i64 v) {
    if (v < 0) throw std::domain_error("isqrt of negative value");
    if (v < 2) return v;
    // Newton iteration in exact integer arithmetic.
    i64 r = v / 2;
    for (;;) {
        const i64 next = (r + v / r) / 2;
        if (next >= r) break;
        r = next;
    }
    while (r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

bool is_admissible_order(i64 p, i64 k, i64 q, i64 n_points) {
    const i64 a = q + 1 - n_points;
    if (a * a > 4 * q) return false;
    if (std::gcd(std::abs(a), p) == 1) return true;
    const bool k_even = (k % 2 == 0);
    if (k_even && a * a == 4 * q) return true;
    if (k_even && p % 3 != 1 && a * a == q) return true;
    if (!k_even && (p == 2 || p == 3) && a * a == p * q) return true;
    if (a == 0 && (!k_even || p % 4 != 1)) return true;
    return false;
}

void split_prime_power(i64 q, i64& p, i64& k) {
    if (q < 2) throw std::domain_error(std::to_string(q) + " is not a prime power");
    p = q;
    for (i64 d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    k = 0;
    i64 rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++k;
    }
    if (rest != 1) throw std::domain_error(std::to_string(q) + " is not a prime power");
}

std::set<i64> admissible_orders(i64 q) {
    i64 p = 0, k = 0;
    split_prime_power(q, p, k);
    std::set<i64> orders;
    const i64 bound = isqrt_i64(4 * q);
    for (i64 a = -bound; a <= bound; ++a)
        if (is_admissible_order(p, k, q, q + 1 - a)) orders.insert(q + 1 - a);
    return orders;
}

std::string to_string(ConditionIvOutcome o) {
    switch (o) {
        case ConditionIvOutcome::CertifiedByOrder: return "CertifiedByOrder";
        case ConditionIvOutcome::CertifiedByCensus: return "CertifiedByCensus";
        case ConditionIvOutcome::Failed: return "Failed";
        case ConditionIvOutcome::Inconclusive: return "Inconclusive";
    }
    return "?";
}

namespace {

// Largest field size the order obstruction will scan.
constexpr i64 kOrderTestCap = i64{1} << 50;

struct CompatibleTriple {
    i64 n_points = 0, d1 = 0, d2 = 0;
};

// A group order and invariant-factor shape that an elliptic curve over F_Q
// could have while containing the target; nullopt when none exists.
std::optional<CompatibleTriple> find_compatible_triple(i64 p, i64 k, i64 Q,
                                                       const TorsionTarget& target) {
    const i64 step = target.m * target.n;
    const i64 bound = isqrt_i64(4 * Q);
    const i64 lo = Q + 1 - bound, hi = Q + 1 + bound;
    for (i64 n = ((lo + step - 1) / step) * step; n <= hi; n += step) {
        if (n < 1 || !is_admissible_order(p, k, Q, n)) continue;
        for (i64 d1 = target.m; d1 * d1 <= n; d1 += target.m) {
            if (n % d1 != 0) continue;
            const i64 d2 = n / d1;
            if (d2 % d1 != 0 || (Q - 1) % d1 != 0 || d2 % target.n != 0) continue;
            return CompatibleTriple{n, d1, d2};
        }
    }
    return std::nullopt;
}

struct CensusScan {
    bool found = false;
    i64 index = 0;
    CensusRecord record;
};

// First enumerated curve whose group contains the target, if any.
CensusScan scan_census_for_subgroup(const FiniteField& F, const TorsionTarget& target,
                                    int threads) {
    const i64 total = curve_candidate_count(F);
    const i64 step = target.m * target.n;
    std::vector<CensusScan> partial(64);
    parallel_chunks(total, threads, [&](int chunk_id, i64 lo, i64 hi) {
        auto& hit = partial[static_cast<std::size_t>(chunk_id)];
        for (i64 i = lo; i < hi; ++i) {
            const WeierstrassCurve E = curve_candidate(F, i);
            if (discriminant(F, E) == 0) continue;
            const i64 n = count_points(F, E);
            if (n % step != 0) continue;
            const auto s = group_structure(F, E);
            if (has_subgroup(s, target)) {
                hit = {true, i, {E, n, s}};
                return;
            }
        }
    });
    CensusScan best;
    for (const auto& hit : partial)
        if (hit.found && (!best.found || hit.index < best.index)) best = hit;
    return best;
}

}  // namespace

ConditionIvReport check_condition_iv(i64 q_base, const std::set<i64>& S,
                                     const TorsionTarget& target, i64 budget, int threads) {
    i64 p = 0, k_base = 0;
    split_prime_power(q_base, p, k_base);
    if (S.empty()) throw std::domain_error("empty exponent set for condition iv");

    ConditionIvReport report;
    report.passes = true;
    for (i64 i : S) {
        if (i < 1) throw std::domain_error("exponents must be positive");
        ConditionIvExponentReport er;
        er.exponent = i;
        i64 Q = 1;
        for (i64 j = 0; j < k_base * i; ++j) {
            if (Q > kOrderTestCap / p)
                throw std::domain_error("residue field size " + std::to_string(q_base) + "^" +
                                        std::to_string(i) + " is too large to analyze");
            Q *= p;
        }
        er.field_size = Q;

        const auto triple = find_compatible_triple(p, k_base * i, Q, target);
        if (!triple) {
            er.outcome = ConditionIvOutcome::CertifiedByOrder;
            er.evidence = "no admissible curve order over F_" + std::to_string(Q) +
                          " admits invariant factors containing " + group_name(target);
        } else if (Q <= budget) {
            const FiniteField F = FiniteField::make(p, k_base * i);
            const auto hit = scan_census_for_subgroup(F, target, threads);
            if (hit.found) {
                er.outcome = ConditionIvOutcome::Failed;
                er.witness = hit.record;
                er.evidence = "census of F_" + std::to_string(Q) +
                              " found a curve with " + std::to_string(hit.record.n_points) +
                              " points and invariants (" +
                              std::to_string(hit.record.structure.d1) + "," +
                              std::to_string(hit.record.structure.d2) + ") containing " +
                              group_name(target);
            } else {
                er.outcome = ConditionIvOutcome::CertifiedByCensus;
                er.evidence = "exhaustive census of F_" + std::to_string(Q) +
                              ": no curve group contains " + group_name(target);
            }
        } else {
            er.outcome = ConditionIvOutcome::Inconclusive;
            er.evidence = "order " + std::to_string(triple->n_points) + " with invariants (" +
                          std::to_string(triple->d1) + "," + std::to_string(triple->d2) +
                          ") is admissible over F_" + std::to_string(Q) +
                          " and the field exceeds the census budget " + std::to_string(budget);
        }
        report.passes = report.passes && (er.outcome == ConditionIvOutcome::CertifiedByOrder ||
                                          er.outcome == ConditionIvOutcome::CertifiedByCensus);
        report.exponents.push_back(std::move(er));
    }
    return report;
}

bool check_condition_v(i64 q_power, const TorsionTarget& target) {
    if (q_power < 2) throw std::domain_error("residue field size must be at least 2");
    const i64 ord = target.order();
    return (3 * q_power) % ord != 0 && (4 * q_power) % ord != 0;
}

}  // namespace torcrit
