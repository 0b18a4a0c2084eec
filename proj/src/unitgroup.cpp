#include "torcrit/unitgroup.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace torcrit {

i64 gcd_i64(i64 a, i64 b) { return std::gcd(a, b); }
i64 lcm_i64(i64 a, i64 b) { return std::lcm(a, b); }

void require_modulus(i64 n, i64 cap) {
    if (n < 1)
        throw std::domain_error("modulus must be positive, got " + std::to_string(n));
    if (n > cap)
        throw std::domain_error("modulus " + std::to_string(n) +
                                " exceeds the supported bound " + std::to_string(cap));
}

i64 euler_phi(i64 n) {
    require_modulus(n);
    i64 result = n;
    i64 m = n;
    for (i64 p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

i64 mod_mul(i64 a, i64 b, i64 n) { return (a % n) * (b % n) % n; }

i64 mod_pow(i64 base, i64 exp, i64 n) {
    base %= n;
    if (base < 0) base += n;
    i64 result = 1 % n;
    while (exp > 0) {
        if (exp & 1) result = mod_mul(result, base, n);
        base = mod_mul(base, base, n);
        exp >>= 1;
    }
    return result;
}

namespace {

i64 normalize(i64 a, i64 n) {
    a %= n;
    return a < 0 ? a + n : a;
}

void require_unit(i64 n, i64 a) {
    if (gcd_i64(normalize(a, n), n) != 1)
        throw std::domain_error("residue " + std::to_string(a) + " is not a unit mod " +
                                std::to_string(n));
}

}  // namespace

bool UnitSubgroup::contains(i64 a) const {
    return std::binary_search(elements.begin(), elements.end(), normalize(a, modulus));
}

UnitSubgroup full_unit_group(i64 n) {
    require_modulus(n);
    UnitSubgroup g;
    g.modulus = n;
    g.elements.clear();
    if (n == 1) {
        g.elements.push_back(0);
        return g;
    }
    for (i64 a = 1; a < n; ++a)
        if (gcd_i64(a, n) == 1) g.elements.push_back(a);
    return g;
}

UnitSubgroup trivial_subgroup(i64 n) {
    require_modulus(n);
    UnitSubgroup g;
    g.modulus = n;
    g.elements = {normalize(1, n)};
    return g;
}

i64 element_order(i64 n, i64 a) {
    require_modulus(n);
    require_unit(n, a);
    const i64 phi = euler_phi(n);
    i64 x = normalize(a, n);
    i64 acc = normalize(1, n);
    for (i64 t = 1; t <= phi; ++t) {
        acc = mod_mul(acc, x, n);
        if (acc == normalize(1, n)) return t;
    }
    throw std::logic_error("element order exceeded phi(n); broken invariant");
}

UnitSubgroup subgroup_closure(i64 n, const std::vector<i64>& generators,
                              bool adjoin_minus_one) {
    require_modulus(n);
    std::vector<i64> gens;
    gens.reserve(generators.size() + 1);
    for (i64 g : generators) {
        require_unit(n, g);
        gens.push_back(normalize(g, n));
    }
    if (adjoin_minus_one) gens.push_back(normalize(-1, n));

    std::set<i64> closure{normalize(1, n)};
    // BFS closure under multiplication by the generators.
    std::vector<i64> frontier(closure.begin(), closure.end());
    while (!frontier.empty()) {
        std::vector<i64> next;
        for (i64 x : frontier)
            for (i64 g : gens) {
                i64 y = mod_mul(x, g, n);
                if (closure.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }

    UnitSubgroup result;
    result.modulus = n;
    result.elements.assign(closure.begin(), closure.end());
    return result;
}

UnitSubgroup congruence_subgroup(i64 n, i64 c) {
    require_modulus(n);
    if (c < 1 || n % c != 0)
        throw std::domain_error("congruence modulus " + std::to_string(c) +
                                " does not divide " + std::to_string(n));
    UnitSubgroup g;
    g.modulus = n;
    g.elements.clear();
    if (n == 1) {
        g.elements.push_back(0);
        return g;
    }
    for (i64 a = 1; a < n; ++a)
        if (gcd_i64(a, n) == 1 && a % c == 1 % c) g.elements.push_back(a);
    return g;
}

i64 quotient_element_order(i64 n, const UnitSubgroup& H, i64 a) {
    require_modulus(n);
    if (H.modulus != n)
        throw std::domain_error("subgroup modulus " + std::to_string(H.modulus) +
                                " does not match " + std::to_string(n));
    require_unit(n, a);
    const i64 phi = euler_phi(n);
    i64 x = normalize(a, n);
    i64 acc = normalize(1, n);
    for (i64 t = 1; t <= phi; ++t) {
        acc = mod_mul(acc, x, n);
        if (H.contains(acc)) return t;
    }
    throw std::logic_error("quotient order exceeded phi(n); broken invariant");
}

UnitSubgroup product_subgroup(const UnitSubgroup& a, const UnitSubgroup& b) {
    if (a.modulus != b.modulus)
        throw std::domain_error("product of subgroups with different moduli");
    std::set<i64> prod;
    for (i64 x : a.elements)
        for (i64 y : b.elements) prod.insert(mod_mul(x, y, a.modulus));
    UnitSubgroup result;
    result.modulus = a.modulus;
    result.elements.assign(prod.begin(), prod.end());
    return result;
}

void check_subgroup_invariants(const UnitSubgroup& H) {
    const i64 n = H.modulus;
    require_modulus(n);
    if (!H.contains(1)) throw std::logic_error("subgroup does not contain 1");
    for (i64 a : H.elements)
        if (gcd_i64(a == 0 ? n : a, n) != 1 && n != 1)
            throw std::logic_error("subgroup element not coprime to modulus");
    for (i64 a : H.elements)
        for (i64 b : H.elements)
            if (!H.contains(mod_mul(a, b, n)))
                throw std::logic_error("subgroup not closed under multiplication");
    if (euler_phi(n) % H.size() != 0)
        throw std::logic_error("subgroup size does not divide phi(n)");
}

}  // namespace torcrit
