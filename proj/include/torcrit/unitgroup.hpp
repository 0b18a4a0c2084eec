#pragma once

// Exact arithmetic in the multiplicative group (Z/nZ)^x.
//
// Subgroups are stored as explicit sorted element sets: every modulus this
// library handles is small (hard cap below), and explicit sets make
// membership, equality and quotient computations trivial.

#include <cstdint>
#include <vector>

namespace torcrit {

using i64 = std::int64_t;

// Moduli above this bound are rejected with a domain error.
inline constexpr i64 kModulusCap = 10'000;

i64 gcd_i64(i64 a, i64 b);
i64 lcm_i64(i64 a, i64 b);

// Throws std::domain_error unless 1 <= n <= cap.
void require_modulus(i64 n, i64 cap = kModulusCap);

// Euler's totient, by trial-division factorization.
i64 euler_phi(i64 n);

i64 mod_mul(i64 a, i64 b, i64 n);
i64 mod_pow(i64 base, i64 exp, i64 n);

// A subgroup of (Z/nZ)^x as a sorted set of normalized residues.
// Residues live in [0, n); for n = 1 the group is {0}, the class of 1.
struct UnitSubgroup {
    i64 modulus = 1;
    std::vector<i64> elements{0};

    i64 size() const { return static_cast<i64>(elements.size()); }
    bool contains(i64 a) const;

    bool operator==(const UnitSubgroup&) const = default;
};

// The full group (Z/nZ)^x and the trivial subgroup {1}.
UnitSubgroup full_unit_group(i64 n);
UnitSubgroup trivial_subgroup(i64 n);

// Multiplicative order of a mod n.  gcd(a, n) must be 1.
i64 element_order(i64 n, i64 a);

// Smallest subgroup of (Z/nZ)^x containing the generators,
// and -1 mod n if adjoin_minus_one is set.
UnitSubgroup subgroup_closure(i64 n, const std::vector<i64>& generators,
                              bool adjoin_minus_one = false);

// { s in (Z/nZ)^x : s = 1 (mod c) }.  Requires c | n.
UnitSubgroup congruence_subgroup(i64 n, i64 c);

// Smallest t >= 1 with a^t mod n in H, i.e. the order of the image of a
// in the quotient (Z/nZ)^x / H.
i64 quotient_element_order(i64 n, const UnitSubgroup& H, i64 a);

// Product set H1 * H2 (a subgroup, since the ambient group is abelian).
// Both arguments must share the same modulus.
UnitSubgroup product_subgroup(const UnitSubgroup& a, const UnitSubgroup& b);

// Validates the UnitSubgroup invariants (coprimality, identity, closure,
// Lagrange).  Throws std::logic_error on violation.
void check_subgroup_invariants(const UnitSubgroup& H);

}  // namespace torcrit
