#pragma once

// Abelian number fields presented as (conductor n, fixing subgroup H) with
// H <= (Z/nZ)^x, together with the decomposition of rational primes.
//
// Via the canonical isomorphism Gal(Q(zeta_n)/Q) = (Z/nZ)^x, the field is
// the fixed field of H. Prime decomposition is computed group-theoretically
// from the inertia subgroup and a Frobenius lift, never from a defining
// polynomial.

#include <string>
#include <vector>

#include "torcrit/unitgroup.hpp"

namespace torcrit {

struct AbelianFieldSpec {
    UnitSubgroup fixing_subgroup;  // H; the field is Q(zeta_n)^H
    i64 degree = 1;                // phi(n) / |H|, checked at construction

    i64 conductor() const { return fixing_subgroup.modulus; }
};

AbelianFieldSpec make_abelian_field(UnitSubgroup fixing_subgroup);
AbelianFieldSpec make_abelian_field(i64 conductor, const std::vector<i64>& subgroup_gens,
                                    bool adjoin_minus_one = false);

AbelianFieldSpec rationals();               // Q, conductor 1
AbelianFieldSpec cyclotomic(i64 n);         // Q(zeta_n)
AbelianFieldSpec real_cyclotomic(i64 n);    // Q(zeta_n)^+ (equals Q for n <= 2)

// Re-expresses F at conductor N (the current conductor must divide N):
// the fixing subgroup becomes the preimage of H under
// (Z/NZ)^x -> (Z/nZ)^x.  The field is unchanged.
AbelianFieldSpec lift_to_conductor(const AbelianFieldSpec& F, i64 N);

// True iff L is a subfield of F (both lifted to the common conductor).
bool subfield_test(const AbelianFieldSpec& F, const AbelianFieldSpec& L);

// True iff F and L are the same field.
bool same_field(const AbelianFieldSpec& F, const AbelianFieldSpec& L);

// Compositum F.L inside Q(zeta_lcm).
AbelianFieldSpec compositum(const AbelianFieldSpec& F, const AbelianFieldSpec& L);

// Canonical display name: "Q", "Q(zeta5)", "Q(zeta25)+", or the generic
// "F(n=20;H=1,11)" form. Purely cosmetic and deterministic.
std::string field_name(const AbelianFieldSpec& F);

// Parses the field mini-grammar shared by the CLI and the facts files:
//   "Q" | "zeta(N)" | "zeta+(N)" | "N[:g1,g2,...[:pm1]]"
// where N:gens:flag denotes the fixed field of the subgroup of (Z/NZ)^x
// generated by the gens (and -1 when the pm1 flag is present).
AbelianFieldSpec parse_field_spec(const std::string& text);

// Serializes in a form parse_field_spec accepts.
std::string field_spec_string(const AbelianFieldSpec& F);

struct PrimeSplitting {
    i64 e = 1;  // ramification index
    i64 f = 1;  // residue degree
    i64 g = 1;  // number of primes above p

    bool operator==(const PrimeSplitting&) const = default;
};

struct RelativeSplitting {
    i64 e_rel = 1;            // e(F)/e(L)
    i64 f_rel = 1;            // f(F)/f(L)
    i64 count_per_prime = 1;  // number of primes of F above a fixed prime of L

    bool operator==(const RelativeSplitting&) const = default;
};

bool is_prime(i64 p);

// Decomposition of the rational prime p in F: e, f, g with e*f*g = [F:Q].
PrimeSplitting splitting_over_q(const AbelianFieldSpec& F, i64 p);

// Splitting data of F over its subfield L at any prime of L above p.
// All primes of L above p are interchangeable because L/Q is Galois.
RelativeSplitting relative_splitting(const AbelianFieldSpec& F, const AbelianFieldSpec& L,
                                     i64 p);

}  // namespace torcrit
