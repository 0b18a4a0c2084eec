#pragma once

// Small finite fields F_{p^k} with fully tabulated arithmetic.
//
// Elements are indices in [0, q): the element sum c_i * x^i has index
// sum c_i * p^i. The field modulus is the lexicographically smallest monic
// irreducible of degree k over F_p, comparing coefficient tuples from the
// constant term upward, so every report is reproducible bit for bit.

#include <cstdint>
#include <memory>
#include <vector>

#include "torcrit/unitgroup.hpp"

namespace torcrit {

using Fe = std::uint16_t;                 // field element index
inline constexpr Fe kNoElement = 0xFFFF;  // sentinel for "no solution"

// Hard cap on constructible field sizes (table memory grows like q^2).
inline constexpr i64 kFieldSizeCap = 2048;

class FiniteField {
public:
    // Builds F_{p^k}. Throws std::domain_error if p is not prime, k < 1,
    // or p^k exceeds the field size cap.
    static FiniteField make(i64 p, i64 k);

    i64 p() const { return t_->p; }
    i64 k() const { return t_->k; }
    i64 q() const { return t_->q; }

    // Modulus coefficients c0..ck (constant term first, monic).
    const std::vector<i64>& modulus() const { return t_->modulus; }

    Fe zero() const { return 0; }
    Fe one() const { return t_->one; }
    Fe from_int(i64 v) const;  // image of the rational integer v

    Fe add(Fe a, Fe b) const { return t_->add[static_cast<std::size_t>(a) * t_->q + b]; }
    Fe mul(Fe a, Fe b) const { return t_->mul[static_cast<std::size_t>(a) * t_->q + b]; }
    Fe neg(Fe a) const { return t_->neg[a]; }
    Fe sub(Fe a, Fe b) const { return add(a, neg(b)); }
    Fe inv(Fe a) const;  // throws on zero
    Fe div(Fe a, Fe b) const { return mul(a, inv(b)); }
    Fe pow(Fe a, i64 e) const;

    // Number of y with y^2 = s, and one such y (kNoElement if none).
    int square_root_count(Fe s) const;
    Fe square_root(Fe s) const { return t_->sqrt_of[s]; }

    // Characteristic 2 only: a solution z of z^2 + z = t, or kNoElement.
    Fe artin_schreier_root(Fe t) const;

    bool operator==(const FiniteField& other) const { return t_ == other.t_; }

private:
    struct Tables {
        i64 p = 0, k = 0, q = 0;
        Fe one = 0;
        std::vector<i64> modulus;
        std::vector<Fe> add, mul, neg, invtab;
        std::vector<Fe> sqrt_of;        // per element; kNoElement if non-square
        std::vector<Fe> artin_root;     // char 2 only
    };
    std::shared_ptr<const Tables> t_;
    explicit FiniteField(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}
};

}  // namespace torcrit
