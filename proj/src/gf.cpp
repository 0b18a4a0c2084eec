#include "torcrit/gf.hpp"

#include <stdexcept>
#include <string>

#include "torcrit/abelian.hpp"

namespace torcrit {

namespace {

using Poly = std::vector<i64>;  // coefficients, constant term first

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, i64 p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    trim(c);
    return c;
}

// Remainder of a modulo the monic polynomial m.
Poly poly_mod(Poly a, const Poly& m, i64 p) {
    trim(a);
    while (a.size() >= m.size()) {
        const i64 lead = a.back();
        const std::size_t shift = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i) {
            i64& c = a[i + shift];
            c = (c - lead * m[i]) % p;
            if (c < 0) c += p;
        }
        trim(a);
    }
    return a;
}

bool poly_divides(const Poly& d, const Poly& f, i64 p) { return poly_mod(f, d, p).empty(); }

// Monic polynomial of degree deg with coefficient tuple decoded from rank.
// rank enumerates tuples (c0, c1, ...) in lexicographic order: c0 varies
// slowest.
Poly monic_from_rank(i64 rank, i64 deg, i64 p) {
    Poly f(deg + 1, 0);
    f[deg] = 1;
    for (i64 i = 0; i < deg; ++i) {
        i64 weight = 1;
        for (i64 j = 0; j < deg - 1 - i; ++j) weight *= p;
        f[i] = (rank / weight) % p;
    }
    return f;
}

bool is_irreducible(const Poly& f, i64 p) {
    const i64 deg = static_cast<i64>(f.size()) - 1;
    if (deg <= 0) return false;
    if (deg == 1) return true;
    for (i64 d = 1; 2 * d <= deg; ++d) {
        i64 count = 1;
        for (i64 i = 0; i < d; ++i) count *= p;
        for (i64 rank = 0; rank < count; ++rank)
            if (poly_divides(monic_from_rank(rank, d, p), f, p)) return false;
    }
    return true;
}

Poly smallest_irreducible(i64 p, i64 k) {
    i64 count = 1;
    for (i64 i = 0; i < k; ++i) count *= p;
    for (i64 rank = 0; rank < count; ++rank) {
        Poly f = monic_from_rank(rank, k, p);
        if (is_irreducible(f, p)) return f;
    }
    throw std::logic_error("no irreducible polynomial found; broken invariant");
}

Poly decode(Fe a, i64 p, i64 k) {
    Poly f(k, 0);
    for (i64 i = 0; i < k; ++i) {
        f[i] = a % p;
        a = static_cast<Fe>(a / p);
    }
    trim(f);
    return f;
}

Fe encode(const Poly& f, i64 p) {
    i64 v = 0, weight = 1;
    for (i64 c : f) {
        v += c * weight;
        weight *= p;
    }
    return static_cast<Fe>(v);
}

}  // namespace

FiniteField FiniteField::make(i64 p, i64 k) {
    if (!is_prime(p)) throw std::domain_error(std::to_string(p) + " is not prime");
    if (k < 1) throw std::domain_error("field exponent must be positive");
    i64 q = 1;
    for (i64 i = 0; i < k; ++i) {
        q *= p;
        if (q > kFieldSizeCap)
            throw std::domain_error("field size " + std::to_string(p) + "^" +
                                    std::to_string(k) + " exceeds the cap " +
                                    std::to_string(kFieldSizeCap));
    }

    auto t = std::make_shared<Tables>();
    t->p = p;
    t->k = k;
    t->q = q;
    t->one = 1;
    t->modulus = smallest_irreducible(p, k);

    const std::size_t qs = static_cast<std::size_t>(q);
    t->add.resize(qs * qs);
    t->mul.resize(qs * qs);
    t->neg.resize(qs);
    t->invtab.assign(qs, kNoElement);
    t->sqrt_of.assign(qs, kNoElement);

    for (i64 a = 0; a < q; ++a) {
        const Poly fa = decode(static_cast<Fe>(a), p, k);
        Poly na(fa.size());
        for (std::size_t i = 0; i < fa.size(); ++i) na[i] = (p - fa[i]) % p;
        trim(na);
        t->neg[a] = encode(na, p);
        for (i64 b = a; b < q; ++b) {
            const Poly fb = decode(static_cast<Fe>(b), p, k);
            Poly s(std::max(fa.size(), fb.size()), 0);
            for (std::size_t i = 0; i < fa.size(); ++i) s[i] = fa[i];
            for (std::size_t i = 0; i < fb.size(); ++i) s[i] = (s[i] + fb[i]) % p;
            trim(s);
            const Fe sum = encode(s, p);
            t->add[static_cast<std::size_t>(a) * q + b] = sum;
            t->add[static_cast<std::size_t>(b) * q + a] = sum;

            const Fe prod = encode(poly_mod(poly_mul(fa, fb, p), t->modulus, p), p);
            t->mul[static_cast<std::size_t>(a) * q + b] = prod;
            t->mul[static_cast<std::size_t>(b) * q + a] = prod;
        }
    }

    for (i64 a = 1; a < q; ++a) {
        const Fe sq = t->mul[static_cast<std::size_t>(a) * q + a];
        if (t->sqrt_of[sq] == kNoElement) t->sqrt_of[sq] = static_cast<Fe>(a);
        for (i64 b = 1; b < q; ++b)
            if (t->mul[static_cast<std::size_t>(a) * q + b] == 1) {
                t->invtab[a] = static_cast<Fe>(b);
                break;
            }
    }
    t->sqrt_of[0] = 0;

    if (p == 2) {
        t->artin_root.assign(qs, kNoElement);
        for (i64 z = 0; z < q; ++z) {
            const Fe val = t->add[static_cast<std::size_t>(
                               t->mul[static_cast<std::size_t>(z) * q + z]) * q + z];
            if (t->artin_root[val] == kNoElement) t->artin_root[val] = static_cast<Fe>(z);
        }
    }

    return FiniteField(std::move(t));
}

Fe FiniteField::from_int(i64 v) const {
    const i64 p = t_->p;
    v %= p;
    if (v < 0) v += p;
    return static_cast<Fe>(v);  // residues mod p encode as themselves
}

Fe FiniteField::inv(Fe a) const {
    if (a == 0) throw std::domain_error("inverse of zero field element");
    return t_->invtab[a];
}

Fe FiniteField::pow(Fe a, i64 e) const {
    if (e < 0) return pow(inv(a), -e);
    Fe result = one();
    Fe base = a;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

int FiniteField::square_root_count(Fe s) const {
    if (s == 0) return 1;
    if (t_->sqrt_of[s] == kNoElement) return 0;
    return t_->p == 2 ? 1 : 2;  // squaring is a bijection in characteristic 2
}

Fe FiniteField::artin_schreier_root(Fe t) const {
    if (t_->p != 2) throw std::domain_error("Artin-Schreier roots need characteristic 2");
    return t_->artin_root[t];
}

}  // namespace torcrit
