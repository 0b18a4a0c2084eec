#include "torcrit/abelian.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace torcrit {

AbelianFieldSpec make_abelian_field(UnitSubgroup fixing_subgroup) {
    check_subgroup_invariants(fixing_subgroup);
    AbelianFieldSpec F;
    F.degree = euler_phi(fixing_subgroup.modulus) / fixing_subgroup.size();
    F.fixing_subgroup = std::move(fixing_subgroup);
    return F;
}

AbelianFieldSpec make_abelian_field(i64 conductor, const std::vector<i64>& subgroup_gens,
                                    bool adjoin_minus_one) {
    return make_abelian_field(subgroup_closure(conductor, subgroup_gens, adjoin_minus_one));
}

AbelianFieldSpec rationals() { return make_abelian_field(1, {}); }

AbelianFieldSpec cyclotomic(i64 n) { return make_abelian_field(n, {}); }

AbelianFieldSpec real_cyclotomic(i64 n) { return make_abelian_field(n, {}, true); }

AbelianFieldSpec lift_to_conductor(const AbelianFieldSpec& F, i64 N) {
    const i64 n = F.conductor();
    require_modulus(N);
    if (N % n != 0)
        throw std::domain_error("cannot lift conductor " + std::to_string(n) +
                                " to non-multiple " + std::to_string(N));
    if (N == n) return F;
    UnitSubgroup lifted;
    lifted.modulus = N;
    lifted.elements.clear();
    const auto& H = F.fixing_subgroup;
    if (N == 1) {
        lifted.elements.push_back(0);
    } else {
        for (i64 a = 1; a < N; ++a)
            if (gcd_i64(a, N) == 1 && H.contains(a)) lifted.elements.push_back(a);
    }
    AbelianFieldSpec result;
    result.fixing_subgroup = std::move(lifted);
    result.degree = F.degree;
    // Lifting multiplies |H| by phi(N)/phi(n), so the degree is unchanged.
    if (euler_phi(N) / result.fixing_subgroup.size() != F.degree)
        throw std::logic_error("conductor lift changed the field degree");
    return result;
}

bool subfield_test(const AbelianFieldSpec& F, const AbelianFieldSpec& L) {
    const i64 N = lcm_i64(F.conductor(), L.conductor());
    if (N > kModulusCap) throw std::domain_error("common conductor exceeds the modulus cap");
    const auto HF = lift_to_conductor(F, N).fixing_subgroup;
    const auto HL = lift_to_conductor(L, N).fixing_subgroup;
    // L <= F iff the fixing subgroup of F is contained in that of L.
    return std::includes(HL.elements.begin(), HL.elements.end(), HF.elements.begin(),
                         HF.elements.end());
}

bool same_field(const AbelianFieldSpec& F, const AbelianFieldSpec& L) {
    return subfield_test(F, L) && subfield_test(L, F);
}

AbelianFieldSpec compositum(const AbelianFieldSpec& F, const AbelianFieldSpec& L) {
    const i64 N = lcm_i64(F.conductor(), L.conductor());
    if (N > kModulusCap) throw std::domain_error("common conductor exceeds the modulus cap");
    const auto HF = lift_to_conductor(F, N).fixing_subgroup;
    const auto HL = lift_to_conductor(L, N).fixing_subgroup;
    UnitSubgroup meet;
    meet.modulus = N;
    meet.elements.clear();
    std::set_intersection(HF.elements.begin(), HF.elements.end(), HL.elements.begin(),
                          HL.elements.end(), std::back_inserter(meet.elements));
    return make_abelian_field(std::move(meet));
}

std::string field_name(const AbelianFieldSpec& F) {
    const i64 n = F.conductor();
    if (F.degree == 1) return "Q";
    // Recognize (real) cyclotomic fields at any divisor of the conductor.
    for (i64 d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        if (F.degree == euler_phi(d) && same_field(F, cyclotomic(d)))
            return "Q(zeta" + std::to_string(d) + ")";
        if (d > 4 && 2 * F.degree == euler_phi(d) && same_field(F, real_cyclotomic(d)))
            return "Q(zeta" + std::to_string(d) + ")+";
    }
    std::ostringstream os;
    os << "F(n=" << n << ";H=";
    for (std::size_t i = 0; i < F.fixing_subgroup.elements.size(); ++i) {
        if (i) os << ",";
        os << F.fixing_subgroup.elements[i];
    }
    os << ")";
    return os.str();
}

namespace {

i64 parse_positive_int(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(s, &pos);
        if (pos != s.size() || v < 1) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::domain_error("malformed " + what + ": '" + s + "'");
    }
}

}  // namespace

AbelianFieldSpec parse_field_spec(const std::string& text) {
    if (text.empty()) throw std::domain_error("empty field spec");
    if (text == "Q") return rationals();
    if (text.rfind("zeta+(", 0) == 0 && text.back() == ')')
        return real_cyclotomic(parse_positive_int(text.substr(6, text.size() - 7), "conductor"));
    if (text.rfind("zeta(", 0) == 0 && text.back() == ')')
        return cyclotomic(parse_positive_int(text.substr(5, text.size() - 6), "conductor"));

    // conductor[:g1,g2,...[:pm1]]
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    if (parts.size() > 3) throw std::domain_error("malformed field spec: '" + text + "'");

    const i64 n = parse_positive_int(parts[0], "conductor");
    std::vector<i64> gens;
    if (parts.size() >= 2 && !parts[1].empty()) {
        std::istringstream gs(parts[1]);
        std::string tok;
        while (std::getline(gs, tok, ','))
            gens.push_back(parse_positive_int(tok, "subgroup generator"));
    }
    bool adjoin = false;
    if (parts.size() == 3) {
        if (parts[2] == "pm1")
            adjoin = true;
        else if (!parts[2].empty())
            throw std::domain_error("malformed field spec flag: '" + parts[2] + "'");
    }
    return make_abelian_field(n, gens, adjoin);
}

std::string field_spec_string(const AbelianFieldSpec& F) {
    std::ostringstream os;
    os << F.conductor() << ":";
    const auto& els = F.fixing_subgroup.elements;
    for (std::size_t i = 0; i < els.size(); ++i) {
        if (i) os << ",";
        os << els[i];
    }
    return os.str();
}

bool is_prime(i64 p) {
    if (p < 2) return false;
    for (i64 d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

namespace {

// CRT lift of the Frobenius at p: s = p mod n', s = 1 mod p^a.
i64 frobenius_lift(i64 n, i64 p, i64 ppart, i64 nprime) {
    if (ppart == 1) return p % n;
    if (nprime == 1) return 1 % n;
    for (i64 s = 1; s < n; ++s)
        if (gcd_i64(s, n) == 1 && s % nprime == p % nprime && s % ppart == 1) return s;
    throw std::logic_error("no CRT lift found; broken invariant");
}

struct DecompositionData {
    UnitSubgroup inertia_times_h;        // I*H
    UnitSubgroup decomposition_times_h;  // D*H
};

DecompositionData decomposition_subgroups(const AbelianFieldSpec& F, i64 p) {
    const i64 n = F.conductor();
    i64 ppart = 1, nprime = n;
    while (nprime % p == 0) {
        nprime /= p;
        ppart *= p;
    }
    const auto inertia = congruence_subgroup(n, nprime);
    const i64 sigma = frobenius_lift(n, p, ppart, nprime);

    auto gens = inertia.elements;
    gens.push_back(sigma);
    // Elements of modulus 1 normalize to 0; subgroup_closure expects unit
    // representatives, which for n = 1 is exactly {0}.
    std::vector<i64> gen_list;
    for (i64 g : gens)
        if (n == 1 || g != 0) gen_list.push_back(n == 1 ? 1 : g);
    const auto decomposition = subgroup_closure(n, gen_list);

    DecompositionData d;
    d.inertia_times_h = product_subgroup(inertia, F.fixing_subgroup);
    d.decomposition_times_h = product_subgroup(decomposition, F.fixing_subgroup);
    return d;
}

}  // namespace

PrimeSplitting splitting_over_q(const AbelianFieldSpec& F, i64 p) {
    if (!is_prime(p))
        throw std::domain_error(std::to_string(p) + " is not a rational prime");
    const i64 n = F.conductor();
    const auto d = decomposition_subgroups(F, p);
    const i64 h_size = F.fixing_subgroup.size();

    PrimeSplitting s;
    s.e = d.inertia_times_h.size() / h_size;
    s.f = d.decomposition_times_h.size() / d.inertia_times_h.size();
    s.g = euler_phi(n) / d.decomposition_times_h.size();
    if (s.e * s.f * s.g != F.degree)
        throw std::logic_error("e*f*g != [F:Q]; broken invariant");
    return s;
}

RelativeSplitting relative_splitting(const AbelianFieldSpec& F, const AbelianFieldSpec& L,
                                     i64 p) {
    if (!subfield_test(F, L))
        throw std::domain_error("relative splitting requires " + field_name(L) +
                                " to be a subfield of " + field_name(F));
    const auto sF = splitting_over_q(F, p);
    const auto sL = splitting_over_q(L, p);
    if (sF.e % sL.e != 0 || sF.f % sL.f != 0 || sF.g % sL.g != 0)
        throw std::logic_error("absolute splitting data not divisible in tower");
    RelativeSplitting r;
    r.e_rel = sF.e / sL.e;
    r.f_rel = sF.f / sL.f;
    r.count_per_prime = sF.g / sL.g;
    return r;
}

}  // namespace torcrit
