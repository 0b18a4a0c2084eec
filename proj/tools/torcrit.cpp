// Command-line surface of the torsion criterion engine.
//
// Exit codes: 0 = certified / successful query, 1 = not certified,
// 2 = usage or input error, 3 = internal invariant violation.

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <string>
#include <thread>

#include "torcrit/cases.hpp"
#include "torcrit/report.hpp"

using namespace torcrit;
using nlohmann::json;

namespace {

FactsRegistry load_facts(const std::string& path) {
    if (path.empty()) return builtin_facts();
    return FactsRegistry::load_file(path);
}

int default_threads() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

int run_check(const std::string& base_spec, i64 m, i64 n, i64 p, i64 degree,
              const std::string& field_k, const std::string& quotient_label,
              const std::string& facts_path, i64 budget, int threads,
              const std::string& format) {
    const auto L = parse_field_spec(base_spec);
    BaseFieldSetup setup = field_k.empty()
                               ? corollary_setup(L, p, degree)
                               : theorem_setup(L, p, parse_field_spec(field_k));
    const QuotientRef quotient =
        quotient_label == "auto" ? auto_quotient() : named_quotient(quotient_label);
    const FactsRegistry facts = load_facts(facts_path);

    const CriterionReport report = evaluate(make_torsion_target(m, n), setup, quotient, facts,
                                            {budget, threads});
    if (format == "records")
        std::cout << render_records(report);
    else
        std::cout << render_transcript(report);
    return report.verdict == Verdict::Certified ? 0 : 1;
}

int run_cusp_fields(i64 m, i64 n, i64 p, const std::string& base_spec,
                    const std::string& format) {
    const auto components = enumerate_components(m, n);
    const bool relative = base_spec != "Q";
    const AbelianFieldSpec base = parse_field_spec(base_spec);
    const bool with_prime = p != 0;

    if (format == "records") {
        std::cout << schema_record_line() << "\n";
        for (const auto& c : components) {
            json j{{"record", "cusp_component"},
                   {"m", m},
                   {"n", n},
                   {"r", c.r},
                   {"field", field_name(c.field)},
                   {"field_spec", field_spec_string(c.field)},
                   {"degree", c.field.degree}};
            if (with_prime) {
                if (relative) {
                    const auto s = relative_splitting(c.field, base, p);
                    j["e"] = s.e_rel;
                    j["f"] = s.f_rel;
                    j["g"] = s.count_per_prime;
                    j["base"] = field_name(base);
                } else {
                    const auto s = splitting_over_q(c.field, p);
                    j["e"] = s.e;
                    j["f"] = s.f;
                    j["g"] = s.g;
                }
            }
            std::cout << j.dump() << "\n";
        }
        return 0;
    }

    std::cout << "cusp components of X1(" << m << "," << n << ")\n";
    for (const auto& c : components) {
        std::cout << "  r=" << c.r << "  " << field_name(c.field) << " (degree "
                  << c.field.degree << ")";
        if (with_prime) {
            if (relative) {
                const auto s = relative_splitting(c.field, base, p);
                std::cout << "  over " << field_name(base) << " at p=" << p << ": e=" << s.e_rel
                          << " f=" << s.f_rel << " count=" << s.count_per_prime;
            } else {
                const auto s = splitting_over_q(c.field, p);
                std::cout << "  at p=" << p << ": e=" << s.e << " f=" << s.f << " g=" << s.g;
            }
        }
        std::cout << "\n";
    }
    return 0;
}

int run_splitting(const std::string& field_spec, i64 p, const std::string& base_spec,
                  const std::string& format) {
    const auto F = parse_field_spec(field_spec);
    if (base_spec == "Q") {
        const auto s = splitting_over_q(F, p);
        if (format == "records") {
            std::cout << schema_record_line() << "\n"
                      << json{{"record", "splitting"},
                              {"field", field_name(F)},
                              {"p", p},
                              {"e", s.e},
                              {"f", s.f},
                              {"g", s.g}}
                             .dump()
                      << "\n";
        } else {
            std::cout << p << " in " << field_name(F) << ": e=" << s.e << " f=" << s.f
                      << " g=" << s.g << "\n";
        }
        return 0;
    }
    const auto base = parse_field_spec(base_spec);
    const auto s = relative_splitting(F, base, p);
    if (format == "records") {
        std::cout << schema_record_line() << "\n"
                  << json{{"record", "relative_splitting"},
                          {"field", field_name(F)},
                          {"base", field_name(base)},
                          {"p", p},
                          {"e", s.e_rel},
                          {"f", s.f_rel},
                          {"count_per_prime", s.count_per_prime}}
                         .dump()
                  << "\n";
    } else {
        std::cout << "primes over " << p << " in " << field_name(F) << " relative to "
                  << field_name(base) << ": e=" << s.e_rel << " f=" << s.f_rel
                  << " count=" << s.count_per_prime << "\n";
    }
    return 0;
}

std::string curve_string(const WeierstrassCurve& E) {
    return "[" + std::to_string(E.a1) + "," + std::to_string(E.a2) + "," +
           std::to_string(E.a3) + "," + std::to_string(E.a4) + "," + std::to_string(E.a6) + "]";
}

int run_census(i64 p, i64 k, std::optional<i64> order, i64 budget, int threads,
               const std::string& format) {
    const FiniteField F = FiniteField::make(p, k);
    const auto records = census(F, budget, threads, order);
    if (format == "records") {
        std::cout << schema_record_line() << "\n";
        for (const auto& r : records)
            std::cout << json{{"record", "census"},
                              {"q", F.q()},
                              {"curve", {r.curve.a1, r.curve.a2, r.curve.a3, r.curve.a4,
                                         r.curve.a6}},
                              {"points", r.n_points},
                              {"d1", r.structure.d1},
                              {"d2", r.structure.d2}}
                             .dump()
                      << "\n";
        return 0;
    }
    std::cout << "census of F_" << F.q() << " (modulus coefficients";
    for (i64 c : F.modulus()) std::cout << " " << c;
    std::cout << "; curve = [a1,a2,a3,a4,a6] as element indices)\n";
    for (const auto& r : records)
        std::cout << "  " << curve_string(r.curve) << "  N=" << r.n_points << "  ("
                  << r.structure.d1 << "," << r.structure.d2 << ")\n";
    std::cout << records.size() << " curves\n";
    return 0;
}

int run_admissible(i64 p, i64 k, const std::string& format) {
    if (k < 1) throw std::domain_error("field exponent must be positive");
    i64 q = 1;
    for (i64 i = 0; i < k; ++i) {
        if (q > (i64{1} << 50) / p)
            throw std::domain_error("field size " + std::to_string(p) + "^" +
                                    std::to_string(k) + " exceeds 2^50");
        q *= p;
    }
    const auto orders = admissible_orders(q);
    if (format == "records") {
        std::cout << schema_record_line() << "\n"
                  << json{{"record", "admissible_orders"},
                          {"q", q},
                          {"orders", std::vector<i64>(orders.begin(), orders.end())}}
                         .dump()
                  << "\n";
        return 0;
    }
    std::cout << "admissible curve orders over F_" << q << ":";
    for (i64 n : orders) std::cout << " " << n;
    std::cout << "\n";
    return 0;
}

int run_reproduce(const std::string& facts_path, i64 budget, int threads,
                  const std::string& format, bool verbose) {
    const FactsRegistry facts = load_facts(facts_path);
    const auto result = reproduce_cases(facts, {budget, threads});
    const auto oos = out_of_scope_cases();

    if (format == "records") {
        std::cout << schema_record_line() << "\n";
        for (const auto& r : result.results)
            std::cout << json{{"record", "case"},
                              {"label", r.case_study.label},
                              {"description", r.case_study.description},
                              {"expected", "certified"},
                              {"verdict", to_string(r.report.verdict)}}
                             .dump()
                      << "\n";
        for (const auto& c : oos)
            std::cout << json{{"record", "out_of_scope"},
                              {"label", c.label},
                              {"group", c.group},
                              {"method", c.method}}
                             .dump()
                      << "\n";
        std::cout << json{{"record", "summary"},
                          {"cases", result.results.size()},
                          {"all_certified", result.all_certified}}
                         .dump()
                  << "\n";
        return result.all_certified ? 0 : 1;
    }

    std::cout << "criterion case studies (expected verdict: certified)\n";
    for (const auto& r : result.results) {
        std::cout << "  " << (r.report.verdict == Verdict::Certified ? "CERTIFIED    " :
                                                                       "NOT CERTIFIED")
                  << "  " << r.case_study.label << "  -  " << r.case_study.description << "\n";
        if (verbose) std::cout << render_transcript(r.report) << "\n";
    }
    std::cout << "\nout of scope for this engine (settled by other methods):\n";
    for (const auto& c : oos)
        std::cout << "  OutOfScope  " << c.label << "  -  " << c.group << ": " << c.method
                  << "\n";
    std::cout << "\n" << result.results.size() << " criterion cases, "
              << (result.all_certified ? "all certified" : "NOT all certified") << "; "
              << oos.size() << " out-of-scope cases listed\n";
    return result.all_certified ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"torcrit: rules out torsion subgroups C_m + C_n of elliptic curves over "
                 "number fields via cusp fields, prime splitting and finite-field censuses"};
    app.require_subcommand(1);

    std::string format = "human";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"human", "records"}))
        ->capture_default_str();
    int threads = default_threads();
    app.add_option("--threads", threads, "worker threads for censuses")
        ->check(CLI::PositiveNumber);

    // check
    auto* check = app.add_subcommand("check", "run the criterion for one torsion target");
    check->fallthrough();
    i64 m = 1, n = 0, p = 0, degree = 0, budget = kDefaultCensusBudget;
    std::string base_spec = "Q", field_k, quotient_label = "auto", facts_path;
    check->add_option("--m", m, "first invariant of the target group")->capture_default_str();
    check->add_option("--n", n, "second invariant of the target group")->required();
    check->add_option("--p", p, "rational prime under the chosen prime of the base")
        ->required();
    check->add_option("--base", base_spec,
                      "base field L: Q | zeta(N) | zeta+(N) | N[:gens[:pm1]]")
        ->capture_default_str();
    check->add_option("--degree", degree, "corollary mode: degree d of the extensions of L");
    check->add_option("--field-K", field_k, "theorem mode: the abelian field K itself");
    check->add_option("--quotient", quotient_label,
                      "cusp data: 'auto' or a quotient_cusp_data label from the facts file")
        ->capture_default_str();
    check->add_option("--facts", facts_path, "facts file (default: built-in registry)");
    check->add_option("--census-budget", budget, "largest field size the census may sweep")
        ->capture_default_str();

    // cusp-fields
    auto* cusps = app.add_subcommand("cusp-fields", "table of cusp component fields of X1(m,n)");
    cusps->fallthrough();
    i64 cm = 1, cn = 0, cp = 0;
    std::string cusp_base = "Q";
    cusps->add_option("--m", cm, "m of X1(m,n)")->capture_default_str();
    cusps->add_option("--n", cn, "n of X1(m,n)")->required();
    cusps->add_option("--p", cp, "also print splitting data at this prime");
    cusps->add_option("--base", cusp_base, "base field for relative splitting data")
        ->capture_default_str();

    // splitting
    auto* split = app.add_subcommand("splitting", "prime decomposition in an abelian field");
    split->fallthrough();
    std::string split_field, split_base = "Q";
    i64 sp = 0;
    split->add_option("--field", split_field, "the abelian field")->required();
    split->add_option("--p", sp, "rational prime")->required();
    split->add_option("--base", split_base, "subfield for relative data")
        ->capture_default_str();

    // census
    auto* cen = app.add_subcommand("census", "point counts and group structures over F_{p^k}");
    cen->fallthrough();
    i64 fp = 0, fk = 1, census_budget = kDefaultCensusBudget;
    i64 order_filter = 0;
    cen->add_option("--p", fp, "characteristic")->required();
    cen->add_option("--k", fk, "field exponent")->capture_default_str();
    cen->add_option("--order", order_filter, "only report curves with this point count");
    cen->add_option("--census-budget", census_budget, "largest admissible field size")
        ->capture_default_str();

    // admissible
    auto* adm = app.add_subcommand("admissible", "realized curve orders over F_{p^k}");
    adm->fallthrough();
    i64 ap = 0, ak = 1;
    adm->add_option("--p", ap, "characteristic")->required();
    adm->add_option("--k", ak, "field exponent")->capture_default_str();

    // reproduce-paper
    auto* rep = app.add_subcommand("reproduce-paper",
                                   "re-run the built-in catalog of case studies");
    rep->fallthrough();
    std::string rep_facts;
    i64 rep_budget = kDefaultCensusBudget;
    bool rep_verbose = false;
    rep->add_option("--facts", rep_facts, "facts file (default: built-in registry)");
    rep->add_option("--census-budget", rep_budget, "largest field size the census may sweep")
        ->capture_default_str();
    rep->add_flag("--verbose", rep_verbose, "print the full transcript of every case");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (check->parsed()) {
            if ((degree == 0) == field_k.empty()) {
                std::cerr << "error: exactly one of --degree and --field-K is required\n";
                return 2;
            }
            return run_check(base_spec, m, n, p, degree, field_k, quotient_label, facts_path,
                             budget, threads, format);
        }
        if (cusps->parsed()) return run_cusp_fields(cm, cn, cp, cusp_base, format);
        if (split->parsed()) return run_splitting(split_field, sp, split_base, format);
        if (cen->parsed())
            return run_census(fp, fk,
                              order_filter == 0 ? std::optional<i64>{} : order_filter,
                              census_budget, threads, format);
        if (adm->parsed()) return run_admissible(ap, ak, format);
        if (rep->parsed())
            return run_reproduce(rep_facts, rep_budget, threads, format, rep_verbose);
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
