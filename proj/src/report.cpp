#include "torcrit/report.hpp"

#include <sstream>
#include <stdexcept>

namespace torcrit {

namespace {

using nlohmann::json;

ConditionStatus status_from_string(const std::string& s) {
    if (s == "computed_pass") return ConditionStatus::ComputedPass;
    if (s == "computed_fail") return ConditionStatus::ComputedFail;
    if (s == "cited_pass") return ConditionStatus::CitedPass;
    if (s == "missing_fact") return ConditionStatus::MissingFact;
    if (s == "inconclusive") return ConditionStatus::Inconclusive;
    throw std::domain_error("unknown condition status '" + s + "'");
}

}  // namespace

nlohmann::json report_to_json(const CriterionReport& r) {
    json conditions = json::array();
    for (const auto& c : r.conditions)
        conditions.push_back({{"id", c.id},
                              {"status", to_string(c.status)},
                              {"evidence", c.evidence},
                              {"citation", c.citation}});
    return json{{"schema", std::string(kRecordSchemaName) + ".report/" +
                               std::to_string(kRecordSchemaVersion)},
                {"target", {{"m", r.target.m}, {"n", r.target.n}}},
                {"effective", {{"m", r.effective.m}, {"n", r.effective.n}}},
                {"base", r.base_name},
                {"p", r.p},
                {"mode", r.mode},
                {"degree", r.degree},
                {"norm_p0", r.norm_p0},
                {"quotient", r.quotient_label},
                {"niceness_citation", r.niceness_citation},
                {"allowed_degrees", r.allowed_degrees},
                {"h", r.ramification_lcm},
                {"conditions", conditions},
                {"verdict", to_string(r.verdict)}};
}

CriterionReport report_from_json(const nlohmann::json& j) {
    CriterionReport r;
    r.target = {j.at("target").at("m").get<i64>(), j.at("target").at("n").get<i64>()};
    r.effective = {j.at("effective").at("m").get<i64>(), j.at("effective").at("n").get<i64>()};
    r.base_name = j.at("base").get<std::string>();
    r.p = j.at("p").get<i64>();
    r.mode = j.at("mode").get<std::string>();
    r.degree = j.at("degree").get<i64>();
    r.norm_p0 = j.at("norm_p0").get<i64>();
    r.quotient_label = j.at("quotient").get<std::string>();
    r.niceness_citation = j.at("niceness_citation").get<std::string>();
    r.allowed_degrees = j.at("allowed_degrees").get<std::vector<i64>>();
    r.ramification_lcm = j.at("h").get<i64>();
    for (const auto& c : j.at("conditions")) {
        ConditionRecord rec;
        rec.id = c.at("id").get<std::string>();
        rec.status = status_from_string(c.at("status").get<std::string>());
        rec.evidence = c.at("evidence").get<std::string>();
        rec.citation = c.at("citation").get<std::string>();
        r.conditions.push_back(std::move(rec));
    }
    const std::string v = j.at("verdict").get<std::string>();
    r.verdict = v == "certified" ? Verdict::Certified : Verdict::NotCertified;
    return r;
}

std::string render_transcript(const CriterionReport& r) {
    std::ostringstream os;
    os << "criterion check: " << group_name(r.target) << " over degree-" << r.degree
       << " extensions of " << r.base_name << "\n";
    os << "  mode " << r.mode << ", p = " << r.p << ", Norm(p0) = " << r.norm_p0 << "\n";
    os << "  A' = " << group_name(r.effective) << " (#A' = " << r.effective.order() << "), S = {";
    for (std::size_t i = 0; i < r.allowed_degrees.size(); ++i) {
        if (i) os << ",";
        os << r.allowed_degrees[i];
    }
    os << "}, h = " << r.ramification_lcm << "\n";
    os << "  X' = " << r.quotient_label;
    if (!r.niceness_citation.empty()) os << "  [" << r.niceness_citation << "]";
    os << "\n";
    for (const auto& c : r.conditions) {
        os << "  " << c.id << ")";
        for (std::size_t pad = c.id.size(); pad < 4; ++pad) os << ' ';
        os << to_string(c.status) << "  " << c.evidence;
        if (!c.citation.empty()) os << "  [" << c.citation << "]";
        os << "\n";
    }
    os << "  verdict: " << (r.verdict == Verdict::Certified ? "CERTIFIED" : "NOT CERTIFIED")
       << "\n";
    return os.str();
}

std::string schema_record_line() {
    return nlohmann::json{{"record", "schema"},
                          {"name", kRecordSchemaName},
                          {"version", kRecordSchemaVersion}}
        .dump();
}

std::string render_records(const CriterionReport& r) {
    std::ostringstream os;
    os << schema_record_line() << "\n";
    os << json{{"record", "check"},
               {"target", group_name(r.target)},
               {"effective", group_name(r.effective)},
               {"base", r.base_name},
               {"p", r.p},
               {"mode", r.mode},
               {"degree", r.degree},
               {"norm_p0", r.norm_p0},
               {"quotient", r.quotient_label},
               {"allowed_degrees", r.allowed_degrees},
               {"h", r.ramification_lcm}}
              .dump()
       << "\n";
    for (const auto& c : r.conditions)
        os << json{{"record", "condition"},
                   {"id", c.id},
                   {"status", to_string(c.status)},
                   {"evidence", c.evidence},
                   {"citation", c.citation}}
                  .dump()
           << "\n";
    os << json{{"record", "verdict"}, {"value", to_string(r.verdict)}}.dump() << "\n";
    return os.str();
}

}  // namespace torcrit
