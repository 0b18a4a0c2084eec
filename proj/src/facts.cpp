#include "torcrit/facts.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace torcrit {

std::string to_string(FactKind k) {
    switch (k) {
        case FactKind::GonalityLowerBound: return "gonality_lower_bound";
        case FactKind::JacobianRankZero: return "jacobian_rank_zero";
        case FactKind::JacobianTwoTorsionTrivial: return "jacobian_two_torsion_trivial";
        case FactKind::QuotientCuspData: return "quotient_cusp_data";
    }
    return "?";
}

FactKind fact_kind_from_string(const std::string& s) {
    if (s == "gonality_lower_bound") return FactKind::GonalityLowerBound;
    if (s == "jacobian_rank_zero") return FactKind::JacobianRankZero;
    if (s == "jacobian_two_torsion_trivial") return FactKind::JacobianTwoTorsionTrivial;
    if (s == "quotient_cusp_data") return FactKind::QuotientCuspData;
    throw std::domain_error("unknown fact kind '" + s + "'");
}

namespace {

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_on(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(strip(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(strip(cur));
    return parts;
}

}  // namespace

void FactsRegistry::add(FactEntry entry) {
    if (entry.curve_label.empty()) throw std::domain_error("fact entry without curve label");
    if (strip(entry.citation).empty())
        throw std::domain_error("fact entry for '" + entry.curve_label +
                                "' has an empty citation");
    if (entry.kind == FactKind::GonalityLowerBound) {
        const i64 v = std::stoll(entry.value);
        if (v < 1) throw std::domain_error("gonality lower bound must be positive");
    }
    if (entry.kind == FactKind::JacobianRankZero ||
        entry.kind == FactKind::JacobianTwoTorsionTrivial) {
        if (entry.value != "true")
            throw std::domain_error("fact '" + to_string(entry.kind) +
                                    "' only records affirmative values ('true')");
    }
    entries_[{entry.curve_label, to_string(entry.kind)}] = std::move(entry);
}

bool FactsRegistry::remove(const std::string& curve_label, FactKind kind) {
    return entries_.erase({curve_label, to_string(kind)}) > 0;
}

std::optional<FactEntry> FactsRegistry::find(const std::string& curve_label,
                                             FactKind kind) const {
    auto it = entries_.find({curve_label, to_string(kind)});
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

FactsRegistry FactsRegistry::parse(const std::string& text) {
    FactsRegistry registry;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string s = strip(line);
        if (s.empty() || s[0] == '#') continue;
        const auto parts = split_on(s, '|');
        if (parts.size() != 4)
            throw std::domain_error("facts line " + std::to_string(lineno) +
                                    ": expected 'label | kind | value | citation'");
        FactEntry entry;
        entry.curve_label = parts[0];
        entry.kind = fact_kind_from_string(parts[1]);
        entry.value = parts[2];
        entry.citation = parts[3];
        try {
            registry.add(std::move(entry));
        } catch (const std::exception& e) {
            throw std::domain_error("facts line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return registry;
}

FactsRegistry FactsRegistry::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::domain_error("cannot open facts file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

std::optional<i64> FactsRegistry::gonality_lower_bound(const std::string& curve_label) const {
    const auto entry = find(curve_label, FactKind::GonalityLowerBound);
    if (!entry) return std::nullopt;
    return std::stoll(entry->value);
}

std::optional<std::string> FactsRegistry::rank_zero_citation(
    const std::string& curve_label) const {
    const auto entry = find(curve_label, FactKind::JacobianRankZero);
    if (!entry) return std::nullopt;
    return entry->citation;
}

std::optional<std::string> FactsRegistry::two_torsion_trivial_citation(
    const std::string& curve_label) const {
    const auto entry = find(curve_label, FactKind::JacobianTwoTorsionTrivial);
    if (!entry) return std::nullopt;
    return entry->citation;
}

std::optional<QuotientCuspData> FactsRegistry::quotient_cusp_data(
    const std::string& curve_label) const {
    const auto entry = find(curve_label, FactKind::QuotientCuspData);
    if (!entry) return std::nullopt;

    const std::string& value = entry->value;
    QuotientCuspData data;
    data.curve_label = curve_label;
    data.niceness_citation = entry->citation;

    std::istringstream in(value);
    std::string head;
    in >> head;
    if (head == "auto") {
        i64 m = 0, n = 0;
        if (!(in >> m >> n))
            throw std::domain_error("quotient_cusp_data for '" + curve_label +
                                    "': expected 'auto M N'");
        data.components = enumerate_components(m, n);
        return data;
    }
    if (head == "fields") {
        std::string rest;
        std::getline(in, rest);
        int index = 0;
        for (const auto& part : split_on(rest, ';')) {
            if (part.empty()) continue;
            CuspComponent comp;
            comp.r = 0;  // unknown for externally supplied components
            comp.field = parse_field_spec(part);
            comp.label = "C" + std::to_string(++index);
            data.components.push_back(std::move(comp));
        }
        if (data.components.empty())
            throw std::domain_error("quotient_cusp_data for '" + curve_label +
                                    "' lists no fields");
        return data;
    }
    throw std::domain_error("quotient_cusp_data for '" + curve_label +
                            "': value must start with 'auto' or 'fields'");
}

const FactsRegistry& builtin_facts() {
    static const FactsRegistry registry = FactsRegistry::parse(builtin_facts_text());
    return registry;
}

}  // namespace torcrit
