#pragma once

// Registry of literature-sourced inputs the criterion cannot compute for
// itself: gonality lower bounds, Mordell-Weil rank statements, 2-torsion
// statements, and cusp data of quotient curves. Every entry carries a
// citation that is surfaced verbatim in reports.
//
// File format, one entry per line:
//   curve_label | fact_kind | value | citation
// with '#' comments and blank lines ignored. Kinds and values:
//   gonality_lower_bound        positive integer
//   jacobian_rank_zero          true
//   jacobian_two_torsion_trivial true
//   quotient_cusp_data          "auto M N"  or  "fields spec1 ; spec2 ; ..."

#include <map>
#include <optional>
#include <string>

#include "torcrit/cusps.hpp"

namespace torcrit {

enum class FactKind {
    GonalityLowerBound,
    JacobianRankZero,
    JacobianTwoTorsionTrivial,
    QuotientCuspData,
};

std::string to_string(FactKind k);
FactKind fact_kind_from_string(const std::string& s);

struct FactEntry {
    std::string curve_label;
    FactKind kind = FactKind::GonalityLowerBound;
    std::string value;
    std::string citation;
};

class FactsRegistry {
public:
    static FactsRegistry parse(const std::string& text);
    static FactsRegistry load_file(const std::string& path);

    void add(FactEntry entry);
    bool remove(const std::string& curve_label, FactKind kind);
    std::optional<FactEntry> find(const std::string& curve_label, FactKind kind) const;
    std::size_t size() const { return entries_.size(); }

    // Typed accessors; nullopt when the entry is absent.
    std::optional<i64> gonality_lower_bound(const std::string& curve_label) const;
    std::optional<std::string> rank_zero_citation(const std::string& curve_label) const;
    std::optional<std::string> two_torsion_trivial_citation(const std::string& curve_label) const;
    std::optional<QuotientCuspData> quotient_cusp_data(const std::string& curve_label) const;

    const std::map<std::pair<std::string, std::string>, FactEntry>& entries() const {
        return entries_;
    }

private:
    std::map<std::pair<std::string, std::string>, FactEntry> entries_;
};

// The registry shipped with the repository, embedded at build time.
const std::string& builtin_facts_text();
const FactsRegistry& builtin_facts();

}  // namespace torcrit
