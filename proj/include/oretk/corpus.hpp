#pragma once

#include "oretk/catalog.hpp"
#include "oretk/orelab.hpp"

#include <optional>
#include <string>
#include <vector>

namespace oretk {

inline constexpr const char* kToolName = "oretk";
inline constexpr const char* kToolVersion = "0.1.0";

struct CorpusOptions {
    std::optional<int> max_order;          // keep groups with order <= this
    std::optional<std::string> only_group; // keep a single named group
    bool inject_mock_counterexample = false;  // testing aid for the exit contract
    Caps caps;
};

struct CorpusRow {
    std::string group_name;
    int group_order = 0;
    std::string subgroup;  // generator list or "e"
    IntervalReport report;
    bool dual_ore_applicable = false;  // distributive intervals only
    bool dual_ore_holds = true;
    std::string error;  // nonempty when the row failed
};

struct GroupBoundRow {
    std::string group_name;
    int group_order = 0;
    BoundCheck bound;
    std::string error;
};

struct CorpusAggregates {
    int total_intervals = 0;
    int distributive = 0;
    int dedekind = 0;
    int cyclic = 0;
    int h_cyclic = 0;
    int linearly_primitive = 0;
    int dual_ore_checked = 0;
    int dual_ore_counterexamples = 0;
    int bound_checked = 0;
    int bound_counterexamples = 0;
    int errors = 0;
};

struct CorpusReport {
    std::string version;
    std::string catalog_description;
    std::string catalog_hash;
    std::vector<CorpusRow> rows;
    std::vector<GroupBoundRow> bounds;
    CorpusAggregates aggregates;
    long timing_ms = 0;

    Rational cyclic_fraction() const;
};

/// Classifies every interval [H, G] over all subgroups H of each catalog
/// group, in canonical order. Per-group failures become error rows.
CorpusReport run_corpus(const std::vector<CatalogEntry>& catalog, const CorpusOptions& options);

/// 0 = clean, 2 = conjecture counterexample, 1 = internal error row present.
int exit_status_for(const CorpusReport& report);

/// Ordered-key JSON; byte-stable apart from the timing_ms field.
std::string corpus_report_to_json(const CorpusReport& report, bool pretty = false);

/// One CSV line per interval row.
std::string corpus_report_to_csv(const CorpusReport& report);

}  // namespace oretk
