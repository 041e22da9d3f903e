#include "oretk/corpus.hpp"

#include "oretk/errors.hpp"

#include <nlohmann/json.hpp>

#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

namespace oretk {

namespace {

struct GroupResult {
    std::vector<CorpusRow> rows;
    GroupBoundRow bound;
};

GroupResult process_group(const CatalogEntry& entry, const CorpusOptions& options) {
    GroupResult result;
    const GroupPtr& g = entry.group;
    result.bound.group_name = entry.name;
    result.bound.group_order = g->order();

    SubgroupLattice lattice;
    CharacterTable table;
    try {
        lattice = all_subgroups(g, options.caps.subgroup_cap);
        table = character_table(g);
    } catch (const std::exception& e) {
        CorpusRow row;
        row.group_name = entry.name;
        row.group_order = g->order();
        row.subgroup = "*";
        row.error = e.what();
        result.bound.error = row.error;
        result.rows.push_back(std::move(row));
        return result;
    }

    for (const auto& node : lattice.nodes) {
        CorpusRow row;
        row.group_name = entry.name;
        row.group_order = g->order();
        row.subgroup = subgroup_label(node);
        try {
            IntervalOfGroups iv = interval_in(lattice, node);
            row.report = classify_interval(iv, table);
            row.dual_ore_applicable = row.report.distributive;
            if (row.dual_ore_applicable) {
                row.dual_ore_holds = dual_ore_check(iv, table).holds;
            }
        } catch (const std::exception& e) {
            row.error = e.what();
        }
        result.rows.push_back(std::move(row));
    }

    try {
        result.bound.bound = check_upper_bound(lattice, table);
    } catch (const std::exception& e) {
        result.bound.error = e.what();
    }
    return result;
}

}  // namespace

Rational CorpusReport::cyclic_fraction() const {
    if (aggregates.total_intervals == 0) return 0;
    return Rational(aggregates.cyclic, aggregates.total_intervals);
}

CorpusReport run_corpus(const std::vector<CatalogEntry>& catalog, const CorpusOptions& options) {
    auto started = std::chrono::steady_clock::now();

    std::vector<CatalogEntry> selected;
    for (const auto& entry : catalog) {
        if (options.max_order && entry.group->order() > *options.max_order) continue;
        if (options.only_group && entry.name != *options.only_group) continue;
        selected.push_back(entry);
    }

    CorpusReport report;
    report.version = std::string(kToolName) + " " + kToolVersion;
    {
        std::ostringstream desc;
        desc << "builtin-or-file catalog, " << selected.size() << " groups:";
        for (const auto& e : selected) desc << ' ' << e.name;
        report.catalog_description = desc.str();
    }
    report.catalog_hash = catalog_hash(selected);

    // Work pool over groups; results buffered and merged in catalog order.
    std::vector<GroupResult> results(selected.size());
    {
        std::atomic<std::size_t> next{0};
        unsigned workers = std::min<std::size_t>(
            std::max(1u, std::thread::hardware_concurrency()), selected.size());
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < selected.size();
                     i = next.fetch_add(1)) {
                    results[i] = process_group(selected[i], options);
                }
            });
        }
        for (auto& t : pool) t.join();
    }
    for (auto& result : results) {
        for (auto& row : result.rows) report.rows.push_back(std::move(row));
        report.bounds.push_back(std::move(result.bound));
    }

    if (options.inject_mock_counterexample) {
        CorpusRow mock;
        mock.group_name = "MOCK";
        mock.group_order = 0;
        mock.subgroup = "e";
        mock.dual_ore_applicable = true;
        mock.dual_ore_holds = false;
        mock.report.distributive = true;
        mock.report.interval_id = "[mock]";
        report.rows.push_back(std::move(mock));
    }

    for (const auto& row : report.rows) {
        if (!row.error.empty()) {
            ++report.aggregates.errors;
            continue;
        }
        ++report.aggregates.total_intervals;
        if (row.report.distributive) ++report.aggregates.distributive;
        if (row.report.dedekind) ++report.aggregates.dedekind;
        if (row.report.cyclic) ++report.aggregates.cyclic;
        if (row.report.h_cyclic) ++report.aggregates.h_cyclic;
        if (row.report.linearly_primitive) ++report.aggregates.linearly_primitive;
        if (row.dual_ore_applicable) {
            ++report.aggregates.dual_ore_checked;
            if (!row.dual_ore_holds) ++report.aggregates.dual_ore_counterexamples;
        }
    }
    for (const auto& row : report.bounds) {
        if (!row.error.empty()) {
            ++report.aggregates.errors;
            continue;
        }
        ++report.aggregates.bound_checked;
        if (!row.bound.ok) ++report.aggregates.bound_counterexamples;
    }

    auto finished = std::chrono::steady_clock::now();
    report.timing_ms = static_cast<long>(
        std::chrono::duration_cast<std::chrono::milliseconds>(finished - started).count());
    return report;
}

int exit_status_for(const CorpusReport& report) {
    if (report.aggregates.errors > 0) return 1;
    if (report.aggregates.dual_ore_counterexamples > 0 ||
        report.aggregates.bound_counterexamples > 0) {
        return 2;
    }
    return 0;
}

std::string corpus_report_to_json(const CorpusReport& report, bool pretty) {
    nlohmann::ordered_json j;
    j["version"] = report.version;
    j["catalog"] = report.catalog_description;
    j["catalog_hash"] = report.catalog_hash;
    j["timing_ms"] = report.timing_ms;

    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : report.rows) {
        nlohmann::ordered_json r;
        r["group"] = row.group_name;
        r["group_order"] = row.group_order;
        r["subgroup"] = row.subgroup;
        if (!row.error.empty()) {
            r["error"] = row.error;
        } else {
            r["report"] = nlohmann::ordered_json::parse(interval_report_to_json(row.report));
            r["dual_ore"] = row.dual_ore_applicable
                                ? nlohmann::ordered_json(row.dual_ore_holds ? "holds"
                                                                            : "COUNTEREXAMPLE")
                                : nlohmann::ordered_json(nullptr);
        }
        rows.push_back(std::move(r));
    }
    j["intervals"] = std::move(rows);

    nlohmann::ordered_json bounds = nlohmann::ordered_json::array();
    for (const auto& row : report.bounds) {
        nlohmann::ordered_json r;
        r["group"] = row.group_name;
        r["group_order"] = row.group_order;
        if (!row.error.empty()) {
            r["error"] = row.error;
        } else {
            r["faithful_components"] = row.bound.faithful_components;
            r["chain_length"] = row.bound.chain_length;
            r["ok"] = row.bound.ok;
        }
        bounds.push_back(std::move(r));
    }
    j["bounds"] = std::move(bounds);

    nlohmann::ordered_json agg;
    agg["total_intervals"] = report.aggregates.total_intervals;
    agg["distributive"] = report.aggregates.distributive;
    agg["dedekind"] = report.aggregates.dedekind;
    agg["cyclic"] = report.aggregates.cyclic;
    agg["h_cyclic"] = report.aggregates.h_cyclic;
    agg["linearly_primitive"] = report.aggregates.linearly_primitive;
    agg["dual_ore_checked"] = report.aggregates.dual_ore_checked;
    agg["dual_ore_counterexamples"] = report.aggregates.dual_ore_counterexamples;
    agg["bound_checked"] = report.aggregates.bound_checked;
    agg["bound_counterexamples"] = report.aggregates.bound_counterexamples;
    agg["errors"] = report.aggregates.errors;
    agg["cyclic_fraction"] = rational_to_string(report.cyclic_fraction());
    j["aggregates"] = std::move(agg);

    return pretty ? j.dump(2) : j.dump();
}

std::string corpus_report_to_csv(const CorpusReport& report) {
    std::ostringstream out;
    out << "group,group_order,subgroup,nodes,height,distributive,boolean,top_boolean,"
           "bottom_boolean,dedekind,cyclic,h_cyclic,linearly_primitive,"
           "group_linearly_primitive,witness,coatom_sum_up,coatom_sum_down,dual_ore,error\n";
    for (const auto& row : report.rows) {
        out << row.group_name << ',' << row.group_order << ',' << '"' << row.subgroup << '"'
            << ',';
        if (!row.error.empty()) {
            out << ",,,,,,,,,,,,,,\"" << row.error << "\"\n";
            continue;
        }
        const auto& r = row.report;
        out << r.num_nodes << ',' << r.height << ',' << r.distributive << ',' << r.boolean_lattice
            << ',' << r.top_boolean << ',' << r.bottom_boolean << ',' << r.dedekind << ','
            << r.cyclic << ',' << r.h_cyclic << ',' << r.linearly_primitive << ','
            << r.group_linearly_primitive << ',' << '"'
            << (r.witness ? r.witness->to_cycle_string() : "") << '"' << ','
            << rational_to_string(r.coatom_sum_up) << ','
            << rational_to_string(r.coatom_sum_down) << ','
            << (row.dual_ore_applicable ? (row.dual_ore_holds ? "holds" : "COUNTEREXAMPLE") : "")
            << ",\n";
    }
    return out.str();
}

}  // namespace oretk
