#pragma once

#include "stanley/graph.hpp"
#include "stanley/independence.hpp"

#include <atomic>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace stanley {

/// A graph family to scan: one of the named families or every graph.
struct ScanFamily {
    enum class Kind { named, all } kind = Kind::all;
    GraphFamily named = GraphFamily::complete;
};

/// "complete", "cycle", "path", "discrete" or "all".
std::optional<ScanFamily> parse_scan_family(std::string_view name);

/// Graphs of the family on n vertices. For `all`, one representative per
/// isomorphism class when dedup is set (every labelled graph otherwise).
/// Families a given n does not admit (cycles below 3) yield nothing.
std::vector<Graph> family_graphs(const ScanFamily& family, int n, bool dedup = true);

/// One line of scan output.
struct ScanRecord {
    std::string graph_key;
    int n = 0;
    std::vector<Edge> edges;
    int alpha = 0;
    std::uint64_t g = 0;
    int depth = 0;
    int gamma = 0;
    int qdepth = 0;
    std::optional<int> sdepth;
    /// "search", "shortcut", or "budget" when undecided.
    std::string sdepth_origin;
    ConjectureStatus status = ConjectureStatus::undecided;
};

ScanRecord evaluate_graph(const Graph& graph, const SandwichOptions& options);

/// Compact single-line JSON; keys: graph_key, n, edges, alpha, g, depth,
/// gamma, qdepth, sdepth (null when undecided), sdepth_origin, status.
std::string to_json_line(const ScanRecord& record);
ScanRecord record_from_json_line(std::string_view line);

/// graph_key values of an existing scan output. Malformed trailing lines (an
/// interrupted write) are ignored.
std::set<std::string> read_scan_keys(std::istream& in);

struct ScanConfig {
    ScanFamily family;
    int n_min = 1;
    int n_max = 4;
    bool dedup = true;
    unsigned threads = 1;
    SandwichOptions sandwich;
};

struct ScanSummary {
    int evaluated = 0;
    int skipped = 0;
    int holds = 0;
    int fails = 0;
    int undecided = 0;
    bool interrupted = false;
};

/**
 * Evaluates every graph of the family for n_min..n_max whose key is not in
 * `skip`, writing one JSON line per graph. Graphs are processed in batches of
 * `threads`; each batch is written sorted by key and flushed, so an
 * interrupted scan leaves only complete records behind. Records finished
 * after `cancel` was raised are dropped.
 */
ScanSummary run_scan(const ScanConfig& config, const std::set<std::string>& skip, std::ostream& out,
                     const std::atomic<bool>* cancel = nullptr);

} // namespace stanley
