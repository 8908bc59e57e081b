#include "stanley/scan.hpp"

#include "stanley/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <istream>
#include <ostream>
#include <thread>

namespace stanley {

std::optional<ScanFamily> parse_scan_family(std::string_view name)
{
    if (name == "all")
        return ScanFamily{ScanFamily::Kind::all, GraphFamily::complete};
    if (auto f = parse_graph_family(name))
        return ScanFamily{ScanFamily::Kind::named, *f};
    return std::nullopt;
}

std::vector<Graph> family_graphs(const ScanFamily& family, int n, bool dedup)
{
    if (family.kind == ScanFamily::Kind::all)
        return all_graphs(n, dedup);
    if (family.named == GraphFamily::cycle && n < 3)
        return {};
    return {make_graph(family.named, n)};
}

ScanRecord evaluate_graph(const Graph& graph, const SandwichOptions& options)
{
    const IndependenceIdealData data = independence_ideal(graph);
    const SandwichReport report = sandwich_report(graph, options);
    ScanRecord r;
    r.graph_key = graph_key(graph);
    r.n = graph.n();
    r.edges = graph.edges();
    r.alpha = data.alpha;
    r.g = data.g;
    r.depth = report.depth;
    r.gamma = report.gamma;
    r.qdepth = report.qdepth;
    if (report.sdepth_status == DepthStatus::decided) {
        r.sdepth = report.sdepth;
        r.sdepth_origin = report.shortcut ? "shortcut" : "search";
    } else {
        r.sdepth_origin = "budget";
    }
    r.status = report.conjecture;
    return r;
}

std::string to_json_line(const ScanRecord& r)
{
    nlohmann::ordered_json j;
    j["graph_key"] = r.graph_key;
    j["n"] = r.n;
    j["edges"] = r.edges;
    j["alpha"] = r.alpha;
    j["g"] = r.g;
    j["depth"] = r.depth;
    j["gamma"] = r.gamma;
    j["qdepth"] = r.qdepth;
    j["sdepth"] = r.sdepth ? nlohmann::ordered_json(*r.sdepth) : nlohmann::ordered_json(nullptr);
    j["sdepth_origin"] = r.sdepth_origin;
    j["status"] = std::string(to_string(r.status));
    return j.dump();
}

ScanRecord record_from_json_line(std::string_view line)
{
    try {
        auto j = nlohmann::json::parse(line);
        ScanRecord r;
        r.graph_key = j.at("graph_key").get<std::string>();
        r.n = j.at("n").get<int>();
        r.edges = j.at("edges").get<std::vector<Edge>>();
        r.alpha = j.at("alpha").get<int>();
        r.g = j.at("g").get<std::uint64_t>();
        r.depth = j.at("depth").get<int>();
        r.gamma = j.at("gamma").get<int>();
        r.qdepth = j.at("qdepth").get<int>();
        if (!j.at("sdepth").is_null())
            r.sdepth = j.at("sdepth").get<int>();
        r.sdepth_origin = j.at("sdepth_origin").get<std::string>();
        const auto status = j.at("status").get<std::string>();
        if (status == "holds")
            r.status = ConjectureStatus::holds;
        else if (status == "fails")
            r.status = ConjectureStatus::fails;
        else if (status == "undecided")
            r.status = ConjectureStatus::undecided;
        else
            throw ParseError("unknown status '" + status + "'");
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed scan record: ") + e.what());
    }
}

std::set<std::string> read_scan_keys(std::istream& in)
{
    std::set<std::string> keys;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        try {
            auto j = nlohmann::json::parse(line);
            if (j.contains("graph_key") && j["graph_key"].is_string())
                keys.insert(j["graph_key"].get<std::string>());
        } catch (const nlohmann::json::exception&) {
            // Torn final line from an interrupted run.
        }
    }
    return keys;
}

ScanSummary run_scan(const ScanConfig& config, const std::set<std::string>& skip, std::ostream& out,
                     const std::atomic<bool>* cancel)
{
    ScanSummary summary;
    std::vector<std::pair<std::string, Graph>> pending;
    for (int n = config.n_min; n <= config.n_max; ++n)
        for (Graph& g : family_graphs(config.family, n, config.dedup)) {
            std::string key = graph_key(g);
            if (skip.count(key)) {
                ++summary.skipped;
                continue;
            }
            pending.emplace_back(std::move(key), std::move(g));
        }
    std::stable_sort(pending.begin(), pending.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    // Without dedup, labelled copies of one graph share a key; evaluate each key once.
    pending.erase(std::unique(pending.begin(), pending.end(),
                              [](const auto& a, const auto& b) { return a.first == b.first; }),
                  pending.end());

    SandwichOptions options = config.sandwich;
    options.search.cancel = cancel;
    options.search.threads = 1;
    const std::size_t batch = std::max(1U, config.threads);

    for (std::size_t begin = 0; begin < pending.size(); begin += batch) {
        if (cancel && cancel->load()) {
            summary.interrupted = true;
            break;
        }
        const std::size_t end = std::min(pending.size(), begin + batch);
        std::vector<ScanRecord> records(end - begin);
        std::vector<std::exception_ptr> errors(end - begin);
        auto work = [&](std::size_t i) {
            try {
                records[i - begin] = evaluate_graph(pending[i].second, options);
            } catch (...) {
                errors[i - begin] = std::current_exception();
            }
        };
        if (end - begin == 1) {
            work(begin);
        } else {
            std::vector<std::thread> pool;
            for (std::size_t i = begin; i < end; ++i)
                pool.emplace_back(work, i);
            for (auto& t : pool)
                t.join();
        }
        for (auto& e : errors)
            if (e)
                std::rethrow_exception(e);
        if (cancel && cancel->load()) {
            summary.interrupted = true;
            break;
        }
        for (const ScanRecord& r : records) {
            out << to_json_line(r) << '\n';
            ++summary.evaluated;
            switch (r.status) {
            case ConjectureStatus::holds:
                ++summary.holds;
                break;
            case ConjectureStatus::fails:
                ++summary.fails;
                break;
            case ConjectureStatus::undecided:
                ++summary.undecided;
                break;
            }
        }
        out.flush();
    }
    return summary;
}

} // namespace stanley
