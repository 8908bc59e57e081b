#include "stanley/io.hpp"

#include "stanley/error.hpp"

#include <json.hpp>

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace stanley {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

std::string_view strip_comment(std::string_view s)
{
    if (auto hash = s.find('#'); hash != std::string_view::npos)
        s = s.substr(0, hash);
    return trim(s);
}

int parse_int(std::string_view s, int line, std::string_view what)
{
    s = trim(s);
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw ParseError("expected an integer for " + std::string(what) + ", got '" + std::string(s) + "'", line);
    return value;
}

// Splits on runs of whitespace.
std::vector<std::string_view> words(std::string_view s)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])))
            ++j;
        if (j > i)
            out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

int parse_n_assignment(std::string_view word, int line)
{
    if (word.substr(0, 2) != "n=")
        throw ParseError("expected 'n=<int>', got '" + std::string(word) + "'", line);
    int n = parse_int(word.substr(2), line, "n");
    if (n < 0)
        throw ParseError("n must be non-negative", line);
    return n;
}

int token_position(std::string_view token, VariableScheme scheme, int n, int line)
{
    if (token.empty())
        throw ParseError("empty variable token", line);
    const char prefix = token.front();
    const int index = parse_int(token.substr(1), line, "variable index");
    if (index < 1 || index > n)
        throw ParseError("variable '" + std::string(token) + "' outside 1.." + std::to_string(n), line);
    if (scheme == VariableScheme::x) {
        if (prefix != 'x')
            throw ParseError("unknown variable '" + std::string(token) + "' (expected x<i>)", line);
        return index;
    }
    if (prefix == 's')
        return index;
    if (prefix == 't')
        return n + index;
    throw ParseError("unknown variable '" + std::string(token) + "' (expected s<i> or t<i>)", line);
}

} // namespace

IdealFile parse_ideal(std::istream& in)
{
    IdealFile file;
    bool have_header = false;
    int ambient = 0;
    std::vector<VarSet> gens;
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string_view text = strip_comment(raw);
        if (text.empty())
            continue;
        if (!have_header) {
            auto parts = words(text);
            if (parts.size() == 1) {
                file.scheme = VariableScheme::x;
                file.declared_n = parse_n_assignment(parts[0], line);
                ambient = file.declared_n;
            } else if (parts.size() == 2 && parts[0] == "vars=s,t") {
                file.scheme = VariableScheme::st;
                file.declared_n = parse_n_assignment(parts[1], line);
                ambient = 2 * file.declared_n;
            } else if (parts.size() == 2 && parts[0] == "vars=x") {
                file.scheme = VariableScheme::x;
                file.declared_n = parse_n_assignment(parts[1], line);
                ambient = file.declared_n;
            } else {
                throw ParseError("expected header 'n=<int>' or 'vars=s,t n=<int>'", line);
            }
            if (ambient > kMaxVariables)
                throw ParseError("at most " + std::to_string(kMaxVariables) + " variables are supported", line);
            have_header = true;
            continue;
        }
        if (text == "1") {
            gens.emplace_back(ambient, 0);
            continue;
        }
        Mask bits = 0;
        std::size_t start = 0;
        while (true) {
            std::size_t star = text.find('*', start);
            std::string_view token = trim(text.substr(start, star == std::string_view::npos ? text.size() - start
                                                                                              : star - start));
            const int p = token_position(token, file.scheme, file.declared_n, line);
            const Mask bit = Mask{1} << (p - 1);
            if (bits & bit)
                throw ParseError("variable '" + std::string(token) + "' repeated; monomials must be squarefree",
                                 line);
            bits |= bit;
            if (star == std::string_view::npos)
                break;
            start = star + 1;
        }
        gens.emplace_back(ambient, bits);
    }
    if (!have_header)
        throw ParseError("missing 'n=<int>' header");
    file.ideal = minimalize(gens, ambient);
    return file;
}

IdealFile parse_ideal(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return parse_ideal(in);
}

IdealFile read_ideal_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open ideal file '" + path.string() + "'");
    try {
        return parse_ideal(in);
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

std::string monomial_to_string(const VarSet& u, VariableScheme scheme)
{
    if (u.empty())
        return "1";
    std::string out;
    const int block = scheme == VariableScheme::st ? u.n() / 2 : u.n();
    // s before t, each block ascending.
    for (int p : u.positions()) {
        if (!out.empty())
            out += '*';
        if (scheme == VariableScheme::x)
            out += "x" + std::to_string(p);
        else if (p <= block)
            out += "s" + std::to_string(p);
        else
            out += "t" + std::to_string(p - block);
    }
    return out;
}

std::string format_ideal(const MonomialIdeal& ideal, VariableScheme scheme)
{
    std::ostringstream out;
    if (scheme == VariableScheme::st) {
        if (ideal.n() % 2 != 0)
            throw PreconditionError("s,t naming needs an even variable count");
        out << "vars=s,t n=" << ideal.n() / 2 << '\n';
    } else {
        out << "n=" << ideal.n() << '\n';
    }
    for (const VarSet& g : ideal.generators())
        out << monomial_to_string(g, scheme) << '\n';
    return out.str();
}

Graph parse_graph(std::istream& in)
{
    bool have_header = false;
    int n = 0;
    std::vector<Edge> edges;
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string_view text = strip_comment(raw);
        if (text.empty())
            continue;
        auto parts = words(text);
        if (!have_header) {
            if (parts.size() != 1)
                throw ParseError("expected header 'n=<int>'", line);
            n = parse_n_assignment(parts[0], line);
            have_header = true;
            continue;
        }
        if (parts.size() != 2)
            throw ParseError("expected an edge 'u v'", line);
        int u = parse_int(parts[0], line, "vertex");
        int v = parse_int(parts[1], line, "vertex");
        if (u < 1 || u > n || v < 1 || v > n)
            throw ParseError("edge endpoint outside 1.." + std::to_string(n), line);
        if (u == v)
            throw ParseError("loop at vertex " + std::to_string(u), line);
        edges.emplace_back(u, v);
    }
    if (!have_header)
        throw ParseError("missing 'n=<int>' header");
    try {
        return Graph(n, std::move(edges));
    } catch (const PreconditionError& e) {
        throw ParseError(e.what());
    }
}

Graph parse_graph(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return parse_graph(in);
}

Graph read_graph_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open graph file '" + path.string() + "'");
    try {
        return parse_graph(in);
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

std::string format_graph(const Graph& graph)
{
    std::ostringstream out;
    out << "n=" << graph.n() << '\n';
    for (const auto& [u, v] : graph.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

std::string witness_to_json(std::span<const Interval> witness)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const Interval& iv : witness)
        arr.push_back({{"F", iv.lo().positions()}, {"G", iv.hi().positions()}});
    return arr.dump();
}

std::vector<Interval> witness_from_json(std::string_view json, int n)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("witness is not valid JSON: ") + e.what());
    }
    if (!doc.is_array())
        throw ParseError("witness must be a JSON array");
    std::vector<Interval> out;
    for (const auto& entry : doc) {
        if (!entry.is_object() || !entry.contains("F") || !entry.contains("G"))
            throw ParseError("witness entries need \"F\" and \"G\"");
        try {
            auto lo = entry.at("F").get<std::vector<int>>();
            auto hi = entry.at("G").get<std::vector<int>>();
            out.emplace_back(VarSet::from_positions(n, lo), VarSet::from_positions(n, hi));
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("witness entry malformed: ") + e.what());
        } catch (const PreconditionError& e) {
            throw ParseError(std::string("witness entry invalid: ") + e.what());
        }
    }
    return out;
}

} // namespace stanley
