#pragma once

#include "stanley/graph.hpp"
#include "stanley/ideal.hpp"
#include "stanley/interval.hpp"

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stanley {

/// How variable tokens map onto positions.
enum class VariableScheme {
    /// x1..xn -> 1..n.
    x,
    /// s1..sn -> 1..n and t1..tn -> n+1..2n; the ring has 2n variables.
    st,
};

struct IdealFile {
    VariableScheme scheme = VariableScheme::x;
    /// Value of the n= header: variable count for x, block size for s,t.
    int declared_n = 0;
    MonomialIdeal ideal;
};

/// Parses the ideal text format (see docs/file-formats.md). Throws ParseError
/// with a line number.
IdealFile parse_ideal(std::istream& in);
IdealFile parse_ideal(std::string_view text);
IdealFile read_ideal_file(const std::filesystem::path& path);

/// "x1*x4*x5", "s1*t2", or "1" for the empty support.
std::string monomial_to_string(const VarSet& u, VariableScheme scheme);
std::string format_ideal(const MonomialIdeal& ideal, VariableScheme scheme = VariableScheme::x);

/// Edge-list format: `n=<int>` header then one `u v` pair per line.
Graph parse_graph(std::istream& in);
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::filesystem::path& path);
std::string format_graph(const Graph& graph);

/// JSON array of {"F": [...], "G": [...]} with 1-based positions.
std::string witness_to_json(std::span<const Interval> witness);
/// Throws ParseError on malformed JSON or positions outside 1..n.
std::vector<Interval> witness_from_json(std::string_view json, int n);

} // namespace stanley
