#pragma once

#include "stanley/graph.hpp"
#include "stanley/ideal.hpp"
#include "stanley/qdepth.hpp"
#include "stanley/sdepth.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace stanley {

// The ideal of independent sets lives in 2n variables s_1..s_n, t_1..t_n,
// mapped to positions s_i -> i and t_i -> n + i.
constexpr int s_position(int i) noexcept { return i; }
constexpr int t_position(int n, int i) noexcept { return n + i; }

/// m_S = prod_{i in S} s_i * prod_{i not in S} t_i, a degree-n support in 2n positions.
VarSet independence_generator(const VarSet& independent_set);

/// All independent sets of G (including the empty set), ordered by size and
/// then lexicographically. Throws ResourceLimitError when n > max_vertices.
std::vector<VarSet> independent_sets(const Graph& graph, int max_vertices = 24);

int independence_number(const Graph& graph);

struct IndependenceIdealData {
    Graph graph;
    std::vector<VarSet> ind_sets;
    /// Over 2n positions; already minimal since all generators have degree n.
    MonomialIdeal ideal;
    /// a[k] = number of independent sets of size k, k = 0..alpha.
    std::vector<std::uint64_t> a;
    int alpha = 0;
    std::uint64_t g = 0;
};

IndependenceIdealData independence_ideal(const Graph& graph);

/**
 * Orders generators by m > m' iff deg_s(m) < deg_s(m'), or the s-degrees agree
 * and the s-part of m is lexicographically larger (s_1 > s_2 > ...). Throws
 * PreconditionError unless every generator has the m_S shape over 2n positions.
 */
std::vector<VarSet> sort_generators(std::span<const VarSet> gens, int vertices);

struct LinearQuotientsCheck {
    bool ok = true;
    /// 1-based index i of the first generator whose colon ideal
    /// (m_1, ..., m_{i-1}) : m_i is not (t_r : r in S_i); 0 when ok.
    int first_failure = 0;
};

LinearQuotientsCheck linear_quotients_check(const IndependenceIdealData& data);

/// Closed-form homological invariants of I and T/I for an ideal of independent sets.
struct IdealInvariants {
    int reg = 0;                        // reg(I) = n
    std::vector<std::uint64_t> betti;   // beta_i(I) = sum_k a_k C(k, i), i = 0..alpha
    int pd = 0;                         // pd(T/I) = alpha + 1
    int dim = 0;                        // dim(T/I) = 2n - 2
    int depth = 0;                      // depth(T/I) = 2n - alpha - 1
    bool cohen_macaulay = false;        // G complete
};

IdealInvariants invariants(const IndependenceIdealData& data);

/// max{ d : C(3n - d - 1, n) >= g }. Requires n + 1 <= g <= 2^n.
int gamma(int vertices, std::uint64_t g);
inline int gamma(const IndependenceIdealData& data) { return gamma(data.graph.n(), data.g); }

enum class ConjectureStatus { holds, fails, undecided };
std::string_view to_string(ConjectureStatus status);

struct SandwichOptions {
    SearchOptions search;
    LatticeLimits limits;
    /// Use sdepth = n - 1 without searching when C(2n-1, n) < g.
    bool use_shortcut = true;
};

struct SandwichReport {
    int depth = 0;
    int dim = 0;
    int gamma = 0;
    int qdepth = 0;
    DepthStatus sdepth_status = DepthStatus::undecided;
    /// Exact sdepth(T/I) when decided; the budget-exhausted level otherwise.
    int sdepth = 0;
    /// Decided by C(2n-1, n) < g rather than by search.
    bool shortcut = false;
    /// Whether the shortcut hypothesis holds, independent of use_shortcut.
    bool shortcut_applicable = false;
    ConjectureStatus conjecture = ConjectureStatus::undecided;
    std::vector<Interval> witness;
};

/// depth <= sdepth <= gamma <= 2n - 2 for T/I, with the exact sdepth where the budget allows.
SandwichReport sandwich_report(const Graph& graph, const SandwichOptions& options = {});

} // namespace stanley
