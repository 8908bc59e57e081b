#pragma once

#include <string_view>

// Reference instances shipped with the library; identical to the files under
// data/ so `check-examples` works without a checkout.
namespace stanley::reference {

/// 16-variable ideal whose quotient poset is the face poset of Duval's
/// non-partitionable Cohen-Macaulay complex.
inline constexpr std::string_view duval16_ideal = R"ideal(# Duval's non-partitionable Cohen-Macaulay complex on 16 vertices,
# as a squarefree ideal: 49 quadratic and 15 cubic generators.
n=16
x13*x16
x12*x16
x11*x16
x10*x16
x9*x16
x8*x16
x6*x16
x3*x16
x1*x16
x13*x15
x12*x15
x11*x15
x10*x15
x9*x15
x8*x15
x3*x15
x13*x14
x12*x14
x11*x14
x10*x14
x9*x14
x8*x14
x10*x13
x9*x13
x8*x13
x6*x13
x3*x13
x1*x13
x10*x12
x9*x12
x8*x12
x3*x12
x10*x11
x9*x11
x8*x11
x6*x10
x3*x10
x1*x10
x3*x9
x5*x7
x3*x7
x2*x7
x1*x7
x5*x6
x2*x6
x1*x6
x4*x5
x3*x5
x1*x4
x4*x15*x16
x2*x15*x16
x2*x4*x15
x6*x7*x14
x1*x5*x14
x4*x12*x13
x2*x12*x13
x2*x4*x12
x6*x7*x11
x1*x5*x11
x4*x9*x10
x2*x9*x10
x2*x4*x9
x6*x7*x8
x1*x5*x8
)ideal";

/// The 6-variable pair J, I with sdepth(J/I) = 3 < depth(J/I) = 4.
inline constexpr std::string_view duval6_outer = R"ideal(# Outer ideal J of the 6-variable relative counterexample (use as J in J/I).
n=6
x1*x2
x1*x5
x1*x6
x2*x3
x2*x4
x4*x6
)ideal";
inline constexpr std::string_view duval6_inner = R"ideal(# Inner ideal I of the 6-variable relative counterexample (use as I in J/I).
n=6
x1*x4*x5
x4*x6
x2*x3*x6
)ideal";

inline constexpr std::string_view cycle4_graph = R"ideal(# 4-cycle
n=4
1 2
2 3
3 4
4 1
)ideal";
inline constexpr std::string_view path5_graph = R"ideal(# path 1-2-3-4-5
n=5
1 2
2 3
3 4
4 5
)ideal";

} // namespace stanley::reference
