#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace stanley {

/// Raw bit pattern of a squarefree monomial; bit i-1 stands for variable i.
using Mask = std::uint64_t;

inline constexpr int kMaxVariables = 64;

constexpr Mask low_bits(int n) noexcept
{
    return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

/**
 * A squarefree monomial over n variables, i.e. a subset of {1, ..., n}.
 *
 * Positions are 1-based, matching variable names x1..xn. Two VarSets are
 * equal only if both the support and the ambient count agree. Ordering is by
 * the numeric value of the bit pattern, then by n.
 */
class VarSet {
public:
    constexpr VarSet() noexcept = default;

    /// Throws PreconditionError when n is out of range or bits lie beyond n.
    VarSet(int n, Mask bits);
    VarSet(int n, std::initializer_list<int> positions);
    static VarSet from_positions(int n, std::span<const int> positions);
    static VarSet full(int n) { return VarSet(n, low_bits(n)); }

    constexpr int n() const noexcept { return n_; }
    constexpr Mask bits() const noexcept { return bits_; }
    constexpr int cardinality() const noexcept { return std::popcount(bits_); }
    constexpr bool empty() const noexcept { return bits_ == 0; }

    bool contains(int position) const noexcept
    {
        return position >= 1 && position <= n_ && ((bits_ >> (position - 1)) & 1U);
    }

    /// Squarefree divisibility: this | other.
    constexpr bool is_subset_of(const VarSet& other) const noexcept
    {
        return (bits_ & ~other.bits_) == 0;
    }

    VarSet with(int position) const;
    VarSet without(int position) const;
    VarSet operator|(const VarSet& other) const;
    VarSet operator&(const VarSet& other) const;
    VarSet operator-(const VarSet& other) const;

    std::vector<int> positions() const;

    /// "{1,3,5}" style rendering.
    std::string to_string() const;

    friend constexpr bool operator==(const VarSet&, const VarSet&) noexcept = default;
    friend constexpr std::strong_ordering operator<=>(const VarSet& a, const VarSet& b) noexcept
    {
        if (auto c = a.bits_ <=> b.bits_; c != 0)
            return c;
        return a.n_ <=> b.n_;
    }

private:
    Mask bits_ = 0;
    int n_ = 0;
};

struct VarSetHash {
    std::size_t operator()(const VarSet& v) const noexcept
    {
        return std::hash<Mask>{}(v.bits() * 0x9e3779b97f4a7c15ULL ^ static_cast<Mask>(v.n()));
    }
};

/// Compares two supports by cardinality, then lexicographically on their
/// sorted element lists ({1,3} before {1,4} before {2,3}).
bool graded_lex_less(const VarSet& a, const VarSet& b) noexcept;

} // namespace stanley
