#include "stanley/varset.hpp"

#include "stanley/error.hpp"

#include <algorithm>

namespace stanley {

namespace {

void check_position(int n, int position)
{
    if (position < 1 || position > n)
        throw PreconditionError("variable position " + std::to_string(position) +
                                " outside 1.." + std::to_string(n));
}

} // namespace

VarSet::VarSet(int n, Mask bits) : bits_(bits), n_(n)
{
    if (n < 0 || n > kMaxVariables)
        throw PreconditionError("ambient variable count " + std::to_string(n) + " out of range");
    if ((bits & ~low_bits(n)) != 0)
        throw PreconditionError("support has bits beyond n=" + std::to_string(n));
}

VarSet::VarSet(int n, std::initializer_list<int> positions)
    : VarSet(from_positions(n, std::span<const int>(positions.begin(), positions.size())))
{
}

VarSet VarSet::from_positions(int n, std::span<const int> positions)
{
    VarSet v(n, 0);
    for (int p : positions) {
        check_position(n, p);
        v.bits_ |= Mask{1} << (p - 1);
    }
    return v;
}

VarSet VarSet::with(int position) const
{
    check_position(n_, position);
    return VarSet(n_, bits_ | (Mask{1} << (position - 1)));
}

VarSet VarSet::without(int position) const
{
    check_position(n_, position);
    return VarSet(n_, bits_ & ~(Mask{1} << (position - 1)));
}

VarSet VarSet::operator|(const VarSet& other) const
{
    if (other.n_ != n_)
        throw PreconditionError("ambient variable counts differ");
    return VarSet(n_, bits_ | other.bits_);
}

VarSet VarSet::operator&(const VarSet& other) const
{
    if (other.n_ != n_)
        throw PreconditionError("ambient variable counts differ");
    return VarSet(n_, bits_ & other.bits_);
}

VarSet VarSet::operator-(const VarSet& other) const
{
    if (other.n_ != n_)
        throw PreconditionError("ambient variable counts differ");
    return VarSet(n_, bits_ & ~other.bits_);
}

std::vector<int> VarSet::positions() const
{
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(cardinality()));
    for (Mask b = bits_; b != 0; b &= b - 1)
        out.push_back(std::countr_zero(b) + 1);
    return out;
}

std::string VarSet::to_string() const
{
    std::string s = "{";
    bool first = true;
    for (int p : positions()) {
        if (!first)
            s += ',';
        s += std::to_string(p);
        first = false;
    }
    return s + "}";
}

bool graded_lex_less(const VarSet& a, const VarSet& b) noexcept
{
    if (a.cardinality() != b.cardinality())
        return a.cardinality() < b.cardinality();
    Mask diff = a.bits() ^ b.bits();
    if (diff == 0)
        return false;
    // The lowest differing position belongs to exactly one of them; that one
    // has the smaller element at the first differing slot.
    return (a.bits() & (diff & -diff)) != 0;
}

} // namespace stanley
