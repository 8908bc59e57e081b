#include "stanley/exact_cover.hpp"

#include "stanley/error.hpp"

#include <algorithm>
#include <limits>

namespace stanley {

// Layout follows Knuth's Algorithm X (TAOCP 7.2.2.1). Item i (0-based) is
// header i+1. A spacer's ulink points at the first node of the option before
// it and its dlink at the last node of the option after it.

ExactCover::ExactCover(int primary, int secondary) : primary_(primary), items_(primary + secondary)
{
    if (primary < 0 || secondary < 0)
        throw PreconditionError("negative item count");
    const int heads = items_ + 2;
    llink_.resize(static_cast<std::size_t>(heads));
    rlink_.resize(static_cast<std::size_t>(heads));
    // Primary list: 0 <-> 1 <-> ... <-> primary.
    for (int i = 0; i <= primary_; ++i) {
        llink_[static_cast<std::size_t>(i)] = i == 0 ? primary_ : i - 1;
        rlink_[static_cast<std::size_t>(i)] = i == primary_ ? 0 : i + 1;
    }
    // Secondary list headed by items_+1.
    const int sec_head = items_ + 1;
    int prev = sec_head;
    for (int i = primary_ + 1; i <= items_; ++i) {
        llink_[static_cast<std::size_t>(i)] = prev;
        rlink_[static_cast<std::size_t>(prev)] = i;
        prev = i;
    }
    rlink_[static_cast<std::size_t>(prev)] = sec_head;
    llink_[static_cast<std::size_t>(sec_head)] = prev;

    top_.assign(static_cast<std::size_t>(items_) + 2, 0);
    ulink_.resize(static_cast<std::size_t>(items_) + 2);
    dlink_.resize(static_cast<std::size_t>(items_) + 2);
    len_.assign(static_cast<std::size_t>(items_) + 1, 0);
    option_of_.assign(static_cast<std::size_t>(items_) + 2, -1);
    for (int i = 1; i <= items_; ++i) {
        ulink_[static_cast<std::size_t>(i)] = i;
        dlink_[static_cast<std::size_t>(i)] = i;
    }
    // First spacer.
    last_spacer_ = items_ + 1;
    top_[static_cast<std::size_t>(last_spacer_)] = 0;
    ulink_[static_cast<std::size_t>(last_spacer_)] = 0;
    dlink_[static_cast<std::size_t>(last_spacer_)] = 0;
}

int ExactCover::add_option(std::span<const int> items)
{
    if (items.empty())
        throw PreconditionError("empty option");
    const int option = static_cast<int>(option_start_.size());
    const int first = static_cast<int>(top_.size());
    for (int item : items) {
        if (item < 0 || item >= items_)
            throw PreconditionError("option refers to an unknown item");
        const int header = item + 1;
        const int x = static_cast<int>(top_.size());
        top_.push_back(header);
        option_of_.push_back(option);
        const int up = ulink_[static_cast<std::size_t>(header)];
        ulink_.push_back(up);
        dlink_.push_back(header);
        dlink_[static_cast<std::size_t>(up)] = x;
        ulink_[static_cast<std::size_t>(header)] = x;
        ++len_[static_cast<std::size_t>(header)];
    }
    const int last = static_cast<int>(top_.size()) - 1;
    for (int x = first; x < last; ++x)
        for (int y = x + 1; y <= last; ++y)
            if (top_[static_cast<std::size_t>(x)] == top_[static_cast<std::size_t>(y)])
                throw PreconditionError("option lists an item twice");
    dlink_[static_cast<std::size_t>(last_spacer_)] = last;
    // Trailing spacer.
    const int spacer = static_cast<int>(top_.size());
    top_.push_back(-(option + 1));
    option_of_.push_back(-1);
    ulink_.push_back(first);
    dlink_.push_back(0);
    last_spacer_ = spacer;
    option_start_.push_back(first);
    return option;
}

void ExactCover::hide(int p)
{
    int q = p + 1;
    while (q != p) {
        const int x = top_[static_cast<std::size_t>(q)];
        const int u = ulink_[static_cast<std::size_t>(q)];
        const int d = dlink_[static_cast<std::size_t>(q)];
        if (x <= 0) {
            q = u;
        } else {
            dlink_[static_cast<std::size_t>(u)] = d;
            ulink_[static_cast<std::size_t>(d)] = u;
            --len_[static_cast<std::size_t>(x)];
            ++q;
        }
    }
}

void ExactCover::unhide(int p)
{
    int q = p - 1;
    while (q != p) {
        const int x = top_[static_cast<std::size_t>(q)];
        const int u = ulink_[static_cast<std::size_t>(q)];
        const int d = dlink_[static_cast<std::size_t>(q)];
        if (x <= 0) {
            q = d;
        } else {
            dlink_[static_cast<std::size_t>(u)] = q;
            ulink_[static_cast<std::size_t>(d)] = q;
            ++len_[static_cast<std::size_t>(x)];
            --q;
        }
    }
}

void ExactCover::cover(int i)
{
    for (int p = dlink_[static_cast<std::size_t>(i)]; p != i; p = dlink_[static_cast<std::size_t>(p)])
        hide(p);
    const int l = llink_[static_cast<std::size_t>(i)];
    const int r = rlink_[static_cast<std::size_t>(i)];
    rlink_[static_cast<std::size_t>(l)] = r;
    llink_[static_cast<std::size_t>(r)] = l;
}

void ExactCover::uncover(int i)
{
    const int l = llink_[static_cast<std::size_t>(i)];
    const int r = rlink_[static_cast<std::size_t>(i)];
    rlink_[static_cast<std::size_t>(l)] = i;
    llink_[static_cast<std::size_t>(r)] = i;
    for (int p = ulink_[static_cast<std::size_t>(i)]; p != i; p = ulink_[static_cast<std::size_t>(p)])
        unhide(p);
}

void ExactCover::cover_option_rest(int r)
{
    int p = r + 1;
    while (p != r) {
        const int x = top_[static_cast<std::size_t>(p)];
        if (x <= 0) {
            p = ulink_[static_cast<std::size_t>(p)];
        } else {
            cover(x);
            ++p;
        }
    }
}

void ExactCover::uncover_option_rest(int r)
{
    int p = r - 1;
    while (p != r) {
        const int x = top_[static_cast<std::size_t>(p)];
        if (x <= 0) {
            p = dlink_[static_cast<std::size_t>(p)];
        } else {
            uncover(x);
            --p;
        }
    }
}

int ExactCover::choose_item() const
{
    int best = -1;
    int best_len = std::numeric_limits<int>::max();
    for (int i = rlink_[0]; i != 0; i = rlink_[static_cast<std::size_t>(i)]) {
        const int l = len_[static_cast<std::size_t>(i)];
        if (l < best_len) {
            best = i;
            best_len = l;
            if (l == 0)
                break;
        }
    }
    return best;
}

int ExactCover::root_branch_count() const
{
    if (rlink_[0] == 0)
        return 0;
    return len_[static_cast<std::size_t>(choose_item())];
}

ExactCover::Outcome ExactCover::solve(std::vector<int>& chosen, const SearchControl& control,
                                      std::optional<int> root_branch)
{
    chosen.clear();
    if (root_branch && rlink_[0] == 0)
        return *root_branch == 0 ? Outcome::solved : Outcome::exhausted;
    return search(chosen, control, root_branch, 0);
}

ExactCover::Outcome ExactCover::search(std::vector<int>& chosen, const SearchControl& control,
                                       std::optional<int> root_branch, int level)
{
    if (rlink_[0] == 0)
        return Outcome::solved;
    if ((++nodes_ & 0x3ff) == 0 && control.expired())
        return Outcome::interrupted;

    const int item = choose_item();
    if (len_[static_cast<std::size_t>(item)] == 0)
        return Outcome::exhausted;

    cover(item);
    Outcome result = Outcome::exhausted;
    int branch = 0;
    for (int r = dlink_[static_cast<std::size_t>(item)]; r != item;
         r = dlink_[static_cast<std::size_t>(r)], ++branch) {
        if (level == 0 && root_branch && branch != *root_branch)
            continue;
        chosen.push_back(option_of_[static_cast<std::size_t>(r)]);
        cover_option_rest(r);
        Outcome sub = search(chosen, control, root_branch, level + 1);
        uncover_option_rest(r);
        if (sub == Outcome::solved) {
            result = sub;
            break;
        }
        chosen.pop_back();
        if (sub == Outcome::interrupted) {
            result = sub;
            break;
        }
    }
    uncover(item);
    return result;
}

} // namespace stanley
