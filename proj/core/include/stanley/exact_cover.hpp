#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace stanley {

/// Stop conditions polled by long-running searches.
struct SearchControl {
    std::chrono::steady_clock::time_point deadline = std::chrono::steady_clock::time_point::max();
    const std::atomic<bool>* cancel = nullptr;
    /// Extra stop condition, e.g. "a lower-numbered parallel branch already won".
    std::function<bool()> stop;

    bool expired() const
    {
        return (cancel != nullptr && cancel->load(std::memory_order_relaxed)) || (stop && stop()) ||
               std::chrono::steady_clock::now() >= deadline;
    }
};

/**
 * Exact cover with secondary items, solved with dancing links.
 *
 * Items 0..primary-1 must be covered exactly once; items primary..
 * primary+secondary-1 at most once. The branching item is always a primary
 * item with the fewest remaining options (first such item on ties), and its
 * options are tried in insertion order, so the search is deterministic.
 */
class ExactCover {
public:
    enum class Outcome { solved, exhausted, interrupted };

    ExactCover(int primary, int secondary);

    /// Adds an option; returns its index. Items must be distinct.
    int add_option(std::span<const int> items);

    int option_count() const noexcept { return static_cast<int>(option_start_.size()); }
    std::uint64_t nodes() const noexcept { return nodes_; }

    /**
     * Number of branches at the root, i.e. the option count of the item the
     * root would branch on. 0 means the root is a dead end (or there are no
     * primary items, in which case the empty selection is a solution).
     */
    int root_branch_count() const;

    /**
     * Searches for one exact cover. When `root_branch` is set only that
     * branch of the root item is explored. On success `chosen` holds the
     * selected option indices in selection order.
     */
    Outcome solve(std::vector<int>& chosen, const SearchControl& control,
                  std::optional<int> root_branch = std::nullopt);

private:
    void cover(int item);
    void uncover(int item);
    void hide(int node);
    void unhide(int node);
    void cover_option_rest(int node);
    void uncover_option_rest(int node);
    int choose_item() const;
    Outcome search(std::vector<int>& chosen, const SearchControl& control, std::optional<int> root_branch,
                   int level);

    int primary_;
    int items_;
    // Item headers live at 1..items_, node 0 and items_+1 head the primary
    // and secondary item lists.
    std::vector<int> llink_, rlink_;
    // Nodes: item headers at 1..items_, then options separated by spacers.
    std::vector<int> top_, ulink_, dlink_;
    std::vector<int> len_;
    std::vector<int> option_of_;
    std::vector<int> option_start_;
    int last_spacer_ = 0;
    std::uint64_t nodes_ = 0;
};

} // namespace stanley
