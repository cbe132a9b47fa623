#pragma once

#include "isg/basis.hpp"

#include <functional>
#include <map>
#include <memory>
#include <shared_mutex>
#include <tuple>
#include <vector>

namespace isg {

/// Partial order on the elements of a basis, as one down-set row per element.
struct BasisOrder {
    std::vector<Mask> down;

    bool leq(int a, int b) const { return has(down[b], a); }
    friend bool operator==(const BasisOrder&, const BasisOrder&) = default;
    friend auto operator<=>(const BasisOrder&, const BasisOrder&) = default;
};

/// One admissible way of placing a lower block under an upper block. Entry
/// k lists the lower-block elements directly below the upper-block element
/// with block-local index k = (row pos * r + col pos) * |G| + g. The cache
/// stores masks over block-local lower indices; poset_possibilities returns
/// them over global element indices.
using CrossOrder = std::vector<Mask>;

/// Block-local solutions, keyed by the two block sizes, the two catalog
/// group ids and the idempotent relation between the blocks after relabeling
/// rows into a canonical form. Safe for concurrent use.
class PossibilityCache {
public:
    using Key = std::tuple<int, int, int, int, std::uint64_t>;
    using Value = std::shared_ptr<const std::vector<CrossOrder>>;

    static PossibilityCache& shared();

    Value find(const Key& key) const;
    Value insert(const Key& key, Value value);
    std::size_t size() const;
    void clear();

private:
    mutable std::shared_mutex mutex_;
    std::map<Key, Value> entries_;
};

/// Every partial order on upper ∪ lower that keeps the semilattice order on
/// idempotents, is equality inside each block, and satisfies the inverse,
/// product and unique restriction/corestriction rules inside the union.
/// Masks are over global element indices. `upper` must cover `lower`.
/// Pass nullptr to bypass the cache.
std::vector<CrossOrder> poset_possibilities(const NaturalBasis& basis, int upper, int lower,
                                            PossibilityCache* cache = &PossibilityCache::shared());

/// Node of the search: the order on the idempotents plus the first `depth`
/// blocks of `block_order`. Elements not yet placed have trivial rows.
struct SearchNode {
    int depth = 1;
    std::vector<Mask> down;
};

/// Builds the search over `basis`, with blocks taken in block_order().
class GPosetSearch {
public:
    explicit GPosetSearch(const NaturalBasis& basis,
                          PossibilityCache* cache = &PossibilityCache::shared());

    const std::vector<int>& order() const { return order_; }
    int block_count() const { return static_cast<int>(order_.size()); }
    SearchNode root() const;

    /// Blocks (as block indices) having an idempotent covered by an
    /// idempotent of `block`.
    const std::vector<int>& covered_blocks(int block) const { return covered_[block]; }

    std::vector<SearchNode> children(const SearchNode& node) const;

    /// Down-counts of every element of the newest block into every earlier
    /// block agree with those of the newest block's least idempotent.
    bool passes_cardinality_test(const std::vector<Mask>& down, int depth) const;

    /// Calls `visit` on every leaf order. Stops when `visit` returns false.
    void for_each_leaf(const std::function<bool(const BasisOrder&)>& visit) const;

private:
    void expand(const SearchNode& node, const std::function<bool(SearchNode&&)>& emit) const;

    const NaturalBasis& basis_;
    std::vector<int> order_;
    std::vector<std::vector<int>> covered_;
    // Per depth i >= 1: possibilities for each covered block of order_[i].
    std::vector<std::vector<std::vector<CrossOrder>>> options_;
};

/// Every partial order on the basis satisfying the hypotheses of the ESN
/// construction, each once.
std::vector<BasisOrder> g_posets(const NaturalBasis& basis);

/// Direct check of all five ESN hypotheses for a full order on the basis.
bool satisfies_esn_hypotheses(const NaturalBasis& basis, const std::vector<Mask>& down);

} // namespace isg
