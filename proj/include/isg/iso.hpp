#pragma once

#include "isg/semigroup.hpp"

#include <map>
#include <vector>

namespace isg {

/// Isomorphism invariant used to bucket semigroups that share a semilattice:
/// the down-level sizes of the natural order, then for every up-down level
/// of E (named by its least label) the sorted list of
/// (idempotents in the D-class, catalog group id) over its elements.
struct InvariantKey {
    std::vector<int> lev;
    std::vector<int> xmap;

    friend bool operator==(const InvariantKey&, const InvariantKey&) = default;
    friend auto operator<=>(const InvariantKey&, const InvariantKey&) = default;
};

InvariantKey invariants(const InverseSemigroup& s);

/// Idempotents with trivial maximal subgroup and a one-element D-class that
/// cover the minimum of E and are covered by nothing, in label order.
std::vector<int> lonely_idempotents(const InverseSemigroup& s);

/// E colored by rank (1, 2, ...) for lonely idempotents and by
/// (group, D-class size) for the rest.
ColoredPoset e_coloring(const InverseSemigroup& s);

/// Isomorphism test for semigroups on the same semilattice with equal
/// invariants. Throws std::invalid_argument otherwise.
bool is_isoc(const InverseSemigroup& s, const InverseSemigroup& t);

/// Same as is_isoc without the precondition checks.
bool is_isoc_unchecked(const InverseSemigroup& s, const InverseSemigroup& t);

/// Semigroups found so far for one semilattice and shape, bucketed by key.
class IsgStore {
public:
    const std::vector<InverseSemigroup>& items() const { return items_; }
    const std::vector<int>& bucket(const InvariantKey& key) const;
    void add(InverseSemigroup s, InvariantKey key);
    bool empty() const { return items_.empty(); }

private:
    friend bool is_new(const InverseSemigroup&, const InvariantKey&, const IsgStore&, int*);
    std::vector<InverseSemigroup> items_;
    std::map<InvariantKey, std::vector<int>> buckets_;
};

/// True when no stored semigroup under `key` is isomorphic to `s`. When
/// `tests` is given, the number of is_isoc calls made is added to it.
bool is_new(const InverseSemigroup& s, const InvariantKey& key, const IsgStore& store, int* tests = nullptr);

/// Exhaustive isomorphism search between two Cayley tables of at most seven
/// elements. Throws std::invalid_argument for larger tables.
bool brute_force_isomorphic(int size, const std::vector<int>& a, const std::vector<int>& b);
bool brute_force_isomorphic(const InverseSemigroup& s, const InverseSemigroup& t);

} // namespace isg
