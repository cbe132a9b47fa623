#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace isg {

/// A finite group stored as a full multiplication table. Element 0 is the
/// identity.
class Group {
public:
    Group() = default;

    /// Builds the table from `mul` and validates the group axioms. Throws
    /// std::invalid_argument if 0 is not the identity, the table is not a
    /// Latin square, or associativity fails.
    Group(std::string name, int order, const std::function<int(int, int)>& mul);

    int order() const { return order_; }
    const std::string& name() const { return name_; }

    int mul(int a, int b) const { return table_[a * order_ + b]; }
    int inv(int a) const { return inverse_[a]; }
    int element_order(int a) const { return element_order_[a]; }
    bool is_abelian() const;

    /// Position in the standard catalog, or -1 for groups built elsewhere.
    int id() const { return id_; }

private:
    friend class GroupCatalog;

    std::string name_;
    int order_ = 0;
    int id_ = -1;
    std::vector<std::uint8_t> table_;
    std::vector<std::uint8_t> inverse_;
    std::vector<std::uint8_t> element_order_;
};

/// A bijection between the element sets of two groups of equal order.
/// `source` and `target` must outlive the map.
struct GroupMap {
    const Group* source = nullptr;
    const Group* target = nullptr;
    std::vector<std::uint8_t> images;

    int operator()(int g) const { return images[g]; }
    bool is_homomorphism() const;
    friend bool operator==(const GroupMap& a, const GroupMap& b) { return a.images == b.images; }
};

Group cyclic_group(int n);
Group dihedral_group(int n, std::string name = {});
Group dicyclic_group(int n, std::string name = {});
Group direct_product(const Group& a, const Group& b, std::string name = {});
/// Closure of the given permutations (all of one degree) under composition.
Group permutation_group(std::string name, const std::vector<std::vector<int>>& generators);

/// A small generating set, built greedily from elements of largest order.
std::vector<int> generating_set(const Group& g);

/// Every isomorphism G -> H, found by backtracking over generator images.
std::vector<GroupMap> isomorphisms(const Group& g, const Group& h);
bool are_isomorphic(const Group& g, const Group& h);

std::vector<GroupMap> automorphisms(const Group& g);

/// All |G|! bijections G -> H in lexicographic order of their image lists.
/// Throws std::invalid_argument when the orders differ.
std::vector<GroupMap> bijections(const Group& g, const Group& h);

/// Catalog of the groups of order at most 15 up to isomorphism, sorted by
/// order and then by name. Built once and immutable afterwards, so the
/// references it hands out stay valid for the life of the program.
class GroupCatalog {
public:
    static constexpr int kMaxOrder = 15;

    static const GroupCatalog& standard();

    std::span<const Group> groups() const { return groups_; }
    const Group& at(int id) const { return groups_[id]; }
    /// Throws std::invalid_argument for an unknown name.
    const Group& by_name(std::string_view name) const;
    std::vector<const Group*> of_order(int order) const;
    const std::vector<GroupMap>& automorphisms_of(const Group& g) const;

private:
    GroupCatalog();

    std::vector<Group> groups_;
    std::vector<std::vector<GroupMap>> automorphisms_;
};

/// Representatives of every isomorphism class of groups of order <= n.
/// Throws std::invalid_argument when n < 1 or n > GroupCatalog::kMaxOrder.
std::vector<const Group*> catalog(int n);

} // namespace isg
