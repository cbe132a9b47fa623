#pragma once

#include "isg/groups.hpp"
#include "isg/order.hpp"

#include <span>
#include <string>
#include <vector>

namespace isg {

/// Weakly decreasing list of positive parts.
using Shape = std::vector<int>;
/// Maximal subgroup order for each block of a shape.
using Composition = std::vector<int>;
/// Chosen group for each block.
using GroupAssignment = std::vector<const Group*>;

/// Set partition of a semilattice's elements into blocks ordered by size
/// (descending), then by least element.
struct DPartition {
    std::vector<Mask> blocks;

    Shape shape() const;
    /// Block index of every element of a semilattice of order `m`.
    std::vector<int> block_of(int m) const;
    friend bool operator==(const DPartition&, const DPartition&) = default;
};

/// All partitions of m, in decreasing lexicographic order ((m) first).
std::vector<Shape> partitions(int m);

/// Every C of the same length as `shape` with sum of shape[i]^2 * C[i] equal
/// to n, in lexicographic order.
std::vector<Composition> admissible_compositions(int n, const Shape& shape);

/// Checks that `blocks` partition E and that elements in one block have
/// equally many elements of each block below them.
bool is_d_partition(const MeetSemilattice& e, const std::vector<Mask>& blocks);

/// Every D-partition of E with the given shape, each set partition once.
std::vector<DPartition> d_partitions(const MeetSemilattice& e, const Shape& shape);

/// Every choice of groups with |group of block i| = c[i], taken from
/// `groups`. The first block varies slowest.
std::vector<GroupAssignment> group_maps(const DPartition& p, const Composition& c,
                                        std::span<const Group* const> groups);

/// Shape as dot-separated parts, for example "2.1.1".
std::string shape_string(const Shape& shape);

} // namespace isg
