#pragma once

#include "isg/order.hpp"
#include "isg/shapes.hpp"

#include <memory>
#include <vector>

namespace isg {

/// Matrix unit of one block carrying a group element: row and column are
/// semilattice labels from the block's index set.
struct BasisElement {
    int block = 0;
    int row = 0;
    int col = 0;
    int g = 0;
};

struct BasisBlock {
    std::vector<int> rows;  // sorted semilattice labels
    const Group* group = nullptr;
    Mask idempotents = 0;   // semilattice labels, equal to their element indices
    Mask elements = 0;      // element indices of the whole block
};

/// Natural basis of a direct sum of matrix algebras over group algebras, one
/// summand per block of a D-partition. Element j < |E| is the diagonal
/// identity unit at semilattice label j; the remaining elements follow by
/// (block, row, column, group element).
class NaturalBasis {
public:
    /// Throws std::invalid_argument when P does not partition E, when the
    /// group list length differs from the block count, or when the basis has
    /// more than kMaxElements elements.
    NaturalBasis(std::shared_ptr<const MeetSemilattice> e, DPartition p, GroupAssignment groups);

    int size() const { return static_cast<int>(elements_.size()); }
    int idempotent_count() const { return semilattice_->size(); }
    bool is_idempotent(int s) const { return s < idempotent_count(); }

    const MeetSemilattice& semilattice() const { return *semilattice_; }
    const std::shared_ptr<const MeetSemilattice>& semilattice_ptr() const { return semilattice_; }
    const DPartition& partition() const { return partition_; }
    const std::vector<BasisBlock>& blocks() const { return blocks_; }
    const BasisBlock& block(int b) const { return blocks_[b]; }

    const BasisElement& element(int s) const { return elements_[s]; }
    /// Index of the element with the given block, row label, column label
    /// and group element.
    int index(int block, int row, int col, int g) const;

    int inverse(int s) const { return inverse_[s]; }
    int dom(int s) const { return elements_[s].col; }
    int ran(int s) const { return elements_[s].row; }

    /// Groupoid product, or -1 when the product is zero.
    int product(int s, int t) const;

    /// Down-sets of the order that is the semilattice order on idempotents
    /// and equality elsewhere.
    std::vector<Mask> idempotent_order() const;

    /// Block index for each semilattice label.
    const std::vector<int>& block_of_label() const { return block_of_label_; }

private:
    std::shared_ptr<const MeetSemilattice> semilattice_;
    DPartition partition_;
    std::vector<BasisBlock> blocks_;
    std::vector<BasisElement> elements_;
    std::vector<int> inverse_;
    std::vector<int> block_of_label_;
    // Per block: position of each label within the block's rows.
    std::vector<std::vector<int>> row_pos_;
    // Per block: element index at ((row pos * r) + col pos) * |G| + g.
    std::vector<std::vector<int>> lookup_;
};

NaturalBasis e_groupoid(std::shared_ptr<const MeetSemilattice> e, const DPartition& p,
                        const GroupAssignment& groups);

/// Blocks sorted so that blocks reaching deeper down-levels of E come first;
/// ties by block size (descending), then by sorted label list.
std::vector<int> block_order(const NaturalBasis& basis);

} // namespace isg
