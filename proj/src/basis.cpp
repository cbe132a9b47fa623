#include "isg/basis.hpp"

#include <algorithm>
#include <stdexcept>

namespace isg {

NaturalBasis::NaturalBasis(std::shared_ptr<const MeetSemilattice> e, DPartition p, GroupAssignment groups)
    : semilattice_(std::move(e)), partition_(std::move(p))
{
    int m = semilattice_->size();
    if (groups.size() != partition_.blocks.size())
        throw std::invalid_argument("one group is needed per block");
    Mask seen = 0;
    for (Mask b : partition_.blocks) {
        if (b == 0 || (b & seen))
            throw std::invalid_argument("blocks must be nonempty and disjoint");
        seen |= b;
    }
    if (seen != first_n(m))
        throw std::invalid_argument("blocks do not cover the semilattice");

    int total = 0;
    for (std::size_t i = 0; i < groups.size(); ++i) {
        if (groups[i] == nullptr)
            throw std::invalid_argument("missing group for block");
        int r = popcount(partition_.blocks[i]);
        total += r * r * groups[i]->order();
    }
    if (total > kMaxElements)
        throw std::invalid_argument("basis has more than 64 elements");

    block_of_label_ = partition_.block_of(m);
    elements_.resize(m);
    for (int x = 0; x < m; ++x)
        elements_[x] = BasisElement{block_of_label_[x], x, x, 0};

    row_pos_.assign(groups.size(), std::vector<int>(m, -1));
    for (std::size_t i = 0; i < groups.size(); ++i) {
        BasisBlock blk;
        blk.group = groups[i];
        blk.idempotents = partition_.blocks[i];
        for_each_bit(blk.idempotents, [&](int x) { blk.rows.push_back(x); });
        int r = static_cast<int>(blk.rows.size());
        int q = blk.group->order();
        for (int a = 0; a < r; ++a)
            row_pos_[i][blk.rows[a]] = a;
        std::vector<int> look(static_cast<std::size_t>(r) * r * q);
        for (int a = 0; a < r; ++a) {
            for (int b = 0; b < r; ++b) {
                for (int g = 0; g < q; ++g) {
                    int idx;
                    if (a == b && g == 0) {
                        idx = blk.rows[a];
                    } else {
                        idx = static_cast<int>(elements_.size());
                        elements_.push_back(BasisElement{static_cast<int>(i), blk.rows[a], blk.rows[b], g});
                    }
                    look[(a * r + b) * q + g] = idx;
                    blk.elements |= bit(idx);
                }
            }
        }
        lookup_.push_back(std::move(look));
        blocks_.push_back(std::move(blk));
    }

    inverse_.resize(elements_.size());
    for (int s = 0; s < size(); ++s) {
        const auto& x = elements_[s];
        inverse_[s] = index(x.block, x.col, x.row, blocks_[x.block].group->inv(x.g));
    }
}

int NaturalBasis::index(int block, int row, int col, int g) const
{
    const auto& blk = blocks_[block];
    int r = static_cast<int>(blk.rows.size());
    return lookup_[block][(row_pos_[block][row] * r + row_pos_[block][col]) * blk.group->order() + g];
}

int NaturalBasis::product(int s, int t) const
{
    const auto& x = elements_[s];
    const auto& y = elements_[t];
    if (x.block != y.block || x.col != y.row)
        return -1;
    return index(x.block, x.row, y.col, blocks_[x.block].group->mul(x.g, y.g));
}

std::vector<Mask> NaturalBasis::idempotent_order() const
{
    std::vector<Mask> down(size());
    for (int s = 0; s < size(); ++s)
        down[s] = is_idempotent(s) ? semilattice_->poset().down(s) : bit(s);
    return down;
}

NaturalBasis e_groupoid(std::shared_ptr<const MeetSemilattice> e, const DPartition& p,
                        const GroupAssignment& groups)
{
    return NaturalBasis(std::move(e), p, groups);
}

std::vector<int> block_order(const NaturalBasis& basis)
{
    const Poset& p = basis.semilattice().poset();
    auto level = level_index(down_levels(p), p.size());
    int k = static_cast<int>(basis.blocks().size());
    std::vector<int> depth(k, 0);
    for (int b = 0; b < k; ++b)
        for (int x : basis.block(b).rows)
            depth[b] = std::max(depth[b], level[x]);
    std::vector<int> order(k);
    for (int b = 0; b < k; ++b)
        order[b] = b;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (depth[a] != depth[b])
            return depth[a] > depth[b];
        const auto& ra = basis.block(a).rows;
        const auto& rb = basis.block(b).rows;
        if (ra.size() != rb.size())
            return ra.size() > rb.size();
        return ra < rb;
    });
    return order;
}

} // namespace isg
