#include "isg/shapes.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace isg {

Shape DPartition::shape() const
{
    Shape s;
    for (Mask b : blocks)
        s.push_back(popcount(b));
    return s;
}

std::vector<int> DPartition::block_of(int m) const
{
    std::vector<int> out(m, -1);
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for_each_bit(blocks[i], [&](int x) {
            if (x < m)
                out[x] = static_cast<int>(i);
        });
    return out;
}

std::vector<Shape> partitions(int m)
{
    if (m < 1)
        throw std::invalid_argument("partitions: m must be positive");
    std::vector<Shape> out;
    Shape cur;
    auto rec = [&](auto&& self, int rest, int bound) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rest, bound); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, m, m);
    return out;
}

std::vector<Composition> admissible_compositions(int n, const Shape& shape)
{
    std::vector<Composition> out;
    if (shape.empty())
        return out;
    int k = static_cast<int>(shape.size());
    // Least weight still needed by parts i.. when every later C is 1.
    std::vector<int> tail(k + 1, 0);
    for (int i = k - 1; i >= 0; --i)
        tail[i] = tail[i + 1] + shape[i] * shape[i];
    Composition cur(k);
    auto rec = [&](auto&& self, int i, int rest) -> void {
        if (i == k) {
            if (rest == 0)
                out.push_back(cur);
            return;
        }
        int sq = shape[i] * shape[i];
        for (int c = 1; c * sq + tail[i + 1] <= rest; ++c) {
            cur[i] = c;
            self(self, i + 1, rest - c * sq);
        }
    };
    rec(rec, 0, n);
    return out;
}

bool is_d_partition(const MeetSemilattice& e, const std::vector<Mask>& blocks)
{
    Mask all = first_n(e.size());
    Mask seen = 0;
    for (Mask b : blocks) {
        if (b == 0 || (b & seen) || (b & ~all))
            return false;
        seen |= b;
    }
    if (seen != all)
        return false;
    for (Mask x : blocks) {
        int first = lowest(x);
        for (Mask y : blocks) {
            int count = popcount(e.poset().down(first) & y);
            bool same = true;
            for_each_bit(x, [&](int z) { same = same && popcount(e.poset().down(z) & y) == count; });
            if (!same)
                return false;
        }
    }
    return true;
}

std::vector<DPartition> d_partitions(const MeetSemilattice& e, const Shape& shape)
{
    int m = e.size();
    if (std::accumulate(shape.begin(), shape.end(), 0) != m)
        throw std::invalid_argument("d_partitions: shape does not sum to the semilattice order");
    const Poset& p = e.poset();
    int k = static_cast<int>(shape.size());
    int largest = shape.empty() ? 0 : shape.front();
    Shape target = shape;
    std::sort(target.rbegin(), target.rend());

    std::vector<Mask> blocks;
    std::vector<DPartition> out;

    // Elements are placed in label order, which is a linear extension, so the
    // whole down-set of x is already placed when x is. That makes the count
    // comparison between x and its block mates exact at placement time.
    auto fits = [&](int x, std::size_t i) {
        int mate = lowest(blocks[i]);
        for (std::size_t j = 0; j < blocks.size(); ++j) {
            Mask y = j == i ? blocks[j] | bit(x) : blocks[j];
            if (popcount(p.down(x) & y) != popcount(p.down(mate) & y))
                return false;
        }
        return true;
    };

    auto rec = [&](auto&& self, int x) -> void {
        if (x == m) {
            DPartition d{blocks};
            if (d.shape().size() != target.size())
                return;
            std::stable_sort(d.blocks.begin(), d.blocks.end(), [](Mask a, Mask b) {
                if (popcount(a) != popcount(b))
                    return popcount(a) > popcount(b);
                return lowest(a) < lowest(b);
            });
            if (d.shape() == target)
                out.push_back(std::move(d));
            return;
        }
        int remaining = m - x;
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            if (popcount(blocks[i]) >= largest || !fits(x, i))
                continue;
            blocks[i] |= bit(x);
            self(self, x + 1);
            blocks[i] &= ~bit(x);
        }
        if (static_cast<int>(blocks.size()) < k && remaining >= k - static_cast<int>(blocks.size())) {
            blocks.push_back(bit(x));
            self(self, x + 1);
            blocks.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<GroupAssignment> group_maps(const DPartition& p, const Composition& c,
                                        std::span<const Group* const> groups)
{
    if (p.blocks.size() != c.size())
        throw std::invalid_argument("group_maps: partition and composition lengths differ");
    std::vector<std::vector<const Group*>> choices;
    for (int order : c) {
        std::vector<const Group*> opts;
        for (const Group* g : groups)
            if (g->order() == order)
                opts.push_back(g);
        if (opts.empty())
            return {};
        choices.push_back(std::move(opts));
    }
    std::vector<GroupAssignment> out;
    GroupAssignment cur(c.size());
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == c.size()) {
            out.push_back(cur);
            return;
        }
        for (const Group* g : choices[i]) {
            cur[i] = g;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return out;
}

std::string shape_string(const Shape& shape)
{
    std::string s;
    for (std::size_t i = 0; i < shape.size(); ++i) {
        if (i)
            s += '.';
        s += std::to_string(shape[i]);
    }
    return s;
}

} // namespace isg
