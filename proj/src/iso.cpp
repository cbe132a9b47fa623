#include "isg/iso.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace isg {

InvariantKey invariants(const InverseSemigroup& s)
{
    InvariantKey key;
    Poset natural = Poset::from_down_sets(s.order().down);
    for (Mask level : down_levels(natural))
        key.lev.push_back(popcount(level));

    const auto& block_of = s.basis().block_of_label();
    for (Mask level : up_down_levels(s.semilattice().poset())) {
        std::vector<std::pair<int, int>> items;
        for_each_bit(level, [&](int e) {
            items.emplace_back(s.d_class_size(e), s.block_group(block_of[e]).id());
        });
        std::sort(items.begin(), items.end());
        key.xmap.push_back(lowest(level));
        for (auto [d, g] : items) {
            key.xmap.push_back(d);
            key.xmap.push_back(g);
        }
        key.xmap.push_back(-1);
    }
    return key;
}

std::vector<int> lonely_idempotents(const InverseSemigroup& s)
{
    const MeetSemilattice& e = s.semilattice();
    const Poset& p = e.poset();
    const auto& block_of = s.basis().block_of_label();
    std::vector<int> out;
    for (int x = 0; x < e.size(); ++x) {
        if (x == e.bottom())
            continue;
        if (s.block_group(block_of[x]).order() != 1 || s.d_class_size(x) != 1)
            continue;
        if (p.down(x) != (bit(x) | bit(e.bottom())))
            continue;
        if (p.up(x) != bit(x))
            continue;
        out.push_back(x);
    }
    return out;
}

ColoredPoset e_coloring(const InverseSemigroup& s)
{
    const MeetSemilattice& e = s.semilattice();
    const auto& block_of = s.basis().block_of_label();
    ColoredPoset c{e.poset(), std::vector<int>(e.size())};
    // Lonely ranks stay below kMaxElements; other colors are shifted past it.
    for (int x = 0; x < e.size(); ++x)
        c.color[x] = kMaxElements + 1 + s.block_group(block_of[x]).id() * (kMaxElements + 1) + s.d_class_size(x);
    auto lonely = lonely_idempotents(s);
    for (std::size_t i = 0; i < lonely.size(); ++i)
        c.color[lonely[i]] = static_cast<int>(i) + 1;
    return c;
}

namespace {

struct Cell {
    int block;
    int row;
    int col;
    const std::vector<GroupMap>* maps;
};

// Tries to extend the semilattice automorphism p to an isomorphism S -> T
// one (block, row, column) cell at a time.
bool extends(const InverseSemigroup& s, const InverseSemigroup& t, const std::vector<int>& p,
             const std::vector<int>& block_image, std::deque<std::vector<GroupMap>>& bijection_store)
{
    const NaturalBasis& bs = s.basis();
    const NaturalBasis& bt = t.basis();
    int n = s.size();

    std::vector<Cell> cells;
    const GroupCatalog& catalog = GroupCatalog::standard();
    for (int b = 0; b < static_cast<int>(bs.blocks().size()); ++b) {
        const BasisBlock& blk = bs.block(b);
        const Group& g = *blk.group;
        const std::vector<GroupMap>* autos = &catalog.automorphisms_of(g);
        const std::vector<GroupMap>* bij = nullptr;
        if (blk.rows.size() > 1) {
            bijection_store.push_back(bijections(g, g));
            bij = &bijection_store.back();
        }
        for (int j : blk.rows)
            for (int k : blk.rows)
                cells.push_back(Cell{b, j, k, j == k ? autos : bij});
    }

    std::vector<int> image(n, -1);
    std::vector<int> cell_of(n, -1);
    for (std::size_t c = 0; c < cells.size(); ++c) {
        const Cell& cell = cells[c];
        for (int g = 0; g < bs.block(cell.block).group->order(); ++g)
            cell_of[bs.index(cell.block, cell.row, cell.col, g)] = static_cast<int>(c);
    }

    auto consistent = [&](int c) {
        for (int a = 0; a < n; ++a) {
            if (image[a] < 0)
                continue;
            for (int b = 0; b < n; ++b) {
                if (image[b] < 0)
                    continue;
                int ab = s.mul(a, b);
                if (image[ab] < 0)
                    continue;
                if (cell_of[a] != c && cell_of[b] != c && cell_of[ab] != c)
                    continue;
                if (image[ab] != t.mul(image[a], image[b]))
                    return false;
            }
        }
        return true;
    };

    auto search = [&](auto&& self, std::size_t c) -> bool {
        if (c == cells.size())
            return true;
        const Cell& cell = cells[c];
        int tb = block_image[cell.block];
        int q = bs.block(cell.block).group->order();
        for (const GroupMap& phi : *cell.maps) {
            for (int g = 0; g < q; ++g)
                image[bs.index(cell.block, cell.row, cell.col, g)] = bt.index(tb, p[cell.row], p[cell.col], phi(g));
            if (consistent(static_cast<int>(c)) && self(self, c + 1))
                return true;
        }
        for (int g = 0; g < q; ++g)
            image[bs.index(cell.block, cell.row, cell.col, g)] = -1;
        return false;
    };
    return search(search, 0);
}

} // namespace

bool is_isoc_unchecked(const InverseSemigroup& s, const InverseSemigroup& t)
{
    ColoredPoset cs = e_coloring(s);
    ColoredPoset ct = e_coloring(t);
    const auto& ds = s.d_partition().blocks;
    const auto& dt = t.d_partition().blocks;
    std::deque<std::vector<GroupMap>> bijection_store;
    bool found = false;
    colored_isomorphisms(cs, ct, [&](const std::vector<int>& p) {
        std::vector<int> block_image(ds.size(), -1);
        for (std::size_t b = 0; b < ds.size(); ++b) {
            Mask img = 0;
            for_each_bit(ds[b], [&](int x) { img |= bit(p[x]); });
            auto it = std::find(dt.begin(), dt.end(), img);
            if (it == dt.end())
                return true;
            block_image[b] = static_cast<int>(it - dt.begin());
        }
        bijection_store.clear();
        if (extends(s, t, p, block_image, bijection_store)) {
            found = true;
            return false;
        }
        return true;
    });
    return found;
}

bool is_isoc(const InverseSemigroup& s, const InverseSemigroup& t)
{
    if (!(s.semilattice().poset() == t.semilattice().poset()))
        throw std::invalid_argument("is_isoc: semigroups do not share a semilattice");
    if (invariants(s) != invariants(t))
        throw std::invalid_argument("is_isoc: invariants differ");
    return is_isoc_unchecked(s, t);
}

const std::vector<int>& IsgStore::bucket(const InvariantKey& key) const
{
    static const std::vector<int> none;
    auto it = buckets_.find(key);
    return it == buckets_.end() ? none : it->second;
}

void IsgStore::add(InverseSemigroup s, InvariantKey key)
{
    buckets_[std::move(key)].push_back(static_cast<int>(items_.size()));
    items_.push_back(std::move(s));
}

bool is_new(const InverseSemigroup& s, const InvariantKey& key, const IsgStore& store, int* tests)
{
    for (int idx : store.bucket(key)) {
        if (tests)
            ++*tests;
        if (is_isoc_unchecked(s, store.items()[idx]))
            return false;
    }
    return true;
}

bool brute_force_isomorphic(int size, const std::vector<int>& a, const std::vector<int>& b)
{
    if (size > 7)
        throw std::invalid_argument("brute_force_isomorphic supports at most 7 elements");
    if (static_cast<int>(a.size()) != size * size || static_cast<int>(b.size()) != size * size)
        throw std::invalid_argument("brute_force_isomorphic: table sizes do not match");
    std::vector<int> image(size, -1);
    std::vector<bool> used(size, false);
    auto ok_so_far = [&](int x) {
        for (int y = 0; y <= x; ++y) {
            int xy = a[x * size + y], yx = a[y * size + x];
            if (xy <= x && image[xy] != b[image[x] * size + image[y]])
                return false;
            if (yx <= x && image[yx] != b[image[y] * size + image[x]])
                return false;
        }
        return true;
    };
    auto homomorphism = [&] {
        for (int x = 0; x < size; ++x)
            for (int y = 0; y < size; ++y)
                if (image[a[x * size + y]] != b[image[x] * size + image[y]])
                    return false;
        return true;
    };
    auto search = [&](auto&& self, int x) -> bool {
        if (x == size)
            return homomorphism();
        for (int y = 0; y < size; ++y) {
            if (used[y])
                continue;
            image[x] = y;
            used[y] = true;
            if (ok_so_far(x) && self(self, x + 1))
                return true;
            used[y] = false;
            image[x] = -1;
        }
        return false;
    };
    return search(search, 0);
}

bool brute_force_isomorphic(const InverseSemigroup& s, const InverseSemigroup& t)
{
    if (s.size() != t.size())
        return false;
    return brute_force_isomorphic(s.size(), widen(s.table()), widen(t.table()));
}

} // namespace isg
