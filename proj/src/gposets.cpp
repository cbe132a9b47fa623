#include "isg/gposets.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace isg {

PossibilityCache& PossibilityCache::shared()
{
    static PossibilityCache instance;
    return instance;
}

PossibilityCache::Value PossibilityCache::find(const Key& key) const
{
    std::shared_lock lock(mutex_);
    auto it = entries_.find(key);
    return it == entries_.end() ? nullptr : it->second;
}

PossibilityCache::Value PossibilityCache::insert(const Key& key, Value value)
{
    std::unique_lock lock(mutex_);
    return entries_.emplace(key, std::move(value)).first->second;
}

std::size_t PossibilityCache::size() const
{
    std::shared_lock lock(mutex_);
    return entries_.size();
}

void PossibilityCache::clear()
{
    std::unique_lock lock(mutex_);
    entries_.clear();
}

namespace {

// Placements of a lower block (rl rows, group gl) under an upper block (ru
// rows, group gu), where rel[a] holds the lower row positions whose
// idempotents lie below the idempotent of upper row position a. Results use
// block-local indices on both sides.
std::vector<CrossOrder> solve_local(int ru, const Group& gu, int rl, const Group& gl,
                                    const std::vector<Mask>& rel)
{
    int qu = gu.order(), ql = gl.order();
    int nu = ru * ru * qu;
    auto upper_index = [&](int a, int b, int g) { return (a * ru + b) * qu + g; };
    auto lower_index = [&](int x, int c, int h) { return (x * rl + c) * ql + h; };
    struct Unit {
        int row, col, g;
    };
    std::vector<Unit> up(nu), low(rl * rl * ql);
    for (int a = 0; a < ru; ++a)
        for (int b = 0; b < ru; ++b)
            for (int g = 0; g < qu; ++g)
                up[upper_index(a, b, g)] = {a, b, g};
    for (int x = 0; x < rl; ++x)
        for (int c = 0; c < rl; ++c)
            for (int h = 0; h < ql; ++h)
                low[lower_index(x, c, h)] = {x, c, h};

    auto upper_inverse = [&](int s) { return upper_index(up[s].col, up[s].row, gu.inv(up[s].g)); };
    auto lower_inverse_mask = [&](Mask m) {
        Mask out = 0;
        for_each_bit(m, [&](int t) { out |= bit(lower_index(low[t].col, low[t].row, gl.inv(low[t].g))); });
        return out;
    };
    auto upper_product = [&](int y, int z) {
        return upper_index(up[y].row, up[z].col, gu.mul(up[y].g, up[z].g));
    };

    for (int a = 0; a < ru; ++a)
        for (int b = 0; b < ru; ++b)
            if (popcount(rel[a]) != popcount(rel[b]))
                return {};

    std::vector<Mask> below(nu, 0);
    std::vector<bool> assigned(nu, false);
    std::vector<CrossOrder> out;

    // Products of lower elements under y and z must sit under yz.
    auto products_ok = [&] {
        for (int y = 0; y < nu; ++y) {
            if (!assigned[y])
                continue;
            for (int z = 0; z < nu; ++z) {
                if (!assigned[z] || up[y].col != up[z].row)
                    continue;
                int yz = upper_product(y, z);
                if (!assigned[yz])
                    continue;
                bool ok = true;
                for_each_bit(below[y], [&](int s) {
                    for_each_bit(below[z], [&](int t) {
                        if (low[s].col != low[t].row)
                            return;
                        int st = lower_index(low[s].row, low[t].col, gl.mul(low[s].g, low[t].g));
                        ok = ok && has(below[yz], st);
                    });
                });
                if (!ok)
                    return false;
            }
        }
        return true;
    };

    auto search = [&](auto&& self, int s) -> void {
        while (s < nu && assigned[s])
            ++s;
        if (s == nu) {
            out.push_back(below);
            return;
        }
        int inv = upper_inverse(s);
        auto place = [&](Mask m) {
            Mask im = lower_inverse_mask(m);
            if (inv == s && im != m)
                return;
            below[s] = m;
            below[inv] = im;
            assigned[s] = assigned[inv] = true;
            if (products_ok())
                self(self, s + 1);
            assigned[s] = assigned[inv] = false;
            below[s] = below[inv] = 0;
        };

        const Unit& u = up[s];
        if (u.row == u.col && u.g == 0) {
            Mask m = 0;
            for_each_bit(rel[u.row], [&](int c) { m |= bit(lower_index(c, c, 0)); });
            place(m);
            return;
        }
        // For each lower row c under dom(s) pick one element (x, c, h) with
        // x under ran(s), using every such x exactly once.
        std::vector<int> cols;
        for_each_bit(rel[u.col], [&](int c) { cols.push_back(c); });
        Mask rows = rel[u.row];
        auto pick = [&](auto&& next, std::size_t k, Mask used, Mask m) -> void {
            if (k == cols.size()) {
                place(m);
                return;
            }
            for_each_bit(rows & ~used, [&](int x) {
                for (int h = 0; h < ql; ++h)
                    next(next, k + 1, used | bit(x), m | bit(lower_index(x, cols[k], h)));
            });
        };
        pick(pick, 0, 0, 0);
    };
    search(search, 0);
    return out;
}

std::uint64_t encode_relation(const std::vector<Mask>& rel, int rl)
{
    std::uint64_t code = 0;
    for (std::size_t a = 0; a < rel.size(); ++a)
        code |= static_cast<std::uint64_t>(rel[a]) << (a * rl);
    return code;
}

} // namespace

std::vector<CrossOrder> poset_possibilities(const NaturalBasis& basis, int upper, int lower,
                                            PossibilityCache* cache)
{
    const BasisBlock& bu = basis.block(upper);
    const BasisBlock& bl = basis.block(lower);
    const Poset& e = basis.semilattice().poset();
    int ru = static_cast<int>(bu.rows.size());
    int rl = static_cast<int>(bl.rows.size());
    const Group& gu = *bu.group;
    const Group& gl = *bl.group;

    auto relation = [&](const std::vector<int>& pu, const std::vector<int>& pl) {
        std::vector<Mask> rel(ru, 0);
        for (int a = 0; a < ru; ++a)
            for (int c = 0; c < rl; ++c)
                if (e.leq(bl.rows[pl[c]], bu.rows[pu[a]]))
                    rel[a] |= bit(c);
        return rel;
    };

    // Choose row relabelings giving the least relation code.
    std::vector<int> pu(ru), pl(rl);
    std::iota(pu.begin(), pu.end(), 0);
    std::iota(pl.begin(), pl.end(), 0);
    std::vector<int> best_u = pu, best_l = pl;
    std::uint64_t best = encode_relation(relation(pu, pl), rl);
    bool small = ru <= 4 && rl <= 4 && ru * rl <= 64;
    if (small) {
        do {
            std::iota(pl.begin(), pl.end(), 0);
            do {
                std::uint64_t code = encode_relation(relation(pu, pl), rl);
                if (code < best) {
                    best = code;
                    best_u = pu;
                    best_l = pl;
                }
            } while (std::next_permutation(pl.begin(), pl.end()));
        } while (std::next_permutation(pu.begin(), pu.end()));
    }
    std::vector<Mask> rel = relation(best_u, best_l);

    PossibilityCache::Value local;
    bool cacheable = cache != nullptr && gu.id() >= 0 && gl.id() >= 0 && ru * rl <= 64;
    PossibilityCache::Key key{ru, gu.id(), rl, gl.id(), best};
    if (cacheable)
        local = cache->find(key);
    if (!local) {
        local = std::make_shared<const std::vector<CrossOrder>>(solve_local(ru, gu, rl, gl, rel));
        if (cacheable)
            local = cache->insert(key, local);
    }

    // Translate canonical local indices back to this basis.
    int qu = gu.order(), ql = gl.order();
    int nu = ru * ru * qu;
    std::vector<int> upper_slot(nu), lower_global(rl * rl * ql);
    for (int a = 0; a < ru; ++a)
        for (int b = 0; b < ru; ++b)
            for (int g = 0; g < qu; ++g)
                upper_slot[(a * ru + b) * qu + g] = (best_u[a] * ru + best_u[b]) * qu + g;
    for (int x = 0; x < rl; ++x)
        for (int c = 0; c < rl; ++c)
            for (int h = 0; h < ql; ++h)
                lower_global[(x * rl + c) * ql + h] = basis.index(lower, bl.rows[best_l[x]], bl.rows[best_l[c]], h);

    std::vector<CrossOrder> out;
    out.reserve(local->size());
    for (const CrossOrder& sol : *local) {
        CrossOrder mapped(nu, 0);
        for (int k = 0; k < nu; ++k) {
            Mask m = 0;
            for_each_bit(sol[k], [&](int t) { m |= bit(lower_global[t]); });
            mapped[upper_slot[k]] = m;
        }
        out.push_back(std::move(mapped));
    }
    return out;
}

GPosetSearch::GPosetSearch(const NaturalBasis& basis, PossibilityCache* cache)
    : basis_(basis), order_(block_order(basis))
{
    const Poset& e = basis.semilattice().poset();
    int k = static_cast<int>(basis.blocks().size());
    const auto& block_of = basis.block_of_label();
    covered_.assign(k, {});
    for (int b = 0; b < k; ++b) {
        std::vector<bool> hit(k, false);
        for (int x : basis.block(b).rows) {
            Mask lower = e.down(x) & ~bit(x);
            for_each_bit(e.maximal(lower), [&](int y) { hit[block_of[y]] = true; });
        }
        for (int j = 0; j < k; ++j)
            if (hit[j])
                covered_[b].push_back(j);
    }

    std::vector<int> position(k);
    for (int i = 0; i < k; ++i)
        position[order_[i]] = i;
    options_.assign(k, {});
    for (int i = 1; i < k; ++i) {
        int u = order_[i];
        for (int j : covered_[u]) {
            if (position[j] >= i)
                throw std::logic_error("block order places a covered block after its cover");
            options_[i].push_back(poset_possibilities(basis, u, j, cache));
        }
    }
}

SearchNode GPosetSearch::root() const
{
    return SearchNode{1, basis_.idempotent_order()};
}

bool GPosetSearch::passes_cardinality_test(const std::vector<Mask>& down, int depth) const
{
    if (depth <= 0)
        return true;
    const BasisBlock& blk = basis_.block(order_[depth]);
    int reference = lowest(blk.idempotents);
    for (int h = 0; h < depth; ++h) {
        Mask earlier = basis_.block(order_[h]).elements;
        int r = popcount(down[reference] & earlier);
        bool same = true;
        for_each_bit(blk.elements, [&](int s) { same = same && popcount(down[s] & earlier) == r; });
        if (!same)
            return false;
    }
    return true;
}

void GPosetSearch::expand(const SearchNode& node, const std::function<bool(SearchNode&&)>& emit) const
{
    int i = node.depth;
    int u = order_[i];
    const BasisBlock& blk = basis_.block(u);
    int ru = static_cast<int>(blk.rows.size());
    int qu = blk.group->order();

    // Global element for each block-local upper index.
    std::vector<int> slots;
    for (int a = 0; a < ru; ++a)
        for (int b = 0; b < ru; ++b)
            for (int g = 0; g < qu; ++g)
                slots.push_back(basis_.index(u, blk.rows[a], blk.rows[b], g));

    const auto& lists = options_[i];
    std::vector<std::size_t> pick(lists.size(), 0);
    for (const auto& l : lists)
        if (l.empty())
            return;

    for (;;) {
        SearchNode child{i + 1, node.down};
        for (std::size_t k = 0; k < slots.size(); ++k) {
            int s = slots[k];
            Mask m = node.down[s];
            for (std::size_t j = 0; j < lists.size(); ++j)
                for_each_bit(lists[j][pick[j]][k], [&](int t) { m |= node.down[t]; });
            child.down[s] = m;
        }
        if (passes_cardinality_test(child.down, i) && !emit(std::move(child)))
            return;

        std::size_t j = 0;
        while (j < lists.size() && ++pick[j] == lists[j].size())
            pick[j++] = 0;
        if (j == lists.size())
            return;
    }
}

std::vector<SearchNode> GPosetSearch::children(const SearchNode& node) const
{
    std::vector<SearchNode> out;
    if (node.depth >= block_count())
        return out;
    expand(node, [&](SearchNode&& c) {
        out.push_back(std::move(c));
        return true;
    });
    return out;
}

void GPosetSearch::for_each_leaf(const std::function<bool(const BasisOrder&)>& visit) const
{
    bool stop = false;
    auto dfs = [&](auto&& self, const SearchNode& node) -> void {
        if (node.depth == block_count()) {
#ifdef ISG_VALIDATE_LEAVES
            if (!satisfies_esn_hypotheses(basis_, node.down))
                throw std::logic_error("search produced an order violating the ESN hypotheses");
#endif
            if (!visit(BasisOrder{node.down}))
                stop = true;
            return;
        }
        expand(node, [&](SearchNode&& child) {
            self(self, child);
            return !stop;
        });
    };
    dfs(dfs, root());
}

std::vector<BasisOrder> g_posets(const NaturalBasis& basis)
{
    std::vector<BasisOrder> out;
    GPosetSearch(basis).for_each_leaf([&](const BasisOrder& o) {
        out.push_back(o);
        return true;
    });
    return out;
}

bool satisfies_esn_hypotheses(const NaturalBasis& basis, const std::vector<Mask>& down)
{
    int n = basis.size();
    if (static_cast<int>(down.size()) != n)
        return false;
    try {
        Poset::from_down_sets(down);
    } catch (const std::invalid_argument&) {
        return false;
    }
    int m = basis.idempotent_count();
    Mask idem = first_n(m);

    // (i) idempotents form a meet-semilattice
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
            Mask common = down[a] & down[b] & idem;
            int tops = 0;
            for_each_bit(common, [&](int x) {
                bool top = true;
                for_each_bit(common, [&](int y) { top = top && (y == x || !has(down[y], x)); });
                tops += top;
            });
            if (tops != 1)
                return false;
        }
    }
    for (int t = 0; t < n; ++t) {
        bool ok = true;
        for_each_bit(down[t], [&](int s) {
            // (ii) inverses
            ok = ok && has(down[basis.inverse(t)], basis.inverse(s));
        });
        if (!ok)
            return false;
        // (iv), (v) unique restriction and corestriction
        for (int pass = 0; pass < 2; ++pass) {
            int anchor = pass == 0 ? basis.dom(t) : basis.ran(t);
            for_each_bit(down[anchor], [&](int e) {
                int count = 0;
                for_each_bit(down[t], [&](int s) {
                    count += (pass == 0 ? basis.dom(s) : basis.ran(s)) == e;
                });
                ok = ok && count == 1;
            });
        }
        if (!ok)
            return false;
    }
    // (iii) products
    for (int y = 0; y < n; ++y) {
        for (int z = 0; z < n; ++z) {
            int yz = basis.product(y, z);
            if (yz < 0)
                continue;
            bool ok = true;
            for_each_bit(down[y], [&](int s) {
                for_each_bit(down[z], [&](int t) {
                    int st = basis.product(s, t);
                    ok = ok && (st < 0 || has(down[yz], st));
                });
            });
            if (!ok)
                return false;
        }
    }
    return true;
}

} // namespace isg
