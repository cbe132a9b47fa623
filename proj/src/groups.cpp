#include "isg/groups.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace isg {

Group::Group(std::string name, int order, const std::function<int(int, int)>& mul)
    : name_(std::move(name)), order_(order)
{
    if (order < 1 || order > 255)
        throw std::invalid_argument("group order out of range: " + std::to_string(order));
    table_.resize(static_cast<std::size_t>(order) * order);
    for (int a = 0; a < order; ++a) {
        for (int b = 0; b < order; ++b) {
            int c = mul(a, b);
            if (c < 0 || c >= order)
                throw std::invalid_argument("group product out of range in " + name_);
            table_[a * order + b] = static_cast<std::uint8_t>(c);
        }
    }
    for (int a = 0; a < order; ++a) {
        if (this->mul(0, a) != a || this->mul(a, 0) != a)
            throw std::invalid_argument("element 0 is not the identity of " + name_);
    }
    for (int a = 0; a < order; ++a) {
        std::vector<bool> row(order), col(order);
        for (int b = 0; b < order; ++b) {
            row[this->mul(a, b)] = true;
            col[this->mul(b, a)] = true;
        }
        if (std::find(row.begin(), row.end(), false) != row.end() ||
            std::find(col.begin(), col.end(), false) != col.end())
            throw std::invalid_argument("table of " + name_ + " is not a Latin square");
    }
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b)
            for (int c = 0; c < order; ++c)
                if (this->mul(this->mul(a, b), c) != this->mul(a, this->mul(b, c)))
                    throw std::invalid_argument("table of " + name_ + " is not associative");

    inverse_.resize(order);
    element_order_.resize(order);
    for (int a = 0; a < order; ++a) {
        for (int b = 0; b < order; ++b)
            if (this->mul(a, b) == 0)
                inverse_[a] = static_cast<std::uint8_t>(b);
        int k = 1;
        for (int x = a; x != 0; x = this->mul(x, a))
            ++k;
        element_order_[a] = static_cast<std::uint8_t>(k);
    }
}

bool Group::is_abelian() const
{
    for (int a = 0; a < order_; ++a)
        for (int b = a + 1; b < order_; ++b)
            if (mul(a, b) != mul(b, a))
                return false;
    return true;
}

bool GroupMap::is_homomorphism() const
{
    int n = source->order();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (images[source->mul(a, b)] != target->mul(images[a], images[b]))
                return false;
    return true;
}

Group cyclic_group(int n)
{
    return Group("C" + std::to_string(n), n, [n](int a, int b) { return (a + b) % n; });
}

Group dihedral_group(int n, std::string name)
{
    if (name.empty())
        name = "D" + std::to_string(n);
    // r^i s^j is stored as i + n*j.
    return Group(std::move(name), 2 * n, [n](int x, int y) {
        int a = x % n, b = x / n, c = y % n, d = y / n;
        int r = b ? a - c : a + c;
        return ((r % n + n) % n) + n * ((b + d) % 2);
    });
}

Group dicyclic_group(int n, std::string name)
{
    if (name.empty())
        name = "Dic" + std::to_string(n);
    int m = 2 * n;
    // a^i x^j is stored as i + m*j, with x^2 = a^n and x a = a^-1 x.
    return Group(std::move(name), 2 * m, [n, m](int p, int q) {
        int i = p % m, j = p / m, k = q % m, l = q / m;
        int e = j ? i - k : i + k;
        int xs = j + l;
        if (xs == 2) {
            e += n;
            xs = 0;
        }
        return ((e % m + m) % m) + m * xs;
    });
}

Group direct_product(const Group& a, const Group& b, std::string name)
{
    if (name.empty())
        name = a.name() + "x" + b.name();
    int nb = b.order();
    return Group(std::move(name), a.order() * nb, [&a, &b, nb](int x, int y) {
        return a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
    });
}

Group permutation_group(std::string name, const std::vector<std::vector<int>>& generators)
{
    if (generators.empty())
        throw std::invalid_argument("permutation group needs at least one generator");
    std::size_t degree = generators.front().size();
    std::vector<int> identity(degree);
    std::iota(identity.begin(), identity.end(), 0);

    auto compose = [](const std::vector<int>& p, const std::vector<int>& q) {
        std::vector<int> r(q.size());
        for (std::size_t i = 0; i < q.size(); ++i)
            r[i] = p[q[i]];
        return r;
    };

    std::vector<std::vector<int>> elements{identity};
    std::map<std::vector<int>, int> index{{identity, 0}};
    for (std::size_t head = 0; head < elements.size(); ++head) {
        for (const auto& g : generators) {
            if (g.size() != degree)
                throw std::invalid_argument("permutation generators differ in degree");
            auto next = compose(elements[head], g);
            if (index.emplace(next, static_cast<int>(elements.size())).second)
                elements.push_back(std::move(next));
        }
    }
    return Group(std::move(name), static_cast<int>(elements.size()), [&](int x, int y) {
        return index.at(compose(elements[x], elements[y]));
    });
}

namespace {

std::vector<bool> subgroup_closure(const Group& g, const std::vector<int>& gens)
{
    std::vector<bool> in(g.order());
    std::vector<int> queue{0};
    in[0] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (int s : gens) {
            int x = g.mul(queue[head], s);
            if (!in[x]) {
                in[x] = true;
                queue.push_back(x);
            }
        }
    }
    return in;
}

// Each non-identity element written as parent * generator, in BFS order.
struct Words {
    std::vector<int> order;
    std::vector<int> parent;
    std::vector<int> gen;
};

Words words_over(const Group& g, const std::vector<int>& gens)
{
    Words w;
    w.parent.assign(g.order(), -1);
    w.gen.assign(g.order(), -1);
    std::vector<bool> seen(g.order());
    seen[0] = true;
    w.order.push_back(0);
    for (std::size_t head = 0; head < w.order.size(); ++head) {
        int x = w.order[head];
        for (std::size_t k = 0; k < gens.size(); ++k) {
            int y = g.mul(x, gens[k]);
            if (!seen[y]) {
                seen[y] = true;
                w.parent[y] = x;
                w.gen[y] = static_cast<int>(k);
                w.order.push_back(y);
            }
        }
    }
    return w;
}

} // namespace

std::vector<int> generating_set(const Group& g)
{
    std::vector<int> by_order(g.order());
    std::iota(by_order.begin(), by_order.end(), 0);
    std::stable_sort(by_order.begin(), by_order.end(), [&](int a, int b) {
        return g.element_order(a) > g.element_order(b);
    });
    std::vector<int> gens;
    std::vector<bool> covered = subgroup_closure(g, gens);
    for (int x : by_order) {
        if (covered[x])
            continue;
        gens.push_back(x);
        covered = subgroup_closure(g, gens);
    }
    return gens;
}

std::vector<GroupMap> isomorphisms(const Group& g, const Group& h)
{
    std::vector<GroupMap> out;
    if (g.order() != h.order())
        return out;
    auto order_profile = [](const Group& x) {
        std::vector<int> p;
        for (int a = 0; a < x.order(); ++a)
            p.push_back(x.element_order(a));
        std::sort(p.begin(), p.end());
        return p;
    };
    if (order_profile(g) != order_profile(h))
        return out;

    std::vector<int> gens = generating_set(g);
    Words w = words_over(g, gens);
    std::vector<int> images(gens.size());

    auto try_extend = [&] {
        GroupMap m{&g, &h, std::vector<std::uint8_t>(g.order())};
        std::vector<bool> used(h.order());
        m.images[0] = 0;
        used[0] = true;
        for (std::size_t i = 1; i < w.order.size(); ++i) {
            int x = w.order[i];
            int y = h.mul(m.images[w.parent[x]], images[w.gen[x]]);
            if (used[y])
                return;
            used[y] = true;
            m.images[x] = static_cast<std::uint8_t>(y);
        }
        if (m.is_homomorphism())
            out.push_back(std::move(m));
    };

    auto search = [&](auto&& self, std::size_t k) -> void {
        if (k == gens.size()) {
            try_extend();
            return;
        }
        for (int y = 0; y < h.order(); ++y) {
            if (h.element_order(y) != g.element_order(gens[k]))
                continue;
            images[k] = y;
            self(self, k + 1);
        }
    };
    search(search, 0);
    return out;
}

bool are_isomorphic(const Group& g, const Group& h)
{
    return !isomorphisms(g, h).empty();
}

std::vector<GroupMap> automorphisms(const Group& g)
{
    return isomorphisms(g, g);
}

std::vector<GroupMap> bijections(const Group& g, const Group& h)
{
    if (g.order() != h.order())
        throw std::invalid_argument("bijections: group orders differ (" + std::to_string(g.order()) +
                                    " vs " + std::to_string(h.order()) + ")");
    std::vector<std::uint8_t> p(g.order());
    std::iota(p.begin(), p.end(), 0);
    std::vector<GroupMap> out;
    do {
        out.push_back(GroupMap{&g, &h, p});
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

namespace {

// Invariant factor lists d1 >= d2 >= ... with d_{i+1} | d_i and product n.
void invariant_factors(int n, int bound, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (n == 1) {
        out.push_back(cur);
        return;
    }
    for (int d = std::min(n, bound); d >= 2; --d) {
        if (n % d != 0 || (!cur.empty() && cur.back() % d != 0))
            continue;
        cur.push_back(d);
        invariant_factors(n / d, d, cur, out);
        cur.pop_back();
    }
}

std::vector<Group> abelian_groups(int n)
{
    if (n == 1)
        return {cyclic_group(1)};
    std::vector<std::vector<int>> lists;
    std::vector<int> cur;
    invariant_factors(n, n, cur, lists);
    std::vector<Group> out;
    for (const auto& factors : lists) {
        Group g = cyclic_group(factors[0]);
        for (std::size_t i = 1; i < factors.size(); ++i)
            g = direct_product(g, cyclic_group(factors[i]));
        out.push_back(std::move(g));
    }
    return out;
}

} // namespace

GroupCatalog::GroupCatalog()
{
    std::vector<Group> candidates;
    for (int n = 1; n <= kMaxOrder; ++n)
        for (auto& g : abelian_groups(n))
            candidates.push_back(std::move(g));
    candidates.push_back(dihedral_group(3, "S3"));
    candidates.push_back(dihedral_group(4));
    candidates.push_back(dicyclic_group(2, "Q8"));
    candidates.push_back(dihedral_group(5));
    candidates.push_back(dihedral_group(6));
    candidates.push_back(dicyclic_group(3));
    candidates.push_back(permutation_group("A4", {{1, 2, 0, 3}, {1, 0, 3, 2}}));
    candidates.push_back(dihedral_group(7));

    for (auto& g : candidates) {
        bool duplicate = std::any_of(groups_.begin(), groups_.end(), [&](const Group& h) {
            return are_isomorphic(g, h);
        });
        if (!duplicate)
            groups_.push_back(std::move(g));
    }
    std::stable_sort(groups_.begin(), groups_.end(), [](const Group& a, const Group& b) {
        if (a.order() != b.order())
            return a.order() < b.order();
        return a.name() < b.name();
    });
    for (std::size_t i = 0; i < groups_.size(); ++i)
        groups_[i].id_ = static_cast<int>(i);
    for (const auto& g : groups_)
        automorphisms_.push_back(automorphisms(g));
}

const GroupCatalog& GroupCatalog::standard()
{
    static const GroupCatalog instance;
    return instance;
}

const Group& GroupCatalog::by_name(std::string_view name) const
{
    for (const auto& g : groups_)
        if (g.name() == name)
            return g;
    throw std::invalid_argument("unknown group name: " + std::string(name));
}

std::vector<const Group*> GroupCatalog::of_order(int order) const
{
    std::vector<const Group*> out;
    for (const auto& g : groups_)
        if (g.order() == order)
            out.push_back(&g);
    return out;
}

const std::vector<GroupMap>& GroupCatalog::automorphisms_of(const Group& g) const
{
    if (g.id() < 0 || g.id() >= static_cast<int>(groups_.size()) || &groups_[g.id()] != &g)
        throw std::invalid_argument("group " + g.name() + " is not a catalog entry");
    return automorphisms_[g.id()];
}

std::vector<const Group*> catalog(int n)
{
    if (n < 1 || n > GroupCatalog::kMaxOrder)
        throw std::invalid_argument("catalog order must be in [1, 15], got " + std::to_string(n));
    std::vector<const Group*> out;
    for (const auto& g : GroupCatalog::standard().groups())
        if (g.order() <= n)
            out.push_back(&g);
    return out;
}

} // namespace isg
