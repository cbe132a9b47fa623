#include "isg/order.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <tuple>

namespace isg {

namespace {

std::vector<Mask> transpose(const std::vector<Mask>& rows)
{
    std::vector<Mask> cols(rows.size(), 0);
    for (std::size_t x = 0; x < rows.size(); ++x)
        for_each_bit(rows[x], [&](int y) { cols[y] |= bit(static_cast<int>(x)); });
    return cols;
}

} // namespace

Poset Poset::from_down_sets(std::vector<Mask> down)
{
    int n = static_cast<int>(down.size());
    if (n > kMaxElements)
        throw std::invalid_argument("poset too large");
    Mask all = first_n(n);
    for (int x = 0; x < n; ++x) {
        if (!has(down[x], x))
            throw std::invalid_argument("order is not reflexive at " + std::to_string(x));
        if (down[x] & ~all)
            throw std::invalid_argument("order refers to elements beyond the poset");
        Mask below = down[x];
        for_each_bit(down[x], [&](int y) {
            if (y != x && has(down[y], x))
                throw std::invalid_argument("order is not antisymmetric");
            below |= down[y];
        });
        if (below != down[x])
            throw std::invalid_argument("order is not transitive at " + std::to_string(x));
    }
    Poset p;
    p.up_ = transpose(down);
    p.down_ = std::move(down);
    return p;
}

Poset Poset::from_relations(int size, const std::vector<std::pair<int, int>>& less)
{
    if (size < 0 || size > kMaxElements)
        throw std::invalid_argument("poset size out of range");
    std::vector<Mask> down(size);
    for (int x = 0; x < size; ++x)
        down[x] = bit(x);
    for (auto [u, v] : less) {
        if (u < 0 || v < 0 || u >= size || v >= size)
            throw std::invalid_argument("relation element out of range");
        down[v] |= bit(u);
    }
    for (bool changed = true; changed;) {
        changed = false;
        for (int x = 0; x < size; ++x) {
            Mask m = down[x];
            for_each_bit(down[x], [&](int y) { m |= down[y]; });
            if (m != down[x]) {
                down[x] = m;
                changed = true;
            }
        }
    }
    return from_down_sets(std::move(down));
}

Mask Poset::maximal(Mask within) const
{
    Mask out = 0;
    for_each_bit(within, [&](int x) {
        if ((up_[x] & within) == bit(x))
            out |= bit(x);
    });
    return out;
}

Mask Poset::minimal(Mask within) const
{
    Mask out = 0;
    for_each_bit(within, [&](int x) {
        if ((down_[x] & within) == bit(x))
            out |= bit(x);
    });
    return out;
}

std::vector<std::pair<int, int>> Poset::covers() const
{
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < size(); ++u) {
        Mask strict_up = up_[u] & ~bit(u);
        for_each_bit(minimal(strict_up), [&](int v) { out.emplace_back(u, v); });
    }
    std::sort(out.begin(), out.end());
    return out;
}

MeetSemilattice::MeetSemilattice(Poset poset) : poset_(std::move(poset))
{
    int n = poset_.size();
    if (n == 0)
        throw std::invalid_argument("a meet-semilattice needs at least one element");
    meet_.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            Mask common = poset_.down(a) & poset_.down(b);
            Mask top = poset_.maximal(common);
            if (popcount(top) != 1)
                throw std::invalid_argument("elements " + std::to_string(a) + " and " +
                                            std::to_string(b) + " have no meet");
            meet_[a * n + b] = static_cast<std::uint8_t>(lowest(top));
        }
    }
    Mask all = first_n(n);
    Mask mins = poset_.minimal(all);
    bottom_ = lowest(mins);
}

std::vector<Mask> down_levels(const Poset& p)
{
    std::vector<Mask> levels;
    for (Mask rest = first_n(p.size()); rest;) {
        Mask top = p.maximal(rest);
        levels.push_back(top);
        rest &= ~top;
    }
    return levels;
}

std::vector<Mask> up_levels(const Poset& p)
{
    std::vector<Mask> levels;
    for (Mask rest = first_n(p.size()); rest;) {
        Mask low = p.minimal(rest);
        levels.push_back(low);
        rest &= ~low;
    }
    return levels;
}

std::vector<Mask> up_down_levels(const Poset& p)
{
    std::vector<Mask> out;
    for (Mask d : down_levels(p))
        for (Mask u : up_levels(p))
            if (d & u)
                out.push_back(d & u);
    std::sort(out.begin(), out.end(), [](Mask a, Mask b) { return lowest(a) < lowest(b); });
    return out;
}

std::vector<int> level_index(const std::vector<Mask>& levels, int size)
{
    std::vector<int> out(size, -1);
    for (std::size_t i = 0; i < levels.size(); ++i)
        for_each_bit(levels[i], [&](int x) { out[x] = static_cast<int>(i); });
    return out;
}

bool has_maximum(const MeetSemilattice& e)
{
    return popcount(e.poset().maximal(first_n(e.size()))) == 1;
}

namespace {

using Signature = std::tuple<int, int, int, int, int>;

std::vector<Signature> signatures(const ColoredPoset& c)
{
    const Poset& p = c.poset;
    auto dl = level_index(down_levels(p), p.size());
    auto ul = level_index(up_levels(p), p.size());
    std::vector<Signature> out;
    for (int x = 0; x < p.size(); ++x)
        out.emplace_back(c.color[x], dl[x], ul[x], popcount(p.down(x)), popcount(p.up(x)));
    return out;
}

} // namespace

void colored_isomorphisms(const ColoredPoset& a, const ColoredPoset& b,
                          const std::function<bool(const std::vector<int>&)>& visit)
{
    int n = a.poset.size();
    if (n != b.poset.size() || static_cast<int>(a.color.size()) != n ||
        static_cast<int>(b.color.size()) != n)
        return;
    auto sa = signatures(a);
    auto sb = signatures(b);
    {
        auto x = sa, y = sb;
        std::sort(x.begin(), x.end());
        std::sort(y.begin(), y.end());
        if (x != y)
            return;
    }
    std::vector<int> image(n, -1);
    Mask used = 0;
    bool stop = false;

    auto search = [&](auto&& self, int x) -> void {
        if (x == n) {
            if (!visit(image))
                stop = true;
            return;
        }
        for (int y = 0; y < n && !stop; ++y) {
            if (has(used, y) || sa[x] != sb[y])
                continue;
            bool ok = true;
            for (int z = 0; z < x && ok; ++z) {
                int w = image[z];
                ok = a.poset.leq(z, x) == b.poset.leq(w, y) && a.poset.leq(x, z) == b.poset.leq(y, w);
            }
            if (!ok)
                continue;
            image[x] = y;
            used |= bit(y);
            self(self, x + 1);
            used &= ~bit(y);
            image[x] = -1;
        }
    };
    search(search, 0);
}

std::vector<std::vector<int>> all_colored_isomorphisms(const ColoredPoset& a, const ColoredPoset& b)
{
    std::vector<std::vector<int>> out;
    colored_isomorphisms(a, b, [&](const std::vector<int>& m) {
        out.push_back(m);
        return true;
    });
    return out;
}

std::string to_cover_line(const Poset& p)
{
    std::string s = std::to_string(p.size()) + ":";
    bool first = true;
    for (auto [u, v] : p.covers()) {
        if (!first)
            s += ',';
        first = false;
        s += std::to_string(u) + "<" + std::to_string(v);
    }
    return s;
}

namespace {

int parse_int(std::string_view text, std::string_view whole)
{
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
        throw std::invalid_argument("malformed cover line: " + std::string(whole));
    return value;
}

} // namespace

MeetSemilattice parse_cover_line(std::string_view line)
{
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' '))
        line.remove_suffix(1);
    auto colon = line.find(':');
    if (colon == std::string_view::npos)
        throw std::invalid_argument("malformed cover line: " + std::string(line));
    int m = parse_int(line.substr(0, colon), line);
    if (m < 1 || m > kMaxElements)
        throw std::invalid_argument("semilattice order out of range: " + std::string(line));
    std::vector<std::pair<int, int>> less;
    std::string_view rest = line.substr(colon + 1);
    while (!rest.empty()) {
        auto comma = rest.find(',');
        std::string_view item = rest.substr(0, comma);
        auto lt = item.find('<');
        if (lt == std::string_view::npos)
            throw std::invalid_argument("malformed cover line: " + std::string(line));
        less.emplace_back(parse_int(item.substr(0, lt), line), parse_int(item.substr(lt + 1), line));
        if (comma == std::string_view::npos)
            break;
        rest.remove_prefix(comma + 1);
    }
    return MeetSemilattice(Poset::from_relations(m, less));
}

} // namespace isg
