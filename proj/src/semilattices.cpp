#include "isg/semilattices.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace isg {

namespace {

struct Refinement {
    std::vector<int> color;
    // Sorted final signatures, flattened: an isomorphism invariant.
    std::vector<int> key;
};

Refinement refine(const Poset& p)
{
    int n = p.size();
    Refinement r;
    r.color.resize(n);
    for (int x = 0; x < n; ++x)
        r.color[x] = popcount(p.down(x)) * (kMaxElements + 1) + popcount(p.up(x));

    std::vector<std::vector<int>> sig(n);
    int classes = -1;
    for (;;) {
        for (int x = 0; x < n; ++x) {
            std::vector<int> below, above;
            for_each_bit(p.down(x) & ~bit(x), [&](int y) { below.push_back(r.color[y]); });
            for_each_bit(p.up(x) & ~bit(x), [&](int y) { above.push_back(r.color[y]); });
            std::sort(below.begin(), below.end());
            std::sort(above.begin(), above.end());
            sig[x].assign({r.color[x], static_cast<int>(below.size())});
            sig[x].insert(sig[x].end(), below.begin(), below.end());
            sig[x].push_back(-1);
            sig[x].insert(sig[x].end(), above.begin(), above.end());
        }
        auto distinct = sig;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (int x = 0; x < n; ++x)
            r.color[x] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[x]) -
                                          distinct.begin());
        int now = static_cast<int>(distinct.size());
        if (now == classes) {
            auto sorted = sig;
            std::sort(sorted.begin(), sorted.end());
            for (const auto& s : sorted) {
                r.key.insert(r.key.end(), s.begin(), s.end());
                r.key.push_back(-2);
            }
            return r;
        }
        classes = now;
    }
}

// Down-sets D of `parent` (containing its minimum) such that adding a new
// element whose strict down-set is D keeps every meet defined.
std::vector<Mask> extension_sets(const MeetSemilattice& parent)
{
    const Poset& p = parent.poset();
    int n = p.size();
    std::vector<Mask> out;
    auto principal_everywhere = [&](Mask d) {
        for (int y = 0; y < n; ++y) {
            Mask part = d & p.down(y);
            if (popcount(p.maximal(part)) != 1)
                return false;
        }
        return true;
    };
    // Labels are a linear extension, so each element's strict down-set is
    // decided before the element itself.
    auto search = [&](auto&& self, int x, Mask d) -> void {
        if (x == n) {
            if (principal_everywhere(d))
                out.push_back(d);
            return;
        }
        self(self, x + 1, d);
        if ((p.down(x) & ~bit(x) & ~d) == 0)
            self(self, x + 1, d | bit(x));
    };
    search(search, 1, bit(parent.bottom()));
    return out;
}

std::vector<MeetSemilattice> next_order(const std::vector<MeetSemilattice>& parents)
{
    std::vector<MeetSemilattice> out;
    std::vector<std::vector<int>> colors;
    std::map<std::vector<int>, std::vector<int>> buckets;

    for (const auto& parent : parents) {
        int n = parent.size();
        for (Mask d : extension_sets(parent)) {
            std::vector<Mask> down = parent.poset().down_sets();
            down.push_back(d | bit(n));
            Poset child = Poset::from_down_sets(std::move(down));
            Refinement r = refine(child);

            // Only keep children whose new element lies in the preferred
            // class of maximal elements; every class still arises this way.
            int best = -1;
            for_each_bit(child.maximal(first_n(n + 1)), [&](int x) { best = std::max(best, r.color[x]); });
            if (r.color[n] != best)
                continue;

            auto& bucket = buckets[r.key];
            ColoredPoset mine{child, r.color};
            bool seen = std::any_of(bucket.begin(), bucket.end(), [&](int idx) {
                bool found = false;
                colored_isomorphisms(mine, ColoredPoset{out[idx].poset(), colors[idx]},
                                     [&](const std::vector<int>&) {
                                         found = true;
                                         return false;
                                     });
                return found;
            });
            if (seen)
                continue;
            bucket.push_back(static_cast<int>(out.size()));
            out.emplace_back(std::move(child));
            colors.push_back(std::move(r.color));
        }
    }
    return out;
}

} // namespace

std::vector<int> refined_colors(const Poset& p)
{
    return refine(p).color;
}

std::vector<std::vector<MeetSemilattice>> meet_semilattices_up_to(int m)
{
    if (m < 1)
        throw std::invalid_argument("semilattice order must be at least 1");
    if (m > kMaxElements)
        throw std::invalid_argument("semilattice order too large");
    std::vector<std::vector<MeetSemilattice>> levels;
    levels.push_back({MeetSemilattice(Poset::from_down_sets({bit(0)}))});
    while (static_cast<int>(levels.size()) < m)
        levels.push_back(next_order(levels.back()));
    return levels;
}

std::vector<MeetSemilattice> meet_semilattices(int m)
{
    return std::move(meet_semilattices_up_to(m).back());
}

void for_each_meet_semilattice(int m, const std::function<void(const MeetSemilattice&)>& visit)
{
    for (const auto& e : meet_semilattices(m))
        visit(e);
}

std::int64_t count_meet_semilattices(int m)
{
    return static_cast<std::int64_t>(meet_semilattices(m).size());
}

} // namespace isg
