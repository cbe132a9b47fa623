#pragma once

#include "isg/semigroup.hpp"

#include "../support/oracles.hpp"

#include <memory>
#include <numeric>
#include <random>
#include <vector>

namespace fx {

using isg::bit;

inline std::shared_ptr<const isg::MeetSemilattice> semilattice(int size, const std::vector<std::pair<int, int>>& less)
{
    return std::make_shared<const isg::MeetSemilattice>(isg::Poset::from_relations(size, less));
}

inline std::shared_ptr<const isg::MeetSemilattice> chain(int k)
{
    std::vector<std::pair<int, int>> less;
    for (int i = 0; i + 1 < k; ++i)
        less.emplace_back(i, i + 1);
    return semilattice(k, less);
}

/// Bottom 0 below atoms 1 and 2.
inline std::shared_ptr<const isg::MeetSemilattice> vee() { return semilattice(3, {{0, 1}, {0, 2}}); }

/// 0 below a=1 and b=2, both below 3.
inline std::shared_ptr<const isg::MeetSemilattice> diamond() { return semilattice(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}); }

inline const isg::Group& group(const char* name) { return isg::GroupCatalog::standard().by_name(name); }

inline std::shared_ptr<const isg::NaturalBasis> basis(std::shared_ptr<const isg::MeetSemilattice> e,
                                                      std::vector<isg::Mask> blocks, std::vector<const char*> groups)
{
    isg::GroupAssignment f;
    for (auto* g : groups)
        f.push_back(&group(g));
    return std::make_shared<const isg::NaturalBasis>(std::move(e), isg::DPartition{std::move(blocks)}, f);
}

/// Finest partition with trivial groups.
inline std::shared_ptr<const isg::NaturalBasis> finest(std::shared_ptr<const isg::MeetSemilattice> e)
{
    std::vector<isg::Mask> blocks;
    std::vector<const char*> groups;
    for (int x = 0; x < e->size(); ++x) {
        blocks.push_back(bit(x));
        groups.push_back("C1");
    }
    return basis(std::move(e), blocks, groups);
}

inline std::vector<isg::InverseSemigroup> all_semigroups(const std::shared_ptr<const isg::NaturalBasis>& b)
{
    std::vector<isg::InverseSemigroup> out;
    for (const auto& order : isg::g_posets(*b))
        out.push_back(isg::esn(b, order));
    return out;
}

/// The 5-element Brandt semigroup: 2x2 matrix units over the trivial group and zero.
inline isg::InverseSemigroup brandt()
{
    return all_semigroups(basis(vee(), {bit(1) | bit(2), bit(0)}, {"C1", "C1"})).at(0);
}

/// C2 with an identity adjoined.
inline isg::InverseSemigroup c2_with_identity()
{
    return all_semigroups(basis(chain(2), {bit(0), bit(1)}, {"C2", "C1"})).at(0);
}

/// The table with elements renamed by p: x becomes p[x].
inline oracle::Table relabel(int n, const oracle::Table& t, const std::vector<int>& p)
{
    oracle::Table out(n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            out[p[a] * n + p[b]] = p[t[a * n + b]];
    return out;
}

inline std::vector<int> random_permutation(int n, std::mt19937& rng)
{
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

} // namespace fx
