#include "isg/order.hpp"

#include "fixtures.hpp"

#include <doctest.h>

using isg::bit;

TEST_SUITE("order")
{
    TEST_CASE("posets from relations")
    {
        auto p = isg::Poset::from_relations(3, {{0, 1}, {1, 2}});
        CHECK(p.leq(0, 2));
        CHECK_FALSE(p.leq(2, 0));
        CHECK(p.down(2) == (bit(0) | bit(1) | bit(2)));
        CHECK(p.up(0) == (bit(0) | bit(1) | bit(2)));
        CHECK(p.covers() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
        CHECK(p.maximal(isg::first_n(3)) == bit(2));
        CHECK(p.minimal(isg::first_n(3)) == bit(0));
        CHECK_THROWS_AS(isg::Poset::from_relations(2, {{0, 1}, {1, 0}}), std::invalid_argument);
        CHECK_THROWS_AS(isg::Poset::from_relations(2, {{0, 2}}), std::invalid_argument);
        CHECK_THROWS_AS(isg::Poset::from_down_sets({bit(0), bit(0)}), std::invalid_argument);
    }

    TEST_CASE("meets")
    {
        auto d = fx::diamond();
        CHECK(d->meet(1, 2) == 0);
        CHECK(d->meet(3, 1) == 1);
        CHECK(d->bottom() == 0);
        // Two minimal elements have no meet.
        CHECK_THROWS_AS(isg::MeetSemilattice(isg::Poset::from_relations(3, {{0, 2}, {1, 2}})), std::invalid_argument);
    }

    TEST_CASE("down levels")
    {
        CHECK(isg::down_levels(fx::chain(3)->poset()) == std::vector<isg::Mask>{bit(2), bit(1), bit(0)});
        CHECK(isg::down_levels(isg::Poset::from_relations(2, {})) == std::vector<isg::Mask>{bit(0) | bit(1)});
        CHECK(isg::down_levels(fx::vee()->poset()) == std::vector<isg::Mask>{bit(1) | bit(2), bit(0)});
        auto p = isg::Poset::from_relations(4, {{0, 1}, {1, 2}, {0, 3}});
        CHECK(isg::down_levels(p) == std::vector<isg::Mask>{bit(2) | bit(3), bit(1), bit(0)});
        CHECK(isg::up_levels(p) == std::vector<isg::Mask>{bit(0), bit(1) | bit(3), bit(2)});
        CHECK(isg::level_index(isg::down_levels(p), 4) == std::vector<int>{2, 1, 0, 0});
    }

    TEST_CASE("up-down levels")
    {
        CHECK(isg::up_down_levels(fx::chain(3)->poset()) == std::vector<isg::Mask>{bit(0), bit(1), bit(2)});
        CHECK(isg::up_down_levels(fx::vee()->poset()) == std::vector<isg::Mask>{bit(0), bit(1) | bit(2)});
        CHECK(isg::up_down_levels(fx::diamond()->poset()) ==
              std::vector<isg::Mask>{bit(0), bit(1) | bit(2), bit(3)});
        // 3 sits in down-level 1 but up-level 1, apart from 2.
        auto p = isg::Poset::from_relations(4, {{0, 1}, {1, 2}, {0, 3}});
        CHECK(isg::up_down_levels(p) == std::vector<isg::Mask>{bit(0), bit(1), bit(2), bit(3)});
    }

    TEST_CASE("has maximum")
    {
        CHECK(isg::has_maximum(*fx::chain(4)));
        CHECK(isg::has_maximum(*fx::chain(1)));
        CHECK(isg::has_maximum(*fx::diamond()));
        CHECK_FALSE(isg::has_maximum(*fx::vee()));
    }

    TEST_CASE("colored isomorphisms")
    {
        isg::ColoredPoset two_chain{fx::chain(2)->poset(), {0, 0}};
        CHECK(isg::all_colored_isomorphisms(two_chain, two_chain) == std::vector<std::vector<int>>{{0, 1}});

        isg::ColoredPoset anti{isg::Poset::from_relations(2, {}), {5, 5}};
        CHECK(isg::all_colored_isomorphisms(anti, anti).size() == 2);

        isg::ColoredPoset other{isg::Poset::from_relations(2, {}), {5, 6}};
        CHECK(isg::all_colored_isomorphisms(anti, other).empty());

        isg::ColoredPoset v{fx::vee()->poset(), {0, 1, 2}};
        isg::ColoredPoset w{fx::vee()->poset(), {0, 2, 1}};
        CHECK(isg::all_colored_isomorphisms(v, w) == std::vector<std::vector<int>>{{0, 2, 1}});

        isg::ColoredPoset d{fx::diamond()->poset(), {0, 0, 0, 0}};
        CHECK(isg::all_colored_isomorphisms(d, d).size() == 2);
    }

    TEST_CASE("colored isomorphisms agree with brute force on relabelings")
    {
        std::mt19937 rng(7);
        auto e = isg::Poset::from_relations(6, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {0, 4}, {4, 5}});
        for (int round = 0; round < 20; ++round) {
            auto p = fx::random_permutation(6, rng);
            std::vector<std::pair<int, int>> less;
            for (auto [a, b] : e.covers())
                less.emplace_back(p[a], p[b]);
            auto f = isg::Poset::from_relations(6, less);
            auto maps = isg::all_colored_isomorphisms({e, std::vector<int>(6, 0)}, {f, std::vector<int>(6, 0)});
            int brute = 0;
            std::vector<int> q(6);
            std::iota(q.begin(), q.end(), 0);
            do {
                bool ok = true;
                for (int x = 0; x < 6 && ok; ++x)
                    for (int y = 0; y < 6 && ok; ++y)
                        ok = e.leq(x, y) == f.leq(q[x], q[y]);
                brute += ok;
            } while (std::next_permutation(q.begin(), q.end()));
            CHECK(static_cast<int>(maps.size()) == brute);
            CHECK(std::find(maps.begin(), maps.end(), p) != maps.end());
        }
    }

    TEST_CASE("cover lines")
    {
        auto d = fx::diamond();
        auto line = isg::to_cover_line(d->poset());
        CHECK(line == "4:0<1,0<2,1<3,2<3");
        CHECK(isg::parse_cover_line(line).poset() == d->poset());
        CHECK(isg::parse_cover_line("1:").size() == 1);
        CHECK_THROWS_AS(isg::parse_cover_line("3:0<1"), std::invalid_argument);
        CHECK_THROWS_AS(isg::parse_cover_line("x"), std::invalid_argument);
        CHECK_THROWS_AS(isg::parse_cover_line("2:0<5"), std::invalid_argument);
    }
}
