#include "isg/gposets.hpp"

#include "fixtures.hpp"

#include <doctest.h>

#include <set>

using isg::bit;

namespace {

std::set<std::vector<isg::Mask>> oracle_orders(const isg::NaturalBasis& b)
{
    std::set<std::vector<isg::Mask>> out;
    for (auto& down : oracle::all_extensions(b))
        if (oracle::esn_hypotheses(b, down))
            out.insert(std::move(down));
    return out;
}

std::set<std::vector<isg::Mask>> search_orders(const isg::NaturalBasis& b)
{
    std::set<std::vector<isg::Mask>> out;
    for (const auto& o : isg::g_posets(b))
        out.insert(o.down);
    return out;
}

} // namespace

TEST_SUITE("gposets")
{
    TEST_CASE("single block has one order")
    {
        for (const char* g : {"C1", "C2", "C3", "C2xC2", "S3"}) {
            auto b = fx::basis(fx::chain(1), {bit(0)}, {g});
            auto orders = isg::g_posets(*b);
            REQUIRE(orders.size() == 1);
            for (int s = 0; s < b->size(); ++s)
                CHECK(orders[0].down[s] == bit(s));
            isg::GPosetSearch search(*b);
            CHECK(search.block_count() == 1);
            CHECK(search.children(search.root()).empty());
        }
    }

    TEST_CASE("Brandt data")
    {
        auto b = fx::basis(fx::vee(), {bit(1) | bit(2), bit(0)}, {"C1", "C1"});
        auto cross = isg::poset_possibilities(*b, 0, 1, nullptr);
        REQUIRE(cross.size() == 1);
        for (isg::Mask m : cross[0])
            CHECK(m == bit(0));
        isg::GPosetSearch search(*b);
        CHECK(search.children(search.root()).size() == 1);
        auto orders = isg::g_posets(*b);
        REQUIRE(orders.size() == 1);
        for (int s = 0; s < b->size(); ++s)
            CHECK(orders[0].leq(0, s));
    }

    TEST_CASE("trivial top over C2 bottom")
    {
        auto b = fx::basis(fx::chain(2), {bit(0), bit(1)}, {"C2", "C1"});
        auto orders = isg::g_posets(*b);
        REQUIRE(orders.size() == 1);
        int a = b->index(0, 0, 0, 1);
        CHECK(orders[0].leq(0, 1));
        CHECK_FALSE(orders[0].leq(a, 1));
    }

    TEST_CASE("2x2 trivial block over C2 bottom")
    {
        auto b = fx::basis(fx::vee(), {bit(1) | bit(2), bit(0)}, {"C1", "C2"});
        CHECK(isg::poset_possibilities(*b, 0, 1, nullptr).size() == 2);
        isg::GPosetSearch search(*b);
        auto kids = search.children(search.root());
        CHECK(kids.size() == 2);
        for (const auto& k : kids)
            CHECK(search.passes_cardinality_test(k.down, 1));
        CHECK(search_orders(*b) == oracle_orders(*b));
    }

    TEST_CASE("cardinality test")
    {
        auto b = fx::basis(fx::vee(), {bit(1) | bit(2), bit(0)}, {"C1", "C2"});
        isg::GPosetSearch search(*b);
        CHECK(search.passes_cardinality_test(search.root().down, 0));
        auto leaf = isg::g_posets(*b).at(0).down;
        CHECK(search.passes_cardinality_test(leaf, 1));
        // One off-diagonal unit loses everything below it.
        int e12 = b->index(0, 1, 2, 0);
        leaf[e12] = bit(e12);
        CHECK_FALSE(search.passes_cardinality_test(leaf, 1));
    }

    TEST_CASE("cache gives the same possibilities")
    {
        auto b = fx::basis(fx::diamond(), {bit(1) | bit(2), bit(0), bit(3)}, {"C1", "C2", "C1"});
        isg::PossibilityCache cache;
        auto direct = isg::poset_possibilities(*b, 0, 1, nullptr);
        auto first = isg::poset_possibilities(*b, 0, 1, &cache);
        auto again = isg::poset_possibilities(*b, 0, 1, &cache);
        CHECK(cache.size() >= 1);
        CHECK(std::set<isg::CrossOrder>(direct.begin(), direct.end()) ==
              std::set<isg::CrossOrder>(first.begin(), first.end()));
        CHECK(first == again);
    }

    TEST_CASE("search agrees with the brute-force filter")
    {
        // A spread of bases with up to seven elements.
        std::vector<std::shared_ptr<const isg::NaturalBasis>> cases{
            fx::basis(fx::chain(2), {bit(0), bit(1)}, {"C3", "C2"}),
            fx::basis(fx::chain(2), {bit(0), bit(1)}, {"C2", "C2"}),
            fx::basis(fx::chain(3), {bit(0), bit(1), bit(2)}, {"C2", "C1", "C2"}),
            fx::basis(fx::vee(), {bit(0), bit(1), bit(2)}, {"C2", "C2", "C1"}),
            fx::basis(fx::vee(), {bit(1) | bit(2), bit(0)}, {"C1", "C3"}),
            fx::basis(fx::diamond(), {bit(1) | bit(2), bit(0), bit(3)}, {"C1", "C1", "C1"}),
            fx::basis(fx::diamond(), {bit(0), bit(1), bit(2), bit(3)}, {"C1", "C2", "C1", "C2"}),
            fx::finest(fx::semilattice(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}})),
        };
        for (const auto& b : cases) {
            auto got = search_orders(*b);
            CHECK(got == oracle_orders(*b));
            for (const auto& down : got)
                CHECK(isg::satisfies_esn_hypotheses(*b, down));
        }
    }

    TEST_CASE("hypothesis checker rejects the bare idempotent order when restrictions are needed")
    {
        auto b = fx::basis(fx::vee(), {bit(1) | bit(2), bit(0)}, {"C1", "C1"});
        CHECK_FALSE(isg::satisfies_esn_hypotheses(*b, b->idempotent_order()));
        CHECK_FALSE(oracle::esn_hypotheses(*b, b->idempotent_order()));
    }
}
