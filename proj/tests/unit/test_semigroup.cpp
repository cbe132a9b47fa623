#include "isg/semigroup.hpp"
#include "isg/semilattices.hpp"

#include "fixtures.hpp"

#include <doctest.h>

using isg::bit;

TEST_SUITE("semigroup")
{
    TEST_CASE("single block is the group")
    {
        auto b = fx::basis(fx::chain(1), {bit(0)}, {"C2"});
        auto s = fx::all_semigroups(b).at(0);
        CHECK(s.size() == 2);
        CHECK(s.mul(1, 1) == 0);
        CHECK(s.mul(0, 1) == 1);
        CHECK(s.is_commutative());
        CHECK(s.is_monoid());
    }

    TEST_CASE("finest partition gives the semilattice itself")
    {
        for (const auto& e : isg::meet_semilattices(5)) {
            auto ep = std::make_shared<const isg::MeetSemilattice>(e);
            auto all = fx::all_semigroups(fx::finest(ep));
            REQUIRE(all.size() == 1);
            for (int x = 0; x < 5; ++x)
                for (int y = 0; y < 5; ++y)
                    CHECK(all[0].mul(x, y) == e.meet(x, y));
            CHECK(all[0].is_commutative());
            CHECK(all[0].is_monoid() == isg::has_maximum(e));
        }
    }

    TEST_CASE("Brandt semigroup")
    {
        auto s = fx::brandt();
        const auto& b = s.basis();
        int e12 = b.index(0, 1, 2, 0), e21 = b.index(0, 2, 1, 0);
        CHECK(s.size() == 5);
        CHECK(s.mul(e12, e21) == 1);
        CHECK(s.mul(e21, e12) == 2);
        CHECK(s.mul(e12, 0) == 0);
        CHECK(s.mul(e12, e12) == 0);
        CHECK_FALSE(s.is_commutative());
        CHECK_FALSE(s.is_monoid());
        CHECK(isg::validate_inverse_semigroup(5, isg::widen(s.table())));
        CHECK(s.d_class_size(1) == 2);
        CHECK(s.d_class_size(0) == 1);
        auto d = isg::d_restriction_from_table(5, isg::widen(s.table()));
        CHECK(d == std::vector<isg::Mask>{bit(0), bit(1) | bit(2)});
    }

    TEST_CASE("C2 with an identity adjoined")
    {
        auto s = fx::c2_with_identity();
        const auto& b = s.basis();
        int a = b.index(0, 0, 0, 1);
        CHECK(s.mul(1, a) == a);
        CHECK(s.mul(a, 1) == a);
        CHECK(s.mul(a, a) == 0);
        CHECK(s.is_commutative());
        CHECK(s.is_monoid());
        CHECK(isg::esn_multiply(b, s.order(), 1, a) == a);
    }

    TEST_CASE("one-element semigroup is a monoid")
    {
        CHECK(fx::all_semigroups(fx::finest(fx::chain(1))).at(0).is_monoid());
    }

    TEST_CASE("validation counterexamples")
    {
        // (0*0)*1 = 0 but 0*(0*1) = 1.
        CHECK_FALSE(oracle::is_associative(2, {1, 0, 0, 0}));
        CHECK_FALSE(isg::validate_inverse_semigroup(2, {1, 0, 0, 0}));
        // Left-zero band on two elements: regular, idempotents do not commute.
        std::vector<int> left_zero{0, 0, 1, 1};
        CHECK(oracle::is_associative(2, left_zero));
        CHECK_FALSE(isg::validate_inverse_semigroup(2, left_zero));
        // 2x2 rectangular band.
        std::vector<int> rect{0, 1, 0, 1, 0, 1, 0, 1, 2, 3, 2, 3, 2, 3, 2, 3};
        CHECK_FALSE(isg::validate_inverse_semigroup(4, rect));
        // Wrong size.
        CHECK_FALSE(isg::validate_inverse_semigroup(2, {0, 0, 0}));
    }

    TEST_CASE("products equal the expanded sums")
    {
        std::vector<std::shared_ptr<const isg::NaturalBasis>> cases{
            fx::basis(fx::vee(), {bit(1) | bit(2), bit(0)}, {"C1", "C2"}),
            fx::basis(fx::diamond(), {bit(1) | bit(2), bit(0), bit(3)}, {"C1", "C1", "C2"}),
            fx::basis(fx::chain(3), {bit(0), bit(1), bit(2)}, {"C2", "C2", "C1"}),
            fx::basis(fx::chain(2), {bit(0), bit(1)}, {"S3", "C2"}),
        };
        int checked = 0;
        for (const auto& b : cases)
            for (const auto& order : isg::g_posets(*b)) {
                auto s = isg::esn(b, order);
                CHECK(isg::validate_inverse_semigroup(s.size(), isg::widen(s.table())));
                CHECK(isg::natural_order_from_table(s.size(), isg::widen(s.table())) == order.down);
                for (int x = 0; x < s.size(); ++x)
                    for (int y = 0; y < s.size(); ++y) {
                        CHECK(s.mul(x, y) == oracle::expanded_product(*b, order.down, x, y));
                        ++checked;
                    }
            }
        CHECK(checked > 0);
    }

    TEST_CASE("table helpers")
    {
        auto s = fx::brandt();
        auto t = isg::widen(s.table());
        auto inv = isg::table_inverses(5, t);
        for (int x = 0; x < 5; ++x)
            CHECK(inv[x] == s.inv(x));
    }

    TEST_CASE("cayley text")
    {
        auto s = fx::c2_with_identity();
        CHECK(s.cayley_text().rfind("n=3 e=2\n", 0) == 0);
    }

    TEST_CASE("missing restriction is a logic error")
    {
        auto b = fx::basis(fx::vee(), {bit(1) | bit(2), bit(0)}, {"C1", "C1"});
        isg::BasisOrder bare{b->idempotent_order()};
        int e12 = b->index(0, 1, 2, 0);
        CHECK_THROWS_AS(isg::esn_multiply(*b, bare, e12, 0), std::logic_error);
    }
}
