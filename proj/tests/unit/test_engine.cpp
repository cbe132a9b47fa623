#include "isg/engine.hpp"

#include "fixtures.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

using isg::bit;

namespace {

namespace fs = std::filesystem;

fs::path scratch_dir(const char* name)
{
    auto p = fs::temp_directory_path() / ("isg_unit_" + std::to_string(::getpid()) + "_" + name);
    fs::remove_all(p);
    return p;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

} // namespace

TEST_SUITE("engine")
{
    TEST_CASE("small totals")
    {
        const std::int64_t expected[] = {1, 2, 5, 16, 52, 208};
        for (int n = 1; n <= 6; ++n)
            CHECK(isg::enumerate_counts_only(n).ledger.totals().isgs == expected[n - 1]);
        auto t = isg::enumerate_counts_only(6).ledger.totals();
        CHECK(t.comm_isgs == 201);
        CHECK(t.ims == 89);
        CHECK(t.comm_ims == 87);
    }

    TEST_CASE("full enumeration matches the counts-only shortcut")
    {
        for (int n = 1; n <= 6; ++n) {
            isg::EnumerationConfig c;
            c.order = n;
            c.counts_only = false;
            int seen = 0;
            isg::EnumerationHooks hooks;
            hooks.on_accepted = [&](const isg::InverseSemigroup& s) {
                CHECK(s.size() == n);
                ++seen;
            };
            auto full = isg::enumerate(c, hooks);
            CHECK(full.ledger == isg::enumerate_counts_only(n).ledger);
            CHECK(seen == full.ledger.totals().isgs);
            CHECK(full.stats.accepted == seen);
            CHECK(full.stats.generated >= seen);
        }
    }

    TEST_CASE("breakdown rows")
    {
        auto l5 = isg::enumerate_counts_only(5).ledger;
        auto c = l5.cell(3, {2, 1});
        CHECK(c.isgs == 1);
        CHECK(c.semilattices == 1);
        CHECK(c.comm_isgs == 0);
        CHECK(l5.cell(5, {1, 1, 1, 1, 1}).isgs == 15);
        CHECK(l5.cell(4, {2, 1, 1}).isgs == 0);

        auto l7 = isg::enumerate_counts_only(7).ledger;
        CHECK(l7.cell(7, isg::Shape(7, 1)).isgs == 222);
        CHECK(l7.cell(7, isg::Shape(7, 1)).semilattices == 222);
        CHECK(l7.cell(5, {2, 1, 1, 1}).isgs == 17);
        CHECK(l7.cell(5, {2, 1, 1, 1}).semilattices == 14);

        auto l8 = isg::enumerate_counts_only(8).ledger;
        CHECK(l8.cell(5, {2, 1, 1, 1}).isgs == 70);
        CHECK(l8.cell(5, {2, 1, 1, 1}).semilattices == 14);
        CHECK(l8.cell(6, {2, 1, 1, 1, 1}).isgs == 82);
        CHECK(l8.cell(6, {2, 1, 1, 1, 1}).semilattices == 52);
    }

    TEST_CASE("csv")
    {
        auto csv = isg::enumerate_counts_only(5).ledger.csv(5);
        CHECK(csv ==
              "n,idempotents,shape,isgs,comm_isgs,ims,comm_ims,semilattices,lattices\n"
              "5,1,1,1,1,1,1,1,1\n"
              "5,2,1.1,6,6,6,6,1,1\n"
              "5,3,2.1,1,0,0,0,1,0\n"
              "5,3,1.1.1,13,13,8,8,2,1\n"
              "5,4,1.1.1.1,16,16,7,7,5,2\n"
              "5,5,1.1.1.1.1,15,15,5,5,15,5\n");
    }

    TEST_CASE("ledger merge")
    {
        isg::CountLedger a, b;
        a.add({3, {2, 1}}, isg::CellCounts{1, 0, 0, 0, 1, 0, 0, 0});
        b.add({3, {2, 1}}, isg::CellCounts{2, 0, 1, 0, 1, 0, 1, 0});
        b.add({1, {1}}, isg::CellCounts{1, 1, 1, 1, 1, 1, 1, 1});
        a.merge(b);
        CHECK(a.cell(3, {2, 1}).isgs == 3);
        CHECK(a.cell(3, {2, 1}).semilattices == 2);
        CHECK(a.totals().isgs == 4);
        CHECK(a.cells().begin()->first.idempotents == 1);
    }

    TEST_CASE("fixed data")
    {
        auto brandt = isg::enumerate_fixed(fx::vee(), isg::DPartition{{bit(1) | bit(2), bit(0)}},
                                           {&fx::group("C1"), &fx::group("C1")});
        CHECK(brandt.size() == 1);
        auto chain = isg::enumerate_fixed(fx::chain(2), isg::DPartition{{bit(0), bit(1)}},
                                          {&fx::group("C2"), &fx::group("C1")});
        CHECK(chain.size() == 1);
        auto pair = isg::enumerate_fixed(fx::vee(), isg::DPartition{{bit(1) | bit(2), bit(0)}},
                                         {&fx::group("C1"), &fx::group("C2")});
        CHECK(pair.size() == 2);
        CHECK_THROWS_AS(isg::enumerate_fixed(fx::vee(), isg::DPartition{{bit(0) | bit(1), bit(2)}},
                                             {&fx::group("C1"), &fx::group("C1")}),
                        std::invalid_argument);
    }

    TEST_CASE("table files")
    {
        auto dir = scratch_dir("tables");
        isg::EnumerationConfig c;
        c.order = 4;
        c.counts_only = false;
        c.out_dir = dir.string();
        isg::enumerate(c);
        int files = 0;
        for (const auto& entry : fs::directory_iterator(dir)) {
            ++files;
            CHECK(entry.path().filename().string().rfind("isg_n4_", 0) == 0);
        }
        CHECK(files == 16);
        CHECK(fs::exists(dir / "isg_n4_1.tbl"));
        CHECK(fs::exists(dir / "isg_n4_16.tbl"));
        CHECK(slurp(dir / "isg_n4_1.tbl").rfind("n=4 ", 0) == 0);
        fs::remove_all(dir);
    }

    TEST_CASE("counts-only mode writes no tables")
    {
        auto dir = scratch_dir("none");
        fs::create_directories(dir);
        isg::EnumerationConfig c;
        c.order = 4;
        c.breakdown_csv = (dir / "b.csv").string();
        isg::enumerate(c);
        int files = 0;
        for ([[maybe_unused]] const auto& entry : fs::directory_iterator(dir))
            ++files;
        CHECK(files == 1);
        fs::remove_all(dir);
    }

    TEST_CASE("thread count does not change results")
    {
        for (int n : {5, 7}) {
            auto one = isg::enumerate_counts_only(n, 1);
            auto many = isg::enumerate_counts_only(n, 4);
            CHECK(one.ledger == many.ledger);
            CHECK(one.stats.generated == many.stats.generated);
            CHECK(one.stats.iso_tests == many.stats.iso_tests);
        }
        std::vector<std::string> a, b;
        for (int threads : {1, 3}) {
            isg::EnumerationConfig c;
            c.order = 5;
            c.threads = threads;
            c.counts_only = false;
            isg::EnumerationHooks hooks;
            auto& sink = threads == 1 ? a : b;
            hooks.on_accepted = [&](const isg::InverseSemigroup& s) { sink.push_back(s.cayley_text()); };
            isg::enumerate(c, hooks);
        }
        CHECK(a == b);
    }

    TEST_CASE("invalid configuration")
    {
        isg::EnumerationConfig c;
        c.order = 0;
        CHECK_THROWS_AS(isg::enumerate(c), std::invalid_argument);
        c.order = 16;
        CHECK_THROWS_AS(isg::enumerate(c), std::invalid_argument);
        c.order = 3;
        c.threads = 0;
        CHECK_THROWS_AS(isg::enumerate(c), std::invalid_argument);
    }

    TEST_CASE("unwritable output surfaces the path")
    {
        auto dir = scratch_dir("blocked");
        fs::create_directories(dir);
        std::ofstream(dir / "file") << "x";
        isg::EnumerationConfig c;
        c.order = 3;
        c.counts_only = false;
        c.out_dir = (dir / "file" / "sub").string();
        try {
            isg::enumerate(c);
            FAIL("expected an error");
        } catch (const std::runtime_error& e) {
            CHECK(std::string(e.what()).find("file") != std::string::npos);
        }
        fs::remove_all(dir);
    }
}
