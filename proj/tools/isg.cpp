// Command-line front end: counts, full enumeration with Cayley tables,
// fixed-data enumeration and semilattice listing.

#include "isg/engine.hpp"
#include "isg/semilattices.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <stdexcept>
#include <string>

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitIo = 3;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int parse_label(const std::string& text)
{
    int v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
        throw std::invalid_argument("not an element label: '" + text + "'");
    return v;
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos - start));
        if (pos == std::string::npos)
            return out;
        start = pos + 1;
    }
}

std::string read_line(const std::string& where)
{
    auto colon = where.rfind(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("--semilattice expects FILE:LINE, got '" + where + "'");
    std::string path = where.substr(0, colon);
    int wanted = parse_label(where.substr(colon + 1));
    if (wanted < 1)
        throw std::invalid_argument("line numbers start at 1");
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open " + path);
    std::string line;
    for (int i = 1; std::getline(in, line); ++i)
        if (i == wanted)
            return line;
    throw std::invalid_argument(path + " has no line " + std::to_string(wanted));
}

void print_ledger(const isg::EnumerationResult& r)
{
    std::printf("%-12s %-14s %16s %16s %16s %16s\n", "idempotents", "shape", "ISGs//sl", "Comm//sl",
                "IMs//lat", "CommIMs//lat");
    auto cell = [](std::int64_t x, std::int64_t y) {
        return x == 0 ? std::string("-") : std::to_string(x) + "//" + std::to_string(y);
    };
    for (const auto& [k, v] : r.ledger.cells()) {
        std::printf("%-12d %-14s %16s %16s %16s %16s\n", k.idempotents, isg::shape_string(k.shape).c_str(),
                    cell(v.isgs, v.semilattices).c_str(), cell(v.comm_isgs, v.comm_semilattices).c_str(),
                    cell(v.ims, v.lattices).c_str(), cell(v.comm_ims, v.comm_lattices).c_str());
    }
    auto t = r.ledger.totals();
    std::printf("totals: isgs=%lld commutative=%lld monoids=%lld commutative_monoids=%lld\n",
                static_cast<long long>(t.isgs), static_cast<long long>(t.comm_isgs),
                static_cast<long long>(t.ims), static_cast<long long>(t.comm_ims));
    const auto& s = r.stats;
    double pct = s.generated ? 100.0 * static_cast<double>(s.accepted_immediately) / static_cast<double>(s.generated) : 0.0;
    std::printf("generated=%lld accepted_immediately=%lld (%.1f%%) isomorphism_tests=%lld\n",
                static_cast<long long>(s.generated), static_cast<long long>(s.accepted_immediately), pct,
                static_cast<long long>(s.iso_tests));
}

int run(int argc, char** argv)
{
    CLI::App app{"Enumerate finite inverse semigroups up to isomorphism"};
    app.require_subcommand(1);

    isg::EnumerationConfig count_cfg;
    auto* count = app.add_subcommand("count", "Count inverse semigroups of one order");
    count->add_option("--order", count_cfg.order, "Semigroup order")->required()->check(CLI::Range(1, 15));
    count->add_option("--threads", count_cfg.threads, "Worker threads")->check(CLI::Range(1, 1024));
    count->add_option("--breakdown", count_cfg.breakdown_csv, "Write the per-row breakdown CSV here");
    count->add_flag("--progress", count_cfg.progress, "Report progress on stderr");

    isg::EnumerationConfig enum_cfg;
    enum_cfg.counts_only = false;
    auto* enumerate = app.add_subcommand("enumerate", "Write one Cayley table per isomorphism class");
    enumerate->add_option("--order", enum_cfg.order, "Semigroup order")->required()->check(CLI::Range(1, 15));
    enumerate->add_option("--out", enum_cfg.out_dir, "Output directory")->required();
    enumerate->add_option("--threads", enum_cfg.threads, "Worker threads")->check(CLI::Range(1, 1024));
    enumerate->add_flag("--progress", enum_cfg.progress, "Report progress on stderr");

    std::string semilattice_arg, dpartition_arg, groups_arg, fixed_out;
    auto* fixed = app.add_subcommand("fixed", "Semigroups with a given semilattice, D-restriction and groups");
    fixed->add_option("--semilattice", semilattice_arg, "FILE:LINE of a cover-relation line (lines from 1)")->required();
    fixed->add_option("--dpartition", dpartition_arg, "Blocks of labels, e.g. \"1,2|0\"")->required();
    fixed->add_option("--groups", groups_arg, "Group name per block, e.g. \"C1,C2\"")->required();
    fixed->add_option("--out", fixed_out, "Output directory")->required();

    int sl_order = 1;
    std::string sl_out;
    auto* lists = app.add_subcommand("semilattices", "List meet-semilattices of one order");
    lists->add_option("--order", sl_order, "Number of elements")->required()->check(CLI::Range(1, 12));
    lists->add_option("--out", sl_out, "Output file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalid;
    }

    if (count->parsed()) {
        auto r = isg::enumerate(count_cfg);
        print_ledger(r);
    } else if (enumerate->parsed()) {
        enum_cfg.breakdown_csv = (std::filesystem::path(enum_cfg.out_dir) / "breakdown.csv").string();
        auto r = isg::enumerate(enum_cfg);
        print_ledger(r);
    } else if (fixed->parsed()) {
        auto e = std::make_shared<const isg::MeetSemilattice>(isg::parse_cover_line(read_line(semilattice_arg)));
        std::vector<isg::Mask> blocks;
        for (const auto& part : split(dpartition_arg, '|')) {
            isg::Mask b = 0;
            for (const auto& label : split(part, ',')) {
                int x = parse_label(label);
                if (x < 0 || x >= e->size())
                    throw std::invalid_argument("label " + label + " is outside the semilattice");
                if (isg::has(b, x))
                    throw std::invalid_argument("label " + label + " repeated in a block");
                b |= isg::bit(x);
            }
            blocks.push_back(b);
        }
        auto names = split(groups_arg, ',');
        if (names.size() != blocks.size())
            throw std::invalid_argument("need one group per block");
        isg::GroupAssignment groups;
        for (const auto& name : names)
            groups.push_back(&isg::GroupCatalog::standard().by_name(name));

        // Store blocks by size, then least label, keeping each group with its block.
        std::vector<std::size_t> idx(blocks.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            if (isg::popcount(blocks[a]) != isg::popcount(blocks[b]))
                return isg::popcount(blocks[a]) > isg::popcount(blocks[b]);
            return isg::lowest(blocks[a]) < isg::lowest(blocks[b]);
        });
        isg::DPartition p;
        isg::GroupAssignment ordered;
        for (auto i : idx) {
            p.blocks.push_back(blocks[i]);
            ordered.push_back(groups[i]);
        }
        auto found = isg::enumerate_fixed(e, p, ordered);
        std::error_code ec;
        std::filesystem::create_directories(fixed_out, ec);
        if (ec)
            throw IoError("cannot create directory " + fixed_out + ": " + ec.message());
        isg::write_cayley_files(fixed_out, found);
        std::printf("%zu inverse semigroups\n", found.size());
    } else if (lists->parsed()) {
        auto all = isg::meet_semilattices(sl_order);
        std::ofstream out(sl_out);
        if (!out)
            throw IoError("cannot open " + sl_out + " for writing");
        for (const auto& e : all)
            out << isg::to_cover_line(e.poset()) << '\n';
        if (!out.flush())
            throw IoError("failed writing " + sl_out);
        std::printf("%zu semilattices\n", all.size());
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    try {
        return run(argc, argv);
    } catch (const std::invalid_argument& e) {
        std::cerr << "isg: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const IoError& e) {
        std::cerr << "isg: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::runtime_error& e) {
        // The library reports I/O failures as runtime_error.
        std::cerr << "isg: " << e.what() << '\n';
        return kExitIo;
    }
}
