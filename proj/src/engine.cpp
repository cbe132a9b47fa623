#include "isg/engine.hpp"

#include "isg/semilattices.hpp"

#include <atomic>
#include <condition_variable>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace isg {

CellCounts& CellCounts::operator+=(const CellCounts& o)
{
    isgs += o.isgs;
    comm_isgs += o.comm_isgs;
    ims += o.ims;
    comm_ims += o.comm_ims;
    semilattices += o.semilattices;
    comm_semilattices += o.comm_semilattices;
    lattices += o.lattices;
    comm_lattices += o.comm_lattices;
    return *this;
}

void CountLedger::add(const CellKey& key, const CellCounts& counts)
{
    cells_[key] += counts;
}

void CountLedger::merge(const CountLedger& other)
{
    for (const auto& [k, v] : other.cells_)
        add(k, v);
}

CellCounts CountLedger::cell(int idempotents, const Shape& shape) const
{
    auto it = cells_.find(CellKey{idempotents, shape});
    return it == cells_.end() ? CellCounts{} : it->second;
}

CellCounts CountLedger::totals() const
{
    CellCounts t;
    for (const auto& [k, v] : cells_)
        t += v;
    return t;
}

std::string CountLedger::csv(int n) const
{
    std::ostringstream out;
    out << "n,idempotents,shape,isgs,comm_isgs,ims,comm_ims,semilattices,lattices\n";
    for (const auto& [k, v] : cells_) {
        if (v.isgs == 0)
            continue;
        out << n << ',' << k.idempotents << ',' << shape_string(k.shape) << ',' << v.isgs << ','
            << v.comm_isgs << ',' << v.ims << ',' << v.comm_ims << ',' << v.semilattices << ','
            << v.lattices << '\n';
    }
    return out.str();
}

namespace {

struct ShapePlan {
    Shape shape;
    std::vector<Composition> compositions;
};

struct ShapeResult {
    Shape shape;
    CellCounts counts;
    std::vector<InverseSemigroup> kept;
};

struct TaskResult {
    int m = 0;
    std::vector<ShapeResult> shapes;
    EnumerationStats stats;
};

std::vector<ShapePlan> plan_for(int n, int m)
{
    std::vector<ShapePlan> out;
    for (auto& shape : partitions(m)) {
        auto comps = admissible_compositions(n, shape);
        if (!comps.empty())
            out.push_back(ShapePlan{std::move(shape), std::move(comps)});
    }
    return out;
}

void tally(CellCounts& c, const InverseSemigroup& s)
{
    bool comm = s.is_commutative();
    bool mono = s.is_monoid();
    c.isgs += 1;
    c.comm_isgs += comm;
    c.ims += mono;
    c.comm_ims += comm && mono;
}

void mark_contributors(CellCounts& c)
{
    c.semilattices = c.isgs > 0;
    c.comm_semilattices = c.comm_isgs > 0;
    c.lattices = c.ims > 0;
    c.comm_lattices = c.comm_ims > 0;
}

// Runs every semigroup with one semilattice E through invariant bucketing
// and pairwise rejection, with a fresh store per shape.
TaskResult process_semilattice(const std::shared_ptr<const MeetSemilattice>& e,
                               const std::vector<ShapePlan>& plan, std::span<const Group* const> groups,
                               bool keep, const EnumerationHooks& hooks)
{
    TaskResult r;
    r.m = e->size();
    for (const ShapePlan& sp : plan) {
        auto dparts = d_partitions(*e, sp.shape);
        if (dparts.empty())
            continue;
        IsgStore store;
        ShapeResult sr{sp.shape, {}, {}};
        for (const Composition& c : sp.compositions) {
            for (const DPartition& p : dparts) {
                for (const GroupAssignment& f : group_maps(p, c, groups)) {
                    auto basis = std::make_shared<const NaturalBasis>(e, p, f);
                    GPosetSearch search(*basis);
                    search.for_each_leaf([&](const BasisOrder& order) {
                        InverseSemigroup s = esn(basis, order);
                        ++r.stats.generated;
                        if (hooks.on_generated)
                            hooks.on_generated(s);
                        InvariantKey key = invariants(s);
                        const auto& bucket = store.bucket(key);
                        bool fresh = true;
                        if (bucket.empty()) {
                            ++r.stats.accepted_immediately;
                        } else {
                            for (int idx : bucket) {
                                ++r.stats.iso_tests;
                                bool iso = is_isoc_unchecked(s, store.items()[idx]);
                                if (hooks.on_iso_test)
                                    hooks.on_iso_test(s, store.items()[idx], iso);
                                if (iso) {
                                    fresh = false;
                                    break;
                                }
                            }
                        }
                        if (fresh) {
                            tally(sr.counts, s);
                            ++r.stats.accepted;
                            store.add(std::move(s), std::move(key));
                        }
                        return true;
                    });
                }
            }
        }
        if (sr.counts.isgs == 0)
            continue;
        mark_contributors(sr.counts);
        if (keep)
            sr.kept = store.items();
        r.shapes.push_back(std::move(sr));
    }
    return r;
}

void write_text(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << text;
    if (!out.flush())
        throw std::runtime_error("failed writing " + path.string());
}

} // namespace

void write_cayley_files(const std::string& dir, const std::vector<InverseSemigroup>& items, int first)
{
    for (std::size_t i = 0; i < items.size(); ++i) {
        const auto& s = items[i];
        auto path = std::filesystem::path(dir) /
                    ("isg_n" + std::to_string(s.size()) + "_" + std::to_string(first + static_cast<int>(i)) + ".tbl");
        write_text(path, s.cayley_text());
    }
}

EnumerationResult enumerate(const EnumerationConfig& config, const EnumerationHooks& hooks)
{
    int n = config.order;
    if (n < 1 || n > GroupCatalog::kMaxOrder)
        throw std::invalid_argument("order must be in [1, 15], got " + std::to_string(n));
    if (config.threads < 1)
        throw std::invalid_argument("thread count must be at least 1");

    if (!config.out_dir.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(config.out_dir, ec);
        if (ec)
            throw std::runtime_error("cannot create directory " + config.out_dir + ": " + ec.message());
    }

    auto groups = catalog(n);
    auto levels = meet_semilattices_up_to(n);
    int last_m = config.counts_only ? n - 1 : n;

    std::vector<std::vector<ShapePlan>> plans(n + 1);
    for (int m = 1; m <= last_m; ++m)
        plans[m] = plan_for(n, m);

    std::vector<std::shared_ptr<const MeetSemilattice>> tasks;
    for (int m = 1; m <= last_m; ++m)
        for (auto& e : levels[m - 1])
            tasks.push_back(std::make_shared<const MeetSemilattice>(e));

    bool keep = !config.out_dir.empty() || static_cast<bool>(hooks.on_accepted);
    std::vector<std::optional<TaskResult>> results(tasks.size());
    std::vector<std::exception_ptr> errors(tasks.size());
    std::vector<bool> done(tasks.size(), false);
    std::mutex mu;
    std::condition_variable cv;
    std::atomic<std::size_t> next{0};
    std::atomic<bool> abort{false};

    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size() || abort)
                return;
            std::optional<TaskResult> res;
            std::exception_ptr err;
            try {
                res = process_semilattice(tasks[i], plans[tasks[i]->size()], groups, keep, hooks);
            } catch (...) {
                err = std::current_exception();
            }
            {
                std::lock_guard lock(mu);
                results[i] = std::move(res);
                errors[i] = err;
                done[i] = true;
            }
            cv.notify_all();
        }
    };

    int workers = std::min<int>(config.threads, std::max<std::size_t>(tasks.size(), 1));
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t)
        pool.emplace_back(worker);

    EnumerationResult out;
    int sequence = 1;
    std::exception_ptr failure;
    try {
        std::size_t per_m_done = 0;
        int current_m = 0;
        for (std::size_t i = 0; i < tasks.size(); ++i) {
            std::optional<TaskResult> res;
            {
                std::unique_lock lock(mu);
                cv.wait(lock, [&] { return done[i]; });
                if (errors[i])
                    std::rethrow_exception(errors[i]);
                res = std::move(results[i]);
                results[i].reset();
            }
            out.stats.generated += res->stats.generated;
            out.stats.accepted_immediately += res->stats.accepted_immediately;
            out.stats.iso_tests += res->stats.iso_tests;
            out.stats.accepted += res->stats.accepted;
            for (auto& sr : res->shapes) {
                out.ledger.add(CellKey{res->m, sr.shape}, sr.counts);
                if (hooks.on_accepted)
                    for (const auto& s : sr.kept)
                        hooks.on_accepted(s);
                if (!config.out_dir.empty()) {
                    write_cayley_files(config.out_dir, sr.kept, sequence);
                    sequence += static_cast<int>(sr.kept.size());
                }
            }
            if (config.progress) {
                if (res->m != current_m) {
                    current_m = res->m;
                    per_m_done = 0;
                }
                ++per_m_done;
                std::size_t total = levels[current_m - 1].size();
                if (per_m_done == total || per_m_done % 100 == 0)
                    std::cerr << "order " << n << ": semilattices of order " << current_m << ": "
                              << per_m_done << "/" << total << '\n';
            }
        }
    } catch (...) {
        failure = std::current_exception();
        abort = true;
    }
    for (auto& t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);

    if (config.counts_only) {
        // Semigroups whose idempotents are all of E are E itself.
        CellCounts c;
        for (const auto& e : levels[n - 1]) {
            bool lattice = has_maximum(e);
            c.isgs += 1;
            c.comm_isgs += 1;
            c.ims += lattice;
            c.comm_ims += lattice;
        }
        c.semilattices = c.comm_semilattices = c.isgs;
        c.lattices = c.comm_lattices = c.ims;
        out.ledger.add(CellKey{n, Shape(n, 1)}, c);
        out.stats.accepted += c.isgs;
    }

    if (!config.breakdown_csv.empty())
        write_text(config.breakdown_csv, out.ledger.csv(n));
    return out;
}

EnumerationResult enumerate_counts_only(int n, int threads)
{
    EnumerationConfig config;
    config.order = n;
    config.threads = threads;
    config.counts_only = true;
    return enumerate(config);
}

std::vector<InverseSemigroup> enumerate_fixed(std::shared_ptr<const MeetSemilattice> e, const DPartition& p,
                                              const GroupAssignment& groups)
{
    if (!e)
        throw std::invalid_argument("enumerate_fixed: missing semilattice");
    if (!is_d_partition(*e, p.blocks))
        throw std::invalid_argument("enumerate_fixed: the partition is not a D-partition of the semilattice");
    auto basis = std::make_shared<const NaturalBasis>(std::move(e), p, groups);
    IsgStore store;
    GPosetSearch(*basis).for_each_leaf([&](const BasisOrder& order) {
        InverseSemigroup s = esn(basis, order);
        InvariantKey key = invariants(s);
        if (is_new(s, key, store))
            store.add(std::move(s), std::move(key));
        return true;
    });
    return store.items();
}

} // namespace isg
