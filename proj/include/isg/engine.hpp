#pragma once

#include "isg/iso.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace isg {

struct EnumerationConfig {
    int order = 1;
    int threads = 1;
    /// Skip building the semigroups whose idempotents are all of E and add
    /// the number of semilattices of order n instead.
    bool counts_only = true;
    /// Directory for Cayley table files; empty means none are written.
    std::string out_dir;
    /// Breakdown CSV path; empty means none is written.
    std::string breakdown_csv;
    bool progress = false;
};

/// Tallies for one (number of idempotents, shape) row. Each semilattice
/// count is the number of semilattices contributing at least one semigroup
/// to the matching column.
struct CellCounts {
    std::int64_t isgs = 0;
    std::int64_t comm_isgs = 0;
    std::int64_t ims = 0;
    std::int64_t comm_ims = 0;
    std::int64_t semilattices = 0;
    std::int64_t comm_semilattices = 0;
    std::int64_t lattices = 0;
    std::int64_t comm_lattices = 0;

    CellCounts& operator+=(const CellCounts& o);
    friend bool operator==(const CellCounts&, const CellCounts&) = default;
};

struct CellKey {
    int idempotents = 0;
    Shape shape;

    /// Rows by number of idempotents, then shapes with larger parts first.
    friend bool operator<(const CellKey& a, const CellKey& b)
    {
        if (a.idempotents != b.idempotents)
            return a.idempotents < b.idempotents;
        return a.shape > b.shape;
    }
    friend bool operator==(const CellKey&, const CellKey&) = default;
};

class CountLedger {
public:
    void add(const CellKey& key, const CellCounts& counts);
    void merge(const CountLedger& other);

    const std::map<CellKey, CellCounts>& cells() const { return cells_; }
    /// Counts for one row; zero when the row is absent.
    CellCounts cell(int idempotents, const Shape& shape) const;
    CellCounts totals() const;

    /// Columns n,idempotents,shape,isgs,comm_isgs,ims,comm_ims,semilattices,lattices.
    std::string csv(int n) const;

    friend bool operator==(const CountLedger&, const CountLedger&) = default;

private:
    std::map<CellKey, CellCounts> cells_;
};

struct EnumerationStats {
    std::int64_t generated = 0;
    /// Generated semigroups whose invariant bucket was empty on arrival.
    std::int64_t accepted_immediately = 0;
    std::int64_t iso_tests = 0;
    std::int64_t accepted = 0;
};

struct EnumerationResult {
    CountLedger ledger;
    EnumerationStats stats;
};

struct EnumerationHooks {
    /// Every accepted semigroup, called from the calling thread in output order.
    std::function<void(const InverseSemigroup&)> on_accepted;
    /// Every semigroup produced before isomorphism rejection. Called from
    /// worker threads.
    std::function<void(const InverseSemigroup&)> on_generated;
    /// Every pairwise test made by the rejection step, with its outcome.
    /// Called from worker threads.
    std::function<void(const InverseSemigroup&, const InverseSemigroup&, bool)> on_iso_test;
};

/// Enumerates the inverse semigroups of order config.order up to
/// isomorphism. Work is split by semilattice across config.threads workers;
/// results are merged in semilattice order, so outputs do not depend on the
/// thread count. Throws std::invalid_argument for orders outside [1, 15] or
/// a thread count below 1, and std::runtime_error on I/O failures.
EnumerationResult enumerate(const EnumerationConfig& config, const EnumerationHooks& hooks = {});

EnumerationResult enumerate_counts_only(int n, int threads = 1);

/// Semigroups with the given semilattice, D-restriction and maximal
/// subgroups, one per isomorphism class among those sharing this data.
/// Throws std::invalid_argument if P is not a D-partition of E or the group
/// orders are unusable.
std::vector<InverseSemigroup> enumerate_fixed(std::shared_ptr<const MeetSemilattice> e, const DPartition& p,
                                              const GroupAssignment& groups);

/// Writes each semigroup to dir/isg_n<order>_<k>.tbl with k counting from
/// `first`. Throws std::runtime_error with the path on failure.
void write_cayley_files(const std::string& dir, const std::vector<InverseSemigroup>& items, int first = 1);

} // namespace isg
