#pragma once

#include "isg/gposets.hpp"

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

namespace isg {

/// Finite inverse semigroup built from a basis and an admissible order on it.
/// Element indices are those of the basis, so elements 0..|E|-1 are the
/// idempotents and carry the semilattice labels.
class InverseSemigroup {
public:
    InverseSemigroup(std::shared_ptr<const NaturalBasis> basis, BasisOrder order, std::vector<std::uint8_t> table);

    int size() const { return basis_->size(); }
    int idempotent_count() const { return basis_->idempotent_count(); }
    int mul(int s, int t) const { return table_[s * size() + t]; }
    int inv(int s) const { return basis_->inverse(s); }
    int dom(int s) const { return basis_->dom(s); }
    int ran(int s) const { return basis_->ran(s); }

    const std::vector<std::uint8_t>& table() const { return table_; }
    const NaturalBasis& basis() const { return *basis_; }
    const std::shared_ptr<const NaturalBasis>& basis_ptr() const { return basis_; }
    const MeetSemilattice& semilattice() const { return basis_->semilattice(); }
    const DPartition& d_partition() const { return basis_->partition(); }
    /// Natural partial order, equal to the basis order it was built from.
    const BasisOrder& order() const { return order_; }

    /// Catalog group of the maximal subgroups in the D-class of block b.
    const Group& block_group(int b) const { return *basis_->block(b).group; }
    /// Number of idempotents in the D-class of idempotent e.
    int d_class_size(int e) const;

    bool is_commutative() const;
    bool is_monoid() const;

    /// Text form: `n=<size> e=<#idempotents>`, then one row of products per
    /// element.
    std::string cayley_text() const;

private:
    std::shared_ptr<const NaturalBasis> basis_;
    BasisOrder order_;
    std::vector<std::uint8_t> table_;
};

/// Product of s and t in the semigroup given by the order: restrict s and
/// corestrict t to the meet of dom(s) and ran(t), then compose. Throws
/// std::logic_error when the order lacks the needed restriction.
int esn_multiply(const NaturalBasis& basis, const BasisOrder& order, int s, int t);

InverseSemigroup esn(std::shared_ptr<const NaturalBasis> basis, const BasisOrder& order);

/// Full check that a table (row-major, size*size entries) is an inverse
/// semigroup: associative, every element has exactly one inverse, and
/// idempotents commute.
bool validate_inverse_semigroup(int size, const std::vector<int>& table);

/// Unique inverse of every element of an inverse semigroup table.
std::vector<int> table_inverses(int size, const std::vector<int>& table);

/// s <= t iff s = t s^-1 s, as down-set rows.
std::vector<Mask> natural_order_from_table(int size, const std::vector<int>& table);

/// Classes of Green's D restricted to the idempotents, each as a mask of
/// element indices, ordered by least element.
std::vector<Mask> d_restriction_from_table(int size, const std::vector<int>& table);

std::vector<int> widen(const std::vector<std::uint8_t>& table);

} // namespace isg
