#pragma once

#include "isg/bits.hpp"

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace isg {

/// Partial order on at most 64 elements, stored as down-set and up-set bit
/// rows. Both rows include the element itself.
class Poset {
public:
    Poset() = default;

    /// `down[x]` must contain x and define a partial order. Throws
    /// std::invalid_argument otherwise.
    static Poset from_down_sets(std::vector<Mask> down);

    /// Transitive closure of the given (lower, upper) pairs. Throws
    /// std::invalid_argument on cycles or out-of-range elements.
    static Poset from_relations(int size, const std::vector<std::pair<int, int>>& less);

    int size() const { return static_cast<int>(down_.size()); }
    bool leq(int a, int b) const { return has(down_[b], a); }
    Mask down(int x) const { return down_[x]; }
    Mask up(int x) const { return up_[x]; }
    const std::vector<Mask>& down_sets() const { return down_; }

    /// Elements of `within` with nothing above them inside `within`.
    Mask maximal(Mask within) const;
    Mask minimal(Mask within) const;

    /// Transitive reduction, sorted by (lower, upper).
    std::vector<std::pair<int, int>> covers() const;

    friend bool operator==(const Poset& a, const Poset& b) { return a.down_ == b.down_; }

private:
    std::vector<Mask> down_;
    std::vector<Mask> up_;
};

class MeetSemilattice {
public:
    MeetSemilattice() = default;

    /// Throws std::invalid_argument if some pair lacks a greatest lower bound.
    explicit MeetSemilattice(Poset poset);

    int size() const { return poset_.size(); }
    const Poset& poset() const { return poset_; }
    bool leq(int a, int b) const { return poset_.leq(a, b); }
    int meet(int a, int b) const { return meet_[a * size() + b]; }
    int bottom() const { return bottom_; }

private:
    Poset poset_;
    std::vector<std::uint8_t> meet_;
    int bottom_ = 0;
};

/// L_1 is the set of maximal elements; each later level is the maximal
/// elements of what remains.
std::vector<Mask> down_levels(const Poset& p);
/// Same peeling from the minimal elements.
std::vector<Mask> up_levels(const Poset& p);
/// Nonempty intersections of a down-level with an up-level, ordered by their
/// least element.
std::vector<Mask> up_down_levels(const Poset& p);
/// Index of the down-level containing each element.
std::vector<int> level_index(const std::vector<Mask>& levels, int size);

bool has_maximum(const MeetSemilattice& e);

struct ColoredPoset {
    Poset poset;
    std::vector<int> color;
};

/// Calls `visit` with every color-preserving order isomorphism A -> B, given
/// as the image of each element of A. Stops early when `visit` returns false.
void colored_isomorphisms(const ColoredPoset& a, const ColoredPoset& b,
                          const std::function<bool(const std::vector<int>&)>& visit);

std::vector<std::vector<int>> all_colored_isomorphisms(const ColoredPoset& a, const ColoredPoset& b);

/// Cover-relation text form `m:u1<v1,u2<v2,...`.
std::string to_cover_line(const Poset& p);
/// Parses a cover line into a meet-semilattice. Throws std::invalid_argument
/// on malformed text or when the order is not a meet-semilattice.
MeetSemilattice parse_cover_line(std::string_view line);

} // namespace isg
