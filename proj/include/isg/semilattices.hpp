#pragma once

#include "isg/order.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace isg {

/// One representative of every isomorphism class of meet-semilattices of
/// order m. Labels follow a linear extension with the minimum at 0, and the
/// output order is deterministic. Throws std::invalid_argument when m < 1.
std::vector<MeetSemilattice> meet_semilattices(int m);

/// Same as meet_semilattices(k) for k = 1..m, index k-1 holding order k.
/// Cheaper than separate calls since every order is built from the previous.
std::vector<std::vector<MeetSemilattice>> meet_semilattices_up_to(int m);

/// Streams meet_semilattices(m) in order.
void for_each_meet_semilattice(int m, const std::function<void(const MeetSemilattice&)>& visit);

std::int64_t count_meet_semilattices(int m);

/// Isomorphism-invariant element colors from iterated refinement of
/// (down-set size, up-set size) by the colors above and below each element.
std::vector<int> refined_colors(const Poset& p);

} // namespace isg
