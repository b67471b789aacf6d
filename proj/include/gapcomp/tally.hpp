#ifndef GAPCOMP_TALLY_HPP
#define GAPCOMP_TALLY_HPP

// Generating functions and counts obtained by listing objects one by one.
// These are the ground truth the closed forms are compared against.

#include "gapcomp/enumerate.hpp"
#include "gapcomp/integer.hpp"
#include "gapcomp/qseries.hpp"

#include <optional>

namespace gapcomp {

/// sum of x^length q^size over gap partitions of size <= q_order, optionally with largest part <= max_part.
XQSeries tally_gap_partitions(const GapClass& cls, int x_order, int q_order, std::optional<int> max_part = {});

/// sum of x^length q^size over gap compositions of size <= q_order, optionally with first part >= min_first.
XQSeries tally_gap_compositions(const GapClass& cls, int x_order, int q_order, std::optional<int> min_first = {});

/// sum of (-1)^(length+1) over gap partitions of n whose largest part is m.
Integer signed_last_part_by_enumeration(int n, int m, const GapClass& cls);

} // namespace gapcomp

#endif // GAPCOMP_TALLY_HPP
