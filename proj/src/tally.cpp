#include "gapcomp/tally.hpp"

namespace gapcomp {

XQSeries tally_gap_partitions(const GapClass& cls, int x_order, int q_order, std::optional<int> max_part)
{
    XQSeries out(x_order, q_order);
    PartitionFilter filter{max_part, std::nullopt};
    for (int n = 0; n <= q_order; ++n)
        for_each_gap_partition(n, cls, filter, [&](std::span<const int> parts) {
            const int len = static_cast<int>(parts.size());
            if (len <= x_order)
                out.layer(len)[n] += 1;
        });
    return out;
}

XQSeries tally_gap_compositions(const GapClass& cls, int x_order, int q_order, std::optional<int> min_first)
{
    XQSeries out(x_order, q_order);
    CompositionFilter filter{min_first, std::nullopt, std::nullopt};
    for (int n = 0; n <= q_order; ++n)
        for_each_gap_composition(n, cls, filter, [&](std::span<const int> parts) {
            const int len = static_cast<int>(parts.size());
            if (len <= x_order)
                out.layer(len)[n] += 1;
        });
    return out;
}

Integer signed_last_part_by_enumeration(int n, int m, const GapClass& cls)
{
    Integer total = 0;
    PartitionFilter filter{m, std::nullopt};
    for_each_gap_partition(n, cls, filter, [&](std::span<const int> parts) {
        if (!parts.empty() && parts.back() == m)
            total += parts.size() % 2 ? 1 : -1;
    });
    return total;
}

} // namespace gapcomp
