#ifndef GAPCOMP_TESTS_ORACLES_HPP
#define GAPCOMP_TESTS_ORACLES_HPP

// Slow, direct reference computations used only by the tests. Nothing here
// calls into the library's series, DP or enumerator code.

#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

using Poly = std::vector<std::int64_t>;

inline Poly poly_mul(const Poly& a, const Poly& b)
{
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

/// prod_{k=1..n} (1 - q^k), fully expanded.
inline Poly pochhammer_expanded(int n)
{
    Poly out{1};
    for (int k = 1; k <= n; ++k) {
        Poly factor(k + 1, 0);
        factor[0] = 1;
        factor[k] = -1;
        out = poly_mul(out, factor);
    }
    return out;
}

/// Partitions with at most `parts` parts, each at most `width`, counted by size.
/// This is the box-counting description of the Gaussian binomial [parts+width, parts].
inline Poly box_partitions(int parts, int width)
{
    Poly out(static_cast<std::size_t>(parts) * width + 1, 0);
    std::function<void(int, int, int)> rec = [&](int left, int max_part, int size) {
        ++out[size];
        if (left == 0)
            return;
        for (int p = 1; p <= max_part; ++p)
            rec(left - 1, p, size + p);
    };
    rec(parts, width, 0);
    return out;
}

/// Every composition of n, by reading the n-1 "cut" bits of a mask.
inline void all_compositions(int n, const std::function<void(const std::vector<int>&)>& visit)
{
    if (n == 0) {
        visit({});
        return;
    }
    const std::uint32_t masks = 1u << (n - 1);
    std::vector<int> parts;
    for (std::uint32_t mask = 0; mask < masks; ++mask) {
        parts.clear();
        int run = 1;
        for (int bit = 0; bit < n - 1; ++bit) {
            if (mask & (1u << bit)) {
                parts.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        parts.push_back(run);
        visit(parts);
    }
}

/// Every nondecreasing sequence of positive integers summing to n.
inline void all_partitions(int n, const std::function<void(const std::vector<int>&)>& visit)
{
    std::vector<int> parts;
    std::function<void(int, int)> rec = [&](int left, int lo) {
        if (left == 0) {
            visit(parts);
            return;
        }
        for (int p = lo; p <= left; ++p) {
            parts.push_back(p);
            rec(left - p, p);
            parts.pop_back();
        }
    };
    rec(n, 1);
}

inline bool gap_partition_ok(const std::vector<int>& p, int g, int s)
{
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < s)
            return false;
        if (i > 0 && p[i] - p[i - 1] < g)
            return false;
    }
    return true;
}

inline bool gap_composition_ok(const std::vector<int>& c, int g, int s)
{
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] < s)
            return false;
        if (i > 0 && c[i] - c[i - 1] < 1 - g)
            return false;
    }
    return true;
}

inline bool m_step_ok(const std::vector<int>& c, int m)
{
    long prefix = 0;
    for (int p : c) {
        if (p > m + prefix)
            return false;
        prefix += p;
    }
    return true;
}

inline std::int64_t binomial(int a, int b)
{
    if (b < 0 || b > a)
        return 0;
    std::int64_t r = 1;
    for (int i = 1; i <= b; ++i)
        r = r * (a - b + i) / i;
    return r;
}

/// Pairs (distinct-part partition, unrestricted partition) with total size k.
inline std::int64_t overpartitions(int k)
{
    std::int64_t total = 0;
    for (int a = 0; a <= k; ++a) {
        std::int64_t distinct = 0, plain = 0;
        all_partitions(a, [&](const std::vector<int>& p) {
            if (gap_partition_ok(p, 1, 1))
                ++distinct;
        });
        all_partitions(k - a, [&](const std::vector<int>&) { ++plain; });
        total += distinct * plain;
    }
    return total;
}

} // namespace oracle

#endif // GAPCOMP_TESTS_ORACLES_HPP
