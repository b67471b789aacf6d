#include "gapcomp/genfun.hpp"

#include <algorithm>
#include <stdexcept>

namespace gapcomp {

namespace {

// Degree of the lowest-weight gap partition with l parts: s, s+g, ..., s+(l-1)g.
long min_size(const GapClass& cls, long l)
{
    return l * cls.s() + l * (l - 1) / 2 * cls.g();
}

// Top argument of the Gaussian binomial counting l-part gap partitions with largest part <= bound.
int box_width(const GapClass& cls, int bound, int l)
{
    return bound - cls.s() + 1 - (l - 1) * (cls.g() - 1);
}

void check_request(const SeriesRequest& req)
{
    if (req.q_order < 0 || req.x_order < 0)
        throw std::invalid_argument("series orders must be nonnegative");
}

int require_m(const SeriesRequest& req, int lowest)
{
    if (!req.m)
        throw std::invalid_argument("this series needs a bound m");
    if (*req.m < lowest)
        throw std::invalid_argument("bound m must be at least " + std::to_string(lowest) + ", got " +
                                    std::to_string(*req.m));
    return *req.m;
}

XQSeries partitions_le(const GapClass& cls, int bound, int x_order, int q_order)
{
    XQSeries out(x_order, q_order);
    out.layer(0) = TruncatedSeries::one(q_order);
    for (int l = 1; l <= x_order; ++l) {
        long shift = min_size(cls, l);
        if (shift > q_order)
            break;
        out.layer(l) = qbinomial(box_width(cls, bound, l), l, q_order).shifted(static_cast<int>(shift));
    }
    return out;
}

} // namespace

XQSeries series_P(const SeriesRequest& req)
{
    check_request(req);
    const int N = req.q_order;
    XQSeries out(req.x_order, N);
    for (int l = 0; l <= req.x_order; ++l) {
        long shift = min_size(req.cls, l);
        if (shift > N)
            break;
        out.layer(l) = invert(qpochhammer(l, N)).shifted(static_cast<int>(shift));
    }
    return out;
}

XQSeries series_P_le_m(const SeriesRequest& req)
{
    check_request(req);
    return partitions_le(req.cls, require_m(req, 0), req.x_order, req.q_order);
}

XQSeries series_C(const SeriesRequest& req)
{
    check_request(req);
    return invert(series_P(req).negated_x());
}

XQSeries series_C_ge_m(const SeriesRequest& req)
{
    check_request(req);
    const int m = require_m(req, 1);
    XQSeries numerator = partitions_le(req.cls, m - 1, req.x_order, req.q_order).negated_x();
    return numerator * series_C(req);
}

TruncatedSeries partitions_le_at_minus_one(const GapClass& cls, int bound, int q_order)
{
    TruncatedSeries out = TruncatedSeries::one(q_order);
    for (int l = 1;; ++l) {
        long shift = min_size(cls, l);
        if (shift > q_order)
            break;
        TruncatedSeries term = qbinomial(box_width(cls, bound, l), l, q_order).shifted(static_cast<int>(shift));
        if (l % 2)
            out -= term;
        else
            out += term;
    }
    return out;
}

std::vector<Integer> count_m_step_row(int n_max, int m, const GapClass& cls)
{
    if (n_max < 0)
        return {};
    if (m < 0)
        throw std::invalid_argument("m-step bound must be nonnegative");
    const int g = cls.g();
    const int s = cls.s();
    const std::size_t width = static_cast<std::size_t>(n_max) + 1;
    // ways[sum][last]: nonempty m-step prefixes in the class with that sum and last part.
    std::vector<Integer> ways(width * width, Integer(0));
    auto at = [&](int sum, int last) -> Integer& { return ways[sum * width + last]; };

    for (int w = s; w <= std::min(m, n_max); ++w)
        at(w, w) = 1;
    for (int sum = 1; sum <= n_max; ++sum) {
        for (int last = 1; last <= sum; ++last) {
            const Integer& c = at(sum, last);
            if (c == 0)
                continue;
            const int lo = std::max(s, last - (g - 1));
            const int hi = std::min(m + sum, n_max - sum);
            for (int w = lo; w <= hi; ++w)
                at(sum + w, w) += c;
        }
    }

    std::vector<Integer> row(width, Integer(0));
    row[0] = 1;
    for (int n = 1; n <= n_max; ++n)
        for (int last = 1; last <= n; ++last)
            row[n] += at(n, last);
    return row;
}

Integer count_m_step(int n, int m, const GapClass& cls)
{
    if (n < 0)
        return 0;
    return count_m_step_row(n, m, cls)[n];
}

std::vector<Integer> signed_last_part_column(int n_max, int m, const GapClass& cls)
{
    if (n_max < 0)
        return {};
    std::vector<Integer> column(static_cast<std::size_t>(n_max) + 1, Integer(0));
    if (m < cls.s() || m > n_max)
        return column;
    // Removing the largest part m leaves a gap partition with largest part <= m - g,
    // and the sign (-1)^(length+1) becomes (-1)^(length of the remainder).
    TruncatedSeries rest = partitions_le_at_minus_one(cls, m - cls.g(), n_max - m);
    for (int n = m; n <= n_max; ++n)
        column[n] = rest[n - m];
    return column;
}

Integer signed_last_part_count(int n, int m, const GapClass& cls)
{
    if (n < 1 || m < 1)
        throw std::invalid_argument("signed_last_part_count needs n, m >= 1");
    return signed_last_part_column(n, m, cls)[n];
}

IdentityCheck verify_K_identity(const GapClass& cls, int m, int q_order)
{
    if (q_order < 0)
        throw std::invalid_argument("order must be nonnegative");
    auto k_values = count_m_step_row(q_order, m, cls);
    return verify_K_identity(cls, m, k_values);
}

IdentityCheck verify_K_identity(const GapClass& cls, int m, std::span<const Integer> k_values)
{
    if (m < 1)
        throw std::invalid_argument("K-identity needs m >= 1");
    if (k_values.empty())
        throw std::invalid_argument("K-identity needs at least K(0,m)");
    const int N = static_cast<int>(k_values.size()) - 1;
    TruncatedSeries lhs(N);
    for (int n = 0; n <= N; ++n) {
        if (k_values[n] == 0)
            continue;
        lhs += (partitions_le_at_minus_one(cls, n + m, N) * k_values[n]).shifted(n);
    }
    IdentityCheck result{true, first_difference(lhs, TruncatedSeries::one(N)), lhs};
    result.holds = !result.first_failing_degree.has_value();
    return result;
}

XQIdentityCheck verify_Gm_identity(const GapClass& cls, int m, const XQSeries& c_ge_m)
{
    if (m < 1)
        throw std::invalid_argument("Gm identity needs m >= 1");
    SeriesRequest req{cls, c_ge_m.q_order(), c_ge_m.x_order(), m - 1};
    XQSeries lhs = series_P(req).negated_x() * c_ge_m;
    XQSeries rhs = series_P_le_m(req).negated_x();
    XQIdentityCheck result{true, first_difference(lhs, rhs)};
    result.holds = !result.first_failure.has_value();
    return result;
}

XQIdentityCheck verify_Gm_identity(const GapClass& cls, int m, int x_order, int q_order)
{
    return verify_Gm_identity(cls, m, series_C_ge_m(SeriesRequest{cls, q_order, x_order, m}));
}

TruncatedSeries distinct_parts_product(int m, int order)
{
    if (m < 0)
        throw std::invalid_argument("product length must be nonnegative");
    TruncatedSeries out = TruncatedSeries::one(order);
    for (int k = 1; k <= std::min(m, order); ++k)
        for (int d = order; d >= k; --d)
            out[d] += out[d - k];
    return out;
}

IdentityCheck verify_euler(const GapClass& cls, int m, const TruncatedSeries& at_minus_one)
{
    if (m < 0)
        throw std::invalid_argument("Euler check needs m >= 0");
    const int N = at_minus_one.order();
    TruncatedSeries expected(N);
    if (cls == GapClass(1, 1))
        expected = qpochhammer(m, N);
    else if (cls == GapClass(0, 1))
        expected = invert(distinct_parts_product(m, N));
    else
        throw std::invalid_argument("Euler specializations exist for (g,s) = (1,1) and (0,1) only");
    IdentityCheck result{true, first_difference(at_minus_one, expected), at_minus_one};
    result.holds = !result.first_failing_degree.has_value();
    return result;
}

IdentityCheck verify_euler(const GapClass& cls, int m, int q_order)
{
    SeriesRequest req{cls, q_order, q_order, m};
    return verify_euler(cls, m, series_P_le_m(req).eval_x(-1));
}

} // namespace gapcomp
