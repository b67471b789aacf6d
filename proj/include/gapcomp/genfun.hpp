#ifndef GAPCOMP_GENFUN_HPP
#define GAPCOMP_GENFUN_HPP

#include "gapcomp/enumerate.hpp"
#include "gapcomp/integer.hpp"
#include "gapcomp/qseries.hpp"

#include <optional>
#include <span>
#include <vector>

namespace gapcomp {

/// Which generating function to build and how far to expand it.
struct SeriesRequest {
    GapClass cls;
    int q_order;
    int x_order;
    /// Bound for the largest-part (P<=m) and first-part (C>=m) variants.
    std::optional<int> m;
};

/// P_g^(s)(x,q): sum over gap partitions of x^length q^size.
XQSeries series_P(const SeriesRequest& req);
/// P_{g,<=m}^(s)(x,q): gap partitions with largest part at most m. Requires req.m >= 0.
XQSeries series_P_le_m(const SeriesRequest& req);
/// C_g^(s)(x,q) = 1 / P_g^(s)(-x,q).
XQSeries series_C(const SeriesRequest& req);
/// C_{g,>=m}^(s)(x,q) = P_{g,<=m-1}^(s)(-x,q) / P_g^(s)(-x,q). Requires req.m >= 1.
XQSeries series_C_ge_m(const SeriesRequest& req);

/// P_{g,<=bound}^(s)(-1,q) truncated at q_order. Any integer bound is accepted;
/// bounds below s give 1.
TruncatedSeries partitions_le_at_minus_one(const GapClass& cls, int bound, int q_order);

/// K_g^(s)(n,m): number of m-step compositions of n in the class. Zero for n < 0.
Integer count_m_step(int n, int m, const GapClass& cls);
/// K_g^(s)(0..n_max, m) from a single dynamic-programming pass.
std::vector<Integer> count_m_step_row(int n_max, int m, const GapClass& cls);

/// M_g^(s)(n,m): signed count of gap partitions of n with largest part m,
/// each weighted by (-1)^(length+1).
Integer signed_last_part_count(int n, int m, const GapClass& cls);
/// M_g^(s)(n, m) for n = 0..n_max at fixed m.
std::vector<Integer> signed_last_part_column(int n_max, int m, const GapClass& cls);

struct IdentityCheck {
    bool holds = true;
    /// Lowest q-degree where the two sides differ.
    std::optional<int> first_failing_degree;
    /// The computed left-hand side.
    TruncatedSeries lhs;
};

/// Checks sum_{n<=N} K(n,m) q^n P_{g,<=n+m}^(s)(-1,q) == 1 through q^N.
IdentityCheck verify_K_identity(const GapClass& cls, int m, int q_order);
/// Same check with caller-supplied values K(0..N, m), e.g. read from a file.
IdentityCheck verify_K_identity(const GapClass& cls, int m, std::span<const Integer> k_values);

struct XQIdentityCheck {
    bool holds = true;
    /// First (x-layer, q-degree) where the two sides differ, by degree then layer.
    std::optional<XQIndex> first_failure;
};

/// Checks P_g^(s)(-x,q) * c_ge_m == P_{g,<=m-1}^(s)(-x,q) at the truncation of c_ge_m.
XQIdentityCheck verify_Gm_identity(const GapClass& cls, int m, const XQSeries& c_ge_m);
/// Same check on the series produced by series_C_ge_m.
XQIdentityCheck verify_Gm_identity(const GapClass& cls, int m, int x_order, int q_order);

/// Euler specializations of P_{g,<=m}^(s)(-1,q): (q;q)_m for (g,s) = (1,1) and
/// 1/(-q;q)_m for (g,s) = (0,1). The supplied series is compared against the
/// product form. Throws std::invalid_argument for any other class.
IdentityCheck verify_euler(const GapClass& cls, int m, const TruncatedSeries& at_minus_one);
/// Same check on series_P_le_m evaluated at x = -1.
IdentityCheck verify_euler(const GapClass& cls, int m, int q_order);

/// (-q;q)_m = (1+q)(1+q^2)...(1+q^m) truncated at order.
TruncatedSeries distinct_parts_product(int m, int order);

} // namespace gapcomp

#endif // GAPCOMP_GENFUN_HPP
