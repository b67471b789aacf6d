#ifndef GAPCOMP_QSERIES_HPP
#define GAPCOMP_QSERIES_HPP

#include "gapcomp/integer.hpp"

#include <cstddef>
#include <deque>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gapcomp {

/*
 * Dense power series in q with exact integer coefficients, known up to and
 * including q^order. Binary operations produce a result whose order is the
 * minimum of the operand orders; reading a coefficient above the order is
 * an error rather than an implicit zero.
 */
class TruncatedSeries {
public:
    /// The zero series at order 0.
    TruncatedSeries() : TruncatedSeries(0) {}
    /// The zero series at the given order.
    explicit TruncatedSeries(int order);
    /// Takes ownership of coefficients; order = coeffs.size() - 1.
    explicit TruncatedSeries(std::vector<Integer> coeffs);

    static TruncatedSeries one(int order);
    /// c * q^degree, truncated (to zero if degree > order).
    static TruncatedSeries monomial(int degree, const Integer& c, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// Coefficient of q^n. Throws std::out_of_range for n < 0 or n > order().
    const Integer& operator[](int n) const;
    Integer& operator[](int n);

    std::span<const Integer> coefficients() const { return coeffs_; }

    /// Drops coefficients above new_order; new_order must not exceed order().
    TruncatedSeries truncated(int new_order) const;
    /// Multiplication by q^k (k >= 0) at the same order.
    TruncatedSeries shifted(int k) const;
    /// Sum of all known coefficients, i.e. the value at q = 1 of a polynomial.
    Integer sum() const;
    /// Highest degree with a nonzero coefficient, or -1 for the zero series.
    int degree() const;
    bool is_zero() const { return degree() < 0; }

    TruncatedSeries operator-() const;
    TruncatedSeries& operator+=(const TruncatedSeries& rhs);
    TruncatedSeries& operator-=(const TruncatedSeries& rhs);
    TruncatedSeries& operator*=(const Integer& c);

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const Integer& c) { return a *= c; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<Integer> coeffs_;
};

/// Reciprocal of a series whose constant term is 1 or -1. Throws std::domain_error otherwise.
TruncatedSeries invert(const TruncatedSeries& a);

/// Lowest degree at which a and b disagree, compared up to min(order(a), order(b)).
std::optional<int> first_difference(const TruncatedSeries& a, const TruncatedSeries& b);

/// (q;q)_n = (1-q)(1-q^2)...(1-q^n) truncated at the given order; n = 0 gives 1.
TruncatedSeries qpochhammer(int n, int order);

/// Gaussian binomial [A choose B]_q as an exact polynomial with order B(A-B),
/// or the zero series (order 0) when B < 0 or B > A.
TruncatedSeries qbinomial(int A, int B);
/// Same polynomial presented at an explicit order (zero-padded or truncated).
TruncatedSeries qbinomial(int A, int B, int order);

/*
 * Memo of Gaussian binomials built row by row with
 *   [A,B] = [A-1,B-1] + q^B [A-1,B].
 * Rows up to max_rows are cached; larger A are computed on demand and not
 * stored. Lookups and growth are serialized by an internal mutex.
 */
class QBinomialTable {
public:
    explicit QBinomialTable(int max_rows = 256);

    TruncatedSeries get(int A, int B);
    /// [A,B]_q presented at the given order (zero-padded or truncated).
    TruncatedSeries get(int A, int B, int order);
    int max_rows() const { return max_rows_; }
    int cached_rows() const;

private:
    using Poly = std::vector<Integer>;
    static std::vector<Poly> next_row(const std::vector<Poly>& prev);

    int max_rows_;
    mutable std::mutex mutex_;
    std::deque<std::vector<Poly>> rows_;
};

/// Process-wide table used by the free qbinomial functions.
QBinomialTable& default_qbinomial_table();

std::string to_string(const TruncatedSeries& s);

/*
 * Polynomial in x whose coefficients are TruncatedSeries in q, truncated at
 * x^x_order and q^q_order. layer(l) is the coefficient of x^l.
 */
class XQSeries {
public:
    XQSeries() : XQSeries(0, 0) {}
    XQSeries(int x_order, int q_order);
    /// All layers must share one q-order; layers must be nonempty.
    explicit XQSeries(std::vector<TruncatedSeries> layers);

    static XQSeries one(int x_order, int q_order);

    int x_order() const { return static_cast<int>(layers_.size()) - 1; }
    int q_order() const { return layers_.front().order(); }

    const TruncatedSeries& layer(int l) const;
    TruncatedSeries& layer(int l);
    const Integer& coeff(int l, int n) const { return layer(l)[n]; }

    /// x -> -x, i.e. odd layers negated.
    XQSeries negated_x() const;
    /// Substitutes the integer x0 for x.
    TruncatedSeries eval_x(long x0) const;
    XQSeries truncated(int x_order, int q_order) const;

    XQSeries& operator+=(const XQSeries& rhs);
    XQSeries& operator-=(const XQSeries& rhs);
    friend XQSeries operator+(XQSeries a, const XQSeries& b) { return a += b; }
    friend XQSeries operator-(XQSeries a, const XQSeries& b) { return a -= b; }
    friend XQSeries operator*(const XQSeries& a, const XQSeries& b);

    friend bool operator==(const XQSeries&, const XQSeries&) = default;

private:
    std::vector<TruncatedSeries> layers_;
};

/// Reciprocal in x and q; requires layer(0) to have constant term +-1.
XQSeries invert(const XQSeries& a);

struct XQIndex {
    int layer;
    int degree;
    friend bool operator==(const XQIndex&, const XQIndex&) = default;
};

/// First (x-layer, q-degree) at which a and b disagree, scanning by increasing
/// q-degree then increasing layer, over the common truncation.
std::optional<XQIndex> first_difference(const XQSeries& a, const XQSeries& b);

} // namespace gapcomp

#endif // GAPCOMP_QSERIES_HPP
