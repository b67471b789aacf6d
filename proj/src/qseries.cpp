#include "gapcomp/qseries.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace gapcomp {

TruncatedSeries::TruncatedSeries(int order)
{
    if (order < 0)
        throw std::invalid_argument("series order must be nonnegative");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, Integer(0));
}

TruncatedSeries::TruncatedSeries(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty())
        throw std::invalid_argument("series needs at least one coefficient");
}

TruncatedSeries TruncatedSeries::one(int order)
{
    TruncatedSeries s(order);
    s.coeffs_[0] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::monomial(int degree, const Integer& c, int order)
{
    if (degree < 0)
        throw std::invalid_argument("monomial degree must be nonnegative");
    TruncatedSeries s(order);
    if (degree <= order)
        s.coeffs_[degree] = c;
    return s;
}

const Integer& TruncatedSeries::operator[](int n) const
{
    if (n < 0 || n > order())
        throw std::out_of_range("coefficient q^" + std::to_string(n) + " outside truncation order " +
                                std::to_string(order()));
    return coeffs_[n];
}

Integer& TruncatedSeries::operator[](int n)
{
    return const_cast<Integer&>(std::as_const(*this)[n]);
}

TruncatedSeries TruncatedSeries::truncated(int new_order) const
{
    if (new_order < 0 || new_order > order())
        throw std::out_of_range("cannot truncate order " + std::to_string(order()) + " series to order " +
                                std::to_string(new_order));
    return TruncatedSeries(std::vector<Integer>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

TruncatedSeries TruncatedSeries::shifted(int k) const
{
    if (k < 0)
        throw std::invalid_argument("shift must be nonnegative");
    TruncatedSeries out(order());
    for (int n = k; n <= order(); ++n)
        out.coeffs_[n] = coeffs_[n - k];
    return out;
}

Integer TruncatedSeries::sum() const
{
    Integer total = 0;
    for (const auto& c : coeffs_)
        total += c;
    return total;
}

int TruncatedSeries::degree() const
{
    for (int n = order(); n >= 0; --n)
        if (coeffs_[n] != 0)
            return n;
    return -1;
}

TruncatedSeries TruncatedSeries::operator-() const
{
    TruncatedSeries out(*this);
    for (auto& c : out.coeffs_)
        c = -c;
    return out;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs)
{
    coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t n = 0; n < coeffs_.size(); ++n)
        coeffs_[n] += rhs.coeffs_[n];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs)
{
    coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t n = 0; n < coeffs_.size(); ++n)
        coeffs_[n] -= rhs.coeffs_[n];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Integer& c)
{
    for (auto& v : coeffs_)
        v *= c;
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
{
    const int order = std::min(a.order(), b.order());
    TruncatedSeries out(order);
    for (int i = 0; i <= order; ++i) {
        const Integer& ai = a.coeffs_[i];
        if (ai == 0)
            continue;
        for (int j = 0; i + j <= order; ++j) {
            if (b.coeffs_[j] != 0)
                mpz_addmul(out.coeffs_[i + j].get_mpz_t(), ai.get_mpz_t(), b.coeffs_[j].get_mpz_t());
        }
    }
    return out;
}

TruncatedSeries invert(const TruncatedSeries& a)
{
    const Integer& a0 = a[0];
    if (a0 != 1 && a0 != -1)
        throw std::domain_error("series with constant term " + to_string(a0) +
                                " is not invertible over the integers");
    const int order = a.order();
    TruncatedSeries b(order);
    // a0 = +-1, so 1/a0 = a0.
    b[0] = a0;
    Integer acc;
    for (int n = 1; n <= order; ++n) {
        acc = 0;
        for (int k = 1; k <= n; ++k) {
            if (a[k] != 0)
                mpz_addmul(acc.get_mpz_t(), a[k].get_mpz_t(), b[n - k].get_mpz_t());
        }
        b[n] = -a0 * acc;
    }
    return b;
}

std::optional<int> first_difference(const TruncatedSeries& a, const TruncatedSeries& b)
{
    const int order = std::min(a.order(), b.order());
    for (int n = 0; n <= order; ++n)
        if (a[n] != b[n])
            return n;
    return std::nullopt;
}

TruncatedSeries qpochhammer(int n, int order)
{
    if (n < 0)
        throw std::invalid_argument("qpochhammer length must be nonnegative");
    TruncatedSeries out = TruncatedSeries::one(order);
    // Factors (1 - q^k) with k > order act as 1.
    for (int k = 1; k <= std::min(n, order); ++k)
        for (int d = order; d >= k; --d)
            out[d] -= out[d - k];
    return out;
}

// ---------------------------------------------------------------------------

QBinomialTable::QBinomialTable(int max_rows) : max_rows_(max_rows)
{
    if (max_rows < 0)
        throw std::invalid_argument("qbinomial table size must be nonnegative");
    rows_.push_back({Poly{Integer(1)}});
}

std::vector<QBinomialTable::Poly> QBinomialTable::next_row(const std::vector<Poly>& prev)
{
    const int A = static_cast<int>(prev.size()); // prev is row A-1 with entries B = 0..A-1
    std::vector<Poly> row(A + 1);
    for (int B = 0; B <= A; ++B) {
        Poly p(static_cast<std::size_t>(B) * (A - B) + 1, Integer(0));
        if (B >= 1) {
            const Poly& left = prev[B - 1];
            for (std::size_t d = 0; d < left.size(); ++d)
                p[d] += left[d];
        }
        if (B <= A - 1) {
            const Poly& up = prev[B];
            for (std::size_t d = 0; d < up.size(); ++d)
                p[d + B] += up[d];
        }
        row[B] = std::move(p);
    }
    return row;
}

int QBinomialTable::cached_rows() const
{
    std::lock_guard lock(mutex_);
    return static_cast<int>(rows_.size());
}

TruncatedSeries QBinomialTable::get(int A, int B)
{
    if (B < 0 || A < 0 || B > A)
        return TruncatedSeries(0);
    if (A > max_rows_) {
        std::vector<Poly> row{Poly{Integer(1)}};
        for (int a = 1; a <= A; ++a)
            row = next_row(row);
        return TruncatedSeries(row[B]);
    }
    std::lock_guard lock(mutex_);
    while (static_cast<int>(rows_.size()) <= A)
        rows_.push_back(next_row(rows_.back()));
    return TruncatedSeries(rows_[A][B]);
}

TruncatedSeries QBinomialTable::get(int A, int B, int order)
{
    TruncatedSeries out(order);
    if (B < 0 || A < 0 || B > A)
        return out;
    auto fill = [&](const Poly& poly) {
        const std::size_t n = std::min(poly.size(), static_cast<std::size_t>(order) + 1);
        for (std::size_t d = 0; d < n; ++d)
            out[static_cast<int>(d)] = poly[d];
    };
    if (A > max_rows_) {
        TruncatedSeries full = get(A, B);
        fill(Poly(full.coefficients().begin(), full.coefficients().end()));
        return out;
    }
    std::lock_guard lock(mutex_);
    while (static_cast<int>(rows_.size()) <= A)
        rows_.push_back(next_row(rows_.back()));
    fill(rows_[A][B]);
    return out;
}

QBinomialTable& default_qbinomial_table()
{
    static QBinomialTable table;
    return table;
}

TruncatedSeries qbinomial(int A, int B)
{
    return default_qbinomial_table().get(A, B);
}

TruncatedSeries qbinomial(int A, int B, int order)
{
    return default_qbinomial_table().get(A, B, order);
}

std::string to_string(const TruncatedSeries& s)
{
    std::ostringstream os;
    os << "[";
    for (int n = 0; n <= s.order(); ++n)
        os << (n ? " " : "") << to_string(s[n]);
    os << "] + O(q^" << s.order() + 1 << ")";
    return os.str();
}

// ---------------------------------------------------------------------------

XQSeries::XQSeries(int x_order, int q_order)
{
    if (x_order < 0)
        throw std::invalid_argument("x order must be nonnegative");
    layers_.assign(static_cast<std::size_t>(x_order) + 1, TruncatedSeries(q_order));
}

XQSeries::XQSeries(std::vector<TruncatedSeries> layers) : layers_(std::move(layers))
{
    if (layers_.empty())
        throw std::invalid_argument("bivariate series needs at least one layer");
    for (const auto& l : layers_)
        if (l.order() != layers_.front().order())
            throw std::invalid_argument("all x-layers must share one q-order");
}

XQSeries XQSeries::one(int x_order, int q_order)
{
    XQSeries s(x_order, q_order);
    s.layers_[0] = TruncatedSeries::one(q_order);
    return s;
}

const TruncatedSeries& XQSeries::layer(int l) const
{
    if (l < 0 || l > x_order())
        throw std::out_of_range("layer x^" + std::to_string(l) + " outside x-order " + std::to_string(x_order()));
    return layers_[l];
}

TruncatedSeries& XQSeries::layer(int l)
{
    return const_cast<TruncatedSeries&>(std::as_const(*this).layer(l));
}

XQSeries XQSeries::negated_x() const
{
    XQSeries out(*this);
    for (int l = 1; l <= x_order(); l += 2)
        out.layers_[l] = -out.layers_[l];
    return out;
}

TruncatedSeries XQSeries::eval_x(long x0) const
{
    TruncatedSeries out(q_order());
    Integer power = 1;
    for (int l = 0; l <= x_order(); ++l) {
        if (power != 0)
            out += layers_[l] * power;
        power *= x0;
    }
    return out;
}

XQSeries XQSeries::truncated(int new_x_order, int new_q_order) const
{
    if (new_x_order < 0 || new_x_order > x_order())
        throw std::out_of_range("cannot raise or negate the x-order by truncation");
    std::vector<TruncatedSeries> layers;
    layers.reserve(new_x_order + 1);
    for (int l = 0; l <= new_x_order; ++l)
        layers.push_back(layers_[l].truncated(new_q_order));
    return XQSeries(std::move(layers));
}

XQSeries& XQSeries::operator+=(const XQSeries& rhs)
{
    layers_.resize(std::min(layers_.size(), rhs.layers_.size()));
    for (std::size_t l = 0; l < layers_.size(); ++l)
        layers_[l] += rhs.layers_[l];
    return *this;
}

XQSeries& XQSeries::operator-=(const XQSeries& rhs)
{
    layers_.resize(std::min(layers_.size(), rhs.layers_.size()));
    for (std::size_t l = 0; l < layers_.size(); ++l)
        layers_[l] -= rhs.layers_[l];
    return *this;
}

XQSeries operator*(const XQSeries& a, const XQSeries& b)
{
    const int L = std::min(a.x_order(), b.x_order());
    const int N = std::min(a.q_order(), b.q_order());
    XQSeries out(L, N);
    for (int i = 0; i <= L; ++i) {
        if (a.layers_[i].is_zero())
            continue;
        for (int j = 0; i + j <= L; ++j) {
            if (!b.layers_[j].is_zero())
                out.layers_[i + j] += a.layers_[i] * b.layers_[j];
        }
    }
    return out;
}

XQSeries invert(const XQSeries& a)
{
    const int L = a.x_order();
    const int N = a.q_order();
    std::vector<TruncatedSeries> b;
    b.reserve(L + 1);
    const TruncatedSeries inv0 = invert(a.layer(0));
    b.push_back(inv0);
    for (int l = 1; l <= L; ++l) {
        TruncatedSeries acc(N);
        for (int k = 1; k <= l; ++k)
            if (!a.layer(k).is_zero())
                acc += a.layer(k) * b[l - k];
        b.push_back(-(inv0 * acc));
    }
    return XQSeries(std::move(b));
}

std::optional<XQIndex> first_difference(const XQSeries& a, const XQSeries& b)
{
    const int L = std::min(a.x_order(), b.x_order());
    const int N = std::min(a.q_order(), b.q_order());
    for (int n = 0; n <= N; ++n)
        for (int l = 0; l <= L; ++l)
            if (a.coeff(l, n) != b.coeff(l, n))
                return XQIndex{l, n};
    return std::nullopt;
}

} // namespace gapcomp
