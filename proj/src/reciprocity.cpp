#include "gapcomp/reciprocity.hpp"

#include "gapcomp/genfun.hpp"

#include <algorithm>
#include <stdexcept>

namespace gapcomp {

Triangle::Triangle(int dim) : dim_(dim)
{
    if (dim < 0)
        throw std::invalid_argument("matrix dimension must be nonnegative");
    entries_.assign(static_cast<std::size_t>(dim) * dim, Integer(0));
}

Triangle Triangle::identity(int dim)
{
    Triangle t(dim);
    for (int i = 1; i <= dim; ++i)
        t.set(i, i, 1);
    return t;
}

std::size_t Triangle::index(int i, int j) const
{
    if (i < 1 || i > dim_ || j < 1 || j > dim_)
        throw std::out_of_range("cell (" + std::to_string(i) + "," + std::to_string(j) + ") outside 1.." +
                                std::to_string(dim_));
    return static_cast<std::size_t>(i - 1) * dim_ + (j - 1);
}

const Integer& Triangle::at(int i, int j) const { return entries_[index(i, j)]; }

void Triangle::set(int i, int j, Integer value)
{
    auto k = index(i, j);
    if (j > i && value != 0)
        throw std::invalid_argument("nonzero entry above the diagonal at (" + std::to_string(i) + "," +
                                    std::to_string(j) + ")");
    entries_[k] = std::move(value);
}

Triangle Triangle::leading_block(int dim) const
{
    if (dim < 0 || dim > dim_)
        throw std::out_of_range("leading block larger than the matrix");
    Triangle out(dim);
    for (int i = 1; i <= dim; ++i)
        for (int j = 1; j <= i; ++j)
            out.set(i, j, at(i, j));
    return out;
}

Triangle triangle_mul(const Triangle& a, const Triangle& b)
{
    if (a.dim() != b.dim())
        throw std::invalid_argument("dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                                    std::to_string(b.dim()));
    const int d = a.dim();
    Triangle out(d);
    Integer acc;
    // Both factors are lower-triangular, so only j <= k <= i contributes and the
    // product is lower-triangular.
    for (int i = 1; i <= d; ++i) {
        for (int j = 1; j <= i; ++j) {
            acc = 0;
            for (int k = j; k <= i; ++k)
                mpz_addmul(acc.get_mpz_t(), a.at(i, k).get_mpz_t(), b.at(k, j).get_mpz_t());
            out.set(i, j, acc);
        }
    }
    return out;
}

Triangle unit_triangle_inverse(const Triangle& t)
{
    const int d = t.dim();
    for (int i = 1; i <= d; ++i)
        if (t.at(i, i) != 1)
            throw std::domain_error("diagonal entry (" + std::to_string(i) + "," + std::to_string(i) +
                                    ") is not 1");
    Triangle inv = Triangle::identity(d);
    Integer acc;
    for (int j = 1; j <= d; ++j) {
        for (int i = j + 1; i <= d; ++i) {
            acc = 0;
            for (int k = j; k < i; ++k)
                mpz_addmul(acc.get_mpz_t(), t.at(i, k).get_mpz_t(), inv.at(k, j).get_mpz_t());
            inv.set(i, j, -acc);
        }
    }
    return inv;
}

Triangle build_mu(const GapClass& cls, int dim)
{
    if (cls.g() < 1)
        throw std::invalid_argument("mu is defined for g >= 1 only; got g = " + std::to_string(cls.g()));
    const int offset = cls.g() + cls.s() - 1;
    const int n_max = dim + offset;
    Triangle mu(dim);
    for (int j = 1; j <= dim; ++j) {
        auto column = signed_last_part_column(n_max, j + offset, cls);
        for (int i = j; i <= dim; ++i)
            mu.set(i, j, column[i + offset]);
    }
    return mu;
}

Triangle build_gamma(const GapClass& cls, int dim)
{
    Triangle gamma(dim);
    for (int j = 1; j <= dim; ++j) {
        auto k_row = count_m_step_row(dim - j, j + cls.s() - 1, cls);
        for (int i = j; i <= dim; ++i)
            gamma.set(i, j, k_row[i - j]);
    }
    return gamma;
}

namespace {

std::optional<CellFailure> first_non_identity(const Triangle& p, const char* name)
{
    for (int i = 1; i <= p.dim(); ++i)
        for (int j = 1; j <= p.dim(); ++j) {
            const Integer& v = p.at(i, j);
            if (v != (i == j ? 1 : 0))
                return CellFailure{name, i, j, v};
        }
    return std::nullopt;
}

std::optional<std::pair<int, int>> first_mismatch(const Triangle& a, const Triangle& b)
{
    for (int i = 1; i <= a.dim(); ++i)
        for (int j = 1; j <= i; ++j)
            if (a.at(i, j) != b.at(i, j))
                return std::pair{i, j};
    return std::nullopt;
}

std::optional<std::pair<int, int>> suspect_against(const Triangle& candidate, const Triangle& partner)
{
    try {
        return first_mismatch(candidate, unit_triangle_inverse(partner));
    } catch (const std::domain_error&) {
        return std::nullopt;
    }
}

} // namespace

InverseCheck check_inverse_pair(const Triangle& mu, const Triangle& gamma)
{
    if (mu.dim() != gamma.dim())
        throw std::invalid_argument("dimension mismatch: " + std::to_string(mu.dim()) + " vs " +
                                    std::to_string(gamma.dim()));
    InverseCheck result;
    result.failure = first_non_identity(triangle_mul(mu, gamma), "mu*gamma");
    if (!result.failure)
        result.failure = first_non_identity(triangle_mul(gamma, mu), "gamma*mu");
    result.holds = !result.failure.has_value();
    if (!result.holds) {
        result.mu_suspect = suspect_against(mu, gamma);
        result.gamma_suspect = suspect_against(gamma, mu);
    }
    return result;
}

InverseCheck check_inverse(const GapClass& cls, int dim)
{
    return check_inverse_pair(build_mu(cls, dim), build_gamma(cls, dim));
}

Triangle gamma_product(std::span<const int> gs, int s, int dim)
{
    Triangle out = Triangle::identity(dim);
    for (int g : gs)
        out = triangle_mul(out, build_gamma(GapClass(g, s), dim));
    return out;
}

Integer tuple_count(std::span<const int> gs, int s, int k)
{
    if (k < 0)
        return 0;
    // conv[t]: tuples over the classes seen so far with total size t.
    std::vector<Integer> conv(static_cast<std::size_t>(k) + 1, Integer(0));
    conv[0] = 1;
    for (int g : gs) {
        GapClass cls(g, s);
        std::vector<Integer> single(conv.size());
        for (int t = 0; t <= k; ++t)
            single[t] = static_cast<unsigned long>(count_gap_compositions(t, cls));
        std::vector<Integer> next(conv.size(), Integer(0));
        for (int a = 0; a <= k; ++a)
            for (int b = 0; a + b <= k; ++b)
                next[a + b] += conv[a] * single[b];
        conv = std::move(next);
    }
    return conv[k];
}

int stable_row(int k, int s)
{
    return std::max({2 * k - s + 1, k + 1, 1});
}

} // namespace gapcomp
