#ifndef GAPCOMP_RECIPROCITY_HPP
#define GAPCOMP_RECIPROCITY_HPP

#include "gapcomp/enumerate.hpp"
#include "gapcomp/integer.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gapcomp {

/*
 * Square lower-triangular integer matrix with 1-based logical indices.
 * Cell (i, j), 1 <= i, j <= dim, is stored at entries_[(i-1)*dim + (j-1)].
 * Writing a nonzero value above the diagonal is rejected.
 *
 * The leading dim x dim blocks of lower-triangular matrices multiply
 * independently of the rows and columns beyond them, so checking a product
 * on a finite block is exact for the corresponding block of the infinite
 * matrices.
 */
class Triangle {
public:
    explicit Triangle(int dim);

    static Triangle identity(int dim);

    int dim() const { return dim_; }

    /// Entry (i, j); zero above the diagonal. Throws std::out_of_range outside 1..dim.
    const Integer& at(int i, int j) const;
    /// Throws std::invalid_argument for a nonzero value with j > i.
    void set(int i, int j, Integer value);

    /// Leading principal block of the given size.
    Triangle leading_block(int dim) const;

    friend bool operator==(const Triangle&, const Triangle&) = default;

private:
    std::size_t index(int i, int j) const;

    int dim_;
    std::vector<Integer> entries_;
};

/// Exact product. Throws std::invalid_argument on dimension mismatch.
Triangle triangle_mul(const Triangle& a, const Triangle& b);

/// Inverse of a lower-triangular matrix with every diagonal entry equal to 1,
/// by forward substitution. Throws std::domain_error for other diagonals.
Triangle unit_triangle_inverse(const Triangle& t);

/// mu_g^(s)(i,j) = M_g^(s)(i+g+s-1, j+g+s-1). Requires g >= 1.
Triangle build_mu(const GapClass& cls, int dim);
/// gamma_g^(s)(i,j) = K_g^(s)(i-j, j+s-1).
Triangle build_gamma(const GapClass& cls, int dim);

struct CellFailure {
    /// "mu*gamma" or "gamma*mu".
    std::string product;
    int row;
    int col;
    Integer value;
};

struct InverseCheck {
    bool holds = true;
    std::optional<CellFailure> failure;
    /// First cell, row-major, where mu differs from the inverse of gamma.
    std::optional<std::pair<int, int>> mu_suspect;
    /// First cell, row-major, where gamma differs from the inverse of mu.
    std::optional<std::pair<int, int>> gamma_suspect;
};

/// Checks mu*gamma = I and gamma*mu = I on the supplied matrices.
InverseCheck check_inverse_pair(const Triangle& mu, const Triangle& gamma);
/// Builds mu and gamma for the class and checks both products. Requires g >= 1.
InverseCheck check_inverse(const GapClass& cls, int dim);

/// gamma_{g_1}^(s) * ... * gamma_{g_M}^(s); the empty product is the identity.
Triangle gamma_product(std::span<const int> gs, int s, int dim);

/// Number of M-tuples of compositions, the j-th in C_{g_j}^(s), with total size k.
/// Per-class counts come from explicit enumeration; M = 0 gives [k == 0].
Integer tuple_count(std::span<const int> gs, int s, int k);

/// Smallest row n for which entry (n, n-k) is covered by the stabilization bound n >= 2k-s+1 (and n-k >= 1).
int stable_row(int k, int s);

} // namespace gapcomp

#endif // GAPCOMP_RECIPROCITY_HPP
