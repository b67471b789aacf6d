#ifndef GAPCOMP_INVOLUTION_HPP
#define GAPCOMP_INVOLUTION_HPP

#include "gapcomp/enumerate.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace gapcomp {

/// A pair (lambda, kappa) with lambda a gap partition and kappa a gap composition
/// of the same class. Weight is (-1)^length(lambda).
struct PairState {
    Partition lambda;
    Composition kappa;

    int weight() const { return lambda.length() % 2 ? -1 : 1; }
    int total_size() const { return lambda.size() + kappa.size(); }
    int total_length() const { return lambda.length() + kappa.length(); }

    friend auto operator<=>(const PairState&, const PairState&) = default;
};

std::string to_string(const PairState& p);

bool in_pair_set(const PairState& p, const GapClass& cls);

/*
 * Sign-reversing involution on pairs. With both sides nonempty, compare the
 * last part of kappa with the largest part of lambda:
 *   kappa_last - lambda_last >= g : kappa's last part moves onto the end of lambda;
 *   otherwise                     : lambda's largest part moves onto the end of kappa.
 * With kappa empty, lambda's largest part becomes kappa; with lambda empty,
 * kappa's last part becomes lambda. (empty, empty) is the only fixed point.
 * Throws std::invalid_argument if p is not in the pair set of cls.
 */
PairState phi(const PairState& p, const GapClass& cls);

/// True for pairs in Pi_m: kappa empty or kappa_1 >= m.
bool in_pi_m(const PairState& p, int m);
/// True for pairs in Pi_m^*: Pi_m minus the pairs (lambda, empty) with lambda
/// empty or lambda_last <= m - 1.
bool in_pi_m_star(const PairState& p, int m);

struct InvolutionViolation {
    std::string property;
    PairState pair;
    std::string detail;
};

struct InvolutionReport {
    GapClass cls;
    int size_bound;
    std::uint64_t pairs_checked = 0;
    std::vector<InvolutionViolation> violations;

    bool ok() const { return violations.empty(); }
};

using PairMap = std::function<PairState(const PairState&, const GapClass&)>;

/*
 * Exhaustive check over all pairs with total size <= size_bound:
 *   closure   phi(p) is a valid pair
 *   involution phi(phi(p)) == p
 *   size      total size and total length preserved
 *   weight    weight flips except at (empty, empty)
 *   pi_m      for 1 <= m <= size_bound, phi maps Pi_m^* into itself, the
 *             weighted sum over Pi_m^* of x^length q^size vanishes, and the
 *             weighted sum over Pi_m equals P_{g,<=m-1}^(s)(-x,q).
 * `map` defaults to phi; any other map is checked against the same properties.
 */
InvolutionReport verify_involution(const GapClass& cls, int size_bound, const PairMap& map = phi);

} // namespace gapcomp

#endif // GAPCOMP_INVOLUTION_HPP
