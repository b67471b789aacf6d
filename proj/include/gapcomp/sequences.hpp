#ifndef GAPCOMP_SEQUENCES_HPP
#define GAPCOMP_SEQUENCES_HPP

#include "gapcomp/integer.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gapcomp {

class UnknownSequenceError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/*
 * Named integer sequences indexed from 0:
 *   compositions  c_g^(s)(n), compositions of n in C_g^(s)
 *   partitions    number of partitions of n in P_g^(s)
 *   mstep         K_g^(s)(n, m)
 *   tuples        c_{g_1..g_M}^(s)(n), tuples of compositions of total size n
 * All terms come from the generating functions or the m-step recurrence, not
 * from enumeration.
 */
struct SequenceSpec {
    std::string name;
    std::vector<int> gs;
    int s = 1;
    std::optional<int> m;
};

std::vector<std::string> sequence_names();

/// Terms a(first), ..., a(first + count - 1).
std::vector<Integer> sequence_terms(const SequenceSpec& spec, int first, int count);

/// OEIS b-file text: "index value\n" per term, indices starting at `first`.
std::string to_bfile(std::span<const Integer> terms, int first);
/// Parses b-file text; blank lines and lines starting with '#' are skipped.
/// Returns (index, value) pairs in file order.
std::vector<std::pair<long, Integer>> parse_bfile(const std::string& text);

} // namespace gapcomp

#endif // GAPCOMP_SEQUENCES_HPP
