#ifndef GAPCOMP_INTEGER_HPP
#define GAPCOMP_INTEGER_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace gapcomp {

/// Arbitrary-precision signed integer used for every coefficient and count.
using Integer = mpz_class;

inline std::string to_string(const Integer& v) { return v.get_str(10); }

/// Parses a base-10 integer with optional leading '-'. Throws on malformed input.
inline Integer parse_integer(std::string_view text)
{
    std::string s(text);
    Integer out;
    if (s.empty() || out.set_str(s, 10) != 0)
        throw std::invalid_argument("not an integer: '" + s + "'");
    return out;
}

} // namespace gapcomp

#endif // GAPCOMP_INTEGER_HPP
