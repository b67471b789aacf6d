#ifndef GAPCOMP_IO_HPP
#define GAPCOMP_IO_HPP

#include "gapcomp/qseries.hpp"
#include "gapcomp/reciprocity.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gapcomp {

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Labels carried alongside an exported matrix.
struct MatrixMeta {
    std::string kind; // "mu", "gamma" or "product"
    std::vector<int> gs;
    int s = 1;
};

struct MatrixDocument {
    MatrixMeta meta;
    Triangle matrix;
};

/// Integers that fit in a signed 64-bit value become JSON numbers, others decimal strings.
nlohmann::json integer_to_json(const Integer& v);
/// Accepts a JSON integer or a decimal string.
Integer integer_from_json(const nlohmann::json& j);

/// Row-major, comma-separated, one row per line, all dim x dim cells, no header.
std::string triangle_to_csv(const Triangle& t);
Triangle triangle_from_csv(std::string_view text);

/// {"kind", "g", "s", "dim", "entries"}; "g" is an array for products, a number otherwise.
nlohmann::json triangle_to_json(const Triangle& t, const MatrixMeta& meta);
MatrixDocument triangle_from_json(const nlohmann::json& j);

/// Labels carried alongside an exported generating function.
struct SeriesMeta {
    std::string which; // "P", "Ple", "C" or "Cge"
    int g = 0;
    int s = 1;
    std::optional<int> m;
    /// Set when x was replaced by this integer before export.
    std::optional<long> at_x;
};

/// A bivariate series, or a univariate one when meta.at_x is set.
struct SeriesDocument {
    SeriesMeta meta;
    XQSeries bivariate;
    TruncatedSeries univariate;
};

/// {"which", "g", "s", "m"?, "at_x"?, "q_order", ...} with "coefficients" for a
/// univariate series or "x_order" and "layers" (one array per power of x) otherwise.
nlohmann::json series_to_json(const TruncatedSeries& series, const SeriesMeta& meta);
nlohmann::json series_to_json(const XQSeries& series, const SeriesMeta& meta);
SeriesDocument series_from_json(const nlohmann::json& j);

} // namespace gapcomp

#endif // GAPCOMP_IO_HPP
