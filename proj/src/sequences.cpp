#include "gapcomp/sequences.hpp"

#include "gapcomp/enumerate.hpp"
#include "gapcomp/genfun.hpp"
#include "gapcomp/qseries.hpp"

#include <sstream>

namespace gapcomp {

namespace {

int single_g(const SequenceSpec& spec)
{
    if (spec.gs.size() != 1)
        throw std::invalid_argument("sequence '" + spec.name + "' takes exactly one g");
    return spec.gs.front();
}

// Univariate C_g^(s)(1, q) = 1 / P_g^(s)(-1, q).
TruncatedSeries compositions_at_one(const GapClass& cls, int order)
{
    SeriesRequest req{cls, order, order, std::nullopt};
    return invert(series_P(req).eval_x(-1));
}

} // namespace

std::vector<std::string> sequence_names()
{
    return {"compositions", "mstep", "partitions", "tuples"};
}

std::vector<Integer> sequence_terms(const SequenceSpec& spec, int first, int count)
{
    if (first < 0 || count < 0)
        throw std::invalid_argument("first index and count must be nonnegative");
    if (count == 0)
        return {};
    const int last = first + count - 1;

    TruncatedSeries series(0);
    if (spec.name == "compositions") {
        series = compositions_at_one(GapClass(single_g(spec), spec.s), last);
    } else if (spec.name == "partitions") {
        GapClass cls(single_g(spec), spec.s);
        series = series_P(SeriesRequest{cls, last, last, std::nullopt}).eval_x(1);
    } else if (spec.name == "mstep") {
        if (!spec.m)
            throw std::invalid_argument("sequence 'mstep' needs m");
        auto row = count_m_step_row(last, *spec.m, GapClass(single_g(spec), spec.s));
        return std::vector<Integer>(row.begin() + first, row.end());
    } else if (spec.name == "tuples") {
        series = TruncatedSeries::one(last);
        for (int g : spec.gs)
            series = series * compositions_at_one(GapClass(g, spec.s), last);
    } else {
        throw UnknownSequenceError("unknown sequence '" + spec.name + "'");
    }
    auto coeffs = series.coefficients();
    return std::vector<Integer>(coeffs.begin() + first, coeffs.end());
}

std::string to_bfile(std::span<const Integer> terms, int first)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < terms.size(); ++i)
        os << first + static_cast<long>(i) << ' ' << to_string(terms[i]) << '\n';
    return os.str();
}

std::vector<std::pair<long, Integer>> parse_bfile(const std::string& text)
{
    std::vector<std::pair<long, Integer>> out;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line.front() == '#')
            continue;
        std::istringstream fields(line);
        std::string index, value, extra;
        if (!(fields >> index >> value) || (fields >> extra))
            throw std::invalid_argument("b-file line " + std::to_string(line_no) + " is not 'index value'");
        out.emplace_back(parse_integer(index).get_si(), parse_integer(value));
    }
    return out;
}

} // namespace gapcomp
