#include "gapcomp/io.hpp"

#include <sstream>

namespace gapcomp {

nlohmann::json integer_to_json(const Integer& v)
{
    if (v.fits_slong_p())
        return static_cast<std::int64_t>(v.get_si());
    return to_string(v);
}

Integer integer_from_json(const nlohmann::json& j)
{
    if (j.is_number_integer())
        return Integer(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) {
        try {
            return parse_integer(j.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw FormatError(e.what());
        }
    }
    throw FormatError("expected an integer, got " + j.dump());
}

std::string triangle_to_csv(const Triangle& t)
{
    std::ostringstream os;
    for (int i = 1; i <= t.dim(); ++i) {
        for (int j = 1; j <= t.dim(); ++j)
            os << (j > 1 ? "," : "") << to_string(t.at(i, j));
        os << '\n';
    }
    return os.str();
}

Triangle triangle_from_csv(std::string_view text)
{
    std::vector<std::vector<Integer>> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        std::vector<Integer> row;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ','))
            try {
                row.push_back(parse_integer(cell));
            } catch (const std::invalid_argument& e) {
                throw FormatError("row " + std::to_string(rows.size() + 1) + ": " + e.what());
            }
        rows.push_back(std::move(row));
    }
    const int dim = static_cast<int>(rows.size());
    Triangle t(dim);
    for (int i = 1; i <= dim; ++i) {
        if (static_cast<int>(rows[i - 1].size()) != dim)
            throw FormatError("row " + std::to_string(i) + " has " + std::to_string(rows[i - 1].size()) +
                              " cells, expected " + std::to_string(dim));
        for (int j = 1; j <= dim; ++j) {
            try {
                t.set(i, j, rows[i - 1][j - 1]);
            } catch (const std::invalid_argument& e) {
                throw FormatError(e.what());
            }
        }
    }
    return t;
}

nlohmann::json triangle_to_json(const Triangle& t, const MatrixMeta& meta)
{
    nlohmann::json entries = nlohmann::json::array();
    for (int i = 1; i <= t.dim(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 1; j <= t.dim(); ++j)
            row.push_back(integer_to_json(t.at(i, j)));
        entries.push_back(std::move(row));
    }
    nlohmann::json doc;
    doc["kind"] = meta.kind;
    if (meta.kind == "product")
        doc["g"] = meta.gs;
    else
        doc["g"] = meta.gs.empty() ? 0 : meta.gs.front();
    doc["s"] = meta.s;
    doc["dim"] = t.dim();
    doc["entries"] = std::move(entries);
    return doc;
}

MatrixDocument triangle_from_json(const nlohmann::json& j)
{
    try {
        MatrixMeta meta;
        meta.kind = j.at("kind").get<std::string>();
        const auto& g = j.at("g");
        if (g.is_array())
            meta.gs = g.get<std::vector<int>>();
        else
            meta.gs = {g.get<int>()};
        meta.s = j.at("s").get<int>();
        const int dim = j.at("dim").get<int>();
        const auto& entries = j.at("entries");
        if (!entries.is_array() || static_cast<int>(entries.size()) != dim)
            throw FormatError("entries must be an array of " + std::to_string(dim) + " rows");
        Triangle t(dim);
        for (int i = 1; i <= dim; ++i) {
            const auto& row = entries[i - 1];
            if (!row.is_array() || static_cast<int>(row.size()) != dim)
                throw FormatError("row " + std::to_string(i) + " must have " + std::to_string(dim) + " cells");
            for (int c = 1; c <= dim; ++c)
                t.set(i, c, integer_from_json(row[c - 1]));
        }
        return MatrixDocument{std::move(meta), std::move(t)};
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("malformed matrix document: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

namespace {

nlohmann::json coefficients_to_json(const TruncatedSeries& series)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& c : series.coefficients())
        out.push_back(integer_to_json(c));
    return out;
}

TruncatedSeries coefficients_from_json(const nlohmann::json& j, int q_order)
{
    if (!j.is_array() || static_cast<int>(j.size()) != q_order + 1)
        throw FormatError("expected " + std::to_string(q_order + 1) + " coefficients");
    std::vector<Integer> coeffs;
    coeffs.reserve(j.size());
    for (const auto& c : j)
        coeffs.push_back(integer_from_json(c));
    return TruncatedSeries(std::move(coeffs));
}

nlohmann::json meta_to_json(const SeriesMeta& meta, int q_order)
{
    nlohmann::json doc;
    doc["which"] = meta.which;
    doc["g"] = meta.g;
    doc["s"] = meta.s;
    if (meta.m)
        doc["m"] = *meta.m;
    if (meta.at_x)
        doc["at_x"] = *meta.at_x;
    doc["q_order"] = q_order;
    return doc;
}

} // namespace

nlohmann::json series_to_json(const TruncatedSeries& series, const SeriesMeta& meta)
{
    nlohmann::json doc = meta_to_json(meta, series.order());
    doc["coefficients"] = coefficients_to_json(series);
    return doc;
}

nlohmann::json series_to_json(const XQSeries& series, const SeriesMeta& meta)
{
    nlohmann::json doc = meta_to_json(meta, series.q_order());
    doc["x_order"] = series.x_order();
    nlohmann::json layers = nlohmann::json::array();
    for (int l = 0; l <= series.x_order(); ++l)
        layers.push_back(coefficients_to_json(series.layer(l)));
    doc["layers"] = std::move(layers);
    return doc;
}

SeriesDocument series_from_json(const nlohmann::json& j)
{
    try {
        SeriesDocument doc;
        doc.meta.which = j.at("which").get<std::string>();
        doc.meta.g = j.at("g").get<int>();
        doc.meta.s = j.at("s").get<int>();
        if (j.contains("m") && !j.at("m").is_null())
            doc.meta.m = j.at("m").get<int>();
        if (j.contains("at_x") && !j.at("at_x").is_null())
            doc.meta.at_x = j.at("at_x").get<long>();
        const int q_order = j.at("q_order").get<int>();
        if (q_order < 0)
            throw FormatError("q_order must be nonnegative");
        if (doc.meta.at_x) {
            doc.univariate = coefficients_from_json(j.at("coefficients"), q_order);
        } else {
            const int x_order = j.at("x_order").get<int>();
            const auto& layers = j.at("layers");
            if (x_order < 0 || !layers.is_array() || static_cast<int>(layers.size()) != x_order + 1)
                throw FormatError("expected " + std::to_string(x_order + 1) + " layers");
            std::vector<TruncatedSeries> parsed;
            for (const auto& layer : layers)
                parsed.push_back(coefficients_from_json(layer, q_order));
            doc.bivariate = XQSeries(std::move(parsed));
        }
        return doc;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("malformed series document: ") + e.what());
    }
}

} // namespace gapcomp
