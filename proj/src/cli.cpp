#include "gapcomp/cli.hpp"

#include "gapcomp/enumerate.hpp"
#include "gapcomp/genfun.hpp"
#include "gapcomp/involution.hpp"
#include "gapcomp/io.hpp"
#include "gapcomp/reciprocity.hpp"
#include "gapcomp/sequences.hpp"
#include "gapcomp/tally.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

namespace gapcomp::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<int> parse_g_list(const std::string& text)
{
    std::vector<int> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size())
                throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw UsageError("--g: '" + item + "' is not an integer");
        }
    }
    return out;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool looks_like_json(const std::string& text)
{
    auto pos = text.find_first_not_of(" \t\r\n");
    return pos != std::string::npos && text[pos] == '{';
}

nlohmann::json parse_json(const std::string& text, const std::string& path)
{
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw UsageError("'" + path + "' is not valid JSON: " + e.what());
    }
}

std::string join(std::span<const Integer> values, const char* sep)
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            out += sep;
        out += to_string(values[i]);
    }
    return out;
}

std::string pretty_matrix(const Triangle& t)
{
    std::vector<std::size_t> width(t.dim(), 1);
    for (int i = 1; i <= t.dim(); ++i)
        for (int j = 1; j <= t.dim(); ++j)
            width[j - 1] = std::max(width[j - 1], to_string(t.at(i, j)).size());
    std::ostringstream os;
    for (int i = 1; i <= t.dim(); ++i) {
        for (int j = 1; j <= t.dim(); ++j) {
            std::string cell = to_string(t.at(i, j));
            if (j > 1)
                os << ' ';
            os << std::string(width[j - 1] - cell.size(), ' ') << cell;
        }
        os << '\n';
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// verify

struct Verdict {
    bool pass;
    std::string detail;
};

class SuiteRunner {
public:
    explicit SuiteRunner(std::ostream& out) : out_(out) {}

    void run(const std::string& suite, const std::string& label, const std::function<Verdict()>& cell)
    {
        Verdict v = cell();
        (v.pass ? passed_ : failed_)++;
        out_ << (v.pass ? "PASS" : "FAIL") << "  " << suite << "  " << label;
        if (!v.detail.empty())
            out_ << "  " << v.detail;
        out_ << '\n';
    }

    int finish()
    {
        out_ << "summary: " << passed_ << " passed, " << failed_ << " failed\n";
        return failed_ ? kIdentityViolated : kOk;
    }

private:
    std::ostream& out_;
    int passed_ = 0;
    int failed_ = 0;
};

std::string cls_label(int g, int s) { return "g=" + std::to_string(g) + " s=" + std::to_string(s); }

std::string cell_name(const std::pair<int, int>& c)
{
    return "(" + std::to_string(c.first) + "," + std::to_string(c.second) + ")";
}

Verdict inverse_verdict(const InverseCheck& r, bool report_mu, bool report_gamma)
{
    if (r.holds)
        return {true, ""};
    std::string detail;
    if (r.failure)
        detail = r.failure->product + " cell " + cell_name({r.failure->row, r.failure->col}) + " = " +
                 to_string(r.failure->value);
    if (report_mu && r.mu_suspect)
        detail += "; mu entry " + cell_name(*r.mu_suspect) + " disagrees with the inverse of gamma";
    if (report_gamma && r.gamma_suspect)
        detail += "; gamma entry " + cell_name(*r.gamma_suspect) + " disagrees with the inverse of mu";
    return {false, detail};
}

Verdict identity_verdict(const IdentityCheck& r)
{
    if (r.holds)
        return {true, ""};
    const int d = *r.first_failing_degree;
    return {false, "first failing coefficient q^" + std::to_string(d) + " (got " + to_string(r.lhs[d]) + ")"};
}

Verdict xq_verdict(const std::optional<XQIndex>& where, const char* what)
{
    if (!where)
        return {true, ""};
    return {false, std::string(what) + " differs at [x^" + std::to_string(where->layer) + " q^" +
                       std::to_string(where->degree) + "]"};
}

struct VerifyOptions {
    std::string suite;
    int g = 0, s = 1, m = 1, N = 40, dim = 30, bound = 14;
    std::string from_file;
    std::string kind;
    CLI::Option* g_opt = nullptr;
    CLI::Option* s_opt = nullptr;
    CLI::Option* m_opt = nullptr;
    CLI::Option* N_opt = nullptr;
    CLI::Option* dim_opt = nullptr;
    CLI::Option* bound_opt = nullptr;
    CLI::Option* file_opt = nullptr;

    std::vector<int> range(CLI::Option* opt, int value, int lo, int hi) const
    {
        if (opt->count())
            return {value};
        std::vector<int> out;
        for (int v = lo; v <= hi; ++v)
            out.push_back(v);
        return out;
    }
};

void suite_inverse(const VerifyOptions& o, SuiteRunner& runner)
{
    const int dim = o.dim;
    for (int g : o.range(o.g_opt, o.g, 1, 4)) {
        if (g < 1)
            throw UsageError("inverse: mu and gamma are mutual inverses only for g >= 1");
        for (int s : o.range(o.s_opt, o.s, 1, 3))
            runner.run("inverse", cls_label(g, s) + " dim=" + std::to_string(dim),
                       [&] { return inverse_verdict(check_inverse(GapClass(g, s), dim), true, true); });
    }
}

void suite_kidentity(const VerifyOptions& o, SuiteRunner& runner)
{
    for (int g : o.range(o.g_opt, o.g, 0, 4))
        for (int s : o.range(o.s_opt, o.s, 1, 3))
            for (int m : o.range(o.m_opt, o.m, 1, 8))
                runner.run("kidentity", cls_label(g, s) + " m=" + std::to_string(m) + " N=" + std::to_string(o.N),
                           [&] { return identity_verdict(verify_K_identity(GapClass(g, s), m, o.N)); });
}

void suite_gm(const VerifyOptions& o, SuiteRunner& runner)
{
    constexpr int kEnumerationOrder = 12;
    for (int g : o.range(o.g_opt, o.g, 0, 4)) {
        for (int s : o.range(o.s_opt, o.s, 1, 3)) {
            GapClass cls(g, s);
            const int L = o.N / s;
            for (int m : o.range(o.m_opt, o.m, 1, 8)) {
                runner.run("gm", cls_label(g, s) + " m=" + std::to_string(m) + " N=" + std::to_string(o.N), [&] {
                    return xq_verdict(verify_Gm_identity(cls, m, L, o.N).first_failure, "P(-x,q)*C_ge_m");
                });
                const int n = std::min(o.N, kEnumerationOrder);
                runner.run("gm-enum", cls_label(g, s) + " m=" + std::to_string(m) + " n<=" + std::to_string(n), [&] {
                    SeriesRequest req{cls, n, n, m};
                    return xq_verdict(first_difference(series_C_ge_m(req), tally_gap_compositions(cls, n, n, m)),
                                      "C_ge_m vs enumeration");
                });
            }
        }
    }
}

void suite_euler(const VerifyOptions& o, SuiteRunner& runner)
{
    for (auto [g, s] : {std::pair{1, 1}, std::pair{0, 1}}) {
        if (o.g_opt->count() && o.g != g)
            continue;
        for (int m : o.range(o.m_opt, o.m, 0, 12))
            runner.run("euler", cls_label(g, s) + " m=" + std::to_string(m) + " N=" + std::to_string(o.N),
                       [&] { return identity_verdict(verify_euler(GapClass(g, s), m, o.N)); });
    }
}

void suite_involution(const VerifyOptions& o, SuiteRunner& runner)
{
    for (int g : o.range(o.g_opt, o.g, 0, 3))
        for (int s : o.range(o.s_opt, o.s, 1, 2))
            runner.run("involution", cls_label(g, s) + " size<=" + std::to_string(o.bound), [&] {
                auto report = verify_involution(GapClass(g, s), o.bound);
                if (report.ok())
                    return Verdict{true, std::to_string(report.pairs_checked) + " pairs"};
                const auto& v = report.violations.front();
                return Verdict{false, v.property + ": " + to_string(v.pair) + " " + v.detail};
            });
}

void verify_from_file(const VerifyOptions& o, SuiteRunner& runner)
{
    const std::string text = read_file(o.from_file);
    const std::string label = "file=" + o.from_file;

    if (o.suite == "inverse") {
        MatrixDocument doc = [&] {
            if (looks_like_json(text))
                return triangle_from_json(parse_json(text, o.from_file));
            if (o.kind.empty() || !o.g_opt->count())
                throw UsageError("CSV input needs --kind and --g (and optionally --s)");
            return MatrixDocument{MatrixMeta{o.kind, {o.g}, o.s}, triangle_from_csv(text)};
        }();
        const auto& meta = doc.meta;
        if (meta.kind != "mu" && meta.kind != "gamma")
            throw UsageError("inverse: file must hold a mu or gamma matrix, not '" + meta.kind + "'");
        if (meta.gs.size() != 1 || meta.gs.front() < 1)
            throw UsageError("inverse: needs a single g >= 1");
        GapClass cls(meta.gs.front(), meta.s);
        const int dim = doc.matrix.dim();
        const bool file_is_mu = meta.kind == "mu";
        runner.run("inverse", label + " kind=" + meta.kind + " " + cls_label(cls.g(), cls.s()) + " dim=" +
                                  std::to_string(dim),
                   [&] {
                       auto r = file_is_mu ? check_inverse_pair(doc.matrix, build_gamma(cls, dim))
                                           : check_inverse_pair(build_mu(cls, dim), doc.matrix);
                       return inverse_verdict(r, file_is_mu, !file_is_mu);
                   });
    } else if (o.suite == "kidentity") {
        if (!o.g_opt->count() || !o.m_opt->count())
            throw UsageError("kidentity --from-file needs --g, --m (and optionally --s)");
        std::vector<Integer> values;
        for (auto& [index, value] : parse_bfile(text)) {
            if (index != static_cast<long>(values.size()))
                throw UsageError("b-file must list K(n,m) for n = 0, 1, 2, ... in order");
            values.push_back(value);
        }
        if (values.empty())
            throw UsageError("b-file is empty");
        runner.run("kidentity", label + " " + cls_label(o.g, o.s) + " m=" + std::to_string(o.m),
                   [&] { return identity_verdict(verify_K_identity(GapClass(o.g, o.s), o.m, values)); });
    } else if (o.suite == "gm") {
        SeriesDocument doc = series_from_json(parse_json(text, o.from_file));
        if (doc.meta.at_x || (doc.meta.which != "Cge" && doc.meta.which != "C"))
            throw UsageError("gm: file must hold a bivariate C or Cge series");
        const int m = doc.meta.which == "C" ? 1 : doc.meta.m.value_or(0);
        if (m < 1)
            throw UsageError("gm: Cge series needs m >= 1");
        runner.run("gm", label + " " + cls_label(doc.meta.g, doc.meta.s) + " m=" + std::to_string(m), [&] {
            return xq_verdict(verify_Gm_identity(GapClass(doc.meta.g, doc.meta.s), m, doc.bivariate).first_failure,
                              "P(-x,q)*C_ge_m");
        });
    } else if (o.suite == "euler") {
        SeriesDocument doc = series_from_json(parse_json(text, o.from_file));
        if (doc.meta.which != "Ple" || doc.meta.at_x != -1 || !doc.meta.m)
            throw UsageError("euler: file must hold a Ple series evaluated at x = -1");
        runner.run("euler", label + " " + cls_label(doc.meta.g, doc.meta.s) + " m=" + std::to_string(*doc.meta.m),
                   [&] {
                       return identity_verdict(
                           verify_euler(GapClass(doc.meta.g, doc.meta.s), *doc.meta.m, doc.univariate));
                   });
    } else {
        throw UsageError("--from-file is supported for inverse, kidentity, gm and euler");
    }
}

int cmd_verify(const VerifyOptions& o, std::ostream& out)
{
    SuiteRunner runner(out);
    if (o.file_opt->count()) {
        verify_from_file(o, runner);
        return runner.finish();
    }
    const bool all = o.suite == "all";
    if (all || o.suite == "inverse")
        suite_inverse(o, runner);
    if (all || o.suite == "kidentity")
        suite_kidentity(o, runner);
    if (all || o.suite == "gm")
        suite_gm(o, runner);
    if (all || o.suite == "euler")
        suite_euler(o, runner);
    if (all || o.suite == "involution")
        suite_involution(o, runner);
    return runner.finish();
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact generating functions, counts and reciprocal matrices for gap-constrained "
                 "partitions and compositions"};
    app.name(args.empty() ? "gapcomp" : args.front());
    app.require_subcommand(1);

    // count
    std::string count_kind;
    int count_n = 0, count_g = 0, count_s = 1;
    int max_part = 0, min_first = 0, m_step = 0, length = 0;
    bool list = false;
    auto* count = app.add_subcommand("count", "Count (or list) gap partitions or compositions of n by enumeration");
    count->add_option("kind", count_kind, "partitions | compositions")
        ->required()
        ->check(CLI::IsMember({"partitions", "compositions"}));
    count->add_option("--n", count_n, "Size")->required()->check(CLI::NonNegativeNumber);
    count->add_option("--g", count_g, "Gap bound")->required()->check(CLI::NonNegativeNumber);
    count->add_option("--s", count_s, "Minimum part")->check(CLI::PositiveNumber);
    auto* max_part_opt = count->add_option("--max-part", max_part, "Largest part at most this (partitions)");
    auto* min_first_opt = count->add_option("--min-first", min_first, "First part at least this (compositions)");
    auto* m_step_opt = count->add_option("--m-step", m_step, "Keep only m-step compositions")
                           ->check(CLI::NonNegativeNumber);
    auto* length_opt = count->add_option("--length", length, "Exact number of parts")->check(CLI::NonNegativeNumber);
    count->add_flag("--list", list, "Print the objects instead of the count");

    // series
    std::string which;
    int series_g = 0, series_s = 1, series_N = 0, series_L = 0, series_m = 0;
    long at_x = 0;
    std::string series_format = "pretty";
    auto* series = app.add_subcommand("series", "Expand a generating function");
    series->add_option("which", which, "P | Ple | C | Cge")->required()->check(CLI::IsMember({"P", "Ple", "C", "Cge"}));
    series->add_option("--g", series_g, "Gap bound")->required()->check(CLI::NonNegativeNumber);
    series->add_option("--s", series_s, "Minimum part")->check(CLI::PositiveNumber);
    series->add_option("--N", series_N, "Truncation order in q")->required()->check(CLI::NonNegativeNumber);
    auto* L_opt = series->add_option("--L", series_L, "Truncation order in x (default N)")->check(CLI::NonNegativeNumber);
    auto* series_m_opt = series->add_option("--m", series_m, "Bound for Ple (largest part) and Cge (first part)");
    auto* at_x_opt = series->add_option("--at-x", at_x, "Substitute this integer for x");
    series->add_option("--format", series_format, "pretty | json | csv | bfile")
        ->check(CLI::IsMember({"pretty", "json", "csv", "bfile"}));

    // matrix
    std::string matrix_which, matrix_g;
    int matrix_s = 1, matrix_dim = 0;
    std::string matrix_format = "pretty";
    auto* matrix = app.add_subcommand("matrix", "Build mu, gamma, or a product of gammas");
    matrix->add_option("which", matrix_which, "mu | gamma | product")
        ->required()
        ->check(CLI::IsMember({"mu", "gamma", "product"}));
    matrix->add_option("--g", matrix_g, "Gap bound, or a comma-separated list for product")->required();
    matrix->add_option("--s", matrix_s, "Minimum part")->check(CLI::PositiveNumber);
    matrix->add_option("--dim", matrix_dim, "Number of rows and columns")->required()->check(CLI::NonNegativeNumber);
    matrix->add_option("--format", matrix_format, "pretty | csv | json")
        ->check(CLI::IsMember({"pretty", "csv", "json"}));

    // verify
    VerifyOptions vo;
    auto* verify = app.add_subcommand("verify", "Check identities; exit 0 if all hold, 1 otherwise");
    verify->add_option("suite", vo.suite, "inverse | kidentity | gm | euler | involution | all")
        ->required()
        ->check(CLI::IsMember({"inverse", "kidentity", "gm", "euler", "involution", "all"}));
    vo.g_opt = verify->add_option("--g", vo.g, "Restrict to this g")->check(CLI::NonNegativeNumber);
    vo.s_opt = verify->add_option("--s", vo.s, "Restrict to this s")->check(CLI::PositiveNumber);
    vo.m_opt = verify->add_option("--m", vo.m, "Restrict to this m")->check(CLI::NonNegativeNumber);
    vo.N_opt = verify->add_option("--N", vo.N, "Truncation order (default 40)")->check(CLI::NonNegativeNumber);
    vo.dim_opt = verify->add_option("--dim", vo.dim, "Matrix dimension (default 30)")->check(CLI::NonNegativeNumber);
    vo.bound_opt =
        verify->add_option("--bound", vo.bound, "Involution size bound (default 14)")->check(CLI::NonNegativeNumber);
    vo.file_opt = verify->add_option("--from-file", vo.from_file, "Check data read from a file");
    verify->add_option("--kind", vo.kind, "Matrix kind for CSV input")->check(CLI::IsMember({"mu", "gamma"}));

    // oeis
    std::string seq_name, seq_g = "1";
    int seq_s = 1, seq_m = 0, seq_count = 10, seq_offset = 0;
    auto* oeis = app.add_subcommand("oeis", "Print a sequence in b-file format");
    oeis->add_option("sequence", seq_name, "compositions | partitions | mstep | tuples")->required();
    oeis->add_option("--g", seq_g, "Gap bound, or a comma-separated list for tuples");
    oeis->add_option("--s", seq_s, "Minimum part")->check(CLI::PositiveNumber);
    auto* seq_m_opt = oeis->add_option("--m", seq_m, "Step bound for mstep")->check(CLI::NonNegativeNumber);
    oeis->add_option("--count", seq_count, "Number of terms")->check(CLI::NonNegativeNumber);
    oeis->add_option("--offset", seq_offset, "Index of the first term")->check(CLI::NonNegativeNumber);

    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        const CLI::App* target = &app;
        for (const auto* sub : app.get_subcommands())
            target = sub;
        out << target->help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (count->parsed()) {
            GapClass cls(count_g, count_s);
            if (count_kind == "partitions") {
                if (min_first_opt->count())
                    throw UsageError("--min-first applies to compositions only");
                if (m_step_opt->count())
                    throw UsageError("--m-step applies to compositions only");
                PartitionFilter filter;
                if (max_part_opt->count())
                    filter.max_part = max_part;
                if (length_opt->count())
                    filter.length = length;
                if (list)
                    for (const auto& p : gap_partitions(count_n, cls, filter))
                        out << to_string(p) << '\n';
                else
                    out << count_gap_partitions(count_n, cls, filter) << '\n';
            } else {
                if (max_part_opt->count())
                    throw UsageError("--max-part applies to partitions only");
                CompositionFilter filter;
                if (min_first_opt->count())
                    filter.min_first = min_first;
                if (m_step_opt->count())
                    filter.m_step = m_step;
                if (length_opt->count())
                    filter.length = length;
                if (list)
                    for (const auto& c : gap_compositions(count_n, cls, filter))
                        out << to_string(c) << '\n';
                else
                    out << count_gap_compositions(count_n, cls, filter) << '\n';
            }
            return kOk;
        }

        if (series->parsed()) {
            const bool needs_m = which == "Ple" || which == "Cge";
            if (needs_m && !series_m_opt->count())
                throw UsageError("--m is required for " + which);
            if (!needs_m && series_m_opt->count())
                throw UsageError("--m applies to Ple and Cge only");
            if (which == "Ple" && series_m < 0)
                throw UsageError("--m must be >= 0 for Ple");
            if (which == "Cge" && series_m < 1)
                throw UsageError("--m must be >= 1 for Cge");
            if (series_format == "bfile" && !at_x_opt->count())
                throw UsageError("--format bfile needs --at-x (b-files hold one-dimensional sequences)");
            SeriesRequest req{GapClass(series_g, series_s), series_N, L_opt->count() ? series_L : series_N,
                              needs_m ? std::optional<int>(series_m) : std::nullopt};
            XQSeries result = which == "P"     ? series_P(req)
                              : which == "Ple" ? series_P_le_m(req)
                              : which == "C"   ? series_C(req)
                                               : series_C_ge_m(req);
            SeriesMeta meta{which, series_g, series_s, req.m, std::nullopt};
            if (at_x_opt->count()) {
                meta.at_x = at_x;
                TruncatedSeries flat = result.eval_x(at_x);
                if (series_format == "json")
                    out << series_to_json(flat, meta).dump() << '\n';
                else if (series_format == "bfile")
                    out << to_bfile(flat.coefficients(), 0);
                else
                    out << join(flat.coefficients(), series_format == "csv" ? "," : " ") << '\n';
            } else {
                if (series_format == "json") {
                    out << series_to_json(result, meta).dump() << '\n';
                } else {
                    for (int l = 0; l <= result.x_order(); ++l)
                        out << join(result.layer(l).coefficients(), series_format == "csv" ? "," : " ") << '\n';
                }
            }
            return kOk;
        }

        if (matrix->parsed()) {
            auto gs = parse_g_list(matrix_g);
            Triangle t(0);
            if (matrix_which == "product") {
                t = gamma_product(gs, matrix_s, matrix_dim);
            } else {
                if (gs.size() != 1)
                    throw UsageError("--g: " + matrix_which + " takes a single g");
                if (matrix_which == "mu") {
                    if (gs.front() < 1)
                        throw UsageError("mu is only defined for g >= 1 (its inverse relation with gamma "
                                         "requires a positive gap bound)");
                    t = build_mu(GapClass(gs.front(), matrix_s), matrix_dim);
                } else {
                    t = build_gamma(GapClass(gs.front(), matrix_s), matrix_dim);
                }
            }
            if (matrix_format == "csv")
                out << triangle_to_csv(t);
            else if (matrix_format == "json")
                out << triangle_to_json(t, MatrixMeta{matrix_which, gs, matrix_s}).dump() << '\n';
            else
                out << pretty_matrix(t);
            return kOk;
        }

        if (verify->parsed())
            return cmd_verify(vo, out);

        if (oeis->parsed()) {
            SequenceSpec spec{seq_name, parse_g_list(seq_g), seq_s,
                              seq_m_opt->count() ? std::optional<int>(seq_m) : std::nullopt};
            auto terms = sequence_terms(spec, seq_offset, seq_count);
            out << to_bfile(terms, seq_offset);
            return kOk;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const EnumerationLimitError& e) {
        err << "error: " << e.what() << " (raise GAPCOMP_ENUM_LIMIT to allow it)\n";
        return kUsage;
    } catch (const FormatError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

} // namespace gapcomp::cli
