#include "gapcomp/involution.hpp"

#include "gapcomp/genfun.hpp"

#include <cstdint>
#include <stdexcept>

namespace gapcomp {

std::string to_string(const PairState& p)
{
    return "(" + to_string(p.lambda) + ", " + to_string(p.kappa) + ")";
}

bool in_pair_set(const PairState& p, const GapClass& cls)
{
    return is_gap_partition(p.lambda, cls) && is_gap_composition(p.kappa, cls);
}

PairState phi(const PairState& p, const GapClass& cls)
{
    if (!in_pair_set(p, cls))
        throw std::invalid_argument("pair " + to_string(p) + " is not in the pair set of " + to_string(cls));

    std::vector<int> lambda(p.lambda.parts().begin(), p.lambda.parts().end());
    std::vector<int> kappa(p.kappa.parts().begin(), p.kappa.parts().end());

    if (lambda.empty() && kappa.empty())
        return p;
    if (kappa.empty()) {
        kappa.push_back(lambda.back());
        lambda.pop_back();
    } else if (lambda.empty()) {
        lambda.push_back(kappa.back());
        kappa.pop_back();
    } else if (kappa.back() - lambda.back() >= cls.g()) {
        lambda.push_back(kappa.back());
        kappa.pop_back();
    } else {
        kappa.push_back(lambda.back());
        lambda.pop_back();
    }
    return PairState{Partition(std::move(lambda)), Composition(std::move(kappa))};
}

bool in_pi_m(const PairState& p, int m)
{
    return p.kappa.empty() || p.kappa.first() >= m;
}

bool in_pi_m_star(const PairState& p, int m)
{
    if (!in_pi_m(p, m))
        return false;
    if (p.kappa.empty() && (p.lambda.empty() || p.lambda.last() <= m - 1))
        return false;
    return true;
}

namespace {

constexpr std::size_t kMaxRecorded = 256;

// Weighted x^length q^size tallies, indexed [length][size].
struct Tally {
    explicit Tally(int bound) : bound(bound), cells((bound + 1) * (bound + 1), 0) {}
    std::int64_t& at(int length, int size) { return cells[length * (bound + 1) + size]; }
    int bound;
    std::vector<std::int64_t> cells;
};

class Checker {
public:
    Checker(const GapClass& cls, int bound, const PairMap& map) : map_(map), report_{cls, bound, 0, {}}
    {
        for (int m = 1; m <= bound; ++m) {
            star_.emplace_back(bound);
            excluded_.emplace_back(bound);
            full_.emplace_back(bound);
        }
    }

    void visit(const PairState& p)
    {
        const GapClass& cls = report_.cls;
        ++report_.pairs_checked;
        tally(p);

        PairState image;
        try {
            image = map_(p, cls);
        } catch (const std::exception& e) {
            record("closure", p, std::string("map threw: ") + e.what());
            return;
        }
        if (!in_pair_set(image, cls)) {
            record("closure", p, "image " + to_string(image) + " is not a valid pair");
            return;
        }
        try {
            PairState back = map_(image, cls);
            if (back != p)
                record("involution", p, "image " + to_string(image) + " maps to " + to_string(back));
        } catch (const std::exception& e) {
            record("involution", p, std::string("map threw on image: ") + e.what());
        }
        if (image.total_size() != p.total_size())
            record("size", p, "total size " + std::to_string(p.total_size()) + " -> " +
                                  std::to_string(image.total_size()));
        if (image.total_length() != p.total_length())
            record("size", p, "total length " + std::to_string(p.total_length()) + " -> " +
                                  std::to_string(image.total_length()));
        const bool fixed_point = p.lambda.empty() && p.kappa.empty();
        if (fixed_point) {
            if (image != p)
                record("weight", p, "(empty, empty) must be fixed");
        } else if (image.weight() != -p.weight()) {
            record("weight", p, "weight does not flip");
        }
        for (int m = 1; m <= report_.size_bound; ++m)
            if (in_pi_m_star(p, m) && !in_pi_m_star(image, m))
                record("pi_m", p, "leaves Pi_" + std::to_string(m) + "^* via " + to_string(image));
    }

    InvolutionReport finish()
    {
        const GapClass& cls = report_.cls;
        const int B = report_.size_bound;
        for (int m = 1; m <= B; ++m) {
            XQSeries expected =
                series_P_le_m(SeriesRequest{cls, B, B, m - 1}).negated_x();
            for (int len = 0; len <= B; ++len) {
                for (int size = 0; size <= B; ++size) {
                    const std::string where = "m=" + std::to_string(m) + " [x^" + std::to_string(len) + " q^" +
                                              std::to_string(size) + "]";
                    if (star_[m - 1].at(len, size) != 0)
                        record("pi_m", {}, "weighted sum over Pi_m^* is " +
                                               std::to_string(star_[m - 1].at(len, size)) + " at " + where);
                    if (Integer(static_cast<long>(excluded_[m - 1].at(len, size))) != expected.coeff(len, size))
                        record("pi_m", {}, "Pi_m minus Pi_m^* disagrees with P_{<=m-1}(-x,q) at " + where);
                    if (Integer(static_cast<long>(full_[m - 1].at(len, size))) != expected.coeff(len, size))
                        record("pi_m", {}, "weighted sum over Pi_m disagrees with P_{<=m-1}(-x,q) at " + where);
                }
            }
        }
        return std::move(report_);
    }

private:
    void tally(const PairState& p)
    {
        const int len = p.total_length();
        const int size = p.total_size();
        const int w = p.weight();
        for (int m = 1; m <= report_.size_bound; ++m) {
            if (!in_pi_m(p, m))
                continue;
            full_[m - 1].at(len, size) += w;
            if (in_pi_m_star(p, m))
                star_[m - 1].at(len, size) += w;
            else
                excluded_[m - 1].at(len, size) += w;
        }
    }

    void record(const std::string& property, const PairState& p, std::string detail)
    {
        if (report_.violations.size() < kMaxRecorded)
            report_.violations.push_back({property, p, std::move(detail)});
    }

    const PairMap& map_;
    InvolutionReport report_;
    std::vector<Tally> star_;
    std::vector<Tally> excluded_;
    std::vector<Tally> full_;
};

} // namespace

InvolutionReport verify_involution(const GapClass& cls, int size_bound, const PairMap& map)
{
    if (size_bound < 0)
        throw std::invalid_argument("size bound must be nonnegative");
    if (size_bound > enumeration_limit())
        throw EnumerationLimitError("involution size bound " + std::to_string(size_bound) +
                                    " exceeds the enumeration cutoff");

    std::vector<std::vector<Partition>> partitions;
    std::vector<std::vector<Composition>> compositions;
    for (int n = 0; n <= size_bound; ++n) {
        partitions.push_back(gap_partitions(n, cls));
        compositions.push_back(gap_compositions(n, cls));
    }

    Checker checker(cls, size_bound, map);
    for (int a = 0; a <= size_bound; ++a)
        for (const auto& lambda : partitions[a])
            for (int b = 0; a + b <= size_bound; ++b)
                for (const auto& kappa : compositions[b])
                    checker.visit(PairState{lambda, kappa});
    return checker.finish();
}

} // namespace gapcomp
