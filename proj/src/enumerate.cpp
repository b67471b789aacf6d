#include "gapcomp/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace gapcomp {

GapClass::GapClass(int g, int s) : g_(g), s_(s)
{
    if (g < 0)
        throw std::invalid_argument("gap bound g must be nonnegative, got " + std::to_string(g));
    if (s < 1)
        throw std::invalid_argument("minimum part s must be positive, got " + std::to_string(s));
}

std::string to_string(const GapClass& cls)
{
    return "(g=" + std::to_string(cls.g()) + ",s=" + std::to_string(cls.s()) + ")";
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] < parts_[i - 1])
            throw std::invalid_argument("partition parts must be nondecreasing");
    }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (int p : parts_)
        if (p < 1)
            throw std::invalid_argument("composition parts must be positive");
}

int Composition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

namespace {

std::string parts_string(std::span<const int> parts)
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts.size(); ++i)
        os << (i ? "," : "") << parts[i];
    os << ")";
    return os.str();
}

std::atomic<int>& limit_storage()
{
    static std::atomic<int> limit = [] {
        if (const char* env = std::getenv("GAPCOMP_ENUM_LIMIT")) {
            char* end = nullptr;
            long v = std::strtol(env, &end, 10);
            if (end != env && *end == '\0' && v >= 0 && v <= 100000)
                return static_cast<int>(v);
        }
        return 64;
    }();
    return limit;
}

void check_limit(int n)
{
    if (n > enumeration_limit())
        throw EnumerationLimitError("enumeration of size " + std::to_string(n) + " exceeds the cutoff " +
                                    std::to_string(enumeration_limit()));
}

struct PartitionWalker {
    const GapClass& cls;
    const PartitionFilter& filter;
    const std::function<void(std::span<const int>)>& visit;
    std::vector<int> parts;

    void walk(int remaining)
    {
        if (remaining == 0) {
            if (!filter.length || *filter.length == static_cast<int>(parts.size()))
                visit(parts);
            return;
        }
        if (filter.length && static_cast<int>(parts.size()) >= *filter.length)
            return;
        int lo = parts.empty() ? cls.s() : std::max(cls.s(), parts.back() + cls.g());
        int hi = remaining;
        if (filter.max_part)
            hi = std::min(hi, *filter.max_part);
        for (int p = lo; p <= hi; ++p) {
            parts.push_back(p);
            walk(remaining - p);
            parts.pop_back();
        }
    }
};

struct CompositionWalker {
    const GapClass& cls;
    const CompositionFilter& filter;
    const std::function<void(std::span<const int>)>& visit;
    std::vector<int> parts;

    void walk(int remaining, int prefix)
    {
        if (remaining == 0) {
            if (!filter.length || *filter.length == static_cast<int>(parts.size()))
                visit(parts);
            return;
        }
        if (filter.length && static_cast<int>(parts.size()) >= *filter.length)
            return;
        int lo = cls.s();
        if (parts.empty()) {
            if (filter.min_first)
                lo = std::max(lo, *filter.min_first);
        } else {
            lo = std::max(lo, parts.back() - (cls.g() - 1));
        }
        int hi = remaining;
        if (filter.m_step)
            hi = std::min(hi, *filter.m_step + prefix);
        for (int p = lo; p <= hi; ++p) {
            parts.push_back(p);
            walk(remaining - p, prefix + p);
            parts.pop_back();
        }
    }
};

} // namespace

std::string to_string(const Partition& p) { return parts_string(p.parts()); }
std::string to_string(const Composition& c) { return parts_string(c.parts()); }

bool is_gap_partition(const Partition& p, const GapClass& cls)
{
    auto parts = p.parts();
    if (parts.empty())
        return true;
    if (parts.front() < cls.s())
        return false;
    for (std::size_t i = 1; i < parts.size(); ++i)
        if (parts[i] - parts[i - 1] < cls.g())
            return false;
    return true;
}

bool is_gap_composition(const Composition& c, const GapClass& cls)
{
    auto parts = c.parts();
    if (parts.empty())
        return true;
    if (parts.front() < cls.s())
        return false;
    for (std::size_t i = 1; i < parts.size(); ++i) {
        if (parts[i] < cls.s())
            return false;
        if (parts[i] - parts[i - 1] < -(cls.g() - 1))
            return false;
    }
    return true;
}

bool is_m_step(const Composition& c, int m)
{
    long prefix = 0;
    for (int p : c.parts()) {
        if (p > m + prefix)
            return false;
        prefix += p;
    }
    return true;
}

int enumeration_limit() { return limit_storage().load(); }

void set_enumeration_limit(int limit)
{
    if (limit < 0)
        throw std::invalid_argument("enumeration limit must be nonnegative");
    limit_storage().store(limit);
}

void for_each_gap_partition(int n, const GapClass& cls, const PartitionFilter& filter,
                            const std::function<void(std::span<const int>)>& visit)
{
    if (n < 0)
        return;
    check_limit(n);
    PartitionWalker{cls, filter, visit, {}}.walk(n);
}

void for_each_gap_composition(int n, const GapClass& cls, const CompositionFilter& filter,
                              const std::function<void(std::span<const int>)>& visit)
{
    if (n < 0)
        return;
    check_limit(n);
    CompositionWalker{cls, filter, visit, {}}.walk(n, 0);
}

std::vector<Partition> gap_partitions(int n, const GapClass& cls, const PartitionFilter& filter)
{
    std::vector<Partition> out;
    for_each_gap_partition(n, cls, filter, [&](std::span<const int> parts) {
        out.emplace_back(std::vector<int>(parts.begin(), parts.end()));
    });
    return out;
}

std::vector<Composition> gap_compositions(int n, const GapClass& cls, const CompositionFilter& filter)
{
    std::vector<Composition> out;
    for_each_gap_composition(n, cls, filter, [&](std::span<const int> parts) {
        out.emplace_back(std::vector<int>(parts.begin(), parts.end()));
    });
    return out;
}

std::uint64_t count_gap_partitions(int n, const GapClass& cls, const PartitionFilter& filter)
{
    std::uint64_t count = 0;
    for_each_gap_partition(n, cls, filter, [&](std::span<const int>) { ++count; });
    return count;
}

std::uint64_t count_gap_compositions(int n, const GapClass& cls, const CompositionFilter& filter)
{
    std::uint64_t count = 0;
    for_each_gap_composition(n, cls, filter, [&](std::span<const int>) { ++count; });
    return count;
}

} // namespace gapcomp
