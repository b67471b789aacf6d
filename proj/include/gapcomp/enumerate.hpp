#ifndef GAPCOMP_ENUMERATE_HPP
#define GAPCOMP_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gapcomp {

/*
 * Gap class (g, s). For partitions: consecutive parts differ by at least g.
 * For compositions: each part is at least the previous part minus (g - 1).
 * In both cases every part is at least s.
 */
class GapClass {
public:
    GapClass(int g, int s);

    int g() const { return g_; }
    int s() const { return s_; }

    friend bool operator==(const GapClass&, const GapClass&) = default;

private:
    int g_;
    int s_;
};

std::string to_string(const GapClass& cls);

/// Partition stored nondecreasing: parts()[0] <= parts()[1] <= ... The empty partition is valid.
class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless all parts are positive and nondecreasing.
    explicit Partition(std::vector<int> parts);

    std::span<const int> parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;
    bool empty() const { return parts_.empty(); }
    /// Largest (= last) part. Precondition: nonempty.
    int last() const { return parts_.back(); }

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// Ordered sequence of positive parts. The empty composition is valid.
class Composition {
public:
    Composition() = default;
    /// Throws std::invalid_argument unless all parts are positive.
    explicit Composition(std::vector<int> parts);

    std::span<const int> parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;
    bool empty() const { return parts_.empty(); }
    int first() const { return parts_.front(); }
    int last() const { return parts_.back(); }

    friend auto operator<=>(const Composition&, const Composition&) = default;

private:
    std::vector<int> parts_;
};

std::string to_string(const Partition& p);
std::string to_string(const Composition& c);

bool is_gap_partition(const Partition& p, const GapClass& cls);
bool is_gap_composition(const Composition& c, const GapClass& cls);
/// Each part is at most m plus the sum of the parts before it.
bool is_m_step(const Composition& c, int m);

struct PartitionFilter {
    std::optional<int> max_part;
    std::optional<int> length;
};

struct CompositionFilter {
    std::optional<int> min_first;
    std::optional<int> m_step;
    std::optional<int> length;
};

/// Thrown when an enumeration is asked for n above the configured cutoff.
class EnumerationLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Largest n accepted by the enumerators (default 64).
int enumeration_limit();
void set_enumeration_limit(int limit);

/// Visits every partition of n in the class, in lexicographic order of parts.
void for_each_gap_partition(int n, const GapClass& cls, const PartitionFilter& filter,
                            const std::function<void(std::span<const int>)>& visit);
/// Visits every composition of n in the class, in lexicographic order of parts.
void for_each_gap_composition(int n, const GapClass& cls, const CompositionFilter& filter,
                              const std::function<void(std::span<const int>)>& visit);

std::vector<Partition> gap_partitions(int n, const GapClass& cls, const PartitionFilter& filter = {});
std::vector<Composition> gap_compositions(int n, const GapClass& cls, const CompositionFilter& filter = {});

std::uint64_t count_gap_partitions(int n, const GapClass& cls, const PartitionFilter& filter = {});
std::uint64_t count_gap_compositions(int n, const GapClass& cls, const CompositionFilter& filter = {});

} // namespace gapcomp

#endif // GAPCOMP_ENUMERATE_HPP
