#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pwb {

// An integer partition in canonical form: parts non-increasing, all >= 1.
// The empty partition is the unique partition of 0. Value type; immutable
// after construction, so instances can be shared freely across threads.
class Partition {
public:
    Partition() = default;

    // Sorts the given values into canonical order. Rejects values < 1.
    static Partition from_values(std::vector<std::int64_t> values);

    // Trusted path for input that is already non-increasing (checked).
    static Partition from_sorted(std::vector<std::int64_t> values);

    const std::vector<std::int64_t>& parts() const { return parts_; }
    std::span<const std::int64_t> span() const { return parts_; }
    std::int64_t weight() const { return weight_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    std::int64_t part(std::size_t i) const; // bounds-checked

    bool operator==(const Partition&) const = default;
    // Lexicographic on the canonical (non-increasing) part list; this is the
    // order the enumerator emits in reverse.
    auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }

private:
    std::vector<std::int64_t> parts_;
    std::int64_t weight_ = 0;
};

// A strictly increasing set of positions into a partition's part list.
class PartIndexSet {
public:
    PartIndexSet() = default;
    explicit PartIndexSet(std::vector<std::size_t> indices); // validates order

    const std::vector<std::size_t>& indices() const { return indices_; }
    std::size_t size() const { return indices_.size(); }
    bool empty() const { return indices_.empty(); }
    std::size_t operator[](std::size_t i) const { return indices_[i]; }

    // Throws std::out_of_range if any index is past the end of p.
    void check_against(const Partition& p) const;

    bool operator==(const PartIndexSet&) const = default;

private:
    std::vector<std::size_t> indices_;
};

// Referenced part values in index order (non-increasing by construction).
std::vector<std::int64_t> subsequence_values(const Partition& p,
                                             const PartIndexSet& s);

// Replaces the referenced parts by new_values (same count, all >= 1) and
// re-canonicalizes. Untouched parts carry over unchanged, so the length is
// preserved and the weight changes by the difference of sums.
Partition replace_parts(const Partition& p, const PartIndexSet& s,
                        std::span<const std::int64_t> new_values);

// Text format: separator-joined positive integers, any order accepted on
// input ("," or "+" separators, whitespace ignored), always emitted
// non-increasing. The empty string is the empty partition.
Partition parse_partition(std::string_view text);
std::string format_partition(const Partition& p);

} // namespace pwb
