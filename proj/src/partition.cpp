#include "pwb/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <stdexcept>

namespace pwb {

static std::int64_t sum_parts(const std::vector<std::int64_t>& parts) {
    std::int64_t w = 0;
    for (std::int64_t v : parts)
        w += v;
    return w;
}

Partition Partition::from_values(std::vector<std::int64_t> values) {
    for (std::int64_t v : values)
        if (v < 1)
            throw std::invalid_argument("partition parts must be >= 1, got " +
                                        std::to_string(v));
    std::sort(values.begin(), values.end(), std::greater<>());
    Partition p;
    p.weight_ = sum_parts(values);
    p.parts_ = std::move(values);
    return p;
}

Partition Partition::from_sorted(std::vector<std::int64_t> values) {
    if (!values.empty() && values.back() < 1)
        throw std::invalid_argument("partition parts must be >= 1");
    if (!std::is_sorted(values.begin(), values.end(), std::greater<>()))
        throw std::invalid_argument("parts not in non-increasing order");
    Partition p;
    p.weight_ = sum_parts(values);
    p.parts_ = std::move(values);
    return p;
}

std::int64_t Partition::part(std::size_t i) const {
    if (i >= parts_.size())
        throw std::out_of_range("part index " + std::to_string(i) +
                                " out of range for partition of length " +
                                std::to_string(parts_.size()));
    return parts_[i];
}

PartIndexSet::PartIndexSet(std::vector<std::size_t> indices)
    : indices_(std::move(indices)) {
    for (std::size_t i = 1; i < indices_.size(); ++i)
        if (indices_[i - 1] >= indices_[i])
            throw std::invalid_argument(
                "part indices must be strictly increasing");
}

void PartIndexSet::check_against(const Partition& p) const {
    if (!indices_.empty() && indices_.back() >= p.length())
        throw std::out_of_range("part index " + std::to_string(indices_.back()) +
                                " out of range for partition of length " +
                                std::to_string(p.length()));
}

std::vector<std::int64_t> subsequence_values(const Partition& p,
                                             const PartIndexSet& s) {
    s.check_against(p);
    std::vector<std::int64_t> values;
    values.reserve(s.size());
    for (std::size_t i : s.indices())
        values.push_back(p.parts()[i]);
    return values;
}

Partition replace_parts(const Partition& p, const PartIndexSet& s,
                        std::span<const std::int64_t> new_values) {
    s.check_against(p);
    if (new_values.size() != s.size())
        throw std::invalid_argument("replacement count " +
                                    std::to_string(new_values.size()) +
                                    " != selected count " +
                                    std::to_string(s.size()));
    std::vector<std::int64_t> parts;
    parts.reserve(p.length());
    std::size_t next = 0;
    for (std::size_t i = 0; i < p.length(); ++i) {
        if (next < s.size() && s[next] == i)
            ++next;
        else
            parts.push_back(p.parts()[i]);
    }
    parts.insert(parts.end(), new_values.begin(), new_values.end());
    return Partition::from_values(std::move(parts));
}

Partition parse_partition(std::string_view text) {
    std::vector<std::int64_t> values;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
    };
    skip_ws();
    bool expect_value = false; // a trailing separator is an error
    while (i < text.size()) {
        std::int64_t v = 0;
        auto [ptr, ec] =
            std::from_chars(text.data() + i, text.data() + text.size(), v);
        if (ec != std::errc() || ptr == text.data() + i)
            throw std::invalid_argument("cannot parse partition: '" +
                                        std::string(text) + "'");
        values.push_back(v);
        i = static_cast<std::size_t>(ptr - text.data());
        skip_ws();
        expect_value = false;
        if (i < text.size()) {
            if (text[i] != ',' && text[i] != '+')
                throw std::invalid_argument("unexpected character '" +
                                            std::string(1, text[i]) +
                                            "' in partition");
            ++i;
            skip_ws();
            expect_value = true;
        }
    }
    if (expect_value)
        throw std::invalid_argument("trailing separator in partition: '" +
                                    std::string(text) + "'");
    return Partition::from_values(std::move(values));
}

std::string format_partition(const Partition& p) {
    std::string out;
    for (std::size_t i = 0; i < p.length(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(p.parts()[i]);
    }
    return out;
}

} // namespace pwb
