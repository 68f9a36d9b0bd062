#include "pwb/enumerate.hpp"

#include <stdexcept>

namespace pwb {

PartitionEnumerator::PartitionEnumerator(std::int64_t n) : n_(n) {
    if (n < 0)
        throw std::invalid_argument("cannot enumerate partitions of " +
                                    std::to_string(n));
    x_.assign(static_cast<std::size_t>(n) + 2, 1);
}

std::optional<std::span<const std::int64_t>> PartitionEnumerator::next() {
    if (state_ == 2)
        return std::nullopt;
    if (state_ == 0) {
        state_ = 1;
        if (n_ == 0) {
            state_ = 2;
            return std::span<const std::int64_t>{x_.data() + 1, 0};
        }
        x_[1] = n_;
        m_ = 1;
        h_ = 1;
        return std::span<const std::int64_t>{x_.data() + 1,
                                             static_cast<std::size_t>(m_)};
    }
    if (x_[1] == 1) {
        state_ = 2;
        return std::nullopt;
    }
    // Zoghbi-Stojmenovic ZS1 step: shrink the last part exceeding 1 and
    // redistribute the freed units into equal-sized chunks.
    auto x = x_.data();
    if (x[h_] == 2) {
        ++m_;
        x[h_] = 1;
        --h_;
    } else {
        std::int64_t r = x[h_] - 1;
        std::int64_t t = m_ - h_ + 1;
        x[h_] = r;
        while (t >= r) {
            ++h_;
            x[h_] = r;
            t -= r;
        }
        if (t == 0) {
            m_ = h_;
        } else {
            m_ = h_ + 1;
            if (t > 1) {
                ++h_;
                x[h_] = t;
            }
        }
    }
    return std::span<const std::int64_t>{x_.data() + 1,
                                         static_cast<std::size_t>(m_)};
}

std::vector<int128> partition_counts(std::int64_t n_max) {
    if (n_max < 0)
        throw std::invalid_argument("n_max must be >= 0");
    std::vector<int128> p(static_cast<std::size_t>(n_max) + 1, 0);
    p[0] = 1;
    for (std::int64_t n = 1; n <= n_max; ++n) {
        int128 total = 0;
        for (std::int64_t j = 1;; ++j) {
            std::int64_t g1 = j * (3 * j - 1) / 2;
            std::int64_t g2 = j * (3 * j + 1) / 2;
            if (g1 > n)
                break;
            int128 term = p[static_cast<std::size_t>(n - g1)];
            if (g2 <= n)
                term = checked_add(term, p[static_cast<std::size_t>(n - g2)]);
            total = (j % 2 == 1) ? checked_add(total, term)
                                 : checked_sub(total, term);
        }
        p[static_cast<std::size_t>(n)] = total;
    }
    return p;
}

int128 count_p(std::int64_t n) {
    return partition_counts(n)[static_cast<std::size_t>(n)];
}

} // namespace pwb
