#include "pwb/series.hpp"

#include <stdexcept>

namespace pwb {

SeriesPoly::SeriesPoly(std::int64_t degree_bound) {
    if (degree_bound < 0)
        throw std::invalid_argument("series degree bound must be >= 0");
    coeff_.assign(static_cast<std::size_t>(degree_bound) + 1, 0);
}

SeriesPoly SeriesPoly::one(std::int64_t degree_bound) {
    SeriesPoly s(degree_bound);
    s.coeff_[0] = 1;
    return s;
}

int128 SeriesPoly::coeff(std::int64_t e) const {
    if (e < 0 || e > degree_bound())
        throw std::out_of_range("series exponent out of range");
    return coeff_[static_cast<std::size_t>(e)];
}

void SeriesPoly::set_coeff(std::int64_t e, int128 v) {
    if (e < 0 || e > degree_bound())
        throw std::out_of_range("series exponent out of range");
    coeff_[static_cast<std::size_t>(e)] = v;
}

SeriesPoly& SeriesPoly::mul_one_plus_q(std::int64_t d) {
    if (d < 1)
        throw std::invalid_argument("exponent d must be >= 1");
    // Descending so each original coefficient is read before it is written.
    for (std::int64_t e = degree_bound(); e >= d; --e)
        coeff_[static_cast<std::size_t>(e)] =
            checked_add(coeff_[static_cast<std::size_t>(e)],
                        coeff_[static_cast<std::size_t>(e - d)]);
    return *this;
}

SeriesPoly& SeriesPoly::mul_one_minus_q(std::int64_t d) {
    if (d < 1)
        throw std::invalid_argument("exponent d must be >= 1");
    for (std::int64_t e = degree_bound(); e >= d; --e)
        coeff_[static_cast<std::size_t>(e)] =
            checked_sub(coeff_[static_cast<std::size_t>(e)],
                        coeff_[static_cast<std::size_t>(e - d)]);
    return *this;
}

SeriesPoly& SeriesPoly::div_one_minus_q(std::int64_t d) {
    if (d < 1)
        throw std::invalid_argument("exponent d must be >= 1");
    // Geometric accumulation: ascending, the updated prefix feeds forward.
    for (std::int64_t e = d; e <= degree_bound(); ++e)
        coeff_[static_cast<std::size_t>(e)] =
            checked_add(coeff_[static_cast<std::size_t>(e)],
                        coeff_[static_cast<std::size_t>(e - d)]);
    return *this;
}

SeriesPoly SeriesPoly::mul(const SeriesPoly& other) const {
    SeriesPoly out(degree_bound());
    for (std::int64_t a = 0; a <= degree_bound(); ++a) {
        if (coeff_[static_cast<std::size_t>(a)] == 0)
            continue;
        for (std::int64_t b = 0; a + b <= degree_bound() &&
                                 b <= other.degree_bound();
             ++b) {
            if (other.coeff_[static_cast<std::size_t>(b)] == 0)
                continue;
            std::size_t e = static_cast<std::size_t>(a + b);
            out.coeff_[e] = checked_add(
                out.coeff_[e], checked_mul(coeff_[static_cast<std::size_t>(a)],
                                           other.coeff_[static_cast<std::size_t>(b)]));
        }
    }
    return out;
}

SeriesPoly SeriesPoly::shifted(std::int64_t e) const {
    if (e < 0)
        throw std::invalid_argument("shift exponent must be >= 0");
    SeriesPoly out(degree_bound());
    for (std::int64_t a = 0; a + e <= degree_bound(); ++a)
        out.coeff_[static_cast<std::size_t>(a + e)] =
            coeff_[static_cast<std::size_t>(a)];
    return out;
}

} // namespace pwb
