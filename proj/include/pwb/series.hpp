#pragma once

#include <cstdint>
#include <vector>

#include "pwb/int128.hpp"

namespace pwb {

// Truncated formal power series in q with exact integer coefficients.
// coeff(e) is the coefficient of q^e; every operation truncates at the
// fixed degree bound.
class SeriesPoly {
public:
    explicit SeriesPoly(std::int64_t degree_bound);
    static SeriesPoly one(std::int64_t degree_bound);

    std::int64_t degree_bound() const {
        return static_cast<std::int64_t>(coeff_.size()) - 1;
    }
    int128 coeff(std::int64_t e) const;
    void set_coeff(std::int64_t e, int128 v);

    SeriesPoly& mul_one_plus_q(std::int64_t d);  // *= (1 + q^d)
    SeriesPoly& mul_one_minus_q(std::int64_t d); // *= (1 - q^d)
    SeriesPoly& div_one_minus_q(std::int64_t d); // *= 1/(1 - q^d)
    SeriesPoly mul(const SeriesPoly& other) const;
    SeriesPoly shifted(std::int64_t e) const; // *= q^e

    const std::vector<int128>& coeffs() const { return coeff_; }
    bool operator==(const SeriesPoly&) const = default;

private:
    std::vector<int128> coeff_;
};

} // namespace pwb
