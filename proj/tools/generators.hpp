#ifndef UMBRAL_TOOLS_GENERATORS_HPP
#define UMBRAL_TOOLS_GENERATORS_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "umbral/polynomial.hpp"
#include "umbral/scalar.hpp"

namespace umbral::gen {

/// Seeded source of small random scalars and polynomials. Floating
/// values are the same rationals converted to double, so exact and
/// floating runs with one seed see the same instances.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    long integer(long lo, long hi)
    {
        return std::uniform_int_distribution<long>(lo, hi)(eng_);
    }

    double uniform(double lo, double hi)
    {
        return std::uniform_real_distribution<double>(lo, hi)(eng_);
    }

    /// p/q with |p| <= max_num and 1 <= q <= max_den.
    Scalar rational(Mode mode, long max_num = 5, long max_den = 4, bool nonzero = false)
    {
        long p = 0;
        do
            p = integer(-max_num, max_num);
        while (nonzero && p == 0);
        const long q = integer(1, max_den);
        if (mode == Mode::exact)
            return Scalar::exact(p, q);
        return Scalar::floating(static_cast<double>(p) / static_cast<double>(q));
    }

    Polynomial polynomial(std::size_t max_degree, Mode mode)
    {
        const auto deg = static_cast<std::size_t>(integer(0, static_cast<long>(max_degree)));
        std::vector<Scalar> c;
        for (std::size_t k = 0; k <= deg; ++k)
            c.push_back(rational(mode));
        return Polynomial(std::move(c), mode);
    }

    std::mt19937_64& engine() noexcept { return eng_; }

private:
    std::mt19937_64 eng_;
};

} // namespace umbral::gen

#endif // UMBRAL_TOOLS_GENERATORS_HPP
