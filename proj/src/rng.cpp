#include "negbounds/rng.hpp"

#include <cmath>
#include <numbers>

namespace negbounds::rng {

std::pair<double, double> CounterRng::next_gaussian_pair() {
    double u1 = next_uniform();
    while (u1 <= 0.0) u1 = next_uniform();
    const double u2 = next_uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    return {radius * std::cos(angle), radius * std::sin(angle)};
}

double CounterRng::next_gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    auto [a, b] = next_gaussian_pair();
    spare_ = b;
    have_spare_ = true;
    return a;
}

}  // namespace negbounds::rng
