#include "shapesphere/random_cases.hpp"

#include <numbers>

namespace shapesphere {

RandomCase random_regular_case(std::mt19937_64& rng, bool zero_momentum) {
    auto uniform = [&rng](double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); };
    constexpr double pi = std::numbers::pi;

    RandomCase c;
    c.md = make_mass_distribution({uniform(0.5, 2.0), uniform(0.5, 2.0), uniform(0.5, 2.0)});
    double phi = uniform(0.45, 1.25);
    if (uniform(0.0, 1.0) < 0.5) phi = pi - phi;
    c.state = {uniform(1.0, 2.0), phi, uniform(0.0, 2.0 * pi),
               uniform(-0.3, 0.3), uniform(-0.6, 0.6), uniform(-0.6, 0.6)};
    c.omega = zero_momentum ? 0.0 : (uniform(0.0, 1.0) < 0.5 ? -1.0 : 1.0) * uniform(0.2, 0.8);
    c.alpha = uniform(-pi, pi);
    return c;
}

}  // namespace shapesphere
