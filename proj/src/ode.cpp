#include "shapesphere/ode.hpp"

#include <cmath>

#include "shapesphere/errors.hpp"

namespace shapesphere {

const char* to_string(Termination t) noexcept {
    switch (t) {
        case Termination::completed: return "completed";
        case Termination::collision: return "binary collision";
        case Termination::pole: return "chart pole";
        case Termination::small_size: return "vanishing size";
        case Termination::step_underflow: return "step size underflow";
        case Termination::step_limit: return "step limit";
        case Termination::non_finite: return "non-finite state";
    }
    return "unknown";
}

std::vector<double> make_time_grid(double t0, double t1, double stride) {
    if (!std::isfinite(t0) || !std::isfinite(t1)) throw DomainError("time span must be finite");
    std::vector<double> grid{t0};
    const double length = std::abs(t1 - t0);
    if (length == 0.0) return grid;
    const double dir = t1 > t0 ? 1.0 : -1.0;
    const double step = std::abs(stride);
    if (step > 0.0 && std::isfinite(step)) {
        const auto n = static_cast<long long>(std::floor(length / step * (1.0 + 1e-12)));
        for (long long k = 1; k <= n; ++k) {
            const double tk = t0 + dir * static_cast<double>(k) * step;
            if (std::abs(tk - t0) < length * (1.0 - 1e-12)) grid.push_back(tk);
        }
    }
    grid.push_back(t1);
    return grid;
}

}  // namespace shapesphere
