#pragma once

// Embedded Runge-Kutta 5(4) (Dormand-Prince) with PI step-size control.
//
// Output is produced on a caller-supplied time grid: each internal step is
// clipped so that it lands exactly on the next output time, so samples carry
// the full accuracy of the method and no interpolation is involved.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace shapesphere {

struct OdeOptions {
    double rtol = 1e-10;
    double atol = 1e-12;
    double initial_step = 0.0;   // 0 selects a step from the local derivative scale
    std::size_t max_steps = 5'000'000;
};

enum class Termination {
    completed,
    collision,
    pole,
    small_size,
    step_underflow,
    step_limit,
    non_finite,
};

const char* to_string(Termination t) noexcept;

template <std::size_t N>
using StateVector = std::array<double, N>;

template <std::size_t N>
struct OdeSolution {
    std::vector<double> t;
    std::vector<StateVector<N>> y;
    Termination termination = Termination::completed;
    std::string reason;
    std::size_t accepted_steps = 0;
    std::size_t rejected_steps = 0;
};

/// Uniform grid t0, t0 + stride, ..., always ending exactly at t1.
/// Works in either direction; stride is taken as a magnitude.
std::vector<double> make_time_grid(double t0, double t1, double stride);

namespace detail {

// Dormand-Prince tableau.
inline constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
inline constexpr double a21 = 1.0 / 5;
inline constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
inline constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
inline constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                        a54 = -212.0 / 729;
inline constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                        a64 = 49.0 / 176, a65 = -5103.0 / 18656;
inline constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                        b6 = 11.0 / 84;
// Difference between the 5th-order and embedded 4th-order weights.
inline constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                        e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

template <std::size_t N>
StateVector<N> axpy(const StateVector<N>& y, double h,
                    std::initializer_list<std::pair<double, const StateVector<N>*>> terms) {
    StateVector<N> out = y;
    for (const auto& [c, k] : terms) {
        const double hc = h * c;
        for (std::size_t i = 0; i < N; ++i) out[i] += hc * (*k)[i];
    }
    return out;
}

template <std::size_t N>
bool all_finite(const StateVector<N>& y) {
    return std::all_of(y.begin(), y.end(), [](double v) { return std::isfinite(v); });
}

}  // namespace detail

/// Integrates y' = rhs(t, y) and records y at every entry of `grid` (grid[0] is the
/// initial time). `guard(t, y)` is consulted after each accepted step and may stop
/// the integration by returning a termination reason; the offending state is not
/// recorded, so the last sample is always a valid one.
template <std::size_t N, class Rhs, class Guard>
OdeSolution<N> integrate_dopri5(Rhs&& rhs, const StateVector<N>& y0, std::span<const double> grid,
                                const OdeOptions& opt, Guard&& guard) {
    using namespace detail;
    OdeSolution<N> sol;
    if (grid.empty()) return sol;
    sol.t.push_back(grid[0]);
    sol.y.push_back(y0);
    if (grid.size() == 1) return sol;

    const double direction = grid.back() >= grid.front() ? 1.0 : -1.0;
    double t = grid[0];
    StateVector<N> y = y0;
    StateVector<N> k1 = rhs(t, y);

    auto error_norm = [&](const StateVector<N>& yold, const StateVector<N>& ynew,
                          const StateVector<N>& err) {
        double acc = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            const double sc = opt.atol + opt.rtol * std::max(std::abs(yold[i]), std::abs(ynew[i]));
            const double r = err[i] / sc;
            acc += r * r;
        }
        return std::sqrt(acc / static_cast<double>(N));
    };

    double h = opt.initial_step;
    if (!(h > 0.0)) {
        // Hairer-Norsett-Wanner starting step heuristic (first-order part).
        double d0 = 0.0, d1 = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            const double sc = opt.atol + opt.rtol * std::abs(y[i]);
            d0 += (y[i] / sc) * (y[i] / sc);
            d1 += (k1[i] / sc) * (k1[i] / sc);
        }
        d0 = std::sqrt(d0 / N);
        d1 = std::sqrt(d1 / N);
        h = (d0 < 1e-5 || d1 < 1e-5) ? 1e-6 : 0.01 * d0 / d1;
    }
    h = std::min(h, std::abs(grid.back() - grid.front()));

    double err_prev = 1e-4;
    constexpr double safety = 0.9, beta = 0.04, alpha = 0.2 - 0.75 * beta;
    constexpr double min_factor = 0.2, max_factor = 10.0;

    std::size_t next = 1;
    std::size_t steps = 0;
    while (next < grid.size()) {
        const double target = grid[next];
        const double remaining = std::abs(target - t);
        bool lands = false;
        double step = h;
        if (step >= remaining * (1.0 - 1e-12)) {
            step = remaining;
            lands = true;
        }
        if (step < 1e-15 * std::max(1.0, std::abs(t))) {
            sol.termination = Termination::step_underflow;
            sol.reason = "step size underflow at t = " + std::to_string(t);
            return sol;
        }
        if (++steps > opt.max_steps) {
            sol.termination = Termination::step_limit;
            sol.reason = "step limit exceeded at t = " + std::to_string(t);
            return sol;
        }
        const double hs = direction * step;

        const auto k2 = rhs(t + c2 * hs, axpy<N>(y, hs, {{a21, &k1}}));
        const auto k3 = rhs(t + c3 * hs, axpy<N>(y, hs, {{a31, &k1}, {a32, &k2}}));
        const auto k4 = rhs(t + c4 * hs, axpy<N>(y, hs, {{a41, &k1}, {a42, &k2}, {a43, &k3}}));
        const auto k5 = rhs(t + c5 * hs,
                            axpy<N>(y, hs, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
        const auto k6 = rhs(t + hs, axpy<N>(y, hs, {{a61, &k1}, {a62, &k2}, {a63, &k3},
                                                    {a64, &k4}, {a65, &k5}}));
        const auto ynew =
            axpy<N>(y, hs, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
        const auto k7 = rhs(t + hs, ynew);

        StateVector<N> err{};
        for (std::size_t i = 0; i < N; ++i) {
            err[i] = hs * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                           e7 * k7[i]);
        }
        const double en = error_norm(y, ynew, err);

        if (!std::isfinite(en)) {
            // Non-finite trial (e.g. a stage stepped across a singularity): shrink.
            h = step * min_factor;
            ++sol.rejected_steps;
            continue;
        }

        if (en <= 1.0) {
            const double tnew = lands ? target : t + hs;
            if (!all_finite(ynew)) {
                sol.termination = Termination::non_finite;
                sol.reason = "non-finite state";
                return sol;
            }
            if (std::optional<Termination> stop = guard(tnew, ynew)) {
                sol.termination = *stop;
                sol.reason = std::string(to_string(*stop)) + " at t = " + std::to_string(tnew);
                return sol;
            }
            t = tnew;
            y = ynew;
            k1 = k7;
            ++sol.accepted_steps;
            double factor = en == 0.0 ? max_factor
                                      : safety * std::pow(en, -alpha) * std::pow(err_prev, beta);
            factor = std::clamp(factor, min_factor, max_factor);
            err_prev = std::max(en, 1e-4);
            // A step shortened only to land on the grid keeps the controller's proposal.
            h = lands ? std::max(h, step * factor) : step * factor;
            if (lands) {
                sol.t.push_back(t);
                sol.y.push_back(y);
                ++next;
            }
        } else {
            ++sol.rejected_steps;
            h = step * std::max(min_factor, safety * std::pow(en, -alpha));
        }
    }
    return sol;
}

template <std::size_t N, class Rhs>
OdeSolution<N> integrate_dopri5(Rhs&& rhs, const StateVector<N>& y0, std::span<const double> grid,
                                const OdeOptions& opt) {
    return integrate_dopri5<N>(std::forward<Rhs>(rhs), y0, grid, opt,
                               [](double, const StateVector<N>&) -> std::optional<Termination> {
                                   return std::nullopt;
                               });
}

}  // namespace shapesphere
