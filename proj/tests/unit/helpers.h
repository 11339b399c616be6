#pragma once

#include "sector_metrics/error.h"
#include "sector_metrics/geometry.h"

#include <doctest.h>

#include <cmath>
#include <random>

namespace test {

using sector_metrics::kPi;
using sector_metrics::Point;

inline bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

inline bool near_rel(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

inline Point expi(double t) { return std::polar(1.0, t); }

/// Uniform point of S_theta with log-uniform radius in [1e-3, 1e3].
inline Point random_in_sector(std::mt19937_64& rng, double theta) {
    std::uniform_real_distribution<double> lr(std::log(1e-3), std::log(1e3));
    std::uniform_real_distribution<double> ang(0.0, theta);
    double a = 0.0;
    while (a <= 0.0) a = ang(rng);
    return std::polar(std::exp(lr(rng)), a);
}

inline Point random_upper(std::mt19937_64& rng) { return random_in_sector(rng, kPi); }

inline Point random_in_strip(std::mt19937_64& rng, double h) {
    std::uniform_real_distribution<double> re(-5.0, 5.0);
    std::uniform_real_distribution<double> im(0.0, h);
    double y = 0.0;
    while (y <= 0.0) y = im(rng);
    return {re(rng), y};
}

template <class F>
sector_metrics::ErrorCode error_code_of(F&& f) {
    try {
        f();
    } catch (const sector_metrics::Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return sector_metrics::ErrorCode::OutOfRange;
}

}  // namespace test
