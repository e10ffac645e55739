#pragma once

#include <cmath>
#include <optional>
#include <utility>

namespace cra {

struct Bracket {
    double lo;
    double hi;
};

/// Root of a continuous function on a sign-changing bracket.
///
/// Bisection first (unconditionally convergent), then a secant polish that is
/// only accepted while it stays inside the current bracket. Returns nullopt
/// when the endpoints do not straddle zero.
template <class Fn>
std::optional<double> bracketed_root(Fn&& fn, Bracket bracket, double x_tol = 0.0,
                                     int max_bisections = 200) {
    double lo = bracket.lo;
    double hi = bracket.hi;
    double f_lo = fn(lo);
    double f_hi = fn(hi);
    if (f_lo == 0.0) return lo;
    if (f_hi == 0.0) return hi;
    if ((f_lo < 0.0) == (f_hi < 0.0)) return std::nullopt;

    for (int i = 0; i < max_bisections; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi || hi - lo <= x_tol) break;
        const double f_mid = fn(mid);
        if (f_mid == 0.0) return mid;
        if ((f_mid < 0.0) == (f_lo < 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
            f_hi = f_mid;
        }
    }

    // Secant polish on the final bracket.
    double best = std::abs(f_lo) < std::abs(f_hi) ? lo : hi;
    double f_best = std::abs(f_lo) < std::abs(f_hi) ? f_lo : f_hi;
    for (int i = 0; i < 8 && f_hi != f_lo; ++i) {
        const double x = hi - f_hi * (hi - lo) / (f_hi - f_lo);
        if (!(x > lo && x < hi)) break;
        const double fx = fn(x);
        if (std::abs(fx) < std::abs(f_best)) {
            best = x;
            f_best = fx;
        }
        if (fx == 0.0) break;
        if ((fx < 0.0) == (f_lo < 0.0)) {
            lo = x;
            f_lo = fx;
        } else {
            hi = x;
            f_hi = fx;
        }
    }
    return best;
}

/// Walks a few ulps around `x` and returns the point with the smallest |fn|
/// among those accepted by `admissible`.
template <class Fn, class Pred>
double polish_to_ulp(Fn&& fn, double x, Pred&& admissible, int ulps = 4) {
    double best = x;
    double f_best = std::abs(fn(x));
    for (int dir : {-1, 1}) {
        double y = x;
        for (int i = 0; i < ulps; ++i) {
            y = std::nextafter(y, dir < 0 ? -HUGE_VAL : HUGE_VAL);
            if (!admissible(y)) break;
            const double fy = std::abs(fn(y));
            if (fy < f_best) {
                best = y;
                f_best = fy;
            }
        }
    }
    return best;
}

}  // namespace cra
