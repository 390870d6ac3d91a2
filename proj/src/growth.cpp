#include "ldpclab/growth.hpp"

#include <cmath>
#include <stdexcept>

namespace ldpclab {

namespace {

long double binary_entropy_l(long double p) {
    long double h = 0.0L;
    if (p > 0.0L) h -= p * std::log(p);
    if (p < 1.0L) h -= (1.0L - p) * std::log(1.0L - p);
    return h;
}

long double ipow(long double base, int exp) {
    long double out = 1.0L;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

long double density_l(int k, long double s) {
    if (s == 0.0L) return 0.0L;
    const long double up = ipow(1.0L + s, k - 1);
    const long double down = ipow(1.0L - s, k - 1);
    return s * (up - down) / ((1.0L + s) * up + (1.0L - s) * down);
}

long double partition_l(int k, long double s) {
    return 0.5L * (ipow(1.0L + s, k) + ipow(1.0L - s, k));
}

long double rate_l(int d, int k, long double s) {
    if (s == 0.0L) return 0.0L;
    const long double t = density_l(k, s);
    const long double z = partition_l(k, s);
    return (1.0L - d) * binary_entropy_l(t) +
           (static_cast<long double>(d) / k) * (-k * t * std::log(s) + std::log(z));
}

void check_params(int d, int k) {
    if (d < 1 || k < 2) throw std::invalid_argument("growth curve: need d >= 1, k >= 2");
}

void check_monotone(int k, long double s_max) {
    const int steps = 512;
    long double prev = 0.0L;
    for (int i = 1; i <= steps; ++i) {
        const long double s = s_max * static_cast<long double>(i) / steps;
        const long double t = density_l(k, s);
        if (t + 1e-15L < prev)
            throw std::logic_error("growth curve: density is not monotone on the grid");
        prev = t;
    }
}

} // namespace

double growth_density_of_s(int k, double s) {
    check_params(2, k);
    if (s < 0.0) throw std::invalid_argument("growth curve: s must be >= 0");
    return static_cast<double>(density_l(k, s));
}

double growth_partition_of_s(int k, double s) {
    check_params(2, k);
    return static_cast<double>(partition_l(k, s));
}

double growth_rate_of_s(int d, int k, double s) {
    check_params(d, k);
    if (s < 0.0) throw std::invalid_argument("growth curve: s must be >= 0");
    return static_cast<double>(rate_l(d, k, s));
}

std::vector<GrowthCurvePoint> growth_curve(int d, int k, const std::vector<double>& s_grid) {
    check_params(d, k);
    std::vector<GrowthCurvePoint> out;
    out.reserve(s_grid.size());
    double prev_t = -1.0;
    for (double s : s_grid) {
        if (s < 0.0) throw std::invalid_argument("growth curve: s must be >= 0");
        GrowthCurvePoint p;
        p.s = s;
        p.t = static_cast<double>(density_l(k, s));
        p.Z = static_cast<double>(partition_l(k, s));
        p.G = static_cast<double>(rate_l(d, k, s));
        if (p.t < prev_t - 1e-12)
            throw std::logic_error("growth_curve: density decreases along the s grid");
        prev_t = p.t;
        out.push_back(p);
    }
    return out;
}

double growth_density_max(int k, double s_max) {
    check_params(2, k);
    return static_cast<double>(density_l(k, static_cast<long double>(s_max)));
}

double growth_rate_at_density(int d, int k, double t, double s_max) {
    check_params(d, k);
    if (t == 0.0) return 0.0;
    const long double t_hi = density_l(k, static_cast<long double>(s_max));
    if (t < 0.0 || static_cast<long double>(t) > t_hi)
        throw std::invalid_argument("growth_rate_at_density: density outside attainable range");
    check_monotone(k, static_cast<long double>(s_max));
    long double lo = 0.0L, hi = static_cast<long double>(s_max);
    for (int iter = 0; iter < 200; ++iter) {
        const long double mid = 0.5L * (lo + hi);
        if (density_l(k, mid) < static_cast<long double>(t))
            lo = mid;
        else
            hi = mid;
        if (std::fabs(density_l(k, 0.5L * (lo + hi)) - static_cast<long double>(t)) <= 1e-14L)
            break;
    }
    const long double s = 0.5L * (lo + hi);
    if (std::fabs(density_l(k, s) - static_cast<long double>(t)) > 1e-10L)
        throw std::logic_error("growth_rate_at_density: bisection failed to converge");
    return static_cast<double>(rate_l(d, k, s));
}

double growth_rate_asymptotic(int d, int k, double t) {
    check_params(d, k);
    if (t <= 0.0 || t >= 1.0)
        throw std::invalid_argument("growth_rate_asymptotic: requires 0 < t < 1");
    return 0.5 * t * (d * std::log(static_cast<double>(k - 1)) - d + 2.0 + (d - 2.0) * std::log(t));
}

double cancellation_exponent(int d, int k, double t, double alpha1, double alpha2) {
    check_params(d, k);
    auto in_unit = [](double x) { return x >= 0.0 && x <= 1.0; };
    if (!in_unit(t) || !in_unit(alpha1) || !in_unit(alpha2))
        throw std::invalid_argument("cancellation_exponent: arguments must lie in [0,1]");
    const long double mixed = (1.0L - t) * alpha1 + static_cast<long double>(t) * alpha2;
    return static_cast<double>((1.0L - 1.0L / k) * binary_entropy_l(mixed) -
                               (1.0L - t) * (1.0L - 1.0L / d) * binary_entropy_l(alpha1) -
                               t * binary_entropy_l(alpha2));
}

double growth_sign_change_density(int d, int k) {
    check_params(d, k);
    if (d <= 2) return 0.0;
    // G < 0 just above 0; scan for the first grid point where it turns
    // nonnegative, then bisect in s space.
    const long double s_max = 50.0L;
    long double lo = 1e-6L, hi = 0.0L;
    if (rate_l(d, k, lo) >= 0.0L) return 0.0;
    const int steps = 4096;
    for (int i = 1; i <= steps; ++i) {
        const long double s = s_max * static_cast<long double>(i) / steps;
        if (rate_l(d, k, s) >= 0.0L) {
            hi = s;
            break;
        }
        lo = s;
    }
    if (hi == 0.0L) throw std::logic_error("growth_sign_change_density: no sign change found");
    for (int iter = 0; iter < 200; ++iter) {
        const long double mid = 0.5L * (lo + hi);
        if (rate_l(d, k, mid) < 0.0L)
            lo = mid;
        else
            hi = mid;
    }
    return static_cast<double>(density_l(k, 0.5L * (lo + hi)));
}

} // namespace ldpclab
