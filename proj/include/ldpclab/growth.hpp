#pragma once

#include <vector>

namespace ldpclab {

// Annealed growth rate of approximate-codeword counts, parametrized by s >= 0:
//   t(s) = s ((1+s)^{k-1} - (1-s)^{k-1}) / ((1+s)^k + (1-s)^k)
//   Z(s) = ((1+s)^k + (1-s)^k) / 2
//   G    = (1-d) H(t) + (d/k) (-k t log s + log Z)
// t(s) is increasing from 0; for even k it approaches 1 as s grows, for odd k
// it approaches (k-1)/k. The s -> 0 limit gives (t, Z, G) = (0, 1, 0).
struct GrowthCurvePoint {
    double s = 0.0;
    double t = 0.0;
    double Z = 1.0;
    double G = 0.0;
};

double growth_density_of_s(int k, double s);   // t(s)
double growth_partition_of_s(int k, double s); // Z(s)
double growth_rate_of_s(int d, int k, double s);

// Evaluates the curve on the given s grid and asserts t is nondecreasing
// along it.
std::vector<GrowthCurvePoint> growth_curve(int d, int k, const std::vector<double>& s_grid);

// Largest density reachable with s in [0, s_max].
double growth_density_max(int k, double s_max = 50.0);

// Inverts t(s) by bisection (monotonicity is checked on a fine grid first)
// and evaluates the growth rate. Throws std::invalid_argument for densities
// outside [0, growth_density_max].
double growth_rate_at_density(int d, int k, double t, double s_max = 50.0);

// Small-density closed form (1/2) t (d log(k-1) - d + 2 + (d-2) log t);
// requires 0 < t < 1.
double growth_rate_asymptotic(int d, int k, double t);

// Exponent controlling near-cancellation probabilities:
// (1 - 1/k) H((1-t)a' + t a'') - (1-t)(1 - 1/d) H(a') - t H(a'').
double cancellation_exponent(int d, int k, double t, double alpha1, double alpha2);

// Smallest positive root of the growth rate: G < 0 on (0, root) when d > 2.
// Returns 0 when the rate is nonnegative for all small densities (d <= 2).
double growth_sign_change_density(int d, int k);

} // namespace ldpclab
