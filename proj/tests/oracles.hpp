#pragma once

// Test-only oracles, kept independent of the library implementations they
// cross-check.

#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "ldpclab/weights.hpp"

namespace ldpclab::oracles {

// Euclidean projection onto {p : sum p = 1, sum p[i] alpha[i] = target, p >= 0}
// by exhaustive active-set search; exact for the small class counts used here.
inline std::vector<double> project_to_polytope(const std::vector<double>& x,
                                               const std::vector<double>& alpha, double target) {
    const std::size_t n = x.size();
    const std::size_t subsets = std::size_t(1) << n;
    std::vector<double> best;
    double best_dist = std::numeric_limits<double>::infinity();
    std::vector<double> y(n);
    for (std::size_t active = 0; active < subsets; ++active) {
        // equality-constrained projection with the active coordinates pinned at 0:
        // y = x + a*1 + b*alpha on the free coordinates
        double s1 = 0, sa = 0, saa = 0, sx = 0, sxa = 0;
        std::size_t free_count = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (active & (std::size_t(1) << i)) continue;
            ++free_count;
            s1 += 1.0;
            sa += alpha[i];
            saa += alpha[i] * alpha[i];
            sx += x[i];
            sxa += x[i] * alpha[i];
        }
        if (free_count < 2) continue;
        const double det = s1 * saa - sa * sa;
        if (std::abs(det) < 1e-12) continue;
        const double rhs1 = 1.0 - sx;
        const double rhs2 = target - sxa;
        const double a = (rhs1 * saa - rhs2 * sa) / det;
        const double b = (s1 * rhs2 - sa * rhs1) / det;
        bool ok = true;
        double dist = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (active & (std::size_t(1) << i)) {
                y[i] = 0.0;
                dist += x[i] * x[i];
            } else {
                y[i] = x[i] + a + b * alpha[i];
                if (y[i] < -1e-12) {
                    ok = false;
                    break;
                }
                dist += (y[i] - x[i]) * (y[i] - x[i]);
            }
        }
        if (ok && dist < best_dist) {
            best_dist = dist;
            best = y;
            for (auto& v : best) v = std::max(v, 0.0);
        }
    }
    return best;
}

// Projected-gradient maximizer of the Kikuchi entropy over cyclically
// invariant even-parity weights with one-density t; generic, no closed form.
inline double max_kikuchi_at_density(int d, int k, double t, int iterations = 60000,
                                     double step = 0.1) {
    const CyclicClasses classes = cyclic_classes(k);
    std::vector<double> alpha, logsize;
    for (std::size_t c = 0; c < classes.representative.size(); ++c) {
        if (classes.ones[c] % 2 != 0) continue; // even-parity support only
        alpha.push_back(static_cast<double>(classes.ones[c]));
        logsize.push_back(std::log(static_cast<double>(classes.size[c])));
    }
    const double target = static_cast<double>(k) * t;

    std::vector<double> p(alpha.size(), 1.0 / static_cast<double>(alpha.size()));
    p = project_to_polytope(p, alpha, target);

    auto objective = [&](const std::vector<double>& q) {
        double f = 0.0;
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i] > 0.0) f += -q[i] * std::log(q[i]) + q[i] * logsize[i];
        }
        return f;
    };

    double best = objective(p);
    std::vector<double> grad(p.size()), trial(p.size());
    for (int it = 0; it < iterations; ++it) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            const double safe = std::max(p[i], 1e-300);
            grad[i] = -std::log(safe) - 1.0 + logsize[i];
        }
        // monotone ascent: shrink the step until the objective improves
        double eta = step;
        bool moved = false;
        for (int halvings = 0; halvings < 60; ++halvings) {
            for (std::size_t i = 0; i < p.size(); ++i) trial[i] = p[i] + eta * grad[i];
            trial = project_to_polytope(trial, alpha, target);
            if (!trial.empty() && objective(trial) > best + 1e-16) {
                p = trial;
                best = objective(p);
                moved = true;
                break;
            }
            eta *= 0.5;
        }
        if (!moved) break;
    }

    double h2 = 0.0;
    if (t > 0.0 && t < 1.0) h2 = -t * std::log(t) - (1.0 - t) * std::log(1.0 - t);
    return (1.0 - d) * h2 + (static_cast<double>(d) / k) * best;
}

} // namespace ldpclab::oracles
