#pragma once

#include <cstddef>
#include <vector>

namespace ldpclab {

// All entropies are in nats; 0 log 0 = 0 throughout.

double shannon_entropy(const std::vector<double>& p, double tolerance = 1e-9);
double binary_entropy(double p);

double tv_distance(const std::vector<double>& p, const std::vector<double>& q);

// Joint distribution of finitely many finite-valued variables, stored as a
// flat table in row-major order (last variable fastest).
struct JointTable {
    std::vector<std::size_t> dims;
    std::vector<double> p;

    std::size_t variables() const { return dims.size(); }
    std::vector<double> marginal(std::size_t var) const;
    void validate(double tolerance = 1e-9) const;
};

// sum_i H(X_i) - H(X_1, ..., X_k)
double total_correlation(const JointTable& joint);

// H(X|Y) + H(Y|X) for a two-variable joint
double rokhlin_distance(const JointTable& joint);

} // namespace ldpclab
