#include "ldpclab/info_theory.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ldpclab {

namespace {

double plogp(double p) { return p > 0.0 ? -p * std::log(p) : 0.0; }

void check_distribution(const std::vector<double>& p, double tolerance) {
    double total = 0.0;
    for (double x : p) {
        if (x < -tolerance || !std::isfinite(x))
            throw std::invalid_argument("distribution has a negative or non-finite entry");
        total += x;
    }
    if (std::abs(total - 1.0) > tolerance)
        throw std::invalid_argument("distribution is not normalized");
}

} // namespace

double shannon_entropy(const std::vector<double>& p, double tolerance) {
    check_distribution(p, tolerance);
    double h = 0.0;
    for (double x : p) h += plogp(x);
    return h;
}

double binary_entropy(double p) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("binary_entropy: p outside [0,1]");
    return plogp(p) + plogp(1.0 - p);
}

double tv_distance(const std::vector<double>& p, const std::vector<double>& q) {
    if (p.size() != q.size()) throw std::invalid_argument("tv_distance: size mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) s += std::abs(p[i] - q[i]);
    return 0.5 * s;
}

void JointTable::validate(double tolerance) const {
    std::size_t expect = 1;
    for (auto d : dims) expect *= d;
    if (expect != p.size()) throw std::invalid_argument("JointTable: size does not match dims");
    check_distribution(p, tolerance);
}

std::vector<double> JointTable::marginal(std::size_t var) const {
    if (var >= dims.size()) throw std::invalid_argument("JointTable: bad variable index");
    std::size_t stride = 1;
    for (std::size_t i = var + 1; i < dims.size(); ++i) stride *= dims[i];
    std::vector<double> out(dims[var], 0.0);
    for (std::size_t idx = 0; idx < p.size(); ++idx) out[(idx / stride) % dims[var]] += p[idx];
    return out;
}

double total_correlation(const JointTable& joint) {
    joint.validate();
    double joint_entropy = 0.0;
    for (double x : joint.p) joint_entropy += plogp(x);
    double marginal_sum = 0.0;
    for (std::size_t v = 0; v < joint.variables(); ++v) {
        double h = 0.0;
        for (double x : joint.marginal(v)) h += plogp(x);
        marginal_sum += h;
    }
    return marginal_sum - joint_entropy;
}

double rokhlin_distance(const JointTable& joint) {
    if (joint.variables() != 2)
        throw std::invalid_argument("rokhlin_distance: needs a two-variable joint");
    joint.validate();
    double joint_entropy = 0.0;
    for (double x : joint.p) joint_entropy += plogp(x);
    double hx = 0.0, hy = 0.0;
    for (double x : joint.marginal(0)) hx += plogp(x);
    for (double x : joint.marginal(1)) hy += plogp(x);
    // H(X|Y) + H(Y|X) = 2 H(X,Y) - H(X) - H(Y)
    return 2.0 * joint_entropy - hx - hy;
}

} // namespace ldpclab
