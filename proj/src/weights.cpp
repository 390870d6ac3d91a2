#include "ldpclab/weights.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "ldpclab/info_theory.hpp"

namespace ldpclab {

std::size_t HyperedgeWeight::tuple_count() const {
    std::size_t count = 1;
    for (int j = 0; j < k; ++j) count *= static_cast<std::size_t>(alphabet);
    return count;
}

namespace {

// digit j of tuple index (value at orbit position j)
inline int tuple_digit(std::size_t tuple, int j, int alphabet) {
    std::size_t q = tuple;
    for (int t = 0; t < j; ++t) q /= static_cast<std::size_t>(alphabet);
    return static_cast<int>(q % static_cast<std::size_t>(alphabet));
}

std::size_t rotate_tuple(std::size_t tuple, int k, int alphabet) {
    // shift positions down by one; position 0 wraps to position k-1
    const int low = static_cast<int>(tuple % static_cast<std::size_t>(alphabet));
    std::size_t rest = tuple / static_cast<std::size_t>(alphabet);
    std::size_t high = 1;
    for (int j = 0; j < k - 1; ++j) high *= static_cast<std::size_t>(alphabet);
    return rest + static_cast<std::size_t>(low) * high;
}

} // namespace

bool HyperedgeWeight::is_consistent(double tol) const {
    if (static_cast<int>(edge.size()) != d || static_cast<int>(vertex.size()) != alphabet)
        return false;
    for (const auto& w : edge) {
        if (w.size() != tuple_count()) return false;
        double total = 0.0;
        for (double x : w) {
            if (x < -tol) return false;
            total += x;
        }
        if (std::abs(total - 1.0) > tol) return false;
    }
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < k; ++j)
            for (int a0 = 0; a0 < alphabet; ++a0) {
                double total = 0.0;
                for (std::size_t a = 0; a < tuple_count(); ++a)
                    if (tuple_digit(a, j, alphabet) == a0) total += edge[static_cast<std::size_t>(i)][a];
                if (std::abs(total - vertex[static_cast<std::size_t>(a0)]) > tol) return false;
            }
    return true;
}

bool HyperedgeWeight::is_cyclically_invariant(double tol) const {
    for (const auto& w : edge)
        for (std::size_t a = 0; a < w.size(); ++a)
            if (std::abs(w[a] - w[rotate_tuple(a, k, alphabet)]) > tol) return false;
    return true;
}

bool HyperedgeWeight::even_parity_supported(double tol) const {
    if (alphabet != 2) return false;
    for (const auto& w : edge)
        for (std::size_t a = 0; a < w.size(); ++a)
            if ((std::popcount(static_cast<std::uint64_t>(a)) & 1) && w[a] > tol) return false;
    return true;
}

HyperedgeWeight empirical_weight(const BitVec& x, const UniformHomomorphism& sigma) {
    if (static_cast<int>(x.size()) != sigma.n)
        throw std::invalid_argument("empirical_weight: labeling length mismatch");
    HyperedgeWeight w;
    w.d = sigma.d;
    w.k = sigma.k;
    w.alphabet = 2;
    w.edge.assign(static_cast<std::size_t>(sigma.d),
                  std::vector<double>(std::size_t(1) << sigma.k, 0.0));
    w.vertex.assign(2, 0.0);
    const double inv_n = 1.0 / static_cast<double>(sigma.n);
    for (int v = 0; v < sigma.n; ++v) w.vertex[x.get(static_cast<std::size_t>(v)) ? 1 : 0] += inv_n;
    for (int i = 0; i < sigma.d; ++i) {
        const auto& perm = sigma.perms[static_cast<std::size_t>(i)];
        for (int v = 0; v < sigma.n; ++v) {
            std::size_t tuple = 0;
            std::uint32_t u = static_cast<std::uint32_t>(v);
            for (int j = 0; j < sigma.k; ++j) {
                if (x.get(u)) tuple |= std::size_t(1) << j;
                u = perm[u];
            }
            w.edge[static_cast<std::size_t>(i)][tuple] += inv_n;
        }
    }
    return w;
}

HyperedgeWeight haar_weight(int d, int k) {
    HyperedgeWeight w;
    w.d = d;
    w.k = k;
    w.alphabet = 2;
    w.vertex = {0.5, 0.5};
    const double mass = std::ldexp(1.0, -(k - 1)); // 2^{1-k} per even tuple
    w.edge.assign(static_cast<std::size_t>(d), std::vector<double>(std::size_t(1) << k, 0.0));
    for (auto& part : w.edge)
        for (std::size_t a = 0; a < part.size(); ++a)
            if ((std::popcount(static_cast<std::uint64_t>(a)) & 1) == 0) part[a] = mass;
    return w;
}

double kikuchi_entropy(const HyperedgeWeight& w, double tol) {
    if (!w.is_consistent(tol))
        throw std::invalid_argument("kikuchi_entropy: inconsistent weight");
    double edge_term = 0.0;
    for (const auto& part : w.edge) edge_term += shannon_entropy(part, 1e-6);
    return (1.0 - w.d) * shannon_entropy(w.vertex, 1e-6) +
           edge_term / static_cast<double>(w.k);
}

CyclicClasses cyclic_classes(int k) {
    if (k < 1 || k > 25) throw std::invalid_argument("cyclic_classes: k out of range");
    CyclicClasses out;
    const std::uint32_t total = std::uint32_t(1) << k;
    out.class_of.assign(total, total);
    for (std::uint32_t a = 0; a < total; ++a) {
        if (out.class_of[a] != total) continue;
        // walk the rotation orbit of a
        std::uint32_t best = a;
        std::uint32_t cur = a;
        int orbit = 0;
        do {
            cur = static_cast<std::uint32_t>((cur >> 1) | ((cur & 1u) << (k - 1)));
            ++orbit;
            if (cur < best) best = cur;
        } while (cur != a);
        const std::size_t cls = out.representative.size();
        out.representative.push_back(best);
        out.size.push_back(orbit);
        out.ones.push_back(std::popcount(a));
        cur = a;
        do {
            out.class_of[cur] = cls;
            cur = static_cast<std::uint32_t>((cur >> 1) | ((cur & 1u) << (k - 1)));
        } while (cur != a);
    }
    return out;
}

bool ExactWeight::realizable(const CyclicClasses& classes) const {
    if (vertex_count <= 0 || vertex_count % k != 0) return false;
    if (symbol_counts.size() != 2 || symbol_counts[0] < 0 || symbol_counts[1] < 0) return false;
    if (symbol_counts[0] + symbol_counts[1] != vertex_count) return false;
    if (static_cast<int>(class_counts.size()) != d) return false;
    const long long orbits = vertex_count / k;
    for (const auto& counts : class_counts) {
        if (counts.size() != classes.representative.size()) return false;
        long long orbit_total = 0, ones_total = 0;
        for (std::size_t c = 0; c < counts.size(); ++c) {
            if (counts[c] < 0) return false;
            orbit_total += counts[c];
            ones_total += counts[c] * classes.ones[c];
        }
        // every part must tile the vertex set and reproduce the symbol counts
        if (orbit_total != orbits || ones_total != symbol_counts[1]) return false;
    }
    return true;
}

BigUint homomorphism_count(int d, int k, long long vertex_count) {
    FactoredRatio r;
    r.mul_factorial(static_cast<std::uint64_t>(vertex_count), d);
    r.mul_factorial(static_cast<std::uint64_t>(vertex_count / k), -d);
    r.mul_integer(static_cast<std::uint64_t>(k), -d * (vertex_count / k));
    if (!r.is_integer()) throw std::logic_error("homomorphism_count: not an integer");
    return r.numerator();
}

ExactCount exact_expected_count(const ExactWeight& w) {
    const CyclicClasses classes = cyclic_classes(w.k);
    ExactCount out;
    if (!w.realizable(classes)) return out; // count 0
    out.realizable = true;

    // Total over all homomorphisms: labelings with the right symbol counts,
    // times per-part counts of k-uniform permutations with the prescribed
    // orbit statistics. A permutation with c[cls] orbits of necklace class cls
    // is counted by orbit-stabilizer: the label-preserving permutations act
    // transitively, and a stabilizer permutes same-class orbits and rotates
    // each orbit through its cyclic symmetries (k / orbit size of the class).
    FactoredRatio total;
    total.mul_factorial(static_cast<std::uint64_t>(w.vertex_count));
    total.mul_factorial(static_cast<std::uint64_t>(w.symbol_counts[0]), -1);
    total.mul_factorial(static_cast<std::uint64_t>(w.symbol_counts[1]), -1);
    for (int i = 0; i < w.d; ++i) {
        total.mul_factorial(static_cast<std::uint64_t>(w.symbol_counts[0]));
        total.mul_factorial(static_cast<std::uint64_t>(w.symbol_counts[1]));
        const auto& counts = w.class_counts[static_cast<std::size_t>(i)];
        for (std::size_t c = 0; c < counts.size(); ++c) {
            if (counts[c] == 0) continue;
            total.mul_factorial(static_cast<std::uint64_t>(counts[c]), -1);
            total.mul_integer(static_cast<std::uint64_t>(w.k / classes.size[c]), -counts[c]);
        }
    }
    if (!total.is_integer())
        throw std::logic_error("exact_expected_count: non-integer homomorphism total");
    out.sigma_total = total.numerator();

    FactoredRatio expectation = total;
    expectation.mul_factorial(static_cast<std::uint64_t>(w.vertex_count), -w.d);
    expectation.mul_factorial(static_cast<std::uint64_t>(w.vertex_count / w.k), w.d);
    expectation.mul_integer(static_cast<std::uint64_t>(w.k), w.d * (w.vertex_count / w.k));
    out.numerator = expectation.numerator();
    out.denominator = expectation.denominator();
    return out;
}

ExactWeight to_exact_weight(const HyperedgeWeight& w, long long vertex_count, double tol) {
    if (w.alphabet != 2) throw std::invalid_argument("to_exact_weight: alphabet must be 2");
    if (!w.is_cyclically_invariant(tol))
        throw std::invalid_argument("to_exact_weight: weight is not cyclically invariant");
    const CyclicClasses classes = cyclic_classes(w.k);
    ExactWeight out;
    out.d = w.d;
    out.k = w.k;
    out.vertex_count = vertex_count;

    auto round_exact = [&](double value, const char* what) {
        const double nearest = std::round(value);
        if (std::abs(value - nearest) > tol)
            throw std::invalid_argument(std::string("to_exact_weight: ") + what +
                                        " is not integral at this size");
        return static_cast<long long>(nearest);
    };

    out.symbol_counts = {
        round_exact(w.vertex[0] * static_cast<double>(vertex_count), "vertex count"),
        round_exact(w.vertex[1] * static_cast<double>(vertex_count), "vertex count")};
    out.class_counts.assign(static_cast<std::size_t>(w.d), {});
    const double orbits = static_cast<double>(vertex_count) / w.k;
    for (int i = 0; i < w.d; ++i) {
        auto& counts = out.class_counts[static_cast<std::size_t>(i)];
        counts.resize(classes.representative.size());
        for (std::size_t c = 0; c < counts.size(); ++c) {
            // orbits of class c in part i = (n/k) * |class| * W(representative)
            const double class_mass =
                w.edge[static_cast<std::size_t>(i)][classes.representative[c]] * classes.size[c];
            counts[c] = round_exact(class_mass * orbits, "orbit count");
        }
    }
    return out;
}

} // namespace ldpclab
