#pragma once

#include <cstdint>
#include <vector>

#include "ldpclab/bigint.hpp"
#include "ldpclab/factor_graph.hpp"
#include "ldpclab/gf2.hpp"

namespace ldpclab {

// Hyper-edge statistics of a binary labeling: for each generator part, a
// probability vector over k-tuples (indexed by bitmask, bit j = value at
// position j), plus the single-site marginal.
struct HyperedgeWeight {
    int d = 0, k = 0;
    int alphabet = 2;
    std::vector<std::vector<double>> edge; // d vectors of length alphabet^k
    std::vector<double> vertex;            // length alphabet

    std::size_t tuple_count() const;

    bool is_consistent(double tol = 1e-9) const;
    bool is_cyclically_invariant(double tol = 1e-9) const;
    bool even_parity_supported(double tol = 1e-12) const; // alphabet 2 only
};

// Edge and vertex statistics of the labeling x over sigma: for each i the
// empirical distribution of the orbit tuples (x(v), x(sigma_i v), ...).
HyperedgeWeight empirical_weight(const BitVec& x, const UniformHomomorphism& sigma);

// Vertex weight uniform, each edge weight uniform on even-parity k-tuples.
HyperedgeWeight haar_weight(int d, int k);

// (1-d) H(vertex) + (1/k) sum_i H(edge_i), in nats.
// Throws std::invalid_argument for inconsistent weights.
double kikuchi_entropy(const HyperedgeWeight& w, double tol = 1e-9);

// Necklace classes: orbits of {0,1}^k under cyclic rotation.
struct CyclicClasses {
    std::vector<std::uint32_t> representative; // minimal rotation, per class
    std::vector<int> size;                     // orbit size (divides k)
    std::vector<int> ones;                     // popcount of the representative
    std::vector<std::size_t> class_of;         // tuple bitmask -> class index
};
CyclicClasses cyclic_classes(int k);

// Cyclically invariant weight with all counts integral: m[a] vertices carry
// symbol a (sum = vertex count), and in part i exactly class_counts[i][c]
// orbits carry necklace class c (sum = vertex_count / k per part).
struct ExactWeight {
    int d = 0, k = 0;
    long long vertex_count = 0;
    std::vector<long long> symbol_counts;                  // length 2
    std::vector<std::vector<long long>> class_counts;      // d x #classes

    // symbol counts implied by the class counts match symbol_counts
    bool realizable(const CyclicClasses& classes) const;
};

// Exact expected number, over the uniform k-uniform homomorphism model, of
// labelings whose statistics equal the given exact weight. sigma_total is the
// total count over all homomorphisms (an integer); the expectation is
// numerator/denominator in lowest terms. Unrealizable weights give zero.
struct ExactCount {
    bool realizable = false;
    BigUint sigma_total;
    BigUint numerator;
    BigUint denominator;
};

ExactCount exact_expected_count(const ExactWeight& w);

// Number of k-uniform homomorphisms on `vertex_count` points (d generators).
BigUint homomorphism_count(int d, int k, long long vertex_count);

// Rounds a floating weight with denominator equal to vertex_count. Throws
// std::invalid_argument when some count is farther than tol from an integer
// or the weight is not cyclically invariant.
ExactWeight to_exact_weight(const HyperedgeWeight& w, long long vertex_count, double tol = 1e-6);

} // namespace ldpclab
