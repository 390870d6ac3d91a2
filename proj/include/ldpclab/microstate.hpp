#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ldpclab/factor_graph.hpp"
#include "ldpclab/gf2.hpp"
#include "ldpclab/group_geometry.hpp"
#include "ldpclab/rng.hpp"
#include "ldpclab/weights.hpp"

namespace ldpclab {

double normalized_hamming(const BitVec& x, const BitVec& y);

// Shape of a sampled code: dimension, minimum distance, weight spectrum.
struct CodeStats {
    int n = 0, d = 0, k = 0;
    std::size_t dimension = 0;
    bool exact = false;                         // spectrum enumerated vs sampled
    std::size_t min_weight = 0;                 // lower bound 1 when not exact
    std::vector<std::uint64_t> weight_spectrum; // exact mode: count per weight
    std::vector<std::uint64_t> sampled_weights; // sampled mode: histogram per weight
};

CodeStats code_stats(const FactorGraph& h, RngStream& rng, std::size_t enumeration_cap = 25,
                     std::size_t samples = 2000);

// delta-connectivity clusters of a finite point set under normalized Hamming
// distance (union-find over pairs with distance < delta).
struct ClusterReport {
    double eps = 0.0, delta = 0.0;
    std::size_t points = 0;                       // points clustered (code mode: |C|)
    std::vector<std::uint64_t> distance_counts;   // index = absolute distance
    bool gap_empty = true;                        // no distance in [eps*n, delta*n)
    std::uint64_t cluster_count = 0;
    std::vector<std::uint64_t> cluster_sizes;     // descending (uniform in code mode)

    std::string to_json() const;
};

ClusterReport cluster_decomposition(const std::vector<BitVec>& points, double delta,
                                    double eps = 0.0, std::size_t max_points = 10000);

// For a linear code the clusters are the cosets of the span of the codewords
// of weight < delta*n, so no pairwise pass is needed. The distance histogram
// is the weight spectrum (the distance multiset from any fixed codeword).
ClusterReport cluster_decomposition_code(const LinearCode& code, double delta, double eps = 0.0,
                                         std::size_t enumeration_cap = 25);

// True when no nonzero codeword has normalized weight in [lo, hi).
bool code_weight_band_empty(const LinearCode& code, double lo, double hi,
                            std::size_t enumeration_cap = 25);

// Approximate codewords: labelings violating at most an eta fraction of the
// checks of every part. Exhaustive over all 2^n labelings (n <= 25).
struct BandCount {
    double lo = 0.0, hi = 0.0;  // normalized weight band [lo, hi)
    std::uint64_t count = 0;
};
std::vector<BandCount> approx_codeword_band_counts(const FactorGraph& h, double eta,
                                                   const std::vector<std::pair<double, double>>& bands);

// Sampling estimate of the same band densities (fraction of all 2^n words).
struct BandEstimate {
    double lo = 0.0, hi = 0.0;
    double density = 0.0;
    double std_error = 0.0;
};
std::vector<BandEstimate> approx_codeword_band_density_sampled(
    const FactorGraph& h, double eta, const std::vector<std::pair<double, double>>& bands,
    std::size_t samples, RngStream& rng);

// Pullback coordinates at v: vertex sigma(g^{-1}) v for every ball element g,
// in ball order. Repeats occur exactly when the orbit map is not injective.
std::vector<std::size_t> pullback_coords(const UniformHomomorphism& sigma,
                                         const std::vector<GroupWord>& ball, std::uint32_t v);

bool orbit_map_injective(const UniformHomomorphism& sigma, const std::vector<GroupWord>& ball,
                         std::uint32_t v);

// Projection of the code onto the pullback coordinates at v; the uniform
// measure on the result is the local marginal of the code measure at v.
LinearCode localized_marginal(const UniformHomomorphism& sigma, const LinearCode& code,
                              std::uint32_t v, const std::vector<GroupWord>& ball);

// v is proper when its localized marginal equals the ball code. Dimension
// equality plus an injective orbit map suffices (the local projection is then
// contained in the ball code); otherwise the containment is checked directly.
bool vertex_is_proper(const UniformHomomorphism& sigma, const LinearCode& code, std::uint32_t v,
                      const BallCode& ball);

double proper_fraction(const UniformHomomorphism& sigma, const LinearCode& code,
                       const BallCode& ball);

// log 2 times the dimension of the code projected onto Vert_r(H; S): the
// Shannon entropy (nats) of the joint marginal over the r-neighborhoods of S.
double property_m_entropy(const FactorGraph& h, const LinearCode& code,
                          const std::vector<std::uint32_t>& s, int r);

// Average of the empirical hyper-edge weight over uniform codeword samples.
HyperedgeWeight mean_empirical_weight(const UniformHomomorphism& sigma, const LinearCode& code,
                                      std::size_t samples, RngStream& rng);

// Kernel vectors of the transposed parity-check matrix restricted to rows
// outside Vert(M;F) and columns outside F; flags those with a part whose
// weight is bounded away from both 0 and full by eps*delta*n/k.
struct NearCancellationReport {
    std::size_t kernel_dim = 0;
    std::uint64_t enumerated = 0;
    std::uint64_t flagged = 0;
};
NearCancellationReport near_cancellation_search(const FactorGraph& h,
                                                const std::vector<std::uint32_t>& f_checks,
                                                double eps, double delta,
                                                std::size_t enumeration_cap = 25);

std::size_t transpose_kernel_dim(const FactorGraph& h);

// Whether some subset of check nodes covers every vertex exactly twice. Such
// a subset lies in ker(H^T), so enumerating that kernel is exhaustive.
bool detect_double_cover(const FactorGraph& h, std::size_t enumeration_cap = 25);

} // namespace ldpclab
