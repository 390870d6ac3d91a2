#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ldpclab/gf2.hpp"
#include "ldpclab/group_geometry.hpp"
#include "ldpclab/rng.hpp"

namespace ldpclab {

// Homomorphism of the free product into Sym(n) whose generator images are
// k-uniform permutations (cycle type [k^(n/k)]).
struct UniformHomomorphism {
    int n = 0, d = 0, k = 0;
    std::vector<std::vector<std::uint32_t>> perms; // perms[i][v] = sigma_i(v)

    // sigma(s_i^j)(v) without precomputed power tables.
    std::uint32_t apply_power(int gen, int power, std::uint32_t v) const;
    // sigma(w)(v) and sigma(w^{-1})(v) for a normal-form word.
    std::uint32_t apply_word(const GroupWord& w, std::uint32_t v) const;
    std::uint32_t apply_word_inverse(const GroupWord& w, std::uint32_t v) const;

    bool valid() const; // every generator image has cycle type [k^(n/k)]
};

// Bipartite incidence between n vertices and dn/k check nodes split into d
// parts of n/k. Check node tuples are stored in orbit order, so a graph built
// from a homomorphism remembers the cyclic orders and can reproduce it.
struct FactorGraph {
    int n = 0, d = 0, k = 0;
    // Part i occupies global check indices [i*n/k, (i+1)*n/k).
    std::vector<std::vector<std::uint32_t>> checks; // k distinct vertices each
    // True for permutation-model graphs: within each part the checks
    // partition the vertex set. The uniform model does not have this.
    bool partitioned = true;

    int checks_per_part() const { return n / k; }
    int num_checks() const { return d * (n / k); }
    int part_of(std::size_t check) const { return static_cast<int>(check) / checks_per_part(); }

    // checks incident to each vertex, grouped by part when partitioned
    std::vector<std::vector<std::uint32_t>> vertex_to_checks() const;

    UniformHomomorphism to_homomorphism() const; // requires partitioned
    BitMatrix parity_check_matrix() const;       // (dn/k) x n, row e = indicator of its tuple

    std::string to_json() const;
    static FactorGraph from_json(const std::string& text);
};

// Partial factor graph: incidence restricted to a subset F of the check
// nodes. Vertices meet at most one check per part inside F.
struct PartialFactorGraph {
    int n = 0, d = 0, k = 0;
    std::vector<std::uint32_t> check_ids;           // global ids, sorted
    std::vector<std::vector<std::uint32_t>> tuples; // tuple for each id

    std::vector<std::uint32_t> covered_vertices(int part) const; // Vert(M; F cap E_i)
    std::vector<std::uint32_t> covered_vertices() const;         // Vert(M; F), sorted
    void validate() const;
};

// sigma uniform over k-uniform homomorphisms, with the coupled factor-graph
// labeling chosen uniformly at random.
std::pair<UniformHomomorphism, FactorGraph> sample_permutation_model(int n, int d, int k,
                                                                     RngStream& rng);

// Uniform simple k-regular-by-d-regular bipartite graph via stub matching
// with rejection; no per-part partition structure.
FactorGraph sample_uniform_model(int n, int d, int k, RngStream& rng,
                                 int retry_budget = 10000);

// Completes a partial factor graph: for each part, the uncovered vertices are
// split into a uniform labelled partition with fresh uniform cyclic orders.
FactorGraph sample_conditioned(const PartialFactorGraph& m, RngStream& rng);

PartialFactorGraph restrict_to_checks(const FactorGraph& h, std::vector<std::uint32_t> check_ids);

// Neighborhood operators. Vert_1 of a check set is the union of its tuples;
// Check_1 of a vertex set is the set of incident checks; one mixed round
// composes the two, and radius r iterates the mixed round.
std::vector<std::uint32_t> vert_neighborhood_of_checks(const FactorGraph& h,
                                                       const std::vector<std::uint32_t>& checks,
                                                       int r = 1);
std::vector<std::uint32_t> vert_neighborhood(const FactorGraph& h,
                                             const std::vector<std::uint32_t>& vertices, int r);
std::vector<std::uint32_t> check_neighborhood(const FactorGraph& h,
                                              const std::vector<std::uint32_t>& vertices, int r);

// Graph metric induced by sigma: neighbors of v are all generator-power
// images of v. BFS up to r_max; nullopt when no path that short exists.
std::optional<int> sigma_distance(const FactorGraph& h, std::uint32_t v, std::uint32_t w,
                                  int r_max);

// Greedy maximal r-separated set, scanning vertices in index order.
std::vector<std::uint32_t> greedy_separated_set(const FactorGraph& h, int r);

} // namespace ldpclab
