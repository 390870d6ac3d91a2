#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ldpclab/gf2.hpp"

namespace ldpclab {

// Normal-form element of the d-fold free product of order-k cyclic groups:
// a sequence of letters (generator index, power) with adjacent letters using
// distinct generators and powers in {1, ..., k-1}. Word length counts letters,
// i.e. the metric is taken with respect to the generating set of all
// generator powers.
struct GroupWord {
    struct Letter {
        std::uint8_t gen;   // in [0, d)
        std::uint8_t power; // in [1, k)
        friend bool operator==(const Letter&, const Letter&) = default;
        friend auto operator<=>(const Letter&, const Letter&) = default;
    };
    std::vector<Letter> letters;

    std::size_t length() const { return letters.size(); }
    bool is_identity() const { return letters.empty(); }

    // Right-multiplies by gen^power and renormalizes (merges with the last
    // letter when generators match; a power summing to 0 mod k cancels it).
    GroupWord appended(int gen, int power, int k) const;
    GroupWord inverse(int k) const;

    std::string to_string() const; // "s1^2.s3^1", identity is "e"

    friend bool operator==(const GroupWord&, const GroupWord&) = default;
    friend auto operator<=>(const GroupWord&, const GroupWord&) = default;
};

// All elements of word length <= r, identity first, each level sorted
// lexicographically by letter sequence. Throws resource_error when the ball
// exceeds vertex_cap.
std::vector<GroupWord> enumerate_ball(int d, int k, int r,
                                      std::size_t vertex_cap = 1000000);

// The radius-r ball of the Cayley hyper-tree together with the code cut out
// by the parity checks fully contained in it.
struct BallCode {
    int d = 0, k = 0, r = 0;
    std::vector<GroupWord> vertices;                     // BFS order; index = coordinate
    std::vector<std::vector<std::size_t>> hyperedges;    // sorted k-subsets of vertex indices
    std::size_t dimension = 0;                           // = vertices - hyperedges (checks independent)
    LinearCode code;                                     // kernel of the internal-check matrix

    BitMatrix check_matrix() const;
    std::size_t index_of(const GroupWord& w) const; // vertices.size() when absent
    std::string to_json() const;
};

BallCode ball_code(int d, int k, int r, std::size_t vertex_cap = 1000000);

// Shannon entropy (nats) of the uniform distribution on the ball code.
double haar_marginal_entropy(const BallCode& code);

} // namespace ldpclab
