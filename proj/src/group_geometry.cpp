#include "ldpclab/group_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include "ldpclab/errors.hpp"

namespace ldpclab {

GroupWord GroupWord::appended(int gen, int power, int k) const {
    GroupWord out = *this;
    power = ((power % k) + k) % k;
    if (power == 0) return out;
    if (!out.letters.empty() && out.letters.back().gen == gen) {
        int merged = (out.letters.back().power + power) % k;
        if (merged == 0)
            out.letters.pop_back();
        else
            out.letters.back().power = static_cast<std::uint8_t>(merged);
    } else {
        out.letters.push_back({static_cast<std::uint8_t>(gen), static_cast<std::uint8_t>(power)});
    }
    return out;
}

GroupWord GroupWord::inverse(int k) const {
    GroupWord out;
    out.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
        out.letters.push_back({it->gen, static_cast<std::uint8_t>(k - it->power)});
    return out;
}

std::string GroupWord::to_string() const {
    if (letters.empty()) return "e";
    std::string out;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i) out += '.';
        out += 's' + std::to_string(letters[i].gen + 1) + '^' + std::to_string(letters[i].power);
    }
    return out;
}

std::vector<GroupWord> enumerate_ball(int d, int k, int r, std::size_t vertex_cap) {
    if (d < 1 || k < 2 || r < 0) throw std::invalid_argument("enumerate_ball: need d>=1, k>=2, r>=0");
    std::vector<GroupWord> ball{GroupWord{}};
    std::size_t level_begin = 0;
    for (int depth = 0; depth < r; ++depth) {
        const std::size_t level_end = ball.size();
        std::vector<GroupWord> next;
        for (std::size_t i = level_begin; i < level_end; ++i) {
            // In normal form, appending any power of a fresh generator strictly
            // extends the word, so children never collide with shorter words.
            for (int gen = 0; gen < d; ++gen) {
                if (!ball[i].letters.empty() && ball[i].letters.back().gen == gen) continue;
                for (int power = 1; power < k; ++power) next.push_back(ball[i].appended(gen, power, k));
            }
        }
        std::sort(next.begin(), next.end());
        if (ball.size() + next.size() > vertex_cap)
            throw resource_error("enumerate_ball: ball size exceeds cap of " +
                                 std::to_string(vertex_cap) + " vertices");
        level_begin = level_end;
        ball.insert(ball.end(), next.begin(), next.end());
    }
    return ball;
}

BitMatrix BallCode::check_matrix() const {
    BitMatrix m(hyperedges.size(), vertices.size());
    for (std::size_t e = 0; e < hyperedges.size(); ++e)
        for (auto v : hyperedges[e]) m.set(e, v, true);
    return m;
}

std::size_t BallCode::index_of(const GroupWord& w) const {
    auto less_bfs = [](const GroupWord& a, const GroupWord& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        return a.letters < b.letters;
    };
    auto it = std::lower_bound(vertices.begin(), vertices.end(), w, less_bfs);
    if (it != vertices.end() && *it == w) return static_cast<std::size_t>(it - vertices.begin());
    return vertices.size();
}

std::string BallCode::to_json() const {
    std::string out = "{\"d\":" + std::to_string(d) + ",\"k\":" + std::to_string(k) +
                      ",\"r\":" + std::to_string(r) + ",\"vertex_words\":[";
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (i) out += ',';
        out += '"' + vertices[i].to_string() + '"';
    }
    out += "],\"hyperedges\":[";
    for (std::size_t e = 0; e < hyperedges.size(); ++e) {
        if (e) out += ',';
        out += '[';
        for (std::size_t j = 0; j < hyperedges[e].size(); ++j) {
            if (j) out += ',';
            out += std::to_string(hyperedges[e][j]);
        }
        out += ']';
    }
    out += "],\"dimension\":" + std::to_string(dimension) + "}";
    return out;
}

BallCode ball_code(int d, int k, int r, std::size_t vertex_cap) {
    BallCode bc;
    bc.d = d;
    bc.k = k;
    bc.r = r;
    bc.vertices = enumerate_ball(d, k, r, vertex_cap);

    std::map<GroupWord, std::size_t> index;
    for (std::size_t i = 0; i < bc.vertices.size(); ++i) index.emplace(bc.vertices[i], i);

    // A hyperedge is a right-multiplication orbit {g * s_i^j : j in Z_k};
    // walking the orbit from every member finds it k times, so dedupe.
    std::set<std::vector<std::size_t>> seen;
    for (const auto& g : bc.vertices) {
        for (int gen = 0; gen < d; ++gen) {
            std::vector<std::size_t> edge;
            edge.reserve(static_cast<std::size_t>(k));
            bool inside = true;
            GroupWord cur = g;
            for (int j = 0; j < k; ++j) {
                auto it = index.find(cur);
                if (it == index.end()) {
                    inside = false;
                    break;
                }
                edge.push_back(it->second);
                cur = cur.appended(gen, 1, k);
            }
            if (!inside) continue;
            std::sort(edge.begin(), edge.end());
            seen.insert(std::move(edge));
        }
    }
    bc.hyperedges.assign(seen.begin(), seen.end());

    bc.dimension = bc.vertices.size() - bc.hyperedges.size();
    bc.code = kernel_basis(bc.check_matrix());
    // Internal checks of a hyper-tree ball are independent; the rank
    // computation cross-validates the combinatorial dimension.
    if (bc.code.dimension() != bc.dimension)
        throw std::logic_error("ball_code: combinatorial dimension disagrees with GF(2) rank");
    return bc;
}

double haar_marginal_entropy(const BallCode& code) {
    return static_cast<double>(code.dimension) * std::log(2.0);
}

} // namespace ldpclab
