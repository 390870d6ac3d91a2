#include "ldpclab/microstate.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "ldpclab/errors.hpp"

namespace ldpclab {

double normalized_hamming(const BitVec& x, const BitVec& y) {
    if (x.size() != y.size() || x.size() == 0)
        throw std::invalid_argument("normalized_hamming: length mismatch");
    BitVec diff = x;
    diff ^= y;
    return static_cast<double>(diff.weight()) / static_cast<double>(x.size());
}

CodeStats code_stats(const FactorGraph& h, RngStream& rng, std::size_t enumeration_cap,
                     std::size_t samples) {
    CodeStats stats;
    stats.n = h.n;
    stats.d = h.d;
    stats.k = h.k;
    const LinearCode code = kernel_basis(h.parity_check_matrix());
    stats.dimension = code.dimension();
    if (code.dimension() <= enumeration_cap) {
        stats.exact = true;
        stats.weight_spectrum.assign(static_cast<std::size_t>(h.n) + 1, 0);
        code.for_each_codeword([&](const BitVec& v) { ++stats.weight_spectrum[v.weight()]; });
        stats.min_weight = static_cast<std::size_t>(h.n) + 1;
        for (std::size_t w = 1; w <= static_cast<std::size_t>(h.n); ++w)
            if (stats.weight_spectrum[w] != 0) {
                stats.min_weight = w;
                break;
            }
    } else {
        stats.exact = false;
        stats.min_weight = 1; // lower bound only
        stats.sampled_weights.assign(static_cast<std::size_t>(h.n) + 1, 0);
        for (std::size_t i = 0; i < samples; ++i)
            ++stats.sampled_weights[code.uniform_codeword(rng).weight()];
    }
    return stats;
}

namespace {

struct UnionFind {
    explicit UnionFind(std::size_t n) : parent(n), size(n, 1) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
    }
    std::size_t find(std::size_t i) {
        std::size_t root = i;
        while (parent[root] != root) root = parent[root];
        while (parent[i] != root) {
            std::size_t next = parent[i];
            parent[i] = root;
            i = next;
        }
        return root;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size[a] < size[b]) std::swap(a, b);
        parent[b] = a;
        size[a] += size[b];
    }
    std::vector<std::size_t> parent, size;
};

void fill_gap_empty(ClusterReport& report, std::size_t n) {
    const auto lo = static_cast<std::size_t>(std::ceil(report.eps * static_cast<double>(n)));
    report.gap_empty = true;
    for (std::size_t w = lo; w < report.distance_counts.size(); ++w) {
        if (static_cast<double>(w) >= report.delta * static_cast<double>(n)) break;
        if (report.distance_counts[w] != 0) report.gap_empty = false;
    }
}

} // namespace

std::string ClusterReport::to_json() const {
    std::string out = "{\"eps\":" + std::to_string(eps) + ",\"delta\":" + std::to_string(delta) +
                      ",\"points\":" + std::to_string(points) +
                      ",\"gap_empty\":" + (gap_empty ? "true" : "false") +
                      ",\"cluster_count\":" + std::to_string(cluster_count) + ",\"cluster_sizes\":[";
    for (std::size_t i = 0; i < cluster_sizes.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(cluster_sizes[i]);
    }
    out += "],\"distance_histogram\":[";
    for (std::size_t i = 0; i < distance_counts.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(distance_counts[i]);
    }
    out += "]}";
    return out;
}

ClusterReport cluster_decomposition(const std::vector<BitVec>& points, double delta, double eps,
                                    std::size_t max_points) {
    if (points.empty()) throw std::invalid_argument("cluster_decomposition: no points");
    if (points.size() > max_points)
        throw resource_error("cluster_decomposition: too many points for the pairwise pass");
    const std::size_t n = points[0].size();
    ClusterReport report;
    report.eps = eps;
    report.delta = delta;
    report.points = points.size();
    report.distance_counts.assign(n + 1, 0);

    UnionFind uf(points.size());
    BitVec diff;
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            diff = points[i];
            diff ^= points[j];
            const std::size_t w = diff.weight();
            ++report.distance_counts[w];
            if (static_cast<double>(w) < delta * static_cast<double>(n)) uf.unite(i, j);
        }
    }
    for (std::size_t i = 0; i < points.size(); ++i)
        if (uf.find(i) == i) report.cluster_sizes.push_back(uf.size[i]);
    std::sort(report.cluster_sizes.rbegin(), report.cluster_sizes.rend());
    report.cluster_count = report.cluster_sizes.size();
    fill_gap_empty(report, n);
    return report;
}

ClusterReport cluster_decomposition_code(const LinearCode& code, double delta, double eps,
                                         std::size_t enumeration_cap) {
    const std::size_t n = code.ambient_dim();
    ClusterReport report;
    report.eps = eps;
    report.delta = delta;
    report.points = std::size_t(1) << code.dimension();
    report.distance_counts.assign(n + 1, 0);

    std::vector<BitVec> short_words;
    code.for_each_codeword(
        [&](const BitVec& v) {
            const std::size_t w = v.weight();
            ++report.distance_counts[w];
            if (w != 0 && static_cast<double>(w) < delta * static_cast<double>(n))
                short_words.push_back(v);
        },
        enumeration_cap);

    // x and y land in one cluster iff x + y lies in the span of the short
    // words, so the clusters are that subgroup's cosets.
    const LinearCode span = LinearCode::from_spanning(n, std::move(short_words));
    const std::size_t size_log2 = span.dimension();
    const std::size_t count_log2 = code.dimension() - size_log2;
    report.cluster_count = std::uint64_t(1) << count_log2;
    if (report.cluster_count <= 4096)
        report.cluster_sizes.assign(static_cast<std::size_t>(report.cluster_count),
                                    std::uint64_t(1) << size_log2);
    fill_gap_empty(report, n);
    return report;
}

bool code_weight_band_empty(const LinearCode& code, double lo, double hi,
                            std::size_t enumeration_cap) {
    const double n = static_cast<double>(code.ambient_dim());
    bool empty = true;
    code.for_each_codeword(
        [&](const BitVec& v) {
            const double w = static_cast<double>(v.weight());
            if (w >= lo * n && w < hi * n && v.weight() != 0) empty = false;
        },
        enumeration_cap);
    return empty;
}

namespace {

// check masks and per-part tallies for exhaustive scans over Z_2^n, n <= 25
struct MaskedChecks {
    std::vector<std::vector<std::uint32_t>> part_masks;
    int violations_allowed = 0;

    static MaskedChecks build(const FactorGraph& h, double eta) {
        if (h.n > 32) throw resource_error("masked check scan needs n <= 32");
        MaskedChecks mc;
        mc.part_masks.resize(static_cast<std::size_t>(h.d));
        for (std::size_t e = 0; e < h.checks.size(); ++e) {
            std::uint32_t mask = 0;
            for (auto v : h.checks[e]) mask |= std::uint32_t(1) << v;
            mc.part_masks[static_cast<std::size_t>(h.part_of(e))].push_back(mask);
        }
        mc.violations_allowed =
            static_cast<int>(std::floor(eta * static_cast<double>(h.checks_per_part())));
        return mc;
    }

    bool accepts(std::uint32_t word) const {
        for (const auto& masks : part_masks) {
            int violated = 0;
            for (auto m : masks)
                if (std::popcount(word & m) & 1) {
                    if (++violated > violations_allowed) return false;
                }
        }
        return true;
    }
};

} // namespace

std::vector<BandCount> approx_codeword_band_counts(
    const FactorGraph& h, double eta, const std::vector<std::pair<double, double>>& bands) {
    if (h.n > 25) throw resource_error("exhaustive approximate-codeword scan needs n <= 25");
    const MaskedChecks mc = MaskedChecks::build(h, eta);
    std::vector<BandCount> out;
    for (auto [lo, hi] : bands) out.push_back({lo, hi, 0});
    const std::uint64_t total = std::uint64_t(1) << h.n;
    const double n = static_cast<double>(h.n);
    for (std::uint64_t word = 0; word < total; ++word) {
        const auto w32 = static_cast<std::uint32_t>(word);
        if (!mc.accepts(w32)) continue;
        const double weight = static_cast<double>(std::popcount(w32));
        for (auto& band : out)
            if (weight >= band.lo * n && weight < band.hi * n) ++band.count;
    }
    return out;
}

std::vector<BandEstimate> approx_codeword_band_density_sampled(
    const FactorGraph& h, double eta, const std::vector<std::pair<double, double>>& bands,
    std::size_t samples, RngStream& rng) {
    if (h.n > 32) throw resource_error("sampled scan implemented for n <= 32");
    const MaskedChecks mc = MaskedChecks::build(h, eta);
    std::vector<std::uint64_t> hits(bands.size(), 0);
    const double n = static_cast<double>(h.n);
    for (std::size_t i = 0; i < samples; ++i) {
        const auto word = static_cast<std::uint32_t>(rng.next_u64() >> (64 - h.n));
        if (!mc.accepts(word)) continue;
        const double weight = static_cast<double>(std::popcount(word));
        for (std::size_t b = 0; b < bands.size(); ++b)
            if (weight >= bands[b].first * n && weight < bands[b].second * n) ++hits[b];
    }
    std::vector<BandEstimate> out;
    for (std::size_t b = 0; b < bands.size(); ++b) {
        const double p = static_cast<double>(hits[b]) / static_cast<double>(samples);
        out.push_back({bands[b].first, bands[b].second, p,
                       std::sqrt(p * (1.0 - p) / static_cast<double>(samples))});
    }
    return out;
}

std::vector<std::size_t> pullback_coords(const UniformHomomorphism& sigma,
                                         const std::vector<GroupWord>& ball, std::uint32_t v) {
    std::vector<std::size_t> coords;
    coords.reserve(ball.size());
    for (const auto& g : ball) coords.push_back(sigma.apply_word_inverse(g, v));
    return coords;
}

bool orbit_map_injective(const UniformHomomorphism& sigma, const std::vector<GroupWord>& ball,
                         std::uint32_t v) {
    auto coords = pullback_coords(sigma, ball, v);
    std::sort(coords.begin(), coords.end());
    return std::adjacent_find(coords.begin(), coords.end()) == coords.end();
}

LinearCode localized_marginal(const UniformHomomorphism& sigma, const LinearCode& code,
                              std::uint32_t v, const std::vector<GroupWord>& ball) {
    return code.project(pullback_coords(sigma, ball, v));
}

bool vertex_is_proper(const UniformHomomorphism& sigma, const LinearCode& code, std::uint32_t v,
                      const BallCode& ball) {
    const LinearCode local = localized_marginal(sigma, code, v, ball.vertices);
    if (local.dimension() != ball.dimension) return false;
    if (orbit_map_injective(sigma, ball.vertices, v)) return true;
    for (const auto& b : local.basis())
        if (!ball.code.contains(b)) return false;
    return true;
}

double proper_fraction(const UniformHomomorphism& sigma, const LinearCode& code,
                       const BallCode& ball) {
    std::size_t proper = 0;
    for (int v = 0; v < sigma.n; ++v)
        if (vertex_is_proper(sigma, code, static_cast<std::uint32_t>(v), ball)) ++proper;
    return static_cast<double>(proper) / static_cast<double>(sigma.n);
}

double property_m_entropy(const FactorGraph& h, const LinearCode& code,
                          const std::vector<std::uint32_t>& s, int r) {
    if (s.empty()) return 0.0;
    const auto verts = vert_neighborhood(h, s, r);
    std::vector<std::size_t> coords(verts.begin(), verts.end());
    return static_cast<double>(code.project(coords).dimension()) * std::log(2.0);
}

HyperedgeWeight mean_empirical_weight(const UniformHomomorphism& sigma, const LinearCode& code,
                                      std::size_t samples, RngStream& rng) {
    if (samples == 0) throw std::invalid_argument("mean_empirical_weight: samples must be > 0");
    HyperedgeWeight mean;
    for (std::size_t i = 0; i < samples; ++i) {
        const HyperedgeWeight w = empirical_weight(code.uniform_codeword(rng), sigma);
        if (i == 0) {
            mean = w;
            continue;
        }
        for (int part = 0; part < mean.d; ++part)
            for (std::size_t a = 0; a < mean.edge[static_cast<std::size_t>(part)].size(); ++a)
                mean.edge[static_cast<std::size_t>(part)][a] +=
                    w.edge[static_cast<std::size_t>(part)][a];
        for (std::size_t a = 0; a < mean.vertex.size(); ++a) mean.vertex[a] += w.vertex[a];
    }
    const double inv = 1.0 / static_cast<double>(samples);
    for (auto& part : mean.edge)
        for (auto& x : part) x *= inv;
    for (auto& x : mean.vertex) x *= inv;
    return mean;
}

NearCancellationReport near_cancellation_search(const FactorGraph& h,
                                                const std::vector<std::uint32_t>& f_checks,
                                                double eps, double delta,
                                                std::size_t enumeration_cap) {
    std::vector<bool> in_f(h.checks.size(), false);
    for (auto e : f_checks) in_f.at(e) = true;

    const auto m = restrict_to_checks(h, f_checks);
    const auto covered = m.covered_vertices();
    std::vector<bool> in_w(static_cast<std::size_t>(h.n), false);
    for (auto v : covered) in_w[v] = true;

    std::vector<std::size_t> free_checks; // columns, in global check order
    for (std::size_t e = 0; e < h.checks.size(); ++e)
        if (!in_f[e]) free_checks.push_back(e);

    // rows: vertices outside W; columns: checks outside F
    std::vector<std::size_t> free_rows;
    for (std::uint32_t v = 0; v < static_cast<std::uint32_t>(h.n); ++v)
        if (!in_w[v]) free_rows.push_back(v);

    BitMatrix sub(free_rows.size(), free_checks.size());
    {
        std::vector<std::size_t> row_pos(static_cast<std::size_t>(h.n), free_rows.size());
        for (std::size_t r = 0; r < free_rows.size(); ++r) row_pos[free_rows[r]] = r;
        for (std::size_t c = 0; c < free_checks.size(); ++c)
            for (auto v : h.checks[free_checks[c]])
                if (row_pos[v] != free_rows.size()) sub.set(row_pos[v], c, true);
    }

    const LinearCode kernel = kernel_basis(sub);
    NearCancellationReport report;
    report.kernel_dim = kernel.dimension();

    // per-part free-column counts and column -> part map
    std::vector<std::size_t> part_sizes(static_cast<std::size_t>(h.d), 0);
    std::vector<int> col_part(free_checks.size());
    for (std::size_t c = 0; c < free_checks.size(); ++c) {
        col_part[c] = h.part_of(free_checks[c]);
        ++part_sizes[static_cast<std::size_t>(col_part[c])];
    }
    const double threshold = eps * delta * static_cast<double>(h.n) / static_cast<double>(h.k);

    kernel.for_each_codeword(
        [&](const BitVec& y) {
            ++report.enumerated;
            if (y.is_zero()) return;
            std::vector<std::size_t> part_weight(static_cast<std::size_t>(h.d), 0);
            for (std::size_t c = 0; c < free_checks.size(); ++c)
                if (y.get(c)) ++part_weight[static_cast<std::size_t>(col_part[c])];
            for (int i = 0; i < h.d; ++i) {
                const double li = static_cast<double>(part_weight[static_cast<std::size_t>(i)]);
                const double mi = static_cast<double>(part_sizes[static_cast<std::size_t>(i)]);
                if (std::min(li, mi - li) >= threshold) {
                    ++report.flagged;
                    return;
                }
            }
        },
        enumeration_cap);
    return report;
}

std::size_t transpose_kernel_dim(const FactorGraph& h) {
    return h.checks.size() - gf2_rank(h.parity_check_matrix());
}

bool detect_double_cover(const FactorGraph& h, std::size_t enumeration_cap) {
    const LinearCode kernel = kernel_basis(h.parity_check_matrix().transposed());
    const std::size_t target_support = 2 * static_cast<std::size_t>(h.n) / h.k;
    bool found = false;
    std::vector<int> coverage(static_cast<std::size_t>(h.n));
    kernel.for_each_codeword(
        [&](const BitVec& y) {
            if (found || y.weight() != target_support) return;
            std::fill(coverage.begin(), coverage.end(), 0);
            for (std::size_t e = 0; e < h.checks.size(); ++e)
                if (y.get(e))
                    for (auto v : h.checks[e]) ++coverage[v];
            found = std::all_of(coverage.begin(), coverage.end(), [](int c) { return c == 2; });
        },
        enumeration_cap);
    return found;
}

} // namespace ldpclab
