#include "ldpclab/factor_graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "ldpclab/errors.hpp"

namespace ldpclab {

std::uint32_t UniformHomomorphism::apply_power(int gen, int power, std::uint32_t v) const {
    power = ((power % k) + k) % k;
    for (int j = 0; j < power; ++j) v = perms[static_cast<std::size_t>(gen)][v];
    return v;
}

std::uint32_t UniformHomomorphism::apply_word(const GroupWord& w, std::uint32_t v) const {
    // sigma(l_1 ... l_m) v applies the rightmost letter first
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        v = apply_power(it->gen, it->power, v);
    return v;
}

std::uint32_t UniformHomomorphism::apply_word_inverse(const GroupWord& w, std::uint32_t v) const {
    for (const auto& letter : w.letters) v = apply_power(letter.gen, k - letter.power, v);
    return v;
}

bool UniformHomomorphism::valid() const {
    if (n <= 0 || k < 2 || n % k != 0 || static_cast<int>(perms.size()) != d) return false;
    for (const auto& p : perms) {
        if (static_cast<int>(p.size()) != n) return false;
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        for (int v = 0; v < n; ++v) {
            if (seen[static_cast<std::size_t>(v)]) continue;
            std::uint32_t u = static_cast<std::uint32_t>(v);
            int len = 0;
            do {
                if (u >= static_cast<std::uint32_t>(n) || seen[u]) return false;
                seen[u] = true;
                u = p[u];
                ++len;
            } while (u != static_cast<std::uint32_t>(v));
            if (len != k) return false;
        }
    }
    return true;
}

std::vector<std::vector<std::uint32_t>> FactorGraph::vertex_to_checks() const {
    std::vector<std::vector<std::uint32_t>> incident(static_cast<std::size_t>(n));
    for (std::size_t e = 0; e < checks.size(); ++e)
        for (auto v : checks[e]) incident[v].push_back(static_cast<std::uint32_t>(e));
    return incident;
}

UniformHomomorphism FactorGraph::to_homomorphism() const {
    if (!partitioned)
        throw std::invalid_argument("to_homomorphism: graph has no partition structure");
    UniformHomomorphism sigma;
    sigma.n = n;
    sigma.d = d;
    sigma.k = k;
    sigma.perms.assign(static_cast<std::size_t>(d),
                       std::vector<std::uint32_t>(static_cast<std::size_t>(n)));
    for (std::size_t e = 0; e < checks.size(); ++e) {
        auto& perm = sigma.perms[static_cast<std::size_t>(part_of(e))];
        const auto& tuple = checks[e];
        for (int t = 0; t < k; ++t) perm[tuple[static_cast<std::size_t>(t)]] =
            tuple[static_cast<std::size_t>((t + 1) % k)];
    }
    return sigma;
}

BitMatrix FactorGraph::parity_check_matrix() const {
    BitMatrix m(checks.size(), static_cast<std::size_t>(n));
    for (std::size_t e = 0; e < checks.size(); ++e)
        for (auto v : checks[e]) m.set(e, v, true);
    return m;
}

std::string FactorGraph::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["d"] = d;
    j["k"] = k;
    j["partitioned"] = partitioned;
    j["checks"] = checks;
    return j.dump();
}

FactorGraph FactorGraph::from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    FactorGraph g;
    g.n = j.at("n").get<int>();
    g.d = j.at("d").get<int>();
    g.k = j.at("k").get<int>();
    g.partitioned = j.value("partitioned", true);
    g.checks = j.at("checks").get<std::vector<std::vector<std::uint32_t>>>();
    if (static_cast<int>(g.checks.size()) != g.num_checks())
        throw config_error("factor graph json: wrong number of checks");
    for (const auto& tuple : g.checks)
        if (static_cast<int>(tuple.size()) != g.k)
            throw config_error("factor graph json: check of wrong arity");
    return g;
}

std::vector<std::uint32_t> PartialFactorGraph::covered_vertices(int part) const {
    std::vector<std::uint32_t> out;
    const int per_part = n / k;
    for (std::size_t i = 0; i < check_ids.size(); ++i)
        if (static_cast<int>(check_ids[i]) / per_part == part)
            out.insert(out.end(), tuples[i].begin(), tuples[i].end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint32_t> PartialFactorGraph::covered_vertices() const {
    std::vector<std::uint32_t> out;
    for (const auto& tuple : tuples) out.insert(out.end(), tuple.begin(), tuple.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void PartialFactorGraph::validate() const {
    if (n <= 0 || k < 2 || n % k != 0) throw std::invalid_argument("partial graph: bad sizes");
    if (check_ids.size() != tuples.size())
        throw std::invalid_argument("partial graph: ids/tuples mismatch");
    for (int part = 0; part < d; ++part) {
        auto covered = covered_vertices(part);
        if (std::adjacent_find(covered.begin(), covered.end()) != covered.end())
            throw std::invalid_argument("partial graph: vertex meets two checks in one part");
    }
    for (const auto& tuple : tuples) {
        if (static_cast<int>(tuple.size()) != k)
            throw std::invalid_argument("partial graph: check of wrong arity");
        std::set<std::uint32_t> distinct(tuple.begin(), tuple.end());
        if (static_cast<int>(distinct.size()) != k)
            throw std::invalid_argument("partial graph: repeated vertex in a check");
    }
}

std::pair<UniformHomomorphism, FactorGraph> sample_permutation_model(int n, int d, int k,
                                                                     RngStream& rng) {
    if (k < 2 || d < 1 || n < k || n % k != 0)
        throw std::invalid_argument("sample_permutation_model: need k|n, n>=k, d>=1, k>=2");
    FactorGraph g;
    g.n = n;
    g.d = d;
    g.k = k;
    g.partitioned = true;
    g.checks.reserve(static_cast<std::size_t>(g.num_checks()));

    // A shuffled vertex list cut into consecutive k-blocks is exactly uniform
    // over cycle-type-[k^(n/k)] permutations (constant multiplicity), and the
    // block order gives a uniform labeling of the orbits by check ids.
    std::vector<std::uint32_t> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0u);
    for (int i = 0; i < d; ++i) {
        rng.shuffle(order);
        for (int c = 0; c < n / k; ++c) {
            std::vector<std::uint32_t> tuple(order.begin() + static_cast<std::ptrdiff_t>(c) * k,
                                             order.begin() + static_cast<std::ptrdiff_t>(c + 1) * k);
            g.checks.push_back(std::move(tuple));
        }
    }
    return {g.to_homomorphism(), std::move(g)};
}

FactorGraph sample_uniform_model(int n, int d, int k, RngStream& rng, int retry_budget) {
    if (k < 2 || d < 1 || n < k || n % k != 0)
        throw std::invalid_argument("sample_uniform_model: need k|n, n>=k, d>=1, k>=2");
    const int num_checks = d * (n / k);
    std::vector<std::uint32_t> vertex_stubs;
    vertex_stubs.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(d));
    for (int v = 0; v < n; ++v)
        for (int j = 0; j < d; ++j) vertex_stubs.push_back(static_cast<std::uint32_t>(v));

    for (int attempt = 0; attempt < retry_budget; ++attempt) {
        rng.shuffle(vertex_stubs);
        FactorGraph g;
        g.n = n;
        g.d = d;
        g.k = k;
        g.partitioned = false;
        g.checks.assign(static_cast<std::size_t>(num_checks), {});
        bool simple = true;
        std::size_t pos = 0;
        for (int e = 0; e < num_checks && simple; ++e) {
            auto& tuple = g.checks[static_cast<std::size_t>(e)];
            tuple.assign(vertex_stubs.begin() + static_cast<std::ptrdiff_t>(pos),
                         vertex_stubs.begin() + static_cast<std::ptrdiff_t>(pos + k));
            pos += static_cast<std::size_t>(k);
            std::vector<std::uint32_t> sorted(tuple);
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) simple = false;
        }
        if (simple) return g;
    }
    throw resource_error("sample_uniform_model: no simple graph within " +
                         std::to_string(retry_budget) + " attempts");
}

PartialFactorGraph restrict_to_checks(const FactorGraph& h, std::vector<std::uint32_t> check_ids) {
    std::sort(check_ids.begin(), check_ids.end());
    check_ids.erase(std::unique(check_ids.begin(), check_ids.end()), check_ids.end());
    PartialFactorGraph m;
    m.n = h.n;
    m.d = h.d;
    m.k = h.k;
    m.check_ids = check_ids;
    for (auto id : check_ids) m.tuples.push_back(h.checks.at(id));
    return m;
}

FactorGraph sample_conditioned(const PartialFactorGraph& m, RngStream& rng) {
    m.validate();
    FactorGraph g;
    g.n = m.n;
    g.d = m.d;
    g.k = m.k;
    g.partitioned = true;
    g.checks.assign(static_cast<std::size_t>(g.num_checks()), {});

    std::vector<bool> fixed(static_cast<std::size_t>(g.num_checks()), false);
    for (std::size_t i = 0; i < m.check_ids.size(); ++i) {
        g.checks[m.check_ids[i]] = m.tuples[i];
        fixed[m.check_ids[i]] = true;
    }

    const int per_part = g.checks_per_part();
    for (int part = 0; part < g.d; ++part) {
        const auto covered = m.covered_vertices(part);
        std::vector<std::uint32_t> free_vertices;
        free_vertices.reserve(static_cast<std::size_t>(g.n) - covered.size());
        for (std::uint32_t v = 0; v < static_cast<std::uint32_t>(g.n); ++v)
            if (!std::binary_search(covered.begin(), covered.end(), v)) free_vertices.push_back(v);
        if (free_vertices.size() % static_cast<std::size_t>(g.k) != 0)
            throw std::invalid_argument("sample_conditioned: uncovered set not divisible by k");
        rng.shuffle(free_vertices);
        std::size_t pos = 0;
        for (int c = 0; c < per_part; ++c) {
            const std::size_t e = static_cast<std::size_t>(part) * per_part + c;
            if (fixed[e]) continue;
            g.checks[e].assign(free_vertices.begin() + static_cast<std::ptrdiff_t>(pos),
                               free_vertices.begin() + static_cast<std::ptrdiff_t>(pos + g.k));
            pos += static_cast<std::size_t>(g.k);
        }
        if (pos != free_vertices.size())
            throw std::invalid_argument("sample_conditioned: leftover uncovered vertices");
    }
    return g;
}

namespace {

// Bipartite BFS from the given seeds. Vertices are nodes [0, n); check e is
// node n + e. Returns the nodes within max_steps edges of a seed.
std::vector<bool> bipartite_reach(const FactorGraph& h,
                                  const std::vector<std::vector<std::uint32_t>>& incident,
                                  const std::vector<std::uint32_t>& seeds, bool seeds_are_checks,
                                  int max_steps) {
    const std::size_t total = static_cast<std::size_t>(h.n) + h.checks.size();
    std::vector<bool> seen(total, false);
    std::deque<std::pair<std::uint32_t, int>> queue;
    for (auto s : seeds) {
        const std::uint32_t node = seeds_are_checks ? static_cast<std::uint32_t>(h.n) + s : s;
        if (!seen[node]) {
            seen[node] = true;
            queue.emplace_back(node, 0);
        }
    }
    while (!queue.empty()) {
        auto [node, dist] = queue.front();
        queue.pop_front();
        if (dist == max_steps) continue;
        if (node < static_cast<std::uint32_t>(h.n)) {
            for (auto e : incident[node]) {
                const std::uint32_t next = static_cast<std::uint32_t>(h.n) + e;
                if (!seen[next]) {
                    seen[next] = true;
                    queue.emplace_back(next, dist + 1);
                }
            }
        } else {
            for (auto v : h.checks[node - static_cast<std::uint32_t>(h.n)]) {
                if (!seen[v]) {
                    seen[v] = true;
                    queue.emplace_back(v, dist + 1);
                }
            }
        }
    }
    return seen;
}

std::vector<std::uint32_t> collect(const std::vector<bool>& seen, std::size_t begin,
                                   std::size_t end) {
    std::vector<std::uint32_t> out;
    for (std::size_t i = begin; i < end; ++i)
        if (seen[i]) out.push_back(static_cast<std::uint32_t>(i - begin));
    return out;
}

} // namespace

std::vector<std::uint32_t> vert_neighborhood_of_checks(const FactorGraph& h,
                                                       const std::vector<std::uint32_t>& checks,
                                                       int r) {
    if (r < 1) throw std::invalid_argument("neighborhood radius must be >= 1");
    const auto incident = h.vertex_to_checks();
    const auto seen = bipartite_reach(h, incident, checks, true, 2 * r - 1);
    return collect(seen, 0, static_cast<std::size_t>(h.n));
}

std::vector<std::uint32_t> vert_neighborhood(const FactorGraph& h,
                                             const std::vector<std::uint32_t>& vertices, int r) {
    if (r < 1) throw std::invalid_argument("neighborhood radius must be >= 1");
    const auto incident = h.vertex_to_checks();
    const auto seen = bipartite_reach(h, incident, vertices, false, 2 * r);
    return collect(seen, 0, static_cast<std::size_t>(h.n));
}

std::vector<std::uint32_t> check_neighborhood(const FactorGraph& h,
                                              const std::vector<std::uint32_t>& vertices, int r) {
    if (r < 1) throw std::invalid_argument("neighborhood radius must be >= 1");
    const auto incident = h.vertex_to_checks();
    const auto seen = bipartite_reach(h, incident, vertices, false, 2 * r - 1);
    return collect(seen, static_cast<std::size_t>(h.n),
                   static_cast<std::size_t>(h.n) + h.checks.size());
}

std::optional<int> sigma_distance(const FactorGraph& h, std::uint32_t v, std::uint32_t w,
                                  int r_max) {
    if (r_max < 0) throw std::invalid_argument("sigma_distance: r_max must be >= 0");
    if (v == w) return 0;
    const auto incident = h.vertex_to_checks();
    std::vector<bool> seen(static_cast<std::size_t>(h.n), false);
    seen[v] = true;
    std::vector<std::uint32_t> frontier{v};
    for (int dist = 1; dist <= r_max; ++dist) {
        std::vector<std::uint32_t> next;
        for (auto u : frontier) {
            for (auto e : incident[u]) {
                for (auto x : h.checks[e]) {
                    if (seen[x]) continue;
                    if (x == w) return dist;
                    seen[x] = true;
                    next.push_back(x);
                }
            }
        }
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    return std::nullopt;
}

std::vector<std::uint32_t> greedy_separated_set(const FactorGraph& h, int r) {
    const auto incident = h.vertex_to_checks();
    std::vector<bool> blocked(static_cast<std::size_t>(h.n), false);
    std::vector<std::uint32_t> visit_round(static_cast<std::size_t>(h.n), 0);
    std::vector<std::uint32_t> chosen;
    std::vector<std::uint32_t> frontier, next;
    std::uint32_t round = 0;
    for (std::uint32_t v = 0; v < static_cast<std::uint32_t>(h.n); ++v) {
        if (blocked[v]) continue;
        chosen.push_back(v);
        // block the radius-r ball around v so later picks are > r away;
        // the BFS marker is per-round since balls of earlier picks overlap
        ++round;
        blocked[v] = true;
        visit_round[v] = round;
        frontier.assign(1, v);
        for (int depth = 0; depth < r; ++depth) {
            next.clear();
            for (auto u : frontier)
                for (auto e : incident[u])
                    for (auto x : h.checks[e])
                        if (visit_round[x] != round) {
                            visit_round[x] = round;
                            blocked[x] = true;
                            next.push_back(x);
                        }
            frontier.swap(next);
        }
    }
    return chosen;
}

} // namespace ldpclab
