#include "burnoff/enumeration.hpp"

#include "burnoff/errors.hpp"
#include "burnoff/parallel.hpp"
#include "burnoff/subtrees.hpp"
#include "burnoff/tree_count.hpp"
#include "engine_internal.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>

namespace burnoff {

Rational LengthDistribution::probability(int length) const {
    if (length < 0 || length >= static_cast<int>(counts.size()))
        throw input_error("length " + std::to_string(length) + " out of range");
    if (total == 0) throw precondition_error("empty distribution has no probabilities");
    Rational p(counts[length], total);
    p.canonicalize();
    return p;
}

std::vector<Configuration> enumerate_legal_configurations(std::shared_ptr<const Graph> g) {
    const int n = g->vertex_count();

    /* the search box is prod_v (deg(v) + 1) chip vectors */
    BigInt box = 1;
    for (int v = 0; v < n; ++v) box *= g->degree(v) + 1;
    if (box > 10'000'000)
        throw scale_error("legal-configuration enumeration box has " + box.get_str() +
                          " cells, cap is 10^7");

    std::vector<Configuration> out;
    std::vector<int> chips(n, 0);
    detail::BurnScratch scratch;
    for (;;) {
        if (detail::burn_in_place(*g, chips, scratch))
            out.emplace_back(g, chips);
        /* odometer step in lexicographic order, last coordinate fastest */
        int v = n - 1;
        while (v >= 0 && chips[v] == g->degree(v)) chips[v--] = 0;
        if (v < 0) break;
        ++chips[v];
    }
    return out;
}

BigInt count_legal_configurations(const Graph& g) {
    return tree_count(cone(g).full());
}

BigInt count_length_zero_pairs(const Graph& g) {
    if (!is_connected(g)) throw input_error("length counts need a connected graph");
    const ConeGraph c = cone(g);
    BigInt total = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        total += tree_count_minus_apex_edge(c, v);
    return total;
}

namespace {

/* Legal chip patterns on the rest of the graph once the fired set S is
 * removed: spanning trees of the cone over g - S. Handles the empty and the
 * disconnected remainder (the cone is connected regardless). */
BigInt legal_count_off_set(const Graph& g, const std::vector<int>& set) {
    return tree_count(cone(g.without_vertices(set)).full());
}

} // namespace

BigInt count_length_ell_pairs(const Graph& g, int length) {
    if (!is_connected(g)) throw input_error("length counts need a connected graph");
    const int n = g.vertex_count();
    if (length < 1 || length > n)
        throw input_error("positive game length must lie in [1, n]");

    /* For a pair of given length, the fired vertices form a connected set S
     * with |S| = length containing the seed; the chips on S are forced, the
     * fired sets realizable on S are counted by tree_count(g[S]) and the
     * chips off S by legal_count_off_set. Both factors depend only on S, so
     * cache them across seeds. */
    std::map<std::vector<int>, BigInt> factor;
    BigInt total = 0;
    for (int seed = 0; seed < n; ++seed) {
        for_each_connected_set(g, seed, length, [&](std::span<const int> vertices) {
            std::vector<int> key(vertices.begin(), vertices.end());
            auto it = factor.find(key);
            if (it == factor.end()) {
                const BigInt value =
                    tree_count(g.induced(key)) * legal_count_off_set(g, key);
                it = factor.emplace(std::move(key), value).first;
            }
            total += it->second;
        });
    }
    return total;
}

LengthDistribution distribution_analytic(const Graph& g, int threads) {
    if (!is_connected(g)) throw input_error("length distribution needs a connected graph");
    const int n = g.vertex_count();
    if (n == 0) throw input_error("length distribution needs at least one vertex");

    LengthDistribution d;
    d.counts.assign(n + 1, 0);
    d.counts[0] = count_length_zero_pairs(g);
    parallel_chunks(n, resolve_threads(threads), [&](int, std::size_t begin, std::size_t end) {
        for (std::size_t length = begin + 1; length <= end; ++length)
            d.counts[length] = count_length_ell_pairs(g, static_cast<int>(length));
    });

    d.total = 0;
    for (const auto& c : d.counts) d.total += c;
    BigInt expected = count_legal_configurations(g) * n;
    if (d.total != expected)
        throw std::logic_error("length counts sum to " + d.total.get_str() +
                               ", expected |R| * n = " + expected.get_str());
    return d;
}

LengthDistribution distribution_oracle(std::shared_ptr<const Graph> g, int threads) {
    if (!is_connected(*g)) throw input_error("length distribution needs a connected graph");
    const int n = g->vertex_count();
    if (n == 0) throw input_error("length distribution needs at least one vertex");
    const auto legal = enumerate_legal_configurations(g);

    const std::uint64_t games = static_cast<std::uint64_t>(legal.size()) * n;
    if (games > 10'000'000)
        throw scale_error("oracle would play " + std::to_string(games) +
                          " games, cap is 10^7");

    std::vector<std::vector<std::uint64_t>> partial;
    const int workers = std::min<std::size_t>(resolve_threads(threads),
                                              std::max<std::size_t>(legal.size(), 1));
    partial.assign(workers, std::vector<std::uint64_t>(n + 1, 0));
    parallel_chunks(legal.size(), workers, [&](int chunk, std::size_t begin, std::size_t end) {
        detail::RelaxScratch scratch;
        std::vector<int> chips;
        for (std::size_t i = begin; i < end; ++i) {
            for (int seed = 0; seed < n; ++seed) {
                chips.assign(legal[i].chips().begin(), legal[i].chips().end());
                const int length = detail::seed_and_relax_in_place(*g, chips, seed, scratch);
                ++partial[chunk][length];
            }
        }
    });

    LengthDistribution d;
    d.counts.assign(n + 1, 0);
    for (const auto& histogram : partial)
        for (int l = 0; l <= n; ++l) d.counts[l] += histogram[l];
    d.total = BigInt(static_cast<unsigned long>(legal.size())) * n;
    return d;
}

std::string distribution_csv(const LengthDistribution& d) {
    std::ostringstream out;
    out << "length,count,total,probability\n";
    for (std::size_t l = 0; l < d.counts.size(); ++l)
        out << l << ',' << d.counts[l].get_str() << ',' << d.total.get_str() << ','
            << decimal_string(d.probability(static_cast<int>(l))) << '\n';
    return out.str();
}

std::string distribution_json(const LengthDistribution& d) {
    /* assembled by hand: three arrays plus the total, counts as decimal
     * strings so arbitrary precision survives JSON number parsing */
    std::ostringstream out;
    out << "{\n  \"total\": \"" << d.total.get_str() << "\",\n  \"counts\": [";
    for (std::size_t l = 0; l < d.counts.size(); ++l)
        out << (l ? ", " : "") << '"' << d.counts[l].get_str() << '"';
    out << "],\n  \"probabilities\": [";
    for (std::size_t l = 0; l < d.counts.size(); ++l)
        out << (l ? ", " : "") << '"'
            << decimal_string(d.probability(static_cast<int>(l))) << '"';
    out << "]\n}\n";
    return out.str();
}

} // namespace burnoff
