#include "burnoff/configuration.hpp"

#include "burnoff/errors.hpp"
#include "engine_internal.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace burnoff {

namespace detail {

int seed_and_relax_in_place(const Graph& g, std::vector<int>& chips, int seed,
                            RelaxScratch& s) {
    const int n = g.vertex_count();
    s.queue.clear();
    s.queued.assign(n, 0);
    s.fired.assign(n, 0);
    if (seed >= 0) ++chips[seed];
    for (int v = 0; v < n; ++v)
        if (chips[v] > g.degree(v)) {
            s.queue.push_back(v);
            s.queued[v] = 1;
        }
    int length = 0;
    for (std::size_t head = 0; head < s.queue.size(); ++head) {
        const int v = s.queue[head];
        s.queued[v] = 0;
        const int deg = g.degree(v);
        if (chips[v] <= deg) continue;
        chips[v] -= deg + 1;
        ++length;
        s.fired[v] = 1;
        for (int w : g.neighbors(v)) {
            ++chips[w];
            if (chips[w] > g.degree(w) && !s.queued[w]) {
                s.queue.push_back(w);
                s.queued[w] = 1;
            }
        }
        /* v itself can still be over the line when the start was far from
         * relaxed; requeue rather than assume single firings */
        if (chips[v] > deg && !s.queued[v]) {
            s.queue.push_back(v);
            s.queued[v] = 1;
        }
    }
    return length;
}

bool burn_in_place(const Graph& g, std::span<const int> chips, BurnScratch& s) {
    const int n = g.vertex_count();
    s.residual.resize(n);
    for (int v = 0; v < n; ++v) s.residual[v] = g.degree(v);
    s.pushed.assign(n, 0);
    s.heap.clear();
    s.order.clear();

    const auto push = [&](int v) {
        s.heap.push_back(v);
        std::push_heap(s.heap.begin(), s.heap.end(), std::greater<int>());
        s.pushed[v] = 1;
    };
    for (int v = 0; v < n; ++v)
        if (chips[v] >= s.residual[v]) push(v);

    while (!s.heap.empty()) {
        std::pop_heap(s.heap.begin(), s.heap.end(), std::greater<int>());
        const int v = s.heap.back();
        s.heap.pop_back();
        s.order.push_back(v);
        for (int w : g.neighbors(v)) {
            if (s.pushed[w]) continue;
            --s.residual[w];
            if (chips[w] >= s.residual[w]) push(w);
        }
    }
    return static_cast<int>(s.order.size()) == n;
}

} // namespace detail

Configuration::Configuration(std::shared_ptr<const Graph> graph, std::vector<int> chips)
    : graph_(std::move(graph)), chips_(std::move(chips)) {
    if (!graph_) throw input_error("configuration needs a graph");
    if (static_cast<int>(chips_.size()) != graph_->vertex_count())
        throw input_error("configuration has " + std::to_string(chips_.size()) +
                          " entries for " + std::to_string(graph_->vertex_count()) +
                          " vertices");
    for (std::size_t v = 0; v < chips_.size(); ++v)
        if (chips_[v] < 0)
            throw input_error("negative chip count at vertex " + std::to_string(v));
}

Configuration Configuration::zeros(std::shared_ptr<const Graph> graph) {
    const int n = graph->vertex_count();
    return Configuration(std::move(graph), std::vector<int>(n, 0));
}

Configuration Configuration::all_critical(std::shared_ptr<const Graph> graph) {
    const int n = graph->vertex_count();
    std::vector<int> chips(n);
    for (int v = 0; v < n; ++v) chips[v] = graph->degree(v);
    return Configuration(std::move(graph), std::move(chips));
}

int Configuration::chips(int v) const {
    if (v < 0 || v >= static_cast<int>(chips_.size()))
        throw input_error("vertex index " + std::to_string(v) + " out of range");
    return chips_[v];
}

long long Configuration::total_chips() const {
    return std::accumulate(chips_.begin(), chips_.end(), 0LL);
}

bool Configuration::relaxed() const {
    for (int v = 0; v < static_cast<int>(chips_.size()); ++v)
        if (chips_[v] > graph_->degree(v)) return false;
    return true;
}

bool Configuration::operator==(const Configuration& other) const {
    const bool same_graph =
        graph_ == other.graph_ || *graph_ == *other.graph_;
    return same_graph && chips_ == other.chips_;
}

namespace {

void require_same_graph(const Configuration& a, const Configuration& b) {
    if (a.graph_ptr() == b.graph_ptr()) return;
    if (a.graph() == b.graph()) return;
    throw precondition_error("configurations live on different graphs");
}

} // namespace

Configuration fire(const Configuration& c, int v) {
    const Graph& g = c.graph();
    const int deg = g.degree(v);
    if (c.chips(v) <= deg)
        throw precondition_error("vertex " + std::to_string(v) +
                                 " is not supercritical: " + std::to_string(c.chips(v)) +
                                 " chips, degree " + std::to_string(deg));
    std::vector<int> chips(c.chips().begin(), c.chips().end());
    chips[v] -= deg + 1;
    for (int w : g.neighbors(v)) ++chips[w];
    return Configuration(c.graph_ptr(), std::move(chips));
}

Configuration reverse_fire(const Configuration& c, int v) {
    const Graph& g = c.graph();
    const int deg = g.degree(v);
    for (int w : g.neighbors(v))
        if (c.chips(w) < 1)
            throw precondition_error("cannot reverse-fire " + std::to_string(v) +
                                     ": neighbor " + std::to_string(w) + " has no chip");
    std::vector<int> chips(c.chips().begin(), c.chips().end());
    chips[v] += deg + 1;
    for (int w : g.neighbors(v)) --chips[w];
    return Configuration(c.graph_ptr(), std::move(chips));
}

GameResult seed_and_relax(const Configuration& c, int seed) {
    const Graph& g = c.graph();
    g.neighbors(seed); // validates the index
    std::vector<int> chips(c.chips().begin(), c.chips().end());
    detail::RelaxScratch scratch;
    const int length = detail::seed_and_relax_in_place(g, chips, seed, scratch);
    std::vector<int> fired;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (scratch.fired[v]) fired.push_back(v);
    return GameResult{length, std::move(fired),
                      Configuration(c.graph_ptr(), std::move(chips))};
}

GameResult seed_and_relax(const Configuration& c, int seed, SplitMix64& order) {
    const Graph& g = c.graph();
    const int n = g.vertex_count();
    g.neighbors(seed);
    std::vector<int> chips(c.chips().begin(), c.chips().end());
    std::vector<char> fired_flag(n, 0);
    ++chips[seed];
    int length = 0;
    std::vector<int> super;
    for (;;) {
        super.clear();
        for (int v = 0; v < n; ++v)
            if (chips[v] > g.degree(v)) super.push_back(v);
        if (super.empty()) break;
        const int v = super[order.bounded(super.size())];
        chips[v] -= g.degree(v) + 1;
        for (int w : g.neighbors(v)) ++chips[w];
        fired_flag[v] = 1;
        ++length;
    }
    std::vector<int> fired;
    for (int v = 0; v < n; ++v)
        if (fired_flag[v]) fired.push_back(v);
    return GameResult{length, std::move(fired),
                      Configuration(c.graph_ptr(), std::move(chips))};
}

std::vector<int> BurningResult::relabeling() const {
    return {deletion_order.rbegin(), deletion_order.rend()};
}

BurningResult burn(const Configuration& c) {
    detail::BurnScratch scratch;
    const bool legal = detail::burn_in_place(c.graph(), c.chips(), scratch);
    BurningResult result{legal, std::move(scratch.order), {}};
    if (!legal) {
        std::vector<char> deleted(c.graph().vertex_count(), 0);
        for (int v : result.deletion_order) deleted[v] = 1;
        for (int v = 0; v < c.graph().vertex_count(); ++v)
            if (!deleted[v]) result.stuck.push_back(v);
    }
    return result;
}

bool is_legal(const Configuration& c) {
    detail::BurnScratch scratch;
    return detail::burn_in_place(c.graph(), c.chips(), scratch);
}

bool is_recurrent_reachable(const Configuration& from, const Configuration& to) {
    require_same_graph(from, to);
    const Graph& g = from.graph();
    if (g.vertex_count() > 4)
        throw scale_error("reachability search is limited to 4 vertices");
    if (!from.relaxed() || !to.relaxed())
        throw precondition_error("reachability is defined between relaxed configurations");

    const std::vector<int> target(to.chips().begin(), to.chips().end());
    std::vector<int> start(from.chips().begin(), from.chips().end());
    if (start == target) return true;

    std::set<std::vector<int>> visited{start};
    std::vector<std::vector<int>> frontier{start};
    detail::RelaxScratch scratch;
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& state : frontier) {
            for (int v = 0; v < g.vertex_count(); ++v) {
                std::vector<int> chips = state;
                detail::seed_and_relax_in_place(g, chips, v, scratch);
                if (chips == target) return true;
                if (visited.insert(chips).second) next.push_back(std::move(chips));
            }
        }
        frontier = std::move(next);
    }
    return false;
}

Configuration parse_configuration(const std::string& line,
                                  std::shared_ptr<const Graph> graph) {
    std::string text = line;
    if (const auto hash = text.find('#'); hash != std::string::npos) text.erase(hash);
    std::istringstream in(text);
    std::vector<int> chips;
    long long value;
    while (in >> value) {
        if (value < 0) throw input_error("negative chip count in configuration text");
        if (value > 1'000'000'000) throw input_error("chip count out of range");
        chips.push_back(static_cast<int>(value));
    }
    if (!in.eof()) {
        std::string bad;
        in.clear();
        in >> bad;
        throw input_error("bad token in configuration text: '" + bad + "'");
    }
    const int n = graph->vertex_count();
    if (static_cast<int>(chips.size()) != n)
        throw input_error("configuration text has " + std::to_string(chips.size()) +
                          " entries, graph has " + std::to_string(n) + " vertices");
    return Configuration(std::move(graph), std::move(chips));
}

Configuration parse_configuration_file(const std::string& path,
                                       std::shared_ptr<const Graph> graph) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open configuration file: " + path);
    std::string joined, line;
    while (std::getline(in, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        joined += line;
        joined += ' ';
    }
    return parse_configuration(joined, std::move(graph));
}

std::string format_configuration(const Configuration& c) {
    std::ostringstream out;
    for (int v = 0; v < c.graph().vertex_count(); ++v) {
        if (v) out << ' ';
        out << c.chips(v);
    }
    return out.str();
}

} // namespace burnoff
