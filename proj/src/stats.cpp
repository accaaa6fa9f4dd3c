#include "burnoff/stats.hpp"

#include "burnoff/errors.hpp"

#include <boost/math/distributions/chi_squared.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace burnoff {

namespace {

struct Cell {
    std::uint64_t observed;
    double expected;
    int lo, hi; // inclusive index range covered after merging
};

/* Distance between two merged index ranges: the gap between them. */
int range_distance(const Cell& a, const Cell& b) {
    if (a.hi < b.lo) return b.lo - a.hi;
    if (b.hi < a.lo) return a.lo - b.hi;
    return 0;
}

} // namespace

ChiSquareResult chi_square_test(const std::vector<std::uint64_t>& observed,
                                const std::vector<double>& expected,
                                double alpha) {
    if (observed.size() != expected.size())
        throw precondition_error("observed and expected lengths differ");
    if (!(alpha > 0.0 && alpha < 1.0))
        throw precondition_error("alpha must lie in (0, 1)");

    ChiSquareResult result;
    result.alpha = alpha;

    std::vector<Cell> cells;
    bool impossible_outcome = false;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        if (expected[i] < 0.0) throw precondition_error("negative expected count");
        if (expected[i] == 0.0) {
            /* outcomes the model rules out: ignore when unobserved, fail
             * outright when observed */
            if (observed[i] > 0) impossible_outcome = true;
            continue;
        }
        cells.push_back({observed[i], expected[i], static_cast<int>(i), static_cast<int>(i)});
    }
    if (impossible_outcome) {
        result.statistic = std::numeric_limits<double>::infinity();
        result.bins = static_cast<int>(cells.size());
        result.degrees_of_freedom = std::max(result.bins - 1, 0);
        result.reject = true;
        return result;
    }
    if (cells.empty()) {
        /* nothing observable and nothing observed */
        result.reject = false;
        return result;
    }

    /* merge rule: smallest expectation first (leftmost on ties) into its
     * nearest neighbor (left on ties) until every cell has expectation >= 5
     * or one cell remains */
    while (cells.size() > 1) {
        std::size_t smallest = 0;
        for (std::size_t i = 1; i < cells.size(); ++i)
            if (cells[i].expected < cells[smallest].expected) smallest = i;
        if (cells[smallest].expected >= 5.0) break;

        std::size_t partner = smallest == 0 ? 1 : 0;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i == smallest) continue;
            const int d = range_distance(cells[i], cells[smallest]);
            const int best = range_distance(cells[partner], cells[smallest]);
            if (d < best || (d == best && i < partner)) partner = i;
        }
        cells[partner].observed += cells[smallest].observed;
        cells[partner].expected += cells[smallest].expected;
        cells[partner].lo = std::min(cells[partner].lo, cells[smallest].lo);
        cells[partner].hi = std::max(cells[partner].hi, cells[smallest].hi);
        cells.erase(cells.begin() + smallest);
    }

    result.bins = static_cast<int>(cells.size());
    result.degrees_of_freedom = result.bins - 1;
    for (const auto& cell : cells) {
        const double diff = static_cast<double>(cell.observed) - cell.expected;
        result.statistic += diff * diff / cell.expected;
    }
    if (result.degrees_of_freedom == 0) {
        /* single cell: the statistic is 0 by construction, nothing to test */
        result.critical_value = 0.0;
        result.reject = false;
        return result;
    }

    const boost::math::chi_squared_distribution<double> dist(result.degrees_of_freedom);
    result.critical_value = boost::math::quantile(dist, 1.0 - alpha);
    result.reject = result.statistic > result.critical_value;
    return result;
}

} // namespace burnoff
