#ifndef BURNOFF_STATS_HPP
#define BURNOFF_STATS_HPP

#include <cstdint>
#include <vector>

namespace burnoff {

/// Pearson goodness-of-fit result. `bins` is the number of cells after
/// merging, `degrees_of_freedom` = bins - 1.
struct ChiSquareResult {
    double statistic = 0.0;
    int bins = 0;
    int degrees_of_freedom = 0;
    double alpha = 0.0;
    double critical_value = 0.0;
    bool reject = false;
};

/// Pearson chi-square test of observed counts against expected counts
/// (same length, aligned cells, sum of expected = sum of observed).
///
/// Cell handling before the statistic is computed:
///   - cells with expected == 0 and observed == 0 are dropped,
///   - cells with expected == 0 but observed > 0 force rejection
///     (the model assigns them probability zero),
///   - while any cell has expected < 5 and more than one cell remains, the
///     smallest-expectation cell (leftmost on ties) is merged into its
///     nearest surviving neighbor (left on ties).
///
/// With a single cell left the statistic is 0 and the test accepts.
/// alpha must lie in (0, 1).
ChiSquareResult chi_square_test(const std::vector<std::uint64_t>& observed,
                                const std::vector<double>& expected,
                                double alpha);

} // namespace burnoff

#endif
