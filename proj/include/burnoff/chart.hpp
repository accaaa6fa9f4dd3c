#ifndef BURNOFF_CHART_HPP
#define BURNOFF_CHART_HPP

#include "burnoff/enumeration.hpp"
#include "burnoff/markov.hpp"

#include <string>

namespace burnoff {

/// 960x540 SVG bar chart of a simulated length histogram, with a second bar
/// per length for the analytic probability when the report carries one.
/// Fully deterministic: fixed layout, fixed decimal formatting.
std::string chart_svg(const SimulationReport& r);

/// Same chart for an exact distribution alone (one bar per length).
std::string chart_svg(const LengthDistribution& d);

} // namespace burnoff

#endif
