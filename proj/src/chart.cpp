#include "burnoff/chart.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <vector>

namespace burnoff {

namespace {

/* All geometry is written with two decimals so the byte stream depends only
 * on the input values. */
std::string fixed2(double v) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.2f", v);
    return buffer;
}

constexpr double kWidth = 960, kHeight = 540;
constexpr double kLeft = 70, kRight = 30, kTop = 50, kBottom = 60;

struct Series {
    std::vector<double> values; // probabilities per length
    const char* color;
    const char* label;
};

std::string render(const std::vector<Series>& series, std::size_t lengths,
                   const std::string& title) {
    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;

    double max_p = 0.0;
    for (const auto& s : series)
        for (double v : s.values) max_p = std::max(max_p, v);
    if (max_p <= 0.0) max_p = 1.0;
    /* headroom so the tallest bar does not touch the frame */
    max_p *= 1.08;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"960\" height=\"540\" "
           "viewBox=\"0 0 960 540\">\n";
    out << "<rect width=\"960\" height=\"540\" fill=\"white\"/>\n";
    out << "<text x=\"" << fixed2(kWidth / 2) << "\" y=\"28\" font-family=\"sans-serif\" "
           "font-size=\"18\" text-anchor=\"middle\">" << title << "</text>\n";

    /* axes */
    out << "<line x1=\"" << fixed2(kLeft) << "\" y1=\"" << fixed2(kTop) << "\" x2=\""
        << fixed2(kLeft) << "\" y2=\"" << fixed2(kTop + plot_h)
        << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << fixed2(kLeft) << "\" y1=\"" << fixed2(kTop + plot_h)
        << "\" x2=\"" << fixed2(kLeft + plot_w) << "\" y2=\"" << fixed2(kTop + plot_h)
        << "\" stroke=\"black\"/>\n";

    /* horizontal gridlines at fifths of the probability range */
    for (int tick = 0; tick <= 5; ++tick) {
        const double p = max_p * tick / 5;
        const double y = kTop + plot_h - plot_h * tick / 5;
        out << "<line x1=\"" << fixed2(kLeft) << "\" y1=\"" << fixed2(y) << "\" x2=\""
            << fixed2(kLeft + plot_w) << "\" y2=\"" << fixed2(y)
            << "\" stroke=\"#dddddd\"/>\n";
        out << "<text x=\"" << fixed2(kLeft - 8) << "\" y=\"" << fixed2(y + 4)
            << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"end\">"
            << fixed2(p) << "</text>\n";
    }

    const double slot = plot_w / static_cast<double>(lengths);
    const double group_w = slot * 0.8;
    const double bar_w = group_w / static_cast<double>(series.size());
    for (std::size_t l = 0; l < lengths; ++l) {
        const double x0 = kLeft + slot * static_cast<double>(l) + slot * 0.1;
        for (std::size_t s = 0; s < series.size(); ++s) {
            const double v = series[s].values[l];
            const double h = plot_h * v / max_p;
            out << "<rect x=\"" << fixed2(x0 + bar_w * static_cast<double>(s)) << "\" y=\""
                << fixed2(kTop + plot_h - h) << "\" width=\"" << fixed2(bar_w)
                << "\" height=\"" << fixed2(h) << "\" fill=\"" << series[s].color
                << "\"/>\n";
        }
        out << "<text x=\"" << fixed2(x0 + group_w / 2) << "\" y=\""
            << fixed2(kTop + plot_h + 18)
            << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">"
            << l << "</text>\n";
    }
    out << "<text x=\"" << fixed2(kLeft + plot_w / 2) << "\" y=\""
        << fixed2(kHeight - 16)
        << "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">game "
           "length</text>\n";

    /* legend, top right */
    double ly = kTop + 6;
    for (const auto& s : series) {
        out << "<rect x=\"" << fixed2(kLeft + plot_w - 150) << "\" y=\"" << fixed2(ly)
            << "\" width=\"12\" height=\"12\" fill=\"" << s.color << "\"/>\n";
        out << "<text x=\"" << fixed2(kLeft + plot_w - 132) << "\" y=\"" << fixed2(ly + 11)
            << "\" font-family=\"sans-serif\" font-size=\"13\">" << s.label
            << "</text>\n";
        ly += 20;
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace

std::string chart_svg(const SimulationReport& r) {
    const std::size_t lengths = r.length_histogram.size();
    Series simulated{{}, "#4878a8", "simulated"};
    simulated.values.resize(lengths, 0.0);
    for (std::size_t l = 0; l < lengths; ++l)
        simulated.values[l] = static_cast<double>(r.length_histogram[l]) /
                              static_cast<double>(std::max<std::uint64_t>(r.games_played, 1));

    std::vector<Series> series{simulated};
    if (r.analytic) {
        Series exact{{}, "#c05840", "exact"};
        exact.values.resize(lengths, 0.0);
        for (std::size_t l = 0; l < lengths; ++l)
            exact.values[l] = r.analytic->probability(static_cast<int>(l)).get_d();
        series.push_back(exact);
    }
    return render(series, lengths,
                  "game length frequencies, " + std::to_string(r.games_played) +
                      " games");
}

std::string chart_svg(const LengthDistribution& d) {
    Series exact{{}, "#c05840", "exact"};
    exact.values.resize(d.counts.size(), 0.0);
    for (std::size_t l = 0; l < d.counts.size(); ++l)
        exact.values[l] = d.probability(static_cast<int>(l)).get_d();
    return render({exact}, d.counts.size(), "exact game length distribution");
}

} // namespace burnoff
