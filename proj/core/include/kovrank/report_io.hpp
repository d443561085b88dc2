#pragma once

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "kovrank/mc.hpp"

namespace kovrank {

using Metadata = std::map<std::string, std::string>;

/// Shortest decimal form that round-trips the double exactly; stable
/// across runs so output files are byte-reproducible.
std::string format_double(double v);

/// CSV with '#'-prefixed metadata lines, then a header row, then one row
/// per report: family,n_or_N,k_or_p,gamma,trials,failures,dep_hat,ci_low,
/// ci_high,kfrl,mean_symbol_xors,seed.
void write_csv(std::ostream& out, const std::vector<SweepReport>& reports,
               const Metadata& meta);

/// JSON mirror with identical field names: {"meta": {...}, "reports": [...]}.
void write_json(std::ostream& out, const std::vector<SweepReport>& reports,
                const Metadata& meta);

struct SvgSeries {
    std::string label;
    std::string color;
    std::vector<std::pair<double, double>> points; // (x, y), y plotted as log10
};

/// Self-contained log10-y line chart derived purely from the given rows.
void write_svg(std::ostream& out, const std::vector<SvgSeries>& series,
               const std::string& x_label, const std::string& y_label,
               const std::string& title);

} // namespace kovrank
