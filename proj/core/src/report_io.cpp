#include "kovrank/report_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace kovrank {

std::string format_double(double v) {
    char buf[40];
    // Try shortest precision that round-trips.
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v) return buf;
    }
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_csv(std::ostream& out, const std::vector<SweepReport>& reports,
               const Metadata& meta) {
    for (const auto& [k, v] : meta) out << "# " << k << "=" << v << "\n";
    out << "family,n_or_N,k_or_p,gamma,trials,failures,dep_hat,ci_low,"
           "ci_high,kfrl,mean_symbol_xors,seed\n";
    for (const auto& r : reports) {
        out << family_name(r.family) << ',' << r.n_or_N << ','
            << format_double(r.k_or_p) << ',' << format_double(r.gamma) << ','
            << r.trials << ',' << r.failures << ','
            << format_double(r.dep_hat) << ',' << format_double(r.ci_low)
            << ',' << format_double(r.ci_high) << ','
            << format_double(r.kfrl_value) << ','
            << format_double(r.mean_symbol_xors) << ',' << r.seed << "\n";
    }
}

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

} // namespace

void write_json(std::ostream& out, const std::vector<SweepReport>& reports,
                const Metadata& meta) {
    out << "{\n  \"meta\": {";
    bool first = true;
    for (const auto& [k, v] : meta) {
        if (!first) out << ',';
        out << "\n    \"" << json_escape(k) << "\": \"" << json_escape(v)
            << "\"";
        first = false;
    }
    out << "\n  },\n  \"reports\": [";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& r = reports[i];
        if (i) out << ',';
        out << "\n    {\"family\": \"" << family_name(r.family)
            << "\", \"n_or_N\": " << r.n_or_N
            << ", \"k_or_p\": " << format_double(r.k_or_p)
            << ", \"gamma\": " << format_double(r.gamma)
            << ", \"trials\": " << r.trials
            << ", \"failures\": " << r.failures
            << ", \"dep_hat\": " << format_double(r.dep_hat)
            << ", \"ci_low\": " << format_double(r.ci_low)
            << ", \"ci_high\": " << format_double(r.ci_high)
            << ", \"kfrl\": " << format_double(r.kfrl_value)
            << ", \"mean_symbol_xors\": " << format_double(r.mean_symbol_xors)
            << ", \"seed\": " << r.seed << "}";
    }
    out << "\n  ]\n}\n";
}

void write_svg(std::ostream& out, const std::vector<SvgSeries>& series,
               const std::string& x_label, const std::string& y_label,
               const std::string& title) {
    const double width = 720, height = 480;
    const double ml = 70, mr = 20, mt = 40, mb = 50;

    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = 0.0, ymax = -std::numeric_limits<double>::infinity();
    const double floor_log = -12.0; // clamp zeros for the log axis
    for (const auto& s : series) {
        for (auto [x, y] : s.points) {
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            double ly = y > 0.0 ? std::log10(y) : floor_log;
            ymin = std::min(ymin, ly);
            ymax = std::max(ymax, ly);
        }
    }
    if (!(xmax > xmin)) { xmin -= 0.5; xmax += 0.5; }
    ymin = std::max(std::floor(ymin), floor_log);
    ymax = std::ceil(std::max(ymax, ymin + 1.0));

    auto px = [&](double x) {
        return ml + (x - xmin) / (xmax - xmin) * (width - ml - mr);
    };
    auto py = [&](double ly) {
        return mt + (ymax - ly) / (ymax - ymin) * (height - mt - mb);
    };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << width / 2 << "\" y=\"20\" text-anchor=\"middle\" "
           "font-size=\"15\">" << title << "</text>\n";

    // y grid per decade
    for (int d = static_cast<int>(ymin); d <= static_cast<int>(ymax); ++d) {
        double y = py(d);
        out << "<line x1=\"" << ml << "\" y1=\"" << y << "\" x2=\""
            << width - mr << "\" y2=\"" << y
            << "\" stroke=\"#dddddd\"/>\n";
        out << "<text x=\"" << ml - 6 << "\" y=\"" << y + 4
            << "\" text-anchor=\"end\" font-size=\"11\">1e" << d
            << "</text>\n";
    }
    // x ticks
    for (int t = 0; t <= 6; ++t) {
        double x = xmin + (xmax - xmin) * t / 6.0;
        out << "<text x=\"" << px(x) << "\" y=\"" << height - mb + 16
            << "\" text-anchor=\"middle\" font-size=\"11\">"
            << format_double(std::round(x * 1000.0) / 1000.0) << "</text>\n";
    }
    out << "<text x=\"" << width / 2 << "\" y=\"" << height - 12
        << "\" text-anchor=\"middle\" font-size=\"12\">" << x_label
        << "</text>\n";
    out << "<text x=\"16\" y=\"" << height / 2
        << "\" text-anchor=\"middle\" font-size=\"12\" transform=\"rotate(-90 "
           "16 " << height / 2 << ")\">" << y_label << "</text>\n";
    out << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\""
        << width - ml - mr << "\" height=\"" << height - mt - mb
        << "\" fill=\"none\" stroke=\"black\"/>\n";

    double legend_y = mt + 14;
    for (const auto& s : series) {
        out << "<polyline fill=\"none\" stroke=\"" << s.color
            << "\" stroke-width=\"1.5\" points=\"";
        for (auto [x, y] : s.points) {
            double ly = y > 0.0 ? std::log10(y) : floor_log;
            ly = std::clamp(ly, ymin, ymax);
            out << px(x) << ',' << py(ly) << ' ';
        }
        out << "\"/>\n";
        out << "<text x=\"" << width - mr - 150 << "\" y=\"" << legend_y
            << "\" font-size=\"11\" fill=\"" << s.color << "\">" << s.label
            << "</text>\n";
        legend_y += 14;
    }
    out << "</svg>\n";
}

} // namespace kovrank
