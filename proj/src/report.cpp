#include "hfcircle/report.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <limits>

#include "hfcircle/error.hpp"

namespace hfc {

std::string format_real(double v) {
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
    return std::string(buf.data(), res.ptr);
}

void write_records_csv(std::ostream& os, std::span<const ExperimentRecord> records) {
    os << "alpha,beta,n,quantity_kind,value,samples,runtime_ms\n";
    for (const auto& r : records) {
        os << format_real(r.alpha) << ',' << format_real(r.beta) << ',' << r.n << ',' << to_string(r.kind) << ','
           << format_real(r.value) << ',' << r.samples << ',' << format_real(r.runtime_ms) << '\n';
    }
}

void write_nodes_csv(std::ostream& os, const NodalSystem& sys) {
    os << "k,re,im,x\n";
    const auto nodes = sys.nodes();
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        // On the circle the Szego image of a node is its real part.
        os << k << ',' << format_real(nodes[k].real()) << ',' << format_real(nodes[k].imag()) << ','
           << format_real(nodes[k].real()) << '\n';
    }
}

void write_residuals_csv(std::ostream& os, const HermiteResidualReport& report) {
    os << "k,value_residual,d1_scaled,d2_scaled,d3_scaled,d4_scaled\n";
    for (const auto& row : report.nodes) {
        os << row.node_index << ',' << format_real(row.value_residual);
        for (double d : row.scaled_derivative) os << ',' << format_real(d);
        os << '\n';
    }
}

void write_coefficients_csv(std::ostream& os, std::span<const CoefficientComparison> rows) {
    os << "k,p,closed_re,closed_im,oracle_re,oracle_im,rel_diff,agrees\n";
    for (const auto& r : rows) {
        os << r.node_index << ',' << r.p << ',' << format_real(r.closed_form.real()) << ','
           << format_real(r.closed_form.imag()) << ',' << format_real(r.oracle.real()) << ','
           << format_real(r.oracle.imag()) << ',' << format_real(r.rel_diff) << ',' << (r.agrees ? 1 : 0) << '\n';
    }
}

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 420.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 20.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 60.0;
constexpr std::array<const char*, 5> kColors = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};

std::string escape_xml(std::string_view s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string fmt(double v) {
    std::array<char, 32> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed, 2);
    return std::string(buf.data(), res.ptr);
}

std::string tick_label(double v) {
    std::array<char, 32> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 4);
    return std::string(buf.data(), res.ptr);
}

}  // namespace

void write_line_chart_svg(std::ostream& os, std::string_view title, std::span<const ChartSeries> series) {
    double x_lo = std::numeric_limits<double>::infinity();
    double x_hi = -x_lo;
    double y_lo = x_lo;
    double y_hi = -x_lo;
    for (const auto& s : series) {
        if (s.x.size() != s.y.size()) throw InputError("chart series '" + s.label + "' has mismatched x/y lengths");
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (!(s.x[i] > 0.0)) throw InputError("log-x chart requires positive x values");
            if (!std::isfinite(s.y[i])) continue;
            x_lo = std::min(x_lo, s.x[i]);
            x_hi = std::max(x_hi, s.x[i]);
            y_lo = std::min(y_lo, s.y[i]);
            y_hi = std::max(y_hi, s.y[i]);
        }
    }
    if (!std::isfinite(x_lo)) {
        x_lo = 1.0;
        x_hi = 10.0;
        y_lo = 0.0;
        y_hi = 1.0;
    }
    if (x_hi <= x_lo) x_hi = x_lo * 2.0;
    if (y_hi <= y_lo) {
        y_hi = y_lo + 1.0;
        y_lo -= 1.0;
    }
    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    auto px = [&](double x) { return kLeft + plot_w * (std::log(x) - std::log(x_lo)) / (std::log(x_hi) - std::log(x_lo)); };
    auto py = [&](double y) { return kTop + plot_h * (1.0 - (y - y_lo) / (y_hi - y_lo)); };

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(kWidth) << "\" height=\"" << fmt(kHeight)
       << "\" viewBox=\"0 0 " << fmt(kWidth) << ' ' << fmt(kHeight) << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << fmt(kWidth / 2) << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
       << "font-size=\"15\">" << escape_xml(title) << "</text>\n";
    os << "<line x1=\"" << fmt(kLeft) << "\" y1=\"" << fmt(kTop + plot_h) << "\" x2=\"" << fmt(kLeft + plot_w)
       << "\" y2=\"" << fmt(kTop + plot_h) << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << fmt(kLeft) << "\" y1=\"" << fmt(kTop) << "\" x2=\"" << fmt(kLeft) << "\" y2=\""
       << fmt(kTop + plot_h) << "\" stroke=\"black\"/>\n";

    // x ticks at the distinct x values (the n ladder), y ticks at 5 even steps.
    std::vector<double> xs;
    for (const auto& s : series) xs.insert(xs.end(), s.x.begin(), s.x.end());
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    for (double x : xs) {
        os << "<line x1=\"" << fmt(px(x)) << "\" y1=\"" << fmt(kTop + plot_h) << "\" x2=\"" << fmt(px(x))
           << "\" y2=\"" << fmt(kTop + plot_h + 5) << "\" stroke=\"black\"/>\n";
        os << "<text x=\"" << fmt(px(x)) << "\" y=\"" << fmt(kTop + plot_h + 20)
           << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" << tick_label(x) << "</text>\n";
    }
    for (int i = 0; i <= 4; ++i) {
        const double y = y_lo + (y_hi - y_lo) * i / 4.0;
        os << "<line x1=\"" << fmt(kLeft - 5) << "\" y1=\"" << fmt(py(y)) << "\" x2=\"" << fmt(kLeft) << "\" y2=\""
           << fmt(py(y)) << "\" stroke=\"black\"/>\n";
        os << "<text x=\"" << fmt(kLeft - 8) << "\" y=\"" << fmt(py(y) + 4)
           << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << tick_label(y) << "</text>\n";
    }
    os << "<text x=\"" << fmt(kLeft + plot_w / 2) << "\" y=\"" << fmt(kHeight - 15)
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">n</text>\n";
    os << "<text x=\"18\" y=\"" << fmt(kTop + plot_h / 2) << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
       << "font-size=\"13\" transform=\"rotate(-90 18 " << fmt(kTop + plot_h / 2) << ")\">value</text>\n";

    for (std::size_t si = 0; si < series.size(); ++si) {
        const auto& s = series[si];
        const char* color = kColors[si % kColors.size()];
        os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
        bool first = true;
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (!std::isfinite(s.y[i])) continue;
            os << (first ? "" : " ") << fmt(px(s.x[i])) << ',' << fmt(py(s.y[i]));
            first = false;
        }
        os << "\"/>\n";
        os << "<text x=\"" << fmt(kLeft + plot_w - 4) << "\" y=\"" << fmt(kTop + 14 + 16 * si)
           << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\" fill=\"" << color << "\">"
           << escape_xml(s.label) << "</text>\n";
    }
    os << "</svg>\n";
}

}  // namespace hfc
