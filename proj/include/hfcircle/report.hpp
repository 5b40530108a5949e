#pragma once

#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hfcircle/experiments.hpp"
#include "hfcircle/hermite.hpp"
#include "hfcircle/nodal.hpp"

namespace hfc {

/// Locale-independent, 17 significant digits (round-trips a double).
std::string format_real(double v);

/// Header: alpha,beta,n,quantity_kind,value,samples,runtime_ms
void write_records_csv(std::ostream& os, std::span<const ExperimentRecord> records);

/// Header: k,re,im,x
void write_nodes_csv(std::ostream& os, const NodalSystem& sys);

/// Header: k,value_residual,d1_scaled,d2_scaled,d3_scaled,d4_scaled
void write_residuals_csv(std::ostream& os, const HermiteResidualReport& report);

/// Header: k,p,closed_re,closed_im,oracle_re,oracle_im,rel_diff,agrees
void write_coefficients_csv(std::ostream& os, std::span<const CoefficientComparison> rows);

struct ChartSeries {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

/// Self-contained SVG line chart with a logarithmic x axis (x must be > 0).
void write_line_chart_svg(std::ostream& os, std::string_view title, std::span<const ChartSeries> series);

}  // namespace hfc
