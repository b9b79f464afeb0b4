#pragma once

#include "qrv/classifier.hpp"

#include <json.hpp>

#include <string>

namespace qrv {

/// Double -> decimal string with 17 significant digits (round-trip exact).
std::string format_full_precision(double value);

/// JSON view of a comparison report with a fixed field order; numbers keep
/// full precision. Optional pieces (dependence table, Schmidt rank, the naive
/// independent law, the exceptional-equality reason) appear in fixed
/// positions when present.
nlohmann::ordered_json report_to_json(const ComparisonReport& report);

/// Plot-ready table of both laws on their shared support:
/// header `value,weight_qm,weight_rv`, rows ascending in value, absent-side
/// weights 0, 17 significant digits, LF line endings.
std::string distributions_csv(const DiscreteDistribution& sigma_qm,
                              const DiscreteDistribution& sigma_rv, double snap_tol = -1.0);

}  // namespace qrv
