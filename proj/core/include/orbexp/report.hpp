#pragma once

#include <map>
#include <string>
#include <vector>

#include "orbexp/expansions.hpp"

namespace orbexp {

/// Round-trippable double formatting: scientific, 17 significant digits.
std::string format_double(double v);

/// ConvergenceReport rows: order, term, partial_sum, norm_error,
/// accel_method, accel_order, accel_value. Missing columns print empty.
void write_report_csv(const ConvergenceReport& rep, const std::string& path);

/// JSON sidecar with the full provenance: config echo (string/double maps),
/// verdict, tolerances, code version.
void write_sidecar_json(const std::string& path, const std::map<std::string, std::string>& strings,
                        const std::map<std::string, double>& numbers);

}  // namespace orbexp
