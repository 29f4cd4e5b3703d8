#include "orbexp/report.hpp"

#include <cstdio>
#include <fstream>

namespace orbexp {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.16e", v);
    return buf;
}

void write_report_csv(const ConvergenceReport& rep, const std::string& path) {
    std::ofstream os(path);
    os << "order,term,partial_sum,norm_error,accel_method,accel_order,accel_value\n";
    for (std::size_t i = 0; i < rep.orders.size(); ++i) {
        os << rep.orders[i] << ',';
        os << (i < rep.terms.size() ? format_double(rep.terms[i]) : "") << ',';
        os << (i < rep.partial_sums.size() ? format_double(rep.partial_sums[i]) : "") << ',';
        os << (i < rep.norm_errors.size() ? format_double(rep.norm_errors[i]) : "") << ',';
        if (i < rep.accelerated.size()) {
            os << rep.accel_method << ',' << rep.accel_order << ','
               << format_double(rep.accelerated[i]);
        } else {
            os << ",,";
        }
        os << '\n';
    }
}

void write_sidecar_json(const std::string& path, const std::map<std::string, std::string>& strings,
                        const std::map<std::string, double>& numbers) {
    std::ofstream os(path);
    os << "{\n";
    bool first = true;
    for (const auto& [k, v] : strings) {
        os << (first ? "" : ",\n") << "  \"" << k << "\": \"" << v << "\"";
        first = false;
    }
    for (const auto& [k, v] : numbers) {
        os << (first ? "" : ",\n") << "  \"" << k << "\": " << format_double(v);
        first = false;
    }
    os << "\n}\n";
}

}  // namespace orbexp
