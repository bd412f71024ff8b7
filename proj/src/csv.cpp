#include "cnqual/csv.hpp"

#include <cstdio>
#include <ostream>

namespace cnqual {

std::string format_g15(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

std::string property_name(Property p) {
  return p == Property::Positivity ? "positivity" : "contractivity";
}

void write_bound_csv(std::ostream& out, const std::vector<QualBound>& rows) {
  out << "property,m,omega,x,s\n";
  for (const auto& row : rows) {
    out << property_name(row.property) << ',';
    if (row.m.has_value()) {
      out << *row.m;
    } else {
      out << "inf";
    }
    if (row.value.has_value()) {
      out << ',' << format_g15(row.value->omega) << ',' << format_g15(row.value->x)
          << ',' << format_g15(row.value->s) << '\n';
    } else {
      out << ",inf,inf,inf\n";
    }
  }
}

void write_cross_validate_csv(std::ostream& out, const CrossValidateReport& report) {
  out << "property,m,closed_form_s,empirical_s,abs_deviation\n";
  for (const auto& row : report.rows) {
    out << property_name(report.property) << ',' << row.m << ',';
    out << (row.closed_s ? format_g15(*row.closed_s) : "inf") << ',';
    out << (row.empirical_s ? format_g15(*row.empirical_s) : "inf") << ',';
    out << format_g15(row.deviation) << '\n';
  }
}

void write_trace_csv(std::ostream& out, const SimTrace& trace) {
  const size_t m = trace.states.empty() ? 0 : trace.states.front().size();
  out << 't';
  for (size_t i = 1; i <= m; ++i) out << ",w_" << i;
  out << ",min_entry,inf_norm\n";
  for (size_t n = 0; n < trace.states.size(); ++n) {
    out << format_g15(trace.times[n]);
    for (double v : trace.states[n]) out << ',' << format_g15(v);
    out << ',' << format_g15(trace.min_entries[n]) << ','
        << format_g15(trace.norms[n]) << '\n';
  }
}

void write_poly_csv(std::ostream& out,
                    const std::vector<std::pair<double, double>>& samples) {
  out << "x,value\n";
  for (const auto& [x, value] : samples) {
    out << format_g15(x) << ',' << format_g15(value) << '\n';
  }
}

}  // namespace cnqual
