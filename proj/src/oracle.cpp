#include "cnqual/oracle.hpp"

#include <cmath>
#include <stdexcept>

#include "cnqual/matrix.hpp"

namespace cnqual {

bool positivity_predicate(int m, double s) {
  if (m < 1) throw std::invalid_argument("positivity_predicate: m must be >= 1");
  const CnMatrix a = build_A_numeric(m, CflPoint::from_s(s));
  return min_entry(a) >= -1e-12 * (1.0 + s);
}

bool contractivity_predicate(int m, double s) {
  if (m < 1) throw std::invalid_argument("contractivity_predicate: m must be >= 1");
  const CnMatrix a = build_A_numeric(m, CflPoint::from_s(s));
  return inf_norm(a) <= 1.0 + 1e-12;
}

ThresholdResult empirical_threshold(Property property, int m,
                                    std::pair<double, double> bracket, double tol) {
  if (m < 1) throw std::invalid_argument("empirical_threshold: m must be >= 1");
  if (!(bracket.first > 0.0) || !(bracket.second > bracket.first)) {
    throw std::invalid_argument("empirical_threshold: bad s bracket");
  }
  if (!(tol > 0.0)) throw std::invalid_argument("empirical_threshold: tol must be > 0");

  const auto holds = [&](double s) {
    return property == Property::Positivity ? positivity_predicate(m, s)
                                            : contractivity_predicate(m, s);
  };

  double lo = bracket.first;
  double hi = bracket.second;
  if (!holds(lo)) return ThresholdResult{ThresholdStatus::NeverHolds, std::nullopt};
  if (holds(hi)) return ThresholdResult{ThresholdStatus::UnboundedDetected, std::nullopt};

  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (holds(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  ThresholdEstimate est;
  est.property = property;
  est.m = m;
  est.s_lo = lo;
  est.s_hi = hi;
  return ThresholdResult{ThresholdStatus::Found, est};
}

CrossValidateReport cross_validate(Property property, int m_max, double tol) {
  if (m_max < 1) throw std::invalid_argument("cross_validate: m_max must be >= 1");
  CrossValidateReport report;
  report.property = property;
  report.tol = tol;

  for (int m = 1; m <= m_max; ++m) {
    CrossValidateRow row;
    row.m = m;

    const QualBound closed = property == Property::Positivity
                                 ? positivity_bound(m)
                                 : contractivity_bound(m);
    if (!closed.unbounded()) row.closed_s = closed.value->s;

    const ThresholdResult emp = empirical_threshold(property, m);
    if (emp.status == ThresholdStatus::Found) row.empirical_s = emp.estimate->midpoint();
    if (emp.status == ThresholdStatus::NeverHolds) {
      throw std::runtime_error("cross_validate: predicate false at the bracket bottom");
    }

    if (row.closed_s.has_value() != row.empirical_s.has_value()) {
      row.deviation = std::numeric_limits<double>::infinity();
      row.pass = false;
    } else if (!row.closed_s.has_value()) {
      row.deviation = 0.0;  // unbounded on both sides
      row.pass = true;
    } else {
      row.deviation = std::fabs(*row.closed_s - *row.empirical_s);
      row.pass = row.deviation <= tol;
    }
    report.max_deviation = std::max(report.max_deviation, row.deviation);
    report.rows.push_back(row);
  }
  report.all_pass = true;
  for (const auto& row : report.rows) report.all_pass = report.all_pass && row.pass;
  return report;
}

}  // namespace cnqual
