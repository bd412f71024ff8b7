#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cnqual/bounds.hpp"
#include "cnqual/oracle.hpp"
#include "cnqual/simulator.hpp"

namespace cnqual {

/// Fixed 15-significant-digit rendering used by every CSV surface.
std::string format_g15(double v);

std::string property_name(Property p);

/// header: property,m,omega,x,s
/// The limit row prints m=inf; unbounded entries print inf for omega, x, s.
void write_bound_csv(std::ostream& out, const std::vector<QualBound>& rows);

/// header: property,m,closed_form_s,empirical_s,abs_deviation
void write_cross_validate_csv(std::ostream& out, const CrossValidateReport& report);

/// header: t,w_1,...,w_m,min_entry,inf_norm
void write_trace_csv(std::ostream& out, const SimTrace& trace);

/// header: x,value
void write_poly_csv(std::ostream& out,
                    const std::vector<std::pair<double, double>>& samples);

}  // namespace cnqual
