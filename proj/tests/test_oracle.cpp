#include "cnqual/oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <sstream>

#include <doctest.h>

#include "cnqual/csv.hpp"

using namespace cnqual;

TEST_CASE("positivity predicate at reference points") {
  CHECK(!positivity_predicate(7, 1.6));
  CHECK(positivity_predicate(7, 1.0));
  CHECK(positivity_predicate(1, 1.0));  // the m = 1 bound is exactly 1
  CHECK(!positivity_predicate(1, 1.01));
}

TEST_CASE("contractivity predicate at reference points") {
  CHECK(contractivity_predicate(7, 1.6));
  CHECK(contractivity_predicate(5, 2.0));  // threshold point counts as holding
  CHECK(!contractivity_predicate(5, 2.01));
  CHECK(contractivity_predicate(3, 1000.0));
}

TEST_CASE("empirical thresholds localize the sharp bounds") {
  const ThresholdResult pos1 = empirical_threshold(Property::Positivity, 1, {0.5, 4.0}, 1e-9);
  REQUIRE(pos1.status == ThresholdStatus::Found);
  CHECK(std::fabs(pos1.estimate->midpoint() - 1.0) <= 1e-9);
  CHECK(pos1.estimate->width() <= 1e-9);
  CHECK(positivity_predicate(1, pos1.estimate->s_lo));
  CHECK(!positivity_predicate(1, pos1.estimate->s_hi));

  const ThresholdResult con4 = empirical_threshold(Property::Contractivity, 4, {0.5, 8.0}, 1e-9);
  REQUIRE(con4.status == ThresholdStatus::Found);
  CHECK(std::fabs(con4.estimate->midpoint() - (1.0 + std::sqrt(5.0))) <= 1e-8);

  const ThresholdResult con2 = empirical_threshold(Property::Contractivity, 2, {0.5, 8.0}, 1e-9);
  CHECK(con2.status == ThresholdStatus::UnboundedDetected);
  CHECK(!con2.estimate.has_value());

  // bracket entirely above the bound: the property never holds there
  const ThresholdResult stale = empirical_threshold(Property::Positivity, 1, {4.0, 8.0}, 1e-9);
  CHECK(stale.status == ThresholdStatus::NeverHolds);

  CHECK_THROWS_AS(empirical_threshold(Property::Positivity, 0), std::invalid_argument);
  CHECK_THROWS_AS(empirical_threshold(Property::Positivity, 3, {2.0, 1.0}), std::invalid_argument);
}

TEST_CASE("predicates are threshold functions of s") {
  for (int m : {1, 2, 3, 5, 8, 16, 32}) {
    for (Property property : {Property::Positivity, Property::Contractivity}) {
      bool seen_false = false;
      for (int k = 1; k <= 50; ++k) {
        const double s = 8.0 * k / 50.0;
        const bool holds = property == Property::Positivity
                               ? positivity_predicate(m, s)
                               : contractivity_predicate(m, s);
        INFO("m=", m, " s=", s);
        if (!holds) seen_false = true;
        CHECK(!(seen_false && holds));  // no true after false
      }
    }
  }
}

TEST_CASE("returned bounds are sharp under the predicates") {
  // the property holds at the bound itself and fails one part in 1e6 above
  for (int m = 1; m <= 16; ++m) {
    const double s_pos = positivity_bound(m).value->s;
    INFO("m=", m);
    CHECK(positivity_predicate(m, s_pos));
    CHECK(!positivity_predicate(m, s_pos * (1.0 + 1e-6)));
    if (m >= 4) {
      const double s_con = contractivity_bound(m).value->s;
      CHECK(contractivity_predicate(m, s_con));
      CHECK(!contractivity_predicate(m, s_con * (1.0 + 1e-6)));
    }
  }
}

TEST_CASE("cross validation agrees with the closed-form bounds") {
  const CrossValidateReport pos = cross_validate(Property::Positivity, 16, 1e-6);
  CHECK(pos.all_pass);
  CHECK(pos.rows.size() == 16);
  CHECK(pos.max_deviation <= 1e-6);

  const CrossValidateReport con = cross_validate(Property::Contractivity, 16, 1e-6);
  CHECK(con.all_pass);
  for (int m = 0; m < 3; ++m) {
    CHECK(!con.rows[m].closed_s.has_value());
    CHECK(!con.rows[m].empirical_s.has_value());
  }
  CHECK(con.rows[3].closed_s.has_value());

  const CrossValidateReport one = cross_validate(Property::Positivity, 1, 1e-9);
  CHECK(one.all_pass);
  CHECK(one.max_deviation <= 1e-9);
}

TEST_CASE("cross validation report serializes to CSV") {
  const CrossValidateReport con = cross_validate(Property::Contractivity, 4, 1e-6);
  std::ostringstream out;
  write_cross_validate_csv(out, con);
  const std::string text = out.str();
  CHECK(text.rfind("property,m,closed_form_s,empirical_s,abs_deviation\n", 0) == 0);
  CHECK(text.find("contractivity,1,inf,inf,0\n") != std::string::npos);
  CHECK(text.find("contractivity,4,3.2360") != std::string::npos);
}
