#pragma once

#include <string>

#include "toric/geometry.hpp"
#include "toric/reeb.hpp"

namespace toric {

/// 4D symplectic volume Vol(X_Omega): the area enclosed by the profile and
/// the axes, exact on straight and tagged segments.
double area(const MomentProfile& p);

/// Ru(X_Omega) = a + b.
double ruelle_closed_form(const MomentProfile& p);

/// Line integral of the rotation density against (w1 dw2 - w2 dw1) along the
/// exact boundary; `panels` Gauss-Legendre panels per curved segment.
double ruelle_quadrature(const MomentProfile& p, int panels = 8);

struct InvariantReport {
  double area = 0.0;
  double contact_volume = 0.0;
  double ruelle = 0.0;
  double ruelle_quadrature = 0.0;
  double t_min = 0.0;
  double sys = 0.0;
  double ru = 0.0;
  double product = 0.0;
  Classification classification;
  OrbitDatum t_min_witness;
};

InvariantReport report(const MomentProfile& p);

/// c_Gr for monotone profiles: the smallest value of w1 + w2 on the closed path.
double gromov_width_monotone(const MomentProfile& p);

struct VolGrBound {
  double lhs = 0.0;  // Vol
  double rhs = 0.0;  // max(a, b) * c_Gr
  bool holds = false;
};

VolGrBound vol_gr_bound_check(const MomentProfile& p);

enum class Verdict { BelowLower, AboveUpper, Inconclusive };
const char* to_string(Verdict v);

struct CriterionVerdict {
  double product = 0.0;
  double c_threshold = 0.5;
  double C_threshold = 3.0;
  Verdict verdict = Verdict::Inconclusive;
  std::string note;
};

inline constexpr double kDefaultLowerThreshold = 0.5;
inline constexpr double kDefaultUpperThreshold = 3.0;

CriterionVerdict criterion_verdict(double product, double c_threshold = kDefaultLowerThreshold,
                                   double C_threshold = kDefaultUpperThreshold);
CriterionVerdict criterion_verdict(const MomentProfile& p, double c_threshold = kDefaultLowerThreshold,
                                   double C_threshold = kDefaultUpperThreshold);

std::string report_csv_header();
std::string report_csv_row(const InvariantReport& r);
std::string report_key_value(const InvariantReport& r);

}  // namespace toric
