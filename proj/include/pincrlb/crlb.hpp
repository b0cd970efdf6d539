#pragma once

#include <span>

#include "pincrlb/geometry.hpp"

namespace pincrlb {

/// Range-noise environment. A range estimate to an antenna at true distance d
/// carries zero-mean Gaussian noise of variance k_e * d^2.
struct RangeModel {
  double k_e = 0.01;
};

/// Fisher information for the user's (x, y) coordinates under the
/// distance-dependent range-noise model. The positioning bound below uses
/// only the diagonal terms; the cross term j_xy is kept as a diagnostic for
/// the full 2x2 matrix.
struct FisherInfo {
  double j_x = 0.0;   // 1/m^2
  double j_y = 0.0;   // 1/m^2
  double j_xy = 0.0;  // 1/m^2
};

/// A positioning-error bound in m^2. Points where one of the Fisher terms
/// vanishes (e.g. directly under a lone antenna, or with all antennas on the
/// user's own x- or y-line) carry an infinite bound; that is a legitimate
/// field value, not an error. `value` is +inf whenever `finite` is false.
struct CrlbValue {
  double value = 0.0;
  bool finite = false;
};

struct CrlbGradient {
  double dx = 0.0;  // m (d bound / d user_x, units m^2 per m)
  double dy = 0.0;
};

/// Noise variance k_e * d^2 for the given user/antenna pair.
double noise_variance(const RangeModel& model, const Point3& user, const Point3& antenna);

/// Log-likelihood of the range estimates under a hypothesized user position:
///   -(N/2) ln(2 pi) - sum ln sigma_n - sum (est_n - d_n)^2 / (2 sigma_n^2),
/// with d_n and sigma_n evaluated at the hypothesis. `estimates` must have
/// one entry per antenna.
double log_likelihood(const RangeModel& model, const Point3& hypothesis, const AntennaArray& array,
                      std::span<const double> estimates);

/// Diagonal and cross Fisher terms:
///   j_x  = sum (2 k_e + 1) / sigma_n^2 * (x - x_n)^2 / d_n^2
/// and analogously for j_y and j_xy. Equivalent to the general Gaussian
/// information formula (d mu/d theta)^2 / sigma^2 + (d sigma^2/d theta)^2 /
/// (2 sigma^4) summed over antennas.
FisherInfo fisher_info(const RangeModel& model, const Point3& user, const AntennaArray& array);

/// Position-error lower bound
///   k_e / (2 k_e + 1) * (1 / S_x + 1 / S_y),
/// where S_x = sum (x - x_n)^2 / d_n^4 and S_y likewise in y. Equals
/// 1/j_x + 1/j_y. Non-finite when S_x or S_y vanishes.
CrlbValue crlb(const RangeModel& model, const Point3& user, const AntennaArray& array);

/// Exact analytic gradient of the bound with respect to the user position.
/// Throws std::domain_error where the bound is singular (S_x or S_y zero).
CrlbGradient crlb_gradient(const RangeModel& model, const Point3& user, const AntennaArray& array);

/// Single-antenna upper bound k_e / (2 k_e + 1) * (d^4/(x - x_n)^2 +
/// d^4/(y - y_n)^2), valid for any antenna index with both offsets nonzero
/// (throws std::domain_error otherwise). Always >= crlb at the same point.
double crlb_upper_bound(const RangeModel& model, const Point3& user, const AntennaArray& array,
                        int antenna_index);

/// Trace of the inverse of the full 2x2 Fisher matrix [[j_x, j_xy],
/// [j_xy, j_y]]; +inf when the matrix is singular. Never smaller than the
/// diagonal-only bound, so MSE >= this >= crlb.
double full_matrix_crlb(const FisherInfo& info);

}  // namespace pincrlb
