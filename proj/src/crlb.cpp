#include "pincrlb/crlb.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace pincrlb {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

double noise_variance(const RangeModel& model, const Point3& user, const Point3& antenna) {
  const double d = distance(user, antenna);
  return model.k_e * d * d;
}

double log_likelihood(const RangeModel& model, const Point3& hypothesis, const AntennaArray& array,
                      std::span<const double> estimates) {
  if (estimates.size() != array.antennas.size())
    throw std::invalid_argument("log_likelihood: one range estimate per antenna required");

  double ll = -0.5 * static_cast<double>(array.size()) * std::log(2.0 * std::numbers::pi);
  for (std::size_t i = 0; i < array.antennas.size(); ++i) {
    const double d = distance(hypothesis, array.antennas[i]);
    const double var = model.k_e * d * d;
    const double r = estimates[i] - d;
    ll -= 0.5 * std::log(var);  // ln sigma
    ll -= r * r / (2.0 * var);
  }
  return ll;
}

FisherInfo fisher_info(const RangeModel& model, const Point3& user, const AntennaArray& array) {
  FisherInfo info;
  const double k = model.k_e;
  for (const auto& a : array.antennas) {
    const double xt = user.x - a.x;
    const double yt = user.y - a.y;
    const double zt = user.z - a.z;
    const double d2 = xt * xt + yt * yt + zt * zt;
    // (2 k_e + 1) / sigma^2 / d^2 with sigma^2 = k_e d^2
    const double w = (2.0 * k + 1.0) / (k * d2 * d2);
    info.j_x += w * xt * xt;
    info.j_y += w * yt * yt;
    info.j_xy += w * xt * yt;
  }
  return info;
}

CrlbValue crlb(const RangeModel& model, const Point3& user, const AntennaArray& array) {
  double sx = 0.0;
  double sy = 0.0;
  for (const auto& a : array.antennas) {
    const double xt = user.x - a.x;
    const double yt = user.y - a.y;
    const double zt = user.z - a.z;
    const double d2 = xt * xt + yt * yt + zt * zt;
    const double d4 = d2 * d2;
    sx += xt * xt / d4;
    sy += yt * yt / d4;
  }
  if (sx <= 0.0 || sy <= 0.0) return {kInf, false};
  const double c = model.k_e / (2.0 * model.k_e + 1.0);
  return {c * (1.0 / sx + 1.0 / sy), true};
}

CrlbGradient crlb_gradient(const RangeModel& model, const Point3& user, const AntennaArray& array) {
  // Bound = c (1/S_x + 1/S_y); differentiate the geometry sums directly.
  double sx = 0.0, sy = 0.0;
  double dsx_dx = 0.0, dsy_dx = 0.0;  // derivatives w.r.t. user x
  double dsx_dy = 0.0, dsy_dy = 0.0;  // derivatives w.r.t. user y
  for (const auto& a : array.antennas) {
    const double xt = user.x - a.x;
    const double yt = user.y - a.y;
    const double zt = user.z - a.z;
    const double d2 = xt * xt + yt * yt + zt * zt;
    const double d4 = d2 * d2;
    const double d6 = d4 * d2;
    sx += xt * xt / d4;
    sy += yt * yt / d4;
    dsx_dx += 2.0 * xt / d4 - 4.0 * xt * xt * xt / d6;
    dsy_dx += -4.0 * xt * yt * yt / d6;
    dsy_dy += 2.0 * yt / d4 - 4.0 * yt * yt * yt / d6;
    dsx_dy += -4.0 * yt * xt * xt / d6;
  }
  if (sx <= 0.0 || sy <= 0.0)
    throw std::domain_error("crlb_gradient: undefined at singular points (S_x or S_y is zero)");
  const double c = model.k_e / (2.0 * model.k_e + 1.0);
  return {c * (-dsx_dx / (sx * sx) - dsy_dx / (sy * sy)),
          c * (-dsx_dy / (sx * sx) - dsy_dy / (sy * sy))};
}

double crlb_upper_bound(const RangeModel& model, const Point3& user, const AntennaArray& array,
                        int antenna_index) {
  if (antenna_index < 0 || antenna_index >= array.size())
    throw std::out_of_range("crlb_upper_bound: antenna index out of range");
  const auto& a = array.antennas[static_cast<std::size_t>(antenna_index)];
  const double xt = user.x - a.x;
  const double yt = user.y - a.y;
  const double zt = user.z - a.z;
  if (xt == 0.0 || yt == 0.0)
    throw std::domain_error("crlb_upper_bound: antenna must have nonzero x and y offsets");
  const double d2 = xt * xt + yt * yt + zt * zt;
  const double d4 = d2 * d2;
  const double c = model.k_e / (2.0 * model.k_e + 1.0);
  return c * (d4 / (xt * xt) + d4 / (yt * yt));
}

double full_matrix_crlb(const FisherInfo& info) {
  const double det = info.j_x * info.j_y - info.j_xy * info.j_xy;
  if (!(info.j_x > 0.0) || !(info.j_y > 0.0) || !(det > 0.0)) return kInf;
  return (info.j_x + info.j_y) / det;
}

}  // namespace pincrlb
