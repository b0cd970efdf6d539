#include "pincrlb/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pincrlb {

bool ServiceArea::contains(double x, double y) const {
  return std::abs(x) <= half_length() && std::abs(y) <= half_width();
}

bool ServiceArea::in_exclusion(double x, double y) const {
  return exclusion_side > 0.0 && std::abs(x) < 0.5 * exclusion_side &&
         std::abs(y) < 0.5 * exclusion_side;
}

void validate(const ServiceArea& area) {
  if (!(area.d_w > 0.0) || !std::isfinite(area.d_w))
    throw std::invalid_argument("service area: d_w must be positive and finite");
  if (!(area.d_l > 0.0) || !std::isfinite(area.d_l))
    throw std::invalid_argument("service area: d_l must be positive and finite");
  if (!(area.exclusion_side >= 0.0) || !(area.exclusion_side < std::min(area.d_w, area.d_l)))
    throw std::invalid_argument("service area: exclusion_side must lie in [0, min(d_w, d_l))");
}

void validate(const AntennaArray& array) {
  if (array.antennas.empty())
    throw std::invalid_argument("antenna array: must contain at least one antenna");
  if (!(array.height > 0.0) || !std::isfinite(array.height))
    throw std::invalid_argument("antenna array: height must be positive and finite");
  if (!array.waveguide_index.empty() && array.waveguide_index.size() != array.antennas.size())
    throw std::invalid_argument("antenna array: waveguide tags must match the antenna count");
  for (const auto& a : array.antennas) {
    if (!std::isfinite(a.x) || !std::isfinite(a.y) || !std::isfinite(a.z))
      throw std::invalid_argument("antenna array: coordinates must be finite");
    if (a.z != array.height)
      throw std::invalid_argument("antenna array: all antennas must sit at z = height");
  }
  for (std::size_t i = 0; i < array.antennas.size(); ++i)
    for (std::size_t j = i + 1; j < array.antennas.size(); ++j)
      if (array.antennas[i].x == array.antennas[j].x && array.antennas[i].y == array.antennas[j].y)
        throw std::invalid_argument("antenna array: antenna positions must be pairwise distinct");
}

double distance(const Point3& user, const Point3& antenna) {
  const double dx = user.x - antenna.x;
  const double dy = user.y - antenna.y;
  const double dz = user.z - antenna.z;
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

namespace {

// Midpoint-rule placement: `count` points equally spaced in a segment of
// `length` centered at `center`, none on the segment ends. The symmetric
// (2k + 1 - count) form keeps mirrored layouts exact in floating point.
std::vector<double> segment_positions(double center, double length, int count) {
  std::vector<double> xs(static_cast<std::size_t>(count));
  const double half_step = length / (2.0 * count);
  for (int k = 0; k < count; ++k)
    xs[static_cast<std::size_t>(k)] = center + (2 * k + 1 - count) * half_step;
  return xs;
}

}  // namespace

AntennaArray make_waveguide_array(int n_wg, int n_per_wg, const ServiceArea& area, double height) {
  return make_focal_segment_array(0.0, area.d_l, n_wg, n_per_wg, area, height);
}

AntennaArray make_circular_array(int n, double wavelength, double height) {
  if (n < 2) throw std::invalid_argument("circular array: need at least 2 antennas");
  if (!(wavelength > 0.0)) throw std::invalid_argument("circular array: wavelength must be positive");
  if (!(height > 0.0)) throw std::invalid_argument("circular array: height must be positive");

  const double radius = wavelength / (4.0 * std::sin(std::numbers::pi / n));
  AntennaArray out;
  out.height = height;
  out.antennas.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / n;
    out.antennas.push_back({radius * std::cos(angle), radius * std::sin(angle), height});
  }
  validate(out);
  return out;
}

AntennaArray make_square_cluster(const Point3& center, double spacing, int n_bar, double height) {
  if (!(spacing > 0.0)) throw std::invalid_argument("square cluster: spacing must be positive");
  if (n_bar < 1) throw std::invalid_argument("square cluster: n_bar must be >= 1");
  if (!(height > 0.0)) throw std::invalid_argument("square cluster: height must be positive");
  if (center.z != 0.0) throw std::invalid_argument("square cluster: center must lie on the ground plane");

  // Offsets +/-(k - 1/2) * spacing are the midpoint grid of 2*n_bar points
  // with step `spacing`.
  const int side = 2 * n_bar;
  const auto xs = segment_positions(center.x, side * spacing, side);
  const auto ys = segment_positions(center.y, side * spacing, side);

  AntennaArray out;
  out.height = height;
  out.antennas.reserve(static_cast<std::size_t>(side) * side);
  for (double y : ys)
    for (double x : xs) out.antennas.push_back({x, y, height});
  validate(out);
  return out;
}

AntennaArray make_focal_segment_array(double focal_x, double segment_length, int n_wg,
                                      int n_per_wg, const ServiceArea& area, double height) {
  if (n_wg < 1 || n_per_wg < 1)
    throw std::invalid_argument("focal segment array: counts must be >= 1");
  if (!(height > 0.0)) throw std::invalid_argument("focal segment array: height must be positive");
  if (!(segment_length > 0.0))
    throw std::invalid_argument("focal segment array: segment length must be positive");
  validate(area);
  if (focal_x - 0.5 * segment_length < -area.half_length() ||
      focal_x + 0.5 * segment_length > area.half_length())
    throw std::invalid_argument("focal segment array: segment extends beyond the service area");

  const auto ys = segment_positions(0.0, area.d_w, n_wg);
  const auto xs = segment_positions(focal_x, segment_length, n_per_wg);

  AntennaArray out;
  out.height = height;
  out.antennas.reserve(xs.size() * ys.size());
  out.waveguide_index.reserve(xs.size() * ys.size());
  for (int j = 0; j < n_wg; ++j)
    for (double x : xs) {
      out.antennas.push_back({x, ys[static_cast<std::size_t>(j)], height});
      out.waveguide_index.push_back(j);
    }
  validate(out);
  return out;
}

}  // namespace pincrlb
