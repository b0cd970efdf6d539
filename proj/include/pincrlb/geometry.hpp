#pragma once

#include <vector>

namespace pincrlb {

/// A position in meters. Users live on the ground plane (z = 0); antennas
/// sit at the waveguide height (z = d_H > 0).
struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

/// Rectangular service area centered at the origin: x spans [-d_l/2, d_l/2],
/// y spans [-d_w/2, d_w/2]. A square of side `exclusion_side` centered at the
/// origin can be excluded from area averages (0 means no exclusion).
struct ServiceArea {
  double d_w = 10.0;
  double d_l = 40.0;
  double exclusion_side = 0.0;

  double half_length() const { return 0.5 * d_l; }
  double half_width() const { return 0.5 * d_w; }
  bool contains(double x, double y) const;
  bool in_exclusion(double x, double y) const;
};

/// Throws std::invalid_argument if the area violates its invariants
/// (positive sides, 0 <= exclusion_side < min(d_w, d_l)).
void validate(const ServiceArea& area);

/// Ordered list of antenna positions, all at z = height. Waveguide-fed
/// arrays carry a per-antenna waveguide tag; conventional arrays leave
/// `waveguide_index` empty.
struct AntennaArray {
  std::vector<Point3> antennas;
  std::vector<int> waveguide_index;
  double height = 0.0;

  int size() const { return static_cast<int>(antennas.size()); }
};

/// Throws std::invalid_argument on an empty array, a non-positive height,
/// antennas off the z = height plane, or duplicate positions.
void validate(const AntennaArray& array);

/// Euclidean distance from a ground-plane user to an antenna.
double distance(const Point3& user, const Point3& antenna);

/// n_wg waveguides parallel to the x-axis, equally spaced across the area
/// width by the midpoint rule; n_per_wg antennas per waveguide, equally
/// spaced along the full area length, also by the midpoint rule.
AntennaArray make_waveguide_array(int n_wg, int n_per_wg, const ServiceArea& area, double height);

/// n antennas equally spaced on a circle of radius wavelength/(4 sin(pi/n))
/// centered above the origin, which makes the minimal pairwise distance
/// exactly wavelength/2.
AntennaArray make_circular_array(int n, double wavelength, double height);

/// (2 n_bar) x (2 n_bar) grid around `center` (a ground point): offsets
/// +/-(k - 1/2) * spacing in x and y for k = 1..n_bar, all at z = height.
AntennaArray make_square_cluster(const Point3& center, double spacing, int n_bar, double height);

/// Same waveguide layout as make_waveguide_array, but the antennas on each
/// waveguide are spaced within [focal_x - segment_length/2,
/// focal_x + segment_length/2]. Rejects segments that extend beyond the
/// service area length.
AntennaArray make_focal_segment_array(double focal_x, double segment_length, int n_wg,
                                      int n_per_wg, const ServiceArea& area, double height);

}  // namespace pincrlb
