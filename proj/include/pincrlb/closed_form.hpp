#pragma once

namespace pincrlb {

/// Square antenna cluster with the user at its center: 2*n_bar antennas per
/// axis at spacing `spacing`, waveguide height `height`, noise coefficient
/// `k_e`.
struct SquareGridSpec {
  double spacing = 1.0;  // meters
  int n_bar = 1;
  double height = 3.0;  // meters
  double k_e = 0.01;
};

/// Center-user bound for the square grid in closed double-sum form:
///   k_e spacing^2 / (4 (2 k_e + 1)) * (1/S + 1/S'),
///   S  = sum_{i,n=1..n_bar} (n - 1/2)^2 / beta_ni^2,
///   S' = sum_{i,n=1..n_bar} (i - 1/2)^2 / beta_ni^2,
///   beta_ni = (n - 1/2)^2 + (i - 1/2)^2 + height^2 / spacing^2.
/// Identical to the general bound evaluated at the center of the generated
/// cluster.
double square_grid_crlb(const SquareGridSpec& spec);

/// Four-antenna special case: 2 k_e spacing^2 / (2 k_e + 1) *
/// (1/2 + height^2/spacing^2)^2.
double crlb_n4(double spacing, double height, double k_e);

struct SpacingDerivatives {
  double first = 0.0;   // d bound / d spacing
  double second = 0.0;  // d^2 bound / d spacing^2, positive for all spacings
};

/// Analytic first and second derivatives of crlb_n4 in the spacing.
SpacingDerivatives crlb_n4_derivatives(double spacing, double height, double k_e);

/// The spacing minimizing crlb_n4: sqrt(2) * height.
double optimal_spacing_analytic(double height);

/// Golden-section minimizer of square_grid_crlb over [bracket_lo, bracket_hi]
/// to within `tol` on the bracket width. The objective is empirically convex
/// in the spacing, so a derivative-free unimodal search suffices. Throws
/// std::invalid_argument on a bad bracket and std::runtime_error if 200
/// iterations do not reach `tol`.
double optimize_spacing_numeric(int n_bar, double height, double k_e, double bracket_lo,
                                double bracket_hi, double tol);

}  // namespace pincrlb
