#pragma once

// Gaussian quadrature-state algebra in the principal-axis representation.
//
// Variances are normalized to the vacuum (vacuum = 1). A state is described
// by the variance of its squeezed and anti-squeezed quadratures and by the
// angle between the squeezed quadrature and the readout quadrature.

#include <numbers>

namespace qnoise {

/// Squeezing and anti-squeezing magnitudes in decibels relative to vacuum.
/// Positive squeeze_db means below vacuum; antisqueeze_db means above.
struct SqueezeLevel {
  double squeeze_db = 0.0;
  double antisqueeze_db = 0.0;

  /// Throws DomainError unless 0 <= squeeze_db <= antisqueeze_db, all finite.
  void validate() const;

  friend bool operator==(const SqueezeLevel&, const SqueezeLevel&) = default;
};

class QuadratureState {
 public:
  /// Vacuum state, v_sq = v_anti = 1.
  QuadratureState() = default;

  /// Builds a state, swapping the variances (and turning the angle by pi/2)
  /// when v_sq > v_anti. Throws DomainError for non-finite or non-positive
  /// variances and for pairs violating v_sq * v_anti >= 1.
  QuadratureState(double v_sq, double v_anti, double angle = 0.0);

  static QuadratureState vacuum() { return {}; }

  double v_sq() const noexcept { return v_sq_; }
  double v_anti() const noexcept { return v_anti_; }
  /// Squeezed-quadrature angle relative to readout, reduced to [-pi/2, pi/2).
  double angle() const noexcept { return angle_; }

  /// v_sq * v_anti; 1 for pure states.
  double uncertainty_product() const noexcept { return v_sq_ * v_anti_; }

  friend bool operator==(const QuadratureState&, const QuadratureState&) = default;

 private:
  double v_sq_ = 1.0;
  double v_anti_ = 1.0;
  double angle_ = 0.0;
};

/// Reduces an angle modulo pi into [-pi/2, pi/2).
double reduce_angle(double angle) noexcept;

/// True when a and b describe the same quadrature axis (mod pi) within tol.
bool same_axis(double a, double b, double tol = 1e-12) noexcept;

/// v_sq = 10^(-squeeze_db/10), v_anti = 10^(antisqueeze_db/10).
QuadratureState state_from_db(const SqueezeLevel& level, double angle = 0.0);

/// Mixes vacuum into both quadratures: v -> eta*v + (1 - eta).
/// Requires 0 < eta <= 1.
QuadratureState apply_loss(const QuadratureState& s, double eta);

/// Turns the squeezed quadrature by phi relative to readout.
QuadratureState rotate(const QuadratureState& s, double phi);

/// Variance seen in the readout quadrature:
/// v_sq cos^2(angle) + v_anti sin^2(angle).
double readout_variance(const QuadratureState& s) noexcept;

/// Gaussian average over an RMS angle jitter sigma (radians, >= 0). The
/// principal axes are unchanged; the variances mix with weight
/// (1 + exp(-2 sigma^2)) / 2.
QuadratureState dephase(const QuadratureState& s, double sigma);

/// -10 log10(v). Requires v > 0.
double variance_to_db(double v);
/// 10^(-db/10).
double db_to_variance(double db);

}  // namespace qnoise
