#include "qnoise/quadrature.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "qnoise/errors.hpp"

namespace qnoise {
namespace {

constexpr double kPi = std::numbers::pi;

// Relative slack on the uncertainty product. Products of dB-derived pairs
// such as 10^-0.9 * 10^0.9 land one ulp either side of 1.
constexpr double kHurSlack = 1e-12;

void require_efficiency(double eta) {
  if (!std::isfinite(eta) || eta <= 0.0 || eta > 1.0) {
    throw DomainError("efficiency must lie in (0, 1], got " + std::to_string(eta));
  }
}

}  // namespace

void SqueezeLevel::validate() const {
  if (!std::isfinite(squeeze_db) || !std::isfinite(antisqueeze_db)) {
    throw DomainError("squeeze level must be finite");
  }
  if (squeeze_db < 0.0) {
    throw DomainError("squeeze_db must be >= 0, got " + std::to_string(squeeze_db));
  }
  if (antisqueeze_db < squeeze_db) {
    throw DomainError("antisqueeze_db (" + std::to_string(antisqueeze_db) +
                      ") must be >= squeeze_db (" + std::to_string(squeeze_db) + ")");
  }
}

QuadratureState::QuadratureState(double v_sq, double v_anti, double angle) {
  if (!std::isfinite(v_sq) || !std::isfinite(v_anti) || !std::isfinite(angle)) {
    throw DomainError("quadrature state components must be finite");
  }
  if (v_sq <= 0.0 || v_anti <= 0.0) {
    throw DomainError("quadrature variances must be positive");
  }
  if (v_sq * v_anti < 1.0 - kHurSlack) {
    throw DomainError("variance pair violates the uncertainty relation: " + std::to_string(v_sq) +
                      " * " + std::to_string(v_anti) + " < 1");
  }
  if (v_sq > v_anti) {
    std::swap(v_sq, v_anti);
    angle += kPi / 2.0;
  }
  v_sq_ = v_sq;
  v_anti_ = v_anti;
  angle_ = reduce_angle(angle);
}

double reduce_angle(double angle) noexcept {
  if (angle >= -kPi / 2.0 && angle < kPi / 2.0) return angle;
  double reduced = angle - kPi * std::floor((angle + kPi / 2.0) / kPi);
  // floor() can leave the result one rounding step outside the interval.
  if (reduced >= kPi / 2.0) reduced -= kPi;
  if (reduced < -kPi / 2.0) reduced += kPi;
  return reduced;
}

bool same_axis(double a, double b, double tol) noexcept {
  const double d = std::abs(reduce_angle(a - b));
  return d <= tol || kPi - d <= tol;
}

QuadratureState state_from_db(const SqueezeLevel& level, double angle) {
  level.validate();
  return QuadratureState(db_to_variance(level.squeeze_db), db_to_variance(-level.antisqueeze_db),
                         angle);
}

QuadratureState apply_loss(const QuadratureState& s, double eta) {
  require_efficiency(eta);
  // Written as 1 + eta (v - 1) so vacuum maps to itself exactly and rounding
  // cannot push a variance across 1.
  return QuadratureState(1.0 + eta * (s.v_sq() - 1.0), 1.0 + eta * (s.v_anti() - 1.0),
                         s.angle());
}

QuadratureState rotate(const QuadratureState& s, double phi) {
  if (!std::isfinite(phi)) throw DomainError("rotation angle must be finite");
  return QuadratureState(s.v_sq(), s.v_anti(), s.angle() + phi);
}

double readout_variance(const QuadratureState& s) noexcept {
  const double c = std::cos(s.angle());
  const double sn = std::sin(s.angle());
  return s.v_sq() * c * c + s.v_anti() * sn * sn;
}

QuadratureState dephase(const QuadratureState& s, double sigma) {
  if (!(sigma >= 0.0)) {
    throw DomainError("phase jitter sigma must be >= 0, got " + std::to_string(sigma));
  }
  if (sigma == 0.0) return s;
  // <sin^2(theta)> for theta ~ N(0, sigma^2).
  const double mix = -0.5 * std::expm1(-2.0 * sigma * sigma);
  const double spread = mix * (s.v_anti() - s.v_sq());
  return QuadratureState(s.v_sq() + spread, s.v_anti() - spread, s.angle());
}

double variance_to_db(double v) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw DomainError("variance must be positive and finite, got " + std::to_string(v));
  }
  return -10.0 * std::log10(v);
}

double db_to_variance(double db) {
  if (!std::isfinite(db)) throw DomainError("decibel value must be finite");
  return std::pow(10.0, -db / 10.0);
}

}  // namespace qnoise
