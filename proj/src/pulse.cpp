#include "spinmem/pulse.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

namespace spinmem {

namespace {
constexpr complexd kI{0.0, 1.0};
constexpr double kPi = two_pi / 2.0;

// Axis angle from pulse phase; see the convention note in pulse.hpp.
double axis_angle(double pulse_phase) { return pulse_phase + 0.5 * kPi; }
}  // namespace

void Pulse::validate() const {
  transition.validate();
  if (!(angle > 0.0) || angle > 2.0 * two_pi)
    throw std::invalid_argument("pulse angle must lie in (0, 4pi]");
  if (duration < 0.0) throw std::invalid_argument("pulse duration must be non-negative");
  if (duration > 0.0 && !(rabi_rad() > 0.0 && std::isfinite(rabi_rad())))
    throw std::invalid_argument("finite pulse implies a positive finite Rabi frequency");
  if (angle_error && std::abs(*angle_error) >= 1.0)
    throw std::invalid_argument("fractional angle error must satisfy |eps| < 1");
}

void ErrorModel::validate() const {
  if (std::abs(mw_angle_error) >= 1.0 || std::abs(rf_angle_error) >= 1.0)
    throw std::invalid_argument("fractional angle error must satisfy |eps| < 1");
  if (phase_jitter_rms < 0.0) throw std::invalid_argument("phase jitter rms must be >= 0");
}

double transition_detuning(const Transition& t, double delta_e, double delta_n) {
  // E_lower - E_upper under delta_e Sz - delta_n Iz; the (lower, upper)
  // element evolves as exp(-i * detuning * t).
  return t.channel == Channel::mw ? delta_e : -delta_n;
}

Matrix4cd ideal_pulse_propagator(const Pulse& p, double t0) {
  if (p.duration != 0.0)
    throw std::invalid_argument("ideal_pulse_propagator requires duration == 0");
  const double chi = axis_angle(p.phase) + hz_to_rad(p.carrier_offset_hz) * t0;
  return subspace_rotation(p.transition, p.angle, chi);
}

Matrix4cd finite_pulse_propagator(const Pulse& p, double delta_e, double delta_n, double t0) {
  if (!(p.duration > 0.0))
    throw std::invalid_argument("finite_pulse_propagator requires duration > 0");
  const int i = p.transition.lower - 1;
  const int j = p.transition.upper - 1;
  const double tau = p.duration;
  const double omega1 = p.angle / tau;
  const double offset = hz_to_rad(p.carrier_offset_hz);
  const double chi = axis_angle(p.phase);

  // Free Hamiltonian of the detuned packet.
  Matrix4cd h = delta_e * electron_sz() - delta_n * nuclear_iz();
  // Shift the driven pair into the carrier frame and add the drive; the
  // time-dependent carrier phase is absorbed exactly by the V sandwich below.
  h(i, i) -= 0.5 * offset;
  h(j, j) += 0.5 * offset;
  h(i, j) += 0.5 * omega1 * std::exp(-kI * chi);
  h(j, i) += 0.5 * omega1 * std::exp(kI * chi);

  Eigen::SelfAdjointEigenSolver<Matrix4cd> es(h);
  const Eigen::Vector4d ev = es.eigenvalues();
  Eigen::Vector4cd ph;
  for (int k = 0; k < 4; ++k) ph(k) = std::exp(-kI * (ev(k) * tau));
  Matrix4cd u = es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();

  // V(t) = exp(-i * offset * t * (|i><i| - |j><j|)/2)
  auto carrier_frame = [&](double t) {
    Matrix4cd v = Matrix4cd::Identity();
    v(i, i) = std::exp(-kI * (0.5 * offset * t));
    v(j, j) = std::exp(kI * (0.5 * offset * t));
    return v;
  };
  return carrier_frame(t0 + tau) * u * carrier_frame(t0).adjoint();
}

double effective_angle(const Pulse& p, const ErrorModel& e) {
  const double eps = p.angle_error ? *p.angle_error : e.angle_error_for(p.transition.channel);
  return p.angle * (1.0 + eps);
}

Pulse apply_error_model(const Pulse& p, const ErrorModel& e, RandomStream& rng) {
  Pulse out = p;
  const double eps = p.angle_error ? *p.angle_error : e.angle_error_for(p.transition.channel);
  out.angle = p.angle * (1.0 + eps);
  out.angle_error = 0.0;
  if (e.phase_jitter_rms > 0.0) out.phase += e.phase_jitter_rms * rng.gaussian();
  return out;
}

std::vector<Pulse> expand_composite(const Pulse& p, const CompositeScheme& s) {
  if (s.kind != CompositeKind::bb1) throw std::invalid_argument("expand_composite: kind must be BB1");
  const double phi1 = std::acos(-p.angle / (2.0 * two_pi));
  const double tau_pi = p.duration > 0.0 ? kPi / (p.angle / p.duration) : 0.0;

  auto component = [&](double angle, double phase, double duration) {
    Pulse c = p;
    c.composite = CompositeKind::none;
    c.angle = angle;
    c.phase = phase;
    c.duration = duration;
    return c;
  };
  return {
      component(p.angle, p.phase, p.duration),
      component(kPi, p.phase + phi1, tau_pi),
      component(two_pi, p.phase + 3.0 * phi1, 2.0 * tau_pi),
      component(kPi, p.phase + phi1, tau_pi),
  };
}

std::vector<Pulse> expanded_pulses(const Pulse& p) {
  if (p.composite == CompositeKind::bb1) return expand_composite(p, {CompositeKind::bb1});
  return {p};
}

double pulse_extent(const Pulse& p) {
  double total = 0.0;
  for (const Pulse& c : expanded_pulses(p)) total += c.duration;
  return total;
}

Matrix4cd pulse_propagator(const Pulse& p, const ErrorModel& e, double delta_e, double delta_n,
                           double t0) {
  Matrix4cd u = Matrix4cd::Identity();
  double t = t0;
  for (Pulse c : expanded_pulses(p)) {
    const double eps = c.angle_error ? *c.angle_error : e.angle_error_for(c.transition.channel);
    c.angle_error.reset();
    c.angle *= (1.0 + eps);
    if (c.duration > 0.0) {
      u = finite_pulse_propagator(c, delta_e, delta_n, t) * u;
      t += c.duration;
    } else {
      u = ideal_pulse_propagator(c, t) * u;
    }
  }
  return u;
}

}  // namespace spinmem
