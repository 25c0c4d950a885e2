#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "spinmem/rng.hpp"
#include "spinmem/system.hpp"

namespace spinmem {

enum class CompositeKind { none, bb1 };

// One transition-selective rectangular pulse.
//
// Phase convention: a pulse of phase phi rotates the subspace about the axis
// at angle phi + pi/2 from x, i.e. a phase-0 pulse rotates about +y. With
// this choice a pi/2 pulse of phase phi applied to the thermal state leaves
// the upper off-diagonal of the driven pair at exp(-i phi)/4, so coherence
// phase follows pulse phase with no extra factor of i.
struct Pulse {
  Transition transition;
  double angle = 0.0;             // nominal rotation, radians, (0, 4pi]
  double phase = 0.0;             // radians
  double duration = 0.0;          // seconds; 0 = ideal instantaneous
  double carrier_offset_hz = 0.0; // intentional source detuning from the transition
  std::optional<double> angle_error;  // fractional over-rotation; overrides ErrorModel
  CompositeKind composite = CompositeKind::none;

  void validate() const;
  double rabi_rad() const { return duration > 0.0 ? angle / duration : 0.0; }
  bool operator==(const Pulse&) const = default;
};

// Systematic fractional over/under-rotation per channel plus optional phase
// jitter (rms, radians) drawn per pulse.
struct ErrorModel {
  double mw_angle_error = 0.0;
  double rf_angle_error = 0.0;
  double phase_jitter_rms = 0.0;

  double angle_error_for(Channel c) const {
    return c == Channel::mw ? mw_angle_error : rf_angle_error;
  }
  void validate() const;
};

struct CompositeScheme {
  CompositeKind kind = CompositeKind::none;
};

// Instantaneous rotation exp(-i theta sigma_axis/2) on the pulse's subspace,
// axis at phase + pi/2 (see Pulse). `t0` is the pulse time; a nonzero carrier
// offset advances the effective phase by offset * t0.
Matrix4cd ideal_pulse_propagator(const Pulse& p, double t0 = 0.0);

// Finite-duration propagator over [t0, t0 + duration] including detunings:
// the driven pair evolves under delta_eff sigma_z/2 + omega_1 sigma_axis/2 in
// the carrier frame (generalised Rabi rotation), where delta_eff combines the
// packet detuning on that transition with the carrier offset; undriven levels
// and cross coherences pick up their free-evolution phases.
// delta_e, delta_n are the packet detunings in rad/s.
Matrix4cd finite_pulse_propagator(const Pulse& p, double delta_e, double delta_n,
                                  double t0 = 0.0);

// Dispatches on duration; applies `effective_angle` scaling first.
Matrix4cd pulse_propagator(const Pulse& p, const ErrorModel& e, double delta_e,
                           double delta_n, double t0);

// theta' = theta (1 + eps), phase perturbed by a jitter draw. Deterministic
// for a given rng state; consumes one draw only when jitter is enabled.
Pulse apply_error_model(const Pulse& p, const ErrorModel& e, RandomStream& rng);

double effective_angle(const Pulse& p, const ErrorModel& e);

// BB1 expansion of a theta pulse: theta(phi) followed by the identity-valued
// corrector pi(phi+phi1), 2pi(phi+3phi1), pi(phi+phi1) with
// phi1 = arccos(-theta / 4pi). On resonance and error-free the product equals
// the plain theta(phi) rotation exactly; a common fractional angle error
// cancels to O(eps^3) in the propagator.
std::vector<Pulse> expand_composite(const Pulse& p, const CompositeScheme& s);

// As executed: composite pulses expanded, plain pulses returned as-is.
std::vector<Pulse> expanded_pulses(const Pulse& p);

// Total time occupied by the pulse (sum of component durations).
double pulse_extent(const Pulse& p);

// Free-evolution detuning of the transition in rad/s under
// delta_e Sz - delta_n Iz: E_lower - E_upper, so the (lower, upper) element
// evolves as exp(-i * detuning * t).
double transition_detuning(const Transition& t, double delta_e, double delta_n);

}  // namespace spinmem
