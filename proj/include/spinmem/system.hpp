#pragma once

#include <Eigen/Dense>
#include <complex>
#include <optional>

#include "spinmem/units.hpp"

namespace spinmem {

using Matrix4cd = Eigen::Matrix4cd;
using Matrix2cd = Eigen::Matrix2cd;
using complexd = std::complex<double>;

// Four-level basis of the coupled electron (S=1/2) + 31P nucleus (I=1/2),
// ordered by (S_z, I_z):
//   |1> = (+1/2, +1/2)   |2> = (-1/2, +1/2)
//   |3> = (+1/2, -1/2)   |4> = (-1/2, -1/2)
// All operators and density matrices in this codebase use this ordering.

// Physical constants of one Si:P donor system. Frequencies are stored as
// ordinary frequencies (Hz); dynamics code converts to angular units.
struct SystemParams {
  double electron_zeeman_hz = 9.7e9;   // omega_e / 2pi
  double nuclear_zeeman_hz = 5.98e6;   // omega_I / 2pi
  double hyperfine_hz = 117.0e6;       // A / 2pi
  double gamma = 0.0;                  // electron relaxation rate, 1/T1e [1/s]
  double thermal_beta = 0.0;           // -g.muB.B0/kT (negative at positive field)

  // Optional raw inputs; when present they must agree with the Zeeman
  // frequencies above (or can be used to derive them).
  std::optional<double> g;
  std::optional<double> g_nuclear;
  std::optional<double> field_tesla;

  double omega_e() const { return hz_to_rad(electron_zeeman_hz); }
  double omega_i() const { return hz_to_rad(nuclear_zeeman_hz); }
  double hyperfine_rad() const { return hz_to_rad(hyperfine_hz); }
  double t1e() const;  // 1/gamma (infinity when gamma == 0)

  // Throws std::invalid_argument when out of range or inconsistent.
  void validate() const;

  // Zeeman frequencies from g-factors and field; gamma/beta left at defaults.
  static SystemParams from_field(double g, double g_nuclear, double field_tesla,
                                 double hyperfine_hz = 117.0e6);

  // X-band Si:P defaults (g = 1.9987, B0 chosen so omega_e/2pi = 9.7 GHz).
  static SystemParams si_p(double gamma = 0.0);
};

enum class Channel { mw, rf };

// A selective two-level transition, levels labelled 1..4 as above.
// mw transitions flip the electron only: (1,2), (3,4).
// rf transitions flip the nucleus only:  (1,3), (2,4).
struct Transition {
  int lower = 1;  // smaller level label
  int upper = 2;
  Channel channel = Channel::mw;

  void validate() const;  // throws on a pair/channel mismatch
  bool operator==(const Transition&) const = default;

  static Transition mw12() { return {1, 2, Channel::mw}; }
  static Transition mw34() { return {3, 4, Channel::mw}; }
  static Transition rf13() { return {1, 3, Channel::rf}; }
  static Transition rf24() { return {2, 4, Channel::rf}; }
};

// 4x4 state of the electron-nucleus pair in the basis above; this is the
// pseudopure deviation part, normalised so the thermal state has trace 1.
struct DensityMatrix {
  Matrix4cd m = Matrix4cd::Zero();

  DensityMatrix() = default;
  explicit DensityMatrix(const Matrix4cd& v) : m(v) {}

  double hermiticity_error() const;
  double trace_error() const;
  double min_eigenvalue() const;

  // Checks Hermiticity and unit trace to 1e-12 and positivity to -1e-10;
  // throws std::runtime_error otherwise.
  void check() const;
};

// Spin operators on the product space (angular-momentum convention, +-1/2
// eigenvalues on the diagonal).
Matrix4cd electron_sz();
Matrix4cd nuclear_iz();
Matrix4cd electron_s_plus();
Matrix4cd electron_s_minus();
Matrix4cd s_dot_i();  // SxIx + SyIy + SzIz

// H0 = omega_e Sz - omega_I Iz + A S.I, in angular frequency units.
Matrix4cd static_hamiltonian(const SystemParams& p);
// Secular variant, A SzIz only. Same diagonal as the full H0; the flip-flop
// A/2 coupling between |2> and |3> is dropped.
Matrix4cd static_hamiltonian_ising(const SystemParams& p);

// diag(1/2, 0, 1/2, 0) = (Sz + I/2)/2: thermal electron polarisation written
// in pseudopure form, nuclear polarisation neglected.
DensityMatrix thermal_pseudopure_state(const SystemParams& p = {});

enum class Axis { x, y, z, raising };

// Pauli operator on the two levels of `t`, rotated by `phase` about z
// (sigma_x -> cos(phase) sigma_x + sin(phase) sigma_y), identity elsewhere.
// Axis::raising gives e^{-i phase} |lower><upper|.
Matrix4cd subspace_pauli(const Transition& t, Axis axis, double phase = 0.0);

// Spin-1/2 version (Pauli/2), e.g. entries 1/2 for Axis::x at phase 0.
Matrix4cd subspace_spin(const Transition& t, Axis axis, double phase = 0.0);

// e^{-i angle sigma_axis(phase)/2} on the subspace of `t`, identity elsewhere.
Matrix4cd subspace_rotation(const Transition& t, double angle, double axis_phase);

}  // namespace spinmem
