#include "spinmem/system.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace spinmem {

namespace {
constexpr complexd kI{0.0, 1.0};

bool is_mw_pair(int lo, int hi) { return (lo == 1 && hi == 2) || (lo == 3 && hi == 4); }
bool is_rf_pair(int lo, int hi) { return (lo == 1 && hi == 3) || (lo == 2 && hi == 4); }
}  // namespace

double SystemParams::t1e() const {
  return gamma > 0.0 ? 1.0 / gamma : std::numeric_limits<double>::infinity();
}

void SystemParams::validate() const {
  if (!(hyperfine_hz > 0.0)) throw std::invalid_argument("hyperfine coupling must be positive");
  if (gamma < 0.0) throw std::invalid_argument("relaxation rate must be non-negative");
  if (!(electron_zeeman_hz > nuclear_zeeman_hz) || nuclear_zeeman_hz < 0.0)
    throw std::invalid_argument("require omega_e > omega_I >= 0");
  if (g && g_nuclear && field_tesla) {
    const double we = *g * bohr_magneton_hz_per_tesla * *field_tesla;
    const double wi = *g_nuclear * nuclear_magneton_hz_per_tesla * *field_tesla;
    if (std::abs(we - electron_zeeman_hz) > 1e-12 * we ||
        std::abs(wi - nuclear_zeeman_hz) > 1e-12 * wi)
      throw std::invalid_argument("Zeeman frequencies inconsistent with g, g_I, B0");
  }
}

SystemParams SystemParams::from_field(double g, double g_nuclear, double field_tesla,
                                      double hyperfine_hz) {
  SystemParams p;
  p.electron_zeeman_hz = g * bohr_magneton_hz_per_tesla * field_tesla;
  p.nuclear_zeeman_hz = g_nuclear * nuclear_magneton_hz_per_tesla * field_tesla;
  p.hyperfine_hz = hyperfine_hz;
  p.g = g;
  p.g_nuclear = g_nuclear;
  p.field_tesla = field_tesla;
  return p;
}

SystemParams SystemParams::si_p(double gamma) {
  const double g = 1.9987;
  const double b0 = 9.7e9 / (g * bohr_magneton_hz_per_tesla);
  SystemParams p = from_field(g, g_factor_31p, b0);
  p.gamma = gamma;
  return p;
}

void Transition::validate() const {
  if (lower < 1 || upper > 4 || lower >= upper)
    throw std::invalid_argument("transition levels must satisfy 1 <= lower < upper <= 4");
  const bool mw_ok = is_mw_pair(lower, upper);
  const bool rf_ok = is_rf_pair(lower, upper);
  if (channel == Channel::mw && !mw_ok)
    throw std::invalid_argument("levels " + std::to_string(lower) + "-" + std::to_string(upper) +
                                " do not form an electron (mw) transition");
  if (channel == Channel::rf && !rf_ok)
    throw std::invalid_argument("levels " + std::to_string(lower) + "-" + std::to_string(upper) +
                                " do not form a nuclear (rf) transition");
}

double DensityMatrix::hermiticity_error() const {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix::trace_error() const { return std::abs(m.trace() - complexd(1.0, 0.0)); }

double DensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Matrix4cd> es(0.5 * (m + m.adjoint()));
  return es.eigenvalues().minCoeff();
}

void DensityMatrix::check() const {
  if (hermiticity_error() > 1e-12) throw std::runtime_error("density matrix not Hermitian");
  if (trace_error() > 1e-12) throw std::runtime_error("density matrix trace != 1");
  if (min_eigenvalue() < -1e-10) throw std::runtime_error("density matrix not positive");
}

Matrix4cd electron_sz() {
  Matrix4cd m = Matrix4cd::Zero();
  m.diagonal() << 0.5, -0.5, 0.5, -0.5;
  return m;
}

Matrix4cd nuclear_iz() {
  Matrix4cd m = Matrix4cd::Zero();
  m.diagonal() << 0.5, 0.5, -0.5, -0.5;
  return m;
}

Matrix4cd electron_s_plus() {
  Matrix4cd m = Matrix4cd::Zero();
  m(0, 1) = 1.0;  // |1><2|
  m(2, 3) = 1.0;  // |3><4|
  return m;
}

Matrix4cd electron_s_minus() { return electron_s_plus().adjoint(); }

Matrix4cd s_dot_i() {
  Matrix4cd m = Matrix4cd::Zero();
  m.diagonal() << 0.25, -0.25, -0.25, 0.25;  // SzIz
  // flip-flop (S+I- + S-I+)/2 couples |2> and |3>
  m(1, 2) = 0.5;
  m(2, 1) = 0.5;
  return m;
}

Matrix4cd static_hamiltonian(const SystemParams& p) {
  return p.omega_e() * electron_sz() - p.omega_i() * nuclear_iz() + p.hyperfine_rad() * s_dot_i();
}

Matrix4cd static_hamiltonian_ising(const SystemParams& p) {
  Matrix4cd szmiz = Matrix4cd::Zero();
  szmiz.diagonal() << 0.25, -0.25, -0.25, 0.25;
  return p.omega_e() * electron_sz() - p.omega_i() * nuclear_iz() + p.hyperfine_rad() * szmiz;
}

DensityMatrix thermal_pseudopure_state(const SystemParams&) {
  Matrix4cd m = Matrix4cd::Zero();
  m.diagonal() << 0.5, 0.0, 0.5, 0.0;
  return DensityMatrix(m);
}

Matrix4cd subspace_pauli(const Transition& t, Axis axis, double phase) {
  t.validate();
  const int i = t.lower - 1;
  const int j = t.upper - 1;
  Matrix4cd m = Matrix4cd::Zero();
  switch (axis) {
    case Axis::x:
      m(i, j) = std::exp(-kI * phase);
      m(j, i) = std::exp(kI * phase);
      break;
    case Axis::y:
      m(i, j) = -kI * std::exp(-kI * phase);
      m(j, i) = kI * std::exp(kI * phase);
      break;
    case Axis::z:
      m(i, i) = 1.0;
      m(j, j) = -1.0;
      break;
    case Axis::raising:
      m(i, j) = std::exp(-kI * phase);
      break;
  }
  return m;
}

Matrix4cd subspace_spin(const Transition& t, Axis axis, double phase) {
  return 0.5 * subspace_pauli(t, axis, phase);
}

Matrix4cd subspace_rotation(const Transition& t, double angle, double axis_phase) {
  const int i = t.lower - 1;
  const int j = t.upper - 1;
  const double c = std::cos(0.5 * angle);
  const complexd s = -kI * std::sin(0.5 * angle);
  Matrix4cd u = Matrix4cd::Identity();
  u(i, i) = c;
  u(j, j) = c;
  u(i, j) = s * std::exp(-kI * axis_phase);
  u(j, i) = s * std::exp(kI * axis_phase);
  return u;
}

}  // namespace spinmem
