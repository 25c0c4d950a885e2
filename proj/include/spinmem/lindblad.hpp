#pragma once

#include <complex>

#include "spinmem/system.hpp"

namespace spinmem {

// Electron T1 relaxation of the four-level system.
//
// The default generator works in the frame co-rotating with the secular
// (Ising) Hamiltonian, where the master equation becomes element-wise:
// populations exchange within each electron pair at gamma/2 each way, every
// coherence decays at gamma/2, and the two nuclear coherences rho_31, rho_42
// are cross-coupled through e^{+-iAt} factors inherited from transforming
// S+- into the rotating frame. That 2x2 block is propagated exactly: after
// the unitary substitution that removes the time dependence it has constant
// generator with eigenvalues (-gamma +- sqrt(gamma^2 - A^2))/2.
//
// Thermal handling of the populations:
//   high_t             pair differences decay to zero (strict high-temperature
//                      limit of the element-wise equation),
//   pseudopure_thermal pair differences relax toward the thermal pseudopure
//                      value 1/2, the first-order-in-beta fixed point. This is
//                      what makes an inversion-recovery null exist (population
//                      difference crosses zero at t = ln 2 * T1e), as used by
//                      identity-state preparation.
// Coherence dynamics and all decay rates are identical in the two modes.
enum class RelaxFrame { rotating_ising, lab };
enum class ThermalMode { high_t, pseudopure_thermal };

struct LindbladGenerator {
  double gamma = 0.0;               // 1/T1e
  double hyperfine_rad = 0.0;       // A in rad/s (cross-coupling frequency)
  ThermalMode thermal = ThermalMode::high_t;
  RelaxFrame frame = RelaxFrame::rotating_ising;
  double extra_nuclear_dephasing = 0.0;  // optional phenomenological 1/T2n channel
  double beta = 0.0;                // used by the lab-frame variant only

  bool is_zero() const { return gamma == 0.0 && extra_nuclear_dephasing == 0.0; }
};

LindbladGenerator lindblad_generator(const SystemParams& p,
                                     RelaxFrame frame = RelaxFrame::rotating_ising,
                                     ThermalMode thermal = ThermalMode::high_t);

// Propagates rho from absolute rotating-frame time t0 over `duration` under
// the generator plus free precession delta_e Sz - delta_n Iz. The absolute
// time matters only through the e^{+-iAt} cross terms (gamma > 0).
// `extra_nuclear_phase` adds a pre-integrated nuclear phase (noise integral)
// on top of delta_n * duration. Exact closed form; throws on duration < 0.
Matrix4cd evolve(const Matrix4cd& rho, double t0, double duration, double delta_e,
                 double delta_n, const LindbladGenerator& gen,
                 double extra_nuclear_phase = 0.0);

// rho_31 + rho_42.
complexd nuclear_coherence(const Matrix4cd& rho);

struct AnalyticRates {
  double t1e;                      // 1/gamma
  double t2n;                      // 2/gamma, valid for A >> gamma
  complexd lambda_plus;            // (-gamma + sqrt(gamma^2 - A^2))/2
  complexd lambda_minus;
  bool secular_regime;             // A > gamma: both eigenvalues decay at gamma/2
};

AnalyticRates analytic_rates(const SystemParams& p);

// --- lab-frame variant (validation path) ---------------------------------

// Dense superoperator for d(rho)/dt = -i[H, rho] + relaxation, with raising
// and lowering channels in the ratio 1 : e^{-beta}, normalised so the total
// electron flip rate is gamma (T1e = 1/gamma for every beta). H is the static
// Hamiltonian (full or Ising) with the packet detunings folded into the
// Zeeman terms.
using Superoperator = Eigen::Matrix<complexd, 16, 16>;

Superoperator lab_superoperator(const SystemParams& p, bool full_h0, double delta_e = 0.0,
                                double delta_n = 0.0);

Matrix4cd evolve_superoperator(const Matrix4cd& rho, double duration, const Superoperator& l);

// Interaction-picture transform rho_rot = e^{+iHt} rho e^{-iHt}.
Matrix4cd to_rotating_frame(const Matrix4cd& rho_lab, const Matrix4cd& h, double t);

}  // namespace spinmem
