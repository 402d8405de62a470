#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "onebit/channel.hpp"
#include "onebit/expectation.hpp"
#include "onebit/loss.hpp"

namespace onebit {

// Solution of the three-equation asymptotic system. sigma_ell = alpha/mu is
// the performance ratio; predicted correlation is 1/sqrt(1+sigma_ell^2).
struct SaddleSolution {
  double mu = 0.0;
  double alpha = 0.0;
  double lambda = 0.0;
  double sigma_ell = 0.0;
  double delta = 0.0;
  double r = 0.0;
  std::array<double, 3> residuals{0.0, 0.0, 0.0};
  double residual_norm = 0.0;
  int iterations = 0;
  bool multi_start_mismatch = false;
};

enum class SolveStatus { Converged, Diverged, Unbounded };

// Thrown by the solvers on non-convergence. Carries the iterate trajectory
// (mu, alpha, lambda, residual_norm per iteration) for diagnosis.
class SolveError : public std::runtime_error {
 public:
  SolveError(SolveStatus status, const std::string& what,
             std::vector<std::array<double, 4>> trajectory = {})
      : std::runtime_error(what),
        status(status),
        trajectory(std::move(trajectory)) {}

  SolveStatus status;
  std::vector<std::array<double, 4>> trajectory;
};

// Which form of the third equation drives the lambda update. Envelope uses
// the explicit update from the envelope-derivative equation; Curvature
// root-solves the integrated-by-parts form
//   1 = lambda * delta * E[l''(prox)/(1 + lambda l''(prox))]
// (requires a C2 loss).
enum class LambdaUpdate { Envelope, Curvature };

struct SolverConfig {
  double damping = 0.5;
  double tol = 1e-8;           // on the max-abs residual
  int max_iter = 500;
  double blowup = 1e6;         // |alpha| or lambda beyond this ...
  double collapse = 1e-12;     // ... or below this ...
  int divergence_patience = 10;  // ... for this many consecutive iterations
  LambdaUpdate lambda_update = LambdaUpdate::Envelope;
  bool multi_start = false;    // diagnostic re-solve from perturbed starts
};

// Envelope x-derivative M'(x; lambda) = (x - prox(x; lambda)) / lambda.
double envelope_dx(const Loss& loss, double x, double lambda);

// Residuals of the (regularized) system at a point; all three vanish at a
// true solution, and r = 0 recovers the unregularized system.
//   R1 = E[Y S M'(aG + mSY; l)] + 2 r m
//   R2 = l^2 d E[M'^2] - a^2
//   R3 = l d E[G M'] - a (1 - 2 r l d)
std::array<double, 3> system_residuals(const SaddleSolution& sol,
                                       const Loss& loss,
                                       const Channel& channel,
                                       const ExpectationEngine& engine);

// Damped fixed-point iteration on (mu, alpha, lambda). Throws SolveError on
// divergence (expected for delta below the separability threshold) or when
// iterates blow up / collapse.
SaddleSolution solve_fixed_point(const Loss& loss, const Channel& channel,
                                 double delta, double r,
                                 const ExpectationEngine& engine,
                                 const SolverConfig& cfg = {});

struct AoConfig {
  double gamma_lo = 1e-6;
  double gamma_hi = 1e6;
  double inner_xtol = 1e-10;   // on log(gamma)
  double nm_step = 0.3;
  double nm_ftol = 1e-12;
  double nm_xtol = 1e-8;
  int nm_max_iter = 2000;
};

// Independent oracle: solves the deterministic four-variable saddle
//   min_{alpha>=0, mu, tau>0} max_{gamma>=0}
//     gamma tau/2 - alpha gamma/sqrt(delta) + r mu^2 + r alpha^2
//       + E[ M(alpha G + mu S Y; tau/gamma) ]
// by nested numerical optimization and maps (tau, gamma) -> lambda.
SaddleSolution solve_ao_saddle(const Loss& loss, const Channel& channel,
                               double delta, double r,
                               const ExpectationEngine& engine,
                               const AoConfig& cfg = {});

struct Correlation {
  double value = 0.0;
  bool degenerate = false;  // mu == 0: information-free channel
};

Correlation predicted_correlation(const SaddleSolution& sol);

// Closed-form least-squares solution:
//   mu = (1-2e) sqrt(2/pi),
//   alpha^2 = (1 - (1-2e)^2 (2/pi)) / (delta-1),
//   lambda = 1/(2(delta-1)).
SaddleSolution ls_closed_form(double delta, double epsilon);

}  // namespace onebit
