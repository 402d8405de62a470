#include "onebit/expectation.hpp"

#include <Eigen/Dense>
#include <random>
#include <stdexcept>

namespace onebit {

namespace {

// Golub-Welsch: nodes/weights from the symmetric tridiagonal Jacobi matrix.
void golub_welsch(const Eigen::VectorXd& diag, const Eigen::VectorXd& subdiag,
                  double weight_mass, std::vector<double>& nodes,
                  std::vector<double>& weights) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, subdiag,
                            Eigen::ComputeEigenvectors);
  if (es.info() != Eigen::Success) {
    throw NumericError("quadrature eigen-decomposition failed");
  }
  const int n = static_cast<int>(diag.size());
  nodes.resize(n);
  weights.resize(n);
  for (int i = 0; i < n; ++i) {
    nodes[i] = es.eigenvalues()(i);
    const double v0 = es.eigenvectors()(0, i);
    weights[i] = weight_mass * v0 * v0;
  }
}

}  // namespace

ExpectationEngine ExpectationEngine::gauss_hermite(int nodes) {
  if (nodes < 2 || nodes % 2 != 0) {
    throw std::invalid_argument("gauss_hermite requires an even node count >= 2");
  }
  ExpectationEngine eng;
  eng.method_ = EngineMethod::GaussHermite;
  eng.nodes_ = nodes;

  // G: physicists' Hermite Jacobi matrix, b_k = sqrt(k/2); rescale nodes by
  // sqrt(2) to standard normal, weights normalized to total mass 1.
  {
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(nodes);
    Eigen::VectorXd sub(nodes - 1);
    for (int k = 1; k < nodes; ++k) sub(k - 1) = std::sqrt(0.5 * k);
    golub_welsch(diag, sub, 1.0, eng.g_nodes_, eng.g_weights_);
    for (double& x : eng.g_nodes_) x *= std::sqrt(2.0);
  }

  // |S|: Gauss-Legendre on (0, s_max], with the half-normal density folded
  // into the weights. Each node is evaluated at +-s by the callers.
  {
    const int m = nodes / 2;
    const double s_max = 8.5;
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(m);
    Eigen::VectorXd sub(m - 1);
    for (int k = 1; k < m; ++k) {
      sub(k - 1) = k / std::sqrt(4.0 * k * k - 1.0);
    }
    golub_welsch(diag, sub, 2.0, eng.s_nodes_, eng.s_weights_);
    for (int j = 0; j < m; ++j) {
      const double s = 0.5 * s_max * (eng.s_nodes_[j] + 1.0);
      eng.s_weights_[j] *= 0.5 * s_max * norm_pdf(s);
      eng.s_nodes_[j] = s;
    }
  }
  return eng;
}

ExpectationEngine ExpectationEngine::monte_carlo(std::int64_t samples,
                                                 std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("monte_carlo requires samples >= 1");
  ExpectationEngine eng;
  eng.method_ = EngineMethod::MonteCarlo;
  eng.samples_ = samples;
  eng.seed_ = seed;
  std::mt19937_64 rng(splitmix64(seed));
  std::normal_distribution<double> normal(0.0, 1.0);
  eng.mc_g_.resize(static_cast<std::size_t>(samples));
  eng.mc_s_.resize(static_cast<std::size_t>(samples));
  for (std::int64_t k = 0; k < samples; ++k) {
    eng.mc_g_[static_cast<std::size_t>(k)] = normal(rng);
    eng.mc_s_[static_cast<std::size_t>(k)] = normal(rng);
  }
  return eng;
}

std::string ExpectationEngine::fingerprint() const {
  if (method_ == EngineMethod::GaussHermite) {
    return "gh:" + std::to_string(nodes_);
  }
  return "mc:" + std::to_string(samples_) + ":" + std::to_string(seed_);
}

}  // namespace onebit
