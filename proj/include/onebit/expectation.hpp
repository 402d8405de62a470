#pragma once

#include <array>
#include <cstdint>
#include <cmath>
#include <string>
#include <vector>

#include "onebit/channel.hpp"
#include "onebit/errors.hpp"
#include "onebit/numerics.hpp"

namespace onebit {

enum class EngineMethod { GaussHermite, MonteCarlo };

struct ExpectStats {
  double mean = 0.0;
  double std_error = 0.0;  // 0 for deterministic quadrature
};

// Evaluates E[h(G, S, Y)] with G, S iid standard normal and Y | S given by a
// Channel. Y is always averaged analytically; only (G, S) are integrated
// numerically.
//
// GaussHermite: Gauss-Hermite nodes in G crossed with a Gauss-Legendre rule
// in |S| applied to each half-line, so the sign(S) kink sits exactly on the
// rule boundary. `nodes` counts the G nodes; |S| gets nodes/2 points per
// half-line, keeping the point count of a nodes x nodes tensor grid.
//
// MonteCarlo: common random numbers, drawn once at construction and reused
// across every call, so repeated evaluations inside a fixed-point iteration
// see the same sample.
//
// All evaluation is pure; reductions are pairwise and deterministic.
class ExpectationEngine {
 public:
  static ExpectationEngine gauss_hermite(int nodes = 128);
  static ExpectationEngine monte_carlo(std::int64_t samples = 100000,
                                       std::uint64_t seed = 0);

  EngineMethod method() const { return method_; }
  int nodes() const { return nodes_; }
  std::int64_t samples() const { return samples_; }
  std::uint64_t seed() const { return seed_; }

  // e.g. "gh:128" or "mc:100000:42"
  std::string fingerprint() const;

  template <class H>  // H(g, s, y) -> double
  double expect(const Channel& channel, H&& h) const {
    return expect_stats(channel, h).mean;
  }

  template <class H>
  ExpectStats expect_stats(const Channel& channel, H&& h) const {
    auto averaged = [&](double g, double s) {
      const double pp = channel.prob_plus(s);
      const double v = pp * h(g, s, 1.0) + (1.0 - pp) * h(g, s, -1.0);
      if (std::isnan(v)) {
        throw NumericError("integrand returned NaN at node (g=" +
                           std::to_string(g) + ", s=" + std::to_string(s) +
                           ")");
      }
      return v;
    };
    if (method_ == EngineMethod::GaussHermite) {
      std::vector<double> rows(g_nodes_.size());
      std::vector<double> buf(2 * s_nodes_.size());
      for (std::size_t i = 0; i < g_nodes_.size(); ++i) {
        const double g = g_nodes_[i];
        for (std::size_t j = 0; j < s_nodes_.size(); ++j) {
          const double s = s_nodes_[j];
          const double w = s_weights_[j];
          buf[2 * j] = w * averaged(g, s);
          buf[2 * j + 1] = w * averaged(g, -s);
        }
        rows[i] = g_weights_[i] * pairwise_sum(buf);
      }
      return {pairwise_sum(rows), 0.0};
    }
    // Monte Carlo
    const std::size_t n = mc_g_.size();
    std::vector<double> contrib(n);
    for (std::size_t k = 0; k < n; ++k) {
      contrib[k] = averaged(mc_g_[k], mc_s_[k]);
    }
    const double mean = pairwise_sum(contrib) / static_cast<double>(n);
    for (double& c : contrib) {
      const double d = c - mean;
      c = d * d;
    }
    const double var =
        n > 1 ? pairwise_sum(contrib) / static_cast<double>(n - 1) : 0.0;
    return {mean, std::sqrt(var / static_cast<double>(n))};
  }

  // One pass over the nodes for three integrands sharing the same (usually
  // expensive) inner evaluation.
  template <class H3>  // H3(g, s, y) -> std::array<double, 3>
  std::array<double, 3> expect3(const Channel& channel, H3&& h) const {
    std::array<std::vector<double>, 3> acc;
    auto averaged = [&](double g, double s) {
      const double pp = channel.prob_plus(s);
      const auto vp = h(g, s, 1.0);
      const auto vm = h(g, s, -1.0);
      std::array<double, 3> v;
      for (int c = 0; c < 3; ++c) v[c] = pp * vp[c] + (1.0 - pp) * vm[c];
      return v;
    };
    if (method_ == EngineMethod::GaussHermite) {
      std::array<std::vector<double>, 3> rows;
      std::array<std::vector<double>, 3> buf;
      for (int c = 0; c < 3; ++c) {
        rows[c].resize(g_nodes_.size());
        buf[c].resize(2 * s_nodes_.size());
      }
      for (std::size_t i = 0; i < g_nodes_.size(); ++i) {
        const double g = g_nodes_[i];
        for (std::size_t j = 0; j < s_nodes_.size(); ++j) {
          const double s = s_nodes_[j];
          const double w = s_weights_[j];
          const auto a = averaged(g, s);
          const auto b = averaged(g, -s);
          for (int c = 0; c < 3; ++c) {
            buf[c][2 * j] = w * a[c];
            buf[c][2 * j + 1] = w * b[c];
          }
        }
        for (int c = 0; c < 3; ++c) {
          rows[c][i] = g_weights_[i] * pairwise_sum(buf[c]);
        }
      }
      return {pairwise_sum(rows[0]), pairwise_sum(rows[1]),
              pairwise_sum(rows[2])};
    }
    const std::size_t n = mc_g_.size();
    for (int c = 0; c < 3; ++c) acc[c].resize(n);
    for (std::size_t k = 0; k < n; ++k) {
      const auto v = averaged(mc_g_[k], mc_s_[k]);
      for (int c = 0; c < 3; ++c) acc[c][k] = v[c];
    }
    const double inv = 1.0 / static_cast<double>(n);
    return {pairwise_sum(acc[0]) * inv, pairwise_sum(acc[1]) * inv,
            pairwise_sum(acc[2]) * inv};
  }

 private:
  ExpectationEngine() = default;

  EngineMethod method_ = EngineMethod::GaussHermite;
  int nodes_ = 0;
  std::int64_t samples_ = 0;
  std::uint64_t seed_ = 0;

  std::vector<double> g_nodes_, g_weights_;  // Gauss-Hermite (probabilist scaling)
  std::vector<double> s_nodes_, s_weights_;  // half-line rule, weight includes phi
  std::vector<double> mc_g_, mc_s_;          // cached draws
};

}  // namespace onebit
