#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace onebit {

inline constexpr double kPi = 3.14159265358979323846;

// Standard normal pdf.
double norm_pdf(double x);

// Standard normal cdf, accurate in both tails (erfc-based).
double norm_cdf(double x);

// Deterministic pairwise (tree) summation. Independent of chunking used by
// callers, so reductions are reproducible bit-for-bit.
double pairwise_sum(std::span<const double> values);

// splitmix64 step; used to derive independent per-stream seeds from one
// 64-bit master seed. derive_seed(base, k) is stable across platforms.
std::uint64_t splitmix64(std::uint64_t state);
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

struct RootResult {
  double x = 0.0;
  double fx = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Brent root finder on [a, b]; requires f(a) and f(b) of opposite sign.
RootResult brent_root(const std::function<double(double)>& f, double a,
                      double b, double xtol = 1e-12, int max_iter = 200);

// Expands [lo, hi] geometrically around the start interval until f changes
// sign or a bound on the bracket width is hit. Returns false on failure.
bool expand_bracket(const std::function<double(double)>& f, double& lo,
                    double& hi, double& flo, double& fhi,
                    double max_width = 1e8, int max_steps = 200);

struct MinResult {
  double x = 0.0;
  double fx = 0.0;
  int evaluations = 0;
};

// Brent 1-D minimization (golden section + parabolic steps) on [a, b].
MinResult brent_minimize(const std::function<double(double)>& f, double a,
                         double b, double xtol = 1e-8, int max_iter = 200);

// Plain golden-section minimization on [a, b] to absolute x-tolerance.
MinResult golden_section(const std::function<double(double)>& f, double a,
                         double b, double xtol = 1e-6, int max_iter = 400);

// Adaptive Simpson on [a, b] to absolute tolerance.
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double abs_tol = 1e-12, int max_depth = 48);

struct NelderMeadResult {
  std::vector<double> x;
  double fx = 0.0;
  int evaluations = 0;
  bool converged = false;
};

// Nelder-Mead simplex minimization for small dimensions.
NelderMeadResult nelder_mead(
    const std::function<double(const std::vector<double>&)>& f,
    std::vector<double> start, double step = 0.25, double ftol = 1e-12,
    double xtol = 1e-9, int max_iter = 2000);

}  // namespace onebit
