#include "onebit/loss.hpp"

#include <cmath>
#include <charconv>
#include <stdexcept>

#include "onebit/errors.hpp"

namespace onebit {

namespace {

double exp_clamped(double t) {
  // keeps arithmetic finite for the extreme arguments that show up while
  // probing divergent solver regimes
  return std::exp(std::min(t, 700.0));
}

// 1/(1+e^t) evaluated without overflow on either side.
double neg_sigmoid(double t) {
  if (t >= 0.0) {
    const double e = std::exp(-t);
    return e / (1.0 + e);
  }
  return 1.0 / (1.0 + std::exp(t));
}

}  // namespace

Loss Loss::least_squares() {
  return Loss(
      LossKind::LeastSquares, "ls", Smoothness::C2,
      [](double t) { return (t - 1.0) * (t - 1.0); },
      [](double t) { return 2.0 * (t - 1.0); }, [](double) { return 2.0; },
      [](double x, double lam) { return (x + 2.0 * lam) / (1.0 + 2.0 * lam); });
}

Loss Loss::least_abs_dev() {
  return Loss(
      LossKind::LeastAbsDev, "lad", Smoothness::Nonsmooth,
      [](double t) { return std::abs(t - 1.0); }, nullptr, nullptr,
      [](double x, double lam) { return 1.0 + soft_threshold(x - 1.0, lam); });
}

Loss Loss::hinge() {
  return Loss(
      LossKind::Hinge, "hinge", Smoothness::Nonsmooth,
      [](double t) { return std::max(1.0 - t, 0.0); }, nullptr, nullptr,
      [](double x, double lam) {
        return 1.0 + soft_threshold(x + 0.5 * lam - 1.0, 0.5 * lam);
      });
}

Loss Loss::logistic() {
  return Loss(
      LossKind::Logistic, "logistic", Smoothness::C2,
      [](double t) {
        // log(1+e^{-t}) without overflow for t << 0
        return t >= 0.0 ? std::log1p(std::exp(-t))
                        : -t + std::log1p(std::exp(t));
      },
      [](double t) { return -neg_sigmoid(t); },
      [](double t) {
        const double s = neg_sigmoid(t);
        return s * (1.0 - s);
      },
      nullptr);
}

Loss Loss::exponential() {
  return Loss(
      LossKind::Exponential, "exp", Smoothness::C2,
      [](double t) { return exp_clamped(-t); },
      [](double t) { return -exp_clamped(-t); },
      [](double t) { return exp_clamped(-t); }, nullptr);
}

Loss Loss::custom(std::string name, ScalarFn value, Smoothness smoothness,
                  ScalarFn d1, ScalarFn d2, ProxFn prox_fn) {
  if (!value) throw std::invalid_argument("custom loss requires a value function");
  if (smoothness != Smoothness::Nonsmooth && !d1) {
    throw std::invalid_argument("smooth custom loss requires a derivative");
  }
  if (smoothness == Smoothness::C2 && !d2) {
    throw std::invalid_argument("C2 custom loss requires a second derivative");
  }
  return Loss(LossKind::Custom, std::move(name), smoothness, std::move(value),
              std::move(d1), std::move(d2), std::move(prox_fn));
}

double Loss::derivative(double t) const {
  if (!d1_) {
    throw CapabilityError("loss '" + name_ + "' has no derivative");
  }
  return d1_(t);
}

double Loss::second_derivative(double t) const {
  if (!d2_) {
    throw CapabilityError("loss '" + name_ + "' has no second derivative");
  }
  return d2_(t);
}

double soft_threshold(double x, double threshold) {
  if (x > threshold) return x - threshold;
  if (x < -threshold) return x + threshold;
  return 0.0;
}

double prox_numeric(const Loss& loss, double x, double lambda) {
  if (lambda <= 0.0) throw std::domain_error("prox requires lambda > 0");
  if (!loss.has_derivative()) {
    throw CapabilityError("numeric prox needs loss' (provide a prox for '" +
                          loss.name() + "')");
  }
  // optimality: f(v) = v + lambda*loss'(v) - x = 0, strictly increasing in v
  auto f = [&](double v) { return v + lambda * loss.derivative(v) - x; };

  double lo = x - 1.0, hi = x + 1.0;
  double flo, fhi;
  {
    // seed the bracket around the unconstrained start v = x
    flo = f(lo);
    fhi = f(hi);
    int steps = 0;
    double width = 2.0;
    while ((flo > 0.0) == (fhi > 0.0) && steps < 200) {
      if (std::abs(flo) < std::abs(fhi)) {
        lo -= width;
        flo = f(lo);
      } else {
        hi += width;
        fhi = f(hi);
      }
      width *= 2.0;
      if (width > 1e15) break;
      ++steps;
    }
    if ((flo > 0.0) == (fhi > 0.0)) {
      throw NumericError("prox bracketing failed for loss '" + loss.name() +
                         "' at x=" + std::to_string(x));
    }
  }
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (flo > 0.0) {
    std::swap(lo, hi);
    std::swap(flo, fhi);
  }
  // Newton when curvature is available, safeguarded by the bracket;
  // otherwise plain bisection. Bracket tolerance 1e-12, max 200 iterations.
  double v = 0.5 * (lo + hi);
  const bool newton = loss.has_second_derivative();
  for (int it = 0; it < 200; ++it) {
    const double fv = f(v);
    if (std::abs(fv) < 1e-14 * (1.0 + std::abs(x))) return v;
    if (fv < 0.0) lo = v; else hi = v;
    if (std::abs(hi - lo) < 1e-12) return 0.5 * (lo + hi);
    double vn = std::numeric_limits<double>::quiet_NaN();
    if (newton) {
      const double fp = 1.0 + lambda * loss.second_derivative(v);
      if (std::isfinite(fp) && fp > 0.0) vn = v - fv / fp;
    }
    const double a = std::min(lo, hi), b = std::max(lo, hi);
    if (!(vn > a && vn < b)) vn = 0.5 * (lo + hi);
    v = vn;
  }
  throw NumericError("prox did not converge for loss '" + loss.name() + "'");
}

double prox(const Loss& loss, double x, double lambda) {
  if (lambda <= 0.0) throw std::domain_error("prox requires lambda > 0");
  if (!std::isfinite(x)) throw std::domain_error("prox requires finite x");
  if (loss.has_closed_form_prox()) return loss.prox_fn()(x, lambda);
  return prox_numeric(loss, x, lambda);
}

EnvelopeEval moreau_env(const Loss& loss, double x, double lambda) {
  EnvelopeEval out;
  out.x = x;
  out.lambda = lambda;
  out.prox_point = prox(loss, x, lambda);
  const double diff = x - out.prox_point;
  out.env_value = diff * diff / (2.0 * lambda) + loss.value(out.prox_point);
  out.env_dx = diff / lambda;
  out.env_dlambda = -0.5 * out.env_dx * out.env_dx;
  return out;
}

std::pair<double, std::optional<double>> loss_derivatives(const Loss& loss,
                                                          double t) {
  std::optional<double> d2;
  if (loss.has_second_derivative()) d2 = loss.second_derivative(t);
  return {loss.derivative(t), d2};
}

Loss loss_from_name(std::string_view spec) {
  if (spec == "ls") return Loss::least_squares();
  if (spec == "lad") return Loss::least_abs_dev();
  if (spec == "hinge") return Loss::hinge();
  if (spec == "logistic") return Loss::logistic();
  if (spec == "exp") return Loss::exponential();
  if (spec.starts_with("scaled_ls:")) {
    const auto arg = spec.substr(10);
    double c = 0.0;
    auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), c);
    if (ec != std::errc() || ptr != arg.data() + arg.size() || c <= 0.0) {
      throw std::invalid_argument("bad scale in loss spec '" +
                                  std::string(spec) + "'");
    }
    return Loss::custom(
        std::string(spec), [c](double t) { return c * (t - 1.0) * (t - 1.0); },
        Smoothness::C2, [c](double t) { return 2.0 * c * (t - 1.0); },
        [c](double) { return 2.0 * c; },
        [c](double x, double lam) {
          return (x + 2.0 * c * lam) / (1.0 + 2.0 * c * lam);
        });
  }
  throw std::invalid_argument("unknown loss '" + std::string(spec) + "'");
}

}  // namespace onebit
