#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace onebit {

enum class LossKind { LeastSquares, LeastAbsDev, Hinge, Logistic, Exponential, Custom };
enum class Smoothness { Nonsmooth, C1, C2 };

// Scalar convex loss with value / derivative / prox access. Immutable after
// construction; all evaluation methods are pure, so instances can be shared
// freely across threads.
class Loss {
 public:
  using ScalarFn = std::function<double(double)>;
  using ProxFn = std::function<double(double, double)>;  // (x, lambda)

  static Loss least_squares();   // (t-1)^2
  static Loss least_abs_dev();   // |t-1|
  static Loss hinge();           // max(1-t, 0)
  static Loss logistic();        // log(1+exp(-t))
  static Loss exponential();     // exp(-t)

  // Custom loss. `prox_fn` may be null, in which case the generic numeric
  // prox is used (requires smoothness >= C1).
  static Loss custom(std::string name, ScalarFn value, Smoothness smoothness,
                     ScalarFn d1 = nullptr, ScalarFn d2 = nullptr,
                     ProxFn prox_fn = nullptr);

  LossKind kind() const { return kind_; }
  Smoothness smoothness() const { return smoothness_; }
  const std::string& name() const { return name_; }

  double value(double t) const { return value_(t); }
  bool has_derivative() const { return static_cast<bool>(d1_); }
  bool has_second_derivative() const { return static_cast<bool>(d2_); }

  // Throw CapabilityError when the loss lacks the requested derivative.
  double derivative(double t) const;
  double second_derivative(double t) const;

  bool has_closed_form_prox() const { return static_cast<bool>(prox_fn_); }
  const ProxFn& prox_fn() const { return prox_fn_; }

 private:
  Loss(LossKind kind, std::string name, Smoothness smoothness, ScalarFn value,
       ScalarFn d1, ScalarFn d2, ProxFn prox_fn)
      : kind_(kind),
        name_(std::move(name)),
        smoothness_(smoothness),
        value_(std::move(value)),
        d1_(std::move(d1)),
        d2_(std::move(d2)),
        prox_fn_(std::move(prox_fn)) {}

  LossKind kind_;
  std::string name_;
  Smoothness smoothness_;
  ScalarFn value_;
  ScalarFn d1_;
  ScalarFn d2_;
  ProxFn prox_fn_;
};

// Evaluation of the Moreau envelope at (x, lambda). env_dx and env_dlambda
// come from the prox point, never from finite differences:
//   env_dx      = (x - prox_point) / lambda
//   env_dlambda = -(x - prox_point)^2 / (2 lambda^2) = -env_dx^2 / 2
struct EnvelopeEval {
  double x = 0.0;
  double lambda = 0.0;
  double prox_point = 0.0;
  double env_value = 0.0;
  double env_dx = 0.0;
  double env_dlambda = 0.0;
};

double soft_threshold(double x, double threshold);

// argmin_v (x-v)^2/(2 lambda) + loss(v); unique by strong convexity.
// lambda <= 0 -> std::domain_error.
double prox(const Loss& loss, double x, double lambda);

// Generic numeric prox path (safeguarded Newton on v + lambda*loss'(v) = x
// with bisection fallback), exposed so the closed forms can be audited
// against it.
double prox_numeric(const Loss& loss, double x, double lambda);

EnvelopeEval moreau_env(const Loss& loss, double x, double lambda);

// (loss'(t), loss''(t) when available).
std::pair<double, std::optional<double>> loss_derivatives(const Loss& loss,
                                                          double t);

// Resolve a config/CLI name: ls | lad | hinge | logistic | exp, plus the
// parameterized builtin scaled_ls:<c> for c*(t-1)^2. Unknown names throw
// std::invalid_argument.
Loss loss_from_name(std::string_view spec);

}  // namespace onebit
