#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

namespace onebit {

// Label-generation model for the signed measurements. Either a binary
// symmetric channel with flip probability epsilon, or a general link
// f : R -> [0,1] giving P(Y = +1 | S = s) = f(s). The BSC case equals the
// link f(t) = 1/2 + (1-2*eps)/2 * sign(t).
class Channel {
 public:
  enum class Mode { Bsc, Link };

  static Channel bsc(double epsilon) {
    if (!(epsilon >= 0.0 && epsilon <= 0.5)) {
      throw std::domain_error("flip probability must lie in [0, 0.5]");
    }
    Channel ch;
    ch.mode_ = Mode::Bsc;
    ch.epsilon_ = epsilon;
    ch.name_ = "bsc";
    return ch;
  }

  static Channel link(std::function<double(double)> f,
                      std::string name = "link") {
    if (!f) throw std::invalid_argument("link channel requires a function");
    Channel ch;
    ch.mode_ = Mode::Link;
    ch.link_ = std::move(f);
    ch.name_ = std::move(name);
    return ch;
  }

  Mode mode() const { return mode_; }
  bool is_bsc() const { return mode_ == Mode::Bsc; }

  double epsilon() const {
    if (mode_ != Mode::Bsc) {
      throw std::logic_error("epsilon is only defined for BSC channels");
    }
    return epsilon_;
  }

  // P(Y = +1 | S = s)
  double prob_plus(double s) const {
    if (mode_ == Mode::Bsc) {
      if (s > 0.0) return 1.0 - epsilon_;
      if (s < 0.0) return epsilon_;
      return 0.5;
    }
    return link_(s);
  }

  const std::string& name() const { return name_; }

 private:
  Channel() = default;

  Mode mode_ = Mode::Bsc;
  double epsilon_ = 0.0;
  std::function<double(double)> link_;
  std::string name_;
};

}  // namespace onebit
