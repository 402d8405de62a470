#include "onebit/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace onebit {

double norm_pdf(double x) {
  static const double inv_sqrt_2pi = 1.0 / std::sqrt(2.0 * kPi);
  return inv_sqrt_2pi * std::exp(-0.5 * x * x);
}

double norm_cdf(double x) {
  // 0.5*erfc(-x/sqrt(2)) keeps full relative accuracy in the lower tail.
  static const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  return 0.5 * std::erfc(-x * inv_sqrt2);
}

double pairwise_sum(std::span<const double> v) {
  const std::size_t n = v.size();
  if (n <= 8) {
    double s = 0.0;
    for (double x : v) s += x;
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  return splitmix64(base + stream * 0x9E3779B97F4A7C15ULL);
}

RootResult brent_root(const std::function<double(double)>& f, double a,
                      double b, double xtol, int max_iter) {
  double fa = f(a);
  double fb = f(b);
  RootResult out;
  if (fa == 0.0) return {a, 0.0, 0, true};
  if (fb == 0.0) return {b, 0.0, 0, true};
  if ((fa > 0.0) == (fb > 0.0)) return {a, fa, 0, false};

  double c = a, fc = fa;
  double d = b - a, e = d;
  for (int it = 0; it < max_iter; ++it) {
    if (std::abs(fc) < std::abs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    const double tol1 =
        2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) +
        0.5 * xtol;
    const double xm = 0.5 * (c - b);
    if (std::abs(xm) <= tol1 || fb == 0.0) return {b, fb, it, true};
    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      // inverse quadratic / secant step
      const double s = fb / fa;
      double p, q;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        const double qq = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
        q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::abs(p);
      if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q),
                             std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    b += (std::abs(d) > tol1) ? d : (xm > 0 ? tol1 : -tol1);
    fb = f(b);
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = b - a;
      e = d;
    }
  }
  return {b, fb, max_iter, false};
}

bool expand_bracket(const std::function<double(double)>& f, double& lo,
                    double& hi, double& flo, double& fhi, double max_width,
                    int max_steps) {
  flo = f(lo);
  fhi = f(hi);
  for (int it = 0; it < max_steps; ++it) {
    if (std::isnan(flo) || std::isnan(fhi)) return false;
    if ((flo > 0.0) != (fhi > 0.0) || flo == 0.0 || fhi == 0.0) return true;
    const double width = hi - lo;
    if (width > max_width) return false;
    // move the endpoint whose value is closer to zero outward
    if (std::abs(flo) < std::abs(fhi)) {
      lo -= width;
      flo = f(lo);
    } else {
      hi += width;
      fhi = f(hi);
    }
  }
  return false;
}

MinResult brent_minimize(const std::function<double(double)>& f, double a,
                         double b, double xtol, int max_iter) {
  const double golden = 0.3819660112501051;
  double x = a + golden * (b - a);
  double w = x, v = x;
  double fx = f(x), fw = fx, fv = fx;
  double d = 0.0, e = 0.0;
  int evals = 1;
  for (int it = 0; it < max_iter; ++it) {
    const double m = 0.5 * (a + b);
    const double tol1 = xtol * std::abs(x) + 1e-14;
    const double tol2 = 2.0 * tol1;
    if (std::abs(x - m) <= tol2 - 0.5 * (b - a)) break;
    double p = 0.0, q = 0.0, r = 0.0;
    bool parabolic = false;
    if (std::abs(e) > tol1) {
      r = (x - w) * (fx - fv);
      q = (x - v) * (fx - fw);
      p = (x - v) * q - (x - w) * r;
      q = 2.0 * (q - r);
      if (q > 0.0) p = -p;
      q = std::abs(q);
      if (std::abs(p) < std::abs(0.5 * q * e) && p > q * (a - x) &&
          p < q * (b - x)) {
        e = d;
        d = p / q;
        parabolic = true;
      }
    }
    if (!parabolic) {
      e = (x < m) ? b - x : a - x;
      d = golden * e;
    }
    const double u =
        x + ((std::abs(d) >= tol1) ? d : (d > 0 ? tol1 : -tol1));
    const double fu = f(u);
    ++evals;
    if (fu <= fx) {
      if (u < x) b = x; else a = x;
      v = w; fv = fw;
      w = x; fw = fx;
      x = u; fx = fu;
    } else {
      if (u < x) a = u; else b = u;
      if (fu <= fw || w == x) {
        v = w; fv = fw;
        w = u; fw = fu;
      } else if (fu <= fv || v == x || v == w) {
        v = u; fv = fu;
      }
    }
  }
  return {x, fx, evals};
}

MinResult golden_section(const std::function<double(double)>& f, double a,
                         double b, double xtol, int max_iter) {
  const double invphi = 0.6180339887498949;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c), fd = f(d);
  int evals = 2;
  for (int it = 0; it < max_iter && (b - a) > xtol; ++it) {
    if (fc < fd) {
      b = d;
      d = c; fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d; fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
    ++evals;
  }
  if (fc < fd) return {c, fc, evals};
  return {d, fd, evals};
}

namespace {

double simpson_rec(const std::function<double(double)>& f, double a, double b,
                   double fa, double fm, double fb, double whole,
                   double abs_tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * abs_tol) {
    return left + right + delta / 15.0;
  }
  return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * abs_tol, depth - 1) +
         simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * abs_tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double abs_tol, int max_depth) {
  if (a >= b) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_rec(f, a, b, fa, fm, fb, whole, abs_tol, max_depth);
}

NelderMeadResult nelder_mead(
    const std::function<double(const std::vector<double>&)>& f,
    std::vector<double> start, double step, double ftol, double xtol,
    int max_iter) {
  const std::size_t n = start.size();
  std::vector<std::vector<double>> simplex(n + 1, start);
  std::vector<double> fvals(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    simplex[i + 1][i] += (start[i] != 0.0) ? step * std::abs(start[i]) : step;
  }
  int evals = 0;
  for (auto i = 0u; i <= n; ++i) {
    fvals[i] = f(simplex[i]);
    ++evals;
  }

  auto order = [&] {
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t j = i + 1; j <= n; ++j) {
        if (fvals[j] < fvals[i]) {
          std::swap(fvals[i], fvals[j]);
          std::swap(simplex[i], simplex[j]);
        }
      }
    }
  };

  NelderMeadResult out;
  for (int it = 0; it < max_iter; ++it) {
    order();
    // convergence: function spread and simplex size
    double fspread = std::abs(fvals[n] - fvals[0]);
    double xspread = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      xspread = std::max(xspread, std::abs(simplex[n][i] - simplex[0][i]));
    }
    if (fspread < ftol * (1.0 + std::abs(fvals[0])) && xspread < xtol) {
      out.converged = true;
      break;
    }

    std::vector<double> centroid(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) centroid[j] += simplex[i][j];
    }
    for (double& c : centroid) c /= static_cast<double>(n);

    auto affine = [&](double t) {
      std::vector<double> p(n);
      for (std::size_t j = 0; j < n; ++j) {
        p[j] = centroid[j] + t * (simplex[n][j] - centroid[j]);
      }
      return p;
    };

    auto xr = affine(-1.0);
    double fr = f(xr);
    ++evals;
    if (fr < fvals[0]) {
      auto xe = affine(-2.0);
      double fe = f(xe);
      ++evals;
      if (fe < fr) {
        simplex[n] = std::move(xe);
        fvals[n] = fe;
      } else {
        simplex[n] = std::move(xr);
        fvals[n] = fr;
      }
    } else if (fr < fvals[n - 1]) {
      simplex[n] = std::move(xr);
      fvals[n] = fr;
    } else {
      auto xc = affine(fr < fvals[n] ? -0.5 : 0.5);
      double fc = f(xc);
      ++evals;
      if (fc < std::min(fr, fvals[n])) {
        simplex[n] = std::move(xc);
        fvals[n] = fc;
      } else {
        // shrink toward best
        for (std::size_t i = 1; i <= n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            simplex[i][j] = simplex[0][j] + 0.5 * (simplex[i][j] - simplex[0][j]);
          }
          fvals[i] = f(simplex[i]);
          ++evals;
        }
      }
    }
  }
  order();
  out.x = simplex[0];
  out.fx = fvals[0];
  out.evaluations = evals;
  return out;
}

}  // namespace onebit
