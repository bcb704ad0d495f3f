#include "matroidwb/search.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace matroidwb {

FloatPoly::FloatPoly(const BoundedPoly& p) : n_(p.num_vars()) {
  start_.push_back(0);
  for (const auto& [mono, c] : p.terms()) {
    coeff_.push_back(c.get_d());
    for (int v = 1; v <= n_; ++v) {
      for (int k = 0; k < mono.exponent(v); ++k) vars_.push_back(v - 1);
    }
    start_.push_back(static_cast<int>(vars_.size()));
  }
}

double FloatPoly::value(const double* x) const {
  double total = 0;
  for (std::size_t t = 0; t < coeff_.size(); ++t) {
    double term = coeff_[t];
    for (int k = start_[t]; k < start_[t + 1]; ++k) term *= x[vars_[k]];
    total += term;
  }
  return total;
}

double FloatPoly::value_and_gradient(const double* x, double* grad) const {
  std::fill(grad, grad + n_, 0.0);
  double total = 0;
  double prefix[64];
  for (std::size_t t = 0; t < coeff_.size(); ++t) {
    const int b = start_[t], e = start_[t + 1];
    const int d = e - b;
    prefix[0] = 1.0;
    for (int k = 0; k < d; ++k) prefix[k + 1] = prefix[k] * x[vars_[b + k]];
    total += coeff_[t] * prefix[d];
    double suffix = coeff_[t];
    for (int k = d - 1; k >= 0; --k) {
      grad[vars_[b + k]] += prefix[k] * suffix;
      suffix *= x[vars_[b + k]];
    }
  }
  return total;
}

namespace {

class Objective {
 public:
  Objective(const BoundedPoly& p, Domain domain)
      : poly_(p), domain_(domain), active_(elements_of(p.active_variables())) {
    const int deg = std::max(0, p.total_degree());
    half_degree_ = (deg + 1) / 2;
    full_.assign(p.num_vars(), 1.0);
    grad_full_.assign(p.num_vars(), 0.0);
  }

  int dim() const { return static_cast<int>(active_.size()); }

  // Maps search coordinates to the full variable vector.
  const std::vector<double>& point(const std::vector<double>& z) {
    for (int k = 0; k < dim(); ++k) {
      full_[active_[k] - 1] = domain_ == Domain::kPositiveOrthant ? std::exp(std::clamp(z[k], -30.0, 30.0)) : z[k];
    }
    return full_;
  }

  double value(const std::vector<double>& z, std::vector<double>* grad) {
    const auto& x = point(z);
    double norm2 = 1.0;
    for (int v : active_) norm2 += x[v - 1] * x[v - 1];
    const double weight = std::pow(norm2, half_degree_);
    double p;
    if (grad) {
      p = poly_.value_and_gradient(x.data(), grad_full_.data());
    } else {
      p = poly_.value(x.data());
    }
    const double g = p / weight;
    if (grad) {
      grad->assign(dim(), 0.0);
      for (int k = 0; k < dim(); ++k) {
        const double xv = x[active_[k] - 1];
        double dg = grad_full_[active_[k] - 1] / weight - g * 2.0 * half_degree_ * xv / norm2;
        if (domain_ == Domain::kPositiveOrthant) dg *= xv;
        (*grad)[k] = dg;
      }
    }
    return g;
  }

 private:
  FloatPoly poly_;
  Domain domain_;
  std::vector<int> active_;
  int half_degree_ = 0;
  std::vector<double> full_, grad_full_;
};

std::optional<Witness> verify_candidate(const BoundedPoly& p, const std::vector<double>& x, Domain domain) {
  double scale = 0;
  for (double v : x) scale = std::max(scale, std::fabs(v));
  if (scale == 0) return std::nullopt;
  const long denominators[] = {1, 2, 3, 4, 6, 10, 12, 100, 1000, 10000, 1000000};
  for (int variant = 0; variant < 2; ++variant) {
    const double factor = variant == 0 ? 1.0 : 1.0 / scale;
    for (long den : denominators) {
      std::vector<Rational> q;
      q.reserve(x.size());
      bool ok = true;
      for (double v : x) {
        Rational r = rationalize(v * factor, den);
        if (domain == Domain::kPositiveOrthant && r <= 0) {
          ok = false;
          break;
        }
        q.push_back(std::move(r));
      }
      if (!ok) continue;
      Rational value = evaluate(p, q);
      if (value < 0) return Witness{std::move(q), std::move(value)};
    }
  }
  std::vector<Rational> q;
  for (double v : x) q.push_back(exact_rational(v));
  Rational value = evaluate(p, q);
  if (value < 0) return Witness{std::move(q), std::move(value)};
  return std::nullopt;
}

}  // namespace

SearchResult counterexample_search(const BoundedPoly& p, const SearchOptions& options) {
  SearchResult result;
  const int n = p.num_vars();
  {
    // The all-ones point first.
    std::vector<Rational> ones(n, Rational(1));
    Rational v = evaluate(p, ones);
    result.evaluations = 1;
    result.best_value = v.get_d();
    if (v < 0) {
      result.witness = Witness{std::move(ones), std::move(v)};
      return result;
    }
  }
  if (p.is_zero() || p.active_variables() == 0) return result;

  Objective obj(p, options.domain);
  const int dim = obj.dim();
  std::mt19937_64 rng(options.seed);
  std::normal_distribution<double> normal(0.0, options.domain == Domain::kPositiveOrthant ? 1.5 : 1.0);
  std::vector<double> z(dim), grad(dim), trial(dim), trial_grad(dim);
  bool first_start = true;
  double last_checked = 0;

  while (result.evaluations < options.budget) {
    for (int k = 0; k < dim; ++k) {
      z[k] = first_start ? (options.domain == Domain::kPositiveOrthant ? 0.0 : 1.0) : normal(rng);
    }
    first_start = false;
    double g = obj.value(z, &grad);
    ++result.evaluations;
    double step = 1.0;
    last_checked = 0;
    for (int iter = 0; iter < 400 && result.evaluations < options.budget; ++iter) {
      double gnorm2 = 0;
      for (double d : grad) gnorm2 += d * d;
      if (gnorm2 < 1e-24) break;
      bool accepted = false;
      step = std::min(step * 2.0, 1e3);
      while (result.evaluations < options.budget) {
        for (int k = 0; k < dim; ++k) trial[k] = z[k] - step * grad[k];
        const double gt = obj.value(trial, &trial_grad);
        ++result.evaluations;
        if (gt < g - 1e-4 * step * gnorm2) {
          z.swap(trial);
          grad.swap(trial_grad);
          g = gt;
          accepted = true;
          break;
        }
        step *= 0.5;
        if (step < 1e-14) break;
      }
      result.best_value = std::min(result.best_value, g);
      // Re-verify when the objective has dropped noticeably since the last check.
      if (g < -options.tolerance && g < 2 * last_checked - options.tolerance) {
        last_checked = g;
        if (auto w = verify_candidate(p, obj.point(z), options.domain)) {
          result.witness = std::move(w);
          return result;
        }
      }
      if (!accepted) break;
    }
    result.best_value = std::min(result.best_value, g);
    if (g < -options.tolerance) {
      if (auto w = verify_candidate(p, obj.point(z), options.domain)) {
        result.witness = std::move(w);
        return result;
      }
    }
  }
  return result;
}

}  // namespace matroidwb
