#include "matroidwb/sos.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>

#include "matroidwb/linalg.hpp"

namespace matroidwb {

namespace {

// Off-diagonal entries Q_ab (a < b) whose products m_a m_b share a monomial
// must sum to half its coefficient.
struct Group {
  Rational target;  // coefficient / 2
  std::vector<int> pairs;
};

struct Problem {
  std::vector<Monomial> basis;
  std::vector<Rational> diag;
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> group_of;  // per pair
  std::vector<Group> groups;
};

bool diagonally_dominant(const RationalMatrix& q) {
  for (std::size_t a = 0; a < q.size(); ++a) {
    Rational off = 0;
    for (std::size_t b = 0; b < q.size(); ++b) {
      if (a != b) off += abs(q[a][b]);
    }
    if (q[a][a] < off) return false;
  }
  return true;
}

RationalMatrix assemble(const Problem& prob, const std::vector<Rational>& y) {
  const std::size_t d = prob.basis.size();
  RationalMatrix q(d, std::vector<Rational>(d, Rational(0)));
  for (std::size_t a = 0; a < d; ++a) q[a][a] = prob.diag[a];
  for (std::size_t p = 0; p < prob.pairs.size(); ++p) {
    const auto [a, b] = prob.pairs[p];
    q[a][b] = y[p];
    q[b][a] = y[p];
  }
  return q;
}

// Rounds float off-diagonal values, restores the group sums exactly and checks PSD.
std::optional<RationalMatrix> round_and_check(const Problem& prob, const Eigen::VectorXd& y, const Rational& scale) {
  for (long den : {64L, 1024L, 100000L, 10000000L, 1000000000L}) {
    std::vector<Rational> yq(prob.pairs.size());
    for (std::size_t p = 0; p < prob.pairs.size(); ++p) yq[p] = rationalize(y[p], den) * scale;
    for (const auto& g : prob.groups) {
      Rational sum = 0;
      for (int p : g.pairs) sum += yq[p];
      const Rational fix = (g.target - sum) / static_cast<long>(g.pairs.size());
      if (fix != 0) {
        for (int p : g.pairs) yq[p] += fix;
      }
    }
    RationalMatrix q = assemble(prob, yq);
    if (is_psd_exact(q)) return q;
  }
  return std::nullopt;
}

// Barrier method for max s subject to Q(y) - sI PSD and the group equalities,
// over the scaled problem. Rounds after every outer step with s > 0.
std::optional<RationalMatrix> numeric_search(const Problem& prob, const Rational& scale, const SosOptions& options) {
  const int d = static_cast<int>(prob.basis.size());
  const int np = static_cast<int>(prob.pairs.size());
  const int ng = static_cast<int>(prob.groups.size());
  const double inv_scale = 1.0 / scale.get_d();

  Eigen::VectorXd y(np);
  for (const auto& g : prob.groups) {
    const double v = g.target.get_d() * inv_scale / static_cast<double>(g.pairs.size());
    for (int p : g.pairs) y[p] = v;
  }
  Eigen::VectorXd diag(d);
  for (int a = 0; a < d; ++a) diag[a] = prob.diag[a].get_d() * inv_scale;

  auto build = [&](const Eigen::VectorXd& yy, double s) {
    Eigen::MatrixXd q = Eigen::MatrixXd::Zero(d, d);
    for (int a = 0; a < d; ++a) q(a, a) = diag[a] - s;
    for (int p = 0; p < np; ++p) {
      const auto [a, b] = prob.pairs[p];
      q(a, b) = yy[p];
      q(b, a) = yy[p];
    }
    return q;
  };

  double s;
  {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(build(y, 0.0), Eigen::EigenvaluesOnly);
    s = es.eigenvalues()[0] - 1.0;
  }
  const double s_cap = diag.minCoeff();

  // Objective t*s + log det(Q - sI); -inf outside the cone.
  auto objective = [&](const Eigen::VectorXd& yy, double ss, double t) {
    Eigen::LLT<Eigen::MatrixXd> llt(build(yy, ss));
    if (llt.info() != Eigen::Success) return -std::numeric_limits<double>::infinity();
    double logdet = 0;
    const auto& l = llt.matrixLLT();
    for (int a = 0; a < d; ++a) {
      if (!(l(a, a) > 0)) return -std::numeric_limits<double>::infinity();
      logdet += 2.0 * std::log(l(a, a));
    }
    return t * ss + logdet;
  };

  Eigen::MatrixXd amat = Eigen::MatrixXd::Zero(ng, np + 1);
  for (int p = 0; p < np; ++p) amat(prob.group_of[p], p) = 1.0;

  double t = 1.0;
  for (int outer = 0; outer < options.max_outer; ++outer) {
    for (int iter = 0; iter < options.max_newton; ++iter) {
      Eigen::LLT<Eigen::MatrixXd> llt(build(y, s));
      if (llt.info() != Eigen::Success) return std::nullopt;
      const Eigen::MatrixXd w = llt.solve(Eigen::MatrixXd::Identity(d, d));
      const Eigen::MatrixXd w2 = w * w;
      Eigen::VectorXd grad(np + 1);
      Eigen::MatrixXd neg_h(np + 1, np + 1);
      for (int p = 0; p < np; ++p) {
        const auto [a, b] = prob.pairs[p];
        grad[p] = 2.0 * w(a, b);
        for (int q = p; q < np; ++q) {
          const auto [c, e] = prob.pairs[q];
          const double h = 2.0 * (w(a, e) * w(b, c) + w(a, c) * w(b, e));
          neg_h(p, q) = h;
          neg_h(q, p) = h;
        }
        neg_h(p, np) = -2.0 * w2(a, b);
        neg_h(np, p) = neg_h(p, np);
      }
      grad[np] = t - w.trace();
      neg_h(np, np) = w2.trace();

      // Equality-constrained Newton step through the Schur complement.
      Eigen::LLT<Eigen::MatrixXd> hl(neg_h);
      if (hl.info() != Eigen::Success) return std::nullopt;
      const Eigen::VectorXd hg = hl.solve(grad);
      const Eigen::MatrixXd ha = hl.solve(amat.transpose());
      const Eigen::MatrixXd schur = amat * ha;
      const Eigen::VectorXd nu = -schur.ldlt().solve(amat * hg);
      const Eigen::VectorXd step = hg + ha * nu;
      const double decrement = grad.dot(step);
      if (decrement < 1e-10) break;

      const double f0 = objective(y, s, t);
      double alpha = 1.0;
      bool moved = false;
      while (alpha > 1e-12) {
        const Eigen::VectorXd ny = y + alpha * step.head(np);
        const double ns = s + alpha * step[np];
        const double f1 = objective(ny, ns, t);
        if (std::isfinite(f1) && f1 >= f0 + 0.25 * alpha * decrement) {
          y = ny;
          s = ns;
          moved = true;
          break;
        }
        alpha *= 0.5;
      }
      if (!moved) break;
    }
    if (s > 0) {
      if (auto q = round_and_check(prob, y, scale)) return q;
    }
    if (d / t < 1e-10 || s >= s_cap - 1e-12) break;
    t *= 6.0;
  }
  if (s > -1e-7) return round_and_check(prob, y, scale);
  return std::nullopt;
}

}  // namespace

bool verify_gram(const GramCertificate& cert, const BoundedPoly& p) {
  if (cert.gram.size() != cert.basis.size()) return false;
  for (const auto& m : cert.basis) {
    if (m.squared != 0) return false;
  }
  BoundedPoly expanded = cert.expand();
  if (!(expanded.terms() == p.terms())) return false;
  return is_psd_exact(cert.gram);
}

std::optional<GramCertificate> sos_certificate(const BoundedPoly& p, const SosOptions& options) {
  GramCertificate cert;
  cert.num_vars = p.num_vars();
  if (p.is_zero()) {
    cert.basis = {Monomial{}};
    cert.gram = {{Rational(0)}};
    return cert;
  }
  const int lo = (p.min_degree() + 1) / 2;
  const int hi = p.total_degree() / 2;
  const Subset active = p.active_variables();

  Problem prob;
  std::vector<Subset> supports;
  for (Subset a = active;; a = (a - 1) & active) {
    const int k = popcount(a);
    if (k >= lo && k <= hi) supports.push_back(a);
    if (a == 0) break;
  }
  std::sort(supports.begin(), supports.end(), canonical_less);
  for (Subset a : supports) {
    const Rational c = p.coefficient(Monomial{0, a});
    if (c < 0) return std::nullopt;
    if (c == 0) continue;  // row and column of Q must vanish
    prob.basis.push_back(Monomial{a, 0});
    prob.diag.push_back(c);
  }
  const int d = static_cast<int>(prob.basis.size());
  if (d > options.max_basis) return std::nullopt;

  std::map<std::uint64_t, int> group_index;
  for (int a = 0; a < d; ++a) {
    for (int b = a + 1; b < d; ++b) {
      Monomial prod;
      multiply_monomials(prob.basis[a], prob.basis[b], prod);
      auto [it, inserted] = group_index.try_emplace(prod.key(), static_cast<int>(prob.groups.size()));
      if (inserted) prob.groups.push_back(Group{p.coefficient(prod) / 2, {}});
      prob.groups[it->second].pairs.push_back(static_cast<int>(prob.pairs.size()));
      prob.group_of.push_back(it->second);
      prob.pairs.emplace_back(a, b);
    }
  }
  // Every term of p must be reachable from the basis.
  for (const auto& [mono, c] : p.terms()) {
    if (mono.linear == 0) {
      if (std::none_of(prob.basis.begin(), prob.basis.end(), [&](const Monomial& m) { return m.linear == mono.squared; })) {
        return std::nullopt;
      }
    } else if (!group_index.count(mono.key())) {
      return std::nullopt;
    }
  }
  cert.basis = prob.basis;

  std::vector<Rational> even(prob.pairs.size());
  for (const auto& g : prob.groups) {
    const Rational v = g.target / static_cast<long>(g.pairs.size());
    for (int q : g.pairs) even[q] = v;
  }
  RationalMatrix q = assemble(prob, even);
  if (diagonally_dominant(q) || is_psd_exact(q)) {
    cert.gram = std::move(q);
    return cert;
  }

  Rational scale = 0;
  for (const auto& [mono, c] : p.terms()) scale = std::max(scale, Rational(abs(c)));
  auto found = numeric_search(prob, scale, options);
  if (!found) return std::nullopt;
  cert.gram = std::move(*found);
  if (!verify_gram(cert, p)) return std::nullopt;
  return cert;
}

}  // namespace matroidwb
