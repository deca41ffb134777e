#include "hg/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "hg/parallel.hpp"

namespace hg {

namespace {

std::vector<OperatorField> modulated(const OperatorField& G, const GaborParams& gp, Warnings* warn) {
  auto fams = gp.families();
  std::vector<OperatorField> out(fams.size(), OperatorField(G.rgrid, G.zgrid));
  std::vector<Warnings> local(fams.size());
  parallel_for(int(fams.size()), [&](int f) { out[f] = modulate(G, gp.a, fams[f], &local[f]); });
  if (warn)
    for (const auto& lw : local)
      for (const auto& [code, e] : lw.items) warn->add(code, e.message, e.worst);
  return out;
}

int wrap(long i, int n) { return int(((i % n) + n) % n); }

}  // namespace

Residual orthogonality_residual(const OperatorField& G, const GaborParams& gp, double floor_rel, Warnings* warn) {
  const int nf = int(gp.families().size());
  Residual res;
  res.pairs = long(nf) * (nf - 1) / 2;
  if (nf < 2) return res;
  auto MG = modulated(G, gp, warn);
  const auto& rg = G.rgrid;
  const int bins = 2 * rg.N;
  // per bin: |<g_a, g_b>| and |g_a||g_b| for every pair
  std::vector<Eigen::ArrayXd> ip(bins), nn(bins);
  std::vector<double> peak(bins, 0.0);
  parallel_for(bins, [&](int bin) {
    int c = bin / rg.N, r = bin % rg.N;
    std::vector<Symbol> D(nf);
    Eigen::ArrayXd n2(nf);
    for (int f = 0; f < nf; ++f) {
      D[f] = dual_slice(MG[f], r, c);
      n2[f] = hs_norm2(D[f], G.zgrid);
    }
    peak[bin] = n2.maxCoeff();
    ip[bin].resize(res.pairs);
    nn[bin].resize(res.pairs);
    long q = 0;
    for (int a = 0; a < nf; ++a)
      for (int b = a + 1; b < nf; ++b, ++q) {
        ip[bin][q] = std::abs(hs_inner(D[a], D[b], G.zgrid));
        nn[bin][q] = std::sqrt(n2[a] * n2[b]);
      }
  });
  double top = *std::max_element(peak.begin(), peak.end());
  res.floor = floor_rel * top;
  if (top == 0) return res;
  for (int bin = 0; bin < bins; ++bin)
    res.value = std::max(res.value, (ip[bin] / (nn[bin] + res.floor)).maxCoeff());
  return res;
}

Flag classify_orthonormal(const WeightTable& W, double b, double tol) {
  Flag f;
  if (W.w.size() == 0) return f;
  f.residual = (W.w.array() - b).abs().maxCoeff() / b;
  f.value = f.residual <= tol;
  return f;
}

Flag classify_parseval(const WeightTable& W, double b, double tol) {
  Flag f;
  bool any = false;
  for (Eigen::Index i = 0; i < W.w.rows(); ++i)
    for (Eigen::Index r = 0; r < W.w.cols(); ++r)
      if (W.omega(i, r)) {
        any = true;
        f.residual = std::max(f.residual, std::abs(W.w(i, r) - b) / b);
      }
  f.value = any && f.residual <= tol;
  return f;
}

Bounds frame_bounds_from_w(const WeightTable& W, double b) {
  Bounds B;
  for (Eigen::Index i = 0; i < W.w.rows(); ++i)
    for (Eigen::Index r = 0; r < W.w.cols(); ++r) {
      if (!W.omega(i, r)) continue;
      double v = W.w(i, r) / b;
      B.A = B.defined ? std::min(B.A, v) : v;
      B.B = B.defined ? std::max(B.B, v) : v;
      B.defined = true;
    }
  return B;
}

Bounds riesz_bounds_from_w(const WeightTable& W, double b) {
  Bounds B;
  if (W.w.size() == 0) return B;
  B.A = W.w.minCoeff() / b;
  B.B = W.w.maxCoeff() / b;
  B.defined = true;
  return B;
}

Classification classify(const WeightTable& W, double b, double tol) {
  Classification c;
  c.orthonormal = classify_orthonormal(W, b, tol);
  c.parseval = classify_parseval(W, b, tol);
  c.frame_bounds = frame_bounds_from_w(W, b);
  c.riesz_bounds = riesz_bounds_from_w(W, b);
  c.frame = c.frame_bounds.defined;
  c.riesz = c.riesz_bounds.defined && W.omega.size() > 0 && W.omega.all();
  return c;
}

GramMatrix gram_matrix(const OperatorField& G, const GaborParams& gp, Warnings* warn) {
  GramMatrix gm{members(gp), {}};
  const int n = int(gm.index.size());
  const int np = int(gp.shifts().size());
  auto MG = modulated(G, gp, warn);
  const auto& rg = G.rgrid;
  gm.M.setZero(n, n);
  parallel_for(n, [&](int A) {
    const auto& ma = gm.index[A];
    const auto& Fa = MG[A / np];
    for (int B = A; B < n; ++B) {
      const auto& mb = gm.index[B];
      const auto& Fb = MG[B / np];
      cplx acc = 0;
      for (int s = 0; s < 2; ++s)
        for (int i = 0; i < rg.N; ++i) {
          int ia = wrap(i - long(ma.p) * rg.P, rg.N), ib = wrap(i - long(mb.p) * rg.P, rg.N);
          if (Fa.active(s, ia) && Fb.active(s, ib)) acc += hs_inner(Fa.at(s, ia), Fb.at(s, ib), G.zgrid);
        }
      gm.M(A, B) = rg.delta_u * acc;
    }
  });
  for (int A = 0; A < n; ++A)
    for (int B = 0; B < A; ++B) gm.M(A, B) = std::conj(gm.M(B, A));
  return gm;
}

Eigen::MatrixXcd gram_from_w(const WeightTable& W, const std::vector<Member>& index) {
  const int n = int(index.size());
  const auto& g = W.grid;
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(n, n);
  for (int A = 0; A < n; ++A)
    for (int B = 0; B < n; ++B) {
      if (!(index[A].f == index[B].f)) continue;
      auto it = std::find(W.families.begin(), W.families.end(), index[A].f);
      auto f = it - W.families.begin();
      cplx acc = 0;
      for (int r = 0; r < g.M; ++r) {
        long k = (long(index[B].p - index[A].p) * r) % g.M;
        acc += W.w(f, r) * std::polar(1.0, 2 * pi * double(k) / g.M);
      }
      M(A, B) = g.dt() * acc;
    }
  return M;
}

GramSummary summarize_gram(const GramMatrix& gm, const Eigen::MatrixXcd& formula, double norm2_G,
                           const Bounds& fb, double rank_rel) {
  GramSummary s;
  const auto& M = gm.M;
  s.size = int(M.rows());
  if (s.size == 0) return s;
  double scale = norm2_G > 0 ? norm2_G : 1.0;
  s.hermitian_residual = (M - M.adjoint()).cwiseAbs().maxCoeff() / scale;
  s.diagonal_deviation = (M.diagonal().array() - norm2_G).abs().maxCoeff() / scale;
  for (int A = 0; A < s.size; ++A)
    for (int B = 0; B < s.size; ++B) {
      double d = std::abs(M(A, B) - formula(A, B)) / scale;
      if (gm.index[A].f == gm.index[B].f)
        s.same_family_error = std::max(s.same_family_error, d);
      else
        s.cross_family_max = std::max(s.cross_family_max, std::abs(M(A, B)) / scale);
    }
  s.formula_distance = (M - formula).norm();

  Eigen::MatrixXcd H = 0.5 * (M + M.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H, Eigen::EigenvaluesOnly);
  s.eigs = es.eigenvalues();
  s.eig_min = s.eigs.minCoeff();
  s.eig_max = s.eigs.maxCoeff();
  s.rank_threshold = rank_rel * std::max(std::abs(s.eig_min), std::abs(s.eig_max));
  s.eig_min_nonzero = 0;
  for (int i = 0; i < s.eigs.size(); ++i)
    if (s.eigs[i] > s.rank_threshold) {
      s.eig_min_nonzero = s.rank ? std::min(s.eig_min_nonzero, s.eigs[i]) : s.eigs[i];
      ++s.rank;
    }

  // widening of the w-predicted spectrum by the finite p-box, plus the oracle-vs-formula gap
  Eigen::MatrixXcd Hf = 0.5 * (formula + formula.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> ef(Hf, Eigen::EigenvaluesOnly);
  Eigen::VectorXd fe = ef.eigenvalues();
  double thr = rank_rel * fe.cwiseAbs().maxCoeff();
  bool seen = false;
  for (int i = 0; i < fe.size(); ++i)
    if (fe[i] > thr) {
      s.formula_eig_min_nonzero = seen ? std::min(s.formula_eig_min_nonzero, fe[i]) : fe[i];
      seen = true;
    }
  s.formula_eig_max = fe.maxCoeff();
  s.truncation_allowance = s.formula_distance;
  if (fb.defined && seen) {
    s.truncation_allowance += std::max(0.0, fb.A - s.formula_eig_min_nonzero);
    s.truncation_allowance += std::max(0.0, s.formula_eig_max - fb.B);
  }
  return s;
}

Eigen::VectorXcd analysis_coefficients(const OperatorField& F, const OperatorField& G, const GaborParams& gp) {
  auto idx = members(gp);
  const int np = int(gp.shifts().size());
  auto MG = modulated(G, gp, nullptr);
  const auto& rg = G.rgrid;
  Eigen::VectorXcd out(idx.size());
  parallel_for(int(idx.size()), [&](int A) {
    const auto& Fa = MG[A / np];
    cplx acc = 0;
    for (int s = 0; s < 2; ++s)
      for (int i = 0; i < rg.N; ++i) {
        int ia = wrap(i - long(idx[A].p) * rg.P, rg.N);
        if (F.active(s, i) && Fa.active(s, ia)) acc += hs_inner(F.at(s, i), Fa.at(s, ia), G.zgrid);
      }
    out[A] = rg.delta_u * acc;
  });
  return out;
}

Eigen::VectorXd analysis_energy(const OperatorField& F, const OperatorField& G, const GaborParams& gp) {
  auto c = analysis_coefficients(F, G, gp);
  const int np = int(gp.shifts().size());
  Eigen::VectorXd e = Eigen::VectorXd::Zero(c.size() / np);
  for (Eigen::Index A = 0; A < c.size(); ++A) e[A / np] += std::norm(c[A]);
  return e;
}

Eigen::VectorXd energy_from_rho(const Eigen::MatrixXcd& rho, const WeightTable& W) {
  Eigen::VectorXd e(rho.rows());
  for (Eigen::Index f = 0; f < rho.rows(); ++f)
    e[f] = W.grid.dt() * (rho.row(f).cwiseAbs2().array() * W.w.row(f).array().square()).sum() / W.grid.b();
  return e;
}

}  // namespace hg
