#include "hg/gabor.hpp"

#include <algorithm>
#include <cmath>

#include "hg/parallel.hpp"

namespace hg {

std::vector<Family> GaborParams::families() const {
  std::vector<Family> out;
  for (int k = -K; k <= K; ++k)
    for (int l = -L; l <= L; ++l)
      for (int m = -Mm; m <= Mm; ++m) out.push_back({k, l, m});
  return out;
}

std::vector<int> GaborParams::shifts() const {
  std::vector<int> out;
  for (int p = -p_max; p <= p_max; ++p) out.push_back(p);
  return out;
}

std::vector<Member> members(const GaborParams& gp) {
  std::vector<Member> out;
  for (const auto& f : gp.families())
    for (int p : gp.shifts()) out.push_back({f, p});
  return out;
}

OperatorField modulate(const OperatorField& G, double a, const Family& f, Warnings* warn) {
  OperatorField out(G.rgrid, G.zgrid);
  for (int s = 0; s < 2; ++s)
    for (int i = 0; i < G.rgrid.N; ++i) {
      if (!G.active(s, i)) continue;
      double lam = G.rgrid.lambda(s, i);
      cplx ph = std::polar(1.0, 2 * pi * lam * a * f.m);
      out.at(s, i) = ph * twisted_translate(G.at(s, i), G.zgrid, 2 * a * lam * f.k, a * f.l, warn);
    }
  return out;
}

OperatorField translate_gabor(const OperatorField& G, int p) {
  const int N = G.rgrid.N;
  long q = long(p) * G.rgrid.P;
  OperatorField out(G.rgrid, G.zgrid);
  for (int s = 0; s < 2; ++s)
    for (int i = 0; i < N; ++i) out.at(s, int(((i + q) % N + N) % N)) = G.at(s, i);
  return out;
}

OperatorField involution_field(const OperatorField& F) {
  const auto& g = F.rgrid;
  if (!g.reflection_exact()) throw grid_error("u -> -u is not grid-exact: 2 u0 / delta_u must be an integer");
  long shift = std::lround(-2.0 * g.u0 / g.delta_u);
  OperatorField out(g, F.zgrid);
  for (int s = 0; s < 2; ++s)
    for (int i = 0; i < g.N; ++i) {
      int src = int(((shift - i) % g.N + g.N) % g.N);
      if (F.active(s, src)) out.at(s, i) = adjoint_symbol(F.at(s, src));
    }
  return out;
}

OperatorField system_member(const OperatorField& G, double a, const Member& mb, Warnings* warn) {
  return translate_gabor(modulate(G, a, mb.f, warn), mb.p);
}

OperatorField compute_H(const OperatorField& G, double a, const Family& f, Warnings* warn) {
  const auto& zg = G.zgrid;
  OperatorField out(G.rgrid, zg);
  Eigen::VectorXcd py(zg.Nz);
  for (int s = 0; s < 2; ++s)
    for (int i = 0; i < G.rgrid.N; ++i) {
      if (!G.active(s, i)) continue;
      double lam = G.rgrid.lambda(s, i);
      double u = 2 * a * lam * f.k, v = a * f.l;
      if (warn && (std::abs(u) >= zg.Lz || std::abs(v) >= zg.Lz))
        warn->add("aliasing", "z-shift reaches the periodic window", std::max(std::abs(u), std::abs(v)) / zg.Lz);
      for (int c = 0; c < zg.Nz; ++c) py[c] = std::polar(1.0, 2 * pi * a * lam * (f.m - f.k * zg.x(c)));
      out.at(s, i) = shift_symbol(G.at(s, i), zg, u, v) * py.asDiagonal();
    }
  return out;
}

OperatorField x_phase(const OperatorField& F, double a, int l) {
  const auto& zg = F.zgrid;
  Eigen::VectorXcd px(zg.Nz);
  for (int r = 0; r < zg.Nz; ++r) px[r] = std::polar(1.0, pi * a * l * zg.x(r));
  OperatorField out(F.rgrid, zg);
  for (int s = 0; s < 2; ++s)
    for (int i = 0; i < F.rgrid.N; ++i)
      if (F.active(s, i)) out.at(s, i) = px.asDiagonal() * F.at(s, i);
  return out;
}

Symbol dual_slice(const OperatorField& F, int r, int parity_col) {
  const auto& g = F.rgrid;
  const double j = parity_of(parity_col);
  Symbol acc = Symbol::Zero(F.zgrid.Nz, F.zgrid.Nz);
  for (int i = 0; i < g.N; ++i) {
    cplx k = ft_kernel(g, r, i);
    if (F.active(0, i)) acc += k * F.at(0, i);
    if (F.active(1, i)) acc += (j * k) * F.at(1, i);
  }
  return acc;
}

DualOperatorField ft_field(const OperatorField& F) {
  DualOperatorField out{F.rgrid, F.zgrid, {}};
  for (int c = 0; c < 2; ++c) {
    out.slices[c].resize(F.rgrid.N);
    for (int r = 0; r < F.rgrid.N; ++r) out.slices[c][r] = dual_slice(F, r, c);
  }
  return out;
}

DualOperatorField compute_g_klm(const OperatorField& G, double a, const Family& f, Warnings* warn) {
  return ft_field(modulate(G, a, f, warn));
}

DualOperatorField compute_g_klm_via_H(const OperatorField& G, double a, const Family& f, Warnings* warn) {
  return ft_field(x_phase(compute_H(G, a, f, warn), a, f.l));
}

void WeightTable::update_support() {
  omega.resize(w.rows(), w.cols());
  for (Eigen::Index f = 0; f < w.rows(); ++f) {
    double floor = support_rel * w.row(f).maxCoeff();
    for (Eigen::Index r = 0; r < w.cols(); ++r) omega(f, r) = w(f, r) > floor && w(f, r) > 0;
  }
}

WeightTable weight_table(const OperatorField& G, const GaborParams& gp, double parity_weight, Warnings* warn) {
  const auto& g = G.rgrid;
  WeightTable W{g, gp.families(), Eigen::MatrixXd::Zero(gp.families().size(), g.M), {}, 1e-10};
  std::vector<Warnings> local(W.families.size());
  parallel_for(int(W.families.size()), [&](int fi) {
    OperatorField MG = modulate(G, gp.a, W.families[fi], warn ? &local[fi] : nullptr);
    for (int c = 0; c < 2; ++c)
      for (int r = 0; r < g.N; ++r) W.w(fi, r % g.M) += parity_weight * hs_norm2(dual_slice(MG, r, c), G.zgrid);
  });
  if (warn)
    for (const auto& lw : local)
      for (const auto& [code, e] : lw.items) warn->add(code, e.message, e.worst);
  W.update_support();
  return W;
}

WeightTable constant_weight_table(const RStarGrid& g, const std::vector<Family>& fams, double value) {
  WeightTable W{g, fams, Eigen::MatrixXd::Constant(fams.size(), g.M, value), {}, 1e-10};
  W.update_support();
  return W;
}

Eigen::MatrixXcd rho_map(const Coefficients& c, const RStarGrid& g) {
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(c.families.size(), g.M);
  for (std::size_t f = 0; f < c.families.size(); ++f)
    for (int r = 0; r < g.M; ++r)
      for (std::size_t q = 0; q < c.shifts.size(); ++q) {
        long k = ((long(c.shifts[q]) * r) % g.M + g.M) % g.M;
        rho(f, r) += c.alpha(f, q) * std::polar(1.0, -2 * pi * double(k) / g.M);
      }
  return rho;
}

double rho_norm2_w(const Eigen::MatrixXcd& rho, const WeightTable& W) {
  return W.grid.dt() * (rho.cwiseAbs2().array() * W.w.array()).sum();
}

OperatorField synthesize(const Coefficients& c, const OperatorField& G, double a, Warnings* warn) {
  OperatorField F(G.rgrid, G.zgrid);
  for (std::size_t f = 0; f < c.families.size(); ++f) {
    OperatorField MG = modulate(G, a, c.families[f], warn);
    for (std::size_t q = 0; q < c.shifts.size(); ++q) {
      cplx al = c.alpha(f, q);
      if (al == cplx(0)) continue;
      OperatorField T = translate_gabor(MG, c.shifts[q]);
      for (int s = 0; s < 2; ++s)
        for (int i = 0; i < G.rgrid.N; ++i) {
          if (!T.active(s, i)) continue;
          if (F.active(s, i))
            F.at(s, i) += al * T.at(s, i);
          else
            F.at(s, i) = al * T.at(s, i);
        }
    }
  }
  return F;
}

}  // namespace hg
