#include "hg/presets.hpp"

#include <cmath>
#include <stdexcept>

namespace hg {

const Ap3Layout& ap3_layout() {
  static const Ap3Layout L = [] {
    Ap3Layout l;
    double x = 1.09;
    for (int it = 0; it < 60; ++it) {
      double f = 1 + std::pow(x, 7) - 2 * std::pow(x, 4);
      double df = 7 * std::pow(x, 6) - 8 * std::pow(x, 3);
      x -= f / df;
    }
    l.x = x;
    l.delta_u = std::log(x);
    for (int i = 0; i < 3; ++i) l.lambda[i] = std::exp(l.steps[i] * l.delta_u);
    l.a = 1.0 / (3.0 * (l.lambda[1] - l.lambda[0]));
    return l;
  }();
  return L;
}

double smoothed_box(double x, double w, double eta) {
  if (eta <= 0) return std::abs(x) <= w ? 1.0 : 0.0;
  return 0.5 * (std::erf((x + w) / eta) - std::erf((x - w) / eta));
}

namespace {

Symbol gauss(const SymbolGrid& zg, double x0, double y0, double sigma) {
  Symbol s(zg.Nz, zg.Nz);
  for (int i = 0; i < zg.Nz; ++i)
    for (int j = 0; j < zg.Nz; ++j) {
      double dx = zg.x(i) - x0, dy = zg.x(j) - y0;
      s(i, j) = std::exp(-pi * (dx * dx + dy * dy) / (sigma * sigma));
    }
  return s;
}

Symbol cell(const SymbolGrid& zg, double x0, double y0, double wx, double wy, double eta) {
  Eigen::VectorXd bx(zg.Nz), by(zg.Nz);
  for (int i = 0; i < zg.Nz; ++i) {
    bx[i] = smoothed_box(zg.x(i) - x0, wx, eta);
    by[i] = smoothed_box(zg.x(i) - y0, wy, eta);
  }
  return (bx * by.transpose()).cast<cplx>();
}

}  // namespace

OperatorField make_window(const PresetSpec& ps, const RStarGrid& rg, const SymbolGrid& zg) {
  zg.validate();
  OperatorField G(rg, zg);
  if (ps.name == "gauss-gauss") {
    if (!(ps.sigma_z > 0) || !(ps.sigma_u > 0)) throw std::invalid_argument("gauss-gauss needs sigma_z, sigma_u > 0");
    Symbol z = gauss(zg, ps.z0x, ps.z0y, ps.sigma_z);
    for (int i = 0; i < rg.N; ++i) {
      double du = (rg.u(i) - ps.u_center) / ps.sigma_u;
      double amp = std::exp(-pi * du * du);
      if (amp > 0) G.at(0, i) = amp * z;
    }
  } else if (ps.name == "narrowband-rankone") {
    int i = rg.index_of_step(std::lround(ps.u_center / rg.delta_u));
    G.at(0, i) = gauss(zg, ps.z0x, ps.z0y, ps.sigma_z);
  } else if (ps.name == "cell-indicator" && ps.layout == "box") {
    Symbol z = cell(zg, ps.cell_x0, ps.cell_y0, ps.cell_wx, ps.cell_wy, ps.cell_eta);
    double w = (ps.u_hi - ps.u_lo) / 2, c = (ps.u_hi + ps.u_lo) / 2;
    for (int i = 0; i < rg.N; ++i) {
      double amp = smoothed_box(rg.u(i) - c, w, ps.u_eta);
      if (amp > 0) G.at(0, i) = amp * z;
    }
  } else if (ps.name == "cell-indicator" && ps.layout == "ap3") {
    const auto& L = ap3_layout();
    if (std::abs(rg.delta_u - L.delta_u) > 1e-12 * L.delta_u)
      throw std::invalid_argument("ap3 layout needs delta_u = log x with 1 + x^7 = 2 x^4");
    for (int q = 0; q < 3; ++q) {
      Symbol z = cell(zg, L.centers[q][0], L.centers[q][1], ps.cell_wx, ps.cell_wy, ps.cell_eta);
      z /= std::sqrt(hs_norm2(z, zg));
      G.at(0, rg.index_of_step(L.steps[q])) = z;
    }
  } else {
    throw std::invalid_argument("unknown window preset '" + ps.name + "' (layout '" + ps.layout + "')");
  }
  if (ps.normalize) {
    double n = G.norm2();
    if (n > 0)
      for (auto& sheet : G.slices)
        for (auto& s : sheet)
          if (s.size()) s /= std::sqrt(n);
  }
  return G;
}

WindowMass window_mass(const OperatorField& G) {
  const int N = G.rgrid.N;
  double total = 0, u_in = 0, z_out = 0;
  for (int s = 0; s < 2; ++s)
    for (int i = 0; i < N; ++i) {
      if (!G.active(s, i)) continue;
      double n = G.at(s, i).squaredNorm();
      total += n;
      if (i >= N / 4 && i < 3 * N / 4) u_in += n;
      z_out += n * symbol_boundary_fraction(G.at(s, i));
    }
  if (total == 0) return {};
  return {std::max(0.0, (total - u_in) / total), z_out / total};
}

}  // namespace hg
