#pragma once

#include <array>
#include <vector>

#include "hg/rstar.hpp"
#include "hg/warnings.hpp"

namespace hg {

// Periodic z = (x, y) grid on [-Lz, Lz)^2; only n = 1 is implemented.
struct SymbolGrid {
  int n = 1;
  int Nz = 64;
  double Lz = 8;

  double h() const { return 2 * Lz / Nz; }
  double x(int i) const { return -Lz + i * h(); }
  double cell() const { return h() * h(); }
  int origin() const { return Nz / 2; }
  void validate() const;

  friend bool operator==(const SymbolGrid&, const SymbolGrid&) = default;
};

// Weyl symbol sampled on the z-grid, rows indexed by x and columns by y.
using Symbol = Eigen::MatrixXcd;

// g(x - u, y - v) by phase ramp in the z-frequency domain.
Symbol shift_symbol(const Symbol& g, const SymbolGrid& zg, double u, double v);

// Symbol of pi(u, v) W(g): exp(pi i (x v - y u)) g(x - u, y - v).
Symbol twisted_translate(const Symbol& g, const SymbolGrid& zg, double u, double v, Warnings* warn = nullptr);

// Symbol of W(g)^*: conj(g(-z)), with -x taken periodically on the grid.
Symbol adjoint_symbol(const Symbol& g);

// tr(pi(w) W(g)) = g(-w), read off the band-limited interpolant.
cplx trace_pi_weyl(const Symbol& g, const SymbolGrid& zg, double wx, double wy, Warnings* warn = nullptr);

cplx hs_inner(const Symbol& a, const Symbol& b, const SymbolGrid& zg);
double hs_norm2(const Symbol& a, const SymbolGrid& zg);

// Fraction of |g|^2 outside the central half of each z-axis.
double symbol_boundary_fraction(const Symbol& g);

// Map lambda -> symbol of G(lambda). Zero-sized slices stand for identically zero symbols.
struct OperatorField {
  RStarGrid rgrid;
  SymbolGrid zgrid;
  std::array<std::vector<Symbol>, 2> slices;

  OperatorField(const RStarGrid& rg, const SymbolGrid& zg);

  bool active(int sheet, int i) const { return slices[sheet][i].size() > 0; }
  const Symbol& at(int sheet, int i) const { return slices[sheet][i]; }
  Symbol& at(int sheet, int i) { return slices[sheet][i]; }
  double norm2() const;
};

cplx field_inner(const OperatorField& F, const OperatorField& G);

// Samples of L^2(R) on [-Lxi, Lxi), used as an independent matrix model of pi_lambda and W.
struct XiGrid {
  int N = 128;
  double L = 8;

  double d() const { return 2 * L / N; }
  double xi(int a) const { return -L + a * d(); }
};

struct HPoint {
  double x = 0, y = 0, t = 0;
};

inline HPoint operator*(const HPoint& g, const HPoint& k) {
  return {g.x + k.x, g.y + k.y, g.t + k.t + 0.5 * (k.x * g.y - k.y * g.x)};
}

Eigen::MatrixXcd pi_matrix(const XiGrid& xg, double lambda, const HPoint& p, int n = 1);
Eigen::MatrixXcd weyl_matrix(const Symbol& g, const SymbolGrid& zg, const XiGrid& xg);

}  // namespace hg
