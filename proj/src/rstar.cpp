#include "hg/rstar.hpp"

#include <algorithm>
#include <cmath>

#include "hg/fft.hpp"

namespace hg {

namespace {

void require_same(const RStarGrid& a, const RStarGrid& b) {
  if (!(a == b)) throw grid_error("fields live on different R* grids");
}

long mod(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

// exp(-2 pi i k / n) for integer k
cplx unit_root(long k, long n) {
  double x = -2.0 * pi * double(mod(k, n)) / double(n);
  return {std::cos(x), std::sin(x)};
}

// exp(-2 pi i t_r u0) for every dual bin
Eigen::VectorXcd origin_phase(const RStarGrid& g) {
  Eigen::VectorXcd ph(g.N);
  auto off = g.offset_steps();
  for (int r = 0; r < g.N; ++r) {
    if (off)
      ph[r] = unit_root(long(r) * *off, g.N);
    else
      ph[r] = std::polar(1.0, -2.0 * pi * g.t(r) * g.u0);
  }
  return ph;
}

}  // namespace

RStarGrid RStarGrid::centered(double delta_u, int P, int M) {
  RStarGrid g;
  g.delta_u = delta_u;
  g.P = P;
  g.M = M;
  g.N = M * P;
  g.u0 = -(g.N / 2) * delta_u;
  g.validate();
  return g;
}

std::optional<long> RStarGrid::offset_steps() const {
  double q = u0 / delta_u;
  double r = std::round(q);
  if (std::abs(q - r) > 1e-9) return std::nullopt;
  return long(r);
}

double RStarGrid::u(int i) const {
  if (auto off = offset_steps()) return double(*off + i) * delta_u;
  return u0 + i * delta_u;
}

double RStarGrid::lambda(int sheet, int i) const { return sheet_sign(sheet) * std::exp(u(i)); }

int RStarGrid::index_of_step(long q) const {
  auto off = offset_steps();
  if (!off) throw grid_error("u0 is not a multiple of delta_u; lattice positions are off-grid");
  return int(mod(q - *off, N));
}

bool RStarGrid::reflection_exact() const {
  double q = 2.0 * u0 / delta_u;
  return std::abs(q - std::round(q)) <= 1e-9;
}

void RStarGrid::validate() const {
  if (!(delta_u > 0) || !std::isfinite(delta_u)) throw grid_error("delta_u must be positive and finite");
  if (P < 1) throw grid_error("P (steps per b) must be >= 1");
  if (M < 2) throw grid_error("M (bins per period) must be >= 2");
  if (N != M * P) throw grid_error("N must equal M * P");
  if (N % 2) throw grid_error("N = M * P must be even");
  if (!std::isfinite(u0)) throw grid_error("u0 must be finite");
}

cplx char_eval(double nu, int j, double lambda) {
  if (!(nu > 0)) throw std::domain_error("character parameter nu must be positive");
  if (lambda == 0) throw std::domain_error("characters are defined on nonzero lambda");
  if (j != 1 && j != -1) throw std::domain_error("parity must be +1 or -1");
  cplx c = std::polar(1.0, 2.0 * pi * std::log(nu) * std::log(std::abs(lambda)));
  return lambda < 0 ? double(j) * c : c;
}

cplx ft_kernel(const RStarGrid& g, int r, int i) {
  if (auto off = g.offset_steps()) return g.delta_u * unit_root(long(r) * (*off + i), g.N);
  return g.delta_u * std::polar(1.0, -2.0 * pi * g.t(r) * g.u(i));
}

DualScalarField ft_rstar(const ScalarField& f) {
  const auto& g = f.grid;
  DualScalarField F(g);
  F.v.col(0) = f.v.col(0) + f.v.col(1);
  F.v.col(1) = f.v.col(0) - f.v.col(1);
  Eigen::VectorXcd ph = g.delta_u * origin_phase(g);
  for (int c = 0; c < 2; ++c) {
    Eigen::VectorXcd col = F.v.col(c).matrix();
    fft(col);
    F.v.col(c) = col.array() * ph.array();
  }
  return F;
}

ScalarField ift_rstar(const DualScalarField& F, double parity_weight) {
  const auto& g = F.grid;
  ScalarField f(g);
  Eigen::VectorXcd ph = origin_phase(g).conjugate() / g.delta_u;
  Eigen::ArrayX2cd per(g.N, 2);
  for (int c = 0; c < 2; ++c) {
    Eigen::VectorXcd col = (F.v.col(c) * ph.array()).matrix();
    fft(col, true);
    per.col(c) = col.array();
  }
  f.v.col(0) = parity_weight * (per.col(0) + per.col(1));
  f.v.col(1) = parity_weight * (per.col(0) - per.col(1));
  return f;
}

ScalarField convolve_rstar(const ScalarField& f, const ScalarField& h) {
  require_same(f.grid, h.grid);
  const auto& g = f.grid;
  auto off = g.offset_steps();
  if (!off) throw grid_error("convolution needs u0 on the delta_u lattice");
  const int N = g.N;
  ScalarField out(g);
  for (int s = 0; s < 2; ++s)
    for (int i = 0; i < N; ++i) {
      cplx acc = 0;
      for (int s2 = 0; s2 < 2; ++s2)
        for (int k = 0; k < N; ++k) acc += f.v(int(mod(i - k - *off, N)), s ^ s2) * h.v(k, s2);
      out.v(i, s) = g.delta_u * acc;
    }
  return out;
}

ScalarField translate_rstar(const ScalarField& f, long q, bool flip_sign) {
  const auto& g = f.grid;
  ScalarField out(g);
  for (int s = 0; s < 2; ++s) {
    int src = flip_sign ? 1 - s : s;
    for (int i = 0; i < g.N; ++i) out.v(i, s) = f.v(int(mod(i - q, g.N)), src);
  }
  return out;
}

ScalarField involution_rstar(const ScalarField& f) {
  const auto& g = f.grid;
  if (!g.reflection_exact()) throw grid_error("u -> -u is not grid-exact: 2 u0 / delta_u must be an integer");
  long shift = std::lround(-2.0 * g.u0 / g.delta_u);
  ScalarField out(g);
  for (int s = 0; s < 2; ++s)
    for (int i = 0; i < g.N; ++i) out.v(i, s) = std::conj(f.v(int(mod(shift - i, g.N)), s));
  return out;
}

ScalarField delta_rstar(const RStarGrid& g) {
  ScalarField d(g);
  d.v(g.index_of_step(0), 0) = 1.0 / g.delta_u;
  return d;
}

cplx inner_product_rstar(const ScalarField& f, const ScalarField& h) {
  require_same(f.grid, h.grid);
  return f.grid.delta_u * (f.v * h.v.conjugate()).sum();
}

double norm2_rstar(const ScalarField& f) { return f.grid.delta_u * f.v.abs2().sum(); }

cplx dual_inner(const DualScalarField& F, const DualScalarField& G, double parity_weight) {
  require_same(F.grid, G.grid);
  return parity_weight * F.grid.dt() * (F.v * G.v.conjugate()).sum();
}

double dual_norm2(const DualScalarField& F, double parity_weight) {
  return parity_weight * F.grid.dt() * F.v.abs2().sum();
}

double boundary_fraction(const ScalarField& f) {
  const int N = f.grid.N;
  double total = f.v.abs2().sum();
  if (total == 0) return 0;
  double inner = f.v.middleRows(N / 4, 3 * N / 4 - N / 4).abs2().sum();
  return std::max(0.0, (total - inner) / total);
}

}  // namespace hg
