#include "hg/symbol.hpp"

#include <cmath>
#include <sstream>

#include "hg/fft.hpp"

namespace hg {

void Warnings::add(const std::string& code, const std::string& message, double value) {
  auto& e = items[code];
  if (e.count == 0 || value > e.worst) {
    e.worst = value;
    e.message = message;
  }
  ++e.count;
}

void SymbolGrid::validate() const {
  if (n != 1) throw grid_error("only n = 1 is implemented");
  if (Nz < 2 || Nz % 2) throw grid_error("Nz must be even and >= 2");
  if (!(Lz > 0)) throw grid_error("Lz must be positive");
}

namespace {

Eigen::VectorXd frequencies(int n, double L) {
  Eigen::VectorXd f(n);
  for (int k = 0; k < n; ++k) f[k] = fftfreq_index(k, n) / (2 * L);
  return f;
}

void check_alias(const SymbolGrid& zg, double u, double v, Warnings* warn) {
  if (warn && (std::abs(u) >= zg.Lz || std::abs(v) >= zg.Lz)) {
    std::ostringstream os;
    os << "z-shift (" << u << ", " << v << ") reaches the periodic window Lz = " << zg.Lz;
    warn->add("aliasing", os.str(), std::max(std::abs(u), std::abs(v)) / zg.Lz);
  }
}

}  // namespace

Symbol shift_symbol(const Symbol& g, const SymbolGrid& zg, double u, double v) {
  if (u == 0 && v == 0) return g;
  Eigen::VectorXd f = frequencies(zg.Nz, zg.Lz);
  Eigen::VectorXcd ex(zg.Nz), ey(zg.Nz);
  for (int k = 0; k < zg.Nz; ++k) {
    ex[k] = std::polar(1.0, -2 * pi * f[k] * u);
    ey[k] = std::polar(1.0, -2 * pi * f[k] * v);
  }
  Symbol s = g;
  fft2(s);
  s = ex.asDiagonal() * s * ey.asDiagonal();
  fft2(s, true);
  return s;
}

Symbol adjoint_symbol(const Symbol& g) {
  const Eigen::Index n = g.rows();
  Symbol out(n, g.cols());
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < g.cols(); ++j) out(i, j) = std::conj(g((n - i) % n, (g.cols() - j) % g.cols()));
  return out;
}

Symbol twisted_translate(const Symbol& g, const SymbolGrid& zg, double u, double v, Warnings* warn) {
  check_alias(zg, u, v, warn);
  Symbol s = shift_symbol(g, zg, u, v);
  if (u == 0 && v == 0) return s;
  Eigen::VectorXcd px(zg.Nz), py(zg.Nz);
  for (int i = 0; i < zg.Nz; ++i) {
    px[i] = std::polar(1.0, pi * zg.x(i) * v);
    py[i] = std::polar(1.0, -pi * zg.x(i) * u);
  }
  return px.asDiagonal() * s * py.asDiagonal();
}

cplx trace_pi_weyl(const Symbol& g, const SymbolGrid& zg, double wx, double wy, Warnings* warn) {
  check_alias(zg, wx, wy, warn);
  return shift_symbol(g, zg, wx, wy)(zg.origin(), zg.origin());
}

cplx hs_inner(const Symbol& a, const Symbol& b, const SymbolGrid& zg) {
  if (a.size() == 0 || b.size() == 0) return 0;
  return zg.cell() * (a.array() * b.array().conjugate()).sum();
}

double hs_norm2(const Symbol& a, const SymbolGrid& zg) {
  return a.size() == 0 ? 0.0 : zg.cell() * a.squaredNorm();
}

double symbol_boundary_fraction(const Symbol& g) {
  double total = g.squaredNorm();
  if (total == 0) return 0;
  const auto n = g.rows();
  double inner = g.block(n / 4, n / 4, n / 2, n / 2).squaredNorm();
  return std::max(0.0, (total - inner) / total);
}

OperatorField::OperatorField(const RStarGrid& rg, const SymbolGrid& zg) : rgrid(rg), zgrid(zg) {
  slices[0].resize(rg.N);
  slices[1].resize(rg.N);
}

double OperatorField::norm2() const {
  double acc = 0;
  for (int s = 0; s < 2; ++s)
    for (const auto& sl : slices[s]) acc += hs_norm2(sl, zgrid);
  return rgrid.delta_u * acc;
}

cplx field_inner(const OperatorField& F, const OperatorField& G) {
  if (!(F.rgrid == G.rgrid) || !(F.zgrid == G.zgrid)) throw grid_error("operator fields live on different grids");
  cplx acc = 0;
  for (int s = 0; s < 2; ++s)
    for (int i = 0; i < F.rgrid.N; ++i) acc += hs_inner(F.at(s, i), G.at(s, i), F.zgrid);
  return F.rgrid.delta_u * acc;
}

Eigen::MatrixXcd pi_matrix(const XiGrid& xg, double lambda, const HPoint& p, int n) {
  if (n != 1) throw grid_error("the matrix realization is one-dimensional");
  if (lambda == 0) throw std::domain_error("pi_lambda needs lambda != 0");
  const int N = xg.N;
  Eigen::VectorXd f = frequencies(N, xg.L);
  // circulant for phi(xi) -> phi(xi + y), band-limited
  Eigen::VectorXcd c(N);
  for (int d = 0; d < N; ++d) {
    cplx acc = 0;
    for (int k = 0; k < N; ++k)
      acc += std::polar(1.0, 2 * pi * (double(k) * d / N + f[k] * p.y));
    c[d] = acc / double(N);
  }
  Eigen::MatrixXcd S(N, N);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) S(a, b) = c[((a - b) % N + N) % N];
  Eigen::VectorXcd D(N);
  for (int a = 0; a < N; ++a)
    D[a] = std::polar(1.0, 2 * pi * lambda * (p.t + p.x * xg.xi(a) + 0.5 * p.x * p.y));
  return D.asDiagonal() * S;
}

Eigen::MatrixXcd weyl_matrix(const Symbol& g, const SymbolGrid& zg, const XiGrid& xg) {
  zg.validate();
  const int Nz = zg.Nz, N = xg.N;
  const double h = zg.h(), dxi = xg.d();
  const double band = Nz / (4 * zg.Lz);
  Eigen::VectorXd f = frequencies(Nz, zg.Lz);

  // spectra along y for trigonometric interpolation g(x, y)
  Symbol gy = g;
  for (int r = 0; r < Nz; ++r) {
    Eigen::VectorXcd row = gy.row(r).transpose();
    fft(row);
    gy.row(r) = row.transpose() / double(Nz);
  }

  // columns g(., y_d) for every xi-difference d = b - a
  Eigen::MatrixXcd cols = Eigen::MatrixXcd::Zero(Nz, 2 * N - 1);
  for (int d = -(N - 1); d <= N - 1; ++d) {
    double y = d * dxi;
    if (std::abs(y) >= zg.Lz) continue;
    Eigen::VectorXcd e(Nz);
    for (int k = 0; k < Nz; ++k) e[k] = std::polar(1.0, 2 * pi * f[k] * (y + zg.Lz));
    cols.col(d + N - 1) = gy * e;
  }

  Eigen::MatrixXcd K = Eigen::MatrixXcd::Zero(N, N);
  Eigen::VectorXcd ph(Nz);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      double omega = -(xg.xi(a) + xg.xi(b)) / 2;
      if (std::abs(omega) >= band) continue;
      int d = b - a;
      if (std::abs(d * dxi) >= zg.Lz) continue;
      for (int i = 0; i < Nz; ++i) ph[i] = std::polar(1.0, -2 * pi * zg.x(i) * omega);
      K(a, b) = dxi * h * (cols.col(d + N - 1).array() * ph.array()).sum();
    }
  return K;
}

}  // namespace hg
