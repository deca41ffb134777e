#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace hg {

using cplx = std::complex<double>;
inline constexpr double pi = 3.141592653589793238462643383279502884;

struct grid_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Default dual weight of each parity; 1 reproduces the plain counting measure.
inline constexpr double kParityWeight = 0.5;

// Log-uniform samples of R*: lambda = s * exp(u0 + i * delta_u), s = +1 (column 0) or -1 (column 1).
struct RStarGrid {
  double delta_u = 1.0;
  int P = 1;
  int M = 2;
  int N = 2;
  double u0 = -1.0;

  static RStarGrid centered(double delta_u, int P, int M);

  double b() const { return P * delta_u; }
  double u(int i) const;
  double lambda(int sheet, int i) const;

  // u0 / delta_u when it is an integer (all lattice operations need this)
  std::optional<long> offset_steps() const;
  // index i with u_i = q * delta_u
  int index_of_step(long q) const;

  double dt() const { return 1.0 / (N * delta_u); }
  double t(int r) const { return r * dt(); }
  double t_centered(int r) const { return (r <= N / 2 ? r : r - N) * dt(); }

  bool reflection_exact() const;
  void validate() const;

  friend bool operator==(const RStarGrid&, const RStarGrid&) = default;
};

inline int sheet_sign(int sheet) { return sheet == 0 ? 1 : -1; }
inline int parity_of(int col) { return col == 0 ? 1 : -1; }

template <class T>
using SheetArray = Eigen::Array<T, Eigen::Dynamic, 2>;

template <class T = cplx>
struct BasicField {
  RStarGrid grid;
  SheetArray<T> v;

  explicit BasicField(const RStarGrid& g) : grid(g), v(SheetArray<T>::Zero(g.N, 2)) {}
};

// Dual samples: row r is t_r = r * dt, column 0 is parity j = 1, column 1 is j = -1.
template <class T = cplx>
struct BasicDualField {
  RStarGrid grid;
  SheetArray<T> v;

  explicit BasicDualField(const RStarGrid& g) : grid(g), v(SheetArray<T>::Zero(g.N, 2)) {}
};

using ScalarField = BasicField<cplx>;
using DualScalarField = BasicDualField<cplx>;

cplx char_eval(double nu, int j, double lambda);

// Delta_u * exp(-2 pi i t_r u_i), reduced mod N in integers so lattice phases stay exact.
cplx ft_kernel(const RStarGrid& g, int r, int i);

DualScalarField ft_rstar(const ScalarField& f);
ScalarField ift_rstar(const DualScalarField& F, double parity_weight = kParityWeight);

ScalarField convolve_rstar(const ScalarField& f, const ScalarField& g);
ScalarField translate_rstar(const ScalarField& f, long q, bool flip_sign = false);
ScalarField involution_rstar(const ScalarField& f);
ScalarField delta_rstar(const RStarGrid& g);

cplx inner_product_rstar(const ScalarField& f, const ScalarField& g);
double norm2_rstar(const ScalarField& f);
cplx dual_inner(const DualScalarField& F, const DualScalarField& G, double parity_weight = kParityWeight);
double dual_norm2(const DualScalarField& F, double parity_weight = kParityWeight);

// Fraction of |f|^2 outside the central half of the u-window.
double boundary_fraction(const ScalarField& f);

}  // namespace hg
