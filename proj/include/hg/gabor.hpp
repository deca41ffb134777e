#pragma once

#include <vector>

#include "hg/symbol.hpp"

namespace hg {

struct Family {
  int k = 0, l = 0, m = 0;
  friend bool operator==(const Family&, const Family&) = default;
};

struct GaborParams {
  double a = 1;
  double b = 1;
  int K = 0, L = 0, Mm = 0, p_max = 0;
  int s_max = 0;

  std::vector<Family> families() const;
  std::vector<int> shifts() const;
};

struct Member {
  Family f;
  int p = 0;
};

std::vector<Member> members(const GaborParams& gp);

OperatorField modulate(const OperatorField& G, double a, const Family& f, Warnings* warn = nullptr);
OperatorField translate_gabor(const OperatorField& G, int p);
// F(1/lambda)^*
OperatorField involution_field(const OperatorField& F);
OperatorField system_member(const OperatorField& G, double a, const Member& mb, Warnings* warn = nullptr);

// H(z, lambda) = exp(2 pi i a lambda (m - k y)) g_lambda(x - 2 a lambda k, y - a l), stored per lambda-sample.
OperatorField compute_H(const OperatorField& G, double a, const Family& f, Warnings* warn = nullptr);

// Multiply every slice by exp(pi i a l x).
OperatorField x_phase(const OperatorField& F, double a, int l);

// All 2N dual samples of a field: slices[j][r] is the symbol at t_r with parity +1 (j = 0) or -1 (j = 1).
struct DualOperatorField {
  RStarGrid grid;
  SymbolGrid zgrid;
  std::array<std::vector<Symbol>, 2> slices;
};

// Transform in lambda at every z-point, one dual bin at a time.
Symbol dual_slice(const OperatorField& F, int r, int parity_col);
DualOperatorField ft_field(const OperatorField& F);

DualOperatorField compute_g_klm(const OperatorField& G, double a, const Family& f, Warnings* warn = nullptr);
DualOperatorField compute_g_klm_via_H(const OperatorField& G, double a, const Family& f, Warnings* warn = nullptr);

struct WeightTable {
  RStarGrid grid;
  std::vector<Family> families;
  Eigen::MatrixXd w;  // families x M cell bins
  Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> omega;
  double support_rel = 1e-10;

  double nu(int r) const { return std::exp(grid.t(r)); }
  void update_support();
};

WeightTable weight_table(const OperatorField& G, const GaborParams& gp, double parity_weight = kParityWeight,
                         Warnings* warn = nullptr);
WeightTable constant_weight_table(const RStarGrid& g, const std::vector<Family>& fams, double value);

struct Coefficients {
  std::vector<Family> families;
  std::vector<int> shifts;
  Eigen::MatrixXcd alpha;  // families x shifts
};

// rho_f(r) = sum_p alpha_{f,p} exp(-2 pi i p r / M) on the M cell bins.
Eigen::MatrixXcd rho_map(const Coefficients& c, const RStarGrid& g);
double rho_norm2_w(const Eigen::MatrixXcd& rho, const WeightTable& W);
OperatorField synthesize(const Coefficients& c, const OperatorField& G, double a, Warnings* warn = nullptr);

}  // namespace hg
