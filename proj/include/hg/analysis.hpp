#pragma once

#include <stdexcept>
#include <vector>

#include "hg/gabor.hpp"

namespace hg {

struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Residual {
  double value = 0;
  double floor = 0;
  long pairs = 0;
};

// max over dual bins and family pairs of |<g_f, g_f'>| / (|g_f| |g_f'| + floor),
// floor = floor_rel * max |g_f|^2 over bins and families
Residual orthogonality_residual(const OperatorField& G, const GaborParams& gp, double floor_rel = 1e-6,
                                Warnings* warn = nullptr);

struct Flag {
  bool value = false;
  double residual = 0;  // max |w - b| / b over the bins that decide the flag
};

struct Bounds {
  double A = 0, B = 0;
  bool defined = false;
};

Flag classify_orthonormal(const WeightTable& W, double b, double tol);
Flag classify_parseval(const WeightTable& W, double b, double tol);
Bounds frame_bounds_from_w(const WeightTable& W, double b);
Bounds riesz_bounds_from_w(const WeightTable& W, double b);

struct Classification {
  Flag orthonormal, parseval;
  bool frame = false, riesz = false;
  Bounds frame_bounds, riesz_bounds;
};

Classification classify(const WeightTable& W, double b, double tol);

struct GramMatrix {
  std::vector<Member> index;
  Eigen::MatrixXcd M;
};

// Direct inner products <member_i, member_j> by quadrature in lambda and z.
GramMatrix gram_matrix(const OperatorField& G, const GaborParams& gp, Warnings* warn = nullptr);

// Entries predicted from w alone: same family -> sum_r dt w(r) exp(2 pi i (p' - p) r / M), else 0.
Eigen::MatrixXcd gram_from_w(const WeightTable& W, const std::vector<Member>& index);

struct GramSummary {
  int size = 0;
  double hermitian_residual = 0;   // max |M - M^*| / |G|^2
  double diagonal_deviation = 0;   // max |M_ii - |G|^2| / |G|^2
  double same_family_error = 0;    // max |M - M_w| / |G|^2 on same-family entries
  double cross_family_max = 0;     // max |M| / |G|^2 on cross-family entries
  double formula_distance = 0;     // |M - M_w|_F
  double rank_threshold = 0;
  int rank = 0;
  double eig_min = 0, eig_max = 0, eig_min_nonzero = 0;
  double formula_eig_min_nonzero = 0, formula_eig_max = 0;
  double truncation_allowance = 0;
  Eigen::VectorXd eigs;
};

GramSummary summarize_gram(const GramMatrix& gm, const Eigen::MatrixXcd& formula, double norm2_G,
                           const Bounds& frame_bounds, double rank_rel = 1e-8);

// <F, member> for every member of the box, in members(gp) order.
Eigen::VectorXcd analysis_coefficients(const OperatorField& F, const OperatorField& G, const GaborParams& gp);

// Per family: sum over the p-box of |<F, member>|^2.
Eigen::VectorXd analysis_energy(const OperatorField& F, const OperatorField& G, const GaborParams& gp);

// Per family: (1/b) sum_r dt |rho w|^2. Equals the direct route when the Fourier content of rho w lies in the p-box.
Eigen::VectorXd energy_from_rho(const Eigen::MatrixXcd& rho, const WeightTable& W);

struct BesselOptions {
  double budget = 2e9;
  int stride = 1;
  bool force = false;
  double parity_weight = kParityWeight;
};

struct BesselResult {
  double B1 = 0, B1_plus = 0, B1_minus = 0;
  double B2 = 0;
  double bound = 0;
  int stride = 1;
  double work = 0;
  std::vector<int> residues;  // s mod P used in the periodization
  Eigen::MatrixXd alpha_row_sums;  // h^2 sum_z' alpha(z, z') on the z-grid
};

std::vector<int> bessel_residues(int P, int s_max);
double bessel_work(const OperatorField& G, const GaborParams& gp, int stride);
double bessel_bound(double B1, double B2, double b);
BesselResult bessel(const OperatorField& G, const GaborParams& gp, const BesselOptions& opt = {});

}  // namespace hg
