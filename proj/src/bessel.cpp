#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "hg/analysis.hpp"
#include "hg/parallel.hpp"

namespace hg {

std::vector<int> bessel_residues(int P, int s_max) {
  std::set<int> r;
  for (int s = 1; s <= s_max; ++s) {
    if (s % P) r.insert(s % P);
    if ((P - s % P) % P) r.insert((P - s % P) % P);
  }
  return {r.begin(), r.end()};
}

namespace {

int strided_count(int Nz, int stride) { return (Nz + stride - 1) / stride; }

}  // namespace

double bessel_work(const OperatorField& G, const GaborParams& gp, int stride) {
  double nz2 = double(G.zgrid.Nz) * G.zgrid.Nz;
  double sub = std::pow(double(strided_count(G.zgrid.Nz, stride)), 2);
  return nz2 * sub * G.rgrid.N * 4.0 * double(gp.families().size());
}

double bessel_bound(double B1, double B2, double b) { return (2 * B1 + B2) / b; }

BesselResult bessel(const OperatorField& G, const GaborParams& gp, const BesselOptions& opt) {
  BesselResult res;
  res.stride = std::max(1, opt.stride);
  res.work = bessel_work(G, gp, res.stride);
  if (res.work > opt.budget && !opt.force) {
    std::ostringstream os;
    os << "alpha table needs ~" << res.work << " multiply-adds, budget is " << opt.budget
       << "; raise bessel_stride, lower Nz, or pass --force";
    throw resource_error(os.str());
  }
  const auto fams = gp.families();
  const int nf = int(fams.size());
  const auto& rg = G.rgrid;
  const auto& zg = G.zgrid;
  const int Z = zg.Nz * zg.Nz, N = rg.N;
  const double h2 = zg.cell();
  res.residues = bessel_residues(rg.P, gp.s_max);

  // |g_f(z, r, j)| with z flattened column-major, one matrix per family and parity
  std::vector<std::array<Eigen::MatrixXd, 2>> A(nf);
  std::vector<Eigen::Array2Xd> n2(nf);
  parallel_for(nf, [&](int f) {
    OperatorField MG = modulate(G, gp.a, fams[f]);
    n2[f].setZero(2, N);
    for (int c = 0; c < 2; ++c) {
      A[f][c].resize(Z, N);
      for (int r = 0; r < N; ++r) {
        Symbol d = dual_slice(MG, r, c);
        A[f][c].col(r) = Eigen::Map<const Eigen::VectorXcd>(d.data(), Z).cwiseAbs();
        n2[f](c, r) = h2 * d.squaredNorm();
      }
    }
  });

  Eigen::Array2Xd fam_sum = Eigen::Array2Xd::Zero(2, N);
  for (int f = 0; f < nf; ++f) fam_sum += opt.parity_weight * n2[f];
  res.B1_plus = fam_sum.row(0).maxCoeff();
  res.B1_minus = fam_sum.row(1).maxCoeff();
  res.B1 = std::max(res.B1_plus, res.B1_minus);

  // strided z' samples
  std::vector<int> zs;
  for (int iy = 0; iy < zg.Nz; iy += res.stride)
    for (int ix = 0; ix < zg.Nz; ix += res.stride) zs.push_back(ix + zg.Nz * iy);
  const int Zs = int(zs.size());

  // S_f[c'](z', r) = sum over residues s of |g_f(z', r + s M, j')|
  std::vector<std::array<Eigen::MatrixXd, 2>> S(nf);
  for (int f = 0; f < nf; ++f)
    for (int c = 0; c < 2; ++c) {
      S[f][c].setZero(Zs, N);
      for (int r = 0; r < N; ++r)
        for (int s : res.residues)
          for (int q = 0; q < Zs; ++q) S[f][c](q, r) += A[f][c](zs[q], (r + s * rg.M) % N);
    }

  Eigen::VectorXd row_sums = Eigen::VectorXd::Zero(Z);
  const int block = std::max(1, std::min(Z, int(4'000'000 / std::max(1, Zs))));
  const int nblocks = (Z + block - 1) / block;
  const double weight = opt.parity_weight * h2 * res.stride * res.stride;
  parallel_for(nblocks, [&](int bi) {
    int z0 = bi * block, zb = std::min(block, Z - z0);
    Eigen::MatrixXd alpha = Eigen::MatrixXd::Zero(zb, Zs);
    Eigen::MatrixXd X(zb, nf), Y(nf, Zs), best(zb, Zs);
    for (int c = 0; c < 2; ++c)
      for (int c2 = 0; c2 < 2; ++c2) {
        for (int r = 0; r < N; ++r) {
          for (int f = 0; f < nf; ++f) {
            X.col(f) = A[f][c].col(r).segment(z0, zb);
            Y.row(f) = S[f][c2].col(r).transpose();
          }
          if (r == 0)
            best.noalias() = X * Y;
          else
            best = best.cwiseMax(X * Y);
        }
        alpha += best;
      }
    row_sums.segment(z0, zb) = weight * alpha.rowwise().sum();
  });
  res.B2 = row_sums.maxCoeff();
  res.alpha_row_sums = Eigen::Map<Eigen::MatrixXd>(row_sums.data(), zg.Nz, zg.Nz);
  res.bound = bessel_bound(res.B1, res.B2, gp.b);
  return res;
}

}  // namespace hg
