#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hg/analysis.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace hg;

namespace {

WeightTable synthetic(const RStarGrid& g, std::vector<double> row) {
  WeightTable W = constant_weight_table(g, {{0, 0, 0}}, 0.0);
  for (int r = 0; r < g.M; ++r) W.w(0, r) = row[r];
  W.update_support();
  return W;
}

}  // namespace

TEST_CASE("orthogonality residual trivial cases") {
  fixture::GaussGauss S;
  GaborParams one = S.gp;
  CHECK(orthogonality_residual(S.G, one).value == 0);
  GaborParams many{0.5, S.rg.b(), 1, 1, 0, 0, 1};
  CHECK(orthogonality_residual(OperatorField(S.rg, S.zg), many).value == 0);
  // overlapping gaussians are far from orthogonal
  CHECK(orthogonality_residual(S.G, many).value > 1e-3);
}

TEST_CASE("cells separated in y are orthogonal") {
  auto rg = RStarGrid::centered(0.1, 2, 16);
  SymbolGrid zg{1, 128, 8};
  PresetSpec ps;
  ps.name = "cell-indicator";
  ps.cell_wx = ps.cell_wy = 0.3;
  ps.cell_eta = 0.15;
  ps.u_lo = -0.15;
  ps.u_hi = 0.15;
  auto G = make_window(ps, rg, zg);
  GaborParams gp{2.0, rg.b(), 0, 1, 0, 0, 1};
  auto res = orthogonality_residual(G, gp);
  CHECK(res.value < 1e-10);
  // brute force: family slices are disjoint in the dual domain too
  auto g0 = compute_g_klm(G, gp.a, {0, -1, 0}), g1 = compute_g_klm(G, gp.a, {0, 0, 0});
  double worst = 0;
  for (int r = 0; r < rg.N; ++r) worst = std::max(worst, std::abs(hs_inner(g0.slices[0][r], g1.slices[0][r], zg)));
  CHECK(worst < 1e-12);
}

TEST_CASE("classification of synthetic tables") {
  auto g = RStarGrid::centered(0.1, 2, 8);
  double b = g.b();
  auto W = constant_weight_table(g, {{0, 0, 0}, {1, 0, 0}}, b);
  auto c = classify(W, b, 1e-9);
  CHECK(c.orthonormal.value);
  CHECK(c.orthonormal.residual == 0);
  CHECK(c.parseval.value);
  CHECK(c.frame);
  CHECK(c.riesz);
  CHECK(c.frame_bounds.A == 1.0);
  CHECK(c.frame_bounds.B == 1.0);
  CHECK(c.riesz_bounds.A == 1.0);
  CHECK(c.riesz_bounds.B == 1.0);

  auto W2 = constant_weight_table(g, {{0, 0, 0}}, 2 * b);
  auto c2 = classify(W2, b, 1e-9);
  CHECK_FALSE(c2.orthonormal.value);
  CHECK(c2.frame_bounds.A == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(c2.frame_bounds.B == doctest::Approx(2.0).epsilon(1e-15));

  auto Wh = synthetic(g, {b, b, b, b, 0, 0, 0, 0});
  auto ch = classify(Wh, b, 1e-9);
  CHECK(ch.parseval.value);
  CHECK_FALSE(ch.riesz);
  CHECK_FALSE(ch.orthonormal.value);
  CHECK(ch.riesz_bounds.A == 0.0);

  auto Wu = synthetic(g, {b, 3 * b, 2 * b, 1.5 * b, 2.5 * b, b, 3 * b, 2 * b});
  auto bu = frame_bounds_from_w(Wu, b);
  CHECK(bu.A == doctest::Approx(1.0));
  CHECK(bu.B == doctest::Approx(3.0));

  auto Wz = constant_weight_table(g, {{0, 0, 0}}, 0.0);
  CHECK_FALSE(frame_bounds_from_w(Wz, b).defined);
}

TEST_CASE("gram matrix on a single family matches w exactly") {
  fixture::GaussGauss S;
  auto gm = gram_matrix(S.G, S.gp);
  double G2 = S.G.norm2();
  CHECK((gm.M.diagonal().array() - G2).abs().maxCoeff() < 1e-10 * G2);
  CHECK((gm.M - gm.M.adjoint()).cwiseAbs().maxCoeff() < 1e-12 * G2);
  auto W = weight_table(S.G, S.gp);
  auto Mw = gram_from_w(W, gm.index);
  CHECK((gm.M - Mw).cwiseAbs().maxCoeff() < 1e-10 * G2);

  auto Z = gram_matrix(OperatorField(S.rg, S.zg), S.gp);
  CHECK(Z.M.cwiseAbs().maxCoeff() == 0);

  // w = b: b * integral of exp(2 pi i b (p' - p) log nu) over the cell is delta
  auto Wb = constant_weight_table(S.rg, {{0, 0, 0}}, S.rg.b());
  auto I = gram_from_w(Wb, gm.index);
  CHECK((I - Eigen::MatrixXcd::Identity(I.rows(), I.cols())).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("oracle agreement on the orthogonal cell preset") {
  fixture::Ap3 S;
  GaborParams gp = S.gp;
  gp.p_max = 1;
  CHECK(orthogonality_residual(S.G, gp).value < 1e-8);
  auto W = weight_table(S.G, gp);
  auto c = classify(W, gp.b, 1e-6);
  CHECK(c.orthonormal.value);
  auto gm = gram_matrix(S.G, gp);
  auto sm = summarize_gram(gm, gram_from_w(W, gm.index), S.G.norm2(), c.frame_bounds);
  CHECK(sm.same_family_error < 1e-6);
  CHECK(sm.cross_family_max < 1e-8);
  CHECK((gm.M - Eigen::MatrixXcd::Identity(gm.M.rows(), gm.M.cols())).cwiseAbs().maxCoeff() < 1e-6);
  CHECK(sm.eig_min_nonzero >= c.frame_bounds.A - sm.truncation_allowance);
  CHECK(sm.eig_max <= c.frame_bounds.B + sm.truncation_allowance);

  // one member: its energy against the box is its own norm
  Coefficients co{gp.families(), gp.shifts(), Eigen::MatrixXcd::Zero(27, 3)};
  co.alpha(13, 1) = 1;
  auto F = synthesize(co, S.G, gp.a);
  auto e = analysis_energy(F, S.G, gp);
  CHECK(std::abs(e.sum() - F.norm2()) < 1e-8);
  auto er = energy_from_rho(rho_map(co, S.rg), W);
  CHECK((e - er).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("energy identity on random coefficients") {
  fixture::Ap3 S;
  GaborParams gp{S.gp.a, S.gp.b, 1, 0, 1, 2, 1};
  auto W = weight_table(S.G, gp);
  std::mt19937_64 rng(17);
  std::normal_distribution<double> n;
  Coefficients co{gp.families(), gp.shifts(), Eigen::MatrixXcd(gp.families().size(), gp.shifts().size())};
  for (Eigen::Index i = 0; i < co.alpha.size(); ++i) co.alpha(i) = {n(rng), n(rng)};
  auto F = synthesize(co, S.G, gp.a);
  auto direct = analysis_energy(F, S.G, gp);
  auto formula = energy_from_rho(rho_map(co, S.rg), W);
  CHECK((direct - formula).cwiseAbs().maxCoeff() < 1e-6 * direct.maxCoeff());
  CHECK(analysis_energy(OperatorField(S.rg, S.zg), S.G, gp).cwiseAbs().maxCoeff() == 0);
}

TEST_CASE("bessel quantities") {
  CHECK(bessel_residues(4, 3) == std::vector<int>{1, 2, 3});
  CHECK(bessel_residues(4, 1) == std::vector<int>{1, 3});
  CHECK(bessel_residues(1, 5).empty());

  fixture::GaussGauss S;
  auto z = bessel(OperatorField(S.rg, S.zg), S.gp);
  CHECK(z.B1 == 0);
  CHECK(z.B2 == 0);
  CHECK(z.bound == 0);

  GaborParams one = S.gp;
  one.p_max = 0;
  auto br = bessel(S.G, one);
  CHECK(br.B1 > 0);
  CHECK(br.B2 < 1e-6 * br.B1);
  CHECK(std::abs(br.bound - 2 * br.B1 / one.b) < 1e-6 * br.bound);

  auto bb = bessel(S.G, S.gp);
  std::mt19937_64 rng(5);
  std::normal_distribution<double> n;
  Coefficients co{S.gp.families(), S.gp.shifts(), Eigen::MatrixXcd(1, S.gp.shifts().size())};
  double best = 0;
  for (int trial = 0; trial < 10; ++trial) {
    for (Eigen::Index i = 0; i < co.alpha.size(); ++i) co.alpha(i) = {n(rng), n(rng)};
    auto F = synthesize(co, S.G, S.gp.a);
    double ratio = analysis_energy(F, S.G, S.gp).sum() / F.norm2();
    CHECK(ratio <= bb.bound);
    best = std::max(best, ratio / bb.bound);
  }
  CHECK(best >= 0.1);

  BesselOptions tight;
  tight.budget = 10;
  CHECK_THROWS_AS(bessel(S.G, S.gp, tight), resource_error);
  tight.force = true;
  CHECK_NOTHROW(bessel(S.G, one, tight));
}
