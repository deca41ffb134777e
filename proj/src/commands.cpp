#include "hg/commands.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "hg/parallel.hpp"

namespace hg {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

class Csv {
 public:
  Csv(const std::string& path, const char* header) : f_(std::fopen(path.c_str(), "w")) {
    if (!f_) throw std::runtime_error("cannot write " + path);
    std::fprintf(f_, "%s\n", header);
  }
  ~Csv() { std::fclose(f_); }
  Csv(const Csv&) = delete;
  Csv& operator=(const Csv&) = delete;

  template <class... T>
  void row(const char* fmt, T... v) {
    std::fprintf(f_, fmt, v...);
  }

 private:
  std::FILE* f_;
};

json warnings_json(const Warnings& w) {
  json out = json::array();
  for (const auto& [code, e] : w.items)
    out.push_back({{"code", code}, {"message", e.message}, {"count", e.count}, {"value", e.worst}});
  return out;
}

json grid_json(const ExperimentConfig& c) {
  const auto& g = c.rgrid;
  return {{"N", g.N},
          {"P", g.P},
          {"M", g.M},
          {"delta_u", g.delta_u},
          {"b", g.b()},
          {"u0", g.u0},
          {"dt", g.dt()},
          {"n", c.zgrid.n},
          {"Nz", c.zgrid.Nz},
          {"Lz", c.zgrid.Lz},
          {"parity_weight", c.parity_weight}};
}

json base_report(const std::string& command, const ExperimentConfig& c) {
  json r;
  r["schema_version"] = kSchemaVersion;
  r["command"] = command;
  r["seed"] = c.seed;
  r["config"] = c.resolved;
  return r;
}

void finish(Outcome& o, const Warnings& w, const ExperimentConfig& c) {
  o.report["warnings"] = warnings_json(w);
  o.report["exit_code"] = o.exit_code;
  fs::create_directories(c.out);
  std::ofstream(fs::path(c.out) / "report.json") << o.report.dump(2) << "\n";
}

double rel_max(const Eigen::ArrayX2cd& a, const Eigen::ArrayX2cd& b) {
  double s = std::max(a.abs().maxCoeff(), b.abs().maxCoeff());
  return s == 0 ? 0.0 : (a - b).abs().maxCoeff() / s;
}

ScalarField random_band_limited(const RStarGrid& g, std::mt19937_64& rng, int band) {
  std::normal_distribution<double> n;
  ScalarField f(g);
  for (int s = 0; s < 2; ++s) {
    Eigen::VectorXcd c(2 * band - 1);
    for (auto& x : c) x = {n(rng), n(rng)};
    for (int i = 0; i < g.N; ++i) {
      cplx acc = 0;
      for (int k = -(band - 1); k < band; ++k) acc += c[k + band - 1] * std::polar(1.0, 2 * pi * k * double(i) / g.N);
      f.v(i, s) = acc;
    }
  }
  return f;
}

Symbol random_gaussian_symbol(const SymbolGrid& zg, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> c(-1.0, 1.0), w(1.2, 1.6), fr(-0.2, 0.2);
  double x0 = c(rng), y0 = c(rng), s = w(rng), fx = fr(rng), fy = fr(rng);
  Symbol g(zg.Nz, zg.Nz);
  for (int i = 0; i < zg.Nz; ++i)
    for (int j = 0; j < zg.Nz; ++j) {
      double x = zg.x(i), y = zg.x(j);
      g(i, j) = std::exp(-pi * ((x - x0) * (x - x0) + (y - y0) * (y - y0)) / (s * s)) *
                std::polar(1.0, 2 * pi * (fx * x + fy * y));
    }
  return g;
}

Coefficients random_coefficients(const GaborParams& gp, std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  Coefficients c{gp.families(), gp.shifts(), Eigen::MatrixXcd(gp.families().size(), gp.shifts().size())};
  for (Eigen::Index i = 0; i < c.alpha.size(); ++i) c.alpha(i) = {n(rng), n(rng)};
  return c;
}

struct Check {
  std::string name;
  double residual;
  double tolerance;
};

json window_json(const OperatorField& G, Warnings& w) {
  auto m = window_mass(G);
  if (m.u_outside > 1e-6)
    w.add("boundary_mass", "more than 1e-6 of the window mass lies outside the central half of the u-window",
          m.u_outside);
  if (m.z_outside > 1e-6)
    w.add("boundary_mass", "more than 1e-6 of the window mass lies outside the central half of the z-window",
          m.z_outside);
  return {{"norm2", G.norm2()}, {"u_outside_central_half", m.u_outside}, {"z_outside_central_half", m.z_outside}};
}

json bounds_json(const Bounds& b) {
  if (!b.defined) return {{"defined", false}};
  return {{"defined", true}, {"A", b.A}, {"B", b.B}};
}

json gram_json(const GramSummary& s) {
  return {{"size", s.size},
          {"hermitian_residual", s.hermitian_residual},
          {"diagonal_deviation", s.diagonal_deviation},
          {"same_family_formula_error", s.same_family_error},
          {"cross_family_max", s.cross_family_max},
          {"formula_distance_frobenius", s.formula_distance},
          {"eig_min", s.eig_min},
          {"eig_max", s.eig_max},
          {"eig_min_nonzero", s.eig_min_nonzero},
          {"rank", s.rank},
          {"rank_threshold", s.rank_threshold},
          {"truncation_allowance", s.truncation_allowance},
          {"note", "errors relative to |G|^2; rank counts eigenvalues above 1e-8 * max |eigenvalue|"}};
}

void check_members(const ExperimentConfig& cfg, bool force) {
  auto n = members(cfg.gabor).size();
  if (n > std::size_t(cfg.gram_max_members) && !force)
    throw resource_error("index box has " + std::to_string(n) + " members, gram_max_members is " +
                         std::to_string(cfg.gram_max_members) + "; shrink the box or pass --force");
}

// Gram oracle, its w-formula and spectral summary, with CSV output.
GramSummary gram_block(const ExperimentConfig& cfg, const OperatorField& G, const WeightTable& W, const Bounds& fb,
                       Warnings& warn, json& report) {
  auto gm = gram_matrix(G, cfg.gabor, &warn);
  auto s = summarize_gram(gm, gram_from_w(W, gm.index), G.norm2(), fb);
  report["gram"] = gram_json(s);
  if (s.truncation_allowance > cfg.tol_oracle)
    warn.add("truncation_allowance", "Gram spectrum differs from the w-predicted bounds by more than tol_oracle",
             s.truncation_allowance);
  write_gram_csv((fs::path(cfg.out) / "gram.csv").string(), gm.M);
  write_eigs_csv((fs::path(cfg.out) / "gram_eigs.csv").string(), s.eigs);
  Csv idx((fs::path(cfg.out) / "gram_index.csv").string(), "i,k,l,m,p");
  for (std::size_t i = 0; i < gm.index.size(); ++i) {
    const auto& m = gm.index[i];
    idx.row("%zu,%d,%d,%d,%d\n", i, m.f.k, m.f.l, m.f.m, m.p);
  }
  return s;
}

}  // namespace

void write_field_csv(const std::string& path, const ScalarField& f) {
  Csv c(path, "sheet,u,re,im");
  for (int s = 0; s < 2; ++s)
    for (int i = 0; i < f.grid.N; ++i)
      c.row("%d,%.17g,%.17g,%.17g\n", sheet_sign(s), f.grid.u(i), f.v(i, s).real(), f.v(i, s).imag());
}

void write_weight_csv(const std::string& path, const WeightTable& W) {
  Csv c(path, "k,l,m,bin,nu,w,in_omega");
  for (std::size_t f = 0; f < W.families.size(); ++f)
    for (int r = 0; r < W.grid.M; ++r) {
      const auto& fa = W.families[f];
      c.row("%d,%d,%d,%d,%.17g,%.17g,%d\n", fa.k, fa.l, fa.m, r, W.nu(r), W.w(f, r), int(W.omega(f, r)));
    }
}

void write_gram_csv(const std::string& path, const Eigen::MatrixXcd& M) {
  Csv c(path, "i,j,re,im");
  for (Eigen::Index i = 0; i < M.rows(); ++i)
    for (Eigen::Index j = 0; j < M.cols(); ++j) c.row("%ld,%ld,%.17g,%.17g\n", long(i), long(j), M(i, j).real(), M(i, j).imag());
}

void write_eigs_csv(const std::string& path, const Eigen::VectorXd& e) {
  Csv c(path, "index,eigenvalue");
  for (Eigen::Index i = 0; i < e.size(); ++i) c.row("%ld,%.17g\n", long(i), e[i]);
}

void write_coefficients_csv(const std::string& path, const Coefficients& co) {
  Csv c(path, "k,l,m,p,re,im");
  for (std::size_t f = 0; f < co.families.size(); ++f)
    for (std::size_t q = 0; q < co.shifts.size(); ++q) {
      const auto& fa = co.families[f];
      c.row("%d,%d,%d,%d,%.17g,%.17g\n", fa.k, fa.l, fa.m, co.shifts[q], co.alpha(f, q).real(), co.alpha(f, q).imag());
    }
}

Outcome run_selftest(const ExperimentConfig& cfg) {
  Outcome o;
  o.report = base_report("selftest", cfg);
  Warnings warn;
  std::mt19937_64 rng(cfg.seed);
  const double pw = cfg.parity_weight;
  std::vector<Check> checks;

  const auto g = RStarGrid::centered(0.02, 8, 128);
  std::vector<ScalarField> fields;
  for (int t = 0; t < 20; ++t) fields.push_back(random_band_limited(g, rng, 60));
  ScalarField gauss(g);
  for (int i = 0; i < g.N; ++i) gauss.v(i, 0) = std::exp(-pi * g.u(i) * g.u(i));
  fields.push_back(gauss);

  double planch = 0, inv = 0, conv = 0, trans = 0, invol = 0, lin = 0;
  for (std::size_t t = 0; t < fields.size(); ++t) {
    const auto& f = fields[t];
    const auto& h = fields[(t + 1) % fields.size()];
    auto F = ft_rstar(f), H = ft_rstar(h);
    double nf = norm2_rstar(f), nh = norm2_rstar(h);
    planch = std::max(planch, std::abs(nf - dual_norm2(F, pw)) / nf);
    planch = std::max(planch, std::abs(inner_product_rstar(f, h) - dual_inner(F, H, pw)) / std::sqrt(nf * nh));
    inv = std::max(inv, rel_max(ift_rstar(F, pw).v, f.v));
    Eigen::ArrayX2cd prod = F.v * H.v;
    conv = std::max(conv, rel_max(ft_rstar(convolve_rstar(f, h)).v, prod));
    Eigen::ArrayX2cd ph(g.N, 2);
    for (int r = 0; r < g.N; ++r) ph.row(r).setConstant(std::polar(1.0, -2 * pi * g.b() * g.t(r)));
    trans = std::max(trans, rel_max(ft_rstar(translate_rstar(f, g.P)).v, ph * F.v));
    invol = std::max(invol, rel_max(ft_rstar(involution_rstar(f)).v, F.v.conjugate()));
    ScalarField comb(g);
    comb.v = cplx(0.5, -2) * f.v + cplx(1.5, 0.25) * h.v;
    lin = std::max(lin, rel_max(ft_rstar(comb).v, cplx(0.5, -2) * F.v + cplx(1.5, 0.25) * H.v));
  }
  double ratio = dual_norm2(ft_rstar(gauss), pw) / norm2_rstar(gauss);
  checks.push_back({"plancherel", planch, 1e-10});
  checks.push_back({"plancherel_positive_sheet_ratio_minus_one", std::abs(ratio - 1), 1e-10});
  checks.push_back({"inversion", inv, 1e-10});
  checks.push_back({"convolution", conv, 1e-10});
  checks.push_back({"translation", trans, 1e-10});
  checks.push_back({"involution", invol, 1e-10});
  checks.push_back({"linearity", lin, 1e-10});

  const SymbolGrid zg{1, 64, 8};
  const XiGrid xg{128, 8};
  std::uniform_real_distribution<double> sh(-1.0, 1.0);
  std::uniform_int_distribution<int> ix(-12, 12), iy(-20, 20);
  double hs = 0, tr = 0, tt = 0, gl = 0;
  for (int t = 0; t < 10; ++t) {
    auto a = random_gaussian_symbol(zg, rng), b = random_gaussian_symbol(zg, rng);
    auto Wa = weyl_matrix(a, zg, xg), Wb = weyl_matrix(b, zg, xg);
    double scale = std::sqrt(hs_norm2(a, zg) * hs_norm2(b, zg));
    hs = std::max(hs, std::abs(hs_inner(a, b, zg) - (Wa.array() * Wb.array().conjugate()).sum()) / scale);
    double wx = sh(rng), wy = sh(rng);
    cplx mt = (pi_matrix(xg, 1.0, {wx, wy, 0}) * Wa).trace();
    tr = std::max(tr, std::abs(trace_pi_weyl(a, zg, wx, wy) - mt) / a.cwiseAbs().maxCoeff());
    double u = sh(rng), v = sh(rng);
    Eigen::MatrixXcd lhs = pi_matrix(xg, 1.0, {u, v, 0}) * Wa;
    Eigen::MatrixXcd rhs = weyl_matrix(twisted_translate(a, zg, u, v), zg, xg);
    tt = std::max(tt, (lhs - rhs).norm() / rhs.norm());
    HPoint g1{ix(rng) / (2 * xg.L), iy(rng) * xg.d(), sh(rng)};
    HPoint g2{ix(rng) / (2 * xg.L), iy(rng) * xg.d(), sh(rng)};
    Eigen::MatrixXcd pp = pi_matrix(xg, 1.0, g1) * pi_matrix(xg, 1.0, g2);
    gl = std::max(gl, (pp - pi_matrix(xg, 1.0, g1 * g2)).cwiseAbs().maxCoeff());
  }
  checks.push_back({"weyl_hs_vs_frobenius", hs, 1e-3});
  checks.push_back({"weyl_trace_vs_matrix", tr, 1e-3});
  checks.push_back({"twisted_translate_vs_matrix_product", tt, 1e-3});
  checks.push_back({"pi_group_law", gl, 1e-8});

  json arr = json::array();
  bool all = true;
  for (const auto& c : checks) {
    bool pass = c.residual <= c.tolerance;
    all = all && pass;
    arr.push_back({{"name", c.name}, {"residual", c.residual}, {"tolerance", c.tolerance}, {"pass", pass}});
  }
  o.report["parity_weight"] = pw;
  o.report["plancherel_positive_sheet_ratio"] = ratio;
  o.report["checks"] = arr;
  o.report["all_pass"] = all;
  o.report["status"] = all ? "ok" : "failed";
  o.exit_code = all ? kExitOk : kExitUsage;
  fs::create_directories(cfg.out);
  write_field_csv((fs::path(cfg.out) / "field.csv").string(), gauss);
  finish(o, warn, cfg);
  return o;
}

Outcome run_analyze(const ExperimentConfig& cfg, bool force) {
  Outcome o;
  o.report = base_report("analyze", cfg);
  Warnings warn;
  fs::create_directories(cfg.out);
  o.report["grid"] = grid_json(cfg);
  const auto& gp = cfg.gabor;
  o.report["box"] = {{"K", gp.K}, {"L", gp.L}, {"Mm", gp.Mm}, {"p_max", gp.p_max}, {"members", members(gp).size()}};

  auto G = make_window(cfg.preset, cfg.rgrid, cfg.zgrid);
  o.report["window"] = window_json(G, warn);

  auto W = weight_table(G, gp, cfg.parity_weight, &warn);
  W.support_rel = cfg.support_rel;
  W.update_support();
  write_weight_csv((fs::path(cfg.out) / "w_table.csv").string(), W);
  double G2 = G.norm2(), mass_err = 0;
  for (Eigen::Index f = 0; f < W.w.rows(); ++f)
    mass_err = std::max(mass_err, std::abs(cfg.rgrid.dt() * W.w.row(f).sum() - G2) / (G2 > 0 ? G2 : 1));
  o.report["weights"] = {{"total_mass_max_rel_error", mass_err},
                         {"w_min", W.w.minCoeff()},
                         {"w_max", W.w.maxCoeff()},
                         {"omega_bins", W.omega.count()},
                         {"support_rel", W.support_rel}};

  auto res = orthogonality_residual(G, gp, cfg.floor_rel, &warn);
  bool holds = res.value < cfg.tol_orth;
  o.report["hypothesis"] = {
      {"residual", res.value}, {"floor", res.floor}, {"pairs", res.pairs}, {"tolerance", cfg.tol_orth}, {"holds", holds}};

  Bounds fb;
  if (holds) {
    auto c = classify(W, gp.b, cfg.tol_class);
    fb = c.frame_bounds;
    o.report["classification"] = {{"tolerance", cfg.tol_class},
                                  {"orthonormal", {{"value", c.orthonormal.value}, {"residual", c.orthonormal.residual}}},
                                  {"parseval_sequence", {{"value", c.parseval.value}, {"residual", c.parseval.residual}}},
                                  {"frame_sequence", c.frame},
                                  {"riesz_sequence", c.riesz},
                                  {"frame_bounds", bounds_json(c.frame_bounds)},
                                  {"riesz_bounds", bounds_json(c.riesz_bounds)}};
  } else {
    warn.add("hypothesis_violated", "dual symbols of distinct (k,l,m) are not orthogonal; classification suppressed",
             res.value);
    o.report["classification"] = nullptr;
    o.exit_code = kExitHypothesis;
  }

  if (members(gp).size() <= std::size_t(cfg.gram_max_members) || force) gram_block(cfg, G, W, fb, warn, o.report);

  if (holds) {
    std::mt19937_64 rng(cfg.seed);
    double iso = 0, energy = 0;
    Coefficients first;
    for (int t = 0; t < cfg.energy_trials; ++t) {
      auto co = random_coefficients(gp, rng);
      if (t == 0) first = co;
      auto F = synthesize(co, G, gp.a);
      double F2 = F.norm2();
      auto rho = rho_map(co, cfg.rgrid);
      iso = std::max(iso, std::abs(F2 - rho_norm2_w(rho, W)) / F2);
      auto d = analysis_energy(F, G, gp);
      auto e = energy_from_rho(rho, W);
      energy = std::max(energy, (d - e).cwiseAbs().maxCoeff() / d.cwiseAbs().maxCoeff());
    }
    write_coefficients_csv((fs::path(cfg.out) / "coefficients.csv").string(), first);
    o.report["coefficients"] = {{"trials", cfg.energy_trials},
                                {"isometry_max_rel_error", iso},
                                {"energy_two_route_max_rel_error", energy},
                                {"csv", "coefficients.csv holds the first trial"}};
  }
  o.report["status"] = holds ? "ok" : "hypothesis-violated";
  finish(o, warn, cfg);
  return o;
}

Outcome run_gram(const ExperimentConfig& cfg, bool force) {
  Outcome o;
  o.report = base_report("gram", cfg);
  Warnings warn;
  fs::create_directories(cfg.out);
  o.report["grid"] = grid_json(cfg);
  check_members(cfg, force);
  auto G = make_window(cfg.preset, cfg.rgrid, cfg.zgrid);
  o.report["window"] = window_json(G, warn);
  auto W = weight_table(G, cfg.gabor, cfg.parity_weight, &warn);
  W.support_rel = cfg.support_rel;
  W.update_support();
  gram_block(cfg, G, W, frame_bounds_from_w(W, cfg.gabor.b), warn, o.report);
  o.report["status"] = "ok";
  finish(o, warn, cfg);
  return o;
}

Outcome run_bessel(const ExperimentConfig& cfg, bool force) {
  Outcome o;
  o.report = base_report("bessel", cfg);
  Warnings warn;
  fs::create_directories(cfg.out);
  o.report["grid"] = grid_json(cfg);
  const auto& gp = cfg.gabor;
  auto G = make_window(cfg.preset, cfg.rgrid, cfg.zgrid);
  o.report["window"] = window_json(G, warn);
  auto opt = cfg.bessel;
  opt.force = force;
  BesselResult br;
  try {
    br = bessel(G, gp, opt);
  } catch (const resource_error& e) {
    o.exit_code = kExitResource;
    o.report["status"] = "resource-guard";
    o.report["error"] = e.what();
    o.report["work"] = bessel_work(G, gp, opt.stride);
    o.report["budget"] = opt.budget;
    finish(o, warn, cfg);
    return o;
  }
  {
    Csv c((fs::path(cfg.out) / "alpha_summary.csv").string(), "ix,iy,x,y,alpha_l1");
    for (int i = 0; i < cfg.zgrid.Nz; ++i)
      for (int j = 0; j < cfg.zgrid.Nz; ++j)
        c.row("%d,%d,%.17g,%.17g,%.17g\n", i, j, cfg.zgrid.x(i), cfg.zgrid.x(j), br.alpha_row_sums(i, j));
  }
  std::mt19937_64 rng(cfg.seed);
  double worst = 0;
  int violations = 0;
  for (int t = 0; t < cfg.bessel_trials; ++t) {
    auto F = synthesize(random_coefficients(gp, rng), G, gp.a);
    double r = analysis_energy(F, G, gp).sum() / F.norm2();
    worst = std::max(worst, r);
    if (r > br.bound) ++violations;
  }
  o.report["bessel"] = {{"B1", br.B1},
                        {"B1_parity_plus", br.B1_plus},
                        {"B1_parity_minus", br.B1_minus},
                        {"B2", br.B2},
                        {"bound", br.bound},
                        {"bound_formula", "(2 B1 + B2) / b, assembled from the proof chain"},
                        {"z_stride", br.stride},
                        {"s_residues", br.residues},
                        {"work", br.work}};
  o.report["empirical"] = {{"trials", cfg.bessel_trials},
                           {"max_ratio", worst},
                           {"max_ratio_over_bound", br.bound > 0 ? worst / br.bound : 0.0},
                           {"violations", violations}};
  o.report["status"] = "ok";
  finish(o, warn, cfg);
  return o;
}

int run_cli(const CliOptions& opt, std::ostream& console, std::ostream& errors) {
  set_threads(opt.threads);
  ExperimentConfig cfg;
  try {
    if (opt.config)
      cfg = load_config(*opt.config);
    else if (opt.command == "selftest")
      cfg = default_config();
    else {
      errors << "error: " << opt.command << " needs --config <path>\n";
      return kExitUsage;
    }
  } catch (const config_error& e) {
    errors << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (opt.out) cfg.out = *opt.out;
  if (opt.seed) cfg.seed = *opt.seed;
  cfg.resolved["out"] = cfg.out;
  cfg.resolved["seed"] = std::to_string(cfg.seed);

  Outcome o;
  try {
    if (opt.command == "selftest")
      o = run_selftest(cfg);
    else if (opt.command == "analyze")
      o = run_analyze(cfg, opt.force);
    else if (opt.command == "gram")
      o = run_gram(cfg, opt.force);
    else if (opt.command == "bessel")
      o = run_bessel(cfg, opt.force);
    else {
      errors << "error: unknown command '" << opt.command << "'\n";
      return kExitUsage;
    }
  } catch (const resource_error& e) {
    errors << "resource guard: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    errors << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const auto& r = o.report;
  console << opt.command << ": " << r.value("status", r.value("all_pass", false) ? "ok" : "failed") << "\n";
  if (r.contains("checks"))
    for (const auto& c : r["checks"])
      console << "  " << (c["pass"].get<bool>() ? "pass " : "FAIL ") << c["name"].get<std::string>() << "  "
              << c["residual"].get<double>() << "\n";
  if (r.contains("error")) console << "  " << r["error"].get<std::string>() << "\n";
  if (r.contains("hypothesis"))
    console << "  orthogonality residual " << r["hypothesis"]["residual"].get<double>() << "\n";
  if (r.contains("classification") && !r["classification"].is_null()) {
    const auto& c = r["classification"];
    console << "  orthonormal " << c["orthonormal"]["value"] << "  parseval " << c["parseval_sequence"]["value"]
            << "  frame " << c["frame_sequence"] << "  riesz " << c["riesz_sequence"] << "\n";
    if (c["frame_bounds"]["defined"].get<bool>())
      console << "  frame bounds " << c["frame_bounds"]["A"] << " " << c["frame_bounds"]["B"] << "\n";
  }
  if (r.contains("gram"))
    console << "  gram " << r["gram"]["size"] << " members, eigenvalues [" << r["gram"]["eig_min"] << ", "
            << r["gram"]["eig_max"] << "]\n";
  if (r.contains("bessel"))
    console << "  B1 " << r["bessel"]["B1"] << "  B2 " << r["bessel"]["B2"] << "  bound " << r["bessel"]["bound"]
            << "\n";
  for (const auto& w : r["warnings"]) console << "  warning " << w["code"].get<std::string>() << "\n";
  console << "  report: " << (fs::path(cfg.out) / "report.json").string() << "\n";
  return o.exit_code;
}

}  // namespace hg
