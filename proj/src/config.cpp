#include "hg/config.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

namespace hg {

namespace {

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += "\n  - " + x;
  return s;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

const std::set<std::string> kKeys = {
    "preset", "layout", "normalize", "P", "M", "N", "b", "delta_u", "u0", "n", "Nz", "Lz", "Nxi", "Lxi", "a", "K",
    "L", "Mm", "p_max", "s_max", "sigma_z", "z0x", "z0y", "sigma_u", "u_center", "cell_x0", "cell_y0", "cell_wx",
    "cell_wy", "cell_eta", "u_lo", "u_hi", "u_eta", "tol_orth", "tol_class", "tol_oracle", "floor_rel",
    "support_rel", "parity_weight", "bessel_budget", "bessel_stride", "bessel_trials", "energy_trials",
    "gram_max_members", "seed", "out"};

class Reader {
 public:
  std::map<std::string, std::string> kv;
  std::vector<std::string> errors;

  bool has(const std::string& k) const { return kv.count(k) > 0; }

  template <class T>
  T get(const std::string& k, T fallback) {
    auto it = kv.find(k);
    if (it == kv.end()) return fallback;
    std::istringstream is(it->second);
    T v{};
    if constexpr (std::is_same_v<T, bool>) {
      if (it->second == "true" || it->second == "1") return true;
      if (it->second == "false" || it->second == "0") return false;
      errors.push_back(k + ": expected true or false, got '" + it->second + "'");
      return fallback;
    } else if constexpr (std::is_same_v<T, std::string>) {
      return it->second;
    } else {
      is >> v;
      std::string rest;
      if (is.fail() || (is >> rest)) {
        errors.push_back(k + ": cannot parse '" + it->second + "'");
        return fallback;
      }
      return v;
    }
  }
};

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

}  // namespace

config_error::config_error(std::vector<std::string> p)
    : std::runtime_error("invalid configuration:" + join(p)), problems(std::move(p)) {}

ExperimentConfig parse_config(const std::string& text) {
  Reader rd;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      rd.errors.push_back("line " + std::to_string(lineno) + ": expected 'key = value'");
      continue;
    }
    std::string k = trim(line.substr(0, eq)), v = trim(line.substr(eq + 1));
    if (!kKeys.count(k)) {
      rd.errors.push_back("line " + std::to_string(lineno) + ": unknown key '" + k + "'");
      continue;
    }
    if (rd.kv.count(k)) rd.errors.push_back("line " + std::to_string(lineno) + ": duplicate key '" + k + "'");
    rd.kv[k] = v;
  }

  ExperimentConfig c;
  auto& E = rd.errors;
  auto& ps = c.preset;
  if (!rd.has("preset"))
    E.push_back("preset: missing (one of gauss-gauss, cell-indicator, narrowband-rankone)");
  ps.name = rd.get<std::string>("preset", "");
  ps.layout = rd.get<std::string>("layout", "box");
  ps.normalize = rd.get<bool>("normalize", true);
  if (rd.has("preset") && ps.name != "gauss-gauss" && ps.name != "cell-indicator" && ps.name != "narrowband-rankone")
    E.push_back("preset: unknown '" + ps.name + "' (one of gauss-gauss, cell-indicator, narrowband-rankone)");
  if (ps.layout != "box" && ps.layout != "ap3") E.push_back("layout: must be box or ap3");
  const bool ap3 = ps.name == "cell-indicator" && ps.layout == "ap3";

  int P = rd.get<int>("P", 0), M = rd.get<int>("M", 0);
  if (!rd.has("P")) E.push_back("P: missing (integer steps per b, b = P * delta_u)");
  if (!rd.has("M")) E.push_back("M: missing (dual bins per period cell, N = M * P)");
  if (rd.has("P") && P < 1) E.push_back("P: must be >= 1");
  if (rd.has("M") && M < 2) E.push_back("M: must be >= 2");
  if (rd.has("N") && rd.get<int>("N", 0) != M * P)
    E.push_back("N: must equal M * P = " + std::to_string(M * P) + " (drop N or fix M, P)");
  if (P >= 1 && M >= 2 && (M * P) % 2) E.push_back("M * P must be even");

  double du = 0;
  const double du_ap3 = ap3_layout().delta_u;
  bool hb = rd.has("b"), hd = rd.has("delta_u");
  double b = rd.get<double>("b", 0), dd = rd.get<double>("delta_u", 0);
  if (hb && hd && P >= 1 && std::abs(b - P * dd) > 1e-12 * std::abs(b))
    E.push_back("b: must equal P * delta_u = " + fmt(P * dd) + " (give only one of b, delta_u)");
  if (hd)
    du = dd;
  else if (hb && P >= 1)
    du = b / P;
  else if (ap3)
    du = du_ap3;
  else
    E.push_back("b: missing (or give delta_u)");
  if ((hb || hd) && !(du > 0)) E.push_back("b, delta_u: must be positive");
  if (ap3 && du > 0 && std::abs(du - du_ap3) > 1e-12 * du_ap3 && P >= 1)
    E.push_back("b: ap3 layout needs delta_u = " + fmt(du_ap3) + ", i.e. b = " + fmt(P * du_ap3) +
                " (or omit b)");

  c.zgrid.n = rd.get<int>("n", 1);
  if (c.zgrid.n != 1) E.push_back("n: only n = 1 is implemented");
  c.zgrid.Nz = rd.get<int>("Nz", 64);
  c.zgrid.Lz = rd.get<double>("Lz", 8.0);
  if (c.zgrid.Nz < 2 || c.zgrid.Nz % 2) E.push_back("Nz: must be even and >= 2");
  if (!(c.zgrid.Lz > 0)) E.push_back("Lz: must be positive");
  c.xigrid.N = rd.get<int>("Nxi", 128);
  c.xigrid.L = rd.get<double>("Lxi", 8.0);
  if (c.xigrid.N < 2) E.push_back("Nxi: must be >= 2");
  if (!(c.xigrid.L > 0)) E.push_back("Lxi: must be positive");

  auto& gp = c.gabor;
  double a_ap3 = ap3_layout().a;
  gp.a = rd.get<double>("a", ap3 ? a_ap3 : 1.0);
  if (!(gp.a > 0)) E.push_back("a: must be positive");
  if (ap3 && std::abs(gp.a - a_ap3) > 1e-12 * a_ap3)
    E.push_back("a: ap3 layout needs a = " + fmt(a_ap3) + " (or omit a)");
  gp.K = rd.get<int>("K", 0);
  gp.L = rd.get<int>("L", 0);
  gp.Mm = rd.get<int>("Mm", 0);
  gp.p_max = rd.get<int>("p_max", 0);
  gp.s_max = rd.get<int>("s_max", std::max(P - 1, 0));
  if (gp.K < 0 || gp.L < 0 || gp.Mm < 0 || gp.p_max < 0) E.push_back("K, L, Mm, p_max: must be >= 0");
  if (gp.s_max < 0) E.push_back("s_max: must be >= 0");
  if (M >= 2 && 2 * gp.p_max + 1 > M)
    E.push_back("p_max: 2 * p_max + 1 must not exceed M = " + std::to_string(M) +
                " (larger p wrap around the cyclic lambda-axis and repeat members)");
  if (ap3 && gp.Mm > 1) E.push_back("Mm: the ap3 layout orthogonalizes |m| <= 1 only");
  if (ap3 && M * P < 16) E.push_back("M * P: the ap3 layout needs at least 16 lambda-samples");

  ps.sigma_z = rd.get<double>("sigma_z", 1.0);
  ps.z0x = rd.get<double>("z0x", 0.0);
  ps.z0y = rd.get<double>("z0y", 0.0);
  ps.sigma_u = rd.get<double>("sigma_u", 1.0);
  ps.u_center = rd.get<double>("u_center", 0.0);
  ps.cell_x0 = rd.get<double>("cell_x0", 0.0);
  ps.cell_y0 = rd.get<double>("cell_y0", 0.0);
  ps.cell_wx = rd.get<double>("cell_wx", ap3 ? 0.02 : 0.5);
  ps.cell_wy = rd.get<double>("cell_wy", ap3 ? 0.02 : 0.5);
  ps.cell_eta = rd.get<double>("cell_eta", ap3 ? 0.17 : 0.1);
  ps.u_lo = rd.get<double>("u_lo", -0.5);
  ps.u_hi = rd.get<double>("u_hi", 0.5);
  ps.u_eta = rd.get<double>("u_eta", 0.0);
  if (!(ps.sigma_z > 0) || !(ps.sigma_u > 0)) E.push_back("sigma_z, sigma_u: must be positive");
  if (ps.cell_wx < 0 || ps.cell_wy < 0 || ps.cell_eta < 0 || ps.u_eta < 0)
    E.push_back("cell_wx, cell_wy, cell_eta, u_eta: must be >= 0");
  if (!(ps.u_hi > ps.u_lo)) E.push_back("u_hi: must exceed u_lo");

  c.tol_orth = rd.get<double>("tol_orth", c.tol_orth);
  c.tol_class = rd.get<double>("tol_class", c.tol_class);
  c.tol_oracle = rd.get<double>("tol_oracle", c.tol_oracle);
  c.floor_rel = rd.get<double>("floor_rel", c.floor_rel);
  c.support_rel = rd.get<double>("support_rel", c.support_rel);
  for (double t : {c.tol_orth, c.tol_class, c.tol_oracle, c.floor_rel, c.support_rel})
    if (!(t > 0)) {
      E.push_back("tol_orth, tol_class, tol_oracle, floor_rel, support_rel: must be positive");
      break;
    }
  c.parity_weight = rd.get<double>("parity_weight", kParityWeight);
  if (c.parity_weight != 0.5 && c.parity_weight != 1.0) E.push_back("parity_weight: must be 0.5 or 1");

  c.bessel.budget = rd.get<double>("bessel_budget", c.bessel.budget);
  c.bessel.stride = rd.get<int>("bessel_stride", 1);
  c.bessel.parity_weight = c.parity_weight;
  c.bessel_trials = rd.get<int>("bessel_trials", c.bessel_trials);
  c.energy_trials = rd.get<int>("energy_trials", c.energy_trials);
  c.gram_max_members = rd.get<int>("gram_max_members", c.gram_max_members);
  if (c.bessel.stride < 1) E.push_back("bessel_stride: must be >= 1");
  if (c.bessel_trials < 1 || c.energy_trials < 1) E.push_back("bessel_trials, energy_trials: must be >= 1");
  c.seed = rd.get<std::uint64_t>("seed", 0);
  c.out = rd.get<std::string>("out", "out");

  if (E.empty()) {
    try {
      c.rgrid = RStarGrid::centered(du, P, M);
      if (rd.has("u0")) {
        c.rgrid.u0 = rd.get<double>("u0", 0.0);
        if (!c.rgrid.offset_steps())
          E.push_back("u0: must be an integer multiple of delta_u = " + fmt(du) + " (lattice shifts stay on-grid)");
      }
      c.rgrid.validate();
    } catch (const grid_error& e) {
      E.push_back(e.what());
    }
    gp.b = c.rgrid.b();
  }
  if (!E.empty()) throw config_error(E);

  c.resolved = rd.kv;
  c.resolved["delta_u"] = fmt(c.rgrid.delta_u);
  c.resolved["b"] = fmt(c.rgrid.b());
  c.resolved["a"] = fmt(gp.a);
  c.resolved["N"] = std::to_string(c.rgrid.N);
  c.resolved["u0"] = fmt(c.rgrid.u0);
  c.resolved["s_max"] = std::to_string(gp.s_max);
  c.resolved["parity_weight"] = fmt(c.parity_weight);
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw config_error({"cannot open config file '" + path + "'"});
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str());
}

ExperimentConfig default_config() {
  return parse_config("preset = gauss-gauss\nP = 8\nM = 128\ndelta_u = 0.02\nNz = 64\nLz = 8\n");
}

}  // namespace hg
