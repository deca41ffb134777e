#pragma once

#include <array>
#include <string>

#include "hg/symbol.hpp"

namespace hg {

struct PresetSpec {
  std::string name = "gauss-gauss";  // gauss-gauss | cell-indicator | narrowband-rankone

  // gauss-gauss, narrowband-rankone
  double sigma_z = 1, z0x = 0, z0y = 0;
  double sigma_u = 1, u_center = 0;

  // cell-indicator; layout "box" or "ap3"
  std::string layout = "box";
  double cell_x0 = 0, cell_y0 = 0, cell_wx = 0.5, cell_wy = 0.5;
  double cell_eta = 0.1;
  double u_lo = -0.5, u_hi = 0.5, u_eta = 0;

  bool normalize = true;
};

// Three lambda-samples exp(q du), q in {-4, 0, 3}, whose values form an arithmetic progression:
// exp(du) solves 1 + x^7 = 2 x^4. With a = 1/(3 (lambda_1 - lambda_0)) the phases a*lambda are spaced
// by 1/3, so the m-index is orthogonalized by the lambda-sum.
struct Ap3Layout {
  double x = 0, delta_u = 0, a = 0;
  std::array<int, 3> steps{-4, 0, 3};
  std::array<double, 3> lambda{};
  std::array<std::array<double, 2>, 3> centers{{{-2.4, -1.8}, {2.9, -1.8}, {0.0, 1.8}}};
};

const Ap3Layout& ap3_layout();

// 1/2 [erf((x + w)/eta) - erf((x - w)/eta)], the sharp indicator of [-w, w] when eta = 0
double smoothed_box(double x, double w, double eta);

OperatorField make_window(const PresetSpec& ps, const RStarGrid& rg, const SymbolGrid& zg);

struct WindowMass {
  double u_outside = 0;  // fraction of |G|^2 outside the central half of the u-window
  double z_outside = 0;  // same for the z-window
};

WindowMass window_mass(const OperatorField& G);

}  // namespace hg
