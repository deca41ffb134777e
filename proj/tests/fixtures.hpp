#pragma once

#include "hg/gabor.hpp"
#include "hg/presets.hpp"

namespace fixture {

inline hg::PresetSpec ap3_spec() {
  hg::PresetSpec ps;
  ps.name = "cell-indicator";
  ps.layout = "ap3";
  ps.cell_wx = ps.cell_wy = 0.02;
  ps.cell_eta = 0.17;
  return ps;
}

struct Ap3 {
  hg::RStarGrid rg = hg::RStarGrid::centered(hg::ap3_layout().delta_u, 2, 8);
  hg::SymbolGrid zg{1, 256, 7};
  hg::OperatorField G = hg::make_window(ap3_spec(), rg, zg);
  hg::GaborParams gp{hg::ap3_layout().a, rg.b(), 1, 1, 1, 2, 1};
};

// Gaussian in z times a Gaussian in u wide enough that the dual mass sits inside one period cell.
struct GaussGauss {
  hg::RStarGrid rg = hg::RStarGrid::centered(0.05, 2, 64);
  hg::SymbolGrid zg{1, 32, 4};
  hg::OperatorField G;
  hg::GaborParams gp{0.5, rg.b(), 0, 0, 0, 3, 1};

  GaussGauss() : G(rg, zg) {
    hg::PresetSpec ps;
    ps.sigma_u = 0.7;
    G = hg::make_window(ps, rg, zg);
  }
};

}  // namespace fixture
