#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>
#include <vector>

#include "fiwi/topology.hpp"

namespace fiwi {

struct PonError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Traffic entering/leaving the fiber at optical endpoints, frames/s.
/// Index 0 is the OLT, 1..O the ONUs. Entry (a,b) is traffic that enters the
/// PON at a and leaves it at b (ONU-to-ONU traffic relays through the OLT).
using PonFlowMatrix = Eigen::MatrixXd;

struct PonLoad {
  PonKind kind = PonKind::None;
  std::vector<double> rho_down;  // per sector (WR) or single entry
  std::vector<double> rho_up;
  Eigen::MatrixXd rho_cross;      // sector-to-sector upstream-to-downstream relays (WR)
  double inter_onu_intensity = 0.0;  // broadcast/TDM correction argument
  bool heterogeneous_rates = false;
};

struct PonStability {
  bool stable = true;
  std::string offender;  // e.g. "upstream sector 2"
};

struct PonDelayReport {
  std::vector<double> d_down_sector;          // uncorrected per-sector downstream
  std::vector<double> d_down_sector_corr;     // after insertion-buffer correction
  std::vector<double> b_down_sector;          // correction magnitudes
  std::vector<double> d_up_sector;
  double d_down = 0.0;  // intensity-weighted averages (downstream corrected)
  double d_up = 0.0;
  double b_down_applied = 0.0;  // audit: total correction folded into d_down
  bool heterogeneous_rates = false;
};

/// Pollaczek-Khintchine mean M/G/1 queueing delay at intensity rho on a
/// channel with rate c, for frames with the given moments.
double pk_phi(double rho, double rate_bps, double mean_bits, double var_bits2);

PonLoad wr_intensities(const PonFlowMatrix& flows, const FiberPlant& plant, double mean_bits);
PonLoad broadcast_intensities(const PonFlowMatrix& flows, const FiberPlant& plant,
                              double mean_bits);
PonLoad pon_intensities(const PonFlowMatrix& flows, const FiberPlant& plant, double mean_bits);

PonStability pon_stable(const PonLoad& load);

PonDelayReport wr_delays(const PonLoad& load, const FiberPlant& plant, double mean_bits,
                         double var_bits2);
PonDelayReport broadcast_delays(const PonLoad& load, const FiberPlant& plant, double mean_bits,
                                double var_bits2);
PonDelayReport pon_delays(const PonLoad& load, const FiberPlant& plant, double mean_bits,
                          double var_bits2);

}  // namespace fiwi
