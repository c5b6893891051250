#pragma once

#include <span>
#include <vector>

#include <Eigen/Core>

#include "jamsim/rng.hpp"
#include "jamsim/scenario.hpp"

namespace jamsim {

/// Inputs of the pilot-based MMSE estimate for one UE on one PRB.
struct EstimationParams
{
    int n_ant_per_ap = 1;
    double p_ue_prb = 0.0;    // UE power on this PRB (W)
    double p_j_prb = 0.0;     // jammer power on this PRB, 0 when not attacked (W)
    double sigma_w2 = 0.0;    // noise power per PRB (W)
    int pilot_length = 16;    // T
    bool common_z = false;
};

struct EstimatedChannel
{
    Eigen::VectorXcd h_hat;
    int pilot_length = 0;
};

/// MMSE channel estimate. Per AP j and antenna n:
///   h_hat = gamma_j T / (1 + gamma_j T) * (h + z),
///   z ~ CN(0, (sigma_w2 + p_j_prb * jammer_gain_j) / (p_ue_prb * T)).
/// `gamma_per_ap` is the per-AP pilot SNR p_ue_prb * sigma_h^2 / sigma_w2.
EstimatedChannel estimate_channel(const Eigen::VectorXcd& h_true, std::span<const double> gamma_per_ap,
                                  std::span<const double> jammer_gain_per_ap,
                                  const EstimationParams& params, Rng& rng);

/// Unit-norm MRC combiner g = h_hat^H / ||h_hat|| (returned as a column).
Eigen::VectorXcd mrc_combiner(const Eigen::VectorXcd& h_hat);

/// Post-combining SINR on one PRB. `h_jam` is null when the PRB is not attacked.
double sinr_per_prb(const Eigen::VectorXcd& h_true, const Eigen::VectorXcd* h_jam,
                    const Eigen::VectorXcd& g, double p_ue_prb, double p_j_prb, double sigma_w2);

/// Exponential effective SINR mapping, -beta ln(mean exp(-s/beta)).
double eesm(std::span<const double> sinr, double beta);

/// Gaussian tail function Q(x) = P(N(0,1) > x).
double q_function(double x);

/// Complex AWGN channel dispersion in bits^2.
double channel_dispersion(double sinr);

/// Normal-approximation block error rate of a `packet_bits` packet over
/// `n_effective_re` resource elements at effective SINR `sinr_eff`.
double bler(double sinr_eff, double n_effective_re, double packet_bits);

struct LinkBudget
{
    std::vector<double> sinr_per_prb;
    double sinr_eff = 0.0;
    int n_coded_re = 0;
    int n_effective_re = 0;
    double spectral_efficiency = 0.0;
    double bler = 1.0;
};

/// EESM plus BLER for one packet sent over the PRBs whose SINRs are given.
LinkBudget link_budget(std::vector<double> sinr_per_prb, const Numerology& numerology, double beta);

}  // namespace jamsim
