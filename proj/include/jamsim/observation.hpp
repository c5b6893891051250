#pragma once

#include <vector>

#include <Eigen/Core>

#include "jamsim/detect.hpp"
#include "jamsim/rng.hpp"

namespace jamsim {

/// Content of the blanked REs of one slot: white noise on every RE plus a
/// Gaussian jammer on the blanked PRBs it attacks. The jammer's per-PRB
/// channel is constant over the PRB's REs.
struct BlankedScene
{
    int n_ant = 1;
    int n_re_per_prb = 168;
    int n_blanked = 1;
    double noise_var_per_re = 1.0;
    double jammer_power_per_re = 0.0;
    std::vector<const Eigen::VectorXcd*> jammed_channels;  // one per blanked & attacked PRB

    long n_re() const { return static_cast<long>(n_blanked) * n_re_per_prb; }
};

/// Raw samples R (n_ant x n_re).
BlankedObservation synthesize_samples(const BlankedScene& scene, Rng& rng);

/// Draws R R^H directly with the same distribution as SampleCovariance::from
/// applied to synthesize_samples: a Bartlett-factor white Wishart for the
/// noise-only dimensions plus one rank-one term per attacked PRB.
SampleCovariance synthesize_covariance(const BlankedScene& scene, Rng& rng);

/// Gram matrix of `dof` i.i.d. CN(0, noise_var I) columns.
Eigen::MatrixXcd white_wishart(int n_ant, long dof, double noise_var, Rng& rng);

}  // namespace jamsim
