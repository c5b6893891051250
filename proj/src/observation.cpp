#include "jamsim/observation.hpp"

#include <cmath>
#include <stdexcept>

namespace jamsim {

BlankedObservation synthesize_samples(const BlankedScene& scene, Rng& rng)
{
    if (static_cast<int>(scene.jammed_channels.size()) > scene.n_blanked)
        throw std::invalid_argument("synthesize_samples: more attacked than blanked PRBs");
    BlankedObservation obs;
    obs.noise_var_per_re = scene.noise_var_per_re;
    obs.samples.resize(scene.n_ant, scene.n_re());
    for (long m = 0; m < scene.n_re(); ++m)
        for (int a = 0; a < scene.n_ant; ++a)
            obs.samples(a, m) = complex_normal(rng, scene.noise_var_per_re);

    if (scene.jammer_power_per_re > 0)
    {
        // Attacked PRBs occupy the leading column blocks; column order does
        // not affect either statistic.
        for (std::size_t k = 0; k < scene.jammed_channels.size(); ++k)
        {
            const auto& h = *scene.jammed_channels[k];
            for (int m = 0; m < scene.n_re_per_prb; ++m)
            {
                const auto s = complex_normal(rng, scene.jammer_power_per_re);
                obs.samples.col(static_cast<long>(k) * scene.n_re_per_prb + m) += s * h;
            }
        }
    }
    return obs;
}

Eigen::MatrixXcd white_wishart(int n_ant, long dof, double noise_var, Rng& rng)
{
    Eigen::MatrixXcd w = Eigen::MatrixXcd::Zero(n_ant, n_ant);
    if (dof <= 0)
        return w;
    if (dof < n_ant)
    {
        Eigen::MatrixXcd cols(n_ant, dof);
        for (long m = 0; m < dof; ++m)
            for (int a = 0; a < n_ant; ++a)
                cols(a, m) = complex_normal(rng, noise_var);
        w.selfadjointView<Eigen::Lower>().rankUpdate(cols);
        return w.selfadjointView<Eigen::Lower>();
    }
    // Complex Bartlett decomposition: W = L L^H with |L_ii|^2 ~ Gamma(dof - i, 1)
    // and CN(0, 1) below the diagonal.
    Eigen::MatrixXcd l = Eigen::MatrixXcd::Zero(n_ant, n_ant);
    for (int i = 0; i < n_ant; ++i)
    {
        l(i, i) = std::sqrt(gamma_variate(rng, static_cast<double>(dof - i), 1.0));
        for (int j = 0; j < i; ++j)
            l(i, j) = complex_normal(rng, 1.0);
    }
    w.noalias() = l.triangularView<Eigen::Lower>() * l.adjoint();
    w *= noise_var;
    return w;
}

SampleCovariance synthesize_covariance(const BlankedScene& scene, Rng& rng)
{
    const long n_jammed = scene.jammer_power_per_re > 0
                              ? static_cast<long>(scene.jammed_channels.size())
                              : 0;
    if (n_jammed > scene.n_blanked)
        throw std::invalid_argument("synthesize_covariance: more attacked than blanked PRBs");

    // Rotating each attacked PRB's RE space so the jammer symbols s align
    // with the first axis leaves one column w + ||s|| h and n_re_per_prb - 1
    // pure-noise columns; ||s||^2 ~ Gamma(n_re_per_prb, jammer_power_per_re).
    SampleCovariance cov;
    cov.n_re = scene.n_re();
    cov.noise_var_per_re = scene.noise_var_per_re;
    cov.gram = white_wishart(scene.n_ant, cov.n_re - n_jammed, scene.noise_var_per_re, rng);
    Eigen::VectorXcd x(scene.n_ant);
    for (long k = 0; k < n_jammed; ++k)
    {
        const auto& h = *scene.jammed_channels[static_cast<std::size_t>(k)];
        const double energy = gamma_variate(rng, scene.n_re_per_prb, scene.jammer_power_per_re);
        for (int a = 0; a < scene.n_ant; ++a)
            x(a) = complex_normal(rng, scene.noise_var_per_re);
        x += std::sqrt(energy) * h;
        cov.gram.noalias() += x * x.adjoint();
    }
    return cov;
}

}  // namespace jamsim
