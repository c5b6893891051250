#include "jamsim/link.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace jamsim {

EstimatedChannel estimate_channel(const Eigen::VectorXcd& h_true, std::span<const double> gamma_per_ap,
                                  std::span<const double> jammer_gain_per_ap,
                                  const EstimationParams& params, Rng& rng)
{
    const auto n_ap = static_cast<int>(gamma_per_ap.size());
    const int per_ap = params.n_ant_per_ap;
    if (h_true.size() != n_ap * per_ap || jammer_gain_per_ap.size() != gamma_per_ap.size())
        throw std::invalid_argument("estimate_channel: dimension mismatch");
    if (params.pilot_length < 1 || !(params.p_ue_prb > 0) || !(params.sigma_w2 > 0))
        throw std::invalid_argument("estimate_channel: T >= 1 and positive powers required");

    const double t = params.pilot_length;
    EstimatedChannel est;
    est.pilot_length = params.pilot_length;
    est.h_hat.resize(h_true.size());
    for (int j = 0; j < n_ap; ++j)
    {
        const double gt = gamma_per_ap[static_cast<std::size_t>(j)] * t;
        const double shrink = gt / (1.0 + gt);
        const double z_var =
            (params.sigma_w2 + params.p_j_prb * jammer_gain_per_ap[static_cast<std::size_t>(j)]) /
            (params.p_ue_prb * t);
        std::complex<double> z_common = params.common_z ? complex_normal(rng, z_var) : 0.0;
        for (int n = 0; n < per_ap; ++n)
        {
            const int idx = j * per_ap + n;
            const auto z = params.common_z ? z_common : complex_normal(rng, z_var);
            est.h_hat(idx) = shrink * (h_true(idx) + z);
        }
    }
    return est;
}

Eigen::VectorXcd mrc_combiner(const Eigen::VectorXcd& h_hat)
{
    const double norm = h_hat.norm();
    if (!(norm > 0))
        throw std::domain_error("mrc_combiner: zero channel estimate");
    return h_hat.conjugate() / norm;
}

double sinr_per_prb(const Eigen::VectorXcd& h_true, const Eigen::VectorXcd* h_jam,
                    const Eigen::VectorXcd& g, double p_ue_prb, double p_j_prb, double sigma_w2)
{
    // h is a row vector in the model, so h g is a plain (non-conjugating) product.
    const double signal = std::norm(h_true.cwiseProduct(g).sum()) * p_ue_prb;
    double interference = 0.0;
    if (h_jam != nullptr && p_j_prb > 0)
        interference = std::norm(h_jam->cwiseProduct(g).sum()) * p_j_prb;
    return signal / (sigma_w2 + interference);
}

double eesm(std::span<const double> sinr, double beta)
{
    if (sinr.empty())
        throw std::invalid_argument("eesm: empty SINR list");
    if (!(beta > 0))
        throw std::invalid_argument("eesm: beta must be positive");
    // log-mean-exp around the minimum keeps every exponent <= 0.
    const double lo = *std::min_element(sinr.begin(), sinr.end());
    double acc = 0.0;
    for (double s : sinr)
        acc += std::exp(-(s - lo) / beta);
    const double mean = acc / static_cast<double>(sinr.size());
    return lo - beta * std::log(mean);
}

double q_function(double x)
{
    return 0.5 * std::erfc(x / std::numbers::sqrt2);
}

double channel_dispersion(double sinr)
{
    const double l2e = std::numbers::log2e;
    const double r = 1.0 / (1.0 + sinr);
    return (1.0 - r * r) * l2e * l2e;
}

double bler(double sinr_eff, double n_effective_re, double packet_bits)
{
    if (!(sinr_eff >= 0))
        throw std::invalid_argument("bler: SINR must be non-negative");
    if (!(n_effective_re >= 1))
        throw std::invalid_argument("bler: need at least one resource element");
    const double n = n_effective_re;
    const double rate = packet_bits / n;
    const double margin = std::log2(1.0 + sinr_eff) - rate + std::log2(n) / (2.0 * n);
    const double v = channel_dispersion(sinr_eff);
    if (!(v > 0))
        return margin > 0 ? 0.0 : 1.0;
    if (std::isinf(sinr_eff))
        return 0.0;
    return q_function(margin * std::sqrt(n / v));
}

LinkBudget link_budget(std::vector<double> sinr_per_prb, const Numerology& numerology, double beta)
{
    LinkBudget lb;
    lb.sinr_per_prb = std::move(sinr_per_prb);
    lb.sinr_eff = eesm(lb.sinr_per_prb, beta);
    lb.n_coded_re = static_cast<int>(lb.sinr_per_prb.size()) * numerology.n_re_per_prb();
    lb.n_effective_re =
        static_cast<int>(std::lround(lb.n_coded_re * (1.0 - numerology.overhead)));
    lb.spectral_efficiency = numerology.packet_size_bits / static_cast<double>(lb.n_effective_re);
    lb.bler = bler(lb.sinr_eff, lb.n_effective_re, numerology.packet_size_bits);
    return lb;
}

}  // namespace jamsim
