#include "jamsim/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Cholesky>

namespace jamsim {
namespace {

constexpr double kSpeedOfLight = 299792458.0;

}  // namespace

double los_probability(double d_2d, const LargeScaleParams& params)
{
    if (d_2d < 0)
        throw std::invalid_argument("los_probability: negative distance");
    return std::clamp(std::exp(-d_2d / params.los_decay_distance), 0.0, 1.0);
}

double path_loss_db(double d_3d, bool los, double carrier_ghz, const LargeScaleParams& p)
{
    if (!(d_3d > 0))
        throw std::invalid_argument("path loss: 3D distance must be positive");
    const double ld = std::log10(d_3d);
    const double lf = std::log10(carrier_ghz);
    const double pl_los = p.pl_los_a + p.pl_los_b * ld + p.pl_los_c * lf;
    if (los)
        return pl_los;
    return std::max(pl_los, p.pl_nlos_a + p.pl_nlos_b * ld + p.pl_nlos_c * lf);
}

double path_gain(double d_3d, bool los, double shadowing_db, double wall_loss_db, double carrier_ghz,
                 const LargeScaleParams& params)
{
    const double loss = path_loss_db(d_3d, los, carrier_ghz, params) + shadowing_db + wall_loss_db;
    return std::pow(10.0, -loss / 10.0);
}

Eigen::MatrixXd large_scale_gains(const ScenarioConfig& config, const Drop& drop)
{
    const int n_links = drop.jammer_row() + 1;
    const int n_ap = config.deployment.n_ap;
    Eigen::MatrixXd g(n_links, n_ap);
    for (int i = 0; i < n_links; ++i)
    {
        const bool is_jammer = i == drop.jammer_row();
        const Point3& term =
            is_jammer ? drop.jammer_position : drop.ue_positions[static_cast<std::size_t>(i)];
        for (int j = 0; j < n_ap; ++j)
        {
            const auto& ap = config.deployment.ap_positions[static_cast<std::size_t>(j)];
            g(i, j) = path_gain(distance_3d(term, ap), drop.los_state(i, j), drop.shadowing_db(i, j),
                                is_jammer ? drop.wall_loss_db : 0.0, config.channel.carrier_ghz,
                                config.channel.large_scale);
        }
    }
    return g;
}

ArrayModel::ArrayModel(int side, double spacing_wavelengths, double corr_coeff)
    : side_(side), spacing_(spacing_wavelengths)
{
    if (side < 1)
        throw std::invalid_argument("ArrayModel: side must be positive");
    if (!(corr_coeff >= 0 && corr_coeff < 1))
        throw std::invalid_argument("ArrayModel: correlation coefficient must be in [0, 1)");
    Eigen::MatrixXd r1(side, side);
    for (int a = 0; a < side; ++a)
        for (int b = 0; b < side; ++b)
            r1(a, b) = std::pow(corr_coeff, std::abs(a - b));
    const Eigen::MatrixXd l1 = r1.llt().matrixL();

    const int n = size();
    corr_.resize(n, n);
    chol_.resize(n, n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
        {
            corr_(i, k) = r1(i / side, k / side) * r1(i % side, k % side);
            chol_(i, k) = l1(i / side, k / side) * l1(i % side, k % side);
        }
}

Eigen::VectorXcd ArrayModel::steering(const Point3& ap, const Point3& terminal) const
{
    const double d = distance_3d(ap, terminal);
    const double ux = (terminal.x - ap.x) / d;
    const double uy = (terminal.y - ap.y) / d;
    const double centre = 0.5 * (side_ - 1);
    Eigen::VectorXcd a(size());
    for (int m = 0; m < side_; ++m)
        for (int n = 0; n < side_; ++n)
        {
            const double proj = spacing_ * ((m - centre) * ux + (n - centre) * uy);
            a(m * side_ + n) = std::polar(1.0, 2.0 * std::numbers::pi * proj);
        }
    return a;
}

Eigen::VectorXcd small_scale(const ArrayModel& array, const Eigen::VectorXcd& steering, bool los,
                             double gain, double k_factor, std::complex<double> los_phase, Rng& rng)
{
    const int n = array.size();
    if (los && std::isinf(k_factor))
        return std::sqrt(gain) * los_phase * steering;

    Eigen::VectorXcd w(n);
    for (int i = 0; i < n; ++i)
        w(i) = complex_normal(rng, 1.0);
    Eigen::VectorXcd diffuse = array.correlation_factor().cast<std::complex<double>>() * w;
    if (!los)
        return std::sqrt(gain) * diffuse;
    return std::sqrt(gain) * (std::sqrt(k_factor / (k_factor + 1.0)) * los_phase * steering +
                              std::sqrt(1.0 / (k_factor + 1.0)) * diffuse);
}

DropChannel::DropChannel(const ScenarioConfig& config, const Drop& drop)
    : array_(config.deployment.array_side(), config.channel.element_spacing,
             config.channel.large_scale.spatial_corr_coeff),
      chol_(array_.correlation_factor().cast<std::complex<double>>()),
      n_ap_(config.deployment.n_ap),
      gains_(large_scale_gains(config, drop))
{
    const double k = db_to_linear(config.channel.large_scale.rician_k_los_db);
    const double wavelength = kSpeedOfLight / (config.channel.carrier_ghz * 1e9);
    const int n_links = static_cast<int>(gains_.rows());
    links_.reserve(static_cast<std::size_t>(n_links * n_ap_));
    for (int i = 0; i < n_links; ++i)
    {
        const Point3& term = i == drop.jammer_row() ? drop.jammer_position
                                                    : drop.ue_positions[static_cast<std::size_t>(i)];
        for (int j = 0; j < n_ap_; ++j)
        {
            const auto& ap = config.deployment.ap_positions[static_cast<std::size_t>(j)];
            const double g = gains_(i, j);
            LinkState s;
            s.los = drop.los_state(i, j);
            if (s.los)
            {
                const auto phase =
                    std::polar(1.0, -2.0 * std::numbers::pi * distance_3d(ap, term) / wavelength);
                s.specular = std::sqrt(g * k / (k + 1.0)) * phase * array_.steering(ap, term);
                s.diffuse_std = std::sqrt(g / (k + 1.0));
            }
            else
            {
                s.diffuse_std = std::sqrt(g);
            }
            links_.push_back(std::move(s));
        }
    }
}

Eigen::VectorXcd DropChannel::draw(int row, Rng& rng) const
{
    const int per_ap = array_.size();
    Eigen::VectorXcd h(n_ant());
    Eigen::VectorXcd w(per_ap);
    for (int j = 0; j < n_ap_; ++j)
    {
        const auto& s = links_[static_cast<std::size_t>(row * n_ap_ + j)];
        for (int i = 0; i < per_ap; ++i)
            w(i) = complex_normal(rng, 1.0);
        auto seg = h.segment(j * per_ap, per_ap);
        seg.noalias() = chol_.triangularView<Eigen::Lower>() * w;
        seg *= s.diffuse_std;
        if (s.los)
            seg += s.specular;
    }
    return h;
}

const Eigen::VectorXcd* ChannelRealization::jammer_on(int prb) const
{
    auto it = std::lower_bound(jammer.begin(), jammer.end(), prb,
                               [](const PrbChannel& c, int p) { return c.prb < p; });
    if (it == jammer.end() || it->prb != prb)
        return nullptr;
    return &it->h;
}

}  // namespace jamsim
