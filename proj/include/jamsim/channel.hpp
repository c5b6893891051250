#pragma once

#include <vector>

#include <Eigen/Core>

#include "jamsim/rng.hpp"
#include "jamsim/scenario.hpp"

namespace jamsim {

/// exp(-d_2d / k), clamped to [0, 1].
double los_probability(double d_2d, const LargeScaleParams& params);

/// Path loss in dB. NLOS links use max(PL_LOS, PL_NLOS).
double path_loss_db(double d_3d, bool los, double carrier_ghz, const LargeScaleParams& params);

/// Linear power gain 10^(-(PL + SF + WL)/10). WL is zero for indoor terminals.
double path_gain(double d_3d, bool los, double shadowing_db, double wall_loss_db, double carrier_ghz,
                 const LargeScaleParams& params);

/// Large-scale gain of every link in a drop: rows are UEs then the jammer,
/// columns are APs.
Eigen::MatrixXd large_scale_gains(const ScenarioConfig& config, const Drop& drop);

/// Square, half-wavelength (by default) planar array lying in the ceiling
/// plane and facing down, with exponential spatial correlation
/// R = R_1 (x) R_1, [R_1]_{ab} = rho^|a-b|.
class ArrayModel
{
  public:
    ArrayModel(int side, double spacing_wavelengths, double corr_coeff);

    int side() const { return side_; }
    int size() const { return side_ * side_; }

    /// Unit-modulus response toward `terminal` for an array centred at `ap`.
    Eigen::VectorXcd steering(const Point3& ap, const Point3& terminal) const;
    Eigen::MatrixXd correlation() const { return corr_; }
    const Eigen::MatrixXd& correlation_factor() const { return chol_; }

  private:
    int side_;
    double spacing_;
    Eigen::MatrixXd corr_;
    Eigen::MatrixXd chol_;
};

/// One AP's small-scale response: Rician (LOS) or correlated Rayleigh (NLOS),
/// scaled so every entry has E|h|^2 = gain. k_factor is linear and may be
/// infinite. `los_phase` rotates the specular part.
Eigen::VectorXcd small_scale(const ArrayModel& array, const Eigen::VectorXcd& steering, bool los,
                             double gain, double k_factor, std::complex<double> los_phase, Rng& rng);

/// Per-drop channel state: large-scale gains plus the deterministic LOS part
/// of every link, from which per-PRB fading vectors are drawn.
class DropChannel
{
  public:
    DropChannel(const ScenarioConfig& config, const Drop& drop);

    int n_ant() const { return n_ap_ * array_.size(); }
    int n_ap() const { return n_ap_; }
    int n_ant_per_ap() const { return array_.size(); }
    int jammer_row() const { return static_cast<int>(gains_.rows()) - 1; }

    double gain(int row, int ap) const { return gains_(row, ap); }
    const Eigen::MatrixXd& gains() const { return gains_; }

    /// Fresh small-scale realisation of link `row` over all antennas (AP-major).
    Eigen::VectorXcd draw(int row, Rng& rng) const;

  private:
    struct LinkState
    {
        bool los;
        Eigen::VectorXcd specular;  // sqrt(g K/(K+1)) e^{j phi} a, empty for NLOS
        double diffuse_std;          // sqrt(g/(K+1)) or sqrt(g)
    };

    ArrayModel array_;
    Eigen::MatrixXcd chol_;  // complex copy of the lower correlation factor
    int n_ap_;
    Eigen::MatrixXd gains_;
    std::vector<LinkState> links_;  // row-major (row, ap)
};

/// A fading vector for one PRB.
struct PrbChannel
{
    int prb;
    Eigen::VectorXcd h;
};

/// Channels of one slot, only on the PRBs where they are used.
struct ChannelRealization
{
    std::vector<std::vector<PrbChannel>> ue;  // per UE, its allocated PRBs ascending
    std::vector<PrbChannel> jammer;           // attacked PRBs ascending
    Eigen::MatrixXd large_scale_gain;

    /// Jammer channel on `prb`, or nullptr when the PRB is not attacked.
    const Eigen::VectorXcd* jammer_on(int prb) const;
};

}  // namespace jamsim
