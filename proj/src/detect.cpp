#include "jamsim/detect.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include <Eigen/Eigenvalues>
#include <boost/math/distributions/normal.hpp>
#include <boost/math/interpolators/pchip.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <fmt/format.h>

#include "jamsim/tw2_table.hpp"

namespace jamsim {
namespace {

void check_pfa(double pfa)
{
    if (!(pfa > 0 && pfa < 1))
        throw std::invalid_argument(fmt::format("target P_FA {} outside (0, 1)", pfa));
}

double probit(double p)
{
    return boost::math::quantile(boost::math::normal_distribution<double>(), p);
}

class Tw2Interpolant
{
  public:
    Tw2Interpolant()
    {
        std::vector<double> z, q;
        z.reserve(detail::kTw2Table.size());
        q.reserve(detail::kTw2Table.size());
        for (const auto& k : detail::kTw2Table)
        {
            z.push_back(probit(k.p));
            q.push_back(k.q);
        }
        spline_.emplace(std::move(z), std::move(q));
    }

    double operator()(double z) const { return (*spline_)(z); }

  private:
    std::optional<boost::math::interpolators::pchip<std::vector<double>>> spline_;
};

const Tw2Interpolant& tw2_interpolant()
{
    static const Tw2Interpolant interp;
    return interp;
}

}  // namespace

SampleCovariance SampleCovariance::from(const BlankedObservation& obs)
{
    SampleCovariance cov;
    cov.gram = Eigen::MatrixXcd::Zero(obs.n_ant(), obs.n_ant());
    cov.gram.selfadjointView<Eigen::Lower>().rankUpdate(obs.samples);
    cov.gram = cov.gram.selfadjointView<Eigen::Lower>();
    cov.n_re = obs.n_re();
    cov.noise_var_per_re = obs.noise_var_per_re;
    return cov;
}

BlankedObservation concatenate(std::span<const BlankedObservation> parts)
{
    if (parts.empty())
        throw std::invalid_argument("concatenate: no observations");
    long total = 0;
    for (const auto& p : parts)
    {
        if (p.n_ant() != parts[0].n_ant() || p.noise_var_per_re != parts[0].noise_var_per_re)
            throw std::invalid_argument("concatenate: mismatched observations");
        total += p.n_re();
    }
    BlankedObservation out;
    out.noise_var_per_re = parts[0].noise_var_per_re;
    out.samples.resize(parts[0].n_ant(), total);
    long col = 0;
    for (const auto& p : parts)
    {
        out.samples.middleCols(col, p.n_re()) = p.samples;
        col += p.n_re();
    }
    return out;
}

SampleCovariance accumulate(const SampleCovariance& a, const SampleCovariance& b)
{
    if (a.n_ant() != b.n_ant() || a.noise_var_per_re != b.noise_var_per_re)
        throw std::invalid_argument("accumulate: mismatched observations");
    return {a.gram + b.gram, a.n_re + b.n_re, a.noise_var_per_re};
}

std::string to_string(DetectorKind kind)
{
    return kind == DetectorKind::Glrt ? "glrt" : "rlrt";
}

double glrt_statistic(const BlankedObservation& obs)
{
    return obs.samples.squaredNorm() / (static_cast<double>(obs.n_re()) * obs.n_ant());
}

double glrt_statistic(const SampleCovariance& cov)
{
    return cov.gram.diagonal().real().sum() / (static_cast<double>(cov.n_re) * cov.n_ant());
}

double glrt_threshold(double target_pfa, long n_re, int n_ant, double sigma_re2)
{
    check_pfa(target_pfa);
    if (n_re < 1 || n_ant < 1 || !(sigma_re2 > 0))
        throw std::invalid_argument("glrt_threshold: invalid dimensions or noise level");
    const double k = static_cast<double>(n_re) * n_ant;
    return boost::math::gamma_q_inv(k, target_pfa) * sigma_re2 / k;
}

double largest_eigenvalue(const Eigen::MatrixXcd& hermitian)
{
    if (hermitian.rows() == 1)
        return hermitian(0, 0).real();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hermitian, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("largest_eigenvalue: eigensolver failed to converge");
    return solver.eigenvalues().maxCoeff();
}

double rlrt_statistic(const BlankedObservation& obs)
{
    return rlrt_statistic(SampleCovariance::from(obs));
}

double rlrt_statistic(const SampleCovariance& cov)
{
    return largest_eigenvalue(cov.gram) / (static_cast<double>(cov.n_re) * cov.noise_var_per_re);
}

EdgeConstants wishart_edge(long n_re, int n_ant)
{
    if (n_re < 2 || n_ant < 2)
        throw std::invalid_argument("wishart_edge: N_RE and N_ant must be >= 2");
    const double n = static_cast<double>(n_re);
    const double sn = std::sqrt(n);
    const double sp = std::sqrt(static_cast<double>(n_ant));
    const double mu = (sn + sp) * (sn + sp) / n;
    const double xi = (sn + sp) / n * std::cbrt(1.0 / sn + 1.0 / sp);
    return {mu, xi};
}

double rlrt_threshold(double target_pfa, long n_re, int n_ant)
{
    check_pfa(target_pfa);
    const auto edge = wishart_edge(n_re, n_ant);
    return edge.mu + edge.xi * tw2_quantile(1.0 - target_pfa).quantile;
}

double tw2_min_probability()
{
    return detail::kTw2Table.front().p;
}

double tw2_max_probability()
{
    return detail::kTw2Table.back().p;
}

Tw2Lookup tw2_quantile(double p)
{
    if (!(p > 0 && p < 1))
        throw std::invalid_argument(fmt::format("tw2_quantile: p = {} outside (0, 1)", p));
    const auto& table = detail::kTw2Table;
    if (p <= table.front().p)
        return {table.front().q, p < table.front().p};
    if (p >= table.back().p)
        return {table.back().q, p > table.back().p};
    return {tw2_interpolant()(probit(p)), false};
}

double detector_statistic(const SampleCovariance& cov, DetectorKind kind)
{
    return kind == DetectorKind::Glrt ? glrt_statistic(cov) : rlrt_statistic(cov);
}

double detector_threshold(DetectorKind kind, double target_pfa, long n_re, int n_ant,
                          double sigma_re2)
{
    if (kind == DetectorKind::Glrt)
        return glrt_threshold(target_pfa, n_re, n_ant, sigma_re2);
    // The RLRT statistic is already normalised by the noise level.
    return rlrt_threshold(target_pfa, n_re, n_ant);
}

DetectorVerdict run_detector(const SampleCovariance& cov, DetectorKind kind, double target_pfa)
{
    DetectorVerdict v;
    v.kind = kind;
    v.target_pfa = target_pfa;
    v.statistic = detector_statistic(cov, kind);
    v.threshold = detector_threshold(kind, target_pfa, cov.n_re, cov.n_ant(), cov.noise_var_per_re);
    v.decided_jamming = v.statistic > v.threshold;
    return v;
}

DetectorVerdict run_detector(const BlankedObservation& obs, DetectorKind kind, double target_pfa)
{
    if (kind == DetectorKind::Glrt)
    {
        DetectorVerdict v;
        v.kind = kind;
        v.target_pfa = target_pfa;
        v.statistic = glrt_statistic(obs);
        v.threshold = glrt_threshold(target_pfa, obs.n_re(), obs.n_ant(), obs.noise_var_per_re);
        v.decided_jamming = v.statistic > v.threshold;
        return v;
    }
    return run_detector(SampleCovariance::from(obs), kind, target_pfa);
}

}  // namespace jamsim
