#pragma once

#include <span>
#include <string>

#include <Eigen/Core>

namespace jamsim {

/// Samples of the blanked REs: column m is r_m across all antennas.
struct BlankedObservation
{
    Eigen::MatrixXcd samples;  // n_ant x n_re
    double noise_var_per_re = 1.0;

    int n_ant() const { return static_cast<int>(samples.rows()); }
    long n_re() const { return static_cast<long>(samples.cols()); }
};

/// Unnormalised Gram matrix R R^H of an observation. Both detector
/// statistics are functions of it alone.
struct SampleCovariance
{
    Eigen::MatrixXcd gram;
    long n_re = 0;
    double noise_var_per_re = 1.0;

    int n_ant() const { return static_cast<int>(gram.rows()); }
    static SampleCovariance from(const BlankedObservation& obs);
};

/// Column-wise concatenation (multi-slot accumulation). Noise levels must match.
BlankedObservation concatenate(std::span<const BlankedObservation> parts);
SampleCovariance accumulate(const SampleCovariance& a, const SampleCovariance& b);

enum class DetectorKind
{
    Glrt,
    Rlrt,
};

std::string to_string(DetectorKind kind);

/// ||r||^2 / (N_RE N_ant).
double glrt_statistic(const BlankedObservation& obs);
double glrt_statistic(const SampleCovariance& cov);

/// (1 - pfa) quantile of Gamma(N_RE N_ant, sigma_re2 / (N_RE N_ant)).
double glrt_threshold(double target_pfa, long n_re, int n_ant, double sigma_re2);

/// lambda_max(R R^H / N_RE) / sigma_re2.
double rlrt_statistic(const BlankedObservation& obs);
double rlrt_statistic(const SampleCovariance& cov);

/// Centring and scaling of the largest eigenvalue of a white complex sample
/// covariance (normalised by N_RE and the noise level).
struct EdgeConstants
{
    double mu;
    double xi;
};

EdgeConstants wishart_edge(long n_re, int n_ant);

/// mu + xi * F_TW2^{-1}(1 - pfa).
double rlrt_threshold(double target_pfa, long n_re, int n_ant);

struct Tw2Lookup
{
    double quantile;
    bool clamped;  // p fell outside the tabulated range
};

/// Tracy-Widom (beta = 2) quantile by monotone cubic interpolation of the
/// embedded table in probit coordinates.
Tw2Lookup tw2_quantile(double p);
double tw2_min_probability();
double tw2_max_probability();

/// Largest eigenvalue of a Hermitian matrix.
double largest_eigenvalue(const Eigen::MatrixXcd& hermitian);

struct DetectorVerdict
{
    DetectorKind kind;
    double statistic;
    double threshold;
    bool decided_jamming;
    double target_pfa;
};

double detector_statistic(const SampleCovariance& cov, DetectorKind kind);
double detector_threshold(DetectorKind kind, double target_pfa, long n_re, int n_ant,
                          double sigma_re2);

DetectorVerdict run_detector(const BlankedObservation& obs, DetectorKind kind, double target_pfa);
DetectorVerdict run_detector(const SampleCovariance& cov, DetectorKind kind, double target_pfa);

}  // namespace jamsim
