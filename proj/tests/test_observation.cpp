#include <doctest.h>

#include <cmath>

#include "jamsim/observation.hpp"
#include "oracles.hpp"

using namespace jamsim;

TEST_SUITE("observation")
{
    TEST_CASE("white Wishart mean")
    {
        auto rng = make_stream(1, StreamPurpose::DetectionH0, 0);
        constexpr int trials = 4000;
        for (long dof : {3L, 40L})
        {
            Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(6, 6);
            for (int t = 0; t < trials; ++t)
                acc += white_wishart(6, dof, 0.5, rng);
            acc /= trials * static_cast<double>(dof) * 0.5;
            CHECK((acc - Eigen::MatrixXcd::Identity(6, 6)).cwiseAbs().maxCoeff() < 0.05);
        }
        CHECK(white_wishart(4, 0, 1.0, rng).norm() == 0.0);
    }

    TEST_CASE("sufficient-statistic sampler matches the raw-sample path")
    {
        auto rng_h = make_stream(2, StreamPurpose::JammerFading, 0);
        std::vector<Eigen::VectorXcd> channels(2, Eigen::VectorXcd(8));
        for (auto& h : channels)
            for (int i = 0; i < 8; ++i)
                h(i) = complex_normal(rng_h, 0.01);

        BlankedScene scene;
        scene.n_ant = 8;
        scene.n_re_per_prb = 24;
        scene.n_blanked = 3;
        scene.noise_var_per_re = 1.0;
        scene.jammer_power_per_re = 40.0;
        scene.jammed_channels = {&channels[0], &channels[1]};

        constexpr int trials = 3000;
        std::vector<double> raw_max, fast_max, raw_tr, fast_tr;
        auto r1 = make_stream(3, StreamPurpose::DetectionH1, 0);
        auto r2 = make_stream(3, StreamPurpose::DetectionH1, 1);
        for (int t = 0; t < trials; ++t)
        {
            const auto raw = SampleCovariance::from(synthesize_samples(scene, r1));
            const auto fast = synthesize_covariance(scene, r2);
            CHECK(fast.n_re == raw.n_re);
            raw_max.push_back(rlrt_statistic(raw));
            fast_max.push_back(rlrt_statistic(fast));
            raw_tr.push_back(glrt_statistic(raw));
            fast_tr.push_back(glrt_statistic(fast));
        }
        CHECK(oracle::ks_statistic(raw_max, fast_max) < oracle::ks_critical(trials));
        CHECK(oracle::ks_statistic(raw_tr, fast_tr) < oracle::ks_critical(trials));
    }

    TEST_CASE("noise-only sampler matches the raw-sample path")
    {
        BlankedScene scene;
        scene.n_ant = 16;
        scene.n_re_per_prb = 20;
        scene.n_blanked = 2;
        scene.noise_var_per_re = 3.0;
        constexpr int trials = 3000;
        std::vector<double> a, b;
        auto r1 = make_stream(4, StreamPurpose::DetectionH0, 0);
        auto r2 = make_stream(4, StreamPurpose::DetectionH0, 1);
        for (int t = 0; t < trials; ++t)
        {
            a.push_back(rlrt_statistic(SampleCovariance::from(synthesize_samples(scene, r1))));
            b.push_back(rlrt_statistic(synthesize_covariance(scene, r2)));
        }
        CHECK(oracle::ks_statistic(a, b) < oracle::ks_critical(trials));
    }

    TEST_CASE("accumulating covariances equals concatenating samples")
    {
        auto rng = make_stream(5, StreamPurpose::DetectionH0, 0);
        BlankedScene scene;
        scene.n_ant = 4;
        scene.n_re_per_prb = 12;
        scene.n_blanked = 2;
        const auto a = synthesize_samples(scene, rng);
        const auto b = synthesize_samples(scene, rng);
        const std::vector<BlankedObservation> parts{a, b};
        const auto joined = SampleCovariance::from(concatenate(parts));
        const auto acc = accumulate(SampleCovariance::from(a), SampleCovariance::from(b));
        CHECK(joined.n_re == 48);
        CHECK(acc.n_re == 48);
        CHECK((joined.gram - acc.gram).norm() < 1e-10 * acc.gram.norm());
    }

    TEST_CASE("more attacked than blanked PRBs is rejected")
    {
        auto rng = make_stream(6, StreamPurpose::DetectionH1, 0);
        Eigen::VectorXcd h = Eigen::VectorXcd::Ones(2);
        BlankedScene scene;
        scene.n_ant = 2;
        scene.n_blanked = 1;
        scene.jammer_power_per_re = 1.0;
        scene.jammed_channels = {&h, &h};
        CHECK_THROWS_AS(synthesize_covariance(scene, rng), std::invalid_argument);
    }
}
