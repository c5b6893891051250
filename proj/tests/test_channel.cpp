#include <doctest.h>

#include <cmath>

#include "jamsim/channel.hpp"

using namespace jamsim;

TEST_SUITE("channel")
{
    const LargeScaleParams kParams;

    TEST_CASE("LOS probability")
    {
        CHECK(los_probability(0.0, kParams) == 1.0);
        CHECK(los_probability(kParams.los_decay_distance, kParams) == doctest::Approx(std::exp(-1.0)));
        CHECK(los_probability(1e6, kParams) == doctest::Approx(0.0));
        CHECK_THROWS_AS(los_probability(-1.0, kParams), std::invalid_argument);
    }

    TEST_CASE("path gain anchors")
    {
        const double f = 3.75;
        const double at_1m = path_gain(1.0, true, 0.0, 0.0, f, kParams);
        CHECK(at_1m == doctest::Approx(std::pow(10.0, -(kParams.pl_los_a + kParams.pl_los_c * std::log10(f)) / 10)).scale(0));
        CHECK(path_gain(1.0, true, 0.0, 27.5, f, kParams) == doctest::Approx(at_1m * std::pow(10.0, -2.75)).scale(0));
        CHECK(path_gain(1.0, true, 3.0, 0.0, f, kParams) == doctest::Approx(at_1m * std::pow(10.0, -0.3)).scale(0));
        CHECK_THROWS_AS(path_gain(0.0, true, 0.0, 0.0, f, kParams), std::invalid_argument);

        double prev = 1.0;
        for (double d = 1.0; d < 200.0; d *= 1.3)
        {
            const double g_los = path_gain(d, true, 0.0, 0.0, f, kParams);
            const double g_nlos = path_gain(d, false, 0.0, 0.0, f, kParams);
            CHECK(g_los <= prev);
            CHECK(g_nlos <= g_los);
            prev = g_los;
        }
    }

    TEST_CASE("steering vectors")
    {
        const ArrayModel array(4, 0.5, 0.5);
        const Point3 ap{50, 25, 6};
        const auto a = array.steering(ap, {70, 10, 1.5});
        REQUIRE(a.size() == 16);
        for (int i = 0; i < a.size(); ++i)
            CHECK(std::abs(a(i)) == doctest::Approx(1.0));
        const auto below = array.steering(ap, {50, 25, 1.5});
        for (int i = 0; i < below.size(); ++i)
            CHECK(std::abs(below(i) - below(0)) < 1e-12);
    }

    TEST_CASE("infinite K gives the scaled steering vector")
    {
        const ArrayModel array(3, 0.5, 0.5);
        const auto a = array.steering({0, 0, 6}, {10, 5, 1.5});
        auto rng = make_stream(1, StreamPurpose::UeFading, 0);
        const auto phase = std::polar(1.0, 0.3);
        const auto h = small_scale(array, a, true, 4e-6, std::numeric_limits<double>::infinity(), phase, rng);
        for (int i = 0; i < h.size(); ++i)
        {
            CHECK(std::abs(h(i)) == doctest::Approx(2e-3).scale(0));
            CHECK(std::abs(h(i) - 2e-3 * phase * a(i)) < 1e-15);
        }
    }

    TEST_CASE("uncorrelated NLOS antennas are independent")
    {
        const ArrayModel array(2, 0.5, 0.0);
        const auto a = array.steering({0, 0, 6}, {1, 1, 1.5});
        auto rng = make_stream(2, StreamPurpose::UeFading, 0);
        constexpr int n = 10000;
        std::complex<double> c01 = 0;
        for (int t = 0; t < n; ++t)
        {
            const auto h = small_scale(array, a, false, 1.0, 5.0, 1.0, rng);
            c01 += h(0) * std::conj(h(1));
        }
        // |sample correlation| has standard deviation ~ 1/sqrt(n) per component.
        CHECK(std::abs(c01) / n < 3.0 * std::sqrt(2.0 / n));
    }

    TEST_CASE("NLOS sample covariance matches the Kronecker exponential model")
    {
        const double rho = 0.5;
        const ArrayModel array(3, 0.5, rho);
        const auto a = array.steering({0, 0, 6}, {1, 1, 1.5});
        auto rng = make_stream(3, StreamPurpose::UeFading, 0);
        constexpr int n = 100000;
        const double gain = 2.0;
        Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(9, 9);
        for (int t = 0; t < n; ++t)
        {
            const auto h = small_scale(array, a, false, gain, 5.0, 1.0, rng);
            acc.noalias() += h * h.adjoint();
        }
        acc /= static_cast<double>(n);
        for (int i = 0; i < 9; ++i)
            for (int k = 0; k < 9; ++k)
            {
                const double expected =
                    gain * std::pow(rho, std::abs(i / 3 - k / 3)) * std::pow(rho, std::abs(i % 3 - k % 3));
                CHECK(std::abs(acc(i, k) - expected) < 0.02 * gain);
            }
    }

    TEST_CASE("LOS entries keep the large-scale power")
    {
        const ArrayModel array(2, 0.5, 0.5);
        const auto a = array.steering({0, 0, 6}, {8, 3, 1.5});
        auto rng = make_stream(4, StreamPurpose::UeFading, 0);
        constexpr int n = 50000;
        double p = 0;
        for (int t = 0; t < n; ++t)
            p += small_scale(array, a, true, 3.0, db_to_linear(7.0), std::polar(1.0, 1.1), rng).squaredNorm();
        CHECK(p / n / 4.0 == doctest::Approx(3.0).epsilon(0.01));
    }

    TEST_CASE("jammer links differ from UE links only by the wall loss")
    {
        auto cfg = scenario_preset("B20");
        auto rng = make_stream(5, StreamPurpose::Drop, 0);
        Drop drop = sample_drop(cfg, rng);
        drop.jammer_position = drop.ue_positions[0];
        drop.shadowing_db.row(drop.jammer_row()) = drop.shadowing_db.row(0);
        drop.los_state.row(drop.jammer_row()) = drop.los_state.row(0);
        drop.wall_loss_db = 0.0;
        auto g = large_scale_gains(cfg, drop);
        for (int j = 0; j < g.cols(); ++j)
            CHECK(g(drop.jammer_row(), j) == g(0, j));
        drop.wall_loss_db = 10.0;
        g = large_scale_gains(cfg, drop);
        for (int j = 0; j < g.cols(); ++j)
            CHECK(g(drop.jammer_row(), j) == doctest::Approx(0.1 * g(0, j)).scale(0));
    }

    TEST_CASE("drop channel draws have the link power and AP-major layout")
    {
        auto cfg = scenario_preset("B20");
        auto rng = make_stream(6, StreamPurpose::Drop, 0);
        const Drop drop = sample_drop(cfg, rng);
        const DropChannel ch(cfg, drop);
        CHECK(ch.n_ant() == 64);
        CHECK(ch.n_ap() == 4);
        auto fading = make_stream(6, StreamPurpose::UeFading, 0);
        constexpr int n = 20000;
        Eigen::VectorXd power = Eigen::VectorXd::Zero(64);
        for (int t = 0; t < n; ++t)
            power += ch.draw(1, fading).cwiseAbs2();
        power /= n;
        for (int j = 0; j < 4; ++j)
            CHECK(power.segment(j * 16, 16).mean() == doctest::Approx(ch.gain(1, j)).epsilon(0.03).scale(0));
    }
}
