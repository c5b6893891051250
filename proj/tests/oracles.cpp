#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace oracle {

long double gamma_p(long double a, long double x)
{
    if (x <= 0)
        return 0;
    const long double log_prefix = a * std::log(x) - x - std::lgamma(a);
    if (x < a + 1)
    {
        long double term = 1 / a;
        long double sum = term;
        for (int n = 1; n < 100000; ++n)
        {
            term *= x / (a + n);
            sum += term;
            if (std::fabs(term) < std::fabs(sum) * 1e-19L)
                break;
        }
        return sum * std::exp(log_prefix);
    }
    // Lentz's method for the continued fraction of Q(a, x).
    const long double tiny = 1e-300L;
    long double b = x + 1 - a;
    long double c = 1 / tiny;
    long double d = 1 / b;
    long double h = d;
    for (int i = 1; i < 100000; ++i)
    {
        const long double an = -i * (i - a);
        b += 2;
        d = an * d + b;
        if (std::fabs(d) < tiny)
            d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny)
            c = tiny;
        d = 1 / d;
        const long double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1) < 1e-19L)
            break;
    }
    return 1 - std::exp(log_prefix) * h;
}

double gamma_upper_quantile(double shape, double scale, double upper)
{
    long double lo = 0;
    long double hi = shape + 50 * std::sqrt(shape) + 50;
    while (1 - gamma_p(shape, hi) > upper)
        hi *= 2;
    for (int i = 0; i < 200; ++i)
    {
        const long double mid = 0.5L * (lo + hi);
        if (1 - gamma_p(shape, mid) > upper)
            lo = mid;
        else
            hi = mid;
    }
    return static_cast<double>(0.5L * (lo + hi) * scale);
}

namespace {

// Number of eigenvalues of the symmetric tridiagonal (d, e) below x.
int sturm_count(const std::vector<double>& d, const std::vector<double>& e, double x)
{
    int count = 0;
    double q = 1.0;
    for (std::size_t i = 0; i < d.size(); ++i)
    {
        const double off = i == 0 ? 0.0 : e[i - 1] * e[i - 1];
        q = d[i] - x - (i == 0 ? 0.0 : off / q);
        if (q == 0.0)
            q = -1e-300;
        if (q < 0)
            ++count;
    }
    return count;
}

double tridiagonal_max_eigenvalue(const std::vector<double>& d, const std::vector<double>& e)
{
    double lo = 0.0, hi = 0.0;
    for (std::size_t i = 0; i < d.size(); ++i)
    {
        const double r = (i > 0 ? std::fabs(e[i - 1]) : 0.0) + (i + 1 < d.size() ? std::fabs(e[i]) : 0.0);
        hi = std::max(hi, d[i] + r);
    }
    const int n = static_cast<int>(d.size());
    for (int it = 0; it < 200 && hi - lo > 1e-12 * hi; ++it)
    {
        const double mid = 0.5 * (lo + hi);
        if (sturm_count(d, e, mid) < n)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

std::vector<double> standardized_wishart_edge(int n_dim, int n_samples, int trials, std::uint64_t seed)
{
    if (n_dim < 2 || n_samples < n_dim)
        throw std::invalid_argument("standardized_wishart_edge: need n_samples >= n_dim >= 2");
    std::mt19937_64 gen(seed);
    // chi^2_{2k} / 2 ~ Gamma(k, 1): the squared bidiagonal entries of the
    // complex Laguerre model scaled to unit-variance Gaussian entries.
    auto half_chi2 = [&](int k) { return std::gamma_distribution<double>(k, 1.0)(gen); };

    // No half-integer shift: that correction belongs to the real case.
    const double sn = std::sqrt(static_cast<double>(n_samples));
    const double sp = std::sqrt(static_cast<double>(n_dim));
    const double mu = (sn + sp) * (sn + sp);
    const double sigma = (sn + sp) * std::cbrt(1.0 / sn + 1.0 / sp);

    std::vector<double> out(static_cast<std::size_t>(trials));
    std::vector<double> a2(static_cast<std::size_t>(n_dim)), b2(static_cast<std::size_t>(n_dim - 1));
    std::vector<double> d(static_cast<std::size_t>(n_dim)), e(static_cast<std::size_t>(n_dim - 1));
    for (int t = 0; t < trials; ++t)
    {
        for (int i = 0; i < n_dim; ++i)
            a2[static_cast<std::size_t>(i)] = half_chi2(n_samples - i);
        for (int i = 0; i < n_dim - 1; ++i)
            b2[static_cast<std::size_t>(i)] = half_chi2(n_dim - 1 - i);
        // T = B B^T for lower bidiagonal B with diagonal a and subdiagonal b.
        for (int i = 0; i < n_dim; ++i)
        {
            const auto u = static_cast<std::size_t>(i);
            d[u] = a2[u] + (i > 0 ? b2[u - 1] : 0.0);
            if (i + 1 < n_dim)
                e[u] = std::sqrt(a2[u] * b2[u]);
        }
        out[static_cast<std::size_t>(t)] = (tridiagonal_max_eigenvalue(d, e) - mu) / sigma;
    }
    std::sort(out.begin(), out.end());
    return out;
}

double sorted_quantile(const std::vector<double>& sorted, double p)
{
    const auto n = sorted.size();
    auto k = static_cast<std::size_t>(std::ceil(p * static_cast<double>(n)));
    k = std::clamp<std::size_t>(k, 1, n);
    return sorted[k - 1];
}

double no_intersection_probability(int n, int m, int l)
{
    if (m + l > n)
        return 0.0;
    auto log_choose = [](int a, int b) {
        return std::lgamma(a + 1.0) - std::lgamma(b + 1.0) - std::lgamma(a - b + 1.0);
    };
    return std::exp(log_choose(n - l, m) - log_choose(n, m));
}

double ks_statistic(std::vector<double> a, std::vector<double> b)
{
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    const auto na = static_cast<double>(a.size());
    const auto nb = static_cast<double>(b.size());
    while (i < a.size() && j < b.size())
    {
        const double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= x)
            ++i;
        while (j < b.size() && b[j] <= x)
            ++j;
        d = std::max(d, std::fabs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    return d;
}

double ks_critical(std::size_t n)
{
    return 1.95 * std::sqrt(2.0 / static_cast<double>(n));
}

}  // namespace oracle
