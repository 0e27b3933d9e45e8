#include "qotp/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace qotp::stats {

double log_binomial_coeff(std::uint64_t n, std::uint64_t k) {
    if (k > n) return -HUGE_VAL;
    return std::lgamma(double(n) + 1.0) - std::lgamma(double(k) + 1.0) -
           std::lgamma(double(n - k) + 1.0);
}

double log_binomial_pmf(std::uint64_t n, std::uint64_t k, double p) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("binomial: p outside [0,1]");
    if (k > n) return -HUGE_VAL;
    if (p == 0.0) return k == 0 ? 0.0 : -HUGE_VAL;
    if (p == 1.0) return k == n ? 0.0 : -HUGE_VAL;
    return log_binomial_coeff(n, k) + double(k) * std::log(p) +
           double(n - k) * std::log1p(-p);
}

double binomial_pmf(std::uint64_t n, std::uint64_t k, double p) {
    double lp = log_binomial_pmf(n, k, p);
    return lp == -HUGE_VAL ? 0.0 : std::exp(lp);
}

double binomial_tail_ge(std::uint64_t n, std::uint64_t k, double p) {
    if (k == 0) return 1.0;
    if (k > n) return 0.0;
    // sum the smaller side for accuracy
    double mean = double(n) * p;
    if (double(k) > mean) {
        double s = 0.0;
        for (std::uint64_t j = k; j <= n; ++j) s += binomial_pmf(n, j, p);
        return std::min(1.0, s);
    }
    double s = 0.0;
    for (std::uint64_t j = 0; j < k; ++j) s += binomial_pmf(n, j, p);
    return std::clamp(1.0 - s, 0.0, 1.0);
}

double binomial_cdf_le(std::uint64_t n, std::uint64_t k, double p) {
    if (k >= n) return 1.0;
    return std::clamp(1.0 - binomial_tail_ge(n, k + 1, p), 0.0, 1.0);
}

double majority_vote_success(std::uint64_t c, double p) {
    return binomial_tail_ge(c, c / 2 + 1, p);
}

namespace {

// Series expansion of P(a, x), valid for x < a + 1.
double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int i = 0; i < 500; ++i) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * 1e-15) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Continued fraction for Q(a, x), valid for x >= a + 1.
double gamma_q_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 500; ++i) {
        double an = -double(i) * (double(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-15) break;
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

}  // namespace

double gamma_p(double a, double x) {
    if (a <= 0.0 || x < 0.0) throw std::invalid_argument("gamma_p: bad arguments");
    if (x == 0.0) return 0.0;
    return x < a + 1.0 ? gamma_p_series(a, x) : 1.0 - gamma_q_cf(a, x);
}

double gamma_q(double a, double x) {
    if (a <= 0.0 || x < 0.0) throw std::invalid_argument("gamma_q: bad arguments");
    if (x == 0.0) return 1.0;
    return x < a + 1.0 ? 1.0 - gamma_p_series(a, x) : gamma_q_cf(a, x);
}

double chi2_pvalue(double chi2, int dof) {
    if (dof < 1) throw std::invalid_argument("chi2_pvalue: dof < 1");
    if (chi2 <= 0.0) return 1.0;
    return gamma_q(double(dof) / 2.0, chi2 / 2.0);
}

Chi2Result chi2_binomial_fit(const std::vector<int>& samples, std::uint64_t n, double p,
                             int bin_width, double min_expected) {
    if (samples.empty()) throw std::invalid_argument("chi2_binomial_fit: no samples");
    if (bin_width < 1) throw std::invalid_argument("chi2_binomial_fit: bin width < 1");

    const int nbins = int(n) / bin_width + 1;  // bin b covers [b*w, b*w + w)
    std::vector<double> expected(nbins, 0.0);
    std::vector<double> observed(nbins, 0.0);
    for (std::uint64_t k = 0; k <= n; ++k)
        expected[int(k) / bin_width] += binomial_pmf(n, k, p) * double(samples.size());
    for (int s : samples) {
        if (s < 0 || std::uint64_t(s) > n)
            throw std::invalid_argument("chi2_binomial_fit: sample out of range");
        observed[s / bin_width] += 1.0;
    }

    // merge sparse tails inward so every cell has enough expected mass
    int lo = 0, hi = nbins - 1;
    while (lo < hi && expected[lo] < min_expected) {
        expected[lo + 1] += expected[lo];
        observed[lo + 1] += observed[lo];
        ++lo;
    }
    while (hi > lo && expected[hi] < min_expected) {
        expected[hi - 1] += expected[hi];
        observed[hi - 1] += observed[hi];
        --hi;
    }

    Chi2Result r;
    for (int b = lo; b <= hi; ++b) {
        if (expected[b] <= 0.0) continue;
        double d = observed[b] - expected[b];
        r.statistic += d * d / expected[b];
        ++r.bins_used;
    }
    r.dof = std::max(1, r.bins_used - 1);
    r.pvalue = chi2_pvalue(r.statistic, r.dof);
    return r;
}

double two_proportion_z(std::uint64_t hits_a, std::uint64_t n_a, std::uint64_t hits_b,
                        std::uint64_t n_b) {
    if (n_a == 0 || n_b == 0) throw std::invalid_argument("two_proportion_z: empty sample");
    double pa = double(hits_a) / double(n_a);
    double pb = double(hits_b) / double(n_b);
    double pool = double(hits_a + hits_b) / double(n_a + n_b);
    double se = std::sqrt(pool * (1.0 - pool) * (1.0 / double(n_a) + 1.0 / double(n_b)));
    if (se == 0.0) return 0.0;
    return (pa - pb) / se;
}

}  // namespace qotp::stats
