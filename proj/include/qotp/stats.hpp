#pragma once

#include <cstdint>
#include <vector>

namespace qotp::stats {

// log C(n, k) via lgamma; exact enough for n up to ~10^6.
double log_binomial_coeff(std::uint64_t n, std::uint64_t k);

// log of the Binomial(n, p) probability mass at k.
double log_binomial_pmf(std::uint64_t n, std::uint64_t k, double p);
double binomial_pmf(std::uint64_t n, std::uint64_t k, double p);

// P(Binomial(n, p) >= k), exact summation in log space.
double binomial_tail_ge(std::uint64_t n, std::uint64_t k, double p);

// P(Binomial(n, p) <= k).
double binomial_cdf_le(std::uint64_t n, std::uint64_t k, double p);

// P(Binomial(c, p) > c/2): success of a majority vote over c repetitions.
double majority_vote_success(std::uint64_t c, double p);

// Regularized incomplete gamma functions P(a, x) and Q(a, x) = 1 - P(a, x).
double gamma_p(double a, double x);
double gamma_q(double a, double x);

// Upper-tail p-value of a chi-squared statistic with `dof` degrees of freedom.
double chi2_pvalue(double chi2, int dof);

struct Chi2Result {
    double statistic = 0.0;
    int dof = 0;
    double pvalue = 1.0;
    int bins_used = 0;
};

// Pearson goodness-of-fit of integer samples against Binomial(n, p).
// Samples are histogrammed in bins of `bin_width` aligned to multiples of
// the width; leading/trailing bins are merged until every expected count
// reaches `min_expected`.
Chi2Result chi2_binomial_fit(const std::vector<int>& samples, std::uint64_t n, double p,
                             int bin_width = 3, double min_expected = 5.0);

// Two-sample proportion z statistic (pooled).
double two_proportion_z(std::uint64_t hits_a, std::uint64_t n_a, std::uint64_t hits_b,
                        std::uint64_t n_b);

}  // namespace qotp::stats
