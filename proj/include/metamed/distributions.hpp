#ifndef METAMED_DISTRIBUTIONS_HPP
#define METAMED_DISTRIBUTIONS_HPP

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "metamed/rng.hpp"

namespace metamed {

enum class Family { Normal, LogNormal, Gamma, Beta, Weibull, HalfNormal };

const char* family_name(Family f);

/// Thrown when distribution parameters violate their domain.
class ParamError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A parametric distribution: family tag plus family-specific parameters.
///
/// Parametrizations:
///   Normal(mu, sigma)            sigma > 0
///   LogNormal(mu_log, sigma_log) sigma_log > 0, parameters of log(X)
///   Gamma(shape, scale)          both > 0
///   Beta(alpha, beta)            both > 0, support (0, 1)
///   Weibull(shape, scale)        both > 0
///   HalfNormal(mean)             mean > 0; underlying scale = mean * sqrt(pi/2)
struct Dist {
    Family family;
    std::array<double, 2> params{0.0, 0.0};

    Dist(Family f, double p0, double p1 = 0.0);

    std::size_t n_params() const { return family == Family::HalfNormal ? 1 : 2; }
    std::string describe() const;
};

double cdf(const Dist& d, double x);
double pdf(const Dist& d, double x);

/// Inverse CDF; requires 0 < p < 1.
double quantile(const Dist& d, double p);

struct Moments {
    double mean;
    double sd;
};
Moments moments(const Dist& d);

/// n i.i.d. draws; deterministic given the stream state.
std::vector<double> sample(const Dist& d, std::size_t n, Rng& rng);
double sample_one(const Dist& d, Rng& rng);

// Standard normal helpers shared across modules.
double normal_cdf(double z);
double normal_quantile(double p);
double normal_logpdf(double z);

/// Log of Phi(b) - Phi(a) for a < b, stable in both tails.
double normal_log_cdf_diff(double a, double b);

// Box-Cox transform pair. The forward transform is defined for x > 0 and is
// strictly increasing for every lambda; the inverse requires lambda*y + 1 > 0
// when lambda != 0.
double boxcox(double lambda, double x);
double boxcox_inv(double lambda, double y);

/// Derivative d/dx boxcox(lambda, x) = x^(lambda-1).
double boxcox_deriv(double lambda, double x);

}  // namespace metamed

#endif
