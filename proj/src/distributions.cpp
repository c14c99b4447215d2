#include "metamed/distributions.hpp"

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/erf.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <limits>

namespace metamed {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrt2 = 1.41421356237309504880;
constexpr double kInf = std::numeric_limits<double>::infinity();

void require(bool ok, const char* what) {
    if (!ok) throw ParamError(what);
}

double halfnormal_scale(double mean) { return mean * std::sqrt(kPi / 2.0); }

}  // namespace

const char* family_name(Family f) {
    switch (f) {
        case Family::Normal: return "normal";
        case Family::LogNormal: return "log-normal";
        case Family::Gamma: return "gamma";
        case Family::Beta: return "beta";
        case Family::Weibull: return "weibull";
        case Family::HalfNormal: return "half-normal";
    }
    return "?";
}

Dist::Dist(Family f, double p0, double p1) : family(f), params{p0, p1} {
    require(std::isfinite(p0) && std::isfinite(p1), "non-finite distribution parameter");
    switch (f) {
        case Family::Normal:
            require(p1 > 0.0, "normal: sigma must be > 0");
            break;
        case Family::LogNormal:
            require(p1 > 0.0, "log-normal: sigma_log must be > 0");
            break;
        case Family::Gamma:
            require(p0 > 0.0 && p1 > 0.0, "gamma: shape and scale must be > 0");
            break;
        case Family::Beta:
            require(p0 > 0.0 && p1 > 0.0, "beta: alpha and beta must be > 0");
            break;
        case Family::Weibull:
            require(p0 > 0.0 && p1 > 0.0, "weibull: shape and scale must be > 0");
            break;
        case Family::HalfNormal:
            require(p0 > 0.0, "half-normal: mean must be > 0");
            break;
    }
}

std::string Dist::describe() const {
    std::string s = family_name(family);
    s += "(" + std::to_string(params[0]);
    if (n_params() == 2) s += ", " + std::to_string(params[1]);
    s += ")";
    return s;
}

double normal_cdf(double z) {
    return 0.5 * std::erfc(-z / kSqrt2);
}

double normal_logpdf(double z) {
    return -0.5 * z * z - 0.5 * std::log(2.0 * kPi);
}

double normal_quantile(double p) {
    require(p > 0.0 && p < 1.0, "normal_quantile: p must be in (0,1)");
    // Wichura's AS241 (PPND16), full double accuracy.
    const double q = p - 0.5;
    if (std::fabs(q) <= 0.425) {
        const double r = 0.180625 - q * q;
        return q *
               (((((((2.5090809287301226727e+3 * r + 3.3430575583588128105e+4) * r +
                     6.7265770927008700853e+4) * r + 4.5921953931549871457e+4) * r +
                   1.3731693765509461125e+4) * r + 1.9715909503065514427e+3) * r +
                 1.3314166789178437745e+2) * r + 3.3871328727963666080e+0) /
               (((((((5.2264952788528545610e+3 * r + 2.8729085735721942674e+4) * r +
                     3.9307895800092710610e+4) * r + 2.1213794301586595867e+4) * r +
                   5.3941960214247511077e+3) * r + 6.8718700749205790830e+2) * r +
                 4.2313330701600911252e+1) * r + 1.0);
    }
    double r = (q < 0.0) ? p : 1.0 - p;
    r = std::sqrt(-std::log(r));
    double val;
    if (r <= 5.0) {
        r -= 1.6;
        val = (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
                    2.41780725177450611770e-1) * r + 1.27045825245236838258e+0) * r +
                  3.64784832476320460504e+0) * r + 5.76949722146069140550e+0) * r +
                4.63033784615654529590e+0) * r + 1.42343711074968357734e+0) /
              (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
                    1.51986665636164571966e-2) * r + 1.48103976427480074590e-1) * r +
                  6.89767334985100004550e-1) * r + 1.67638483018380384940e+0) * r +
                2.05319162663775882187e+0) * r + 1.0);
    } else {
        r -= 5.0;
        val = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
                    1.24266094738807843860e-3) * r + 2.65321895265761230930e-2) * r +
                  2.96560571828504891230e-1) * r + 1.78482653991729133580e+0) * r +
                5.46378491116411436990e+0) * r + 6.65790464350110377720e+0) /
              (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
                    1.84631831751005468180e-5) * r + 7.86869131145613259100e-4) * r +
                  1.48753612908506148525e-2) * r + 1.36929880922735805310e-1) * r +
                5.99832206555887937690e-1) * r + 1.0);
    }
    return (q < 0.0) ? -val : val;
}

double normal_log_cdf_diff(double a, double b) {
    // log(Phi(b) - Phi(a)), a < b. Work with upper-tail complements on the
    // side where both arguments are positive to dodge cancellation.
    if (a >= b) return -kInf;
    if (a > 0.0) {
        const double qa = 0.5 * std::erfc(a / kSqrt2);
        const double qb = 0.5 * std::erfc(b / kSqrt2);
        const double d = qa - qb;
        return d > 0.0 ? std::log(d) : -kInf;
    }
    const double pa = 0.5 * std::erfc(-a / kSqrt2);
    const double pb = 0.5 * std::erfc(-b / kSqrt2);
    const double d = pb - pa;
    return d > 0.0 ? std::log(d) : -kInf;
}

double cdf(const Dist& d, double x) {
    const auto [p0, p1] = d.params;
    switch (d.family) {
        case Family::Normal:
            return normal_cdf((x - p0) / p1);
        case Family::LogNormal:
            if (x <= 0.0) return 0.0;
            return normal_cdf((std::log(x) - p0) / p1);
        case Family::Gamma:
            if (x <= 0.0) return 0.0;
            return boost::math::gamma_p(p0, x / p1);
        case Family::Beta:
            if (x <= 0.0) return 0.0;
            if (x >= 1.0) return 1.0;
            return boost::math::ibeta(p0, p1, x);
        case Family::Weibull:
            if (x <= 0.0) return 0.0;
            return -std::expm1(-std::pow(x / p1, p0));
        case Family::HalfNormal: {
            if (x <= 0.0) return 0.0;
            const double s = halfnormal_scale(p0);
            return std::erf(x / (s * kSqrt2));
        }
    }
    return 0.0;
}

double pdf(const Dist& d, double x) {
    const auto [p0, p1] = d.params;
    switch (d.family) {
        case Family::Normal: {
            const double z = (x - p0) / p1;
            return std::exp(normal_logpdf(z)) / p1;
        }
        case Family::LogNormal: {
            if (x <= 0.0) return 0.0;
            const double z = (std::log(x) - p0) / p1;
            return std::exp(normal_logpdf(z)) / (p1 * x);
        }
        case Family::Gamma: {
            if (x <= 0.0) return 0.0;
            const double lg = (p0 - 1.0) * std::log(x / p1) - x / p1 - std::lgamma(p0) -
                              std::log(p1);
            return std::exp(lg);
        }
        case Family::Beta: {
            if (x <= 0.0 || x >= 1.0) return 0.0;
            const double lb = std::lgamma(p0 + p1) - std::lgamma(p0) - std::lgamma(p1);
            return std::exp(lb + (p0 - 1.0) * std::log(x) + (p1 - 1.0) * std::log1p(-x));
        }
        case Family::Weibull: {
            if (x <= 0.0) return 0.0;
            const double t = std::pow(x / p1, p0);
            return (p0 / p1) * std::pow(x / p1, p0 - 1.0) * std::exp(-t);
        }
        case Family::HalfNormal: {
            if (x <= 0.0) return 0.0;
            const double s = halfnormal_scale(p0);
            const double z = x / s;
            return std::sqrt(2.0 / kPi) / s * std::exp(-0.5 * z * z);
        }
    }
    return 0.0;
}

double quantile(const Dist& d, double p) {
    require(p > 0.0 && p < 1.0, "quantile: p must be in (0,1)");
    const auto [p0, p1] = d.params;
    switch (d.family) {
        case Family::Normal:
            return p0 + p1 * normal_quantile(p);
        case Family::LogNormal:
            return std::exp(p0 + p1 * normal_quantile(p));
        case Family::Gamma:
            return p1 * boost::math::gamma_p_inv(p0, p);
        case Family::Beta:
            return boost::math::ibeta_inv(p0, p1, p);
        case Family::Weibull:
            return p1 * std::pow(-std::log1p(-p), 1.0 / p0);
        case Family::HalfNormal: {
            const double s = halfnormal_scale(p0);
            return s * kSqrt2 * boost::math::erf_inv(p);
        }
    }
    return 0.0;
}

Moments moments(const Dist& d) {
    const auto [p0, p1] = d.params;
    switch (d.family) {
        case Family::Normal:
            return {p0, p1};
        case Family::LogNormal: {
            const double m = std::exp(p0 + 0.5 * p1 * p1);
            return {m, m * std::sqrt(std::expm1(p1 * p1))};
        }
        case Family::Gamma:
            return {p0 * p1, std::sqrt(p0) * p1};
        case Family::Beta: {
            const double s = p0 + p1;
            return {p0 / s, std::sqrt(p0 * p1 / (s * s * (s + 1.0)))};
        }
        case Family::Weibull: {
            const double g1 = std::tgamma(1.0 + 1.0 / p0);
            const double g2 = std::tgamma(1.0 + 2.0 / p0);
            const double var = p1 * p1 * (g2 - g1 * g1);
            return {p1 * g1, std::sqrt(std::max(var, 0.0))};
        }
        case Family::HalfNormal: {
            // mean = s*sqrt(2/pi) = p0; var = s^2 (1 - 2/pi).
            const double s = halfnormal_scale(p0);
            return {p0, s * std::sqrt(1.0 - 2.0 / kPi)};
        }
    }
    return {0.0, 0.0};
}

namespace {

double normal_draw(Rng& rng) { return normal_quantile(rng.uniform_open()); }

// Marsaglia-Tsang squeeze for shape >= 1; boosting trick below 1.
double gamma_draw_std(double shape, Rng& rng) {
    if (shape < 1.0) {
        const double u = rng.uniform_open();
        return gamma_draw_std(shape + 1.0, rng) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = normal_draw(rng);
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = rng.uniform_open();
        if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
}

}  // namespace

double sample_one(const Dist& d, Rng& rng) {
    const auto [p0, p1] = d.params;
    switch (d.family) {
        case Family::Normal:
            return p0 + p1 * normal_draw(rng);
        case Family::LogNormal:
            return std::exp(p0 + p1 * normal_draw(rng));
        case Family::Gamma:
            return p1 * gamma_draw_std(p0, rng);
        case Family::Beta: {
            const double x = gamma_draw_std(p0, rng);
            const double y = gamma_draw_std(p1, rng);
            return x / (x + y);
        }
        case Family::Weibull:
            return p1 * std::pow(-std::log1p(-rng.uniform_open()), 1.0 / p0);
        case Family::HalfNormal:
            return halfnormal_scale(p0) * std::fabs(normal_draw(rng));
    }
    return 0.0;
}

std::vector<double> sample(const Dist& d, std::size_t n, Rng& rng) {
    require(n >= 1, "sample: n must be >= 1");
    std::vector<double> out(n);
    for (auto& x : out) x = sample_one(d, rng);
    return out;
}

double boxcox(double lambda, double x) {
    if (!(x > 0.0)) throw std::domain_error("boxcox: x must be > 0");
    if (lambda == 0.0) return std::log(x);
    // expm1 keeps the lambda -> 0 limit continuous to machine precision.
    return std::expm1(lambda * std::log(x)) / lambda;
}

double boxcox_inv(double lambda, double y) {
    if (lambda == 0.0) return std::exp(y);
    const double t = lambda * y;
    if (!(t > -1.0)) throw std::domain_error("boxcox_inv: lambda*y + 1 must be > 0");
    return std::exp(std::log1p(t) / lambda);
}

double boxcox_deriv(double lambda, double x) {
    if (!(x > 0.0)) throw std::domain_error("boxcox_deriv: x must be > 0");
    return std::pow(x, lambda - 1.0);
}

}  // namespace metamed
