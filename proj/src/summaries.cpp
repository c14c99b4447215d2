#include "metamed/summaries.hpp"

#include <algorithm>
#include <cmath>

namespace metamed {

const char* scenario_name(Scenario s) {
    switch (s) {
        case Scenario::S1: return "S1";
        case Scenario::S2: return "S2";
        case Scenario::S3: return "S3";
    }
    return "?";
}

QuantileSummary QuantileSummary::s1(double q_min, double median, double q_max, long n) {
    QuantileSummary s;
    s.scenario = Scenario::S1;
    s.q_min = q_min;
    s.q2 = median;
    s.q_max = q_max;
    s.n = n;
    s.validate();
    return s;
}

QuantileSummary QuantileSummary::s2(double q1, double median, double q3, long n) {
    QuantileSummary s;
    s.scenario = Scenario::S2;
    s.q1 = q1;
    s.q2 = median;
    s.q3 = q3;
    s.n = n;
    s.validate();
    return s;
}

QuantileSummary QuantileSummary::s3(double q_min, double q1, double median, double q3,
                                    double q_max, long n) {
    QuantileSummary s;
    s.scenario = Scenario::S3;
    s.q_min = q_min;
    s.q1 = q1;
    s.q2 = median;
    s.q3 = q3;
    s.q_max = q_max;
    s.n = n;
    s.validate();
    return s;
}

std::vector<double> QuantileSummary::present() const {
    std::vector<double> v;
    for (const auto& q : {q_min, q1, q2, q3, q_max}) {
        if (q) v.push_back(*q);
    }
    return v;
}

void QuantileSummary::validate() const {
    if (n < 1) throw SummaryError("summary: n must be >= 1");
    const bool want_minmax = scenario != Scenario::S2;
    const bool want_quartiles = scenario != Scenario::S1;
    if (!q2) throw SummaryError("summary: median missing");
    if (want_minmax != (q_min.has_value() && q_max.has_value()))
        throw SummaryError("summary: min/max presence does not match scenario");
    if (want_quartiles != (q1.has_value() && q3.has_value()))
        throw SummaryError("summary: quartile presence does not match scenario");
    const auto vals = present();
    for (double v : vals) {
        if (!std::isfinite(v)) throw SummaryError("summary: non-finite quantile");
    }
    if (!std::is_sorted(vals.begin(), vals.end()))
        throw SummaryError("summary: quantiles out of order");
}

bool QuantileSummary::strictly_ordered() const {
    const auto vals = present();
    for (std::size_t i = 1; i < vals.size(); ++i) {
        if (!(vals[i - 1] < vals[i])) return false;
    }
    return true;
}

namespace {

// Linear interpolation of order statistics at position 1 + (n-1)p.
double interp_quantile(const std::vector<double>& sorted, double p) {
    const double pos = (static_cast<double>(sorted.size()) - 1.0) * p;
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const double frac = pos - static_cast<double>(lo);
    if (lo + 1 >= sorted.size()) return sorted.back();
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

}  // namespace

QuantileSummary extract_summary(std::vector<double> data, Scenario scenario) {
    if (data.size() < 5) throw SummaryError("extract_summary: need at least 5 observations");
    for (double v : data) {
        if (!std::isfinite(v)) throw SummaryError("extract_summary: non-finite observation");
    }
    std::sort(data.begin(), data.end());
    const long n = static_cast<long>(data.size());
    const double med = interp_quantile(data, 0.5);
    switch (scenario) {
        case Scenario::S1:
            return QuantileSummary::s1(data.front(), med, data.back(), n);
        case Scenario::S2:
            return QuantileSummary::s2(interp_quantile(data, 0.25), med,
                                       interp_quantile(data, 0.75), n);
        case Scenario::S3:
            return QuantileSummary::s3(data.front(), interp_quantile(data, 0.25), med,
                                       interp_quantile(data, 0.75), data.back(), n);
    }
    throw SummaryError("extract_summary: bad scenario");
}

double bowley_skewness(const QuantileSummary& s) {
    if (!s.q1 || !s.q3) throw SummaryError("bowley_skewness: quartiles required");
    const double q1 = *s.q1, q2 = *s.q2, q3 = *s.q3;
    if (!(q3 > q1)) throw SummaryError("bowley_skewness: degenerate IQR (q3 <= q1)");
    return (q3 + q1 - 2.0 * q2) / (q3 - q1);
}

QuantileSummary break_ties(const QuantileSummary& s) {
    s.validate();
    if (s.strictly_ordered()) return s;

    auto vals = s.present();
    // Sweep low to high; whenever a quantile fails to exceed its left
    // neighbour, raise it by 2.5% of its magnitude until it does. Raising the
    // higher member of a tie cascades outward (q3 before q_max).
    for (std::size_t i = 1; i < vals.size(); ++i) {
        int guard = 0;
        while (!(vals[i] > vals[i - 1])) {
            const double step = 0.025 * std::fabs(vals[i]);
            if (step <= 0.0 || ++guard > 4000)
                throw SummaryError("break_ties: cannot break ties (zero quantile)");
            vals[i] += step;
        }
    }

    QuantileSummary out = s;
    std::size_t i = 0;
    for (auto* q : {&out.q_min, &out.q1, &out.q2, &out.q3, &out.q_max}) {
        if (q->has_value()) *q = vals[i++];
    }
    out.validate();
    return out;
}

ScreenDecision screen_study(const TwoGroupSummary& t, long min_n, double skew_cap) {
    for (const auto* g : {&t.group1, &t.group2}) {
        if (const auto* qs = std::get_if<QuantileSummary>(g)) {
            if (qs->n < min_n) return {false, "small-sample"};
            if (qs->q1 && qs->q3 && *qs->q3 > *qs->q1) {
                if (bowley_skewness(*qs) > skew_cap) return {false, "skewness"};
            }
        }
    }
    return {true, ""};
}

}  // namespace metamed
