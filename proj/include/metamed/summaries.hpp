#ifndef METAMED_SUMMARIES_HPP
#define METAMED_SUMMARIES_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace metamed {

/// Reporting scenarios: S1 = {min, median, max, n}, S2 = {q1, median, q3, n},
/// S3 = all five numbers plus n.
enum class Scenario { S1, S2, S3 };

const char* scenario_name(Scenario s);

class SummaryError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A study's reported quantile summary. Present fields are governed by the
/// scenario; present quantiles are weakly ordered.
struct QuantileSummary {
    Scenario scenario = Scenario::S2;
    std::optional<double> q_min;
    std::optional<double> q1;
    std::optional<double> q2;  // median, always present
    std::optional<double> q3;
    std::optional<double> q_max;
    long n = 0;

    static QuantileSummary s1(double q_min, double median, double q_max, long n);
    static QuantileSummary s2(double q1, double median, double q3, long n);
    static QuantileSummary s3(double q_min, double q1, double median, double q3, double q_max,
                              long n);

    /// Present quantiles in order (2+ values depending on scenario).
    std::vector<double> present() const;

    /// Throws SummaryError unless the scenario's fields are present, weakly
    /// ordered, finite, and n >= 1.
    void validate() const;

    bool strictly_ordered() const;
};

struct MeanSdSummary {
    double mean = 0.0;
    double sd = 0.0;
    long n = 0;
};

using GroupSummary = std::variant<QuantileSummary, MeanSdSummary>;

/// Per-group summary data for a two-group comparison.
struct TwoGroupSummary {
    GroupSummary group1;
    GroupSummary group2;
};

/// Sample quantile summary with the linear-interpolation rule at positions
/// 1 + (n-1)p; the median of an even-sized sample is the mean of the two
/// central order statistics. Requires data.size() >= 5.
QuantileSummary extract_summary(std::vector<double> data, Scenario scenario);

/// Quartile skewness (q3 + q1 - 2 q2) / (q3 - q1); requires q3 > q1.
double bowley_skewness(const QuantileSummary& s);

/// Raises each tied (or overtaken) quantile by 2.5% of its magnitude, sweeping
/// upward until the present quantiles are strictly ordered. No-op on strictly
/// ordered input.
QuantileSummary break_ties(const QuantileSummary& s);

struct ScreenDecision {
    bool keep = true;
    std::string reason;  // "small-sample" or "skewness" when dropped
};

/// Appendix-style screening: drop when any quantile-reporting group has
/// n < min_n, or has quartiles with Bowley coefficient > skew_cap. Groups
/// reporting mean/sd are not screened.
ScreenDecision screen_study(const TwoGroupSummary& t, long min_n = 10, double skew_cap = 0.75);

}  // namespace metamed

#endif
