#pragma once
// Running partial sums of zeta, its derivatives, and the functional-equation
// factor chi over the tabulated critical points, plus comparison reports
// against the assembled asymptotic predictions.

#include <ostream>
#include <string>
#include <vector>

#include "zext/asymptotic.hpp"
#include "zext/special.hpp"
#include "zext/zeros.hpp"

namespace zext {

enum class Observable {
    zeta_deriv_n,   // zeta^(n) at the |zeta| extrema
    zeta,           // zeta at the extrema
    chi_at_lambda,  // chi at the extrema
    chi_at_gamma,   // chi at the zeros
    z_squared,      // Z(lambda)^2
};
std::string to_string(Observable o);
Observable observable_from_token(const std::string& token);

struct RunningSum {
    Observable observable = Observable::zeta;
    int n = 0;  // derivative order (zeta_deriv_n only)
    std::vector<double> ordinates;
    std::vector<double> partial_re;
    std::vector<double> partial_im;
};

struct ComparisonReport {
    Observable observable = Observable::zeta;
    int n = 0;
    std::vector<double> T_grid;
    std::vector<double> empirical_re;
    std::vector<double> empirical_im;
    // predictions[d-1][i]: cumulative d-term prediction at T_grid[i];
    // residuals[d-1][i] = empirical_re[i] - predictions[d-1][i].
    std::vector<std::vector<double>> predictions;
    std::vector<std::vector<double>> residuals;
    std::vector<double> avg_abs_residual;  // time-averaged |residual| per depth
};

struct EnvelopeCheck {
    std::string name;
    bool hard = true;   // soft checks are reported but never fail a run
    bool pass = false;
    double measured = 0.0;
    double bound = 0.0;
};

struct SecondMomentReport {
    double T = 0.0;
    double empirical = 0.0;
    double one_term = 0.0;
    double two_term = 0.0;
    double ratio_one = 0.0;
    double ratio_two = 0.0;
};

// One entry per table point (flagged sub-gamma_1 extrema included only when
// requested); per-point evaluations may run in parallel, prefix sums are a
// sequential compensated pass, so results are partition-independent.
RunningSum accumulate(Observable obs, int n, const ZeroTable& table,
                      bool include_flagged = false, int threads = 1,
                      EvalAccuracy acc = {});

// Residual curves against cumulative 1..D term predictions (D = number of
// terms in the table).  Points with log(T/2pi) <= 0 get NaN predictions and
// are excluded from the averages.
ComparisonReport compare(const RunningSum& sum, const CoefficientTable& table);

// Regression envelopes for a comparison report (bounds depend on observable).
std::vector<EnvelopeCheck> envelope_checks(const ComparisonReport& report);

// Ratio of the accumulated Z(lambda)^2 sum to its one- and two-term
// predictions at the final ordinate; always a soft check.
SecondMomentReport second_moment_check(const RunningSum& z_squared_sum);

// CSV: ordinate,partial_re,partial_im,pred_1..pred_D,resid_1..resid_D.
// A stride > 1 thins interior rows; the final row is always written.
void write_comparison_csv(std::ostream& os, const ComparisonReport& report,
                          int stride = 1);

std::string summary_json(const ComparisonReport& report);

} // namespace zext
