#pragma once
// Assembly of the predicted asymptotic expansions for the first moments of
// zeta, its derivatives, and the functional-equation factor chi, taken over
// the critical-line extrema of |zeta| and over the non-trivial zeros.  The
// coefficient tables are built from truncated Laurent-series families with
// adaptive truncation of the infinite k-sums.

#include <string>
#include <vector>

namespace zext {

// Prediction families.  The short export tokens (thm1, corollary, thm2, thm3,
// thm4, hugpc, hlpc2) are the interface vocabulary used by the CLI and file
// formats.
enum class MomentFamily {
    deriv_moment,           // token thm1:  sum of zeta^(n) over |zeta| extrema
    deriv_moment_first,     // token corollary: the n = 1 specialization
    value_moment,           // token thm2:  sum of zeta over the extrema
    factor_moment_extrema,  // token thm3:  sum of chi over the extrema
    factor_moment_zeros,    // token thm4:  sum of chi over the zeros
    prime_moment,           // token hugpc: weighted prime-power sum
    square_two_term,        // token hlpc2: two-term squared-max moment
};
std::string to_string(MomentFamily f);
MomentFamily family_from_token(const std::string& token);

// Coefficients of (T/2pi) * [ sum_i positive_coeffs[i] * L^(n+1-i)
//                             + sum_m negative_coeffs[m-1] / L^m ].
struct CoefficientTable {
    MomentFamily family = MomentFamily::deriv_moment;
    int n = 0;             // top power of L is n+1
    int K = 0;             // depth of negative powers
    std::vector<double> positive_coeffs;
    std::vector<double> negative_coeffs;
    int k_truncation = 0;
    double tail_estimate = 0.0;
};

struct Prediction {
    double T = 0.0;
    double L = 0.0;        // log(T / 2pi)
    double value = 0.0;
    std::vector<double> per_term;  // highest power first; value = sum * T/2pi
};

// Derivative moment (order n >= 1), K negative-power coefficients.
// Internally cross-checks the assembled leading coefficient against its
// incomplete-gamma closed form.  k_cap bounds the adaptive k-sum; width
// overrides the Laurent-family width (0 = automatic) — both exist so
// truncation robustness can be demonstrated, not to tune results.
CoefficientTable deriv_moment_coefficients(int n, int K, int k_cap = 80,
                                           int width = 0);

// Zeta-value moment over the extrema.
CoefficientTable value_moment_coefficients(int K, int k_cap = 80, int width = 0);

// Chi moment over the extrema.
CoefficientTable factor_moment_coefficients(int K, int k_cap = 80, int width = 0);

// Chi moment over the zeros: the single term -T/2pi.
Prediction factor_zeros_prediction(double T);

// Weighted prime-power moment prediction for derivative order n:
// the full printed expansion in L with the constant-term A_n contribution.
Prediction prime_moment_prediction(int n, double T);

// Closed form of sum_{k>=1} 2^k / (k! (k+n+1)).
double incomplete_gamma_sum(int n);

// Two printed terms of the squared-max moment; deeper terms out of scope.
Prediction square_two_term_prediction(double T);

Prediction evaluate_prediction(const CoefficientTable& table, double T);

// Uniform table builder for every family (n ignored where not applicable).
CoefficientTable coefficients_for(MomentFamily f, int n, int K, int k_cap = 80);

// Closed form of the leading derivative-moment coefficient.
double deriv_moment_leading_closed(int n);

// The three printed first-moment (n = 1) coefficients as published; the
// machine-assembled table disagrees with the constant term (see README).
std::vector<double> printed_first_moment_constants();

// Internal prime-power k-sum piece of the derivative-moment assembly,
// exposed for cross-checks against its displayed closed forms.
double deriv_moment_prime_part(int n, int order, int K);

std::string to_json(const CoefficientTable& table);

} // namespace zext
