// Special functions on and near the critical line: the phase theta(t), the
// functional-equation factor chi(s) with zeta(s) = chi(s) zeta(1-s), the
// derivatives zeta^(j)(s) by differentiated Euler-Maclaurin summation, the
// real Hardy function Z(t) = e^{i theta(t)} zeta(1/2+it), and
// Z1(s) = zeta'(s) + f(s) zeta(s) with f = -(1/2) chi'/chi, whose zeros on
// the critical line are exactly the zeros of Z'(t).
#pragma once

#include <complex>
#include <vector>

namespace zext {

using cdouble = std::complex<double>;

// Requested accuracy for Euler-Maclaurin evaluation.
struct EvalAccuracy {
    double abs_tol = 1e-10;  // target absolute error per bundle entry
    int max_terms = 80;      // cap on Bernoulli correction depth
};

// values[j] = zeta^(j)(s) for j = 0..n.
struct DerivativeBundle {
    std::vector<cdouble> values;
};

// log Gamma(z), continuous branch agreeing with real log Gamma on (0, inf),
// by shifted Stirling series. z must not be a pole (0, -1, -2, ... ).
cdouble log_gamma(cdouble z);
// psi(z) = Gamma'(z)/Gamma(z) and its derivative psi'(z).
cdouble digamma(cdouble z);
cdouble trigamma(cdouble z);

// Riemann-Siegel phase: theta(t) = Im log Gamma(1/4 + it/2) - (t/2) log pi.
// Asymptotic series for t >= 10, Gamma route below; requires t >= 1.
double theta(double t);
double theta_deriv(double t);

// chi(s) = 2^s pi^{s-1} sin(pi s / 2) Gamma(1-s); on the critical line
// chi(1/2+it) = e^{-2 i theta(t)}.
cdouble chi(cdouble s);
// (chi'/chi)(s) = log 2pi + (pi/2) cot(pi s/2) - psi(1-s); requires
// |Re s| <= 2 plus |Im s| > 1 (the strip the callers use).
cdouble chi_log_deriv(cdouble s);
// d/ds of chi'/chi.
cdouble chi_log_deriv_deriv(cdouble s);
// f(s) = -(1/2)(chi'/chi)(s) and its derivative.
cdouble phase_f(cdouble s);
cdouble phase_f_deriv(cdouble s);

// zeta^(j)(s) for j = 0..n by Euler-Maclaurin with termwise derivatives.
// Throws std::domain_error at s = 1, std::runtime_error if the correction
// terms cannot reach acc.abs_tol within acc.max_terms.
DerivativeBundle zeta_derivs(cdouble s, int n, EvalAccuracy acc = {});

// Z(t) and Z'(t); real by construction, imaginary residue checked <= 1e-9.
double hardy_z(double t, EvalAccuracy acc = {});
double hardy_z_deriv(double t, EvalAccuracy acc = {});

// Z1(s) = zeta'(s) + f(s) zeta(s); |Z1(1/2+it)| = |Z'(t)|.
cdouble z1(cdouble s, EvalAccuracy acc = {});
// Z1'/Z1 = (zeta'' + f' zeta + f zeta') / (zeta' + f zeta); throws when the
// denominator is below 1e-12 in magnitude (caller brackets zeros).
cdouble z1_log_deriv(cdouble s, EvalAccuracy acc = {});

} // namespace zext
