#include "zext/special.hpp"
#include "zext/compensated.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace zext {

namespace {

constexpr double PI = 3.14159265358979323846264338327950288;
constexpr double LOG_2PI = 1.83787706640934548356065947281123527;

// B_{2r} for r = 1..15, enough for Stirling tails at |z| >= 32.
constexpr std::array<double, 16> BERN2R = {
    0.0,  // unused slot r = 0
    1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0,
    -691.0 / 2730.0, 7.0 / 6.0, -3617.0 / 510.0, 43867.0 / 798.0,
    -174611.0 / 330.0, 854513.0 / 138.0, -236364091.0 / 2730.0,
    8553103.0 / 6.0, -23749461029.0 / 870.0, 8615841276005.0 / 14322.0};

// B_{2r}/(2r)! for the Euler-Maclaurin corrections, r = 1..60.  Small r use
// the exact rationals (the direct zeta(2r) sum converges too slowly there);
// for r >= 8 the identity B_{2r}/(2r)! = (-1)^{r+1} * 2 * zeta(2r) / (2 pi)^{2r}
// with a short zeta(2r) sum is accurate to well below double rounding.
const std::array<double, 61>& bern_over_fact() {
    static const std::array<double, 61> table = [] {
        std::array<double, 61> b{};
        b[1] = 1.0 / 12.0;
        b[2] = -1.0 / 720.0;
        b[3] = 1.0 / 30240.0;
        b[4] = -1.0 / 1209600.0;
        b[5] = 1.0 / 47900160.0;
        b[6] = -691.0 / 1307674368000.0;
        b[7] = 1.0 / 74724249600.0;
        double pow2pi = std::pow(2.0 * PI, 14.0);
        for (int r = 8; r <= 60; ++r) {
            double z = 1.0;
            for (int m = 2; m < 40; ++m) {
                double term = std::pow(static_cast<double>(m), -2.0 * r);
                z += term;
                if (term < 1e-20) break;
            }
            pow2pi *= (2.0 * PI) * (2.0 * PI);
            b[r] = ((r % 2 == 1) ? 2.0 : -2.0) * z / pow2pi;
        }
        return b;
    }();
    return table;
}

bool is_nonpositive_integer(cdouble z) {
    return z.imag() == 0.0 && z.real() <= 0.0 &&
           z.real() == std::floor(z.real());
}

// Stirling series for log Gamma, valid once |z| is large with Re z > 0-ish;
// callers shift first.
cdouble stirling_log_gamma(cdouble z) {
    cdouble lz = std::log(z);
    cdouble r = (z - 0.5) * lz - z + 0.5 * LOG_2PI;
    cdouble zinv2 = 1.0 / (z * z);
    cdouble p = 1.0 / z;
    for (int k = 1; k <= 12; ++k) {
        r += BERN2R[k] / (2.0 * k * (2.0 * k - 1.0)) * p;
        p *= zinv2;
    }
    return r;
}

} // namespace

cdouble log_gamma(cdouble z) {
    if (is_nonpositive_integer(z))
        throw std::domain_error("log_gamma: pole at non-positive integer");
    if (z.imag() < 0.0) return std::conj(log_gamma(std::conj(z)));
    // Im z >= 0 from here. Shift right until Stirling is accurate; the path
    // stays in the closed upper half-plane, so no branch cut is crossed and
    // the result is the continuous branch from the positive real axis.
    cdouble shift = 0.0;
    while (std::abs(z) < 32.0) {
        shift += std::log(z);
        z += 1.0;
    }
    return stirling_log_gamma(z) - shift;
}

cdouble digamma(cdouble z) {
    if (is_nonpositive_integer(z))
        throw std::domain_error("digamma: pole at non-positive integer");
    if (z.imag() < 0.0) return std::conj(digamma(std::conj(z)));
    cdouble shift = 0.0;
    while (std::abs(z) < 32.0) {
        shift += 1.0 / z;
        z += 1.0;
    }
    cdouble r = std::log(z) - 0.5 / z;
    cdouble zinv2 = 1.0 / (z * z);
    cdouble p = zinv2;
    for (int k = 1; k <= 12; ++k) {
        r -= BERN2R[k] / (2.0 * k) * p;
        p *= zinv2;
    }
    return r - shift;
}

cdouble trigamma(cdouble z) {
    if (is_nonpositive_integer(z))
        throw std::domain_error("trigamma: pole at non-positive integer");
    if (z.imag() < 0.0) return std::conj(trigamma(std::conj(z)));
    cdouble shift = 0.0;
    while (std::abs(z) < 32.0) {
        shift += 1.0 / (z * z);
        z += 1.0;
    }
    cdouble zinv = 1.0 / z;
    cdouble zinv2 = zinv * zinv;
    cdouble r = zinv + 0.5 * zinv2;
    cdouble p = zinv2 * zinv;
    for (int k = 1; k <= 12; ++k) {
        r += BERN2R[k] * p;
        p *= zinv2;
    }
    return r + shift;
}

double theta(double t) {
    if (t < 1.0) throw std::domain_error("theta: requires t >= 1");
    if (t >= 10.0) {
        double u = t / (2.0 * PI);
        double t2 = t * t;
        return 0.5 * t * std::log(u) - 0.5 * t - PI / 8.0 + 1.0 / (48.0 * t) +
               7.0 / (5760.0 * t * t2) + 31.0 / (80640.0 * t2 * t2 * t) +
               127.0 / (430080.0 * t2 * t2 * t2 * t);
    }
    cdouble lg = log_gamma(cdouble(0.25, 0.5 * t));
    return lg.imag() - 0.5 * t * std::log(PI);
}

double theta_deriv(double t) {
    if (t < 1.0) throw std::domain_error("theta_deriv: requires t >= 1");
    if (t >= 10.0) {
        double t2 = t * t;
        return 0.5 * std::log(t / (2.0 * PI)) - 1.0 / (48.0 * t2) -
               7.0 / (1920.0 * t2 * t2) - 31.0 / (16128.0 * t2 * t2 * t2) -
               127.0 / (61440.0 * t2 * t2 * t2 * t2);
    }
    cdouble ps = digamma(cdouble(0.25, 0.5 * t));
    return 0.5 * ps.real() - 0.5 * std::log(PI);
}

namespace {

// log sin(pi s / 2) for Im s > 0, in a form that never overflows:
// sin z = (i/2) e^{-iz} (1 - e^{2iz}) with |e^{2iz}| = e^{-2 Im z} < 1.
cdouble log_sin_half_pi(cdouble s) {
    cdouble z = 0.5 * PI * s;
    cdouble r = std::exp(cdouble(0.0, 2.0) * z);
    return cdouble(0.0, PI / 2.0) - std::log(2.0) - cdouble(0.0, 1.0) * z +
           std::log(1.0 - r);
}

} // namespace

cdouble chi(cdouble s) {
    if (s == cdouble(1.0, 0.0)) throw std::domain_error("chi: pole at s = 1");
    if (s.imag() < 0.0) return std::conj(chi(std::conj(s)));
    if (s.imag() == 0.0) {
        // Real s in a pole-free range: direct real evaluation.
        double x = s.real();
        if (x >= 1.0 || (x <= 0.0 && std::floor(x / 2.0) * 2.0 == x))
            throw std::domain_error("chi: real-axis pole");
        double v = std::pow(2.0, x) * std::pow(PI, x - 1.0) *
                   std::sin(0.5 * PI * x) * std::tgamma(1.0 - x);
        return cdouble(v, 0.0);
    }
    cdouble logchi = s * std::log(2.0) + (s - 1.0) * std::log(PI) +
                     log_sin_half_pi(s) + log_gamma(1.0 - s);
    return std::exp(logchi);
}

cdouble chi_log_deriv(cdouble s) {
    if (std::abs(s.real()) > 2.0 || std::abs(s.imag()) <= 1.0)
        throw std::domain_error("chi_log_deriv: outside |Re s| <= 2, |Im s| > 1");
    if (s.imag() < 0.0) return std::conj(chi_log_deriv(std::conj(s)));
    // cot z for Im z > 0: with r = e^{2iz}, cot z = -i (1 + r) / (1 - r).
    cdouble z = 0.5 * PI * s;
    cdouble r = std::exp(cdouble(0.0, 2.0) * z);
    cdouble cot = cdouble(0.0, -1.0) * (1.0 + r) / (1.0 - r);
    return LOG_2PI + 0.5 * PI * cot - digamma(1.0 - s);
}

cdouble chi_log_deriv_deriv(cdouble s) {
    if (std::abs(s.real()) > 2.0 || std::abs(s.imag()) <= 1.0)
        throw std::domain_error("chi_log_deriv_deriv: outside strip");
    if (s.imag() < 0.0) return std::conj(chi_log_deriv_deriv(std::conj(s)));
    // csc^2 z for Im z > 0: with r = e^{2iz}, 1/sin^2 z = -4 r / (1 - r)^2.
    cdouble z = 0.5 * PI * s;
    cdouble r = std::exp(cdouble(0.0, 2.0) * z);
    cdouble csc2 = -4.0 * r / ((1.0 - r) * (1.0 - r));
    return -0.25 * PI * PI * csc2 + trigamma(1.0 - s);
}

cdouble phase_f(cdouble s) { return -0.5 * chi_log_deriv(s); }
cdouble phase_f_deriv(cdouble s) { return -0.5 * chi_log_deriv_deriv(s); }

DerivativeBundle zeta_derivs(cdouble s, int n, EvalAccuracy acc) {
    if (s == cdouble(1.0, 0.0))
        throw std::domain_error("zeta_derivs: pole at s = 1");
    if (n < 0) throw std::domain_error("zeta_derivs: n >= 0 required");
    if (acc.max_terms < 8)
        throw std::domain_error("zeta_derivs: max_terms >= 8 required");
    if (s.real() < -4.0 || std::abs(s.imag()) > 2.0e5)
        throw std::domain_error("zeta_derivs: outside supported region");

    const int nb = n + 1;
    // Cutoff: the correction terms shrink per step by roughly (t/(2 pi N))^2,
    // and they stop shrinking once the index reaches ~sqrt((2 pi N)^2 - t^2)/2.
    // The first branch keeps the per-step ratio below ~0.59 so the 60-term
    // window always suffices; the second keeps the smallest reachable term
    // below the target at moderate heights, where the window is not binding.
    const double at = std::abs(s.imag());
    const int N = std::max(
        20, static_cast<int>(std::ceil(
                std::max(1.31 * at / (2.0 * PI),
                         at / (2.0 * PI) + 2.0 * std::cbrt(at)))));

    // Binomial table up to n.
    std::vector<std::vector<double>> binom(nb, std::vector<double>(nb, 0.0));
    for (int i = 0; i < nb; ++i) {
        binom[i][0] = 1.0;
        for (int a = 1; a <= i; ++a)
            binom[i][a] = binom[i - 1][a - 1] + (a <= i - 1 ? binom[i - 1][a] : 0.0);
    }

    // Main sum: sum_{m=1}^{N-1} (-log m)^j m^{-s}.
    std::vector<ComplexSum> acc_sum(nb);
    for (int m = 1; m < N; ++m) {
        double lm = std::log(static_cast<double>(m));
        cdouble ms = std::exp(-s * lm);
        double powl = 1.0;
        for (int j = 0; j < nb; ++j) {
            acc_sum[j].add(ms * powl);
            powl *= -lm;
        }
    }

    std::vector<cdouble> result(nb);
    const double logN = std::log(static_cast<double>(N));
    const cdouble Npow1ms = std::exp((1.0 - s) * logN);  // N^{1-s}
    const cdouble Npowms = Npow1ms / static_cast<double>(N);  // N^{-s}

    // Tail N^{1-s}/(s-1): j-th derivative by Leibniz over u = N^{1-s} and
    // v = 1/(s-1), with u^(a) = (-log N)^a u and v^(b) = (-1)^b b! (s-1)^{-b-1}.
    {
        cdouble sm1 = s - 1.0;
        std::vector<cdouble> vder(nb);
        cdouble vp = 1.0 / sm1;
        double fact = 1.0, sign = 1.0;
        for (int b = 0; b < nb; ++b) {
            vder[b] = sign * fact * vp;
            vp /= sm1;
            sign = -sign;
            fact *= (b + 1);
        }
        for (int j = 0; j < nb; ++j) {
            cdouble tj = 0.0;
            double powl = 1.0;
            for (int a = 0; a <= j; ++a) {
                // a derivatives on u, j-a on v
                tj += binom[j][a] * powl * Npow1ms * vder[j - a];
                powl *= -logN;
            }
            result[j] = tj;
        }
    }
    // Mid-point term N^{-s}/2.
    {
        double powl = 1.0;
        for (int j = 0; j < nb; ++j) {
            result[j] += 0.5 * powl * Npowms;
            powl *= -logN;
        }
    }
    for (int j = 0; j < nb; ++j) result[j] += acc_sum[j].value();

    // Bernoulli corrections T_r = B_{2r}/(2r)! * V_r * N^{1-s} with
    // V_r = prod_{i=0}^{2r-2}(s+i) / N^{2r}; derivative vectors of V_r carried
    // through the recurrence V_{r+1} = V_r * (s+2r-1)(s+2r)/N^2.
    {
        const auto& bf = bern_over_fact();
        const double N2 = static_cast<double>(N) * static_cast<double>(N);
        std::vector<cdouble> V(nb, 0.0), Vn(nb);
        V[0] = s / N2;
        if (nb > 1) V[1] = 1.0 / N2;
        std::vector<double> logNpow(nb);
        logNpow[0] = 1.0;
        for (int a = 1; a < nb; ++a) logNpow[a] = logNpow[a - 1] * (-logN);

        // Convergence is judged relative to the magnitude already accumulated,
        // so very large values (deep in the left half plane) do not demand an
        // unreachable absolute target.
        const double scale = std::max(1.0, std::abs(result[0]));
        int quiet = 0;
        bool converged = false;
        for (int r = 1; r <= acc.max_terms && r <= 60; ++r) {
            double maxterm = 0.0;
            for (int j = 0; j < nb; ++j) {
                cdouble tj = 0.0;
                for (int a = 0; a <= j; ++a)
                    tj += binom[j][a] * V[a] * logNpow[j - a];
                tj *= bf[r] * Npow1ms;
                result[j] += tj;
                maxterm = std::max(maxterm, std::abs(tj));
            }
            if (maxterm < 0.125 * acc.abs_tol * scale) {
                if (++quiet >= 2) { converged = true; break; }
            } else {
                quiet = 0;
            }
            // advance V to r+1
            cdouble g0 = (s + (2.0 * r - 1.0)) * (s + 2.0 * r) / N2;
            cdouble g1 = (2.0 * s + (4.0 * r - 1.0)) / N2;
            double g2 = 2.0 / N2;
            for (int i = 0; i < nb; ++i) {
                cdouble v = V[i] * g0;
                if (i >= 1) v += binom[i][1] * V[i - 1] * g1;
                if (i >= 2) v += binom[i][2] * V[i - 2] * g2;
                Vn[i] = v;
            }
            V.swap(Vn);
        }
        if (!converged)
            throw std::runtime_error(
                "zeta_derivs: correction terms did not reach abs_tol within max_terms");
    }

    DerivativeBundle out;
    out.values = std::move(result);
    return out;
}

double hardy_z(double t, EvalAccuracy acc) {
    if (t < 1.0) throw std::domain_error("hardy_z: requires t >= 1");
    DerivativeBundle b = zeta_derivs(cdouble(0.5, t), 0, acc);
    cdouble z = std::exp(cdouble(0.0, theta(t))) * b.values[0];
    if (std::abs(z.imag()) > 1e-9)
        throw std::runtime_error("hardy_z: imaginary residue exceeds 1e-9");
    return z.real();
}

double hardy_z_deriv(double t, EvalAccuracy acc) {
    if (t < 1.0) throw std::domain_error("hardy_z_deriv: requires t >= 1");
    DerivativeBundle b = zeta_derivs(cdouble(0.5, t), 1, acc);
    cdouble z = cdouble(0.0, 1.0) * std::exp(cdouble(0.0, theta(t))) *
                (theta_deriv(t) * b.values[0] + b.values[1]);
    if (std::abs(z.imag()) > 1e-9)
        throw std::runtime_error("hardy_z_deriv: imaginary residue exceeds 1e-9");
    return z.real();
}

cdouble z1(cdouble s, EvalAccuracy acc) {
    DerivativeBundle b = zeta_derivs(s, 1, acc);
    return b.values[1] + phase_f(s) * b.values[0];
}

cdouble z1_log_deriv(cdouble s, EvalAccuracy acc) {
    DerivativeBundle b = zeta_derivs(s, 2, acc);
    cdouble f = phase_f(s);
    cdouble den = b.values[1] + f * b.values[0];
    if (std::abs(den) < 1e-12)
        throw std::runtime_error("z1_log_deriv: |Z1| below 1e-12 near a zero");
    cdouble num = b.values[2] + f * b.values[1] + phase_f_deriv(s) * b.values[0];
    return num / den;
}

} // namespace zext
