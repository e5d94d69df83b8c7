#include "zext/asymptotic.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "zext/compensated.hpp"
#include "zext/series.hpp"

namespace zext {

namespace {

constexpr double PI = 3.14159265358979323846264338327950288;
constexpr double E2 = 7.38905609893065022723042746057501;  // e^2
constexpr double STOP_RATIO = 1e-15;

double factorial(int n) {
    static const auto table = [] {
        std::vector<double> f(171, 1.0);
        for (int i = 2; i < 171; ++i) f[static_cast<std::size_t>(i)] = f[static_cast<std::size_t>(i) - 1] * i;
        return f;
    }();
    return table[static_cast<std::size_t>(n)];
}

double binom(int n, int k) {
    return factorial(n) / (factorial(k) * factorial(n - k));
}

double pow2(int k) { return std::ldexp(1.0, k); }

// Accumulator over L-orders -K .. top with compensated entries.
struct OrderTable {
    int K, top;
    std::vector<NeumaierSum> slots;
    OrderTable(int K_, int top_) : K(K_), top(top_), slots(static_cast<std::size_t>(K_ + top_ + 1)) {}
    void add(int order, double v) {
        if (order < -K || order > top) return;  // below truncation depth
        slots[static_cast<std::size_t>(order + K)].add(v);
    }
    double at(int order) const {
        return slots[static_cast<std::size_t>(order + K)].value();
    }
};

// Largest magnitude a single k-step contributed, for the adaptive stop rule.
struct StepMeter {
    double step_max = 0.0;
    void note(double v) { step_max = std::max(step_max, std::abs(v)); }
};

// gamma-family Laurent width needed so that every retained order is exact.
int family_width(int n, int K, int width) {
    if (width > 0) return std::min(32, width);
    return std::min(32, n + 2 + K);
}

// Prime-power k-sum piece of the derivative-moment assembly.  For each k and
// binomial index j the contribution splits into a pure power part and a
// logarithmic-integral part whose expansion depends on the sign of n - l.
void add_deriv_prime_step(OrderTable& t, StepMeter& meter, int n, int K, int k,
                          int width) {
    int Lw = family_width(n, K, width);
    for (int j = 0; j <= n; ++j) {
        CoeffFamily fam = c_family(FamilyKind::c_kj, k, j, Lw);
        int depth = std::min(k + j + 1, Lw - 1);
        double wkj = pow2(k) * binom(n, j);
        int q = k - n + j;
        for (int l = 0; l <= depth; ++l) {
            double base = wkj * fam.values[static_cast<std::size_t>(l)] /
                          factorial(k + j + 1 - l);
            meter.note(base);
            t.add(n + 1 - l, base);
        }
        if (q != 0) {
            for (int l = 0; l <= depth; ++l) {
                double pre = wkj * q * fam.values[static_cast<std::size_t>(l)] /
                             factorial(k + j + 1 - l);
                int p = n - l;
                if (p >= 0) {
                    for (int w = 0; w <= p; ++w) {
                        double v = pre * ((p - w) % 2 == 0 ? 1.0 : -1.0) *
                                   factorial(p) / factorial(w);
                        meter.note(v);
                        t.add(w, v);
                    }
                } else {
                    int qq = -p;
                    for (int m = qq; m <= K; ++m) {
                        double v = pre * factorial(m - 1) / factorial(qq - 1);
                        meter.note(v);
                        t.add(-m, v);
                    }
                }
            }
        }
    }
}

// Runs an adaptive k-sum: body(t, meter, k) adds the k-th increment.
template <typename Body>
std::pair<int, double> adaptive_ksum(OrderTable& t, int k_cap, Body&& body) {
    double run_max = 0.0, last_step = 0.0;
    int quiet = 0;
    for (int k = 1; k <= k_cap; ++k) {
        StepMeter meter;
        body(t, meter, k);
        run_max = std::max(run_max, meter.step_max);
        last_step = meter.step_max;
        if (meter.step_max < STOP_RATIO * run_max) {
            if (++quiet == 3) return {k, last_step};
        } else {
            quiet = 0;
        }
    }
    throw std::runtime_error("adaptive_ksum: k-sum not converged at its cap");
}

OrderTable deriv_prime_table(int n, int K, int k_cap, int width, int* k_used,
                             double* tail) {
    OrderTable t(K, n + 1);
    auto [k, last] = adaptive_ksum(t, k_cap, [&](OrderTable& tt, StepMeter& m, int kk) {
        add_deriv_prime_step(tt, m, n, K, kk, width);
    });
    if (k_used) *k_used = k;
    if (tail) *tail = last;
    // overall sign (-1)^(n+1)
    double sgn = (n % 2 == 0) ? -1.0 : 1.0;
    for (auto& s : t.slots) {
        double v = s.value() * sgn;
        s.reset();
        s.add(v);
    }
    return t;
}

// Polar piece: the simple-pole expansion terms plus the regular-part constant.
OrderTable deriv_polar_table(int n, int K) {
    OrderTable t(K, n + 1);
    double sgn_n = (n % 2 == 0) ? 1.0 : -1.0;
    t.add(n + 1, sgn_n / (n + 1));
    const auto& gam = stieltjes_table().gammas;
    for (int kk = 0; kk <= n; ++kk) {
        double gsum = -1.0;
        for (int jj = 0; jj <= kk; ++jj)
            gsum += gam[static_cast<std::size_t>(jj)] / factorial(jj);
        double v = sgn_n * binom(n, kk) * (kk % 2 == 0 ? 1.0 : -1.0) *
                   factorial(kk) * gsum;
        t.add(n - kk, v);
    }
    std::vector<double> A = log_deriv_zeta_A_coeffs(n + 1);
    t.add(0, -factorial(n) * A[static_cast<std::size_t>(n)]);
    return t;
}

} // namespace

std::string to_string(MomentFamily f) {
    switch (f) {
        case MomentFamily::deriv_moment: return "thm1";
        case MomentFamily::deriv_moment_first: return "corollary";
        case MomentFamily::value_moment: return "thm2";
        case MomentFamily::factor_moment_extrema: return "thm3";
        case MomentFamily::factor_moment_zeros: return "thm4";
        case MomentFamily::prime_moment: return "hugpc";
        case MomentFamily::square_two_term: return "hlpc2";
    }
    return "?";
}

MomentFamily family_from_token(const std::string& token) {
    if (token == "thm1") return MomentFamily::deriv_moment;
    if (token == "corollary") return MomentFamily::deriv_moment_first;
    if (token == "thm2") return MomentFamily::value_moment;
    if (token == "thm3") return MomentFamily::factor_moment_extrema;
    if (token == "thm4") return MomentFamily::factor_moment_zeros;
    if (token == "hugpc") return MomentFamily::prime_moment;
    if (token == "hlpc2") return MomentFamily::square_two_term;
    throw std::domain_error("unknown prediction family token: " + token);
}

double incomplete_gamma_sum(int n) {
    if (n < 0) throw std::domain_error("incomplete_gamma_sum: n >= 0 required");
    // The bracket 1 - e^2 sum_{k <= n+1} (-2)^k / k! equals
    // e^2 sum_{k >= n+2} (-2)^k / k!; summing the remainder forward avoids the
    // cancellation of the subtracted form (the partial sum approaches e^{-2}).
    double mp = 1.0;  // walks to (-2)^(n+2) / (n+2)!
    for (int k = 1; k <= n + 2; ++k) mp *= -2.0 / k;
    double rem = 0.0;
    for (int k = n + 2; k <= n + 80 && mp != 0.0; ++k) {
        rem += mp;
        mp *= -2.0 / (k + 1);
    }
    double sgn = (n % 2 == 0) ? -1.0 : 1.0;
    return (E2 - 1.0) / (n + 1) + sgn * (factorial(n) / pow2(n + 1)) * E2 * rem;
}

double deriv_moment_leading_closed(int n) {
    // (-1)^n [ (e^2-2)/(n+1) + (-1)^(n+1) (n!/2^(n+1)) (1 - e^2 sum_{k<=n+1} (-2)^k/k!) ]
    // where the bracket equals incomplete_gamma_sum(n) - 1/(n+1).
    double inner = incomplete_gamma_sum(n) - 1.0 / (n + 1);
    return (n % 2 == 0 ? 1.0 : -1.0) * inner;
}

CoefficientTable deriv_moment_coefficients(int n, int K, int k_cap, int width) {
    if (n < 1) throw std::domain_error("deriv_moment_coefficients: n >= 1 required");
    if (K < 1) throw std::domain_error("deriv_moment_coefficients: K >= 1 required");
    int k_used = 0;
    double tail = 0.0;
    OrderTable prime = deriv_prime_table(n, K, k_cap, width, &k_used, &tail);
    OrderTable polar = deriv_polar_table(n, K);

    CoefficientTable out;
    out.family = MomentFamily::deriv_moment;
    out.n = n;
    out.K = K;
    out.k_truncation = k_used;
    out.tail_estimate = tail;
    for (int order = n + 1; order >= 0; --order)
        out.positive_coeffs.push_back(-(polar.at(order) + prime.at(order)));
    for (int m = 1; m <= K; ++m)
        out.negative_coeffs.push_back(-(polar.at(-m) + prime.at(-m)));

    double lead_closed = deriv_moment_leading_closed(n);
    if (std::abs(out.positive_coeffs.front() - lead_closed) > 1e-9)
        throw std::logic_error(
            "deriv_moment_coefficients: leading coefficient fails its closed-form cross-check");
    return out;
}

double deriv_moment_prime_part(int n, int order, int K) {
    OrderTable prime = deriv_prime_table(n, K, 80, 0, nullptr, nullptr);
    return prime.at(order);
}

CoefficientTable value_moment_coefficients(int K, int k_cap, int width) {
    if (K < 1) throw std::domain_error("value_moment_coefficients: K >= 1 required");
    OrderTable t(K, 1);
    auto [k_used, tail] = adaptive_ksum(t, k_cap, [&](OrderTable& tt, StepMeter& m, int k) {
        int Lw = family_width(0, K, width);
        CoeffFamily fam = c_family(FamilyKind::c_k2, k, 0, Lw);
        int depth = std::min(k + 1, Lw - 1);
        for (int l = 0; l <= depth; ++l) {
            double base = pow2(k) * fam.values[static_cast<std::size_t>(l)] /
                          factorial(k + 1 - l);
            m.note(base);
            tt.add(1 - l, base);
            double pre = base * k;
            if (l == 0) {
                m.note(pre);
                tt.add(0, pre);
            } else {
                for (int mm = l; mm <= K; ++mm) {
                    double v = pre * factorial(mm - 1) / factorial(l - 1);
                    m.note(v);
                    tt.add(-mm, v);
                }
            }
        }
    });
    CoefficientTable out;
    out.family = MomentFamily::value_moment;
    out.n = 0;
    out.K = K;
    out.k_truncation = k_used;
    out.tail_estimate = tail;
    out.positive_coeffs = {t.at(1), t.at(0)};
    for (int m = 1; m <= K; ++m) out.negative_coeffs.push_back(t.at(-m));
    return out;
}

CoefficientTable factor_moment_coefficients(int K, int k_cap, int width) {
    if (K < 1) throw std::domain_error("factor_moment_coefficients: K >= 1 required");
    OrderTable t(K, 0);
    t.add(0, -1.0);  // boundary contribution of the vertical segment
    auto [k_used, tail] = adaptive_ksum(t, k_cap, [&](OrderTable& tt, StepMeter& m, int k) {
        int Lw = family_width(0, K, width);
        CoeffFamily fam = c_family(FamilyKind::c_k3, k, 0, Lw);
        int depth = std::min(k, Lw - 1);
        for (int l = 0; l <= depth; ++l) {
            double base = pow2(k) * fam.values[static_cast<std::size_t>(l)] /
                          factorial(k - l);
            m.note(base);
            tt.add(-l, base);
            double pre = base * k;
            for (int mm = l + 1; mm <= K; ++mm) {
                double v = pre * factorial(mm - 1) / factorial(l);
                m.note(v);
                tt.add(-mm, v);
            }
        }
    });
    CoefficientTable out;
    out.family = MomentFamily::factor_moment_extrema;
    out.n = -1;
    out.K = K;
    out.k_truncation = k_used;
    out.tail_estimate = tail;
    out.positive_coeffs = {t.at(0)};
    for (int m = 1; m <= K; ++m) out.negative_coeffs.push_back(t.at(-m));
    return out;
}

Prediction factor_zeros_prediction(double T) {
    if (T <= 2.0 * PI)
        throw std::domain_error("factor_zeros_prediction: T > 2*pi required");
    Prediction p;
    p.T = T;
    p.L = std::log(T / (2.0 * PI));
    p.per_term = {-1.0};
    p.value = -T / (2.0 * PI);
    return p;
}

Prediction prime_moment_prediction(int n, double T) {
    if (n < 1) throw std::domain_error("prime_moment_prediction: n >= 1 required");
    if (T <= 2.0 * PI)
        throw std::domain_error("prime_moment_prediction: T > 2*pi required");
    Prediction p;
    p.T = T;
    p.L = std::log(T / (2.0 * PI));
    double x = T / (2.0 * PI);
    double sgn = (n % 2 == 0) ? -1.0 : 1.0;  // (-1)^(n+1)
    const auto& gam = stieltjes_table().gammas;

    NeumaierSum total;
    p.per_term.push_back(sgn / (n + 1) * std::pow(p.L, n + 1));
    total.add(p.per_term.back());
    for (int kk = 0; kk <= n; ++kk) {
        double gsum = -1.0;
        for (int jj = 0; jj <= kk; ++jj)
            gsum += gam[static_cast<std::size_t>(jj)] / factorial(jj);
        double term = sgn * binom(n, kk) * (kk % 2 == 0 ? 1.0 : -1.0) *
                      factorial(kk) * gsum * std::pow(p.L, n - kk);
        p.per_term.push_back(term);
        total.add(term);
    }
    std::vector<double> A = log_deriv_zeta_A_coeffs(n + 1);
    double an_term = factorial(n) * A[static_cast<std::size_t>(n)];
    p.per_term.push_back(an_term);
    total.add(an_term);
    p.value = total.value() * x;
    return p;
}

Prediction square_two_term_prediction(double T) {
    if (T <= 2.0 * PI)
        throw std::domain_error("square_two_term_prediction: T > 2*pi required");
    Prediction p;
    p.T = T;
    p.L = std::log(T / (2.0 * PI));
    double g0 = stieltjes_table().gammas[0];
    p.per_term = {(E2 - 5.0) / 2.0 * p.L * p.L,
                  (5.0 - E2 - 10.0 * g0 + 2.0 * E2 * g0) * p.L};
    p.value = (p.per_term[0] + p.per_term[1]) * T / (2.0 * PI);
    return p;
}

Prediction evaluate_prediction(const CoefficientTable& table, double T) {
    double L = std::log(T / (2.0 * PI));
    if (L <= 0.0)
        throw std::domain_error("evaluate_prediction: log(T/2pi) must be positive");
    Prediction p;
    p.T = T;
    p.L = L;
    NeumaierSum total;
    int top = table.n + 1;
    for (std::size_t i = 0; i < table.positive_coeffs.size(); ++i) {
        double term = table.positive_coeffs[i] *
                      std::pow(L, top - static_cast<int>(i));
        p.per_term.push_back(term);
        total.add(term);
    }
    for (std::size_t m = 0; m < table.negative_coeffs.size(); ++m) {
        double term = table.negative_coeffs[m] /
                      std::pow(L, static_cast<int>(m) + 1);
        p.per_term.push_back(term);
        total.add(term);
    }
    p.value = total.value() * T / (2.0 * PI);
    return p;
}

CoefficientTable coefficients_for(MomentFamily f, int n, int K, int k_cap) {
    switch (f) {
        case MomentFamily::deriv_moment:
            return deriv_moment_coefficients(n, K, k_cap);
        case MomentFamily::deriv_moment_first: {
            CoefficientTable t = deriv_moment_coefficients(1, K, k_cap);
            t.family = MomentFamily::deriv_moment_first;
            return t;
        }
        case MomentFamily::value_moment:
            return value_moment_coefficients(K, k_cap);
        case MomentFamily::factor_moment_extrema:
            return factor_moment_coefficients(K, k_cap);
        case MomentFamily::factor_moment_zeros: {
            CoefficientTable t;
            t.family = f;
            t.n = -1;
            t.K = 0;
            t.positive_coeffs = {-1.0};
            return t;
        }
        case MomentFamily::prime_moment: {
            if (n < 1) throw std::domain_error("prime-moment table: n >= 1 required");
            CoefficientTable t;
            t.family = f;
            t.n = n;
            t.K = 0;
            double sgn = (n % 2 == 0) ? -1.0 : 1.0;
            const auto& gam = stieltjes_table().gammas;
            t.positive_coeffs.push_back(sgn / (n + 1));
            for (int kk = 0; kk <= n; ++kk) {
                double gsum = -1.0;
                for (int jj = 0; jj <= kk; ++jj)
                    gsum += gam[static_cast<std::size_t>(jj)] / factorial(jj);
                t.positive_coeffs.push_back(sgn * binom(n, kk) *
                                            (kk % 2 == 0 ? 1.0 : -1.0) *
                                            factorial(kk) * gsum);
            }
            std::vector<double> A = log_deriv_zeta_A_coeffs(n + 1);
            t.positive_coeffs.back() += factorial(n) * A[static_cast<std::size_t>(n)];
            return t;
        }
        case MomentFamily::square_two_term: {
            CoefficientTable t;
            t.family = f;
            t.n = 1;
            t.K = 0;
            double g0 = stieltjes_table().gammas[0];
            t.positive_coeffs = {(E2 - 5.0) / 2.0,
                                 5.0 - E2 - 10.0 * g0 + 2.0 * E2 * g0};
            return t;
        }
    }
    throw std::domain_error("coefficients_for: unknown family");
}

std::vector<double> printed_first_moment_constants() {
    double g0 = stieltjes_table().gammas[0];
    double g1 = stieltjes_table().gammas[1];
    return {-(E2 - 3.0) / 4.0, (E2 - 3.0 + 2.0 * g0) / 2.0,
            (3.0 - E2 * (1.0 + 2.0 * g0 + 2.0 * g1)) / 2.0};
}

std::string to_json(const CoefficientTable& table) {
    std::ostringstream os;
    os.precision(17);
    os << "{\"theorem\":\"" << to_string(table.family) << "\",\"n\":" << table.n
       << ",\"K\":" << table.K << ",\"positive\":[";
    for (std::size_t i = 0; i < table.positive_coeffs.size(); ++i) {
        if (i) os << ",";
        os << table.positive_coeffs[i];
    }
    os << "],\"negative\":[";
    for (std::size_t i = 0; i < table.negative_coeffs.size(); ++i) {
        if (i) os << ",";
        os << table.negative_coeffs[i];
    }
    os << "],\"k_truncation\":" << table.k_truncation
       << ",\"tail_estimate\":" << table.tail_estimate << "}";
    return os.str();
}

} // namespace zext
