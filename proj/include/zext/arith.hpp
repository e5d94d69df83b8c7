#pragma once
// Exact integer-indexed arithmetic functions (von Mangoldt weights, their
// Dirichlet-convolution powers, and related coefficient families) plus
// brute-force partial sums used as oracles for the asymptotic formulas.

#include <cstdint>
#include <string>
#include <vector>

namespace zext {

// Values indexed 1..upper (slot 0 unused).
struct ArithmeticTable {
    std::int64_t upper = 0;
    std::vector<double> values;
    double at(std::int64_t m) const { return values[static_cast<std::size_t>(m)]; }
};

enum class SumKind { A_kj, A_k2, A_k3, psi_n, log_sum };
std::string to_string(SumKind k);

struct SumRecord {
    double x = 0.0;
    double value = 0.0;
    SumKind definition = SumKind::log_sum;
};

// Dirichlet convolution (f * g)(n) = sum_{d | n} f(d) g(n/d), truncated to
// the shorter of the two input ranges.
ArithmeticTable convolve(const ArithmeticTable& f, const ArithmeticTable& g);

// log p when n is a power of the prime p, otherwise 0.
double von_mangoldt(std::int64_t n);

// Table of von Mangoldt values for m = 1..upper (smallest-prime-factor sieve).
ArithmeticTable von_mangoldt_table(std::int64_t upper);

// k-fold convolution power: Lambda_0 = convolution unit, Lambda_k = Lambda_{k-1} * Lambda.
ArithmeticTable lambda_k(int k, std::int64_t upper);

// a_k(m) = ((Lambda * log) conv Lambda_{k-1})(m), k >= 1.
ArithmeticTable a_k_coeffs(int k, std::int64_t upper);

// Recurrence family: L^(1) = Lambda, L^(k+1)(n) = L^(k)(n) log n + (L^(k) conv Lambda)(n).
ArithmeticTable lambda_upper(int k, std::int64_t upper);

// Exact partial sums over the hyperbola m1*m2 <= x:
//   A_kj : sum (-1)^j (log m1)^j a_k(m2)
//   A_k2 : sum a_k(m2)                     (the j = 0 shape)
//   A_k3 : sum_{n <= x} a_k(n)             (single index)
SumRecord brute_sum_A(SumKind kind, int k, int j, double x);

// sum_{m1 m2 <= x} Lambda(m1) (log m1)^n.
SumRecord brute_sum_psi_n(int n, double x);

// sum_{m <= x} log m.
SumRecord brute_sum_log(double x);

} // namespace zext
