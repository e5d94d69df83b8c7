#pragma once
// Truncated Laurent-series arithmetic about s = 1, the embedded generalized
// Euler-constant table, and the coefficient families extracted from products
// of zeta, its logarithmic derivative, and 1/s.

#include <string>
#include <vector>

namespace zext {

// Coefficients of (s-1)^(min_order + i) for i = 0..length-1.  `length` is the
// trustworthy width: arithmetic never reads past it, and operations that
// would need more coefficients fail loudly.
struct TruncatedLaurentSeries {
    int min_order = 0;
    std::vector<double> coeffs;
    int length() const { return static_cast<int>(coeffs.size()); }
    double coeff_at_order(int order) const;  // 0 outside the stored window
};

struct StieltjesTable {
    std::vector<double> gammas;  // gamma_0 .. gamma_30
};

enum class FamilyKind { c_kj, c_k2, c_k3 };
std::string to_string(FamilyKind k);

struct CoeffFamily {
    FamilyKind kind = FamilyKind::c_kj;
    int k = 0;
    int j = 0;
    std::vector<double> values;  // values[l] multiplies (s-1)^(-P+l)
};

const StieltjesTable& stieltjes_table();

// Series for zeta about s = 1: pole 1/(s-1) plus (-1)^j gamma_j / j! terms.
// `width` counts total coefficients including the pole; at most 32 available.
TruncatedLaurentSeries zeta_series(int width);

// Series for 1/s about s = 1: coefficients (-1)^j.
TruncatedLaurentSeries one_over_s_series(int width);

TruncatedLaurentSeries multiply(const TruncatedLaurentSeries& a,
                                const TruncatedLaurentSeries& b);
TruncatedLaurentSeries power(const TruncatedLaurentSeries& a, int k);
TruncatedLaurentSeries derivative(const TruncatedLaurentSeries& a);
TruncatedLaurentSeries reciprocal(const TruncatedLaurentSeries& a);
TruncatedLaurentSeries shift(const TruncatedLaurentSeries& a, int pole_shift);
TruncatedLaurentSeries negate(const TruncatedLaurentSeries& a);
double evaluate(const TruncatedLaurentSeries& a, double s);

// Laurent coefficients of the kernel products about s = 1:
//   c_kj : (zeta'/zeta)' (-zeta'/zeta)^(k-1) zeta^(j) / s   (pole order k+j+2)
//   c_k2 : same with weight zeta                            (pole order k+2)
//   c_k3 : same with no weight                              (pole order k+1)
// Returns values[0..L-1]; errors if L exceeds the trustworthy width.
CoeffFamily c_family(FamilyKind kind, int k, int j, int L);

// Regular-part coefficients A_n of zeta'/zeta(s) + 1/(s-1) about s = 1.
std::vector<double> log_deriv_zeta_A_coeffs(int width);

// Coefficients b_l = c_l / (D-l)! of the main-term polynomial
// x * sum_l b_l (log x)^(D-l), where D = k+j+1, k+1, k by kind.
// `count` defaults to the exact degree bound D+1; larger requests error.
std::vector<double> residue_polynomial(FamilyKind kind, int k, int j,
                                       int count = -1);

// JSON object {kind, k, j, values[]}.
std::string to_json(const CoeffFamily& fam);

} // namespace zext
