#include "zext/series.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace zext {

namespace {

const double STIELTJES[31] = {
    0.5772156649015328606065121,     // gamma_0
    -0.07281584548367672486058638,   // gamma_1
    -0.009690363192872318484530386,  // gamma_2
    0.002053834420303345866160047,   // gamma_3
    0.002325370065467300057468170,   // gamma_4
    0.0007933238173010627017533349,  // gamma_5
    -0.0002387693454301996098724218, // gamma_6
    -0.0005272895670577510460740975, // gamma_7
    -0.0003521233538030395096020522, // gamma_8
    -0.00003439477441808804817791462,// gamma_9
    0.0002053328149090647946837223,  // gamma_10
    0.0002701844395439035266729021,  // gamma_11
    0.0001672729121051401933535015,  // gamma_12
    -0.00002746380660376015886000760,// gamma_13
    -0.0002092092620592999458371397, // gamma_14
    -0.0002834686553202414466429345, // gamma_15
    -0.0001996968583089697747077846, // gamma_16
    0.00002627703710991833669946660, // gamma_17
    0.0003073684081492528265927548,  // gamma_18
    0.0005036054530473556290555964,  // gamma_19
    0.0004663435615115594494005948,  // gamma_20
    0.0001044377697560001158107957,  // gamma_21
    -0.0005415995822039977016551962, // gamma_22
    -0.001243962090408245779299742,  // gamma_23
    -0.001588511278903561561906197,  // gamma_24
    -0.001074591952738488824724292,  // gamma_25
    0.0006568035186371544315047730,  // gamma_26
    0.003477836913618538209007360,   // gamma_27
    0.006400068531700629458107228,   // gamma_28
    0.007371151770472239134412402,   // gamma_29
    0.003557728855573160947913538,   // gamma_30
};

void require_width(const TruncatedLaurentSeries& a, int need, const char* who) {
    if (need > a.length())
        throw std::domain_error(std::string(who) +
                                ": trustworthy width exceeded");
}

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

} // namespace

std::string to_string(FamilyKind k) {
    switch (k) {
        case FamilyKind::c_kj: return "c_kj";
        case FamilyKind::c_k2: return "c_k2";
        case FamilyKind::c_k3: return "c_k3";
    }
    return "?";
}

double TruncatedLaurentSeries::coeff_at_order(int order) const {
    int i = order - min_order;
    if (i < 0 || i >= length()) return 0.0;
    return coeffs[static_cast<std::size_t>(i)];
}

const StieltjesTable& stieltjes_table() {
    static const StieltjesTable t = [] {
        StieltjesTable s;
        s.gammas.assign(STIELTJES, STIELTJES + 31);
        return s;
    }();
    return t;
}

TruncatedLaurentSeries zeta_series(int width) {
    if (width < 1) throw std::domain_error("zeta_series: width >= 1 required");
    if (width > 32)
        throw std::domain_error("zeta_series: embedded constant depth exceeded");
    TruncatedLaurentSeries s;
    s.min_order = -1;
    s.coeffs.resize(static_cast<std::size_t>(width));
    s.coeffs[0] = 1.0;
    double jfact = 1.0;
    for (int j = 0; j + 1 < width; ++j) {
        if (j > 0) jfact *= j;
        s.coeffs[static_cast<std::size_t>(j) + 1] =
            (j % 2 == 0 ? 1.0 : -1.0) * STIELTJES[j] / jfact;
    }
    return s;
}

TruncatedLaurentSeries one_over_s_series(int width) {
    if (width < 1) throw std::domain_error("one_over_s_series: width >= 1 required");
    TruncatedLaurentSeries s;
    s.min_order = 0;
    s.coeffs.resize(static_cast<std::size_t>(width));
    for (int j = 0; j < width; ++j)
        s.coeffs[static_cast<std::size_t>(j)] = (j % 2 == 0) ? 1.0 : -1.0;
    return s;
}

TruncatedLaurentSeries multiply(const TruncatedLaurentSeries& a,
                                const TruncatedLaurentSeries& b) {
    require_width(a, 1, "multiply");
    require_width(b, 1, "multiply");
    int w = std::min(a.length(), b.length());
    TruncatedLaurentSeries out;
    out.min_order = a.min_order + b.min_order;
    out.coeffs.assign(static_cast<std::size_t>(w), 0.0);
    for (int i = 0; i < w; ++i) {
        double acc = 0.0;
        for (int p = 0; p <= i; ++p)
            acc += a.coeffs[static_cast<std::size_t>(p)] *
                   b.coeffs[static_cast<std::size_t>(i - p)];
        out.coeffs[static_cast<std::size_t>(i)] = acc;
    }
    return out;
}

TruncatedLaurentSeries power(const TruncatedLaurentSeries& a, int k) {
    if (k < 0) throw std::domain_error("power: k >= 0 required");
    TruncatedLaurentSeries out;
    out.min_order = 0;
    out.coeffs.assign(static_cast<std::size_t>(a.length()), 0.0);
    out.coeffs[0] = 1.0;
    for (int i = 0; i < k; ++i) out = multiply(out, a);
    return out;
}

TruncatedLaurentSeries derivative(const TruncatedLaurentSeries& a) {
    require_width(a, 1, "derivative");
    TruncatedLaurentSeries out;
    out.min_order = a.min_order - 1;
    out.coeffs.resize(static_cast<std::size_t>(a.length()));
    for (int i = 0; i < a.length(); ++i)
        out.coeffs[static_cast<std::size_t>(i)] =
            static_cast<double>(a.min_order + i) *
            a.coeffs[static_cast<std::size_t>(i)];
    return out;
}

TruncatedLaurentSeries reciprocal(const TruncatedLaurentSeries& a) {
    require_width(a, 1, "reciprocal");
    double lead = a.coeffs[0];
    if (lead == 0.0)
        throw std::domain_error("reciprocal: zero leading coefficient");
    int w = a.length();
    TruncatedLaurentSeries out;
    out.min_order = -a.min_order;
    out.coeffs.assign(static_cast<std::size_t>(w), 0.0);
    out.coeffs[0] = 1.0 / lead;
    for (int i = 1; i < w; ++i) {
        double acc = 0.0;
        for (int q = 1; q <= i; ++q)
            acc += a.coeffs[static_cast<std::size_t>(q)] *
                   out.coeffs[static_cast<std::size_t>(i - q)];
        out.coeffs[static_cast<std::size_t>(i)] = -acc / lead;
    }
    return out;
}

TruncatedLaurentSeries shift(const TruncatedLaurentSeries& a, int pole_shift) {
    TruncatedLaurentSeries out = a;
    out.min_order += pole_shift;
    return out;
}

TruncatedLaurentSeries negate(const TruncatedLaurentSeries& a) {
    TruncatedLaurentSeries out = a;
    for (auto& c : out.coeffs) c = -c;
    return out;
}

double evaluate(const TruncatedLaurentSeries& a, double s) {
    double u = s - 1.0;
    double acc = 0.0;
    for (int i = a.length() - 1; i >= 0; --i)
        acc = acc * u + a.coeffs[static_cast<std::size_t>(i)];
    return acc * std::pow(u, a.min_order);
}

CoeffFamily c_family(FamilyKind kind, int k, int j, int L) {
    if (k < 1) throw std::domain_error("c_family: k >= 1 required");
    if (j < 0) throw std::domain_error("c_family: j >= 0 required");
    if (kind != FamilyKind::c_kj && j != 0)
        throw std::domain_error("c_family: j must be 0 unless kind is c_kj");

    TruncatedLaurentSeries z = zeta_series(32);
    TruncatedLaurentSeries lz = multiply(derivative(z), reciprocal(z));
    TruncatedLaurentSeries core =
        multiply(derivative(lz), power(negate(lz), k - 1));

    if (kind == FamilyKind::c_kj || kind == FamilyKind::c_k2) {
        TruncatedLaurentSeries w = z;
        for (int d = 0; d < (kind == FamilyKind::c_kj ? j : 0); ++d)
            w = derivative(w);
        core = multiply(core, w);
    }
    core = multiply(core, one_over_s_series(32));

    int pole = kind == FamilyKind::c_kj ? k + j + 2
               : kind == FamilyKind::c_k2 ? k + 2
                                          : k + 1;
    if (core.min_order != -pole)
        throw std::logic_error("c_family: unexpected pole order");
    require_width(core, L, "c_family");

    CoeffFamily fam;
    fam.kind = kind;
    fam.k = k;
    fam.j = kind == FamilyKind::c_kj ? j : 0;
    fam.values.assign(core.coeffs.begin(), core.coeffs.begin() + L);
    return fam;
}

std::vector<double> log_deriv_zeta_A_coeffs(int width) {
    TruncatedLaurentSeries z = zeta_series(32);
    TruncatedLaurentSeries lz = multiply(derivative(z), reciprocal(z));
    // lz = -1/(s-1) + A_0 + A_1 (s-1) + ...
    if (width + 1 > lz.length())
        throw std::domain_error("log_deriv_zeta_A_coeffs: depth exceeded");
    std::vector<double> out(static_cast<std::size_t>(width));
    for (int n = 0; n < width; ++n)
        out[static_cast<std::size_t>(n)] = lz.coeff_at_order(n);
    return out;
}

std::vector<double> residue_polynomial(FamilyKind kind, int k, int j,
                                       int count) {
    int D = kind == FamilyKind::c_kj ? k + j + 1
            : kind == FamilyKind::c_k2 ? k + 1
                                       : k;
    if (count < 0) count = D + 1;
    if (count > D + 1)
        throw std::domain_error("residue_polynomial: degree bound is D+1 coefficients");
    CoeffFamily fam = c_family(kind, k, j, count);
    std::vector<double> b(static_cast<std::size_t>(count));
    for (int l = 0; l < count; ++l)
        b[static_cast<std::size_t>(l)] = fam.values[static_cast<std::size_t>(l)] /
                                         factorial(D - l);
    return b;
}

std::string to_json(const CoeffFamily& fam) {
    std::ostringstream os;
    os.precision(17);
    os << "{\"kind\":\"" << to_string(fam.kind) << "\",\"k\":" << fam.k
       << ",\"j\":" << fam.j << ",\"values\":[";
    for (std::size_t i = 0; i < fam.values.size(); ++i) {
        if (i) os << ",";
        os << fam.values[i];
    }
    os << "]}";
    return os.str();
}

} // namespace zext
