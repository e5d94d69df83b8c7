#include "zext/arith.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "zext/compensated.hpp"

namespace zext {

namespace {

constexpr std::int64_t CONV_GUARD = 10'000'000;
constexpr std::int64_t LOG_GUARD = 100'000'000;

void check_upper(std::int64_t upper, std::int64_t guard, const char* who) {
    if (upper < 1) throw std::domain_error(std::string(who) + ": upper >= 1 required");
    if (upper > guard) throw std::domain_error(std::string(who) + ": size guard exceeded");
}

// Smallest-prime-factor sieve, spf[1] = 1.
std::vector<std::int32_t> spf_sieve(std::int64_t upper) {
    std::vector<std::int32_t> spf(static_cast<std::size_t>(upper) + 1, 0);
    if (upper >= 1) spf[1] = 1;
    for (std::int64_t i = 2; i <= upper; ++i) {
        if (spf[static_cast<std::size_t>(i)] != 0) continue;
        for (std::int64_t j = i; j <= upper; j += i)
            if (spf[static_cast<std::size_t>(j)] == 0)
                spf[static_cast<std::size_t>(j)] = static_cast<std::int32_t>(i);
    }
    return spf;
}

std::int64_t floor_int(double x) {
    return static_cast<std::int64_t>(std::floor(x + 1e-9));
}

} // namespace

ArithmeticTable convolve(const ArithmeticTable& f, const ArithmeticTable& g) {
    std::int64_t upper = std::min(f.upper, g.upper);
    ArithmeticTable h;
    h.upper = upper;
    h.values.assign(static_cast<std::size_t>(upper) + 1, 0.0);
    for (std::int64_t d = 1; d <= upper; ++d) {
        double fd = f.values[static_cast<std::size_t>(d)];
        if (fd == 0.0) continue;
        for (std::int64_t e = 1; d * e <= upper; ++e) {
            double ge = g.values[static_cast<std::size_t>(e)];
            if (ge != 0.0) h.values[static_cast<std::size_t>(d * e)] += fd * ge;
        }
    }
    return h;
}

std::string to_string(SumKind k) {
    switch (k) {
        case SumKind::A_kj: return "A_kj";
        case SumKind::A_k2: return "A_k2";
        case SumKind::A_k3: return "A_k3";
        case SumKind::psi_n: return "psi_n";
        case SumKind::log_sum: return "log_sum";
    }
    return "?";
}

double von_mangoldt(std::int64_t n) {
    if (n < 1) throw std::domain_error("von_mangoldt: n >= 1 required");
    if (n == 1) return 0.0;
    std::int64_t p = 0, m = n;
    for (std::int64_t f = 2; f * f <= m; ++f) {
        if (m % f == 0) {
            p = f;
            break;
        }
    }
    if (p == 0) return std::log(static_cast<double>(n));  // n prime
    while (m % p == 0) m /= p;
    return m == 1 ? std::log(static_cast<double>(p)) : 0.0;
}

ArithmeticTable von_mangoldt_table(std::int64_t upper) {
    check_upper(upper, CONV_GUARD, "von_mangoldt_table");
    auto spf = spf_sieve(upper);
    ArithmeticTable t;
    t.upper = upper;
    t.values.assign(static_cast<std::size_t>(upper) + 1, 0.0);
    for (std::int64_t n = 2; n <= upper; ++n) {
        std::int64_t p = spf[static_cast<std::size_t>(n)];
        std::int64_t m = n;
        while (m % p == 0) m /= p;
        if (m == 1)
            t.values[static_cast<std::size_t>(n)] = std::log(static_cast<double>(p));
    }
    return t;
}

ArithmeticTable lambda_k(int k, std::int64_t upper) {
    if (k < 0) throw std::domain_error("lambda_k: k >= 0 required");
    check_upper(upper, CONV_GUARD, "lambda_k");
    if (k == 0) {
        ArithmeticTable unit;
        unit.upper = upper;
        unit.values.assign(static_cast<std::size_t>(upper) + 1, 0.0);
        unit.values[1] = 1.0;
        return unit;
    }
    ArithmeticTable lam = von_mangoldt_table(upper);
    ArithmeticTable acc = lam;
    for (int i = 2; i <= k; ++i) acc = convolve(acc, lam);
    return acc;
}

ArithmeticTable a_k_coeffs(int k, std::int64_t upper) {
    if (k < 1) throw std::domain_error("a_k_coeffs: k >= 1 required");
    check_upper(upper, CONV_GUARD, "a_k_coeffs");
    ArithmeticTable lamlog = von_mangoldt_table(upper);
    for (std::int64_t m = 2; m <= upper; ++m)
        lamlog.values[static_cast<std::size_t>(m)] *=
            std::log(static_cast<double>(m));
    if (k == 1) return lamlog;  // convolution with the unit
    return convolve(lamlog, lambda_k(k - 1, upper));
}

ArithmeticTable lambda_upper(int k, std::int64_t upper) {
    if (k < 1) throw std::domain_error("lambda_upper: k >= 1 required");
    check_upper(upper, CONV_GUARD, "lambda_upper");
    ArithmeticTable lam = von_mangoldt_table(upper);
    ArithmeticTable cur = lam;
    for (int i = 1; i < k; ++i) {
        ArithmeticTable conv = convolve(cur, lam);
        for (std::int64_t n = 1; n <= upper; ++n) {
            double logn = n == 1 ? 0.0 : std::log(static_cast<double>(n));
            conv.values[static_cast<std::size_t>(n)] +=
                cur.values[static_cast<std::size_t>(n)] * logn;
        }
        cur = std::move(conv);
    }
    return cur;
}

SumRecord brute_sum_A(SumKind kind, int k, int j, double x) {
    if (kind != SumKind::A_kj && kind != SumKind::A_k2 && kind != SumKind::A_k3)
        throw std::domain_error("brute_sum_A: kind must be A_kj, A_k2, or A_k3");
    if (k < 1 || j < 0) throw std::domain_error("brute_sum_A: k >= 1, j >= 0 required");
    if (x > static_cast<double>(CONV_GUARD))
        throw std::domain_error("brute_sum_A: size guard exceeded");
    SumRecord rec;
    rec.x = x;
    rec.definition = kind;
    std::int64_t xi = floor_int(x);
    if (xi < 1) return rec;
    ArithmeticTable ak = a_k_coeffs(k, xi);

    NeumaierSum total;
    if (kind == SumKind::A_k3) {
        for (std::int64_t n = 1; n <= xi; ++n) total.add(ak.at(n));
    } else if (kind == SumKind::A_k2 || j == 0) {
        for (std::int64_t n = 1; n <= xi; ++n) {
            double v = ak.at(n);
            if (v != 0.0) total.add(v * static_cast<double>(xi / n));
        }
    } else {
        // Prefix sums of (log m)^j let each hyperbola leg close in O(1).
        std::vector<double> prefix(static_cast<std::size_t>(xi) + 1, 0.0);
        NeumaierSum run;
        for (std::int64_t m = 1; m <= xi; ++m) {
            if (m > 1) run.add(std::pow(std::log(static_cast<double>(m)), j));
            prefix[static_cast<std::size_t>(m)] = run.value();
        }
        double sign = (j % 2 == 0) ? 1.0 : -1.0;
        for (std::int64_t n = 1; n <= xi; ++n) {
            double v = ak.at(n);
            if (v != 0.0)
                total.add(sign * v * prefix[static_cast<std::size_t>(xi / n)]);
        }
    }
    rec.value = total.value();
    return rec;
}

SumRecord brute_sum_psi_n(int n, double x) {
    if (n < 0) throw std::domain_error("brute_sum_psi_n: n >= 0 required");
    if (x > static_cast<double>(CONV_GUARD))
        throw std::domain_error("brute_sum_psi_n: size guard exceeded");
    SumRecord rec;
    rec.x = x;
    rec.definition = SumKind::psi_n;
    std::int64_t xi = floor_int(x);
    if (xi < 2) return rec;
    ArithmeticTable lam = von_mangoldt_table(xi);
    NeumaierSum total;
    for (std::int64_t m = 2; m <= xi; ++m) {
        double v = lam.at(m);
        if (v == 0.0) continue;
        double w = v * std::pow(std::log(static_cast<double>(m)), n);
        total.add(w * static_cast<double>(xi / m));
    }
    rec.value = total.value();
    return rec;
}

SumRecord brute_sum_log(double x) {
    if (x > static_cast<double>(LOG_GUARD))
        throw std::domain_error("brute_sum_log: size guard exceeded");
    SumRecord rec;
    rec.x = x;
    rec.definition = SumKind::log_sum;
    std::int64_t xi = floor_int(x);
    if (xi < 2) return rec;
    NeumaierSum total;
    for (std::int64_t m = 2; m <= xi; ++m)
        total.add(std::log(static_cast<double>(m)));
    rec.value = total.value();
    return rec;
}

} // namespace zext
