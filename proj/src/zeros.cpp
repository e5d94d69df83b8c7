#include "zext/zeros.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace zext {

namespace {

constexpr double PI = 3.14159265358979323846264338327950288;
constexpr double BISECT_WIDTH = 1e-10;
constexpr double SUBDIV_FLOOR = 1e-3;

// Newton solve of theta(t) = target; allows the n = -1 mesh anchor.
// The tolerance must scale with ulp(target): theta grows like (t/2) log t, so
// at t ~ 1e4 a few ulps of rounding in theta already exceed 1e-11 and Newton
// would oscillate between two adjacent representable t forever.
double solve_theta_equals(double target, double guess) {
    double t = guess;
    const double tol =
        1e-11 + 8.0 * std::numeric_limits<double>::epsilon() * std::abs(target);
    for (int it = 0; it < 50; ++it) {
        double err = theta(t) - target;
        if (std::abs(err) < tol) return t;
        double step = err / theta_deriv(t);
        t -= step;
        if (t < 7.5) t = 7.5;  // stay right of the theta minimum at ~6.29
    }
    throw std::runtime_error("gram_point: Newton failed to converge in 50 steps");
}

double gram_guess(double npi_over_pi) {
    // Solve u (log u - 1) = n + 1/8 for u = t / 2pi, then t = 2 pi u.
    double rhs = npi_over_pi + 0.125;
    double u = std::max(std::exp(1.0) + 0.3, rhs / 2.0);
    for (int it = 0; it < 60; ++it) {
        double h = u * (std::log(u) - 1.0) - rhs;
        double dh = std::log(u);
        if (std::abs(dh) < 1e-9) break;
        double un = u - h / dh;
        if (un < std::exp(1.0) * 1.0001) un = std::exp(1.0) * 1.0001;
        if (std::abs(un - u) < 1e-13 * u) { u = un; break; }
        u = un;
    }
    return 2.0 * PI * u;
}

struct Bracket {
    double a, b;
    double fa, fb;
};

// Deterministic range-parallel map: fn(i) -> out[i].
template <typename F>
void parallel_index(std::size_t count, int threads, F&& fn) {
    if (threads <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::size_t nt = std::min<std::size_t>(threads, count);
    std::size_t chunk = (count + nt - 1) / nt;
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errs(nt);
    for (std::size_t w = 0; w < nt; ++w) {
        pool.emplace_back([&, w] {
            try {
                std::size_t lo = w * chunk, hi = std::min(count, lo + chunk);
                for (std::size_t i = lo; i < hi; ++i) fn(i);
            } catch (...) {
                errs[w] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
}

// Bisection to width BISECT_WIDTH followed by 3 Newton polish steps.
template <typename F, typename DF>
double refine(Bracket br, F&& f, DF&& fprime) {
    double a = br.a, b = br.b, fa = br.fa;
    while (b - a > BISECT_WIDTH) {
        double m = 0.5 * (a + b);
        double fm = f(m);
        if (fm == 0.0) { a = b = m; break; }
        if ((fa < 0.0) == (fm < 0.0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    double t = 0.5 * (a + b);
    for (int it = 0; it < 3; ++it) {
        double d = fprime(t);
        if (d == 0.0) break;
        double step = f(t) / d;
        if (std::abs(step) > 1.0) break;  // reject wild steps, keep bisection t
        t -= step;
    }
    return t;
}

} // namespace

std::string to_string(PointKind k) {
    switch (k) {
        case PointKind::gram: return "gram";
        case PointKind::zeta_zero: return "zeta_zero";
        case PointKind::zprime_zero: return "zprime_zero";
    }
    return "?";
}

double gram_point(std::int64_t n) {
    if (n < 0) throw std::domain_error("gram_point: n >= 0 required");
    return solve_theta_equals(static_cast<double>(n) * PI,
                              gram_guess(static_cast<double>(n)));
}

namespace {

ZeroTable find_zeta_zeros_core(double t_max, double mesh_max, int threads,
                               EvalAccuracy acc) {
    if (t_max < 15.0)
        throw std::domain_error("find_zeta_zeros: t_max >= 15 required");

    // Gram mesh from the theta = -pi anchor (~9.667) upward.
    std::vector<double> mesh;
    mesh.push_back(solve_theta_equals(-PI, 9.7));
    for (std::int64_t nn = 0;; ++nn) {
        double g = gram_point(nn);
        if (g >= mesh_max) {
            mesh.push_back(mesh_max);
            break;
        }
        mesh.push_back(g);
    }

    std::vector<double> zval(mesh.size());
    parallel_index(mesh.size(), threads,
                   [&](std::size_t i) { zval[i] = hardy_z(mesh[i], acc); });

    std::vector<Bracket> brackets;
    std::vector<Bracket> quiet;  // leaves with no sign change
    for (std::size_t i = 0; i + 1 < mesh.size(); ++i) {
        Bracket c{mesh[i], mesh[i + 1], zval[i], zval[i + 1]};
        if ((c.fa < 0.0) != (c.fb < 0.0))
            brackets.push_back(c);
        else
            quiet.push_back(c);
    }

    const std::int64_t expected =
        static_cast<std::int64_t>(std::floor(theta(mesh_max) / PI)) + 1;

    // Subdivide tenfold until the counting formula is satisfied (or exceeded,
    // which the caller reports as a positive delta), floor step 1e-3.
    bool widened = false;  // whether sign-change leaves joined the subdivision
    while (static_cast<std::int64_t>(brackets.size()) < expected) {
        std::vector<Bracket> work;
        auto widest = [](const std::vector<Bracket>& v) {
            double w = 0.0;
            for (const auto& c : v) w = std::max(w, c.b - c.a);
            return w;
        };
        if (widest(quiet) > SUBDIV_FLOOR) {
            work.swap(quiet);
        } else if (!widened && widest(brackets) > SUBDIV_FLOOR) {
            work.swap(brackets);
            widened = true;
        } else {
            throw std::runtime_error(
                "find_zeta_zeros: count not reconciled at subdivision floor");
        }
        std::vector<std::array<double, 11>> grid(work.size());
        parallel_index(work.size(), threads, [&](std::size_t i) {
            const Bracket& c = work[i];
            for (int p = 1; p <= 9; ++p)
                grid[i][p] = hardy_z(c.a + (c.b - c.a) * p / 10.0, acc);
        });
        for (std::size_t i = 0; i < work.size(); ++i) {
            const Bracket& c = work[i];
            grid[i][0] = c.fa;
            grid[i][10] = c.fb;
            for (int p = 0; p < 10; ++p) {
                Bracket sub{c.a + (c.b - c.a) * p / 10.0,
                            c.a + (c.b - c.a) * (p + 1) / 10.0, grid[i][p],
                            grid[i][p + 1]};
                if ((sub.fa < 0.0) != (sub.fb < 0.0))
                    brackets.push_back(sub);
                else
                    quiet.push_back(sub);
            }
        }
        std::sort(brackets.begin(), brackets.end(),
                  [](const Bracket& x, const Bracket& y) { return x.a < y.a; });
    }

    std::vector<double> zeros(brackets.size());
    parallel_index(brackets.size(), threads, [&](std::size_t i) {
        zeros[i] = refine(
            brackets[i], [&](double t) { return hardy_z(t, acc); },
            [&](double t) { return hardy_z_deriv(t, acc); });
    });
    std::sort(zeros.begin(), zeros.end());

    ZeroTable table;
    table.kind = PointKind::zeta_zero;
    table.t_max = t_max;
    for (double t : zeros) {
        CriticalPoint p;
        p.ordinate = t;
        p.kind = PointKind::zeta_zero;
        p.index = static_cast<std::int64_t>(table.points.size()) + 1;
        p.residual = std::abs(hardy_z(t, acc));
        if (p.residual > 1e-8)
            throw std::runtime_error("find_zeta_zeros: refinement residual above 1e-8");
        table.points.push_back(p);
    }
    return table;
}

} // namespace

ZeroTable find_zeta_zeros(double t_max, int threads, EvalAccuracy acc) {
    ZeroTable t = find_zeta_zeros_core(t_max, t_max, threads, acc);
    return t;
}

ZeroTable find_zeta_zeros_extended(double t_max, int threads, EvalAccuracy acc) {
    double ext = t_max + 8.0;
    for (int tries = 0; tries < 8; ++tries) {
        ZeroTable t = find_zeta_zeros_core(t_max, ext, threads, acc);
        if (!t.points.empty() && t.points.back().ordinate > t_max) return t;
        ext += 8.0;
    }
    throw std::runtime_error("find_zeta_zeros_extended: no zero found above t_max");
}

ZeroTable find_zprime_zeros(const ZeroTable& gammas, double t_max, int threads,
                            EvalAccuracy acc) {
    if (gammas.kind != PointKind::zeta_zero)
        throw std::domain_error("find_zprime_zeros: needs a zeta_zero table");
    if (gammas.points.empty() || gammas.points.back().ordinate <= t_max)
        throw std::domain_error(
            "find_zprime_zeros: gamma table must extend past t_max");

    ZeroTable out;
    out.kind = PointKind::zprime_zero;
    out.t_max = t_max;

    // The two extrema below the first gamma, located by a fixed fine scan.
    {
        const double lo = 1.05, hi = gammas.points.front().ordinate - 1e-6;
        const int steps = 128;
        double prev_t = lo, prev_v = hardy_z_deriv(lo, acc);
        std::vector<double> low;
        for (int i = 1; i <= steps; ++i) {
            double t = lo + (hi - lo) * i / steps;
            double v = hardy_z_deriv(t, acc);
            if ((prev_v < 0.0) != (v < 0.0)) {
                low.push_back(refine(
                    Bracket{prev_t, t, prev_v, v},
                    [&](double x) { return hardy_z_deriv(x, acc); },
                    [&](double x) {
                        DerivativeBundle b = zeta_derivs(cdouble(0.5, x), 2, acc);
                        double td = theta_deriv(x), th = theta(x);
                        // theta'' exactly via the Gamma route; the asymptotic
                        // form is unusable this far below t = 10
                        double td2 = -0.25 * trigamma(cdouble(0.25, 0.5 * x)).imag();
                        cdouble e = std::exp(cdouble(0.0, th));
                        cdouble z2 = cdouble(0.0, 1.0) * e *
                                     (td2 * b.values[0] +
                                      cdouble(0.0, 1.0) *
                                          (td * td * b.values[0] +
                                           2.0 * td * b.values[1] + b.values[2]));
                        return z2.real();
                    }));
            }
            prev_t = t;
            prev_v = v;
        }
        for (double t : low) {
            if (t > t_max) continue;
            CriticalPoint p;
            p.ordinate = t;
            p.kind = PointKind::zprime_zero;
            p.flagged = true;
            p.residual = std::abs(hardy_z_deriv(t, acc));
            out.points.push_back(p);
        }
    }

    // One extremum per (gamma_i, gamma_{i+1}).
    const auto& g = gammas.points;
    std::vector<double> zd(g.size());
    parallel_index(g.size(), threads, [&](std::size_t i) {
        zd[i] = hardy_z_deriv(g[i].ordinate, acc);
    });
    std::size_t pairs = g.size() - 1;
    std::vector<double> lam(pairs, -1.0);
    parallel_index(pairs, threads, [&](std::size_t i) {
        if (g[i].ordinate > t_max) return;
        double a = g[i].ordinate, b = g[i + 1].ordinate;
        double fa = zd[i], fb = zd[i + 1];
        if ((fa < 0.0) == (fb < 0.0))
            throw std::runtime_error(
                "find_zprime_zeros: no sign change of Z' in a gamma interval");
        lam[i] = refine(
            Bracket{a, b, fa, fb},
            [&](double x) { return hardy_z_deriv(x, acc); },
            [&](double x) {
                DerivativeBundle bb = zeta_derivs(cdouble(0.5, x), 2, acc);
                double td = theta_deriv(x), th = theta(x);
                double td2 = -0.25 * trigamma(cdouble(0.25, 0.5 * x)).imag();
                cdouble e = std::exp(cdouble(0.0, th));
                cdouble z2 = cdouble(0.0, 1.0) * e *
                             (td2 * bb.values[0] +
                              cdouble(0.0, 1.0) *
                                  (td * td * bb.values[0] + 2.0 * td * bb.values[1] +
                                   bb.values[2]));
                return z2.real();
            });
    });
    for (std::size_t i = 0; i < pairs; ++i) {
        if (lam[i] < 0.0 || lam[i] > t_max) continue;
        CriticalPoint p;
        p.ordinate = lam[i];
        p.kind = PointKind::zprime_zero;
        p.residual = std::abs(hardy_z_deriv(lam[i], acc));
        out.points.push_back(p);
    }

    std::sort(out.points.begin(), out.points.end(),
              [](const CriticalPoint& x, const CriticalPoint& y) {
                  return x.ordinate < y.ordinate;
              });
    for (std::size_t i = 0; i < out.points.size(); ++i)
        out.points[i].index = static_cast<std::int64_t>(i) + 1;
    return out;
}

CountReport verify_counts(const ZeroTable& table) {
    CountReport r;
    r.found = static_cast<std::int64_t>(table.points.size());
    std::int64_t formula =
        static_cast<std::int64_t>(std::floor(theta(table.t_max) / PI)) + 1;
    if (table.kind == PointKind::zprime_zero) {
        r.expected_from_theta = formula + 1;
        std::int64_t flagged = 0;
        for (const auto& p : table.points)
            if (p.flagged) ++flagged;
        r.flagged_low = flagged;
        r.bookkeeping = std::to_string(flagged) + " flagged below gamma_1 + " +
                        std::to_string(r.found - flagged) +
                        " interlacing; expected = zeta-count formula + 1";
    } else {
        r.expected_from_theta = formula;
        r.bookkeeping = "expected = floor(theta(t_max)/pi) + 1";
    }
    r.delta = r.found - r.expected_from_theta;
    return r;
}

void write_zero_csv(std::ostream& os, const ZeroTable& table) {
    os << "index,kind,ordinate,residual\n";
    char buf[128];
    for (const auto& p : table.points) {
        std::snprintf(buf, sizeof buf, "%lld,%s,%.15g,%.15g\n",
                      static_cast<long long>(p.index),
                      to_string(p.kind).c_str(), p.ordinate, p.residual);
        os << buf;
    }
}

} // namespace zext
