// Command-line surface for the critical-line moment laboratory: zero tables,
// prediction coefficient tables, empirical running sums, comparison reports,
// and a built-in oracle selftest.
//
// Exit codes: 0 success, 2 precondition/usage, 3 numerical non-convergence,
// 4 envelope/validation failure.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "zext/arith.hpp"
#include "zext/asymptotic.hpp"
#include "zext/compensated.hpp"
#include "zext/config.hpp"
#include "zext/series.hpp"
#include "zext/special.hpp"
#include "zext/sums.hpp"
#include "zext/zeros.hpp"

namespace {

constexpr double PI = 3.14159265358979323846264338327950288;
constexpr const char* ARTIFACT_VERSION = "1.0.0";

using zext::RunConfig;

void write_run_json(const RunConfig& cfg, const std::string& command) {
    std::filesystem::create_directories(cfg.output_dir);
    std::ofstream out(cfg.output_dir + "/run.json");
    out << "{\"command\":\"" << command << "\",\"artifact_version\":\""
        << ARTIFACT_VERSION << "\",\"config\":" << zext::to_json(cfg) << "}\n";
}

// Smallest t whose zero-counting value floor(theta(t)/pi)+1 reaches count.
double ordinate_for_zero_count(std::int64_t count) {
    double target = (static_cast<double>(count) - 1.0) * PI;
    double t = 2.0 * PI * std::exp(1.0) + 1.0;
    for (int it = 0; it < 80; ++it) {
        double err = zext::theta(t) - target;
        if (std::abs(err) < 1e-9) break;
        t -= err / zext::theta_deriv(t);
        if (t < 15.0) t = 15.0;
    }
    return t;
}

struct ZeroBundle {
    zext::ZeroTable gammas_full;  // extends past the cutoff for bracketing
    zext::ZeroTable gammas;       // truncated to the run's range
    zext::ZeroTable lambdas;
};

// Builds both tables, either up to t_max or to the first `zero_count` points.
ZeroBundle build_zero_tables(const RunConfig& cfg, std::int64_t zero_count) {
    ZeroBundle b;
    double t_hi = cfg.t_max;
    if (zero_count > 0) t_hi = ordinate_for_zero_count(zero_count) + 5.0;
    b.gammas_full = zext::find_zeta_zeros_extended(t_hi, cfg.threads);
    b.lambdas = zext::find_zprime_zeros(b.gammas_full, t_hi, cfg.threads);

    b.gammas = b.gammas_full;
    b.gammas.t_max = t_hi;
    auto keep = [](zext::ZeroTable& tbl, auto pred) {
        auto& v = tbl.points;
        v.erase(std::remove_if(v.begin(), v.end(),
                               [&](const zext::CriticalPoint& p) { return !pred(p); }),
                v.end());
    };
    keep(b.gammas,
         [&](const zext::CriticalPoint& p) { return p.ordinate <= t_hi; });

    if (zero_count > 0) {
        if (static_cast<std::int64_t>(b.gammas.points.size()) < zero_count)
            throw std::runtime_error("zero table shorter than the requested count");
        b.gammas.points.resize(static_cast<std::size_t>(zero_count));
        b.gammas.t_max = b.gammas.points.back().ordinate;
        // keep lambdas up to the last kept gamma, plus the flagged low pair
        double cut = b.gammas.t_max;
        std::int64_t unflagged = 0;
        auto& lv = b.lambdas.points;
        lv.erase(std::remove_if(lv.begin(), lv.end(),
                                [&](const zext::CriticalPoint& p) {
                                    if (p.flagged) return false;
                                    if (p.ordinate > cut) return true;
                                    ++unflagged;
                                    return unflagged > zero_count;
                                }),
                 lv.end());
        b.lambdas.t_max = b.gammas.t_max;
    }
    return b;
}

int cmd_zeros(const RunConfig& cfg, std::int64_t zero_count) {
    ZeroBundle b = build_zero_tables(cfg, zero_count);
    std::filesystem::create_directories(cfg.output_dir);
    {
        std::ofstream out(cfg.output_dir + "/zeros_gamma.csv");
        zext::write_zero_csv(out, b.gammas);
    }
    {
        std::ofstream out(cfg.output_dir + "/zeros_lambda.csv");
        zext::write_zero_csv(out, b.lambdas);
    }
    zext::CountReport rg = zext::verify_counts(b.gammas);
    zext::CountReport rl = zext::verify_counts(b.lambdas);
    std::cout << "gamma:  found=" << rg.found << " expected=" << rg.expected_from_theta
              << " delta=" << rg.delta << " (" << rg.bookkeeping << ")\n";
    std::cout << "lambda: found=" << rl.found << " expected=" << rl.expected_from_theta
              << " delta=" << rl.delta << " flagged_low=" << rl.flagged_low << " ("
              << rl.bookkeeping << ")\n";
    if (zero_count == 0 && rg.delta != 0) {
        std::cerr << "count mismatch: zero count differs from the counting formula\n";
        return 3;
    }
    return 0;
}

int cmd_coeffs(const RunConfig& cfg, const std::string& theorem) {
    zext::MomentFamily fam = zext::family_from_token(theorem);
    if (fam == zext::MomentFamily::deriv_moment && cfg.n == 0) {
        std::cerr << "usage: the derivative moment needs n >= 1; the n = 0 sum "
                     "is the value moment (use --theorem thm2)\n";
        return 2;
    }
    zext::CoefficientTable table =
        zext::coefficients_for(fam, cfg.n, cfg.K, cfg.k_max);
    std::string js = zext::to_json(table);
    std::filesystem::create_directories(cfg.output_dir);
    std::ofstream out(cfg.output_dir + "/coeffs_" + theorem + ".json");
    out << js << "\n";
    std::cout << js << "\n";
    return 0;
}

zext::MomentFamily family_for_observable(zext::Observable obs, int n) {
    switch (obs) {
        case zext::Observable::zeta_deriv_n:
            return n == 1 ? zext::MomentFamily::deriv_moment_first
                          : zext::MomentFamily::deriv_moment;
        case zext::Observable::zeta: return zext::MomentFamily::value_moment;
        case zext::Observable::chi_at_lambda:
            return zext::MomentFamily::factor_moment_extrema;
        case zext::Observable::chi_at_gamma:
            return zext::MomentFamily::factor_moment_zeros;
        case zext::Observable::z_squared:
            return zext::MomentFamily::square_two_term;
    }
    throw std::domain_error("unknown observable");
}

int cmd_sums(const RunConfig& cfg, const std::string& observable,
             std::int64_t zero_count) {
    zext::Observable obs = zext::observable_from_token(observable);
    ZeroBundle b = build_zero_tables(cfg, zero_count);
    const zext::ZeroTable& tbl =
        obs == zext::Observable::chi_at_gamma ? b.gammas : b.lambdas;
    zext::RunningSum sum = zext::accumulate(obs, cfg.n, tbl,
                                            cfg.include_sub_gamma1_lambdas,
                                            cfg.threads);
    std::filesystem::create_directories(cfg.output_dir);
    std::ofstream out(cfg.output_dir + "/sums_" + observable + ".csv");
    out << "ordinate,partial_re,partial_im\n";
    char buf[96];
    for (std::size_t i = 0; i < sum.ordinates.size(); ++i) {
        bool last = i + 1 == sum.ordinates.size();
        if (!last && i % static_cast<std::size_t>(cfg.stride) != 0) continue;
        std::snprintf(buf, sizeof buf, "%.15g,%.15g,%.15g\n", sum.ordinates[i],
                      sum.partial_re[i], sum.partial_im[i]);
        out << buf;
    }
    std::cout << "points=" << sum.ordinates.size();
    if (!sum.ordinates.empty())
        std::cout << " final_T=" << sum.ordinates.back()
                  << " final_re=" << sum.partial_re.back()
                  << " final_im=" << sum.partial_im.back();
    std::cout << "\n";
    return 0;
}

int cmd_compare(const RunConfig& cfg, const std::string& observable,
                std::int64_t zero_count) {
    zext::Observable obs = zext::observable_from_token(observable);
    ZeroBundle b = build_zero_tables(cfg, zero_count);
    const zext::ZeroTable& tbl =
        obs == zext::Observable::chi_at_gamma ? b.gammas : b.lambdas;
    zext::RunningSum sum = zext::accumulate(obs, cfg.n, tbl,
                                            cfg.include_sub_gamma1_lambdas,
                                            cfg.threads);
    zext::MomentFamily fam = family_for_observable(obs, cfg.n);
    zext::CoefficientTable table =
        zext::coefficients_for(fam, cfg.n, cfg.K, cfg.k_max);
    zext::ComparisonReport rep = zext::compare(sum, table);

    std::filesystem::create_directories(cfg.output_dir);
    {
        std::ofstream out(cfg.output_dir + "/compare_" + observable + ".csv");
        zext::write_comparison_csv(out, rep, cfg.stride);
    }
    std::string js = zext::summary_json(rep);
    {
        std::ofstream out(cfg.output_dir + "/summary_" + observable + ".json");
        out << js << "\n";
    }
    std::cout << js << "\n";

    bool hard_fail = false;
    for (const auto& c : zext::envelope_checks(rep)) {
        std::cout << (c.pass ? "[PASS] " : (c.hard ? "[FAIL] " : "[SOFT-FAIL] "))
                  << c.name << " measured=" << c.measured << " bound=" << c.bound
                  << "\n";
        if (!c.pass && c.hard) hard_fail = true;
    }
    if (obs == zext::Observable::z_squared) {
        zext::SecondMomentReport r = zext::second_moment_check(sum);
        std::cout << "second moment at T=" << r.T << ": empirical=" << r.empirical
                  << " one_term_ratio=" << r.ratio_one
                  << " two_term_ratio=" << r.ratio_two << "\n";
    }
    return hard_fail ? 4 : 0;
}

// ---------------------------------------------------------------------------
// selftest

struct CheckMatrix {
    int passed = 0, failed = 0;
    void report(const std::string& name, bool ok, double measured, double bound) {
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << name
                  << "  measured=" << measured << " bound=" << bound << "\n";
        (ok ? passed : failed)++;
    }
};

double gamma0_harmonic_oracle() {
    // gamma_0 = lim (H_N - log N); Euler-Maclaurin corrections push the
    // error to O(N^-6).
    const int N = 4000;
    zext::NeumaierSum h;
    for (int m = 1; m <= N; ++m) h.add(1.0 / m);
    double Nd = N;
    return h.value() - std::log(Nd) - 1.0 / (2.0 * Nd) + 1.0 / (12.0 * Nd * Nd) -
           1.0 / (120.0 * Nd * Nd * Nd * Nd);
}

int cmd_selftest(const RunConfig& cfg, bool quick) {
    (void)cfg;
    CheckMatrix m;
    const auto& gam = zext::stieltjes_table().gammas;

    {
        double ref = gam[0];
        if (std::getenv("ZEXT_SELFTEST_CORRUPT_GAMMA0")) ref += 1e-6;
        double err = std::abs(gamma0_harmonic_oracle() - ref);
        m.report("stieltjes_gamma0_harmonic_oracle", err <= 1e-12, err, 1e-12);
    }
    {
        zext::TruncatedLaurentSeries z = zext::zeta_series(20);
        double direct =
            zext::zeta_derivs(zext::cdouble(1.01, 0.0), 0).values[0].real();
        double err = std::abs(zext::evaluate(z, 1.01) - direct);
        m.report("zeta_series_evaluation_near_1", err <= 1e-12, err, 1e-12);
    }
    {
        zext::TruncatedLaurentSeries z = zext::zeta_series(32);
        zext::TruncatedLaurentSeries unit = multiply(z, reciprocal(z));
        double worst = 0.0;
        for (int i = 0; i < unit.length(); ++i) {
            double want = (unit.min_order + i == 0) ? 1.0 : 0.0;
            worst = std::max(worst,
                             std::abs(unit.coeffs[static_cast<std::size_t>(i)] - want));
        }
        m.report("series_reciprocal_identity", worst <= 1e-13, worst, 1e-13);
    }
    {
        double worst = 0.0;
        for (int k = 1; k <= 8; ++k)
            for (int j = 0; j <= 6; ++j) {
                double want = (j % 2 == 0 ? 1.0 : -1.0);
                for (int i = 2; i <= j; ++i) want *= i;
                zext::CoeffFamily f = zext::c_family(zext::FamilyKind::c_kj, k, j, 2);
                worst = std::max(worst, std::abs(f.values[0] - want));
            }
        m.report("family_lead_coefficient_forms", worst <= 1e-12, worst, 1e-12);
    }
    {
        double g0 = gam[0];
        double worst = 0.0;
        for (int k = 1; k <= 6; ++k) {
            zext::CoeffFamily a = zext::c_family(zext::FamilyKind::c_kj, k, 0, 2);
            worst = std::max(worst,
                             std::abs(a.values[1] - (-1.0 + g0 + (1 - k) * g0)));
            zext::CoeffFamily b = zext::c_family(zext::FamilyKind::c_k2, k, 0, 2);
            worst = std::max(worst,
                             std::abs(b.values[1] - (-1.0 + g0 + (1 - k) * g0)));
            zext::CoeffFamily c = zext::c_family(zext::FamilyKind::c_k3, k, 0, 2);
            worst = std::max(worst, std::abs(c.values[1] - (-1.0 + g0 - k * g0)));
        }
        m.report("family_subleading_printed_forms", worst <= 1e-12, worst, 1e-12);
    }
    {
        double worst = 0.0;
        for (int n = 1; n <= 8; ++n) {
            zext::CoefficientTable t = zext::deriv_moment_coefficients(n, 1);
            worst = std::max(worst, std::abs(t.positive_coeffs.front() -
                                             zext::deriv_moment_leading_closed(n)));
        }
        m.report("deriv_moment_leading_closed_form", worst <= 1e-10, worst, 1e-10);
    }
    {
        double worst = 0.0;
        for (int n = 0; n <= 10; ++n) {
            double direct = 0.0, pw = 1.0;
            for (int k = 1; k <= 60; ++k) {
                pw *= 2.0 / k;
                direct += pw / (k + n + 1);
            }
            worst = std::max(worst, std::abs(zext::incomplete_gamma_sum(n) - direct));
        }
        m.report("incomplete_gamma_closed_vs_direct", worst <= 1e-12, worst, 1e-12);
    }
    {
        // functional equation, unimodularity, and Z-reality spot checks
        std::uint64_t state = 0x9e3779b97f4a7c15ull;
        auto rnd = [&] {
            state ^= state << 13; state ^= state >> 7; state ^= state << 17;
            return static_cast<double>(state >> 11) / 9007199254740992.0;
        };
        int points = quick ? 50 : 200;
        double worst_fe = 0.0, worst_uni = 0.0, worst_zre = 0.0;
        for (int i = 0; i < points; ++i) {
            double sigma = -1.0 + 3.0 * rnd();
            double t = 5.0 + 195.0 * rnd();
            zext::cdouble s(sigma, t);
            zext::cdouble lhs = zext::zeta_derivs(s, 0).values[0];
            zext::cdouble rhs = zext::chi(s) *
                                zext::zeta_derivs(zext::cdouble(1.0, 0.0) - s, 0).values[0];
            worst_fe = std::max(worst_fe, std::abs(lhs - rhs));
            zext::cdouble onhalf(0.5, t);
            worst_uni = std::max(worst_uni,
                                 std::abs(std::abs(zext::chi(onhalf)) - 1.0));
            double z = zext::hardy_z(t);
            (void)z;
            zext::cdouble ze = std::exp(zext::cdouble(0.0, zext::theta(t))) *
                               zext::zeta_derivs(onhalf, 0).values[0];
            worst_zre = std::max(worst_zre, std::abs(ze.imag()));
        }
        m.report("functional_equation_strip", worst_fe <= 1e-8, worst_fe, 1e-8);
        m.report("factor_unimodularity_line", worst_uni <= 1e-10, worst_uni, 1e-10);
        m.report("z_reality_line", worst_zre <= 1e-9, worst_zre, 1e-9);
    }
    {
        // convolution identities
        const std::int64_t up = 100000;
        zext::ArithmeticTable lam = zext::von_mangoldt_table(up);
        double worst = 0.0;
        double base = 0.0;
        {
            zext::NeumaierSum s;
            for (std::int64_t mm = 2; mm <= up; ++mm)
                s.add(lam.at(mm) / std::pow(static_cast<double>(mm), 3.0));
            base = s.value();
        }
        for (int k = 1; k <= 4; ++k) {
            zext::ArithmeticTable lk = zext::lambda_k(k, up);
            zext::NeumaierSum s;
            for (std::int64_t mm = 1; mm <= up; ++mm) {
                double v = lk.at(mm);
                if (v != 0.0) s.add(v / std::pow(static_cast<double>(mm), 3.0));
            }
            worst = std::max(worst, std::abs(s.value() - std::pow(base, k)));
        }
        m.report("convolution_dirichlet_series", worst <= 1e-6, worst, 1e-6);

        zext::ArithmeticTable l2 = zext::lambda_upper(2, 2000);
        zext::ArithmeticTable lk2 = zext::lambda_k(2, 2000);
        double worst2 = 0.0;
        for (std::int64_t nn = 1; nn <= 2000; ++nn) {
            double logn = nn == 1 ? 0.0 : std::log(static_cast<double>(nn));
            double lamv = zext::von_mangoldt(nn);
            worst2 = std::max(worst2,
                              std::abs(l2.at(nn) - (lamv * logn + lk2.at(nn))));
        }
        m.report("recurrence_vs_convolution", worst2 <= 1e-12, worst2, 1e-12);
    }
    if (!quick) {
        {
            double x = 1e6;
            zext::SumRecord brute =
                zext::brute_sum_A(zext::SumKind::A_kj, 1, 0, x);
            std::vector<double> b = zext::residue_polynomial(zext::FamilyKind::c_kj, 1, 0);
            double Lx = std::log(x);
            double predict = 0.0;
            for (std::size_t l = 0; l < b.size(); ++l)
                predict += b[l] * std::pow(Lx, static_cast<double>(b.size() - 1 - l));
            predict *= x;
            double resid = std::abs(brute.value - predict);
            double bound = 5.0 * std::pow(x, 0.6);
            m.report("brute_vs_residue_sample", resid <= bound, resid, bound);
        }
        {
            double x = 1e6;
            zext::SumRecord brute = zext::brute_sum_psi_n(1, x);
            zext::Prediction p = zext::prime_moment_prediction(1, 2.0 * PI * x);
            double resid = std::abs(brute.value - p.value);  // n = 1: same sign
            double bound = 5.0 * std::pow(x, 0.6);
            m.report("prime_moment_vs_brute", resid <= bound, resid, bound);
        }
    }
    std::cout << "selftest: " << m.passed << " passed, " << m.failed << " failed\n";
    return m.failed == 0 ? 0 : 4;
}

} // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    // config file first, flags afterwards so flags win
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--config" && i + 1 < argc) {
            try {
                cfg = zext::load_config_file(argv[i + 1]);
            } catch (const std::exception& e) {
                std::cerr << e.what() << "\n";
                return 2;
            }
        } else if (a.rfind("--config=", 0) == 0) {
            try {
                cfg = zext::load_config_file(a.substr(9));
            } catch (const std::exception& e) {
                std::cerr << e.what() << "\n";
                return 2;
            }
        }
    }
    if (cfg.output_dir.empty()) cfg.output_dir = zext::default_output_dir();

    CLI::App app{"critical-line moment laboratory"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, "key=value config file (flags win)");
    app.add_option("--t-max", cfg.t_max, "upper ordinate for zero tables")
        ->capture_default_str();
    app.add_option("--n", cfg.n, "derivative order")->capture_default_str();
    app.add_option("--K", cfg.K, "negative log-power depth")->capture_default_str();
    app.add_option("--k-max", cfg.k_max, "cap for the adaptive k-sums")
        ->capture_default_str();
    app.add_option("--abs-tol", cfg.abs_tol, "absolute evaluation tolerance")
        ->capture_default_str();
    app.add_flag("--include-sub-gamma1-lambdas", cfg.include_sub_gamma1_lambdas,
                 "include the two flagged extrema below the first zero");
    app.add_option("--threads", cfg.threads, "worker threads")->capture_default_str();
    app.add_option("--output-dir", cfg.output_dir, "output directory")
        ->capture_default_str();
    app.add_option("--stride", cfg.stride, "CSV row thinning stride")
        ->capture_default_str();

    std::int64_t zero_count = 0;
    std::string theorem, observable;
    bool quick = false;

    CLI::App* sub_zeros = app.add_subcommand("zeros", "compute zero/extrema tables");
    sub_zeros->add_option("--zeros", zero_count, "use the first N zeros instead of --t-max");
    CLI::App* sub_coeffs = app.add_subcommand("coeffs", "emit prediction coefficient tables");
    sub_coeffs->add_option("--theorem", theorem, "table token (thm1, corollary, thm2, thm3, thm4, hugpc, hlpc2)")
        ->required();
    CLI::App* sub_sums = app.add_subcommand("sums", "accumulate empirical running sums");
    sub_sums->add_option("--observable", observable,
                         "observable token (zeta-deriv, zeta, chi-lambda, chi-gamma, z-squared)")
        ->required();
    sub_sums->add_option("--zeros", zero_count, "use the first N zeros instead of --t-max");
    CLI::App* sub_compare = app.add_subcommand("compare", "empirical vs predicted comparison report");
    sub_compare->add_option("--observable", observable,
                            "observable token (zeta-deriv, zeta, chi-lambda, chi-gamma, z-squared)")
        ->required();
    sub_compare->add_option("--zeros", zero_count, "use the first N zeros instead of --t-max");
    CLI::App* sub_selftest = app.add_subcommand("selftest", "run the oracle suite");
    sub_selftest->add_flag("--quick", quick, "skip the large brute-force sums");

    // global flags may appear after the subcommand name
    for (CLI::App* sub : {sub_zeros, sub_coeffs, sub_sums, sub_compare, sub_selftest})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        zext::validate(cfg);
        if (sub_zeros->parsed()) {
            write_run_json(cfg, "zeros");
            return cmd_zeros(cfg, zero_count);
        }
        if (sub_coeffs->parsed()) {
            write_run_json(cfg, "coeffs --theorem " + theorem);
            return cmd_coeffs(cfg, theorem);
        }
        if (sub_sums->parsed()) {
            write_run_json(cfg, "sums --observable " + observable);
            return cmd_sums(cfg, observable, zero_count);
        }
        if (sub_compare->parsed()) {
            write_run_json(cfg, "compare --observable " + observable);
            return cmd_compare(cfg, observable, zero_count);
        }
        if (sub_selftest->parsed()) {
            write_run_json(cfg, quick ? "selftest --quick" : "selftest");
            return cmd_selftest(cfg, quick);
        }
    } catch (const std::domain_error& e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal cross-check: " << e.what() << "\n";
        return 3;
    } catch (const std::runtime_error& e) {
        std::cerr << "non-convergence: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
