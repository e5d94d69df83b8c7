#include "zext/sums.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "zext/compensated.hpp"

namespace zext {

namespace {

constexpr double PI = 3.14159265358979323846264338327950288;
const double NAN_D = std::numeric_limits<double>::quiet_NaN();

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

bool needs_extrema(Observable o) {
    return o == Observable::zeta_deriv_n || o == Observable::zeta ||
           o == Observable::chi_at_lambda || o == Observable::z_squared;
}

} // namespace

std::string to_string(Observable o) {
    switch (o) {
        case Observable::zeta_deriv_n: return "zeta-deriv";
        case Observable::zeta: return "zeta";
        case Observable::chi_at_lambda: return "chi-lambda";
        case Observable::chi_at_gamma: return "chi-gamma";
        case Observable::z_squared: return "z-squared";
    }
    return "?";
}

Observable observable_from_token(const std::string& token) {
    if (token == "zeta-deriv") return Observable::zeta_deriv_n;
    if (token == "zeta") return Observable::zeta;
    if (token == "chi-lambda") return Observable::chi_at_lambda;
    if (token == "chi-gamma") return Observable::chi_at_gamma;
    if (token == "z-squared") return Observable::z_squared;
    throw std::domain_error("unknown observable token: " + token);
}

RunningSum accumulate(Observable obs, int n, const ZeroTable& table,
                      bool include_flagged, int threads, EvalAccuracy acc) {
    if (needs_extrema(obs) && table.kind != PointKind::zprime_zero)
        throw std::domain_error("accumulate: observable needs the extrema table");
    if (obs == Observable::chi_at_gamma && table.kind != PointKind::zeta_zero)
        throw std::domain_error("accumulate: chi-gamma needs the zero table");
    if (obs == Observable::zeta_deriv_n && n < 0)
        throw std::domain_error("accumulate: derivative order n >= 0 required");

    std::vector<double> ts;
    ts.reserve(table.points.size());
    for (const auto& p : table.points) {
        if (p.flagged && !include_flagged) continue;
        ts.push_back(p.ordinate);
    }

    std::vector<double> vre(ts.size()), vim(ts.size(), 0.0);
    parallel_index(ts.size(), threads, [&](std::size_t i) {
        double t = ts[i];
        switch (obs) {
            case Observable::zeta_deriv_n: {
                DerivativeBundle b = zeta_derivs(cdouble(0.5, t), n, acc);
                cdouble v = b.values[static_cast<std::size_t>(n)];
                vre[i] = v.real();
                vim[i] = v.imag();
                break;
            }
            case Observable::zeta: {
                DerivativeBundle b = zeta_derivs(cdouble(0.5, t), 0, acc);
                vre[i] = b.values[0].real();
                vim[i] = b.values[0].imag();
                break;
            }
            case Observable::chi_at_lambda:
            case Observable::chi_at_gamma: {
                cdouble v = chi(cdouble(0.5, t));
                vre[i] = v.real();
                vim[i] = v.imag();
                break;
            }
            case Observable::z_squared: {
                double z = hardy_z(t, acc);
                vre[i] = z * z;
                break;
            }
        }
    });

    RunningSum out;
    out.observable = obs;
    out.n = obs == Observable::zeta_deriv_n ? n : 0;
    out.ordinates = std::move(ts);
    out.partial_re.resize(out.ordinates.size());
    out.partial_im.resize(out.ordinates.size());
    NeumaierSum sre, sim;
    for (std::size_t i = 0; i < out.ordinates.size(); ++i) {
        sre.add(vre[i]);
        sim.add(vim[i]);
        out.partial_re[i] = sre.value();
        out.partial_im[i] = sim.value();
    }
    return out;
}

ComparisonReport compare(const RunningSum& sum, const CoefficientTable& table) {
    bool match = false;
    switch (sum.observable) {
        case Observable::zeta_deriv_n:
            match = (table.family == MomentFamily::deriv_moment ||
                     table.family == MomentFamily::deriv_moment_first) &&
                    table.n == sum.n;
            break;
        case Observable::zeta:
            match = table.family == MomentFamily::value_moment;
            break;
        case Observable::chi_at_lambda:
            match = table.family == MomentFamily::factor_moment_extrema;
            break;
        case Observable::chi_at_gamma:
            match = table.family == MomentFamily::factor_moment_zeros;
            break;
        case Observable::z_squared:
            match = table.family == MomentFamily::square_two_term;
            break;
    }
    if (!match)
        throw std::domain_error("compare: observable and prediction family mismatch");

    ComparisonReport rep;
    rep.observable = sum.observable;
    rep.n = sum.n;
    rep.T_grid = sum.ordinates;
    rep.empirical_re = sum.partial_re;
    rep.empirical_im = sum.partial_im;

    std::size_t depth = table.positive_coeffs.size() + table.negative_coeffs.size();
    rep.predictions.assign(depth, std::vector<double>(rep.T_grid.size(), NAN_D));
    rep.residuals.assign(depth, std::vector<double>(rep.T_grid.size(), NAN_D));

    for (std::size_t i = 0; i < rep.T_grid.size(); ++i) {
        double T = rep.T_grid[i];
        if (!(T > 2.0 * PI)) continue;
        Prediction p = evaluate_prediction(table, T);
        double scale = T / (2.0 * PI);
        NeumaierSum cum;
        for (std::size_t d = 0; d < depth; ++d) {
            cum.add(p.per_term[d]);
            rep.predictions[d][i] = cum.value() * scale;
            rep.residuals[d][i] = rep.empirical_re[i] - rep.predictions[d][i];
        }
    }

    rep.avg_abs_residual.assign(depth, 0.0);
    for (std::size_t d = 0; d < depth; ++d) {
        NeumaierSum acc;
        std::size_t count = 0;
        for (double r : rep.residuals[d]) {
            if (std::isnan(r)) continue;
            acc.add(std::abs(r));
            ++count;
        }
        rep.avg_abs_residual[d] = count ? acc.value() / static_cast<double>(count) : NAN_D;
    }
    return rep;
}

std::vector<EnvelopeCheck> envelope_checks(const ComparisonReport& rep) {
    std::vector<EnvelopeCheck> out;
    auto add = [&](std::string name, bool hard, double measured, double bound,
                   bool pass) {
        out.push_back({std::move(name), hard, pass, measured, bound});
    };

    double im_final = rep.empirical_im.empty() ? 0.0 : rep.empirical_im.back();
    switch (rep.observable) {
        case Observable::chi_at_gamma: {
            // pointwise |empirical + T/2pi| <= 5 T^0.55
            double worst = 0.0;
            for (std::size_t i = 0; i < rep.T_grid.size(); ++i) {
                double r = rep.residuals[0][i];
                if (std::isnan(r)) continue;
                worst = std::max(worst, std::abs(r) / std::pow(rep.T_grid[i], 0.55));
            }
            add("pointwise_error_bound", true, worst, 5.0, worst <= 5.0);
            break;
        }
        case Observable::zeta_deriv_n: {
            add("im_final", true, std::abs(im_final), 20.0, std::abs(im_final) <= 20.0);
            bool ordered = rep.avg_abs_residual.size() >= 3 &&
                           rep.avg_abs_residual[1] < rep.avg_abs_residual[0] &&
                           rep.avg_abs_residual[2] < rep.avg_abs_residual[1];
            add("nested_residual_ordering_3", true,
                rep.avg_abs_residual.size() >= 3 ? rep.avg_abs_residual[2] : NAN_D,
                rep.avg_abs_residual.empty() ? NAN_D : rep.avg_abs_residual[0],
                ordered);
            break;
        }
        case Observable::zeta: {
            add("im_final", true, std::abs(im_final), 40.0, std::abs(im_final) <= 40.0);
            bool ordered = rep.avg_abs_residual.size() >= 2 &&
                           rep.avg_abs_residual[1] < rep.avg_abs_residual[0];
            add("nested_residual_ordering_2", true,
                rep.avg_abs_residual.size() >= 2 ? rep.avg_abs_residual[1] : NAN_D,
                rep.avg_abs_residual.empty() ? NAN_D : rep.avg_abs_residual[0],
                ordered);
            break;
        }
        case Observable::chi_at_lambda: {
            add("im_final", true, std::abs(im_final), 20.0, std::abs(im_final) <= 20.0);
            bool ordered = rep.avg_abs_residual.size() >= 2 &&
                           rep.avg_abs_residual[1] < rep.avg_abs_residual[0];
            add("nested_residual_ordering_2", true,
                rep.avg_abs_residual.size() >= 2 ? rep.avg_abs_residual[1] : NAN_D,
                rep.avg_abs_residual.empty() ? NAN_D : rep.avg_abs_residual[0],
                ordered);
            break;
        }
        case Observable::z_squared: {
            double final_pred =
                rep.predictions.empty() || rep.predictions.back().empty()
                    ? NAN_D
                    : rep.predictions.back().back();
            double final_emp =
                rep.empirical_re.empty() ? NAN_D : rep.empirical_re.back();
            double ratio = final_emp / final_pred;
            add("second_moment_ratio", false, ratio, 1.2,
                ratio >= 0.8 && ratio <= 1.2);
            break;
        }
    }
    return out;
}

SecondMomentReport second_moment_check(const RunningSum& sum) {
    if (sum.observable != Observable::z_squared)
        throw std::domain_error("second_moment_check: needs a z-squared running sum");
    if (sum.ordinates.empty())
        throw std::domain_error("second_moment_check: empty running sum");
    SecondMomentReport r;
    r.T = sum.ordinates.back();
    r.empirical = sum.partial_re.back();
    Prediction p = square_two_term_prediction(r.T);
    r.two_term = p.value;
    r.one_term = p.per_term[0] * r.T / (2.0 * PI);
    r.ratio_one = r.empirical / r.one_term;
    r.ratio_two = r.empirical / r.two_term;
    return r;
}

void write_comparison_csv(std::ostream& os, const ComparisonReport& rep,
                          int stride) {
    if (stride < 1) stride = 1;
    std::size_t depth = rep.predictions.size();
    os << "ordinate,partial_re,partial_im";
    for (std::size_t d = 1; d <= depth; ++d) os << ",pred_" << d;
    for (std::size_t d = 1; d <= depth; ++d) os << ",resid_" << d;
    os << "\n";
    char buf[64];
    auto put = [&](double v) {
        std::snprintf(buf, sizeof buf, ",%.15g", v);
        os << buf;
    };
    for (std::size_t i = 0; i < rep.T_grid.size(); ++i) {
        bool last = i + 1 == rep.T_grid.size();
        if (!last && i % static_cast<std::size_t>(stride) != 0) continue;
        std::snprintf(buf, sizeof buf, "%.15g", rep.T_grid[i]);
        os << buf;
        put(rep.empirical_re[i]);
        put(rep.empirical_im[i]);
        for (std::size_t d = 0; d < depth; ++d) put(rep.predictions[d][i]);
        for (std::size_t d = 0; d < depth; ++d) put(rep.residuals[d][i]);
        os << "\n";
    }
}

std::string summary_json(const ComparisonReport& rep) {
    std::ostringstream os;
    os.precision(17);
    os << "{\"observable\":\"" << to_string(rep.observable) << "\",\"n\":" << rep.n
       << ",\"points\":" << rep.T_grid.size();
    if (!rep.T_grid.empty()) {
        os << ",\"final_T\":" << rep.T_grid.back()
           << ",\"final_re\":" << rep.empirical_re.back()
           << ",\"final_im\":" << rep.empirical_im.back();
    }
    os << ",\"avg_abs_residual\":[";
    for (std::size_t d = 0; d < rep.avg_abs_residual.size(); ++d) {
        if (d) os << ",";
        os << rep.avg_abs_residual[d];
    }
    os << "],\"envelopes\":[";
    auto checks = envelope_checks(rep);
    for (std::size_t i = 0; i < checks.size(); ++i) {
        if (i) os << ",";
        os << "{\"name\":\"" << checks[i].name << "\",\"hard\":"
           << (checks[i].hard ? "true" : "false") << ",\"pass\":"
           << (checks[i].pass ? "true" : "false")
           << ",\"measured\":" << checks[i].measured
           << ",\"bound\":" << checks[i].bound << "}";
    }
    os << "]}";
    return os.str();
}

} // namespace zext
