// Running empirical sums over the critical points and the comparison
// machinery against the assembled predictions, exercised at a small height.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <sstream>

#include "zext/special.hpp"
#include "zext/sums.hpp"
#include "zext/zeros.hpp"
#include "golden_data.hpp"

namespace {

// one shared set of tables for the whole suite
const zext::ZeroTable& gammas_ext() {
    static zext::ZeroTable t = zext::find_zeta_zeros_extended(200.0);
    return t;
}
const zext::ZeroTable& gammas() {
    static zext::ZeroTable t = [] {
        zext::ZeroTable g = gammas_ext();
        while (!g.points.empty() && g.points.back().ordinate > 200.0) g.points.pop_back();
        g.t_max = 200.0;
        return g;
    }();
    return t;
}
const zext::ZeroTable& lambdas() {
    static zext::ZeroTable t = zext::find_zprime_zeros(gammas_ext(), 200.0);
    return t;
}

} // namespace

TEST_CASE("running sums are prefix sums of the pointwise values") {
    zext::RunningSum s = zext::accumulate(zext::Observable::zeta, 0, lambdas());
    REQUIRE(!s.ordinates.empty());
    CHECK(s.observable == zext::Observable::zeta);
    for (std::size_t i = 1; i < s.ordinates.size(); ++i)
        CHECK(s.ordinates[i] > s.ordinates[i - 1]);
    // spot-check increments against direct evaluation
    for (std::size_t i : {std::size_t(0), std::size_t(3), s.ordinates.size() - 1}) {
        double prev_re = i ? s.partial_re[i - 1] : 0.0;
        double prev_im = i ? s.partial_im[i - 1] : 0.0;
        zext::cdouble v = zext::zeta_derivs(zext::cdouble(0.5, s.ordinates[i]), 0).values[0];
        CHECK(std::abs(s.partial_re[i] - prev_re - v.real()) <= 1e-11);
        CHECK(std::abs(s.partial_im[i] - prev_im - v.imag()) <= 1e-11);
    }
    // flagged points are excluded by default: first ordinate is above gamma_1
    CHECK(s.ordinates.front() > golden::special_real.at("gamma_zero_1"));
}

TEST_CASE("flagged extrema join the sum only on request") {
    zext::RunningSum with = zext::accumulate(zext::Observable::zeta, 0, lambdas(), true);
    zext::RunningSum without = zext::accumulate(zext::Observable::zeta, 0, lambdas(), false);
    CHECK(with.ordinates.size() == without.ordinates.size() + 2);
    CHECK(std::abs(with.ordinates.front() - golden::special_real.at("lambda_1")) <= 1e-9);
}

TEST_CASE("derivative observable uses the requested order") {
    zext::RunningSum s = zext::accumulate(zext::Observable::zeta_deriv_n, 2, lambdas());
    CHECK(s.n == 2);
    zext::cdouble v = zext::zeta_derivs(zext::cdouble(0.5, s.ordinates[0]), 2).values[2];
    CHECK(std::abs(s.partial_re[0] - v.real()) <= 1e-11);
}

TEST_CASE("observable/table kind mismatches are rejected") {
    CHECK_THROWS_AS(zext::accumulate(zext::Observable::chi_at_gamma, 0, lambdas()),
                    std::domain_error);
    CHECK_THROWS_AS(zext::accumulate(zext::Observable::zeta, 0, gammas()),
                    std::domain_error);
    CHECK_THROWS_AS(zext::accumulate(zext::Observable::z_squared, 0, gammas()),
                    std::domain_error);
}

TEST_CASE("factor sums move on the unit circle; squares are monotone") {
    zext::RunningSum chi = zext::accumulate(zext::Observable::chi_at_gamma, 0, gammas());
    for (std::size_t i = 0; i < chi.ordinates.size(); ++i) {
        double dre = chi.partial_re[i] - (i ? chi.partial_re[i - 1] : 0.0);
        double dim = chi.partial_im[i] - (i ? chi.partial_im[i - 1] : 0.0);
        CHECK(std::abs(std::hypot(dre, dim) - 1.0) <= 1e-9);
    }
    zext::RunningSum sq = zext::accumulate(zext::Observable::z_squared, 0, lambdas());
    for (std::size_t i = 1; i < sq.ordinates.size(); ++i) {
        CHECK(sq.partial_re[i] >= sq.partial_re[i - 1]);
        CHECK(std::abs(sq.partial_im[i]) <= 1e-12);
    }
}

TEST_CASE("threaded accumulation is bit-identical to serial") {
    zext::RunningSum serial = zext::accumulate(zext::Observable::zeta_deriv_n, 1, lambdas(), false, 1);
    zext::RunningSum threaded = zext::accumulate(zext::Observable::zeta_deriv_n, 1, lambdas(), false, 4);
    REQUIRE(serial.partial_re.size() == threaded.partial_re.size());
    for (std::size_t i = 0; i < serial.partial_re.size(); ++i) {
        CHECK(serial.partial_re[i] == threaded.partial_re[i]);
        CHECK(serial.partial_im[i] == threaded.partial_im[i]);
    }
}

TEST_CASE("comparison report layout and residual identity") {
    zext::RunningSum s = zext::accumulate(zext::Observable::zeta, 0, lambdas());
    zext::CoefficientTable t = zext::value_moment_coefficients(2);
    zext::ComparisonReport rep = zext::compare(s, t);
    std::size_t depth = t.positive_coeffs.size() + t.negative_coeffs.size();
    REQUIRE(rep.predictions.size() == depth);
    REQUIRE(rep.residuals.size() == depth);
    REQUIRE(rep.avg_abs_residual.size() == depth);
    REQUIRE(rep.T_grid.size() == s.ordinates.size());
    for (std::size_t d = 0; d < depth; ++d)
        for (std::size_t i = 0; i < rep.T_grid.size(); ++i) {
            if (std::isnan(rep.predictions[d][i])) continue;
            CHECK(std::abs(rep.residuals[d][i] -
                           (rep.empirical_re[i] - rep.predictions[d][i])) <= 1e-12);
        }
    for (double a : rep.avg_abs_residual) CHECK(std::isfinite(a));
}

TEST_CASE("points below the expansion threshold get NaN predictions") {
    zext::RunningSum s = zext::accumulate(zext::Observable::chi_at_lambda, 0, lambdas(), true);
    zext::CoefficientTable t = zext::factor_moment_coefficients(1);
    zext::ComparisonReport rep = zext::compare(s, t);
    // lambda_1 = 2.47... lies below T = 2 pi, so no prediction exists there
    CHECK(std::isnan(rep.predictions[0][0]));
    CHECK(std::isfinite(rep.avg_abs_residual[0]));
}

TEST_CASE("family/observable mismatches are rejected in compare") {
    zext::RunningSum s = zext::accumulate(zext::Observable::zeta, 0, lambdas());
    CHECK_THROWS_AS(zext::compare(s, zext::deriv_moment_coefficients(1, 2)),
                    std::domain_error);
    zext::RunningSum d1 = zext::accumulate(zext::Observable::zeta_deriv_n, 1, lambdas());
    CHECK_THROWS_AS(zext::compare(d1, zext::deriv_moment_coefficients(2, 2)),
                    std::domain_error);
    // the first-derivative table alias is accepted for n = 1
    zext::CoefficientTable alias =
        zext::coefficients_for(zext::MomentFamily::deriv_moment_first, 1, 2);
    zext::ComparisonReport rep = zext::compare(d1, alias);
    CHECK(!rep.predictions.empty());
}

TEST_CASE("envelope checks carry names, kinds, and the soft second-moment gate") {
    zext::RunningSum s = zext::accumulate(zext::Observable::zeta, 0, lambdas());
    zext::ComparisonReport rep = zext::compare(s, zext::value_moment_coefficients(2));
    std::vector<zext::EnvelopeCheck> checks = zext::envelope_checks(rep);
    REQUIRE(!checks.empty());
    for (const auto& c : checks) {
        CHECK(!c.name.empty());
        CHECK(std::isfinite(c.measured));
    }

    zext::RunningSum sq = zext::accumulate(zext::Observable::z_squared, 0, lambdas());
    zext::SecondMomentReport r = zext::second_moment_check(sq);
    CHECK(r.T == doctest::Approx(sq.ordinates.back()));
    CHECK(r.empirical > 0.0);
    CHECK(r.ratio_one == doctest::Approx(r.empirical / r.one_term));
    CHECK(r.ratio_one > 0.5);
    CHECK(r.ratio_one < 1.6);
    zext::ComparisonReport sqrep =
        zext::compare(sq, zext::coefficients_for(zext::MomentFamily::square_two_term, 0, 0));
    for (const auto& c : zext::envelope_checks(sqrep)) CHECK(!c.hard);
}

TEST_CASE("comparison CSV shape, stride thinning, and final row") {
    zext::RunningSum s = zext::accumulate(zext::Observable::zeta, 0, lambdas());
    zext::ComparisonReport rep = zext::compare(s, zext::value_moment_coefficients(1));
    std::ostringstream os;
    zext::write_comparison_csv(os, rep, 7);
    std::istringstream is(os.str());
    std::string line;
    REQUIRE(std::getline(is, line));
    CHECK(line == "ordinate,partial_re,partial_im,pred_1,pred_2,pred_3,resid_1,resid_2,resid_3");
    std::size_t rows = 0;
    std::string last;
    while (std::getline(is, line)) { ++rows; last = line; }
    CHECK(rows < rep.T_grid.size());
    CHECK(rows >= rep.T_grid.size() / 7);
    // final row always present
    double last_T = std::stod(last.substr(0, last.find(',')));
    CHECK(last_T == doctest::Approx(rep.T_grid.back()));
}

TEST_CASE("summary JSON names the observable and envelopes") {
    zext::RunningSum s = zext::accumulate(zext::Observable::chi_at_lambda, 0, lambdas());
    zext::ComparisonReport rep = zext::compare(s, zext::factor_moment_coefficients(2));
    std::string js = zext::summary_json(rep);
    CHECK(js.find("\"observable\"") != std::string::npos);
    CHECK(js.find("chi-lambda") != std::string::npos);
    CHECK(js.find("envelope") != std::string::npos);
}
