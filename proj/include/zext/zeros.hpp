// Location, ordering, and counting of Gram points, zeros gamma of Z(t), and
// zeros lambda of Z'(t) up to a height t_max, preserving the interlacing
// structure: after the two extra Z' zeros below the first gamma, exactly one
// lambda lies between consecutive gammas.
#pragma once

#include "zext/special.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace zext {

enum class PointKind { gram, zeta_zero, zprime_zero };

std::string to_string(PointKind k);

struct CriticalPoint {
    double ordinate = 0.0;   // t-height
    PointKind kind = PointKind::gram;
    std::int64_t index = 0;  // 1-based rank within its kind
    double residual = 0.0;   // |f| at the refined point
    bool flagged = false;    // true for the (up to two) Z' zeros below gamma_1
};

struct ZeroTable {
    std::vector<CriticalPoint> points;
    double t_max = 0.0;
    PointKind kind = PointKind::zeta_zero;
};

struct CountReport {
    std::int64_t expected_from_theta = 0;
    std::int64_t found = 0;
    std::int64_t delta = 0;          // found - expected
    std::int64_t flagged_low = 0;    // zprime table: count below gamma_1
    std::string bookkeeping;         // human-readable accounting
};

// Solve theta(g_n) = n pi by Newton iteration; n >= 0.
double gram_point(std::int64_t n);

// All zeros of Z with 0 < t <= t_max (t_max >= 15), each bracketed by sign
// change on the Gram mesh (subdivided tenfold on Gram-law violations, floor
// step 1e-3), refined by bisection to width 1e-10 plus 3 Newton polishes.
// threads > 1 partitions the mesh deterministically.
ZeroTable find_zeta_zeros(double t_max, int threads = 1, EvalAccuracy acc = {});

// Zeros of Z' up to t_max: the two flagged points below gamma_1 plus exactly
// one per interval (gamma_i, gamma_{i+1}). gammas must extend one zero past
// t_max so the last interval can be searched; find_zeta_zeros_extended below
// provides that.
ZeroTable find_zprime_zeros(const ZeroTable& gammas, double t_max,
                            int threads = 1, EvalAccuracy acc = {});

// Like find_zeta_zeros but guarantees at least one zero above t_max is
// included (needed to bracket the last lambda).
ZeroTable find_zeta_zeros_extended(double t_max, int threads = 1,
                                   EvalAccuracy acc = {});

// Count reconciliation against the theta-based counting formula
// floor(theta(t_max)/pi) + 1 (zeta zeros), Gram count, or the interlacing
// bookkeeping (zprime zeros).
CountReport verify_counts(const ZeroTable& table);

// CSV serialization: header `index,kind,ordinate,residual`, 15 significant
// digits on ordinates and residuals.
void write_zero_csv(std::ostream& os, const ZeroTable& table);

} // namespace zext
