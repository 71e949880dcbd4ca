#pragma once

#include "cotlab/surface.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace cotlab {

enum class Direction { Forward, Backward };
enum class Termination { MaxTime, SingularApproach, OutOfDomain };

const char* to_string(Termination t) noexcept;

struct TraceSample {
    double t;
    double x;
    double y;
    double a; // DOT
    double r; // COT
};

/// Characteristic curve sampled at the integrator's accepted steps. Steps are
/// uniform (= step) except near a singular point, where they are halved.
struct CharacteristicTrace {
    std::vector<TraceSample> samples;
    double step = 0.0;
    Direction direction = Direction::Forward;
    Termination termination = Termination::MaxTime;
};

inline constexpr double kApproachThreshold = 1e-6;

/// Integrates (x', y') = (p, q) / sqrt(D) with classical RK4 from (x0, y0)
/// until |t| = max_t, the domain is left, or sqrt(D) < approach_threshold.
/// Throws StartSingular if the start is singular.
CharacteristicTrace trace(const SurfaceGraph& surface, double x0, double y0, Direction direction, double step,
                          double max_t, double approach_threshold = kApproachThreshold);

// ---------------------------------------------------------------------------
// Riccati equation a' = a^2 + r(t)
// ---------------------------------------------------------------------------

inline constexpr double kBlowupCutoff = 1e8;

struct RiccatiSolution {
    std::vector<double> t;
    std::vector<double> a;
    bool blew_up = false;
    /// Extrapolated zero of -1/a when blew_up.
    std::optional<double> blowup_t;
};

/// RK4 on [t0, t1] (either orientation) with nominal step |step|; the step is
/// shortened as |a| grows so the blow-up can be approached. Stops once
/// |a| > kBlowupCutoff.
RiccatiSolution riccati_integrate(double a0, const std::function<double(double)>& r_of_t, double t0, double t1,
                                  double step);

enum class CotSign { Positive, Zero, Negative };

struct RiccatiBound {
    double k;
    double a0;
    CotSign sign;
    /// First t > 0 where the closed form's denominator vanishes.
    std::optional<double> blowup_t;
    /// Last t < 0 where it vanishes.
    std::optional<double> backward_blowup_t;
};

RiccatiBound riccati_bound(double a0, double k);

/// Solution of c' = c^2 + k, c(0) = a0, in trigonometric / rational /
/// hyperbolic form by the sign of k. Throws BeyondBlowup once t reaches a
/// zero of the denominator.
double riccati_closed_form(double a0, double k, double t);

// ---------------------------------------------------------------------------
// Comparison principle
// ---------------------------------------------------------------------------

enum class Sense {
    Upper, // r <= k  =>  a <= c for t >= 0, a >= c for t <= 0
    Lower, // r >= k  =>  a >= c for t >= 0, a <= c for t <= 0
};

struct ComparisonReport {
    bool holds = true;
    double max_violation = 0.0;
    /// Largest Richardson estimate of the integration error in c.
    double integration_error = 0.0;
    /// Tolerance used at the worst sample: 1e-6 + integration error there.
    double tolerance = 1e-6;
    /// Largest |a - c| seen, for equality checks.
    double max_abs_gap = 0.0;
    std::size_t samples_checked = 0;
    bool comparison_blew_up = false;
};

inline constexpr double kComparisonSlack = 1e-6;

/// Integrates c' = c^2 + k(t) from c(0) = a(0) over the trace samples and
/// checks the ordering. Hypotheses are validated on the samples only: throws
/// HypothesisViolated if k fails to bound r at a sample.
ComparisonReport comparison_check(const CharacteristicTrace& trace, const std::function<double(double)>& k_of_t,
                                  Sense sense);

/// Piecewise-cubic interpolant of the sampled COT r(t).
std::function<double(double)> sampled_cot(const CharacteristicTrace& trace);

// ---------------------------------------------------------------------------
// Singular points
// ---------------------------------------------------------------------------

enum class VerdictKind {
    NoSingular,
    AtMostOne,
    ForwardBound,
    BackwardBound,
    TwoSingularWithLengthBound,
};

const char* to_string(VerdictKind k) noexcept;

/// Which assumption on COT along the curve a finding relies on.
enum class Hypothesis {
    CotAtMostNonPositiveK,     // r <= k <= 0 for all t
    CotAtLeastKForward,        // r >= k for t >= 0
    CotAtLeastKBackward,       // r >= k for t <= 0
    CotAtLeastPositiveKAlways, // r >= k > 0 for all t
};

struct VerdictFinding {
    VerdictKind kind;
    Hypothesis hypothesis;
    std::optional<double> value;
};

struct SingularVerdict {
    std::vector<VerdictFinding> findings;

    [[nodiscard]] bool has(VerdictKind k) const noexcept;
    [[nodiscard]] std::optional<double> value(VerdictKind k) const noexcept;
};

/// Evaluates every singular-point bound that applies to
/// (a0, k). Pure formula: the "for all t" hypotheses are not checked.
SingularVerdict singular_verdict(double a0, double k);

/// Fits -1/a linearly over the last samples and returns its zero. Throws
/// NotApplicable unless the trace ended with SingularApproach.
std::optional<double> detect_blowup(const CharacteristicTrace& trace, int n_fit = 5);

struct SingularSetPoint {
    double x;
    double y;
    double sqrt_d;
    bool isolated;
};

struct SingularScan {
    std::vector<SingularSetPoint> points;
    double refinement_radius = 0.0;
    std::size_t isolated_count = 0;
    std::size_t non_isolated_count = 0;
};

/// Grid scan for small sqrt(D), then Gauss-Newton refinement on (p, q). Each
/// refined point is probed for other singular points within the refinement
/// radius (non-isolation check).
SingularScan singular_set_scan(const SurfaceGraph& surface, const Rect& region, int grid_n,
                               double eps = kSingularEps);

} // namespace cotlab
