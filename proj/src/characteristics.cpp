#include "cotlab/characteristics.hpp"

#include "cotlab/errors.hpp"
#include "cotlab/transversality.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

namespace cotlab {

const char* to_string(Termination t) noexcept
{
    switch (t) {
    case Termination::MaxTime:
        return "MaxTime";
    case Termination::SingularApproach:
        return "SingularApproach";
    case Termination::OutOfDomain:
        return "OutOfDomain";
    }
    return "?";
}

const char* to_string(VerdictKind k) noexcept
{
    switch (k) {
    case VerdictKind::NoSingular:
        return "NoSingular";
    case VerdictKind::AtMostOne:
        return "AtMostOne";
    case VerdictKind::ForwardBound:
        return "ForwardBound";
    case VerdictKind::BackwardBound:
        return "BackwardBound";
    case VerdictKind::TwoSingularWithLengthBound:
        return "TwoSingularWithLengthBound";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Tracing
// ---------------------------------------------------------------------------

namespace {

// Frobenius norm of d(p, q)/d(x, y).
double pq_jacobian_norm(const Jet2& j)
{
    const double a = 1.0 - 2.0 * j.fxy;
    const double b = -2.0 * j.fyy;
    const double c = 2.0 * j.fxx;
    const double d = 1.0 + 2.0 * j.fxy;
    return std::sqrt(a * a + b * b + c * c + d * d);
}

enum class StageStatus { Ok, OutOfDomain, Singular };

struct Stage {
    StageStatus status;
    double vx = 0.0;
    double vy = 0.0;
};

Stage velocity(const SurfaceGraph& s, double x, double y)
{
    if (!s.contains(x, y))
        return {StageStatus::OutOfDomain};
    const auto td = transversality_data(s.jet(x, y));
    const double n = td.sqrt_d();
    if (n < kSingularEps)
        return {StageStatus::Singular};
    return {StageStatus::Ok, td.p / n, td.q / n};
}

} // namespace

CharacteristicTrace trace(const SurfaceGraph& surface, double x0, double y0, Direction direction, double step,
                          double max_t, double approach_threshold)
{
    if (!(step > 0.0))
        throw std::invalid_argument("trace: step must be positive");
    if (!(max_t >= 0.0))
        throw std::invalid_argument("trace: max_t must be non-negative");

    const Jet2 start = surface.jet(x0, y0);
    const auto td0 = transversality_data(start);
    if (td0.sqrt_d() < std::max(approach_threshold, kSingularEps)) {
        std::ostringstream os;
        os << "trace: start (" << x0 << ", " << y0 << ") is singular";
        throw StartSingular(os.str());
    }

    CharacteristicTrace out;
    out.step = step;
    out.direction = direction;
    out.samples.push_back({0.0, x0, y0, dot(td0), cot(start)});

    const double sign = direction == Direction::Forward ? 1.0 : -1.0;
    const double min_step = 1e-14 * std::max(1.0, max_t);
    double elapsed = 0.0;
    double x = x0;
    double y = y0;
    Jet2 here = start;

    while (elapsed < max_t * (1.0 - 1e-14)) {
        double h = std::min(step, max_t - elapsed);
        // Halve near the singular set so a single step cannot jump across it.
        const double safe = 0.25 * transversality_data(here).sqrt_d() / std::max(pq_jacobian_norm(here), 1e-300);
        while (h > safe && h > min_step)
            h *= 0.5;
        if (h <= min_step) {
            out.termination = Termination::SingularApproach;
            return out;
        }
        const double dt = sign * h;

        const Stage k1 = velocity(surface, x, y);
        const Stage k2 = k1.status == StageStatus::Ok
            ? velocity(surface, x + 0.5 * dt * k1.vx, y + 0.5 * dt * k1.vy)
            : k1;
        const Stage k3 = k2.status == StageStatus::Ok
            ? velocity(surface, x + 0.5 * dt * k2.vx, y + 0.5 * dt * k2.vy)
            : k2;
        const Stage k4 = k3.status == StageStatus::Ok ? velocity(surface, x + dt * k3.vx, y + dt * k3.vy) : k3;
        if (k4.status != StageStatus::Ok) {
            out.termination =
                k4.status == StageStatus::OutOfDomain ? Termination::OutOfDomain : Termination::SingularApproach;
            return out;
        }
        const double nx = x + dt / 6.0 * (k1.vx + 2.0 * k2.vx + 2.0 * k3.vx + k4.vx);
        const double ny = y + dt / 6.0 * (k1.vy + 2.0 * k2.vy + 2.0 * k3.vy + k4.vy);
        if (!surface.contains(nx, ny)) {
            out.termination = Termination::OutOfDomain;
            return out;
        }
        const Jet2 next = surface.jet(nx, ny);
        const auto td = transversality_data(next);
        if (td.sqrt_d() < kSingularEps) {
            out.termination = Termination::SingularApproach;
            return out;
        }
        elapsed += h;
        x = nx;
        y = ny;
        here = next;
        out.samples.push_back({sign * elapsed, x, y, dot(td), cot(next)});
        if (td.sqrt_d() < approach_threshold) {
            out.termination = Termination::SingularApproach;
            return out;
        }
    }
    out.termination = Termination::MaxTime;
    return out;
}

// ---------------------------------------------------------------------------
// Riccati
// ---------------------------------------------------------------------------

namespace {

// Step length relative to 1/|a|; keeps RK4 accurate while approaching blow-up.
constexpr double kRelativeStep = 4e-3;

double rk4_riccati(double a, double t, double dt, const std::function<double(double)>& r)
{
    auto rhs = [&](double tt, double aa) { return aa * aa + r(tt); };
    const double k1 = rhs(t, a);
    const double k2 = rhs(t + 0.5 * dt, a + 0.5 * dt * k1);
    const double k3 = rhs(t + 0.5 * dt, a + 0.5 * dt * k2);
    const double k4 = rhs(t + dt, a + dt * k3);
    return a + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

} // namespace

RiccatiSolution riccati_integrate(double a0, const std::function<double(double)>& r_of_t, double t0, double t1,
                                  double step)
{
    if (!(step != 0.0) || !std::isfinite(step))
        throw std::invalid_argument("riccati_integrate: step must be non-zero");
    RiccatiSolution sol;
    sol.t.push_back(t0);
    sol.a.push_back(a0);
    const double dir = t1 >= t0 ? 1.0 : -1.0;
    const double nominal = std::abs(step);
    double t = t0;
    double a = a0;
    while (dir * (t1 - t) > 1e-15 * std::max(1.0, std::abs(t1))) {
        double h = std::min(nominal, dir * (t1 - t));
        if (a != 0.0)
            h = std::min(h, kRelativeStep / std::abs(a));
        const double next = rk4_riccati(a, t, dir * h, r_of_t);
        t += dir * h;
        a = next;
        sol.t.push_back(t);
        sol.a.push_back(a);
        if (!std::isfinite(a) || std::abs(a) > kBlowupCutoff) {
            sol.blew_up = true;
            const std::size_t n = sol.t.size();
            const double u1 = -1.0 / sol.a[n - 1];
            const double u0 = -1.0 / sol.a[n - 2];
            if (std::isfinite(u1) && u1 != u0)
                sol.blowup_t = sol.t[n - 1] - u1 * (sol.t[n - 1] - sol.t[n - 2]) / (u1 - u0);
            else
                sol.blowup_t = sol.t[n - 1];
            break;
        }
    }
    return sol;
}

namespace {

double arccot(double z)
{
    // Branch with values in (0, pi).
    return std::numbers::pi / 2.0 - std::atan(z);
}

} // namespace

RiccatiBound riccati_bound(double a0, double k)
{
    RiccatiBound b{k, a0, k > 0.0 ? CotSign::Positive : (k < 0.0 ? CotSign::Negative : CotSign::Zero), {}, {}};
    if (k > 0.0) {
        const double s = std::sqrt(k);
        b.blowup_t = arccot(a0 / s) / s;
        b.backward_blowup_t = -std::numbers::pi / s + arccot(a0 / s) / s;
    } else if (k == 0.0) {
        if (a0 > 0.0)
            b.blowup_t = 1.0 / a0;
        else if (a0 < 0.0)
            b.backward_blowup_t = 1.0 / a0;
    } else {
        const double s = std::sqrt(-k);
        if (a0 > s)
            b.blowup_t = std::atanh(s / a0) / s;
        else if (a0 < -s)
            b.backward_blowup_t = std::atanh(s / a0) / s;
    }
    return b;
}

double riccati_closed_form(double a0, double k, double t)
{
    const auto bound = riccati_bound(a0, k);
    if ((t > 0.0 && bound.blowup_t && t >= *bound.blowup_t)
        || (t < 0.0 && bound.backward_blowup_t && t <= *bound.backward_blowup_t)) {
        std::ostringstream os;
        os << "riccati_closed_form: t = " << t << " lies beyond the blow-up of c' = c^2 + " << k << ", c(0) = " << a0;
        throw BeyondBlowup(os.str());
    }
    if (k > 0.0) {
        const double s = std::sqrt(k);
        const double c = std::cos(t * s);
        const double sn = std::sin(t * s);
        return s * (c * a0 + s * sn) / (-sn * a0 + s * c);
    }
    if (k == 0.0)
        return a0 / (1.0 - a0 * t);
    const double s = std::sqrt(-k);
    const double ch = std::cosh(t * s);
    const double sh = std::sinh(t * s);
    return s * (ch * a0 - s * sh) / (-sh * a0 + s * ch);
}

// ---------------------------------------------------------------------------
// Comparison
// ---------------------------------------------------------------------------

ComparisonReport comparison_check(const CharacteristicTrace& trace, const std::function<double(double)>& k_of_t,
                                  Sense sense)
{
    if (trace.samples.empty())
        throw std::invalid_argument("comparison_check: empty trace");
    const auto& s = trace.samples;
    for (const auto& smp : s) {
        const double k = k_of_t(smp.t);
        const double tol = 1e-12 * (1.0 + std::abs(smp.r));
        const bool ok = sense == Sense::Upper ? smp.r <= k + tol : smp.r >= k - tol;
        if (!ok) {
            std::ostringstream os;
            os << "comparison_check: k(" << smp.t << ") = " << k << " does not bound r = " << smp.r;
            throw HypothesisViolated(os.str());
        }
    }

    ComparisonReport rep;
    double coarse = s.front().a;
    double fine = s.front().a;
    auto check = [&](const TraceSample& smp, double c, double err) {
        const bool forward_half = smp.t >= 0.0;
        // Upper, t >= 0: a <= c. Each flip of sense or time side flips the order.
        const bool a_below = (sense == Sense::Upper) == forward_half;
        const double violation = a_below ? smp.a - c : c - smp.a;
        const double tol = kComparisonSlack + err;
        rep.max_abs_gap = std::max(rep.max_abs_gap, std::abs(smp.a - c));
        rep.integration_error = std::max(rep.integration_error, err);
        if (violation > rep.max_violation) {
            rep.max_violation = violation;
            rep.tolerance = tol;
        }
        if (violation > tol)
            rep.holds = false;
        ++rep.samples_checked;
    };
    check(s.front(), fine, 0.0);
    for (std::size_t i = 1; i < s.size(); ++i) {
        const double t0 = s[i - 1].t;
        const double dt = s[i].t - t0;
        coarse = rk4_riccati(coarse, t0, dt, k_of_t);
        fine = rk4_riccati(fine, t0, 0.5 * dt, k_of_t);
        fine = rk4_riccati(fine, t0 + 0.5 * dt, 0.5 * dt, k_of_t);
        if (!std::isfinite(fine) || std::abs(fine) > kBlowupCutoff) {
            rep.comparison_blew_up = true;
            break;
        }
        check(s[i], fine, std::abs(fine - coarse));
    }
    return rep;
}

std::function<double(double)> sampled_cot(const CharacteristicTrace& trace)
{
    std::vector<std::pair<double, double>> pts;
    pts.reserve(trace.samples.size());
    for (const auto& s : trace.samples)
        pts.emplace_back(s.t, s.r);
    std::sort(pts.begin(), pts.end());
    if (pts.empty())
        throw std::invalid_argument("sampled_cot: empty trace");
    return [pts = std::move(pts)](double t) {
        const std::size_t n = pts.size();
        if (n < 4) {
            // Too few samples for a cubic; nearest sample.
            auto it = std::min_element(pts.begin(), pts.end(), [t](const auto& l, const auto& r) {
                return std::abs(l.first - t) < std::abs(r.first - t);
            });
            return it->second;
        }
        const auto upper = std::upper_bound(pts.begin(), pts.end(), std::make_pair(t, -INFINITY),
                                            [](const auto& l, const auto& r) { return l.first < r.first; });
        std::size_t i = static_cast<std::size_t>(std::distance(pts.begin(), upper));
        // Four-point stencil [i-2, i+1] around the interval containing t.
        std::size_t first = i >= 2 ? i - 2 : 0;
        first = std::min(first, n - 4);
        double value = 0.0;
        for (std::size_t a = first; a < first + 4; ++a) {
            double w = 1.0;
            for (std::size_t b = first; b < first + 4; ++b)
                if (a != b)
                    w *= (t - pts[b].first) / (pts[a].first - pts[b].first);
            value += w * pts[a].second;
        }
        return value;
    };
}

// ---------------------------------------------------------------------------
// Singular points
// ---------------------------------------------------------------------------

bool SingularVerdict::has(VerdictKind k) const noexcept
{
    return std::any_of(findings.begin(), findings.end(), [k](const auto& f) { return f.kind == k; });
}

std::optional<double> SingularVerdict::value(VerdictKind k) const noexcept
{
    for (const auto& f : findings)
        if (f.kind == k)
            return f.value;
    return std::nullopt;
}

SingularVerdict singular_verdict(double a0, double k)
{
    SingularVerdict v;
    if (k <= 0.0) {
        const double s = std::sqrt(-k);
        v.findings.push_back({std::abs(a0) <= s ? VerdictKind::NoSingular : VerdictKind::AtMostOne,
                              Hypothesis::CotAtMostNonPositiveK, std::nullopt});
    }
    const auto bound = riccati_bound(a0, k);
    if (bound.blowup_t)
        v.findings.push_back({VerdictKind::ForwardBound, Hypothesis::CotAtLeastKForward, bound.blowup_t});
    if (bound.backward_blowup_t)
        v.findings.push_back({VerdictKind::BackwardBound, Hypothesis::CotAtLeastKBackward, bound.backward_blowup_t});
    if (k > 0.0)
        v.findings.push_back({VerdictKind::TwoSingularWithLengthBound, Hypothesis::CotAtLeastPositiveKAlways,
                              std::numbers::pi / std::sqrt(k)});
    return v;
}

std::optional<double> detect_blowup(const CharacteristicTrace& trace, int n_fit)
{
    if (trace.termination != Termination::SingularApproach)
        throw NotApplicable(std::string("detect_blowup: trace ended with ") + to_string(trace.termination));
    const auto& s = trace.samples;
    const std::size_t n = std::min<std::size_t>(s.size(), static_cast<std::size_t>(std::max(n_fit, 2)));
    if (n < 2)
        return std::nullopt;
    // Least squares u = alpha + beta t with u = -1/a.
    double st = 0.0, su = 0.0, stt = 0.0, stu = 0.0;
    for (std::size_t i = s.size() - n; i < s.size(); ++i) {
        const double t = s[i].t;
        const double u = -1.0 / s[i].a;
        st += t;
        su += u;
        stt += t * t;
        stu += t * u;
    }
    const double m = static_cast<double>(n);
    const double den = m * stt - st * st;
    if (den == 0.0)
        return std::nullopt;
    const double beta = (m * stu - st * su) / den;
    const double alpha = (su - beta * st) / m;
    if (beta == 0.0)
        return std::nullopt;
    return -alpha / beta;
}

namespace {

struct Refined {
    double x;
    double y;
    double sqrt_d;
    bool converged;
};

// Gauss-Newton with a tiny Levenberg term on F = (p, q); the minimum-norm
// step handles the rank-deficient Jacobians of curve-like singular sets.
Refined refine(const SurfaceGraph& surface, double x, double y, double eps)
{
    for (int it = 0; it < 60; ++it) {
        if (!surface.contains(x, y))
            return {x, y, INFINITY, false};
        const Jet2 j = surface.jet(x, y);
        const auto td = transversality_data(j);
        if (td.sqrt_d() < 1e-3 * eps)
            return {x, y, td.sqrt_d(), true};
        const double a = 1.0 - 2.0 * j.fxy;
        const double b = -2.0 * j.fyy;
        const double c = 2.0 * j.fxx;
        const double d = 1.0 + 2.0 * j.fxy;
        // Normal equations (J^T J + mu I) delta = -J^T F.
        const double m11 = a * a + c * c;
        const double m12 = a * b + c * d;
        const double m22 = b * b + d * d;
        const double mu = 1e-13 * (m11 + m22) + 1e-300;
        const double g1 = a * td.p + c * td.q;
        const double g2 = b * td.p + d * td.q;
        const double det = (m11 + mu) * (m22 + mu) - m12 * m12;
        if (!(det > 0.0))
            return {x, y, td.sqrt_d(), td.sqrt_d() < eps};
        const double dx = -((m22 + mu) * g1 - m12 * g2) / det;
        const double dy = -(-m12 * g1 + (m11 + mu) * g2) / det;
        x += dx;
        y += dy;
        if (std::hypot(dx, dy) < 1e-16 * std::max(1.0, std::hypot(x, y))) {
            const auto tdf = transversality_data(surface.jet(x, y));
            return {x, y, tdf.sqrt_d(), tdf.sqrt_d() < eps};
        }
    }
    if (!surface.contains(x, y))
        return {x, y, INFINITY, false};
    const auto td = transversality_data(surface.jet(x, y));
    return {x, y, td.sqrt_d(), td.sqrt_d() < eps};
}

} // namespace

SingularScan singular_set_scan(const SurfaceGraph& surface, const Rect& region, int grid_n, double eps)
{
    if (grid_n < 2)
        throw std::invalid_argument("singular_set_scan: grid_n must be at least 2");
    const double hx = (region.xmax - region.xmin) / (grid_n - 1);
    const double hy = (region.ymax - region.ymin) / (grid_n - 1);
    const double cell = std::max(hx, hy);

    SingularScan scan;
    scan.refinement_radius = 2.0 * cell;
    const double merge_tol = 1e-9 * std::max(1.0, cell);

    auto accept = [&](const Refined& r) {
        if (!r.converged || r.sqrt_d >= eps || !region.contains(r.x, r.y))
            return;
        for (const auto& p : scan.points)
            if (std::hypot(p.x - r.x, p.y - r.y) < merge_tol)
                return;
        scan.points.push_back({r.x, r.y, r.sqrt_d, true});
    };

    for (int i = 0; i < grid_n; ++i) {
        for (int j = 0; j < grid_n; ++j) {
            const double x = region.xmin + i * hx;
            const double y = region.ymin + j * hy;
            if (!surface.contains(x, y))
                continue;
            const Jet2 jet = surface.jet(x, y);
            const double coarse = 2.0 * cell * std::max(1.0, pq_jacobian_norm(jet));
            if (transversality_data(jet).sqrt_d() < coarse)
                accept(refine(surface, x, y, eps));
        }
    }

    // Non-isolation probe: seeds on a circle around each point.
    const double probe = 0.5 * scan.refinement_radius;
    for (auto& p : scan.points) {
        for (int k = 0; k < 8 && p.isolated; ++k) {
            const double th = 2.0 * std::numbers::pi * (k + 0.5) / 8.0;
            const auto r = refine(surface, p.x + probe * std::cos(th), p.y + probe * std::sin(th), eps);
            if (!r.converged || r.sqrt_d >= eps)
                continue;
            const double dist = std::hypot(r.x - p.x, r.y - p.y);
            if (dist > 0.05 * scan.refinement_radius && dist <= scan.refinement_radius)
                p.isolated = false;
        }
        (p.isolated ? scan.isolated_count : scan.non_isolated_count)++;
    }
    return scan;
}

} // namespace cotlab
