// Acceptance criteria: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "cotlab/characteristics.hpp"
#include "cotlab/construct.hpp"
#include "cotlab/errors.hpp"
#include "cotlab/model_spaces.hpp"
#include "cotlab/transversality.hpp"
#include "cotlab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

using namespace cotlab;

namespace {

struct Result {
    bool pass;
    std::string detail;
};

std::string fmt(const char* f, double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

double max_on_grid(const SurfaceGraph& s, const std::function<double(const Jet2&)>& residual, int n = 41,
                   double lo = -2.0, double hi = 2.0)
{
    double worst = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double x = lo + (hi - lo) * i / (n - 1);
            const double y = lo + (hi - lo) * j / (n - 1);
            if (!s.contains(x, y))
                continue;
            const Jet2 jet = s.jet(x, y);
            if (transversality_data(jet).sqrt_d() < 1e-6)
                continue;
            worst = std::max(worst, std::abs(residual(jet)));
        }
    return worst;
}

ProfileFunction half_square()
{
    return ProfileFunction::polynomial({0.0, 0.0, 0.5});
}

std::vector<SurfaceGraph> trace_families()
{
    return {surfaces::zero(),
            surfaces::xy_half(),
            surfaces::plane(0.3, -0.2, 0.0),
            surfaces::quartic(),
            zero_cot_solution(1.0, 2.0, ProfileFunction::sin()),
            zero_cot_solution(1.0, 0.0, half_square()),
            bernstein(BernsteinQuadratic{1.0, 2.0, ProfileFunction::cos()}),
            pminimal_local(0.0, ProfileFunction::sin(), ProfileFunction::cos())};
}

bool uniform(const CharacteristicTrace& tr)
{
    for (std::size_t i = 1; i < tr.samples.size(); ++i)
        if (std::abs(std::abs(tr.samples[i].t - tr.samples[i - 1].t) - tr.step) > 1e-9 * tr.step)
            return false;
    return true;
}

// Random regular traces with uniform steps over the whole window, at steps h and h/2.
struct TracePair {
    CharacteristicTrace coarse;
    CharacteristicTrace fine;
};

struct TraceSet {
    std::vector<TracePair> pairs;
    int rejected = 0; // left the domain, met a singular point, or needed step halving
};

TraceSet random_trace_pairs(int count, double h, double max_t, std::uint64_t seed)
{
    const auto fams = trace_families();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, fams.size() - 1);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    std::bernoulli_distribution backward(0.5);
    TraceSet out;
    while (static_cast<int>(out.pairs.size()) < count) {
        const auto& s = fams[pick(rng)];
        const double x = u(rng);
        const double y = u(rng);
        const Direction dir = backward(rng) ? Direction::Backward : Direction::Forward;
        if (!s.contains(x, y) || transversality_data(s.jet(x, y)).sqrt_d() < 0.3)
            continue;
        TracePair tp{trace(s, x, y, dir, h, max_t), trace(s, x, y, dir, h / 2, max_t)};
        if (tp.coarse.termination != Termination::MaxTime || tp.fine.termination != Termination::MaxTime ||
            !uniform(tp.coarse) || !uniform(tp.fine)) {
            ++out.rejected;
            continue;
        }
        out.pairs.push_back(std::move(tp));
    }
    return out;
}

// Same defect as riccati_defect, with r taken from an arbitrary rule.
double defect_with(const CharacteristicTrace& tr, const std::function<double(const TraceSample&)>& r)
{
    double worst = 0.0;
    const auto& s = tr.samples;
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
        const double da = (s[i + 1].a - s[i - 1].a) / (s[i + 1].t - s[i - 1].t);
        worst = std::max(worst, std::abs(da - s[i].a * s[i].a - r(s[i])));
    }
    return worst;
}

constexpr double kRiccatiStep = 0.0025;
constexpr double kRiccatiWindow = 0.4;
constexpr double kDefectFloor = 1e-10;

struct RiccatiStats {
    double worst_ratio_gap = 0.0;
    double max_c = 0.0;
    int below_floor = 0;
    int traces = 0;
};

RiccatiStats riccati_stats(const std::vector<TracePair>& pairs,
                           const std::function<double(const TraceSample&)>& r)
{
    RiccatiStats st;
    for (const auto& tp : pairs) {
        const double d0 = defect_with(tp.coarse, r);
        const double d1 = defect_with(tp.fine, r);
        ++st.traces;
        st.max_c = std::max(st.max_c, d0 / (kRiccatiStep * kRiccatiStep));
        // Defects at roundoff level carry no ratio information.
        if (d1 < kDefectFloor && d0 < 4 * kDefectFloor) {
            ++st.below_floor;
            continue;
        }
        st.worst_ratio_gap = std::max(st.worst_ratio_gap, std::abs(d0 / d1 - 4.0) / 4.0);
    }
    return st;
}

const TraceSet& shared_traces()
{
    static const auto set = random_trace_pairs(100, kRiccatiStep, kRiccatiWindow, 101);
    return set;
}

Result criterion1()
{
    const std::vector<SurfaceGraph> zc = {
        zero_cot_solution(1.0, 2.0, ProfileFunction::sin()),
        zero_cot_solution(-0.5, 1.0, ProfileFunction::cos()),
        zero_cot_solution(3.0, -2.0, ProfileFunction::polynomial({0.1, -0.4, 0.25, 0.05})),
        zero_cot_solution(1.0, 0.0, half_square()),
        zero_cot_solution(-2.0, 0.0, ProfileFunction::sin()),
    };
    double zworst = 0.0;
    for (const auto& s : zc)
        zworst = std::max(zworst, max_on_grid(s, zcot_residual));
    const double pworst =
        std::max(max_on_grid(bernstein(BernsteinLinear{1.0, 2.0, 3.0}), pminimal_residual),
                 max_on_grid(bernstein(BernsteinQuadratic{1.0, 2.0, ProfileFunction::cos()}), pminimal_residual));
    return {zworst < 1e-9 && pworst < 1e-9,
            "max zcot residual " + fmt("%.3g", zworst) + ", max pminimal residual " + fmt("%.3g", pworst) +
                " (tol 1e-9)"};
}

Result criterion2()
{
    const auto& set = shared_traces();
    const auto st = riccati_stats(set.pairs, [](const TraceSample& s) { return s.r; });
    const bool pass = st.worst_ratio_gap <= 0.2 && st.below_floor < st.traces;
    return {pass, std::to_string(st.traces) + " traces at step " + fmt("%g", kRiccatiStep) + " (" +
                      std::to_string(set.rejected) + " starts rejected), observed C " + fmt("%.3g", st.max_c) +
                      ", worst |ratio/4 - 1| " + fmt("%.3f", st.worst_ratio_gap) + " (tol 0.2), " +
                      std::to_string(st.below_floor) + " at roundoff floor"};
}

Result criterion3()
{
    std::mt19937_64 rng(303);
    std::uniform_real_distribution<double> ua(-2.0, 2.0);
    std::uniform_real_distribution<double> uk(0.1, 3.0);
    double worst = 0.0;
    for (int n = 0; n < 50; ++n) {
        const int sign = n % 3;
        const double a0 = ua(rng);
        const double k = sign == 0 ? uk(rng) : (sign == 1 ? 0.0 : -uk(rng));
        const auto b = riccati_bound(a0, k);
        const double t_end = b.blowup_t ? 0.9 * *b.blowup_t : 3.0;
        const auto sol = riccati_integrate(a0, [k](double) { return k; }, 0.0, t_end, 1e-3);
        for (std::size_t i = 0; i < sol.t.size(); ++i)
            worst = std::max(worst, std::abs(sol.a[i] - riccati_closed_form(a0, k, sol.t[i])));
    }
    return {worst < 1e-7, "50 (a0, k), sup error " + fmt("%.3g", worst) + " (tol 1e-7)"};
}

Result criterion4()
{
    double worst = 0.0;
    bool all_detected = true;
    for (double r0 : {0.5, 1.0, 2.0}) {
        const auto tr = trace(surfaces::zero(), r0, 0.0, Direction::Backward, 1e-3, 2 * r0);
        if (tr.termination != Termination::SingularApproach) {
            all_detected = false;
            continue;
        }
        const auto ts = detect_blowup(tr);
        if (!ts) {
            all_detected = false;
            continue;
        }
        worst = std::max(worst, std::abs(*ts + r0));
    }
    const auto fb = singular_verdict(2.0, 0.0).value(VerdictKind::ForwardBound);
    const bool exact = fb && *fb == 0.5;
    return {all_detected && worst < 1e-4 && exact,
            "max |t* + r0| " + fmt("%.3g", worst) + " (tol 1e-4), ForwardBound(a0=2, k=0) = " +
                (fb ? fmt("%.17g", *fb) : std::string("none"))};
}

Result criterion5()
{
    const auto set = random_trace_pairs(100, 1e-3, 0.5, 505);
    int violations = 0;
    double worst_excess = 0.0;
    for (const auto& tp : set.pairs) {
        double k = -INFINITY;
        for (const auto& s : tp.fine.samples)
            k = std::max(k, s.r);
        const auto rep = comparison_check(tp.fine, [k](double) { return k; }, Sense::Upper);
        worst_excess = std::max(worst_excess, rep.max_violation - rep.tolerance);
        violations += rep.holds ? 0 : 1;
    }
    const auto eq = trace(surfaces::xy_half(), 0.0, 1.0, Direction::Forward, 1e-3, 1.0);
    const auto rep = comparison_check(eq, [](double) { return 0.0; }, Sense::Upper);
    return {violations == 0 && rep.max_abs_gap < 1e-7,
            std::to_string(violations) + " violations on 100 traces (worst excess over tolerance " +
                fmt("%.3g", worst_excess) + "), equality gap " + fmt("%.3g", rep.max_abs_gap) + " (tol 1e-7)"};
}

Result criterion6()
{
    const std::vector<SurfaceGraph> zc = {zero_cot_solution(1.0, 2.0, ProfileFunction::sin()),
                                          zero_cot_solution(-0.5, 1.0, ProfileFunction::cos()),
                                          zero_cot_solution(1.0, 0.0, half_square())};
    double back = 0.0;
    double line = 0.0;
    for (const auto& s : zc) {
        for (double x = -1.5; x <= 1.5; x += 0.25)
            for (double y = -1.5; y <= 1.5; y += 0.25) {
                const Jet2 j = s.jet(x, y);
                if (transversality_data(j).sqrt_d() < 1e-3)
                    continue;
                const auto field = burgers_field(s, default_branch(j), BurgersConvention::Backward);
                if (field.defined(x, y))
                    back = std::max(back, std::abs(burgers_residual(field, x, y)));
            }
        const Jet2 j = s.jet(0.7, 0.4);
        const auto branch = default_branch(j);
        const auto field = burgers_field(s, branch, BurgersConvention::Backward);
        const double v = field.value(0.7, 0.4);
        const Line l = branch == BurgersBranch::G ? characteristic_line(0.7, 0.4, v) : characteristic_line_h(0.7, 0.4, v);
        line = std::max(line, constancy_along_line(field, l, 101));
    }
    const auto loc = pminimal_local(0.0, ProfileFunction::sin(), ProfileFunction::cos());
    const auto g = burgers_field(loc, BurgersBranch::G, BurgersConvention::Forward);
    const auto h = burgers_field(loc, BurgersBranch::H, BurgersConvention::Forward);
    double fwd = 0.0;
    for (double x = -0.3; x <= 0.3001; x += 0.05)
        for (double y = -1.0; y <= 1.0001; y += 0.1) {
            if (transversality_data(loc.jet(x, y)).sqrt_d() < 1e-3)
                continue;
            const auto& field = default_branch(loc.jet(x, y)) == BurgersBranch::G ? g : h;
            fwd = std::max(fwd, std::abs(burgers_residual(field, x, y)));
        }
    return {back < 1e-6 && fwd < 1e-5 && line < 1e-8,
            "backward " + fmt("%.3g", back) + " (tol 1e-6), forward " + fmt("%.3g", fwd) +
                " (tol 1e-5), line constancy " + fmt("%.3g", line) + " (tol 1e-8)"};
}

Result criterion7()
{
    double closed = 0.0;
    const double c = 0.6;
    const PMinimalLocal cst(0.0, ProfileFunction::constant(c), ProfileFunction::cos());
    const double c1 = 0.5, c0 = -0.3, d1 = 1.2, d0 = 0.4;
    const PMinimalLocal lin(0.0, ProfileFunction::linear(c1, c0), ProfileFunction::linear(d1, d0));
    for (double x = -0.9; x <= 0.9001; x += 0.1)
        for (double y = -1.5; y <= 1.5001; y += 0.1) {
            closed = std::max(closed, std::abs(cst.value(x, y) - (0.5 * (-y * x + c * x * x) + std::cos(y - c * x))));
            closed = std::max(closed,
                              std::abs(lin.value(x, y) - ((-0.5 * x + d1) * (y - c0 * x) / (c1 * x + 1) + d0)));
        }
    const PMinimalLocal gen(0.0, ProfileFunction::sin(), ProfileFunction::cos());
    const auto s = gen.surface();
    double root = 0.0;
    double res = 0.0;
    double res_fd = 0.0;
    for (double x = -0.9; x <= 0.9001; x += 0.1)
        for (double y = -2.0; y <= 2.0001; y += 0.2) {
            if (!s.contains(x, y))
                continue;
            root = std::max(root, std::abs(gen.solve(x, y).residual));
            res = std::max(res, std::abs(pminimal_residual(s.jet(x, y))));
            // Oracle from the scalar function alone: Richardson-extrapolated central differences.
            const Jet2 a = finite_diff_jet(s.scalar_field(), x, y, 1e-4);
            Jet2 b = finite_diff_jet(s.scalar_field(), x, y, 5e-5);
            b.fx = (4 * b.fx - a.fx) / 3;
            b.fy = (4 * b.fy - a.fy) / 3;
            b.fxx = (4 * b.fxx - a.fxx) / 3;
            b.fxy = (4 * b.fxy - a.fxy) / 3;
            b.fyy = (4 * b.fyy - a.fyy) / 3;
            res_fd = std::max(res_fd, std::abs(pminimal_residual(b)));
        }
    return {closed < 1e-10 && root < 1e-12 && res < 1e-5 && res_fd < 1e-5,
            "closed-form gap " + fmt("%.3g", closed) + " (tol 1e-10), root residual " + fmt("%.3g", root) +
                " (tol 1e-12), pminimal residual " + fmt("%.3g", res) + " jets / " + fmt("%.3g", res_fd) +
                " finite differences (tol 1e-5)"};
}

Result criterion8()
{
    using exact::Rational;
    const auto su = structure_constants(ModelSpace::su2());
    const auto sl = structure_constants(ModelSpace::sl2());
    bool ok = su(0, 1, 2) == Rational(-1) && sl(0, 1, 2) == Rational(1) && su(1, 2, 2) == Rational(0) &&
              sl(1, 2, 2) == Rational(0) && su(1, 2, 0) == Rational(-1) && sl(1, 2, 0) == Rational(-1);
    for (double a : {-5.0, -1.0, 0.0, 0.5, 3.0})
        ok = ok && cot_from_constants(su, a) == 1.0 && cot_from_constants(sl, a) == -1.0;
    ok = ok && jacobi_holds(ModelSpace::su2()) && jacobi_holds(ModelSpace::sl2()) &&
         jacobi_holds(ModelSpace::heisenberg());
    std::mt19937_64 rng(808);
    std::uniform_real_distribution<double> th(-2 * std::numbers::pi, 2 * std::numbers::pi);
    double unit = 0.0;
    for (int n = 0; n < 1000; ++n) {
        const auto u = su2_example_surface(th(rng), th(rng));
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                const auto uu = u[i][0] * std::conj(u[j][0]) + u[i][1] * std::conj(u[j][1]);
                unit = std::max(unit, std::abs(uu - std::complex<double>(i == j ? 1.0 : 0.0)));
            }
    }
    return {ok && unit < 1e-14, std::string("exact tables ") + (ok ? "match" : "differ") + ", unitarity defect " +
                                    fmt("%.3g", unit) + " (tol 1e-14)"};
}

Result criterion9()
{
    const auto s = zero_cot_solution(1.0, 0.0, half_square());
    const auto scan = singular_set_scan(s, {-2.0, 2.0, -2.0, 2.0}, 81);
    double off = 0.0;
    for (const auto& p : scan.points)
        off = std::max(off, std::abs(p.x + p.y));
    const bool pass = !scan.points.empty() && off < 1e-6 && scan.isolated_count == 0;
    return {pass, std::to_string(scan.points.size()) + " points, max |x + y| " + fmt("%.3g", off) +
                      " (tol 1e-6), " + std::to_string(scan.isolated_count) + " isolated"};
}

Result criterion10()
{
    const auto fams = trace_families();
    std::mt19937_64 rng(1010);
    std::uniform_int_distribution<std::size_t> pick(0, fams.size() - 1);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    double worst = 0.0;
    int n = 0;
    while (n < 1000) {
        const auto& s = fams[pick(rng)];
        const double x = u(rng);
        const double y = u(rng);
        if (!s.contains(x, y))
            continue;
        const Jet2 j = s.jet(x, y);
        if (transversality_data(j).sqrt_d() < 1e-3)
            continue;
        const double r = cot(j);
        const double rp = cot_printed(j);
        // Relative to the size of the summed terms, so cancelling (zero-COT) samples stay meaningful.
        const auto td = transversality_data(j);
        const double scale = 2.0 *
                             (std::abs(td.p * td.p * (1 + 2 * j.fxy)) + std::abs(2 * td.p * td.q * (j.fyy - j.fxx)) +
                              std::abs(td.q * td.q * (1 - 2 * j.fxy))) /
                             (td.D * td.D);
        worst = std::max(worst, std::abs(rp + r) / scale);
        ++n;
    }
    const auto with_cot = riccati_stats(shared_traces().pairs, [](const TraceSample& s) { return s.r; });
    // The printed sign breaks the identity: the defect stays O(1) instead of O(step^2).
    const auto with_printed = riccati_stats(shared_traces().pairs, [](const TraceSample& s) { return -s.r; });
    const bool pass = worst <= 1e-12 && with_cot.worst_ratio_gap <= 0.2 && with_printed.worst_ratio_gap > 0.2;
    return {pass, "max relative |cot_printed + cot| " + fmt("%.3g", worst) + " (tol 1e-12), cot ratio gap " +
                      fmt("%.3f", with_cot.worst_ratio_gap) + ", printed-sign ratio gap " +
                      fmt("%.3f", with_printed.worst_ratio_gap)};
}

} // namespace

int main()
{
    const std::vector<std::pair<const char*, Result (*)()>> criteria = {
        {"exact-family residuals", criterion1},
        {"riccati identity along characteristics", criterion2},
        {"closed-form vs numeric riccati", criterion3},
        {"singular-time bounds", criterion4},
        {"comparison principle", criterion5},
        {"burgers splitting", criterion6},
        {"local p-minimal solution", criterion7},
        {"model spaces", criterion8},
        {"singular set of a zero-cot graph", criterion9},
        {"cot sign regression", criterion10},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Result r;
        try {
            r = criteria[i].second();
        } catch (const std::exception& e) {
            r = {false, std::string("exception: ") + e.what()};
        }
        std::printf("%s [%zu] %s: %s\n", r.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, r.detail.c_str());
        std::fflush(stdout);
        failed += r.pass ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
