#include "cotlab/characteristics.hpp"
#include "cotlab/construct.hpp"
#include "cotlab/errors.hpp"
#include "cotlab/transversality.hpp"
#include "cotlab/verify.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace cotlab;

TEST_CASE("radial characteristic of the zero function")
{
    const auto tr = trace(surfaces::zero(), 1.0, 0.0, Direction::Forward, 1e-3, 2.0);
    CHECK(tr.termination == Termination::MaxTime);
    double worst = 0.0;
    for (const auto& s : tr.samples) {
        worst = std::max(worst, std::abs(s.a + 2.0 / (1.0 + s.t)));
        CHECK(std::abs(s.x - (1.0 + s.t)) < 1e-12);
        CHECK(std::abs(s.y) < 1e-14);
    }
    CHECK(worst < 1e-8);
    CHECK(tr.samples.back().t == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("vertical characteristic of xy/2")
{
    const auto tr = trace(surfaces::xy_half(), 0.0, 1.0, Direction::Forward, 1e-3, 1.0);
    for (const auto& s : tr.samples) {
        CHECK(std::abs(s.x) < 1e-14);
        CHECK(std::abs(s.y - (1.0 + s.t)) < 1e-12);
        CHECK(std::abs(s.a + 1.0 / (1.0 + s.t)) < 1e-10);
        CHECK(s.r == 0.0);
    }
}

TEST_CASE("backward trace toward the origin")
{
    const auto tr = trace(surfaces::zero(), 1.0, 0.0, Direction::Backward, 1e-3, 2.0);
    CHECK(tr.termination == Termination::SingularApproach);
    const auto ts = detect_blowup(tr);
    REQUIRE(ts);
    CHECK(std::abs(*ts + 1.0) < 1e-4);
}

TEST_CASE("trace errors and termination")
{
    CHECK_THROWS_AS(trace(surfaces::zero(), 0.0, 0.0, Direction::Forward, 1e-3, 1.0), StartSingular);
    const SurfaceGraph boxed("box", [](double x, double y) { return surfaces::zero().jet(x, y); },
                             Domain::rect({-2.0, 2.0, -2.0, 2.0}));
    const auto tr = trace(boxed, 1.0, 0.0, Direction::Forward, 1e-2, 5.0);
    CHECK(tr.termination == Termination::OutOfDomain);
    CHECK(tr.samples.back().x <= 2.0);
    const auto ok = trace(surfaces::zero(), 1.0, 0.0, Direction::Forward, 1e-2, 0.5);
    CHECK_THROWS_AS(detect_blowup(ok), NotApplicable);
}

TEST_CASE("riccati_integrate")
{
    auto sol = riccati_integrate(1.0, [](double) { return 0.0; }, 0.0, 0.5, 1e-3);
    CHECK(std::abs(sol.a.back() - 2.0) < 1e-8);
    CHECK(sol.t.back() == 0.5);

    sol = riccati_integrate(0.0, [](double) { return 1.0; }, 0.0, std::numbers::pi / 4, 1e-3);
    CHECK(std::abs(sol.a.back() - 1.0) < 1e-7);

    // a' = a^2 - 1 with a(0) = 0 gives a = -tanh t.
    sol = riccati_integrate(0.0, [](double) { return -1.0; }, 0.0, 5.0, 1e-3);
    CHECK_FALSE(sol.blew_up);
    for (std::size_t i = 0; i < sol.t.size(); ++i)
        CHECK(std::abs(sol.a[i] + std::tanh(sol.t[i])) < 1e-9);

    sol = riccati_integrate(1.0, [](double) { return 0.0; }, 0.0, 3.0, 1e-3);
    CHECK(sol.blew_up);
    REQUIRE(sol.blowup_t);
    CHECK(std::abs(*sol.blowup_t - 1.0) < 1e-6);
}

TEST_CASE("riccati_closed_form")
{
    for (double a0 : {-2.0, 0.0, 0.7})
        for (double k : {-1.5, 0.0, 2.0})
            CHECK(riccati_closed_form(a0, k, 0.0) == a0);
    CHECK(riccati_closed_form(2.0, 0.0, 0.25) == doctest::Approx(4.0).epsilon(1e-15));
    CHECK_THROWS_AS(riccati_closed_form(2.0, 0.0, 0.5), BeyondBlowup);
    const auto sol = riccati_integrate(1.0, [](double) { return 1.0; }, 0.0, 0.3, 1e-3);
    CHECK(std::abs(sol.a.back() - riccati_closed_form(1.0, 1.0, 0.3)) < 1e-7);
    // tan(t + pi/4) from a0 = 1, k = 1.
    CHECK(riccati_closed_form(1.0, 1.0, 0.3) == doctest::Approx(std::tan(0.3 + std::numbers::pi / 4)));
    // Hyperbolic branch: a0 = 2, k = -1 gives -coth(t - atanh(1/2)).
    const double t = 0.2;
    CHECK(riccati_closed_form(2.0, -1.0, t) == doctest::Approx(-1.0 / std::tanh(t - std::atanh(0.5))));
}

TEST_CASE("riccati_bound")
{
    const auto b = riccati_bound(0.0, 1.0);
    REQUIRE(b.blowup_t);
    REQUIRE(b.backward_blowup_t);
    CHECK(*b.blowup_t == doctest::Approx(std::numbers::pi / 2));
    CHECK(*b.backward_blowup_t == doctest::Approx(-std::numbers::pi / 2));
    CHECK_FALSE(riccati_bound(-1.0, 0.0).blowup_t);
    CHECK(*riccati_bound(-1.0, 0.0).backward_blowup_t == doctest::Approx(-1.0));
    CHECK_FALSE(riccati_bound(0.5, -1.0).blowup_t);
    CHECK(*riccati_bound(2.0, -1.0).blowup_t == doctest::Approx(std::atanh(0.5)));
}

TEST_CASE("singular_verdict")
{
    auto v = singular_verdict(2.0, 0.0);
    CHECK(v.value(VerdictKind::ForwardBound) == 0.5);
    CHECK(v.has(VerdictKind::AtMostOne));

    v = singular_verdict(0.0, 1.0);
    CHECK(*v.value(VerdictKind::ForwardBound) == doctest::Approx(std::numbers::pi / 2));
    CHECK(*v.value(VerdictKind::TwoSingularWithLengthBound) == doctest::Approx(std::numbers::pi));

    v = singular_verdict(0.0, -1.0);
    CHECK(v.has(VerdictKind::NoSingular));
    CHECK_FALSE(v.has(VerdictKind::AtMostOne));

    v = singular_verdict(1.0, -1.0);
    CHECK(v.has(VerdictKind::NoSingular));

    v = singular_verdict(-3.0, 0.0);
    CHECK(v.has(VerdictKind::AtMostOne));
    CHECK(*v.value(VerdictKind::BackwardBound) == doctest::Approx(-1.0 / 3.0));
}

TEST_CASE("comparison principle")
{
    const auto tr = trace(surfaces::zero(), 1.0, 0.0, Direction::Forward, 1e-3, 1.0);
    double kmax = -INFINITY;
    for (const auto& s : tr.samples)
        kmax = std::max(kmax, s.r);
    auto rep = comparison_check(tr, [kmax](double) { return kmax; }, Sense::Upper);
    CHECK(rep.holds);

    rep = comparison_check(tr, sampled_cot(tr), Sense::Upper);
    CHECK(rep.holds);
    CHECK(rep.max_abs_gap < 1e-7);

    const auto tx = trace(surfaces::xy_half(), 0.0, 1.0, Direction::Forward, 1e-3, 1.0);
    rep = comparison_check(tx, [](double) { return 0.0; }, Sense::Upper);
    CHECK(rep.holds);
    CHECK(rep.max_abs_gap < 1e-7);
    for (const auto& s : tx.samples)
        CHECK(std::abs(s.a - (-1.0 / (1.0 - -1.0 * s.t))) < 1e-7);

    CHECK_THROWS_AS(comparison_check(tr, [](double) { return -10.0; }, Sense::Upper), HypothesisViolated);
    CHECK(comparison_check(tr, [](double) { return -10.0; }, Sense::Lower).holds);
}

TEST_CASE("blowup toward the singular line y = -x")
{
    const auto s = zero_cot_solution(1.0, 0.0, ProfileFunction::polynomial({0.0, 0.0, 0.5}));
    const auto tr = trace(s, 0.3, 0.5, Direction::Backward, 1e-3, 2.0);
    REQUIRE(tr.termination == Termination::SingularApproach);
    const auto ts = detect_blowup(tr);
    REQUIRE(ts);
    // The characteristic is vertical; it meets y = -0.3 after 0.8 units backward.
    CHECK(std::abs(*ts + 0.8) < 1e-3);
    const auto scan = singular_set_scan(s, {-2.0, 2.0, -2.0, 2.0}, 81);
    bool crossing_found = false;
    for (const auto& p : scan.points)
        if (std::abs(p.x - 0.3) < 0.05)
            crossing_found |= std::abs((tr.samples.front().y + *ts) - p.y) < 0.06;
    CHECK(crossing_found);
}

TEST_CASE("singular_set_scan")
{
    SUBCASE("zero-COT line")
    {
        const auto s = zero_cot_solution(1.0, 0.0, ProfileFunction::polynomial({0.0, 0.0, 0.5}));
        const auto scan = singular_set_scan(s, {-2.0, 2.0, -2.0, 2.0}, 41);
        REQUIRE(scan.points.size() > 5);
        for (const auto& p : scan.points) {
            CHECK(std::abs(p.y + p.x) < 1e-6);
            CHECK_FALSE(p.isolated);
        }
        CHECK(scan.isolated_count == 0);
    }
    SUBCASE("isolated origin")
    {
        const auto scan = singular_set_scan(surfaces::zero(), {-1.0, 1.0, -1.0, 1.0}, 41);
        REQUIRE(scan.points.size() == 1);
        CHECK(std::abs(scan.points[0].x) < 1e-9);
        CHECK(std::abs(scan.points[0].y) < 1e-9);
        CHECK(scan.points[0].isolated);
    }
    SUBCASE("plane without singular points in the region")
    {
        // Singular point at (2b, -2a) = (1, -0.2) lies outside.
        const auto scan = singular_set_scan(surfaces::plane(0.1, 0.5, 0.0), {-3.0, 0.0, -3.0, 3.0}, 41);
        CHECK(scan.points.empty());
    }
}

TEST_CASE("riccati defect shrinks quadratically")
{
    const auto s = bernstein(BernsteinQuadratic{1.0, 2.0, ProfileFunction::cos()});
    const auto c = trace(s, 1.2, 0.8, Direction::Forward, 0.02, 0.4);
    const auto f = trace(s, 1.2, 0.8, Direction::Forward, 0.01, 0.4);
    const double ratio = riccati_defect(c) / riccati_defect(f);
    CHECK(ratio > 3.2);
    CHECK(ratio < 4.8);
}
