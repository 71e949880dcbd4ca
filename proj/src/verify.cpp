#include "cotlab/verify.hpp"

#include "cotlab/construct.hpp"
#include "cotlab/errors.hpp"
#include "cotlab/model_spaces.hpp"
#include "cotlab/transversality.hpp"
#include "cotlab/version.hpp"

#include <json.hpp>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <stdexcept>

namespace cotlab {

std::size_t VerificationReport::passed() const noexcept
{
    std::size_t n = 0;
    for (const auto& c : checks)
        n += c.pass ? 1 : 0;
    return n;
}

std::size_t VerificationReport::failed() const noexcept
{
    return checks.size() - passed();
}

void VerificationReport::add(std::string name, double measured, double tolerance)
{
    checks.push_back({std::move(name), measured <= tolerance, measured, tolerance});
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"riccati", "families", "burgers", "models", "comparison"};
    return names;
}

double riccati_defect(const CharacteristicTrace& trace)
{
    const auto& s = trace.samples;
    double worst = 0.0;
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
        const double h0 = s[i].t - s[i - 1].t;
        const double h1 = s[i + 1].t - s[i].t;
        if (std::abs(h0 - h1) > 1e-9 * std::abs(h0))
            continue;
        const double da = (s[i + 1].a - s[i - 1].a) / (s[i + 1].t - s[i - 1].t);
        worst = std::max(worst, std::abs(da - s[i].a * s[i].a - s[i].r));
    }
    return worst;
}

namespace {

double max_residual_on_grid(const SurfaceGraph& surf, double (*residual)(const Jet2&), double lo, double hi, int n)
{
    double worst = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double x = lo + (hi - lo) * i / (n - 1);
            const double y = lo + (hi - lo) * j / (n - 1);
            if (surf.contains(x, y))
                worst = std::max(worst, std::abs(residual(surf.jet(x, y))));
        }
    return worst;
}

void suite_riccati(VerificationReport& rep)
{
    std::mt19937_64 rng(20240601);
    std::uniform_real_distribution<double> ua(-2.0, 2.0);
    std::uniform_real_distribution<double> uk(0.2, 2.0);
    const char* names[] = {"closed_form_vs_rk4_k_positive", "closed_form_vs_rk4_k_zero",
                           "closed_form_vs_rk4_k_negative"};
    for (int sign = 0; sign < 3; ++sign) {
        double worst = 0.0;
        for (int n = 0; n < 10; ++n) {
            const double a0 = ua(rng);
            const double k = sign == 0 ? uk(rng) : (sign == 1 ? 0.0 : -uk(rng));
            const auto bound = riccati_bound(a0, k);
            const double t_end = bound.blowup_t ? 0.9 * *bound.blowup_t : 3.0;
            const auto sol = riccati_integrate(a0, [k](double) { return k; }, 0.0, t_end, 1e-3);
            for (std::size_t i = 0; i < sol.t.size(); ++i)
                worst = std::max(worst, std::abs(sol.a[i] - riccati_closed_form(a0, k, sol.t[i])));
        }
        rep.add(names[sign], worst, 1e-7);
    }

    // a' = a^2 + r along characteristics, step and half step.
    const SurfaceGraph families[] = {surfaces::zero(), surfaces::xy_half(),
                                     zero_cot_solution(1.0, 2.0, ProfileFunction::sin()),
                                     bernstein(BernsteinQuadratic{1.0, 2.0, ProfileFunction::cos()})};
    const double starts[][2] = {{1.0, 0.5}, {0.3, 1.0}, {1.0, 1.0}, {1.2, 0.8}};
    for (std::size_t f = 0; f < std::size(families); ++f) {
        const auto coarse = trace(families[f], starts[f][0], starts[f][1], Direction::Forward, 0.02, 0.4);
        const auto fine = trace(families[f], starts[f][0], starts[f][1], Direction::Forward, 0.01, 0.4);
        const double d0 = riccati_defect(coarse);
        const double d1 = riccati_defect(fine);
        rep.add("riccati_defect_ratio_" + families[f].provenance(), std::abs(d0 / d1 - 4.0), 0.8);
    }
    rep.add("singular_verdict_forward_bound_a0_2_k_0",
            std::abs(singular_verdict(2.0, 0.0).value(VerdictKind::ForwardBound).value_or(INFINITY) - 0.5), 0.0);
}

void suite_families(VerificationReport& rep)
{
    const auto sin = ProfileFunction::sin();
    const auto cos = ProfileFunction::cos();
    struct ZeroCase {
        const char* name;
        double c1;
        double c2;
        ProfileFunction F;
    };
    const ZeroCase cases[] = {
        {"zcot_c1_1_c2_2_sin", 1.0, 2.0, sin},
        {"zcot_c1_0_c2_1_cos", 0.0, 1.0, cos},
        {"zcot_c1_-3_c2_0.5_poly", -3.0, 0.5, ProfileFunction::polynomial({0.1, -0.4, 0.25, 0.05})},
        {"zcot_c2_0_half_square", 1.0, 0.0, ProfileFunction::polynomial({0.0, 0.0, 0.5})},
        {"zcot_c2_0_sin", 2.0, 0.0, sin},
    };
    for (const auto& c : cases)
        rep.add(c.name, max_residual_on_grid(zero_cot_solution(c.c1, c.c2, c.F), zcot_residual, -2.0, 2.0, 41), 1e-9);
    rep.add("pminimal_bernstein_linear", max_residual_on_grid(bernstein(BernsteinLinear{1.0, 2.0, 3.0}),
                                                              pminimal_residual, -2.0, 2.0, 41),
            1e-9);
    rep.add("pminimal_bernstein_quadratic", max_residual_on_grid(bernstein(BernsteinQuadratic{1.0, 2.0, cos}),
                                                                 pminimal_residual, -2.0, 2.0, 41),
            1e-9);

    // Local solution against its closed forms.
    const double c = 0.7;
    const auto G = ProfileFunction::sin();
    const PMinimalLocal constant_F(0.0, ProfileFunction::constant(c), G);
    const double c1 = 0.5, c0 = -0.3, d1 = 1.25, d0 = 0.4;
    const PMinimalLocal linear_FG(0.0, ProfileFunction::linear(c1, c0), ProfileFunction::linear(d1, d0));
    double worst_const = 0.0;
    double worst_lin = 0.0;
    for (int i = 0; i < 21; ++i)
        for (int j = 0; j < 21; ++j) {
            const double x = -1.5 + 3.0 * i / 20.0;
            const double y = -2.0 + 4.0 * j / 20.0;
            worst_const = std::max(worst_const,
                                   std::abs(constant_F.value(x, y) - (0.5 * (-y * x + c * x * x) + std::sin(y - c * x))));
            const double xl = -1.5 + 2.5 * i / 20.0; // keeps c1 x + 1 > 0
            worst_lin = std::max(worst_lin, std::abs(linear_FG.value(xl, y)
                                                     - ((-0.5 * xl + d1) * (y - c0 * xl) / (c1 * xl + 1.0) + d0)));
        }
    rep.add("pminimal_local_constant_F_closed_form", worst_const, 1e-10);
    rep.add("pminimal_local_linear_FG_closed_form", worst_lin, 1e-10);

    const PMinimalLocal generic(0.0, sin, cos);
    double worst_root = 0.0;
    double worst_res = 0.0;
    for (int i = 0; i < 11; ++i)
        for (int j = 0; j < 11; ++j) {
            const double x = -0.5 + i * 0.1;
            const double y = -1.0 + j * 0.2;
            worst_root = std::max(worst_root, std::abs(generic.solve(x, y).residual));
            worst_res = std::max(worst_res, std::abs(pminimal_residual(generic.jet(x, y))));
        }
    rep.add("pminimal_local_sin_cos_root_residual", worst_root, 1e-12);
    rep.add("pminimal_local_sin_cos_residual", worst_res, 1e-5);
}

void suite_burgers(VerificationReport& rep)
{
    const auto zc = zero_cot_solution(1.0, 2.0, ProfileFunction::sin());
    const auto field = burgers_field(zc, BurgersBranch::G, BurgersConvention::Backward);
    double worst = 0.0;
    double worst_g = 0.0;
    for (int i = 0; i < 21; ++i)
        for (int j = 0; j < 21; ++j) {
            const double x = -2.0 + 0.2 * i;
            const double y = -2.0 + 0.2 * j;
            if (!field.defined(x, y))
                continue;
            worst = std::max(worst, std::abs(burgers_residual(field, x, y)));
            worst_g = std::max(worst_g, std::abs(field.value(x, y) - 0.5));
        }
    rep.add("backward_residual_zero_cot", worst, 1e-6);
    rep.add("g_equals_c1_over_c2", worst_g, 1e-12);

    const auto line = characteristic_line(0.3, -0.4, field.value(0.3, -0.4));
    rep.add("g_constant_along_line", constancy_along_line(field, line, 101), 1e-8);

    const PMinimalLocal local(0.0, ProfileFunction::sin(), ProfileFunction::cos());
    const auto fwd = burgers_field(local.surface(), BurgersBranch::G, BurgersConvention::Forward);
    double worst_fwd = 0.0;
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j) {
            const double x = -0.2 + 0.05 * i;
            const double y = 0.3 + 0.1 * j;
            if (fwd.defined(x, y))
                worst_fwd = std::max(worst_fwd, std::abs(burgers_residual(fwd, x, y)));
        }
    rep.add("forward_residual_pminimal_local", worst_fwd, 1e-5);
}

void suite_models(VerificationReport& rep)
{
    using exact::Rational;
    auto exact_gap = [](const Rational& got, const Rational& want) { return std::abs((got - want).to_double()); };
    const auto su2 = structure_constants(ModelSpace::su2());
    const auto sl2 = structure_constants(ModelSpace::sl2());
    const auto heis = structure_constants(ModelSpace::heisenberg());
    rep.add("su2_a01^2_eq_-1", exact_gap(su2(0, 1, 2), Rational(-1)), 0.0);
    rep.add("sl2_a01^2_eq_1", exact_gap(sl2(0, 1, 2), Rational(1)), 0.0);
    rep.add("su2_a12^2_eq_0", exact_gap(su2(1, 2, 2), Rational(0)), 0.0);
    rep.add("sl2_a12^2_eq_0", exact_gap(sl2(1, 2, 2), Rational(0)), 0.0);
    for (const auto& [name, sc] : {std::pair{"su2", su2}, std::pair{"sl2", sl2}, std::pair{"heisenberg", heis}}) {
        rep.add(std::string(name) + "_a12^0_eq_-1", exact_gap(sc(1, 2, 0), Rational(-1)), 0.0);
        rep.add(std::string(name) + "_reeb_a01^0_a02^0_zero",
                exact_gap(sc(0, 1, 0), Rational(0)) + exact_gap(sc(0, 2, 0), Rational(0)), 0.0);
    }
    rep.add("su2_jacobi", jacobi_holds(ModelSpace::su2()) ? 0.0 : 1.0, 0.0);
    rep.add("sl2_jacobi", jacobi_holds(ModelSpace::sl2()) ? 0.0 : 1.0, 0.0);
    rep.add("heisenberg_jacobi", jacobi_holds(ModelSpace::heisenberg()) ? 0.0 : 1.0, 0.0);
    double worst_su2 = 0.0;
    double worst_sl2 = 0.0;
    for (double a : {-3.0, -0.5, 0.0, 0.25, 7.0}) {
        worst_su2 = std::max(worst_su2, std::abs(cot_from_constants(su2, a) - 1.0));
        worst_sl2 = std::max(worst_sl2, std::abs(cot_from_constants(sl2, a) + 1.0));
    }
    rep.add("su2_cot_eq_1", worst_su2, 0.0);
    rep.add("sl2_cot_eq_-1", worst_sl2, 0.0);

    double worst_unit = 0.0;
    for (int i = 0; i < 16; ++i) {
        const auto U = su2_example_surface(0.37 * i, 1.0 - 0.21 * i);
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) {
                const auto e = U[r][0] * std::conj(U[c][0]) + U[r][1] * std::conj(U[c][1]);
                worst_unit = std::max(worst_unit, std::abs(e - (r == c ? 1.0 : 0.0)));
            }
        const auto det = U[0][0] * U[1][1] - U[0][1] * U[1][0];
        worst_unit = std::max(worst_unit, std::abs(det - 1.0));
    }
    rep.add("su2_example_unitary_det1", worst_unit, 1e-14);
}

void suite_comparison(VerificationReport& rep)
{
    const SurfaceGraph families[] = {surfaces::zero(), zero_cot_solution(1.0, 2.0, ProfileFunction::sin()),
                                     bernstein(BernsteinQuadratic{1.0, 2.0, ProfileFunction::cos()}),
                                     surfaces::quartic()};
    const double starts[][2] = {{1.0, 0.0}, {0.4, -0.7}, {1.2, 0.8}, {0.5, 1.0}};
    for (std::size_t f = 0; f < std::size(families); ++f) {
        const auto tr = trace(families[f], starts[f][0], starts[f][1], Direction::Forward, 1e-3, 1.0);
        double k = -INFINITY;
        for (const auto& s : tr.samples)
            k = std::max(k, s.r);
        const auto res = comparison_check(tr, [k](double) { return k; }, Sense::Upper);
        rep.add("upper_comparison_" + families[f].provenance(), std::max(0.0, res.max_violation - res.tolerance), 0.0);
    }
    const auto tr = trace(surfaces::xy_half(), 0.0, 1.0, Direction::Forward, 1e-3, 2.0);
    const auto res = comparison_check(tr, [](double) { return 0.0; }, Sense::Upper);
    rep.add("equality_case_xy2_k0", res.max_abs_gap, 1e-7);
}

} // namespace

VerificationReport run_suite(std::string_view suite)
{
    VerificationReport rep;
    rep.suite = std::string(suite);
    rep.version = kVersion;
    rep.input = {{"suite", rep.suite}};
    if (suite == "riccati")
        suite_riccati(rep);
    else if (suite == "families")
        suite_families(rep);
    else if (suite == "burgers")
        suite_burgers(rep);
    else if (suite == "models")
        suite_models(rep);
    else if (suite == "comparison")
        suite_comparison(rep);
    else
        throw std::invalid_argument("unknown suite '" + rep.suite + "'");
    return rep;
}

std::string report_json(const VerificationReport& report, int indent)
{
    nlohmann::ordered_json j;
    j["suite"] = report.suite;
    j["version"] = report.version;
    nlohmann::ordered_json input = nlohmann::ordered_json::object();
    for (const auto& [k, v] : report.input)
        input[k] = v;
    j["input"] = input;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& c : report.checks) {
        nlohmann::ordered_json item;
        item["name"] = c.name;
        item["status"] = c.pass ? "pass" : "fail";
        item["measured"] = c.measured;
        item["tolerance"] = c.tolerance;
        checks.push_back(std::move(item));
    }
    j["checks"] = std::move(checks);
    j["summary"] = {{"total", report.checks.size()}, {"passed", report.passed()}, {"failed", report.failed()}};
    return j.dump(indent);
}

} // namespace cotlab
