#include "cotlab/construct.hpp"

#include "cotlab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

namespace cotlab {

namespace {

std::string fmt(double v)
{
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

} // namespace

SurfaceGraph zero_cot_solution(double c1, double c2, const ProfileFunction& F)
{
    if (c1 == 0.0 && c2 == 0.0)
        throw DegenerateParams("zero_cot_solution: (c1, c2) must not both vanish");
    const std::string name = "zero-cot(c1=" + fmt(c1) + ", c2=" + fmt(c2) + ", F=" + F.tag() + ")";
    if (c2 == 0.0) {
        return SurfaceGraph(name, [F](double x, double y) {
            const auto [v, dv, d2v] = F(x);
            return Jet2{x, y, 0.5 * x * y + v, 0.5 * y + dv, 0.5 * x, d2v, 0.5, 0.0};
        });
    }
    return SurfaceGraph(name, [c1, c2, F](double x, double y) {
        const double ratio = c1 / c2;
        const auto [v, dv, d2v] = F(c1 * x - c2 * y);
        Jet2 j;
        j.x = x;
        j.y = y;
        j.f = 0.5 * ratio * x * x - 0.5 * x * y + v;
        j.fx = ratio * x - 0.5 * y + c1 * dv;
        j.fy = -0.5 * x - c2 * dv;
        j.fxx = ratio + c1 * c1 * d2v;
        j.fxy = -0.5 - c1 * c2 * d2v;
        j.fyy = c2 * c2 * d2v;
        return j;
    });
}

namespace {

// scale * (-ab x^2 + (a^2 - b^2) x y + ab y^2) + g(-b x + a y)
SurfaceGraph quadratic_family(std::string name, double a, double b, double scale, const ProfileFunction& g)
{
    return SurfaceGraph(std::move(name), [a, b, scale, g](double x, double y) {
        const double ab = a * b;
        const double diff = a * a - b * b;
        const auto [v, dv, d2v] = g(-b * x + a * y);
        Jet2 j;
        j.x = x;
        j.y = y;
        j.f = scale * (-ab * x * x + diff * x * y + ab * y * y) + v;
        j.fx = scale * (-2.0 * ab * x + diff * y) - b * dv;
        j.fy = scale * (diff * x + 2.0 * ab * y) + a * dv;
        j.fxx = -2.0 * ab * scale + b * b * d2v;
        j.fxy = diff * scale - ab * d2v;
        j.fyy = 2.0 * ab * scale + a * a * d2v;
        return j;
    });
}

} // namespace

SurfaceGraph bernstein(const BernsteinBranch& branch)
{
    if (const auto* lin = std::get_if<BernsteinLinear>(&branch))
        return surfaces::plane(lin->a, lin->b, lin->c);
    const auto& quad = std::get<BernsteinQuadratic>(branch);
    const double norm2 = quad.a * quad.a + quad.b * quad.b;
    // With a = b = 0 the polynomial part vanishes and f = g(0) is constant.
    const double scale = norm2 > 0.0 ? -0.5 / norm2 : 0.0;
    return quadratic_family("bernstein-quadratic(a=" + fmt(quad.a) + ", b=" + fmt(quad.b) + ", g=" + quad.g.tag() + ")",
                            quad.a, quad.b, scale, quad.g);
}

SurfaceGraph bernstein_literal_quadratic(double a, double b, const ProfileFunction& g)
{
    return quadratic_family("bernstein-literal(a=" + fmt(a) + ", b=" + fmt(b) + ", g=" + g.tag() + ")", a, b, 1.0,
                            g);
}

// ---------------------------------------------------------------------------

PMinimalLocal::PMinimalLocal(double x0, ProfileFunction F, ProfileFunction G)
    : x0_(x0)
    , F_(std::move(F))
    , G_(std::move(G))
{
}

RootSolve PMinimalLocal::solve(double x, double y) const
{
    const double s = x - x0_;
    auto phi = [&](double u, double& dphi) {
        const auto [v, dv, d2v] = F_(u);
        dphi = s * dv + 1.0;
        return s * v + u - y;
    };

    double u = y;
    double dphi = 1.0;
    double res = phi(u, dphi);
    int iterations = 0;

    if (std::abs(res) >= kRootTolerance) {
        // Grow a bracket symmetric about the seed.
        double delta = std::abs(res) + 1e-12;
        double lo = 0.0;
        double hi = 0.0;
        double flo = 0.0;
        double fhi = 0.0;
        bool bracketed = false;
        for (int k = 0; k < 80 && !bracketed; ++k) {
            double unused = 0.0;
            lo = y - delta;
            hi = y + delta;
            flo = phi(lo, unused);
            fhi = phi(hi, unused);
            bracketed = flo * fhi <= 0.0;
            delta *= 2.0;
        }
        if (!bracketed)
            throw RootNotBracketed("pminimal_local: no sign change of Phi around y = " + fmt(y) + " at x = " + fmt(x));
        if (flo > 0.0) {
            std::swap(lo, hi);
            std::swap(flo, fhi);
        }
        // Newton with bisection fallback; lo keeps Phi < 0, hi keeps Phi > 0.
        for (; iterations < kRootMaxIterations; ++iterations) {
            if (res < 0.0)
                lo = u;
            else
                hi = u;
            double next = u - res / dphi;
            const bool inside = (next - lo) * (next - hi) < 0.0;
            if (!inside || !std::isfinite(next))
                next = 0.5 * (lo + hi);
            const double prev = u;
            u = next;
            res = phi(u, dphi);
            if (std::abs(res) < kRootTolerance || u == prev)
                break;
        }
        ++iterations;
    }
    if (!(dphi > 0.0))
        throw ValidityViolated("pminimal_local: Phi' = " + fmt(dphi) + " <= 0 at the root for (" + fmt(x) + ", "
                               + fmt(y) + ")");
    return RootSolve{u, res, dphi, iterations};
}

double PMinimalLocal::value(double x, double y) const
{
    const double u = ytilde(x, y);
    return 0.5 * (-u + x0_ * F_.value(u)) * (x - x0_) + G_.value(u);
}

Jet2 PMinimalLocal::jet(double x, double y) const
{
    const auto root = solve(x, y);
    const double u = root.ytilde;
    const double s = x - x0_;
    const auto [Fv, Fd, Fdd] = F_(u);
    const auto [Gv, Gd, Gdd] = G_(u);
    const double phi_u = root.dphi;

    // Implicit derivatives of yt from Phi(yt; x, y) = 0.
    const double ux = -Fv / phi_u;
    const double uy = 1.0 / phi_u;
    const double uxx = -(s * Fdd * ux * ux + 2.0 * Fd * ux) / phi_u;
    const double uxy = -(s * Fdd * ux * uy + Fd * uy) / phi_u;
    const double uyy = -(s * Fdd * uy * uy) / phi_u;

    // f = A(yt) s + G(yt) with A(u) = (-u + x0 F(u)) / 2.
    const double A = 0.5 * (-u + x0_ * Fv);
    const double Ad = 0.5 * (-1.0 + x0_ * Fd);
    const double Add = 0.5 * x0_ * Fdd;

    Jet2 j;
    j.x = x;
    j.y = y;
    j.f = A * s + Gv;
    j.fx = Ad * ux * s + A + Gd * ux;
    j.fy = Ad * uy * s + Gd * uy;
    j.fxx = Add * ux * ux * s + Ad * uxx * s + 2.0 * Ad * ux + Gdd * ux * ux + Gd * uxx;
    j.fxy = Add * ux * uy * s + Ad * uxy * s + Ad * uy + Gdd * ux * uy + Gd * uxy;
    j.fyy = Add * uy * uy * s + Ad * uyy * s + Gdd * uy * uy + Gd * uyy;
    return j;
}

Domain PMinimalLocal::validity_domain() const
{
    const auto& sup = F_.sup_abs_derivative();
    if (!sup || *sup == 0.0)
        return Domain::plane();
    const double radius = 1.0 / (*sup + 1e-9);
    const double x0 = x0_;
    return Domain::where([x0, radius](double x, double) { return std::abs(x - x0) < radius; },
                         "|x - " + fmt(x0) + "| < " + fmt(radius));
}

SurfaceGraph PMinimalLocal::surface() const
{
    auto self = *this;
    return SurfaceGraph("pminimal-local(x0=" + fmt(x0_) + ", F=" + F_.tag() + ", G=" + G_.tag() + ")",
                        [self](double x, double y) { return self.jet(x, y); }, validity_domain(),
                        [self](double x, double y) { return self.value(x, y); });
}

SurfaceGraph pminimal_local(double x0, const ProfileFunction& F, const ProfileFunction& G)
{
    return PMinimalLocal(x0, F, G).surface();
}

// ---------------------------------------------------------------------------

BurgersField::BurgersField(SurfaceGraph surface, BurgersBranch branch, BurgersConvention convention,
                           PartialsMode mode, double threshold)
    : surface_(std::move(surface))
    , branch_(branch)
    , convention_(convention)
    , mode_(mode)
    , threshold_(threshold)
{
}

namespace {

struct Ratio {
    double num;
    double den;
    double num_x;
    double num_y;
    double den_x;
    double den_y;
};

Ratio branch_ratio(const Jet2& j, BurgersBranch branch)
{
    const auto td = transversality_data(j);
    // p = x - 2 f_y, q = y + 2 f_x
    const double p_x = 1.0 - 2.0 * j.fxy;
    const double p_y = -2.0 * j.fyy;
    const double q_x = 2.0 * j.fxx;
    const double q_y = 1.0 + 2.0 * j.fxy;
    if (branch == BurgersBranch::G)
        return {td.q, td.p, q_x, q_y, p_x, p_y};
    return {td.p, td.q, p_x, p_y, q_x, q_y};
}

} // namespace

bool BurgersField::defined(double x, double y) const
{
    if (!surface_.contains(x, y))
        return false;
    return std::abs(branch_ratio(surface_.jet(x, y), branch_).den) >= threshold_;
}

double BurgersField::value(double x, double y) const
{
    const auto r = branch_ratio(surface_.jet(x, y), branch_);
    if (std::abs(r.den) < threshold_)
        throw BranchUndefined(std::string(branch_ == BurgersBranch::G ? "g" : "h") + " undefined at (" + fmt(x)
                              + ", " + fmt(y) + "): denominator " + fmt(r.den));
    return r.num / r.den;
}

BurgersSample BurgersField::sample(double x, double y) const
{
    if (mode_ == PartialsMode::FiniteDifference) {
        const double h = 1e-4 * std::max({1.0, std::abs(x), std::abs(y)});
        const double v = value(x, y);
        const double dx = (value(x + h, y) - value(x - h, y)) / (2.0 * h);
        const double dy = (value(x, y + h) - value(x, y - h)) / (2.0 * h);
        return {v, dx, dy};
    }
    const auto r = branch_ratio(surface_.jet(x, y), branch_);
    if (std::abs(r.den) < threshold_)
        throw BranchUndefined(std::string(branch_ == BurgersBranch::G ? "g" : "h") + " undefined at (" + fmt(x)
                              + ", " + fmt(y) + ")");
    const double d2 = r.den * r.den;
    return {r.num / r.den, (r.num_x * r.den - r.num * r.den_x) / d2, (r.num_y * r.den - r.num * r.den_y) / d2};
}

BurgersField burgers_field(const SurfaceGraph& surface, BurgersBranch branch, BurgersConvention convention,
                           PartialsMode mode)
{
    return BurgersField(surface, branch, convention, mode);
}

BurgersBranch default_branch(const Jet2& jet) noexcept
{
    const auto td = transversality_data(jet);
    return std::abs(td.p) >= std::abs(td.q) ? BurgersBranch::G : BurgersBranch::H;
}

double burgers_residual(const BurgersField& field, double x, double y)
{
    const auto s = field.sample(x, y);
    const bool g_branch = field.branch() == BurgersBranch::G;
    // The h-equations are the g-equations with the roles of x and y swapped.
    const double along = g_branch ? s.dx : s.dy;
    const double across = g_branch ? s.dy : s.dx;
    if (field.convention() == BurgersConvention::Backward)
        return across - s.value * along;
    return along + s.value * across;
}

// ---------------------------------------------------------------------------

Line characteristic_line(double a, double b, double g_value)
{
    return Line{a, b, -g_value, 1.0};
}

Line characteristic_line_h(double a, double b, double h_value)
{
    return Line{a, b, 1.0, -h_value};
}

Line forward_characteristic_line(double a, double b, double g_value)
{
    return Line{a, b, 1.0, g_value};
}

double constancy_along_line(const BurgersField& field, const Line& line, int n_samples, double t_min, double t_max)
{
    if (n_samples < 2)
        throw std::invalid_argument("constancy_along_line: need at least two samples");
    const double base = field.value(line.px, line.py);
    double worst = 0.0;
    for (int i = 0; i < n_samples; ++i) {
        const double t = t_min + (t_max - t_min) * i / (n_samples - 1);
        const auto [x, y] = line.at(t);
        worst = std::max(worst, std::abs(field.value(x, y) - base));
    }
    return worst;
}

} // namespace cotlab
