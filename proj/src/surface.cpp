#include "cotlab/surface.hpp"

#include "cotlab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

namespace cotlab {

namespace {

std::string point_str(double x, double y)
{
    std::ostringstream os;
    os.precision(17);
    os << "(" << x << ", " << y << ")";
    return os.str();
}

} // namespace

bool Jet2::finite() const noexcept
{
    return std::isfinite(x) && std::isfinite(y) && std::isfinite(f) && std::isfinite(fx)
        && std::isfinite(fy) && std::isfinite(fxx) && std::isfinite(fxy) && std::isfinite(fyy);
}

Domain Domain::plane()
{
    return Domain{};
}

Domain Domain::rect(Rect r)
{
    Domain d;
    d.bounds_ = r;
    std::ostringstream os;
    os << "[" << r.xmin << ", " << r.xmax << "] x [" << r.ymin << ", " << r.ymax << "]";
    d.description_ = os.str();
    return d;
}

Domain Domain::where(std::function<bool(double, double)> pred, std::string description)
{
    Domain d;
    d.pred_ = std::move(pred);
    d.description_ = std::move(description);
    return d;
}

bool Domain::contains(double x, double y) const
{
    if (!std::isfinite(x) || !std::isfinite(y))
        return false;
    if (bounds_ && !bounds_->contains(x, y))
        return false;
    if (pred_ && !pred_(x, y))
        return false;
    return true;
}

SurfaceGraph::SurfaceGraph(std::string provenance, JetEvaluator jet, Domain domain, ScalarField value)
    : provenance_(std::move(provenance))
    , jet_(std::move(jet))
    , domain_(std::move(domain))
    , value_(std::move(value))
{
}

Jet2 SurfaceGraph::jet(double x, double y) const
{
    if (!domain_.contains(x, y))
        throw OutOfDomain(provenance_ + ": point " + point_str(x, y) + " outside " + domain_.description());
    return jet_(x, y);
}

double SurfaceGraph::value(double x, double y) const
{
    if (!domain_.contains(x, y))
        throw OutOfDomain(provenance_ + ": point " + point_str(x, y) + " outside " + domain_.description());
    return value_ ? value_(x, y) : jet_(x, y).f;
}

ScalarField SurfaceGraph::scalar_field() const
{
    if (value_)
        return value_;
    return [jet = jet_](double x, double y) { return jet(x, y).f; };
}

Jet2 eval_jet(const SurfaceGraph& surface, double x, double y)
{
    return surface.jet(x, y);
}

double default_fd_step(double x, double y) noexcept
{
    return kFiniteDiffStep * std::max({1.0, std::abs(x), std::abs(y)});
}

Jet2 finite_diff_jet(const ScalarField& field, double x, double y, double h, const Domain* domain)
{
    if (!(h > 0.0))
        throw std::invalid_argument("finite_diff_jet: step must be positive");
    if (domain) {
        for (int i = -1; i <= 1; ++i)
            for (int j = -1; j <= 1; ++j)
                if (!domain->contains(x + i * h, y + j * h))
                    throw StencilOutOfDomain("finite-difference stencil around " + point_str(x, y)
                                             + " leaves " + domain->description());
    }
    const double f00 = field(x, y);
    const double fp0 = field(x + h, y);
    const double fm0 = field(x - h, y);
    const double f0p = field(x, y + h);
    const double f0m = field(x, y - h);
    const double fpp = field(x + h, y + h);
    const double fpm = field(x + h, y - h);
    const double fmp = field(x - h, y + h);
    const double fmm = field(x - h, y - h);

    Jet2 j;
    j.x = x;
    j.y = y;
    j.f = f00;
    j.fx = (fp0 - fm0) / (2.0 * h);
    j.fy = (f0p - f0m) / (2.0 * h);
    j.fxx = (fp0 - 2.0 * f00 + fm0) / (h * h);
    j.fyy = (f0p - 2.0 * f00 + f0m) / (h * h);
    j.fxy = (fpp - fpm - fmp + fmm) / (4.0 * h * h);
    return j;
}

SurfaceGraph from_callable(std::string name, ScalarField field, Domain domain)
{
    auto jet = [field, domain](double x, double y) {
        return finite_diff_jet(field, x, y, default_fd_step(x, y), &domain);
    };
    return SurfaceGraph(std::move(name), std::move(jet), domain, field);
}

double TransversalityData::sqrt_d() const noexcept
{
    return std::sqrt(D);
}

TransversalityData transversality_data(const Jet2& jet) noexcept
{
    TransversalityData td;
    td.p = jet.x - 2.0 * jet.fy;
    td.q = jet.y + 2.0 * jet.fx;
    td.D = td.p * td.p + td.q * td.q;
    return td;
}

PointKind classify_point(const TransversalityData& td, double eps)
{
    if (!(eps > 0.0))
        throw std::invalid_argument("classify_point: eps must be positive");
    return td.sqrt_d() < eps ? PointKind::Singular : PointKind::Regular;
}

Frame adapted_frame_graph(const Jet2& jet, double eps)
{
    const auto td = transversality_data(jet);
    if (classify_point(td, eps) == PointKind::Singular)
        throw SingularPoint("adapted frame undefined at singular point " + point_str(jet.x, jet.y));
    const double s = td.sqrt_d();
    const double x = jet.x;
    const double y = jet.y;
    Frame fr;
    fr.v0 = {0.0, 0.0, -1.0};
    fr.v1 = {td.p / s, td.q / s, (x * jet.fx + y * jet.fy) / s};
    fr.v2 = {-td.q / s, td.p / s, 0.5 * (y * y + 2.0 * y * jet.fx + x * x - 2.0 * x * jet.fy) / s};
    return fr;
}

namespace surfaces {

SurfaceGraph zero()
{
    return SurfaceGraph("zero", [](double x, double y) { return Jet2{x, y, 0, 0, 0, 0, 0, 0}; });
}

SurfaceGraph plane(double a, double b, double c)
{
    std::ostringstream os;
    os.precision(17);
    os << "plane(a=" << a << ", b=" << b << ", c=" << c << ")";
    return SurfaceGraph(os.str(), [a, b, c](double x, double y) {
        return Jet2{x, y, a * x + b * y + c, a, b, 0, 0, 0};
    });
}

SurfaceGraph xy_half()
{
    return SurfaceGraph("xy2", [](double x, double y) {
        return Jet2{x, y, 0.5 * x * y, 0.5 * y, 0.5 * x, 0, 0.5, 0};
    });
}

SurfaceGraph quartic()
{
    return SurfaceGraph("quartic", [](double x, double y) {
        const double x2 = x * x;
        return Jet2{x, y, x2 * x2, 4 * x2 * x, 0, 12 * x2, 0, 0};
    });
}

} // namespace surfaces

} // namespace cotlab
