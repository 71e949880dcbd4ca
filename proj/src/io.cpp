#include "cotlab/io.hpp"

#include "cotlab/transversality.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace cotlab {

std::string format_double(double v)
{
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc{})
        throw std::runtime_error("format_double: conversion failed");
    return std::string(buf, ptr);
}

void write_trace_csv(std::ostream& os, const CharacteristicTrace& trace)
{
    os << "t,x,y,a,r\n";
    for (const auto& s : trace.samples)
        os << format_double(s.t) << ',' << format_double(s.x) << ',' << format_double(s.y) << ','
           << format_double(s.a) << ',' << format_double(s.r) << '\n';
}

std::vector<GridRow> evaluate_grid(const SurfaceGraph& surface, const Rect& region, int nx, int ny, double eps)
{
    if (nx < 2 || ny < 2)
        throw std::invalid_argument("evaluate_grid: need at least two nodes per axis");
    std::vector<GridRow> rows;
    rows.reserve(static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny));
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (int j = 0; j < ny; ++j) {
        const double y = region.ymin + (region.ymax - region.ymin) * j / (ny - 1);
        for (int i = 0; i < nx; ++i) {
            const double x = region.xmin + (region.xmax - region.xmin) * i / (nx - 1);
            if (!surface.contains(x, y))
                continue;
            const Jet2 jet = surface.jet(x, y);
            const auto td = transversality_data(jet);
            const bool regular = classify_point(td, eps) == PointKind::Regular;
            rows.push_back({x, y, jet.f, td.p, td.q, regular ? dot(td, eps) : nan, regular ? cot(jet, eps) : nan,
                            zcot_residual(jet), pminimal_residual(jet)});
        }
    }
    return rows;
}

void write_grid_csv(std::ostream& os, const std::vector<GridRow>& rows)
{
    os << "x,y,f,p,q,a,r,zcot_residual,pminimal_residual\n";
    for (const auto& r : rows)
        os << format_double(r.x) << ',' << format_double(r.y) << ',' << format_double(r.f) << ','
           << format_double(r.p) << ',' << format_double(r.q) << ',' << format_double(r.a) << ','
           << format_double(r.r) << ',' << format_double(r.zcot_residual) << ','
           << format_double(r.pminimal_residual) << '\n';
}

} // namespace cotlab
