#pragma once

#include "cotlab/characteristics.hpp"
#include "cotlab/surface.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace cotlab {

/// Shortest decimal that round-trips to the same double ("nan", "inf" for
/// non-finite values).
std::string format_double(double v);

/// Header "t,x,y,a,r", one row per sample.
void write_trace_csv(std::ostream& os, const CharacteristicTrace& trace);

struct GridRow {
    double x;
    double y;
    double f;
    double p;
    double q;
    double a; // NaN at singular points
    double r; // NaN at singular points
    double zcot_residual;
    double pminimal_residual;
};

/// Samples the surface on an nx-by-ny lattice covering `region` (row-major in
/// y, then x). Nodes outside the surface domain are skipped.
std::vector<GridRow> evaluate_grid(const SurfaceGraph& surface, const Rect& region, int nx, int ny,
                                   double eps = kSingularEps);

/// Header "x,y,f,p,q,a,r,zcot_residual,pminimal_residual".
void write_grid_csv(std::ostream& os, const std::vector<GridRow>& rows);

} // namespace cotlab
