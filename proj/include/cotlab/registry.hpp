#pragma once

#include "cotlab/surface.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cotlab {

/// Family name plus whichever parameters it takes:
///   zero-cot        c1, c2, F
///   bernstein       a, b, and either c (linear) or g (quadratic)
///   pminimal-local  x0, F, G
///   plane           a, b, c
///   zero, xy2, quartic
struct FamilyParams {
    std::string family;
    std::optional<double> c1;
    std::optional<double> c2;
    std::optional<double> a;
    std::optional<double> b;
    std::optional<double> c;
    std::optional<double> x0;
    std::optional<std::string> F;
    std::optional<std::string> G;
    std::optional<std::string> g;
};

const std::vector<std::string>& family_names();

/// Throws std::invalid_argument for unknown names or missing parameters.
SurfaceGraph make_family(const FamilyParams& params);

} // namespace cotlab
