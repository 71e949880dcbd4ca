// Command-line front end: eval | trace | solve | verify | models.
#include "cotlab/characteristics.hpp"
#include "cotlab/errors.hpp"
#include "cotlab/io.hpp"
#include "cotlab/model_spaces.hpp"
#include "cotlab/registry.hpp"
#include "cotlab/transversality.hpp"
#include "cotlab/verify.hpp"
#include "cotlab/version.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

struct Region {
    double xmin = -2.0;
    double xmax = 2.0;
    double ymin = -2.0;
    double ymax = 2.0;
};

void add_family_options(CLI::App* cmd, cotlab::FamilyParams& fp)
{
    cmd->add_option("--family", fp.family, "Surface family")
        ->required()
        ->check(CLI::IsMember(cotlab::family_names()));
    cmd->add_option("--c1", fp.c1, "zero-cot constant c1");
    cmd->add_option("--c2", fp.c2, "zero-cot constant c2");
    cmd->add_option("--a", fp.a, "bernstein/plane coefficient a");
    cmd->add_option("--b", fp.b, "bernstein/plane coefficient b");
    cmd->add_option("--c", fp.c, "bernstein/plane constant c");
    cmd->add_option("--local-x0", fp.x0, "pminimal-local base abscissa x0");
    cmd->add_option("--F", fp.F, "profile F: sin | cos | zero | const:c | linear:m,b | poly:c0,c1,...");
    cmd->add_option("--G", fp.G, "profile G (pminimal-local)");
    cmd->add_option("--g", fp.g, "profile g (bernstein quadratic)");
}

void add_region_options(CLI::App* cmd, Region& r)
{
    cmd->add_option("--xmin", r.xmin)->capture_default_str();
    cmd->add_option("--xmax", r.xmax)->capture_default_str();
    cmd->add_option("--ymin", r.ymin)->capture_default_str();
    cmd->add_option("--ymax", r.ymax)->capture_default_str();
}

template <typename Fn>
void with_output(const std::string& path, Fn&& fn)
{
    if (path == "-") {
        fn(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open output file " + path);
    fn(out);
}

json rational_json(const cotlab::exact::Rational& r)
{
    if (r.is_integer())
        return r.num();
    return r.str();
}

json model_json(const cotlab::ModelSpace& m)
{
    json j;
    j["model"] = cotlab::to_string(m.name);
    json brackets = json::object();
    json constants = json::object();
    for (int i = 0; i < 3; ++i)
        for (int k = i + 1; k < 3; ++k) {
            const auto coeffs = cotlab::bracket_coefficients(m, i, k);
            json arr = json::array();
            for (const auto& c : coeffs)
                arr.push_back(rational_json(c));
            brackets["[v" + std::to_string(i) + ",v" + std::to_string(k) + "]"] = arr;
            constants["a" + std::to_string(i) + std::to_string(k)] = arr;
        }
    j["brackets"] = brackets;
    j["constants"] = constants;
    return j;
}

cotlab::Rect to_rect(const Region& r)
{
    if (!(r.xmin < r.xmax) || !(r.ymin < r.ymax))
        throw CLI::ValidationError("region", "empty region");
    return {r.xmin, r.xmax, r.ymin, r.ymax};
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Transversality geometry of graph surfaces in the Heisenberg group"};
    app.set_version_flag("--version", std::string(cotlab::kVersion));
    app.require_subcommand(1);

    cotlab::FamilyParams fp;
    Region region;
    int nx = 41;
    int ny = 41;
    double eps = cotlab::kSingularEps;
    std::string output = "-";
    std::string format = "csv";

    auto* eval = app.add_subcommand("eval", "Sample a surface on a grid (CSV)");
    add_family_options(eval, fp);
    add_region_options(eval, region);
    eval->add_option("--nx", nx)->check(CLI::Range(2, 100000))->capture_default_str();
    eval->add_option("--ny", ny)->check(CLI::Range(2, 100000))->capture_default_str();
    eval->add_option("--eps", eps)->check(CLI::PositiveNumber)->capture_default_str();
    eval->add_option("-o,--output", output)->capture_default_str();

    double x0 = 0.0;
    double y0 = 0.0;
    double step = 1e-3;
    double max_t = 1.0;
    std::string direction = "forward";
    auto* tr = app.add_subcommand("trace", "Trace a characteristic curve (CSV t,x,y,a,r)");
    add_family_options(tr, fp);
    tr->add_option("--x0", x0, "start x")->required();
    tr->add_option("--y0", y0, "start y")->required();
    tr->add_option("--direction", direction)
        ->check(CLI::IsMember({"forward", "backward"}))
        ->capture_default_str();
    tr->add_option("--step", step)->check(CLI::PositiveNumber)->capture_default_str();
    tr->add_option("--max-t", max_t)->check(CLI::PositiveNumber)->capture_default_str();
    tr->add_option("-o,--output", output)->capture_default_str();

    auto* solve = app.add_subcommand("solve", "Materialize a family and sample it");
    add_family_options(solve, fp);
    add_region_options(solve, region);
    solve->add_option("--nx", nx)->check(CLI::Range(2, 100000))->capture_default_str();
    solve->add_option("--ny", ny)->check(CLI::Range(2, 100000))->capture_default_str();
    solve->add_option("--eps", eps)->check(CLI::PositiveNumber)->capture_default_str();
    solve->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    solve->add_option("-o,--output", output)->capture_default_str();

    std::string suite;
    auto* verify = app.add_subcommand("verify", "Run a verification suite (JSON report)");
    verify->add_option("--suite", suite)->required()->check(CLI::IsMember(cotlab::suite_names()));
    verify->add_option("-o,--output", output)->capture_default_str();

    std::string model = "all";
    auto* models = app.add_subcommand("models", "Print bracket tables and structure constants (JSON)");
    models->add_option("--model", model)->check(CLI::IsMember({"all", "heisenberg", "su2", "sl2"}))->capture_default_str();
    models->add_option("-o,--output", output)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*eval || *solve) {
            const auto surface = cotlab::make_family(fp);
            const auto rows = cotlab::evaluate_grid(surface, to_rect(region), nx, ny, eps);
            if (*eval || format == "csv") {
                with_output(output, [&](std::ostream& os) { cotlab::write_grid_csv(os, rows); });
                return 0;
            }
            double zmax = 0.0;
            double pmax = 0.0;
            std::size_t singular = 0;
            for (const auto& r : rows) {
                zmax = std::max(zmax, std::abs(r.zcot_residual));
                pmax = std::max(pmax, std::abs(r.pminimal_residual));
                singular += std::isnan(r.a) ? 1 : 0;
            }
            json j;
            j["family"] = surface.provenance();
            j["region"] = {region.xmin, region.xmax, region.ymin, region.ymax};
            j["nx"] = nx;
            j["ny"] = ny;
            j["samples"] = rows.size();
            j["singular_samples"] = singular;
            j["max_abs_zcot_residual"] = zmax;
            j["max_abs_pminimal_residual"] = pmax;
            with_output(output, [&](std::ostream& os) { os << j.dump(2) << '\n'; });
            return 0;
        }
        if (*tr) {
            const auto surface = cotlab::make_family(fp);
            const auto dir = direction == "forward" ? cotlab::Direction::Forward : cotlab::Direction::Backward;
            const auto result = cotlab::trace(surface, x0, y0, dir, step, max_t);
            with_output(output, [&](std::ostream& os) { cotlab::write_trace_csv(os, result); });
            std::cerr << "termination: " << cotlab::to_string(result.termination) << '\n';
            return 0;
        }
        if (*verify) {
            const auto report = cotlab::run_suite(suite);
            with_output(output, [&](std::ostream& os) { os << cotlab::report_json(report) << '\n'; });
            return report.failed() == 0 ? 0 : kExitVerifyFailed;
        }
        if (*models) {
            json out;
            if (model == "all") {
                out = json::array();
                for (const auto& m : {cotlab::ModelSpace::heisenberg(), cotlab::ModelSpace::su2(),
                                      cotlab::ModelSpace::sl2()})
                    out.push_back(model_json(m));
            } else {
                out = model_json(model == "su2"  ? cotlab::ModelSpace::su2()
                                     : model == "sl2" ? cotlab::ModelSpace::sl2()
                                                      : cotlab::ModelSpace::heisenberg());
            }
            with_output(output, [&](std::ostream& os) { os << out.dump(2) << '\n'; });
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const cotlab::DegenerateParams& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const cotlab::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    }
    return kExitUsage;
}
