// Command-line surface for the alpha-concave hull toolkit: hulls, alpha
// shapes, certificate checks, corpus generation, benchmarks, SVG figures.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "achull/alpha_hull.hpp"
#include "achull/bench.hpp"
#include "achull/geom.hpp"
#include "achull/io.hpp"
#include "achull/polygen.hpp"
#include "achull/svg.hpp"
#include "achull/triangulate.hpp"

namespace {

using namespace achull;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        write_text_file(out_path, text);
    }
}

std::string polygon_text(const SimplePolygon& poly) { return polygon_to_string(poly); }

VertexCountRange parse_count_range(const std::string& text) {
    VertexCountRange r;
    auto colon = text.find(':');
    if (colon == std::string::npos) {
        r.lo = r.hi = std::stoi(text);
    } else {
        r.lo = std::stoi(text.substr(0, colon));
        r.hi = std::stoi(text.substr(colon + 1));
    }
    return r;
}

std::vector<double> parse_grid(const std::string& text) {
    std::vector<double> grid;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) grid.push_back(std::stod(item));
    }
    return grid;
}

const std::vector<std::string> kStrokeCycle = {"blue", "red", "green", "orange", "purple", "brown"};

int run(int argc, char** argv) {
    CLI::App app{"alpha-concave hulls, convex hulls and alpha shapes for planar point sets"};
    app.require_subcommand(1);

    // chull
    std::string chull_points, chull_out;
    auto* chull = app.add_subcommand("chull", "convex hull of a point file");
    chull->add_option("points", chull_points, "point file")->required();
    chull->add_option("-o,--out", chull_out, "output polygon file (default stdout)");

    // ashape
    std::string ashape_points, ashape_target, ashape_out;
    double ashape_radius = 0.0;
    bool ashape_auto = false;
    auto* ashape = app.add_subcommand("ashape", "alpha-shape region of a point file");
    ashape->add_option("points", ashape_points, "point file")->required();
    auto* radius_opt = ashape->add_option("-r,--radius", ashape_radius, "disk radius (inf allowed)")
                           ->check(CLI::PositiveNumber);
    auto* auto_opt = ashape->add_flag("--auto", ashape_auto,
                                      "search the smallest connected region containing --target");
    auto* target_opt =
        ashape->add_option("--target", ashape_target, "target polygon file for --auto");
    ashape->add_option("-o,--out", ashape_out, "output file (default stdout)");
    auto_opt->excludes(radius_opt);
    auto_opt->needs(target_opt);

    // ahull
    std::string ahull_points, ahull_out;
    double ahull_alpha = 0.0;
    bool ahull_exact = false, ahull_heuristic = false;
    int ahull_cap = kDefaultExactCap;
    auto* ahull = app.add_subcommand("ahull", "alpha-concave hull of a point file");
    ahull->add_option("points", ahull_points, "point file")->required();
    ahull->add_option("-a,--alpha", ahull_alpha, "alpha in degrees, 0..180")
        ->required()
        ->check(CLI::Range(0.0, 180.0));
    auto* exact_flag = ahull->add_flag("--exact", ahull_exact, "force the exact solver");
    auto* heur_flag = ahull->add_flag("--heuristic", ahull_heuristic, "force the digging heuristic");
    ahull->add_option("--cap", ahull_cap, "exact-solver point cap");
    ahull->add_option("-o,--out", ahull_out, "output polygon file (default stdout)");
    exact_flag->excludes(heur_flag);

    // verify
    std::string verify_points, verify_poly;
    double verify_alpha = 0.0, verify_area = 0.0, verify_tol = 1e-9;
    auto* verify = app.add_subcommand("verify", "check an alpha-polygon area certificate");
    verify->add_option("points", verify_points, "point file")->required();
    verify->add_option("poly", verify_poly, "polygon file")->required();
    verify->add_option("-a,--alpha", verify_alpha, "alpha in degrees")
        ->required()
        ->check(CLI::Range(0.0, 180.0));
    verify->add_option("-A,--area", verify_area, "area budget")->required();
    verify->add_option("--tol", verify_tol, "area tolerance (default 1e-9)");

    // gen
    int gen_n = 0, gen_count = 1;
    std::uint64_t gen_seed = 0;
    bool gen_scale = false;
    std::string gen_out, gen_out_dir;
    auto* gen = app.add_subcommand("gen", "generate seeded random simple polygons");
    gen->add_option("-n,--n", gen_n, "vertex count")->required();
    gen->add_option("-s,--seed", gen_seed, "seed")->required();
    gen->add_option("-c,--count", gen_count, "how many polygons");
    gen->add_flag("--scale", gen_scale, "scale each polygon to the unit box");
    gen->add_option("-o,--out", gen_out, "output polygon file (count 1; default stdout)");
    gen->add_option("--out-dir", gen_out_dir, "output directory (required for count > 1)");

    // bench
    int bench_count = 0;
    std::string bench_n = "15", bench_grid, bench_out;
    std::uint64_t bench_seed = 0;
    auto* bench = app.add_subcommand("bench", "hull vs alpha-shape approximation comparison");
    bench->add_option("-c,--count", bench_count, "number of polygons")->required();
    bench->add_option("-n,--n", bench_n, "vertex count N or range LO:HI")->required();
    bench->add_option("-s,--seed", bench_seed, "seed")->required();
    bench->add_option("--grid", bench_grid, "comma-separated alpha grid (default 0,10,...,180)");
    bench->add_option("--out", bench_out, "CSV output path")->required();

    // render
    std::vector<std::string> render_layers;
    std::string render_out, render_strokes;
    double render_fill_opacity = 0.0;
    auto* render = app.add_subcommand("render", "render layers to an SVG figure");
    render->add_option("--out", render_out, "SVG output path")->required();
    render->add_option("layers", render_layers, "layer specs: points:FILE or poly:FILE")
        ->required();
    render->add_option("--stroke", render_strokes, "comma-separated stroke colors per layer");
    render->add_option("--fill-opacity", render_fill_opacity, "fill opacity for outline layers");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (chull->parsed()) {
            PointSet pts{read_points_file(chull_points)};
            emit(polygon_text(convex_hull(pts)), chull_out);
            return 0;
        }

        if (ashape->parsed()) {
            PointSet pts{read_points_file(ashape_points)};
            Triangulation tri = delaunay(pts);
            Radius r = Radius::infinite();
            AlphaShape shape;
            if (ashape_auto) {
                SimplePolygon target = read_polygon_file(ashape_target);
                std::tie(r, shape) = best_containing_alpha(tri, target);
            } else {
                if (radius_opt->count() == 0) {
                    std::cerr << "ashape: either --radius or --auto is required\n";
                    return 2;
                }
                r = std::isinf(ashape_radius) ? Radius::infinite() : Radius(ashape_radius);
                shape = alpha_region(tri, r);
            }
            std::ostringstream out;
            out << "# radius=" << (r.is_infinite() ? "inf" : format_double(r.value))
                << " area=" << format_double(shape.area)
                << " connected=" << (shape.connected ? 1 : 0)
                << " loops=" << shape.boundary_loops.size() << '\n';
            for (std::size_t i = 0; i < shape.boundary_loops.size(); ++i) {
                out << "# loop " << i << '\n';
                for (int vi : shape.boundary_loops[i]) {
                    const Point2& p = tri.points[vi];
                    out << format_double(p.x) << ' ' << format_double(p.y) << '\n';
                }
            }
            emit(out.str(), ashape_out);
            return 0;
        }

        if (ahull->parsed()) {
            PointSet pts{read_points_file(ahull_points)};
            AlphaDegrees alpha(ahull_alpha);
            bool use_exact =
                ahull_exact || (!ahull_heuristic && static_cast<int>(pts.size()) <= ahull_cap);
            HullResult hr =
                use_exact ? ach_exact(pts, alpha, ahull_cap) : ach_heuristic(pts, alpha);
            std::cerr << "# method=" << (hr.method == HullMethod::Exact ? "exact" : "heuristic")
                      << " area=" << format_double(hr.area) << '\n';
            emit(polygon_text(hr.polygon), ahull_out);
            return 0;
        }

        if (verify->parsed()) {
            PointSet pts{read_points_file(verify_points)};
            SimplePolygon poly = read_polygon_file(verify_poly);
            bool ok = verify_certificate(pts, poly, AlphaDegrees(verify_alpha),
                                         AreaBudget{verify_area, verify_tol});
            std::cout << (ok ? "ACCEPT" : "REJECT") << '\n';
            return ok ? 0 : 1;
        }

        if (gen->parsed()) {
            if (gen_count < 1) {
                std::cerr << "gen: count must be >= 1\n";
                return 2;
            }
            if (gen_count > 1 && gen_out_dir.empty()) {
                std::cerr << "gen: --out-dir is required for count > 1\n";
                return 2;
            }
            if (!gen_out_dir.empty()) std::filesystem::create_directories(gen_out_dir);
            for (int k = 0; k < gen_count; ++k) {
                std::uint64_t seed =
                    gen_count == 1 ? gen_seed
                                   : batch_polygon_seed(gen_seed, static_cast<std::uint64_t>(k));
                GenOutcome out = random_simple_polygon_traced({gen_n, seed, -1});
                if (out.reseeds > 0) {
                    std::cerr << "# polygon " << k << ": reseeded " << out.reseeds
                              << " time(s), final seed " << out.seed_used << '\n';
                }
                SimplePolygon poly =
                    gen_scale ? scale_to_unit(out.polygon) : std::move(out.polygon);
                if (gen_out_dir.empty()) {
                    emit(polygon_text(poly), gen_out);
                } else {
                    char name[32];
                    std::snprintf(name, sizeof(name), "poly_%05d.txt", k);
                    write_text_file((std::filesystem::path(gen_out_dir) / name).string(),
                                    polygon_text(poly));
                }
            }
            return 0;
        }

        if (bench->parsed()) {
            std::vector<double> grid =
                bench_grid.empty() ? default_alpha_grid() : parse_grid(bench_grid);
            ComparisonReport report =
                run_comparison(bench_count, parse_count_range(bench_n), bench_seed, grid);
            std::string csv = report_to_csv(report);
            write_text_file(bench_out, csv);
            // Echo the summary lines.
            std::istringstream in(csv);
            std::string line;
            while (std::getline(in, line)) {
                if (!line.empty() && line[0] == '#') std::cout << line << '\n';
            }
            return 0;
        }

        if (render->parsed()) {
            std::vector<std::string> strokes = kStrokeCycle;
            if (!render_strokes.empty()) {
                strokes.clear();
                std::stringstream ss(render_strokes);
                std::string item;
                while (std::getline(ss, item, ',')) strokes.push_back(item);
            }
            Scene scene;
            for (std::size_t i = 0; i < render_layers.size(); ++i) {
                const std::string& spec = render_layers[i];
                auto colon = spec.find(':');
                if (colon == std::string::npos) {
                    std::cerr << "render: bad layer spec '" << spec << "' (kind:path)\n";
                    return 2;
                }
                std::string kind = spec.substr(0, colon);
                std::string path = spec.substr(colon + 1);
                LayerStyle style;
                style.stroke = strokes[i % strokes.size()];
                style.fill_opacity = render_fill_opacity;
                if (kind == "points") {
                    scene.layers.push_back(SceneLayer::point_layer(read_points_file(path), style));
                } else if (kind == "poly" || kind == "polygon") {
                    scene.layers.push_back(
                        SceneLayer::polygon_layer(read_polygon_file(path), style));
                } else {
                    std::cerr << "render: unknown layer kind '" << kind << "'\n";
                    return 2;
                }
            }
            write_text_file(render_out, render_svg(scene));
            return 0;
        }
    } catch (const DomainError& e) {
        std::cerr << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
