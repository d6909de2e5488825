#include <atomic>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "updraw/augment.hpp"
#include "updraw/drawer.hpp"
#include "updraw/drawer2.hpp"
#include "updraw/generate.hpp"
#include "updraw/graph.hpp"
#include "updraw/invariants.hpp"
#include "updraw/json_io.hpp"
#include "updraw/ordering.hpp"
#include "updraw/slopes.hpp"
#include "updraw/svg.hpp"
#include "updraw/verify.hpp"

namespace {

using namespace updraw;
namespace fs = std::filesystem;

int print_diagnostics(const Diagnostics& d) {
    for (const auto& c : d.checks) {
        std::cout << (c.pass ? "ok   " : "FAIL ") << c.name;
        if (!c.message.empty()) std::cout << ": " << c.message;
        std::cout << "\n";
    }
    return d.ok() ? 0 : 1;
}

PlaneStGraph load_graph(const std::string& path) {
    return graph_from_json(read_file(path));
}

std::string kind_name(VertexKind k) {
    switch (k) {
        case VertexKind::Real: return "real";
        case VertexKind::Subdiv: return "subdivision";
        case VertexKind::Pole: return "pole";
    }
    return "?";
}

std::string kind_name(EdgeKind k) {
    switch (k) {
        case EdgeKind::Real: return "real";
        case EdgeKind::LowerStub: return "lower-stub";
        case EdgeKind::UpperStub: return "upper-stub";
        case EdgeKind::Dummy: return "dummy";
    }
    return "?";
}

/* partial drawing of a construction step, for dumping */
Drawing snapshot_drawing(const CanonicalAugmentation& aug, const StepSnapshot& snap) {
    Drawing d;
    std::vector<int> local(aug.g.n(), -1);
    for (VertexId v = 0; v < aug.g.n(); ++v) {
        if (!snap.placed[v]) continue;
        local[v] = (int)d.vertices.size();
        d.vertices.push_back({aug.g.names[v], snap.coords[v]});
    }
    for (EdgeId e = 0; e < (EdgeId)snap.polylines.size(); ++e) {
        const auto& pl = snap.polylines[e];
        if (pl.size() < 2) continue;
        Drawing::Edge de;
        de.tail = local[aug.g.edges[e].tail];
        de.head = local[aug.g.edges[e].head];
        de.bends.assign(pl.begin() + 1, pl.end() - 1);
        d.edges.push_back(std::move(de));
    }
    return d;
}

void dump_trace(const CanonicalAugmentation& aug, const ExtendedSlopeSet& ext,
                const std::vector<StepSnapshot>& steps, const std::string& dir,
                bool& invariants_ok) {
    fs::create_directories(dir);
    invariants_ok = true;
    for (const auto& snap : steps) {
        Drawing d = snapshot_drawing(aug, snap);
        char stem[32];
        std::snprintf(stem, sizeof stem, "step_%03d", snap.step);
        nlohmann::ordered_json j;
        j["step"] = snap.step;
        nlohmann::ordered_json path = nlohmann::ordered_json::array();
        for (VertexId v : snap.outer_path) path.push_back(aug.g.names[v]);
        j["outer_path"] = path;
        j["drawing"] = nlohmann::ordered_json::parse(drawing_to_json(d));
        write_file(dir + "/" + stem + ".json", j.dump(2) + "\n");
        write_file(dir + "/" + stem + ".svg", render_svg(d));

        Diagnostics diag = check_invariants(aug, ext, snap);
        if (!diag.ok()) {
            invariants_ok = false;
            std::cerr << "invariant failure: " << diag.first_failure() << "\n";
        }
    }
}

struct DrawJob {
    std::string file;
    std::string out;  /* empty: stdout */
    std::string text; /* produced drawing JSON */
    std::string budget_line;
    int rc = 0;
    std::string error;
};

int cmd_draw(const std::vector<std::string>& files, const std::string& slopes_text,
             int bends, double strict_eps, const std::string& trace_dir,
             const std::string& out, int jobs) {
    SlopeSet s = parse_slopes(slopes_text);
    if (!trace_dir.empty() && files.size() != 1)
        throw input_error("--trace-steps needs exactly one input file");
    if (files.size() > 1 && !out.empty() && !fs::is_directory(out))
        throw input_error("--out must be a directory when drawing several files");

    std::vector<DrawJob> jobs_v(files.size());
    for (size_t i = 0; i < files.size(); ++i) {
        jobs_v[i].file = files[i];
        if (!out.empty()) {
            jobs_v[i].out = files.size() == 1 && !fs::is_directory(out)
                                ? out
                                : (fs::path(out) / (fs::path(files[i]).stem().string() +
                                                    ".drawing.json")).string();
        }
    }

    bool invariants_ok = true;
    auto run_one = [&](DrawJob& job) {
        try {
            PlaneStGraph g = load_graph(job.file);
            DrawOptions opt;
            opt.trace = !trace_dir.empty();
            opt.strict_eps = strict_eps;
            if (bends == 1) {
                /* low-degree graphs can always be re-embedded to suit */
                if (g.max_degree() <= 3) g = reroute_deg3(g);
                OneBendResult r = draw_1bend(g, s, opt);
                job.text = drawing_to_json(r.drawing);
                if (opt.trace)
                    dump_trace(r.aug, r.slopes, r.aug_drawing.steps, trace_dir, invariants_ok);
            } else {
                TwoBendResult r = draw_2bend(g, s, opt);
                char line[128];
                std::snprintf(line, sizeof line, "bends: total=%d m1=%d m2=%d bound=%d",
                              r.budget.total, r.budget.m1, r.budget.m2, r.budget.bound);
                job.budget_line = line;
                job.text = drawing_to_json(r.drawing);
                if (opt.trace)
                    dump_trace(r.aug, r.slopes, r.aug_drawing.steps, trace_dir, invariants_ok);
            }
        } catch (const input_error& e) {
            job.rc = 2;
            job.error = e.what();
        } catch (const std::exception& e) {
            job.rc = 1;
            job.error = e.what();
        }
    };

    if (jobs <= 1 || files.size() == 1) {
        for (auto& j : jobs_v) run_one(j);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back([&] {
                for (size_t i = next++; i < jobs_v.size(); i = next++) run_one(jobs_v[i]);
            });
        for (auto& t : pool) t.join();
    }

    int rc = 0;
    for (auto& j : jobs_v) {
        if (j.rc != 0) {
            std::cerr << j.file << ": " << j.error << "\n";
            rc = std::max(rc, j.rc);
            continue;
        }
        if (!j.budget_line.empty()) std::cout << j.budget_line << "\n";
        if (j.out.empty()) {
            if (jobs_v.size() > 1) std::cout << "== " << j.file << "\n";
            std::cout << j.text;
        } else {
            write_file(j.out, j.text);
        }
    }
    if (!invariants_ok) rc = std::max(rc, 1);
    return rc;
}

int cmd_verify(const std::string& file, const std::string& slopes_text, bool strict,
               double tol) {
    Drawing d = drawing_from_json(read_file(file));
    std::vector<double> allowed;
    DrawingReport r;
    if (!slopes_text.empty()) {
        allowed = parse_slopes(slopes_text).angles;
        r = check(d, &allowed, strict, tol);
    } else {
        r = check(d, nullptr, strict, tol);
    }
    auto line = [&](const char* name, bool pass, const std::string& msg = "") {
        std::cout << (pass ? "ok   " : "FAIL ") << name;
        if (!msg.empty()) std::cout << ": " << msg;
        std::cout << "\n";
    };
    line("finite", r.finite);
    line("planar", r.planar, r.planar_detail);
    line(strict ? "strictly-upward" : "upward", strict ? r.upward_strict : r.upward);
    if (!slopes_text.empty()) line("slopes", r.slope_membership, r.slope_detail);
    std::printf("slopes used: %d distinct\n", (int)r.slopes_used.size());
    std::printf("bends: max/edge=%d total=%d\n", r.max_bends_per_edge, r.total_bends);
    std::printf("angular resolution: %.6f rad (bends: %.6f)\n", r.angular_resolution,
                r.bend_resolution);
    return r.ok(strict) ? 0 : 1;
}

int cmd_bitonic(const std::string& file) {
    PlaneStGraph g = load_graph(file);
    Diagnostics diag = validate(g);
    if (!diag.ok()) throw input_error("invalid graph: " + diag.first_failure());
    auto r = bitonic_order(g);
    if (std::holds_alternative<StOrdering>(r)) {
        const auto& sigma = std::get<StOrdering>(r);
        std::cout << "BITONIC";
        for (VertexId v : sigma.by_rank) std::cout << " " << g.names[v] << ":" << sigma.of(v);
        std::cout << "\n";
        return 0;
    }
    const auto& fc = std::get<ForbiddenConfig>(r);
    std::cout << "NOT-BITONIC apex=" << g.names[fc.u] << " i=" << fc.i << " j=" << fc.j
              << "\n";
    return 1;
}

int cmd_augment(const std::string& file, bool emit_json) {
    PlaneStGraph g = load_graph(file);
    Diagnostics diag = validate(g);
    if (!diag.ok()) throw input_error("invalid graph: " + diag.first_failure());

    BitonicSubdivision sub;
    auto r = bitonic_order(g);
    if (std::holds_alternative<StOrdering>(r)) {
        sub.graph = g;
    } else {
        sub = bitonic_subdivide(g);
        r = bitonic_order(sub.graph);
    }
    CanonicalAugmentation aug = canonical_augment(sub.graph, std::get<StOrdering>(r));
    triangulate(aug);
    Diagnostics cert = verify_upward_canonical(aug);

    if (emit_json) {
        nlohmann::ordered_json j = nlohmann::ordered_json::parse(graph_to_json(aug.g));
        nlohmann::ordered_json vk = nlohmann::ordered_json::object();
        for (VertexId v = 0; v < aug.g.n(); ++v) vk[aug.g.names[v]] = kind_name(aug.g.vkind[v]);
        nlohmann::ordered_json ek = nlohmann::ordered_json::object();
        for (EdgeId e = 0; e < (EdgeId)aug.g.edges.size(); ++e)
            if (aug.g.edges[e].alive) ek["e" + std::to_string(e)] = kind_name(aug.g.edges[e].kind);
        j["vertex_kinds"] = vk;
        j["edge_kinds"] = ek;
        std::cout << j.dump(2) << "\n";
    } else {
        std::printf("augmented: %d vertices, %d edges (input: %d, %d)\n", aug.g.n(), aug.g.m(),
                    aug.orig_vertex_count, aug.orig_edge_count);
        std::printf("subdivided edges: %d\n", (int)sub.splits.size());
        std::printf("dummy slots needed: %d\n", delta_star(aug));
    }
    return print_diagnostics(cert) == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"1- and 2-bend upward planar drawings of plane st-graphs"};
    app.require_subcommand(1);

    std::string file, slopes_text, out, trace_dir, bends_text = "auto", kind;
    bool strict_flag = false, emit_json = false, no_labels = false;
    double strict_eps = 0.0, tol = 1e-6;
    int jobs = 1;
    std::vector<std::string> files;
    int gn = 10, gm = 20, gdelta = 4, gdmax = 9;
    std::uint64_t gseed = 1;

    auto* c_validate = app.add_subcommand("validate", "structural checks on a graph file");
    c_validate->add_option("file", file)->required();

    auto* c_bitonic = app.add_subcommand("bitonic", "bitonic st-ordering or its obstruction");
    c_bitonic->add_option("file", file)->required();

    auto* c_augment = app.add_subcommand("augment", "canonical augmentation of a graph");
    c_augment->add_option("file", file)->required();
    c_augment->add_flag("--emit-json", emit_json, "dump the augmented graph with kinds");

    auto* c_draw = app.add_subcommand("draw", "compute a drawing");
    c_draw->add_option("files", files)->required();
    c_draw->add_option("--slopes", slopes_text, "equispaced:<k> or comma list")->required();
    c_draw->add_option("--bends", bends_text)->check(CLI::IsMember({"1", "2", "auto"}));
    c_draw->add_option("--strict", strict_eps, "tilt horizontals by this slope");
    c_draw->add_option("--trace-steps", trace_dir, "dump one JSON+SVG per step");
    c_draw->add_option("--out", out, "output file (or directory for several inputs)");
    c_draw->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

    auto* c_verify = app.add_subcommand("verify", "geometric report on a drawing file");
    c_verify->add_option("file", file)->required();
    c_verify->add_option("--slopes", slopes_text);
    c_verify->add_flag("--strict", strict_flag, "require strictly increasing y");
    c_verify->add_option("--tol", tol);

    auto* c_gen = app.add_subcommand("gen", "emit a test-fixture graph");
    c_gen->add_option("kind", kind)
        ->required()
        ->check(CLI::IsMember({"fan", "random-st", "nonbitonic-witness", "fig3",
                               "cubic-nonbitonic", "random-nonbitonic"}));
    c_gen->add_option("--delta", gdelta);
    c_gen->add_option("--n", gn);
    c_gen->add_option("--m", gm);
    c_gen->add_option("--seed", gseed);
    c_gen->add_option("--dmax", gdmax);
    c_gen->add_option("--out", out);

    auto* c_render = app.add_subcommand("render", "SVG of a drawing file");
    c_render->add_option("file", file)->required();
    c_render->add_option("--out", out);
    c_render->add_flag("--no-labels", no_labels);

    try {
        app.parse(argc, argv);

        if (c_validate->parsed()) return print_diagnostics(validate(load_graph(file)));
        if (c_bitonic->parsed()) return cmd_bitonic(file);
        if (c_augment->parsed()) return cmd_augment(file, emit_json);
        if (c_draw->parsed()) {
            int bends = bends_text == "1" ? 1 : bends_text == "2" ? 2 : 0;
            return cmd_draw(files, slopes_text, bends, strict_eps, trace_dir, out, jobs);
        }
        if (c_verify->parsed()) return cmd_verify(file, slopes_text, strict_flag, tol);
        if (c_gen->parsed()) {
            PlaneStGraph g;
            if (kind == "fan") g = gen_fan(gdelta);
            else if (kind == "random-st") g = gen_random_st(gn, gm, gseed, gdmax);
            else if (kind == "nonbitonic-witness") g = gen_nonbitonic_witness();
            else if (kind == "fig3") g = gen_fig3();
            else if (kind == "random-nonbitonic") g = gen_random_nonbitonic(gn, gm, gseed, gdmax);
            else g = gen_cubic_nonbitonic(gn, gseed);
            std::string text = graph_to_json(g);
            if (out.empty()) std::cout << text;
            else write_file(out, text);
            return 0;
        }
        if (c_render->parsed()) {
            Drawing d = drawing_from_json(read_file(file));
            SvgOptions so;
            so.labels = !no_labels;
            std::string text = render_svg(d, so);
            if (out.empty()) std::cout << text;
            else write_file(out, text);
            return 0;
        }
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
