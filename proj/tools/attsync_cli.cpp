// Command-line front end for the attitude synchronization simulator.
//
//   attsync run <config>      full pipeline: simulate, export CSV/summary/SVG
//   attsync check <config>    connectivity and initial-condition report only
//   attsync goldens           run the bundled Case 1 / Case 2 / negative control
//
// Exit codes: 0 success, 1 validation error, 2 integration failure,
// 3 acceptance failure in `goldens`.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "attsync/attsync.hpp"

namespace fs = std::filesystem;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw attsync::validation_error("cannot read config file '" + path + "'");
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

struct Options {
    std::string out_dir;
    bool svg = false;
    bool quiet = false;
};

attsync::SimConfig load(const std::string& text, const Options& opt) {
    attsync::SimConfig cfg = attsync::parse_config(text);
    if (!opt.out_dir.empty()) {
        fs::create_directories(opt.out_dir);
        cfg.output_path =
            (fs::path(opt.out_dir) / fs::path(cfg.output_path).filename()).string();
    }
    if (opt.svg) cfg.emit_svg = true;
    return cfg;
}

int cmd_run(const std::string& path, const Options& opt) {
    const attsync::SimConfig cfg = load(read_file(path), opt);
    if (!attsync::is_quasi_strongly_connected(cfg.graph()) && !opt.quiet)
        std::cerr << "warning: graph is not quasi-strongly connected; "
                     "synchronization will not be reached\n";
    const auto result = attsync::run(cfg, fs::path(path).stem().string());
    if (!opt.quiet) std::cout << result.summary.to_text();
    return 0;
}

int cmd_check(const std::string& path, const Options& opt) {
    const attsync::SimConfig cfg = attsync::parse_config(read_file(path));
    const auto g = cfg.graph();
    const auto ra = attsync::root_analysis(g);
    std::ostringstream os;
    os << "nodes: " << g.size() << '\n'
       << "strongly_connected: " << (attsync::is_strongly_connected(g) ? "true" : "false")
       << '\n'
       << "quasi_strongly_connected: "
       << (attsync::is_quasi_strongly_connected(g) ? "true" : "false") << '\n';
    os << "roots:";
    for (int r : ra.roots) os << ' ' << r;
    os << "\nnon_roots:";
    for (int r : ra.non_roots) os << ' ' << r;
    os << '\n';
    if (!ra.roots.empty()) {
        std::vector<attsync::UnitQuaternion> canon;
        for (const auto& q : cfg.initial_attitudes())
            canon.push_back(attsync::canonicalize(q));
        const auto cls = attsync::classify_initial(canon, ra);
        os << "initial_condition: " << attsync::to_string(cls.tag) << ' '
           << attsync::to_string(cls.part) << '\n';
        const auto tr = attsync::find_transform(canon, ra);
        os << "transform_v: " << tr.v.eps << ' ' << tr.v.vec.x1 << ' ' << tr.v.vec.x2 << ' '
           << tr.v.vec.x3 << '\n';
    } else {
        os << "initial_condition: unclassified (no roots)\n";
    }
    if (!opt.quiet) std::cout << os.str();
    return 0;
}

int cmd_goldens(const Options& opt) {
    struct GoldenCase {
        const char* name;
        const std::string* config;
        bool expect_converged;
    };
    const GoldenCase goldens[] = {
        {"case1", &attsync::cases::case1, true},
        {"case2", &attsync::cases::case2, true},
        {"case2_broken", &attsync::cases::case2_broken, false},
    };
    bool all_ok = true;
    for (const GoldenCase& gc : goldens) {
        const attsync::SimConfig cfg = load(*gc.config, opt);
        const auto result = attsync::run(cfg, gc.name);
        const bool converged = result.summary.final_disagreement < 1e-3;
        bool ok = false;
        if (gc.expect_converged)
            ok = converged && result.summary.monotone_pass &&
                 result.summary.final_eps_star > 0.0;
        else
            ok = !result.summary.quasi_strongly_connected &&
                 result.summary.final_disagreement > 0.1;
        all_ok = all_ok && ok;
        if (!opt.quiet)
            std::cout << (ok ? "PASS" : "FAIL") << ' ' << gc.name
                      << " (final disagreement = " << result.summary.final_disagreement
                      << ")\n";
    }
    return all_ok ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Attitude synchronization simulator for networked rigid bodies"};
    app.require_subcommand(1);

    Options opt;
    std::string run_config, check_config;
    auto* sub_run = app.add_subcommand("run", "Simulate a config and export the trace");
    sub_run->add_option("config", run_config, "Config file")->required();
    auto* sub_check =
        app.add_subcommand("check", "Report connectivity and initial-condition class");
    sub_check->add_option("config", check_config, "Config file")->required();
    auto* sub_goldens = app.add_subcommand("goldens", "Run the bundled golden cases");
    for (auto* sub : {sub_run, sub_goldens}) {
        sub->add_option("--out", opt.out_dir, "Directory for output files");
        sub->add_flag("--svg", opt.svg, "Also emit SVG charts");
    }
    for (auto* sub : {sub_run, sub_check, sub_goldens})
        sub->add_flag("--quiet", opt.quiet, "Suppress report output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;  // usage problems count as validation errors
    }

    try {
        if (sub_run->parsed()) return cmd_run(run_config, opt);
        if (sub_check->parsed()) return cmd_check(check_config, opt);
        if (sub_goldens->parsed()) return cmd_goldens(opt);
    } catch (const attsync::integration_error& e) {
        std::cerr << "integration-error: " << e.what() << '\n';
        return 2;
    } catch (const attsync::validation_error& e) {
        std::cerr << "validation-error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
