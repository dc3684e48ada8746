#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "gabdyn/analysis.hpp"
#include "gabdyn/config.hpp"
#include "gabdyn/diagram.hpp"
#include "gabdyn/errors.hpp"
#include "gabdyn/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitInvalidInput = 2;

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw gabdyn::input_error("cannot write to " + out_path);
    out << text;
}

int run_analyze(const std::string& config_path, bool as_json) {
    const gabdyn::JobConfig cfg = gabdyn::JobConfig::load(config_path);
    const gabdyn::Analysis a = gabdyn::analyze(cfg.triple, cfg.group());
    std::cout << (as_json ? gabdyn::render_json(a) : gabdyn::render_text(a));
    return kExitOk;
}

int run_diagram(const std::string& config_path, const std::string& stage, const std::string& format,
                const std::string& out_path) {
    const gabdyn::JobConfig cfg = gabdyn::JobConfig::load(config_path);
    const gabdyn::MilnorLattice lat = gabdyn::build_milnor_lattice(cfg.triple);

    gabdyn::DynkinGraph graph;
    if (stage == "milnor") {
        graph = gabdyn::to_graph(*lat.space);
    } else if (stage == "milnor-quotient") {
        graph = gabdyn::to_graph(*gabdyn::milnor_quotient_space(lat));
    } else if (stage == "orbit") {
        const gabdyn::OrbitSpace os = gabdyn::build_orbit_space(lat, cfg.group());
        graph = gabdyn::to_graph(*os.space, {gabdyn::BasisLabel::delta0_bar()});
    } else if (stage == "resolution") {
        const gabdyn::ZModel zm = gabdyn::build_z_model(lat, cfg.group());
        const gabdyn::HatBasis hb = gabdyn::build_hat_basis(zm);
        graph = gabdyn::to_graph(*gabdyn::hat_space(zm, hb), {gabdyn::BasisLabel::delta0_bar()});
    } else {
        throw gabdyn::input_error("unknown stage '" + stage + "'");
    }

    write_output(format == "dot" ? gabdyn::emit_dot(graph) : gabdyn::emit_json(graph), out_path);
    return kExitOk;
}

int report_outcome(const gabdyn::Report& rep) {
    for (const gabdyn::CheckResult& c : rep.failures()) {
        std::cout << "FAIL " << c.name;
        if (!c.detail.empty()) std::cout << ": " << c.detail;
        std::cout << "\n";
    }
    std::cout << rep.checks.size() - rep.failure_count() << "/" << rep.checks.size() << " checks passed\n";
    return rep.ok() ? kExitOk : kExitVerificationFailure;
}

int run_verify(const std::string& config_path, bool corrupt) {
    const gabdyn::JobConfig cfg = gabdyn::JobConfig::load(config_path);
    gabdyn::MilnorLattice lat = gabdyn::build_milnor_lattice(cfg.triple);
    if (corrupt) lat = gabdyn::corrupt_gram(lat);
    const gabdyn::SymmetryGroup G = cfg.group();
    const gabdyn::Report rep = gabdyn::verify_case(lat, G);

    // Informational only (conjectural integral structure), never pass/fail.
    try {
        const gabdyn::ZModel zm = gabdyn::build_z_model(lat, G);
        const gabdyn::SpacePtr hat = gabdyn::hat_space(zm, gabdyn::build_hat_basis(zm));
        std::cout << "note: Gram of hat basis with hdelta_0 is "
                  << (hat->gram().is_integral() ? "integral" : "not integral") << " over Z\n";
    } catch (const std::exception&) {
        std::cout << "note: hat basis Gram unavailable for this input\n";
    }
    return report_outcome(rep);
}

int run_selftest(long order_bound) {
    const gabdyn::Report rep = gabdyn::selftest(order_bound);
    return report_outcome(rep);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gabrielov numbers and Coxeter-Dynkin diagrams of cusp singularities with finite abelian symmetry"};
    app.require_subcommand(1);

    std::string config_path;
    bool as_json = false;
    CLI::App* analyze_cmd =
        app.add_subcommand("analyze", "Group statistics, Gabrielov numbers and dimension formulas");
    analyze_cmd->add_option("config", config_path, "JSON config file")->required();
    analyze_cmd->add_flag("--json", as_json, "emit JSON instead of text");

    std::string stage;
    std::string format = "dot";
    std::string out_path;
    CLI::App* diagram_cmd = app.add_subcommand("diagram", "Emit a Coxeter-Dynkin diagram");
    diagram_cmd->add_option("config", config_path, "JSON config file")->required();
    diagram_cmd->add_option("--stage", stage, "milnor | milnor-quotient | orbit | resolution")
        ->required()
        ->check(CLI::IsMember({"milnor", "milnor-quotient", "orbit", "resolution"}));
    diagram_cmd->add_option("--format", format, "dot | json")->check(CLI::IsMember({"dot", "json"}));
    diagram_cmd->add_option("-o,--output", out_path, "output file (default: stdout)");

    bool corrupt = false;
    CLI::App* verify_cmd = app.add_subcommand("verify", "Run every verification for the configured case");
    verify_cmd->add_option("config", config_path, "JSON config file")->required();
    verify_cmd->add_flag("--corrupt", corrupt,
                         "test hook: corrupt one Gram entry first (verification must fail)");

    long order_bound = 36;
    CLI::App* selftest_cmd =
        app.add_subcommand("selftest", "Verify all catalog triples over all subgroups up to a bound");
    selftest_cmd->add_option("--order-bound", order_bound, "maximum subgroup order (default 36)")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalidInput;
    }

    try {
        if (app.got_subcommand(analyze_cmd)) return run_analyze(config_path, as_json);
        if (app.got_subcommand(diagram_cmd)) return run_diagram(config_path, stage, format, out_path);
        if (app.got_subcommand(verify_cmd)) return run_verify(config_path, corrupt);
        return run_selftest(order_bound);
    } catch (const gabdyn::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const gabdyn::verification_error& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return kExitVerificationFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFailure;
    }
}
