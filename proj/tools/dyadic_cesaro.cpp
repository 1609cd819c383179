// Verification harness for Walsh summability experiments. Every subcommand
// runs one experiment deterministically and emits a JSON or CSV report to
// stdout or --out. Exit status: 0 verdict pass, 2 verdict fail, 1 bad
// parameters or I/O.

#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "dyadic/errors.hpp"
#include "dyadic/experiments.hpp"
#include "dyadic/phi.hpp"
#include "dyadic/report.hpp"

namespace {

struct OutputOptions {
    std::string format = "json";
    std::string out;
};

void add_output_options(CLI::App* cmd, OutputOptions& options) {
    cmd->add_option("--format", options.format, "Report format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", options.out, "Write the report to this path (default stdout)");
}

int finish(const dyadic::ExperimentReport& report, const OutputOptions& options) {
    dyadic::emit_to_path(report, dyadic::parse_format(options.format), options.out);
    return report.pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Walsh summability verification harness"};
    app.require_subcommand(1);

    dyadic::KernelsParams kernels;
    OutputOptions kernels_out;
    CLI::App* cmd_kernels =
        app.add_subcommand("kernels", "Closed-form kernel checks and kernel majorization scan");
    cmd_kernels->add_option("--alpha", kernels.alpha, "Cesaro order in (0, 1]");
    cmd_kernels->add_option("--resolution", kernels.resolution, "Resolution M");
    cmd_kernels->add_option("--nmax", kernels.n_max, "Majorization scan upper order");
    add_output_options(cmd_kernels, kernels_out);

    dyadic::L1NormsParams l1norms;
    OutputOptions l1norms_out;
    CLI::App* cmd_l1norms =
        app.add_subcommand("l1norms", "L1 norm scan of the (C, alpha) kernels");
    cmd_l1norms->add_option("--alpha", l1norms.alpha, "Cesaro order in (0, 1]");
    cmd_l1norms->add_option("--resolution", l1norms.resolution, "Resolution M");
    cmd_l1norms->add_option("--nmax", l1norms.n_max, "Scan upper order");
    cmd_l1norms->add_option("--tail-ratio", l1norms.tail_ratio_limit,
                            "Bounded-tail verdict threshold");
    add_output_options(cmd_l1norms, l1norms_out);

    dyadic::CosetBoundsParams coset;
    OutputOptions coset_out;
    CLI::App* cmd_coset = app.add_subcommand(
        "coset-bounds", "Translated-kernel integrals over I_M against per-coset bound shapes");
    cmd_coset->add_option("--alpha", coset.alpha, "Cesaro order in (0, 1]");
    cmd_coset->add_option("--resolution", coset.resolution, "Partition resolution M");
    cmd_coset->add_option("--working-offset", coset.working_offset,
                          "Working resolution is M plus this offset");
    cmd_coset->add_option("--probes", coset.probe_count, "Number of probe orders above 2^M");
    add_output_options(cmd_coset, coset_out);

    dyadic::AtomBoundsParams atoms;
    OutputOptions atoms_out;
    CLI::App* cmd_atoms = app.add_subcommand(
        "atom-bounds", "Random-atom pointwise bounds and weighted maximal integrals");
    cmd_atoms->add_option("--alpha", atoms.alpha, "Cesaro order in (0, 1]");
    cmd_atoms->add_option("--resolution", atoms.resolution, "Atom support rank M");
    cmd_atoms->add_option("--nmax", atoms.n_max, "Upper order of the sweep, above 2^M");
    cmd_atoms->add_option("--seeds", atoms.seeds, "Ensemble size");
    cmd_atoms->add_option("--seed", atoms.seed_base, "First seed of the ensemble");
    cmd_atoms->add_option("--work-resolution", atoms.work_resolution,
                          "Working resolution (0 derives it from nmax)");
    add_output_options(cmd_atoms, atoms_out);

    dyadic::CounterexampleParams counter;
    OutputOptions counter_out;
    std::string phi_text = "log-power:1.0";
    CLI::App* cmd_counter = app.add_subcommand(
        "counterexample", "Dirichlet-difference divergence family and band lower bounds");
    cmd_counter->add_option("--alpha", counter.alpha, "Cesaro order in (0, 1]");
    cmd_counter->add_option("--nk", counter.nk_list, "Family indices")->delimiter(',');
    cmd_counter->add_option("--phi", phi_text,
                            "Weight schedule: log-power:<beta>, log-over-loglog, table:v1,v2,...");
    add_output_options(cmd_counter, counter_out);

    dyadic::StrongSumParams strong;
    OutputOptions strong_out;
    CLI::App* cmd_strong = app.add_subcommand(
        "strongsum", "Logarithmic strong sums of (C, alpha) means over atom ensembles");
    cmd_strong->add_option("--alpha", strong.alpha, "Cesaro order in (0, 1]");
    cmd_strong->add_option("--mlist", strong.resolutions, "Atom support ranks")->delimiter(',');
    cmd_strong->add_option("--nmax", strong.n_max, "Strong sum upper order");
    cmd_strong->add_option("--seeds", strong.seeds, "Ensemble size per rank");
    cmd_strong->add_option("--seed", strong.seed_base, "First seed of the ensemble");
    add_output_options(cmd_strong, strong_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (cmd_kernels->parsed()) return finish(dyadic::run_kernels(kernels), kernels_out);
        if (cmd_l1norms->parsed()) return finish(dyadic::run_l1norms(l1norms), l1norms_out);
        if (cmd_coset->parsed()) return finish(dyadic::run_coset_bounds(coset), coset_out);
        if (cmd_atoms->parsed()) return finish(dyadic::run_atom_bounds(atoms), atoms_out);
        if (cmd_counter->parsed()) {
            counter.phi = dyadic::PhiSchedule::parse(phi_text, counter.alpha);
            return finish(dyadic::run_counterexample(counter), counter_out);
        }
        if (cmd_strong->parsed()) return finish(dyadic::run_strong_sum(strong), strong_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
