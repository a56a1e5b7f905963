#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "snc/column_elimination.hpp"
#include "snc/conjectures.hpp"
#include "snc/digraph.hpp"
#include "snc/enumeration.hpp"
#include "snc/errors.hpp"
#include "snc/farkas.hpp"
#include "snc/io.hpp"
#include "snc/linalg.hpp"

namespace {

// Exit codes: 0 = all requested properties hold, 2 = some conjecture Fails,
// 3 = cross-check violation, 1 = input or usage error. When several apply,
// the highest-priority code wins: 1 > 3 > 2 > 0.
constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitFails = 2;
constexpr int kExitViolation = 3;

int worker_threads_from_env() {
    const char* raw = std::getenv("SNC_THREADS");
    if (raw == nullptr || *raw == '\0') return 1;
    char* end = nullptr;
    const long value = std::strtol(raw, &end, 10);
    if (end == raw || *end != '\0' || value < 1 || value > 256) {
        std::cerr << "warning: ignoring invalid SNC_THREADS='" << raw << "', using 1\n";
        return 1;
    }
    return static_cast<int>(value);
}

struct CheckOptions {
    std::string file;
    std::string conjecture = "all";
    bool cross_check = false;
};

int run_check(const CheckOptions& opt) {
    const snc::Digraph d = snc::read_digraph_file(opt.file);
    if (opt.cross_check) {
        const snc::CrossCheckReport rep = snc::consistency_check(d, opt.file);
        std::cout << snc::cross_check_json_lines(rep);
        bool any_fails = false;
        for (const snc::Verdict& v : rep.verdicts) any_fails = any_fails || !v.satisfied();
        if (!rep.consistent()) return kExitViolation;
        return any_fails ? kExitFails : kExitOk;
    }

    std::vector<snc::Verdict> verdicts;
    if (opt.conjecture == "all" || opt.conjecture == "c1") verdicts.push_back(snc::check_c1(d));
    if (opt.conjecture == "all" || opt.conjecture == "c2") verdicts.push_back(snc::check_c2(d));
    if (opt.conjecture == "all" || opt.conjecture == "c3") verdicts.push_back(snc::check_c3(d));
    if (opt.conjecture == "all" || opt.conjecture == "c4") verdicts.push_back(snc::check_c4(d));
    if (opt.conjecture == "all" || opt.conjecture == "c5") verdicts.push_back(snc::check_c5(d));
    if (opt.conjecture == "all" || opt.conjecture == "c6") verdicts.push_back(snc::check_c6(d));
    bool any_fails = false;
    for (const snc::Verdict& v : verdicts) {
        std::cout << snc::verdict_json(v, opt.file) << "\n";
        any_fails = any_fails || !v.satisfied();
    }
    return any_fails ? kExitFails : kExitOk;
}

struct MatrixOptions {
    std::string file;
    bool inverse = false;
};

int run_matrix(const MatrixOptions& opt) {
    const snc::RatMatrix s = snc::second_neighborhood_matrix(snc::read_digraph_file(opt.file));
    if (!opt.inverse) {
        std::cout << snc::write_matrix(s);
        return kExitOk;
    }
    const snc::InvertOutcome inv = snc::invert(s);
    if (inv.singular()) {
        std::cout << "SINGULAR\n" << snc::write_vector(*inv.null_vector);
    } else {
        std::cout << snc::write_matrix(*inv.inverse);
    }
    return kExitOk;
}

struct BlowupOptions {
    std::string file;
    std::vector<int> weights;
};

int run_blowup(const BlowupOptions& opt) {
    const snc::Digraph d = snc::read_digraph_file(opt.file);
    const snc::BlowUpResult r = snc::blow_up(d, opt.weights);
    std::string out = snc::write_digraph(r.digraph);

    const int n = d.vertex_count();
    const int big_n = r.digraph.vertex_count();
    // Class map: classes are contiguous index ranges in source-vertex order.
    std::vector<int> first(n + 1, 0), last(n + 1, 0);
    for (int w = 1; w <= big_n; ++w) {
        const int i = r.class_of[w];
        if (first[i] == 0) first[i] = w;
        last[i] = w;
    }
    for (int i = 1; i <= n; ++i)
        out += "# class " + std::to_string(i) + ": " + std::to_string(first[i]) + ".." +
               std::to_string(last[i]) + "\n";

    // The blow-up identity: (S_{D*} * 1) is constant on each class V_i and
    // equals (S_D * u)_i there.
    snc::RatVector u(n);
    for (int i = 0; i < n; ++i) u[i] = snc::Rational(opt.weights[static_cast<std::size_t>(i)]);
    const snc::RatVector lhs =
        snc::mat_vec(snc::second_neighborhood_matrix(r.digraph), snc::ones_vector(big_n));
    const snc::RatVector rhs = snc::mat_vec(snc::second_neighborhood_matrix(d), u);
    bool all_ok = true;
    for (int i = 1; i <= n; ++i) {
        bool ok = true;
        for (int w = first[i]; w <= last[i]; ++w) ok = ok && lhs[w - 1] == rhs[i - 1];
        all_ok = all_ok && ok;
        out += "# identity class " + std::to_string(i) + ": " + rhs[i - 1].str() + " " +
               (ok ? "PASS" : "FAIL") + "\n";
    }
    out += std::string("# identity-check ") + (all_ok ? "PASS" : "FAIL") + "\n";
    std::cout << out;
    if (!all_ok) {
        std::cerr << "error: blow-up identity failed (internal defect)\n";
        return kExitError;
    }
    return kExitOk;
}

struct SweepOptions {
    int n = 1;
    std::string mode = "all";
    std::uint64_t seed = 0;
    std::uint64_t samples = 100;
    std::string p_forward = "1/3";
    std::string p_backward = "1/3";
    bool dedup = false;
    bool prune = false;
    std::string resume;
    int max_n = 0;
};

int run_sweep(const SweepOptions& opt) {
    snc::EnumSpec spec;
    spec.n = opt.n;
    spec.mode = *snc::enum_mode_from_name(opt.mode);
    spec.seed = opt.seed;
    spec.sample_count = opt.samples;
    spec.p_forward = snc::Rational::from_string(opt.p_forward);
    spec.p_backward = snc::Rational::from_string(opt.p_backward);
    spec.dedup = opt.dedup;
    spec.prune = opt.prune;
    if (opt.max_n > 0) {
        spec.cap_override = opt.max_n;
        std::cerr << "warning: instance-count cap overridden to n <= " << opt.max_n
                  << "; large sweeps grow exponentially\n";
    }
    const int threads = worker_threads_from_env();

    std::uint64_t last_reported = 0;
    auto progress = [&last_reported](std::uint64_t done, std::uint64_t total) {
        if (done == total || done - last_reported >= 4096) {
            std::cerr << "progress " << done << "/" << total << "\n";
            last_reported = done;
        }
    };
    const snc::SearchReport rep = snc::sweep(spec, threads, opt.resume, progress);
    std::cout << snc::search_report_json(rep) << "\n";
    std::cerr << "wall-time " << rep.wall_seconds << "s, threads " << threads << "\n";
    if (rep.violation_count != 0) return kExitViolation;
    return rep.clean() ? kExitOk : kExitFails;
}

struct FarkasOptions {
    std::string matrix_path;
    std::string rhs_path;
};

int run_farkas(const FarkasOptions& opt) {
    snc::StandardSystem sys;
    sys.m = snc::read_matrix_file(opt.matrix_path);
    sys.b = snc::matrix_to_vector(snc::read_matrix_file(opt.rhs_path));
    const snc::FeasibilityOutcome out = snc::solve_standard(sys);
    if (out.feasible()) {
        std::cout << "SOLUTION\n" << snc::write_vector(*out.solution);
    } else {
        std::cout << "CERTIFICATE\n" << snc::write_vector(*out.certificate);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"second-neighborhood conjecture toolkit"};
    app.require_subcommand(1);

    CheckOptions check_opt;
    CLI::App* check = app.add_subcommand("check", "run conjecture checkers on a digraph file");
    check->add_option("file", check_opt.file, "digraph file")->required();
    check->add_option("--conjecture", check_opt.conjecture, "which conjecture to check")
        ->check(CLI::IsMember({"c1", "c2", "c3", "c4", "c5", "c6", "all"}));
    check->add_flag("--cross-check", check_opt.cross_check,
                    "run the full equivalence harness on D and reverse(D)");

    MatrixOptions matrix_opt;
    CLI::App* matrix = app.add_subcommand("matrix", "print the second-neighborhood matrix");
    matrix->add_option("file", matrix_opt.file, "digraph file")->required();
    matrix->add_flag("--inverse", matrix_opt.inverse,
                     "print the inverse instead, or SINGULAR plus a null vector");

    BlowupOptions blowup_opt;
    CLI::App* blowup = app.add_subcommand("blowup", "blow up vertices into independent sets");
    blowup->add_option("file", blowup_opt.file, "digraph file")->required();
    blowup
        ->add_option("--weights", blowup_opt.weights,
                     "comma-separated class sizes, one per vertex")
        ->required()
        ->delimiter(',');

    SweepOptions sweep_opt;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "run consistency checks over instance streams");
    sweep_cmd->add_option("--n", sweep_opt.n, "vertex count")->required();
    sweep_cmd->add_option("--mode", sweep_opt.mode, "instance stream")
        ->check(CLI::IsMember({"all", "tournaments", "random"}));
    sweep_cmd->add_option("--seed", sweep_opt.seed, "base seed (random mode)");
    sweep_cmd->add_option("--samples", sweep_opt.samples, "sample count (random mode)");
    sweep_cmd->add_option("--p-forward", sweep_opt.p_forward,
                          "low->high arc probability (random mode)");
    sweep_cmd->add_option("--p-backward", sweep_opt.p_backward,
                          "high->low arc probability (random mode)");
    sweep_cmd->add_flag("--dedup", sweep_opt.dedup, "keep only canonical representatives");
    sweep_cmd->add_flag("--prune", sweep_opt.prune, "skip instances rejected by the degree bound");
    sweep_cmd->add_option("--resume", sweep_opt.resume, "checkpoint file to resume from/write to");
    sweep_cmd->add_option("--max-n", sweep_opt.max_n, "override the built-in size cap (warning)");

    FarkasOptions farkas_opt;
    CLI::App* farkas = app.add_subcommand("farkas", "solve M x = b, x >= 0 or certify infeasible");
    farkas->add_option("--matrix", farkas_opt.matrix_path, "matrix file")->required();
    farkas->add_option("--rhs", farkas_opt.rhs_path, "right-hand side (single-column matrix file)")
        ->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return run_check(check_opt);
        if (matrix->parsed()) return run_matrix(matrix_opt);
        if (blowup->parsed()) return run_blowup(blowup_opt);
        if (sweep_cmd->parsed()) return run_sweep(sweep_opt);
        if (farkas->parsed()) return run_farkas(farkas_opt);
    } catch (const snc::ParseError& e) {
        std::cerr << "error: " << e.what() << " (line " << e.line << ", column " << e.column
                  << ")\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
