// Command-line front end. Talks to the core exclusively through the C API.
#include "qgj/qgj.h"

#include <CLI11.hpp>

#include <cstdio>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

int fail(qgj_status status) {
    std::fprintf(stderr, "error: %s\n", qgj_last_error());
    switch (status) {
    case QGJ_ERR_DOMAIN:
        return kExitDomain;
    default:
        return kExitUsage;
    }
}

int emit(char* report) {
    std::fputs(report, stdout);
    qgj_string_free(report);
    return kExitOk;
}

struct SystemHandle {
    qgj_system* ptr = nullptr;
    ~SystemHandle() { qgj_system_free(ptr); }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gauss-Jordan elimination with simulated Grover pivot search, "
                 "a Fourier-basis quantum adder, and an operation-count audit"};
    app.require_subcommand(1);

    std::string format = "text";
    unsigned long long seed = 0;

    // rref
    auto* rref_cmd = app.add_subcommand("rref", "Reduce an augmented system file to RREF");
    std::string rref_file, rref_pivot = "classical";
    bool rref_ledger = false;
    rref_cmd->add_option("file", rref_file, "matrix file")->required();
    rref_cmd->add_option("--pivot", rref_pivot, "pivot strategy: classical|grover");
    rref_cmd->add_option("--seed", seed, "random seed");
    rref_cmd->add_flag("--ledger", rref_ledger, "print operation counters");
    rref_cmd->add_option("--format", format, "text|json");

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "Solve an augmented system file");
    std::string solve_file;
    solve_cmd->add_option("file", solve_file, "matrix file")->required();
    solve_cmd->add_option("--format", format, "text|json");

    // grover
    auto* grover_cmd = app.add_subcommand("grover", "Run Grover search over marked indices");
    int grover_n = 0;
    std::vector<unsigned long long> grover_marked;
    long long grover_iters = -1;
    grover_cmd->add_option("--n", grover_n, "qubit count")->required();
    grover_cmd->add_option("--marked", grover_marked, "marked basis indices")
        ->delimiter(',');
    grover_cmd->add_option("--seed", seed, "random seed");
    grover_cmd->add_option("--iters", grover_iters, "fixed iteration count");
    grover_cmd->add_option("--format", format, "text|json");

    // deutsch
    auto* deutsch_cmd = app.add_subcommand("deutsch", "Classify a 1-bit truth table");
    std::vector<int> deutsch_table;
    deutsch_cmd->add_option("--table", deutsch_table, "truth table b0,b1")
        ->delimiter(',')
        ->expected(2)
        ->required();
    deutsch_cmd->add_option("--format", format, "text|json");

    // add
    auto* add_cmd = app.add_subcommand("add", "Add two integers with the Fourier-basis adder");
    int add_n = 0;
    unsigned long long add_a = 0, add_b = 0;
    bool add_trace = false;
    add_cmd->add_option("--n", add_n, "qubit count")->required();
    add_cmd->add_option("a", add_a, "first summand")->required();
    add_cmd->add_option("b", add_b, "second summand")->required();
    add_cmd->add_flag("--trace", add_trace, "print per-stage phase words");
    add_cmd->add_option("--format", format, "text|json");

    // cost
    auto* cost_cmd = app.add_subcommand("cost", "Tabulate the operation-count formulas");
    int cost_max_n = 0;
    bool cost_no_sim = false;
    cost_cmd->add_option("--max-n", cost_max_n, "largest dimension")->required();
    cost_cmd->add_flag("--no-sim", cost_no_sim, "skip simulated elimination runs");
    cost_cmd->add_option("--seed", seed, "random seed");
    cost_cmd->add_option("--format", format, "text|csv|json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    char* report = nullptr;
    qgj_status status = QGJ_OK;

    if (*rref_cmd) {
        SystemHandle system;
        status = qgj_system_load(rref_file.c_str(), &system.ptr);
        if (status != QGJ_OK)
            return fail(status);
        status = qgj_run_rref(system.ptr, rref_pivot.c_str(), seed, rref_ledger ? 1 : 0,
                              format.c_str(), &report);
        return status == QGJ_OK ? emit(report) : fail(status);
    }
    if (*solve_cmd) {
        SystemHandle system;
        status = qgj_system_load(solve_file.c_str(), &system.ptr);
        if (status != QGJ_OK)
            return fail(status);
        int solvable = 1;
        status = qgj_run_solve(system.ptr, format.c_str(), &report, &solvable);
        if (status != QGJ_OK)
            return fail(status);
        emit(report);
        return solvable ? kExitOk : kExitDomain;
    }
    if (*grover_cmd) {
        status = qgj_run_grover(grover_n, grover_marked.data(), grover_marked.size(), seed,
                                grover_iters, format.c_str(), &report);
        return status == QGJ_OK ? emit(report) : fail(status);
    }
    if (*deutsch_cmd) {
        status = qgj_run_deutsch(deutsch_table[0], deutsch_table[1], format.c_str(), &report);
        return status == QGJ_OK ? emit(report) : fail(status);
    }
    if (*add_cmd) {
        status = qgj_run_add(add_n, add_a, add_b, add_trace ? 1 : 0, format.c_str(), &report);
        return status == QGJ_OK ? emit(report) : fail(status);
    }
    if (*cost_cmd) {
        status = qgj_run_cost(cost_max_n, cost_no_sim ? 0 : 1, seed, format.c_str(), &report);
        return status == QGJ_OK ? emit(report) : fail(status);
    }
    return kExitUsage;
}
