// Batch driver for the verification suites: named suites, parameter sweeps,
// expression checks, and report emission (json / csv / text).
#include <CLI11.hpp>

#include <cstdlib>
#include <future>
#include <iostream>
#include <vector>

#include "sdirac/report.hpp"

using namespace sdirac;

namespace {

struct CommonArgs {
    int m = 3, n = 1;
    int k = -1, k_from = -1, k_to = -1;
    int deg = -1, spin_cut_flag = -1;
    std::string chirality;
    std::string out, format = "json", manifest_path;

    int deg_or(int fallback) const { return deg < 0 ? fallback : deg; }
    int cut_or(int fallback) const { return spin_cut_flag < 0 ? fallback : spin_cut_flag; }
};

std::optional<int> spin_cut_of(const CommonArgs& a) {
    if (a.spin_cut_flag < 0) return std::nullopt;
    return a.spin_cut_flag;
}

std::optional<int> chirality_of(const CommonArgs& a) {
    if (a.chirality.empty()) return std::nullopt;
    if (a.chirality == "+" || a.chirality == "even") return 0;
    if (a.chirality == "-" || a.chirality == "odd") return 1;
    throw CLI::ValidationError("--chirality must be + or -");
}

int worker_count() {
    if (const char* env = std::getenv("SDIRAC_WORKERS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 1;
}

std::vector<int> degree_cells(const CommonArgs& a, int fallback) {
    if (a.k >= 0) return {a.k};
    if (a.k_from >= 0 && a.k_to >= a.k_from) {
        std::vector<int> cells;
        for (int k = a.k_from; k <= a.k_to; ++k) cells.push_back(k);
        return cells;
    }
    return {fallback};
}

// Dispatches one suite runner per degree cell to a bounded worker pool and
// merges the fragments in order; assembly stays single-threaded.
SuiteReport sweep(const SpaceConfig& cfg, const CommonArgs& args, const std::vector<int>& cells,
                  const std::function<SuiteReport(int)>& cell_runner) {
    std::unique_ptr<Manifest> manifest;
    if (!args.manifest_path.empty()) manifest = std::make_unique<Manifest>(args.manifest_path);
    int q_for_manifest = args.spin_cut_flag;

    std::vector<std::optional<SuiteReport>> slots(cells.size());
    std::vector<int> todo;
    SuiteReport merged;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (manifest && manifest->completed(cfg.m, cfg.n, cells[i], q_for_manifest)) {
            SuiteReport skip;
            skip.append(CheckResult::skipped("k" + std::to_string(cells[i]), "sweep cell",
                                             "already completed per manifest"));
            slots[i] = std::move(skip);
        } else {
            todo.push_back(static_cast<int>(i));
        }
    }

    const int workers = worker_count();
    std::size_t next = 0;
    while (next < todo.size()) {
        std::vector<std::pair<int, std::future<SuiteReport>>> batch;
        for (int w = 0; w < workers && next < todo.size(); ++w, ++next) {
            int idx = todo[next];
            batch.emplace_back(idx, std::async(std::launch::async, cell_runner, cells[idx]));
        }
        for (auto& [idx, fut] : batch) slots[idx] = fut.get();
    }

    bool first = true;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (!slots[i]) continue;
        if (first && !slots[i]->suite.empty()) {
            merged.suite = slots[i]->suite;
            merged.params = slots[i]->params;
            if (cells.size() > 1) {
                merged.params.erase("k");
                merged.params["k_from"] = cells.front();
                merged.params["k_to"] = cells.back();
            }
            first = false;
        }
        merged.merge(*slots[i]);
        if (manifest && !slots[i]->checks.empty() && !slots[i]->checks.front().failed())
            manifest->mark(cfg.m, cfg.n, cells[i], q_for_manifest);
    }
    if (manifest) manifest->save();
    return merged;
}

int emit(const SuiteReport& rep, const CommonArgs& args) {
    if (!args.out.empty()) {
        write_report_file(rep, args.out, args.format);
        std::cout << rep.render("text");
    } else {
        std::cout << rep.render(args.format);
    }
    return rep.exit_code();
}

void add_common(CLI::App* cmd, CommonArgs& args, bool with_k = true) {
    cmd->add_option("--m", args.m, "bosonic dimension");
    cmd->add_option("--n", args.n, "half the fermionic dimension");
    if (with_k) {
        cmd->add_option("--k", args.k, "polynomial degree");
        cmd->add_option("--k-from", args.k_from, "sweep start degree");
        cmd->add_option("--k-to", args.k_to, "sweep end degree");
    }
    cmd->add_option("--deg", args.deg, "polynomial cut for operator comparisons");
    cmd->add_option("--spin-cut", args.spin_cut_flag, "t-degree cut of the spinor factor");
    cmd->add_option("--out", args.out, "report file path (written atomically)");
    cmd->add_option("--format", args.format, "json | csv | text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--manifest", args.manifest_path, "resumable sweep manifest file");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification engine for the graded Dirac operator"};
    app.require_subcommand(1);

    CommonArgs args;
    std::string equation;
    int k_max = 6, d_cut = 2, q_cut = 2;
    bool no_brackets = false;

    auto* osp12 = app.add_subcommand("verify-osp12", "the osp(1|2) relation suite");
    add_common(osp12, args, false);
    auto* invariance = app.add_subcommand("verify-invariance", "symmetry invariance suite");
    add_common(invariance, args, false);
    auto* conformal = app.add_subcommand("verify-conformal", "conformal symmetry suite");
    add_common(conformal, args, false);
    auto* fischer = app.add_subcommand("fischer", "harmonic-to-monogenic splitting");
    add_common(fischer, args);
    auto* mono = app.add_subcommand("monogenics", "exact kernels of the Dirac operator");
    add_common(mono, args);
    mono->add_option("--chirality", args.chirality, "+ or - (m even only)");
    auto* casimir = app.add_subcommand("casimir", "quadratic invariant spectrum / nilpotence");
    add_common(casimir, args);
    auto* submodule = app.add_subcommand("submodule", "unique submodule window");
    add_common(submodule, args);
    auto* singular = app.add_subcommand("singular", "singular vectors and weights");
    add_common(singular, args);
    singular->add_option("--chirality", args.chirality, "+ or - (m even only)");
    auto* pipower = app.add_subcommand("pi-power", "iterated symmetry powers of the constant");
    add_common(pipower, args, false);
    pipower->add_option("--k-max", k_max, "highest power to test");
    auto* howe = app.add_subcommand("howe-closure", "closing algebra rank and brackets");
    add_common(howe, args, false);
    howe->add_option("--d-cut", d_cut, "polynomial cut for the stacked action");
    howe->add_option("--q-cut", q_cut, "t-degree cut for the stacked action");
    howe->add_flag("--no-brackets", no_brackets, "skip the pairwise bracket membership");
    auto* check = app.add_subcommand("check", "verify 'lhs == rhs' symbolically and exactly");
    add_common(check, args, false);
    check->add_option("equation", equation, "identity, e.g. \"dirac*dirac == -laplace\"")
        ->required();
    auto* listops = app.add_subcommand("list-ops", "operator catalog with parities and shifts");
    add_common(listops, args, false);

    CLI11_PARSE(app, argc, argv);

    try {
        SpaceConfig cfg(args.m, args.n);
        if (osp12->parsed())
            return emit(run_osp12(cfg, args.deg_or(4), args.cut_or(3)), args);
        if (invariance->parsed())
            return emit(run_invariance(cfg, args.deg_or(3), args.cut_or(2)), args);
        if (conformal->parsed())
            return emit(run_conformal(cfg, args.deg_or(3), args.cut_or(2)), args);
        if (fischer->parsed()) {
            auto rep = sweep(cfg, args, degree_cells(args, 1),
                             [&](int k) { return run_fischer(cfg, k, spin_cut_of(args)); });
            return emit(rep, args);
        }
        if (mono->parsed()) {
            auto chir = chirality_of(args);
            auto rep = sweep(cfg, args, degree_cells(args, 1), [&](int k) {
                return run_monogenics(cfg, k, spin_cut_of(args), chir);
            });
            return emit(rep, args);
        }
        if (casimir->parsed()) {
            auto rep = sweep(cfg, args, degree_cells(args, 1),
                             [&](int k) { return run_casimir(cfg, k, spin_cut_of(args)); });
            return emit(rep, args);
        }
        if (submodule->parsed()) {
            auto rep = sweep(cfg, args, degree_cells(args, 1),
                             [&](int k) { return run_submodule(cfg, k, spin_cut_of(args)); });
            return emit(rep, args);
        }
        if (singular->parsed()) {
            auto chir = chirality_of(args);
            auto rep = sweep(cfg, args, degree_cells(args, 0), [&](int k) {
                return run_singular(cfg, k, spin_cut_of(args), chir);
            });
            return emit(rep, args);
        }
        if (pipower->parsed()) return emit(run_pi_power(cfg, k_max), args);
        if (howe->parsed())
            return emit(run_howe_closure(cfg, d_cut, q_cut, !no_brackets), args);
        if (check->parsed())
            return emit(run_check(cfg, equation, args.deg_or(3), args.cut_or(2)), args);
        if (listops->parsed()) return emit(run_list_ops(cfg), args);
    } catch (const SyntaxError& e) {
        std::cerr << "syntax error: " << e.what() << "\n";
        return 2;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
