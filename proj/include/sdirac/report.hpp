#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sdirac/analysis.hpp"
#include "sdirac/exprdsl.hpp"

namespace sdirac {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportVersion = "1.0";

struct CheckResult {
    std::string name;      // short slug for the check
    std::string identity;  // the exact statement being verified
    std::string status;    // pass | fail | skipped
    std::string reason;    // failure detail or skip reason
    Json data;             // exact dimensions, weights, witnesses

    bool failed() const { return status == "fail"; }
    static CheckResult pass(std::string name, std::string identity, Json data = Json::object()) {
        return {std::move(name), std::move(identity), "pass", "", std::move(data)};
    }
    static CheckResult fail(std::string name, std::string identity, std::string reason,
                            Json data = Json::object()) {
        return {std::move(name), std::move(identity), "fail", std::move(reason), std::move(data)};
    }
    static CheckResult skipped(std::string name, std::string identity, std::string reason) {
        return {std::move(name), std::move(identity), "skipped", std::move(reason), Json::object()};
    }
};

struct SuiteReport {
    std::string suite;
    Json params;
    std::vector<CheckResult> checks;

    bool all_pass() const;
    int exit_code() const { return all_pass() ? 0 : 1; }
    void append(CheckResult c) { checks.push_back(std::move(c)); }
    void merge(const SuiteReport& other);

    Json to_json() const;  // {params, suite, checks: [...], version}
    std::string render(const std::string& format) const;  // json | csv | text
};

/// Serializes one scalar as the four "p/q" strings.
Json scalar_json(const Scalar& s);
Json element_json(const SpaceConfig& cfg, const Element& e);
Json weight_json(const Weight& w);

// --- named verification suites ------------------------------------------------

/// The osp(1|2) relations (squares, the main anticommutator, all six mixed
/// brackets, the sl2 bracket) plus the agreement of the two Dirac
/// constructions, on P_{<=deg} ox S^{<=spin_cut}.
SuiteReport run_osp12(const SpaceConfig& cfg, int deg, int spin_cut);

/// Invariance: Dx K_ij = K_ij Dx for all pairs, the graded bracket with the
/// degree-dressed generators, the structure relations of the K_ij, and the
/// bivector contraction relation at the Clifford-word level.
SuiteReport run_invariance(const SpaceConfig& cfg, int deg, int spin_cut);

/// Conformal: Dx Pi_j = (Pi_j + 2 X_j) Dx for all j, and the extended-metric
/// bracket relations of all conformal generators.
SuiteReport run_conformal(const SpaceConfig& cfg, int deg, int spin_cut);

SuiteReport run_fischer(const SpaceConfig& cfg, int k, std::optional<int> spin_cut);
SuiteReport run_monogenics(const SpaceConfig& cfg, int k, std::optional<int> spin_cut,
                           std::optional<int> chirality);
SuiteReport run_casimir(const SpaceConfig& cfg, int k, std::optional<int> spin_cut);
SuiteReport run_submodule(const SpaceConfig& cfg, int k, std::optional<int> spin_cut);
SuiteReport run_singular(const SpaceConfig& cfg, int k, std::optional<int> spin_cut,
                         std::optional<int> chirality);
SuiteReport run_pi_power(const SpaceConfig& cfg, int k_max);
SuiteReport run_howe_closure(const SpaceConfig& cfg, int d_cut, int q_cut, bool brackets);
SuiteReport run_check(const SpaceConfig& cfg, const std::string& equation, int deg, int spin_cut);
SuiteReport run_list_ops(const SpaceConfig& cfg);

/// Writes atomically: temp file in the same directory, then rename.
void write_report_file(const SuiteReport& report, const std::string& path,
                       const std::string& format);

/// Completed-cell manifest for resumable sweeps.
class Manifest {
  public:
    explicit Manifest(std::string path);
    bool completed(int m, int n, int k, int q) const;
    void mark(int m, int n, int k, int q);
    void save() const;

  private:
    std::string path_;
    std::vector<std::array<int, 4>> cells_;
};

}  // namespace sdirac
