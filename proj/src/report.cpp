#include "sdirac/report.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace sdirac {

bool SuiteReport::all_pass() const {
    for (const auto& c : checks)
        if (c.failed()) return false;
    return true;
}

void SuiteReport::merge(const SuiteReport& other) {
    for (const auto& c : other.checks) checks.push_back(c);
}

Json SuiteReport::to_json() const {
    Json j;
    j["params"] = params;
    j["suite"] = suite;
    Json arr = Json::array();
    for (const auto& c : checks) {
        Json cj;
        cj["name"] = c.name;
        cj["identity"] = c.identity;
        cj["status"] = c.status;
        if (!c.reason.empty()) cj["reason"] = c.reason;
        if (!c.data.empty()) cj["data"] = c.data;
        arr.push_back(std::move(cj));
    }
    j["checks"] = std::move(arr);
    j["version"] = kReportVersion;
    return j;
}

std::string SuiteReport::render(const std::string& format) const {
    if (format == "json") return to_json().dump(2) + "\n";
    std::ostringstream os;
    if (format == "csv") {
        os << "suite,name,identity,status,reason\n";
        auto quote = [](const std::string& s) {
            std::string q = "\"";
            for (char c : s) {
                if (c == '"') q += '"';
                q += c;
            }
            return q + "\"";
        };
        for (const auto& c : checks)
            os << suite << ',' << quote(c.name) << ',' << quote(c.identity) << ',' << c.status
               << ',' << quote(c.reason) << '\n';
        return os.str();
    }
    if (format != "text") throw DimensionMismatch("unknown report format: " + format);
    os << "suite " << suite << "  " << params.dump() << '\n';
    for (const auto& c : checks) {
        os << (c.status == "pass" ? "[PASS]" : c.status == "fail" ? "[FAIL]" : "[SKIP]") << ' '
           << c.name << "  " << c.identity;
        if (!c.reason.empty()) os << "  (" << c.reason << ')';
        if (!c.data.empty()) os << "  " << c.data.dump();
        os << '\n';
    }
    os << (all_pass() ? "all checks passed" : "FAILURES PRESENT") << '\n';
    return os.str();
}

Json scalar_json(const Scalar& s) {
    auto t = s.tuple4();
    return Json::array({t[0], t[1], t[2], t[3]});
}

Json element_json(const SpaceConfig& cfg, const Element& e) {
    Json arr = Json::array();
    for (const auto& [k, c] : e.terms()) {
        Json term;
        term["monomial"] = k.str(cfg);
        term["coeff"] = scalar_json(c);
        arr.push_back(std::move(term));
    }
    return arr;
}

Json weight_json(const Weight& w) {
    auto render = [](const Rational& q) {
        std::ostringstream os;
        os << numerator(q) << '/' << denominator(q);
        return os.str();
    };
    Json j;
    Json eps = Json::array(), delta = Json::array();
    for (const auto& v : w.eps) eps.push_back(render(v));
    for (const auto& v : w.delta) delta.push_back(render(v));
    j["eps"] = std::move(eps);
    j["delta"] = std::move(delta);
    return j;
}

namespace {

Json space_params(const SpaceConfig& cfg) {
    Json j;
    j["m"] = cfg.m;
    j["n"] = cfg.n;
    j["superdim"] = cfg.superdim();
    return j;
}

CheckResult equal_check(const SpaceConfig& cfg, std::string name, std::string identity,
                        const Operator& lhs, const Operator& rhs, int deg, int spin_cut) {
    auto res = equal_on(cfg, lhs, rhs, deg, spin_cut);
    if (res.equal) return CheckResult::pass(std::move(name), std::move(identity));
    Json data;
    data["counterexample"] = res.witness->str(cfg);
    data["lhs_value"] = element_json(cfg, res.lhs_value);
    data["rhs_value"] = element_json(cfg, res.rhs_value);
    return CheckResult::fail(std::move(name), std::move(identity), "first counterexample at " +
                             res.witness->str(cfg), std::move(data));
}

std::string pair_label(int i, int j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

SuiteReport run_osp12(const SpaceConfig& cfg, int deg, int spin_cut) {
    SuiteReport rep;
    rep.suite = "osp12";
    rep.params = space_params(cfg);
    rep.params["deg"] = deg;
    rep.params["spin_cut"] = spin_cut;

    Operator dx = ops::dirac(cfg);
    Operator x = ops::vector_x(cfg);
    Operator lap = ops::laplace(cfg);
    Operator rsq = ops::r2(cfg);
    Operator id = ops::identity(cfg);
    Operator eu = ops::euler(cfg);
    Operator h = add(eu, scale(Scalar(Rational(cfg.superdim(), 2)), id));
    Operator xsq = compose(x, x);
    const int M = cfg.superdim();

    rep.append(equal_check(cfg, "dirac_squared", "Dx^2 = -Lap", compose(dx, dx),
                           scale(Scalar(-1), lap), deg, spin_cut));
    rep.append(equal_check(cfg, "vector_squared", "x^2 = -R2", xsq, scale(Scalar(-1), rsq), deg,
                           spin_cut));
    rep.append(equal_check(cfg, "main_anticommutator", "[Dx, x] = -2E - M", bracket(dx, x),
                           add(scale(Scalar(-2), eu), scale(Scalar(-M), id)), deg, spin_cut));
    rep.append(equal_check(cfg, "bracket_x_x2", "[x, x^2] = 0", bracket(x, xsq), ops::zero(cfg),
                           deg, spin_cut));
    rep.append(equal_check(cfg, "bracket_dirac_x2", "[Dx, x^2] = -2x", bracket(dx, xsq),
                           scale(Scalar(-2), x), deg, spin_cut));
    rep.append(equal_check(cfg, "bracket_x_lap", "[x, Lap] = -2Dx", bracket(x, lap),
                           scale(Scalar(-2), dx), deg, spin_cut));
    rep.append(equal_check(cfg, "bracket_dirac_lap", "[Dx, Lap] = 0", bracket(dx, lap),
                           ops::zero(cfg), deg, spin_cut));
    rep.append(equal_check(cfg, "bracket_x_h", "[x, E + M/2] = -x", bracket(x, h),
                           scale(Scalar(-1), x), deg, spin_cut));
    rep.append(equal_check(cfg, "bracket_dirac_h", "[Dx, E + M/2] = Dx", bracket(dx, h), dx, deg,
                           spin_cut));
    rep.append(equal_check(cfg, "sl2_bracket", "[Lap, R2] = 4E + 2M", bracket(lap, rsq),
                           add(scale(Scalar(4), eu), scale(Scalar(2 * M), id)), deg, spin_cut));
    rep.append(equal_check(cfg, "stein_weiss_agreement",
                           "Dx from the compressed gradient = Dx from the spinor action", dx,
                           ops::dirac_stein_weiss(cfg), deg, spin_cut));
    return rep;
}

SuiteReport run_invariance(const SpaceConfig& cfg, int deg, int spin_cut) {
    SuiteReport rep;
    rep.suite = "invariance";
    rep.params = space_params(cfg);
    rep.params["deg"] = deg;
    rep.params["spin_cut"] = spin_cut;

    Operator dx = ops::dirac(cfg);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= cfg.dims(); ++i)
        for (int j = i; j <= cfg.dims(); ++j) {
            if (i == j && cfg.grade(i) == 0) continue;
            pairs.emplace_back(i, j);
        }

    // Dx K = K Dx and its graded form with the degree dressing
    bool plain_ok = true, graded_ok = true;
    std::string first_fail;
    for (auto [i, j] : pairs) {
        Operator k = ops::K_op(cfg, i, j);
        auto res = equal_on(cfg, compose(dx, k), compose(k, dx), deg, spin_cut);
        if (!res.equal) {
            plain_ok = false;
            if (first_fail.empty()) first_fail = "K" + pair_label(i, j);
        }
        Operator dressed =
            (cfg.grade(i) ^ cfg.grade(j)) ? compose(k, ops::parity_inv(cfg)) : k;
        dressed.parity = cfg.grade(i) ^ cfg.grade(j);
        if (!zero_on(cfg, bracket(dx, dressed), deg, spin_cut).equal) graded_ok = false;
    }
    rep.append(plain_ok ? CheckResult::pass("dirac_invariance", "Dx K_ij = K_ij Dx for all pairs")
                        : CheckResult::fail("dirac_invariance", "Dx K_ij = K_ij Dx for all pairs",
                                            "first failing generator " + first_fail));
    rep.append(graded_ok
                   ? CheckResult::pass("dirac_invariance_graded",
                                       "[Dx, K_ij (-1)^(([i]+[j])E)] = 0 for all pairs")
                   : CheckResult::fail("dirac_invariance_graded",
                                       "[Dx, K_ij (-1)^(([i]+[j])E)] = 0 for all pairs", ""));

    // structure constants of the K realization
    bool comml_ok = true;
    std::string comml_fail;
    for (auto [i, j] : pairs) {
        for (auto [k, l] : pairs) {
            Operator lhs = bracket(ops::K_op(cfg, i, j), ops::K_op(cfg, k, l));
            Operator rhs = ops::zero(cfg);
            auto addterm = [&](int coeff, int u, int v) {
                if (coeff) rhs = add(rhs, scale(Scalar(coeff), ops::K_op(cfg, u, v)));
            };
            int s2 = (cfg.grade(i) & (cfg.grade(j) ^ cfg.grade(k))) ? -1 : 1;
            int s3 = (cfg.grade(k) & cfg.grade(l)) ? -1 : 1;
            int s4 = (cfg.grade(i) & cfg.grade(j)) ? -1 : 1;
            addterm(cfg.metric(k, j), i, l);
            addterm(s2 * cfg.metric(l, i), j, k);
            addterm(-s3 * cfg.metric(l, j), i, k);
            addterm(-s4 * cfg.metric(k, i), j, l);
            if (!equal_on(cfg, lhs, rhs, deg, spin_cut).equal) {
                comml_ok = false;
                if (comml_fail.empty())
                    comml_fail = "[K" + pair_label(i, j) + ", K" + pair_label(k, l) + "]";
            }
        }
    }
    rep.append(comml_ok ? CheckResult::pass("symmetry_brackets",
                                            "[K_ij, K_kl] matches the metric structure constants")
                        : CheckResult::fail("symmetry_brackets",
                                            "[K_ij, K_kl] matches the metric structure constants",
                                            "first failing bracket " + comml_fail));

    // bivector contraction relation, verified at the Clifford-word level
    bool baction_ok = true;
    for (int i = 1; i <= cfg.dims() && baction_ok; ++i)
        for (int j = 1; j <= cfg.dims() && baction_ok; ++j)
            for (int k = 1; k <= cfg.dims() && baction_ok; ++k) {
                CliffordCombination biv = bivector(cfg, i, j);
                CliffordCombination hk = hat_generator(cfg, k);
                CliffordCombination lhs = cl_multiply(cfg, biv, hk);
                int sign = ((cfg.grade(i) ^ cfg.grade(j)) & cfg.grade(k)) ? 1 : -1;
                lhs += cl_multiply(cfg, hk, biv) * Scalar(sign);
                CliffordCombination rhs = hat_generator(cfg, i) * Scalar(cfg.metric(k, j));
                int s = (cfg.grade(i) && cfg.grade(j)) ? 1 : -1;
                rhs += hat_generator(cfg, j) * Scalar(s * cfg.metric(k, i));
                if (!(cl_normal_form(cfg, lhs) == cl_normal_form(cfg, rhs))) baction_ok = false;
            }
    rep.append(baction_ok
                   ? CheckResult::pass("bivector_contraction",
                                       "[B_ij, hat(E_k)] = g_kj hat(E_i) - (-1)^([i][j]) g_ki hat(E_j)")
                   : CheckResult::fail("bivector_contraction",
                                       "[B_ij, hat(E_k)] = g_kj hat(E_i) - (-1)^([i][j]) g_ki hat(E_j)",
                                       "word-level normal forms differ"));
    return rep;
}

SuiteReport run_conformal(const SpaceConfig& cfg, int deg, int spin_cut) {
    SuiteReport rep;
    rep.suite = "conformal";
    rep.params = space_params(cfg);
    rep.params["deg"] = deg;
    rep.params["spin_cut"] = spin_cut;

    Operator dx = ops::dirac(cfg);
    bool pi_ok = true;
    std::string pi_fail;
    for (int j = 1; j <= cfg.dims(); ++j) {
        Operator pij = ops::Pi_op(cfg, j);
        auto res = equal_on(cfg, compose(dx, pij),
                            compose(add(pij, scale(Scalar(2), ops::mul_x(cfg, j))), dx), deg,
                            spin_cut);
        if (!res.equal) {
            pi_ok = false;
            if (pi_fail.empty()) pi_fail = "j = " + std::to_string(j);
        }
    }
    rep.append(pi_ok ? CheckResult::pass("pi_symmetry", "Dx Pi_j = (Pi_j + 2 X_j) Dx for all j")
                     : CheckResult::fail("pi_symmetry", "Dx Pi_j = (Pi_j + 2 X_j) Dx for all j",
                                         "first failing index " + pi_fail));

    // all conformal generator pairs against the extended metric
    std::vector<std::pair<int, int>> apairs;
    apairs.emplace_back(-1, 0);
    for (int j = 1; j <= cfg.dims(); ++j) {
        apairs.emplace_back(-1, j);
        apairs.emplace_back(0, j);
    }
    for (int i = 1; i <= cfg.dims(); ++i)
        for (int j = i; j <= cfg.dims(); ++j) {
            if (i == j && cfg.grade(i) == 0) continue;
            apairs.emplace_back(i, j);
        }
    bool conf_ok = true;
    std::string conf_fail;
    for (auto [a, b] : apairs)
        for (auto [c, d] : apairs) {
            Operator lhs = bracket(ops::Kconf(cfg, a, b), ops::Kconf(cfg, c, d));
            auto ch = [&](int u) { return conformal_grade(cfg, u); };
            auto h = [&](int u, int v) { return conformal_metric(cfg, u, v); };
            int s2 = (ch(a) & (ch(b) ^ ch(c))) ? -1 : 1;
            int s3 = (ch(c) & ch(d)) ? -1 : 1;
            int s4 = (ch(a) & ch(b)) ? -1 : 1;
            Operator rhs = ops::zero(cfg);
            auto addterm = [&](int coeff, int u, int v) {
                if (coeff) rhs = add(rhs, scale(Scalar(coeff), ops::Kconf(cfg, u, v)));
            };
            addterm(h(c, b), a, d);
            addterm(s2 * h(d, a), b, c);
            addterm(-s3 * h(d, b), a, c);
            addterm(-s4 * h(c, a), b, d);
            if (!equal_on(cfg, lhs, rhs, deg, spin_cut).equal) {
                conf_ok = false;
                if (conf_fail.empty())
                    conf_fail = "[Kc" + pair_label(a, b) + ", Kc" + pair_label(c, d) + "]";
            }
        }
    rep.append(conf_ok
                   ? CheckResult::pass("conformal_brackets",
                                       "[K_ab, K_cd] matches the extended metric structure")
                   : CheckResult::fail("conformal_brackets",
                                       "[K_ab, K_cd] matches the extended metric structure",
                                       "first failing bracket " + conf_fail));
    return rep;
}

SuiteReport run_fischer(const SpaceConfig& cfg, int k, std::optional<int> spin_cut) {
    SuiteReport rep;
    rep.suite = "fischer";
    int q = spin_cut.value_or(k + 2);
    rep.params = space_params(cfg);
    rep.params["k"] = k;
    rep.params["spin_cut"] = q;
    std::string identity =
        "harmonic block splits as monogenics + x . monogenics with trivial overlap";
    try {
        auto res = fischer_check(cfg, k, q);
        Json data;
        data["dim_block"] = res.dim_block;
        data["dim_monogenics"] = res.dim_mk;
        data["dim_x_monogenics"] = res.dim_x_mk1;
        data["dim_intersection"] = res.dim_intersection;
        data["refined_checked"] = res.refined_checked;
        rep.append(res.pass
                       ? CheckResult::pass("fischer_k" + std::to_string(k), identity, data)
                       : CheckResult::fail("fischer_k" + std::to_string(k), identity, res.failure,
                                           data));
    } catch (const FischerSingular& e) {
        rep.append(CheckResult::fail("fischer_k" + std::to_string(k), identity,
                                     std::string("FischerSingular: ") + e.what()));
    }
    return rep;
}

SuiteReport run_monogenics(const SpaceConfig& cfg, int k, std::optional<int> spin_cut,
                           std::optional<int> chirality) {
    SuiteReport rep;
    rep.suite = "monogenics";
    int q = spin_cut.value_or(k + 2);
    rep.params = space_params(cfg);
    rep.params["k"] = k;
    rep.params["spin_cut"] = q;
    if (chirality) rep.params["chirality"] = *chirality ? "-" : "+";
    std::string name = "monogenics_k" + std::to_string(k);
    try {
        auto basis = monogenics(cfg, k, q, chirality);
        Operator dx = ops::dirac(cfg);
        for (const auto& v : basis)
            if (!dx(v).is_zero()) {
                rep.append(CheckResult::fail(name, "kernel vectors are exactly annihilated",
                                             "kernel vector not annihilated"));
                return rep;
            }
        Json data;
        data["dim"] = basis.size();
        rep.append(CheckResult::pass(name, "exact kernel of Dx on the graded block", data));
    } catch (const WindowViolation& e) {
        rep.append(CheckResult::skipped(name, "exact kernel of Dx on the graded block", e.what()));
    }
    return rep;
}

SuiteReport run_casimir(const SpaceConfig& cfg, int k, std::optional<int> spin_cut) {
    SuiteReport rep;
    rep.suite = "casimir";
    int q = spin_cut.value_or(k + 2);
    rep.params = space_params(cfg);
    rep.params["k"] = k;
    rep.params["spin_cut"] = q;
    auto res = casimir_test(cfg, k, q);
    std::string identity = res.nilpotent_case
                               ? "x Dx is nonzero with square zero on the harmonic block"
                               : "x Dx satisfies C(C + 2k-2+M) = 0 with both factors nonzero";
    Json data;
    data["nilpotent"] = res.nilpotent_case;
    if (!res.nilpotent_case) {
        std::ostringstream ev;
        ev << res.second_eigenvalue;
        data["eigenvalues"] = Json::array({"0", ev.str()});
    }
    std::string name = "casimir_k" + std::to_string(k);
    rep.append(res.pass ? CheckResult::pass(name, identity, data)
                        : CheckResult::fail(name, identity, res.failure, data));
    return rep;
}

SuiteReport run_submodule(const SpaceConfig& cfg, int k, std::optional<int> spin_cut) {
    SuiteReport rep;
    rep.suite = "submodule";
    int q = spin_cut.value_or(3);
    rep.params = space_params(cfg);
    rep.params["k"] = k;
    rep.params["spin_cut"] = q;
    std::string name = "submodule_k" + std::to_string(k);
    std::string identity =
        "x^(2d-2n+2k-1) monogenics embed and exhaust the intersection with x.(P ox S)";
    try {
        auto res = submodule_check(cfg, k, q);
        Json data;
        data["power"] = res.power;
        data["source_degree"] = res.source_degree;
        data["dim_m_plus"] = res.dim_m_plus;
        data["dim_m_minus"] = res.dim_m_minus;
        data["dim_sub_plus"] = res.dim_sub_plus;
        data["dim_sub_minus"] = res.dim_sub_minus;
        data["stable_at_next_cut"] = res.stable_q;
        rep.append(res.pass ? CheckResult::pass(name, identity, data)
                            : CheckResult::fail(name, identity, res.failure, data));
    } catch (const WindowViolation& e) {
        rep.append(CheckResult::fail(name, identity, std::string("WindowViolation: ") + e.what()));
    }
    return rep;
}

SuiteReport run_singular(const SpaceConfig& cfg, int k, std::optional<int> spin_cut,
                         std::optional<int> chirality) {
    SuiteReport rep;
    rep.suite = "singular";
    int q = spin_cut.value_or(k + 2);
    rep.params = space_params(cfg);
    rep.params["k"] = k;
    rep.params["spin_cut"] = q;
    std::string name = "singular_k" + std::to_string(k);
    std::string identity = "singular weights of the degree-k monogenics match the expected line";
    try {
        auto space = monogenics(cfg, k, q, chirality);
        auto sv = singular_vectors(cfg, space);
        Json data;
        Json weights = Json::array();
        for (const auto& s : sv) weights.push_back(weight_json(s.weight));
        data["count"] = sv.size();
        data["weights"] = std::move(weights);
        if (cfg.m % 2 == 1) {
            Weight expect = monogenic_weight_odd(cfg, k);
            bool ok = sv.size() == 1 && sv[0].weight == expect;
            data["expected"] = weight_json(expect);
            rep.append(ok ? CheckResult::pass(name, identity, data)
                          : CheckResult::fail(name, identity,
                                              "found " + std::to_string(sv.size()) +
                                                  " singular lines",
                                              data));
        } else {
            // for m even report the found weights; the +/- refinement is
            // driven by the chirality flag
            rep.append(CheckResult::pass(name, "singular weights of the degree-k monogenics",
                                         data));
        }
    } catch (const NoCartanConfig& e) {
        rep.append(CheckResult::fail(name, identity, std::string("NoCartanConfig: ") + e.what()));
    }
    return rep;
}

SuiteReport run_pi_power(const SpaceConfig& cfg, int k_max) {
    SuiteReport rep;
    rep.suite = "pi-power";
    rep.params = space_params(cfg);
    rep.params["k_max"] = k_max;
    auto res = pi_power_test(cfg, k_max);
    Json data;
    Json table = Json::array();
    for (std::size_t i = 0; i < res.nonzero.size(); ++i) {
        Json entry;
        entry["power"] = i + 1;
        entry["nonzero"] = static_cast<bool>(res.nonzero[i]);
        table.push_back(std::move(entry));
    }
    data["table"] = std::move(table);
    rep.append(res.pass
                   ? CheckResult::pass("pi_power", res.detail, data)
                   : CheckResult::fail("pi_power", res.detail, "vanishing pattern unexpected",
                                       data));
    return rep;
}

SuiteReport run_howe_closure(const SpaceConfig& cfg, int d_cut, int q_cut, bool brackets) {
    SuiteReport rep;
    rep.suite = "howe-closure";
    rep.params = space_params(cfg);
    rep.params["d_cut"] = d_cut;
    rep.params["q_cut"] = q_cut;
    std::string identity = "generator span has the dimension of the closing algebra, stable "
                           "under cut growth, closed under brackets";
    try {
        auto res = howe_closure_check(cfg, d_cut, q_cut, brackets);
        Json data;
        data["rank"] = res.rank;
        data["expected"] = res.expected;
        data["stable"] = res.stable;
        data["bracket_pairs_checked"] = res.bracket_pairs;
        bool ok = res.rank_ok && res.stable && (!brackets || res.brackets_ok);
        rep.append(ok ? CheckResult::pass("howe_closure", identity, data)
                      : CheckResult::fail("howe_closure", identity, res.failure, data));
    } catch (const RankUnstable& e) {
        rep.append(CheckResult::fail("howe_closure", identity,
                                     std::string("RankUnstable: ") + e.what()));
    }
    return rep;
}

SuiteReport run_check(const SpaceConfig& cfg, const std::string& equation, int deg, int spin_cut) {
    SuiteReport rep;
    rep.suite = "check";
    rep.params = space_params(cfg);
    rep.params["deg"] = deg;
    rep.params["spin_cut"] = spin_cut;
    rep.params["equation"] = equation;
    auto split = equation.find("==");
    if (split == std::string::npos)
        throw SyntaxError("expected lhs == rhs", equation.size());
    std::string lhs = equation.substr(0, split);
    std::string rhs = equation.substr(split + 2);
    auto res = verify_identity(cfg, lhs, rhs, deg, spin_cut);
    Json data;
    data["symbolic"] = res.symbolic_pass ? "pass" : "fail";
    data["evaluation"] = res.evaluation_pass ? "pass" : "fail";
    if (!res.residue.empty()) data["residue"] = res.residue;
    if (res.witness) data["counterexample"] = res.witness->str(cfg);
    if (!res.consistent) {
        rep.append(CheckResult::fail("check", equation,
                                     "engine bug: symbolic and evaluation routes disagree", data));
        return rep;
    }
    rep.append(res.pass() ? CheckResult::pass("check", equation, data)
                          : CheckResult::fail("check", equation, "identity does not hold", data));
    return rep;
}

SuiteReport run_list_ops(const SpaceConfig& cfg) {
    SuiteReport rep;
    rep.suite = "list-ops";
    rep.params = space_params(cfg);
    Json catalog = Json::array();
    auto entry = [&](const Operator& op) {
        Json j;
        j["label"] = op.label;
        j["parity"] = op.parity;
        j["poly_shift"] = Json::array({op.poly_lo, op.poly_hi});
        j["t_shift"] = Json::array({op.t_lo, op.t_hi});
        catalog.push_back(std::move(j));
    };
    entry(ops::identity(cfg));
    entry(ops::euler(cfg));
    entry(ops::r2(cfg));
    entry(ops::laplace(cfg));
    entry(ops::dirac(cfg));
    entry(ops::vector_x(cfg));
    entry(ops::casimir(cfg));
    entry(ops::parity_inv(cfg));
    for (int j = 1; j <= cfg.dims(); ++j) {
        entry(ops::mul_x(cfg, j));
        entry(ops::partial_op(cfg, j));
        entry(ops::partial_up_op(cfg, j));
        entry(ops::clifford_act(cfg, j));
        entry(ops::Pi_op(cfg, j));
    }
    for (int i = 1; i <= cfg.dims(); ++i)
        for (int j = i; j <= cfg.dims(); ++j) {
            if (i == j && cfg.grade(i) == 0) continue;
            entry(ops::K_op(cfg, i, j));
        }
    CheckResult c = CheckResult::pass("catalog", "operator catalog");
    c.data = std::move(catalog);
    rep.append(std::move(c));
    return rep;
}

void write_report_file(const SuiteReport& report, const std::string& path,
                       const std::string& format) {
    namespace fs = std::filesystem;
    fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw std::runtime_error("cannot open " + tmp.string());
        out << report.render(format);
    }
    fs::rename(tmp, target);
}

Manifest::Manifest(std::string path) : path_(std::move(path)) {
    std::ifstream in(path_);
    if (!in) return;
    Json j;
    in >> j;
    for (const auto& cell : j["completed"])
        cells_.push_back({cell[0].get<int>(), cell[1].get<int>(), cell[2].get<int>(),
                          cell[3].get<int>()});
}

bool Manifest::completed(int m, int n, int k, int q) const {
    for (const auto& c : cells_)
        if (c == std::array<int, 4>{m, n, k, q}) return true;
    return false;
}

void Manifest::mark(int m, int n, int k, int q) {
    if (!completed(m, n, k, q)) cells_.push_back({m, n, k, q});
}

void Manifest::save() const {
    Json j;
    Json arr = Json::array();
    for (const auto& c : cells_) arr.push_back(Json::array({c[0], c[1], c[2], c[3]}));
    j["completed"] = std::move(arr);
    std::ofstream out(path_);
    out << j.dump(2) << "\n";
}

}  // namespace sdirac
