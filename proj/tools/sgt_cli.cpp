// Command line front end over the shared C interface.
//
// Subcommands: table1, alpha, verify, construct, bounds, simulate.
// Machine-readable output goes to stdout (JSON by default, CSV where a
// tabular form is defined); diagnostics go to stderr. Exit codes:
// 0 success, 1 property violation, 2 usage or invalid input.

#include "sgt/sgt.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

using ordered_json = nlohmann::ordered_json;

namespace {

[[noreturn]] void die(const std::string& msg) {
    std::fprintf(stderr, "error: %s\n", msg.c_str());
    std::exit(2);
}

void check(sgt_status s) {
    if (s != SGT_OK) die(sgt_last_error());
}

struct MatrixHandle {
    sgt_matrix* m = nullptr;
    ~MatrixHandle() { sgt_matrix_free(m); }
};

struct AlphaHandle {
    sgt_alpha_result* r = nullptr;
    ~AlphaHandle() { sgt_alpha_result_free(r); }
};

struct WitnessHandle {
    sgt_witness* w = nullptr;
    ~WitnessHandle() { sgt_witness_free(w); }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) die("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int model_kind(const std::string& name) {
    if (name == "agt") return 0;
    if (name == "sgt") return 1;
    if (name == "ggt") return 2;
    die("model must be agt, sgt or ggt");
}

const char* model_name(int kind) {
    return kind == 0 ? "agt" : (kind == 1 ? "sgt" : "ggt");
}

// ---- table1 ----
int cmd_table1(int m_max, const std::string& format) {
    if (format == "csv") std::printf("m,p_star,eta1_star,eta2_star,alpha\n");
    ordered_json arr = ordered_json::array();
    sgt_model family{2, 0.5, 0, 0.0, 0, 1};
    for (int m = 2; m <= m_max; ++m) {
        AlphaHandle res;
        check(sgt_alpha_opt(m, &family, &res.r));
        double value = 0.0;
        int count = 0;
        check(sgt_alpha_result_value(res.r, &value));
        check(sgt_alpha_result_count(res.r, &count));
        ordered_json maxims = ordered_json::array();
        for (int idx = 0; idx < count; ++idx) {
            double p = 0.0;
            int e1 = 0, e2 = 0;
            check(sgt_alpha_result_maximizer(res.r, idx, &p, &e1, &e2));
            if (format == "csv") std::printf("%d,%.3f,%d,%d,%.6f\n", m, p, e1, e2, value);
            maxims.push_back({{"p_star", p}, {"eta1_star", e1}, {"eta2_star", e2}});
        }
        arr.push_back({{"m", m}, {"model", "ggt"}, {"alpha", value}, {"maximizers", maxims}});
    }
    if (format == "json") std::printf("%s\n", arr.dump(2).c_str());
    return 0;
}

// ---- alpha ----
int cmd_alpha(int m_max, double q, bool noisy, const std::string& format) {
    if (format == "csv") std::printf("m,alpha_A,alpha_S,alpha_G\n");
    ordered_json arr = ordered_json::array();
    for (int m = 2; m <= m_max; ++m) {
        double vals[3] = {0.0, 0.0, 0.0};
        for (int kind = 0; kind < 3; ++kind) {
            // dilution has a closed form for the OR and saturation designs only
            bool use_noise = noisy && kind != 2;
            sgt_model family{kind, 0.5, use_noise ? 1 : 0, use_noise ? q : 0.0, 0, 1};
            AlphaHandle res;
            check(sgt_alpha_opt(m, &family, &res.r));
            check(sgt_alpha_result_value(res.r, &vals[kind]));
        }
        if (format == "csv") std::printf("%d,%.12g,%.12g,%.12g\n", m, vals[0], vals[1], vals[2]);
        arr.push_back({{"m", m}, {"alpha_A", vals[0]}, {"alpha_S", vals[1]}, {"alpha_G", vals[2]}});
    }
    if (format == "json") std::printf("%s\n", arr.dump(2).c_str());
    return 0;
}

// ---- verify ----
int cmd_verify(const std::string& path, const std::string& property, int m, bool force,
               const std::string& format) {
    MatrixHandle code;
    check(sgt_matrix_load(read_file(path).c_str(), &code.m));
    bool pass = false;
    ordered_json counterexample;
    if (property == "dmin5") {
        int ok = 0;
        check(sgt_min_distance_at_least_5(code.m, &ok));
        pass = ok != 0;
    } else {
        WitnessHandle wit;
        if (property == "disjunct") check(sgt_verify_disjunct(code.m, m, force ? 1 : 0, &wit.w));
        else if (property == "separable") check(sgt_verify_separable(code.m, m, force ? 1 : 0, &wit.w));
        else die("property must be disjunct, separable or dmin5");
        int ok = 0;
        check(sgt_witness_ok(wit.w, &ok));
        pass = ok != 0;
        if (!pass) {
            for (int which = 0; which < 2; ++which) {
                const int* data = nullptr;
                size_t len = 0;
                check(sgt_witness_set(wit.w, which, &data, &len));
                counterexample[which == 0 ? "set_a" : "set_b"] =
                    std::vector<int>(data, data + len);
            }
        }
    }
    if (format == "csv") {
        std::printf("verdict,property,m\n%s,%s,%d\n", pass ? "pass" : "fail", property.c_str(), m);
    } else {
        ordered_json out{{"verdict", pass ? "pass" : "fail"}, {"property", property}, {"m", m}};
        if (!pass && !counterexample.is_null()) out["counterexample"] = counterexample;
        std::printf("%s\n", out.dump(2).c_str());
    }
    return pass ? 0 : 1;
}

// ---- construct ----
int cmd_construct(int k, const std::string& format) {
    MatrixHandle code;
    check(sgt_bch_parity_check(k, &code.m));
    char* text = nullptr;
    check(sgt_matrix_save(code.m, &text));
    std::string body(text);
    sgt_string_free(text);
    if (format == "json") {
        int n = 0, N = 0;
        check(sgt_matrix_dims(code.m, &n, &N));
        ordered_json out{{"k", k}, {"n", n}, {"N", N}, {"matrix", body}};
        std::printf("%s\n", out.dump(2).c_str());
    } else {
        std::fputs(body.c_str(), stdout);
    }
    return 0;
}

// ---- bounds ----
int cmd_bounds(const std::string& kind, int n, int m, long long N, int r,
               const sgt_model& model, const std::string& format) {
    ordered_json out{{"kind", kind}};
    sgt_bound b{};
    bool have_bound = false;
    if (kind == "sufficient_n" || kind == "necessary_n") {
        check((kind[0] == 's' ? sgt_sufficient_tests : sgt_necessary_tests)(N, m, &model, &b));
        out["N"] = N;
        out["m"] = m;
        out["model"] = model_name(model.kind);
        out["p"] = model.p;
        if (model.noisy) out["q"] = model.q;
        have_bound = true;
    } else if (kind == "disjunct_pprime") {
        check(sgt_lll_disjunct_pprime(n, m, &b));
        out["n"] = n;
        out["m"] = m;
        have_bound = true;
    } else if (kind == "disjunct_maxN") {
        check(sgt_lll_disjunct_maxN(n, m, &b));
        out["n"] = n;
        out["m"] = m;
        have_bound = true;
    } else if (kind == "disjunct_maxN_agt") {
        check(sgt_lll_disjunct_maxN_agt(n, m, &b));
        out["n"] = n;
        out["m"] = m;
        have_bound = true;
    } else if (kind == "separable_pdprime") {
        check(sgt_lll_separable_pdprime(n, &b));
        out["n"] = n;
        have_bound = true;
    } else if (kind == "separable_maxN") {
        check(sgt_lll_separable_maxN(n, &b));
        out["n"] = n;
        have_bound = true;
    } else if (kind == "rate_ratio") {
        double v = 0.0;
        check(sgt_rate_ratio(m, &v));
        out["m"] = m;
        out["exact"] = v;
    } else if (kind == "gv_estimate" || kind == "sphere_estimate") {
        check((kind[0] == 'g' ? sgt_gv_estimate : sgt_sphere_estimate)(r, &b));
        out["r"] = r;
        have_bound = true;
    } else if (kind == "gv_check") {
        int ok = 0;
        check(sgt_gv_exact_check(N, r, &ok));
        out["N"] = N;
        out["r"] = r;
        out["ok"] = ok != 0;
    } else {
        die("unknown bound kind " + kind);
    }
    if (have_bound) {
        out["kind"] = b.kind;
        out["exact"] = b.exact;
        out["asymptotic"] = b.asymptotic;
        out["integer"] = b.integer_value;
        out["exceeds_one"] = b.exceeds_one != 0;
    }
    if (format == "csv" && have_bound) {
        std::printf("kind,exact,asymptotic,integer,exceeds_one\n%s,%.17g,%.17g,%lld,%d\n",
                    b.kind, b.exact, b.asymptotic, b.integer_value, b.exceeds_one);
    } else {
        std::printf("%s\n", out.dump(2).c_str());
    }
    return 0;
}

// ---- simulate ----
int cmd_simulate(int N, int m, int n, const sgt_model& model, long long trials,
                 std::uint64_t seed, const std::string& design_path, const std::string& format) {
    MatrixHandle design;
    if (!design_path.empty()) {
        check(sgt_matrix_load(read_file(design_path).c_str(), &design.m));
        int dn = 0;
        check(sgt_matrix_dims(design.m, &dn, &N));
        n = dn;
    }
    sgt_trial_config cfg{N, m, n, model, trials, seed, design.m};
    sgt_trial_report rep{};
    check(sgt_run_trials(&cfg, &rep));
    if (format == "csv") {
        std::printf("n,trials,successes,ambiguities,wrong_sets,error_rate\n");
        std::printf("%d,%lld,%lld,%lld,%lld,%.17g\n", n, rep.trials, rep.successes,
                    rep.ambiguities, rep.wrong_sets, rep.error_rate);
    } else {
        ordered_json out{{"N", N}, {"m", m}, {"n", n}, {"model", model_name(model.kind)}, {"p", model.p}};
        if (model.noisy) out["q"] = model.q;
        if (model.kind == 2) {
            out["eta1"] = model.eta1;
            out["eta2"] = model.eta2;
        }
        out["trials"] = rep.trials;
        out["seed"] = seed;
        out["successes"] = rep.successes;
        out["ambiguities"] = rep.ambiguities;
        out["wrong_sets"] = rep.wrong_sets;
        out["error_rate"] = rep.error_rate;
        std::printf("%s\n", out.dump(2).c_str());
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"group testing toolkit"};
    app.require_subcommand(1);

    std::string format = "json";
    int m_max = 2, m = 2, n = 1, k = 3, r = 1, eta1 = 0, eta2 = 1;
    long long N = 2, trials = 1;
    double p = 0.5, q = 0.0;
    std::uint64_t seed = 0;
    std::string file, property = "disjunct", kind, model_str = "sgt";
    bool force = false;

    auto* t1 = app.add_subcommand("table1", "optimal two-threshold designs per m");
    t1->add_option("--m-max", m_max, "largest m")->required()->check(CLI::Range(2, 64));
    std::string t1_format = "csv";
    t1->add_option("--format", t1_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    auto* al = app.add_subcommand("alpha", "rate curves for the three designs");
    al->add_option("--m-max", m_max, "largest m")->required()->check(CLI::Range(2, 64));
    std::string al_format = "csv";
    auto* al_q = al->add_option("--q", q, "dilution parameter for agt/sgt columns");
    al->add_option("--format", al_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    auto* ve = app.add_subcommand("verify", "check a code matrix property");
    ve->add_option("--file", file, "matrix text file")->required();
    ve->add_option("--property", property, "disjunct, separable or dmin5")
        ->check(CLI::IsMember({"disjunct", "separable", "dmin5"}));
    ve->add_option("--m", m, "set size for disjunct/separable")->check(CLI::Range(1, 64));
    ve->add_flag("--force", force, "lift the size guard");
    ve->add_option("--format", format, "json or csv")->check(CLI::IsMember({"csv", "json"}));

    auto* co = app.add_subcommand("construct", "emit the 2k-row parity-check design");
    co->add_option("--k", k, "field degree (2..10)")->required()->check(CLI::Range(2, 10));
    std::string co_format = "text";
    co->add_option("--format", co_format, "text or json")->check(CLI::IsMember({"text", "json"}));

    auto* bo = app.add_subcommand("bounds", "test-count and code-size bounds");
    bo->add_option("--kind", kind, "bound kind")->required();
    bo->add_option("--n", n, "tests");
    bo->add_option("--m", m, "defectives");
    bo->add_option("--N", N, "items / columns");
    bo->add_option("--r", r, "parity rows");
    bo->add_option("--model", model_str, "agt, sgt or ggt");
    bo->add_option("--p", p, "incidence probability");
    auto* bo_q = bo->add_option("--q", q, "dilution parameter");
    bo->add_option("--eta1", eta1, "lower threshold");
    bo->add_option("--eta2", eta2, "upper threshold");
    bo->add_option("--format", format, "json or csv")->check(CLI::IsMember({"csv", "json"}));

    auto* si = app.add_subcommand("simulate", "Monte Carlo decode error rate");
    si->add_option("--N", N, "items")->check(CLI::Range(2ll, 1ll << 20));
    si->add_option("--m", m, "defectives")->required();
    si->add_option("--n", n, "tests");
    si->add_option("--model", model_str, "agt, sgt or ggt");
    si->add_option("--p", p, "design density / incidence probability");
    auto* si_q = si->add_option("--q", q, "dilution parameter");
    si->add_option("--eta1", eta1, "lower threshold");
    si->add_option("--eta2", eta2, "upper threshold");
    si->add_option("--trials", trials, "trial count")->required();
    si->add_option("--seed", seed, "base seed");
    si->add_option("--file", file, "fixed design matrix file");
    si->add_option("--format", format, "json or csv")->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (t1->parsed()) return cmd_table1(m_max, t1_format);
    if (al->parsed()) return cmd_alpha(m_max, q, al_q->count() > 0, al_format);
    if (ve->parsed()) return cmd_verify(file, property, m, force, format);
    if (co->parsed()) return cmd_construct(k, co_format);
    if (bo->parsed()) {
        sgt_model model{model_kind(model_str), p, bo_q->count() > 0 ? 1 : 0, q, eta1, eta2};
        return cmd_bounds(kind, n, m, N, r, model, format);
    }
    if (si->parsed()) {
        sgt_model model{model_kind(model_str), p, si_q->count() > 0 ? 1 : 0, q, eta1, eta2};
        return cmd_simulate(static_cast<int>(N), m, n, model, trials, seed, file, format);
    }
    return 2;
}
