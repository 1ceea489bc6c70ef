#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "sqtransfer/expsum.hpp"
#include "sqtransfer/io.hpp"
#include "sqtransfer/moments.hpp"
#include "sqtransfer/regularity.hpp"

namespace {

using sqt::io::json;

struct Opts {
    long long X = 100;
    long long w = 3;
    long long b1 = 0;  // 0: default (1) or chosen by select_b in pipeline
    long long b2 = 0;  // 0: smallest admissible
    bool plain = false;
    long long grid_factor = 8;
    double tau = 0.25;
    double p = 5.0;
    double delta = 0.1;
    int k = 2;
    long long M = 0;  // 0: smallest power of two above the required minimum
    long long qmax = 200;
    int r = 1;
    long long n_max = 1000;
    int trials = 20;
    unsigned long long seed = 1;
    long long max_nodes = 50'000'000;
    double max_seconds = 120.0;
    std::string equation = "1,1,-2";
    std::string forms;  // JSON array; empty: all pairs-equal subspaces
    std::string format = "json";
    std::string output;
    std::string config;
};

void apply_config(Opts& o, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open " + path);
    json j = json::parse(in);
    auto get = [&](const char* key, auto& field) {
        if (j.contains(key)) field = j[key].get<std::decay_t<decltype(field)>>();
    };
    get("X", o.X);
    get("w", o.w);
    get("b1", o.b1);
    get("b2", o.b2);
    get("plain", o.plain);
    get("grid_factor", o.grid_factor);
    get("tau", o.tau);
    get("p", o.p);
    get("delta", o.delta);
    get("k", o.k);
    get("M", o.M);
    get("qmax", o.qmax);
    get("r", o.r);
    get("n_max", o.n_max);
    get("trials", o.trials);
    get("seed", o.seed);
    get("max_nodes", o.max_nodes);
    get("max_seconds", o.max_seconds);
    get("equation", o.equation);
    get("forms", o.forms);
    get("format", o.format);
    get("output", o.output);
}

sqt::WParams resolve_wparams(const Opts& o) {
    long long W = sqt::compute_W(o.w);
    long long b1 = o.b1 > 0 ? o.b1 : 1;
    long long b2 = o.b2 > 0 ? o.b2 : sqt::default_b2(W);
    return sqt::make_wparams(o.X, o.w, b1, b2);
}

json config_json(const std::string& cmd, const Opts& o) {
    json c;
    c["command"] = cmd;
    c["X"] = o.X;
    c["w"] = o.w;
    c["b1"] = o.b1;
    c["b2"] = o.b2;
    c["plain"] = o.plain;
    c["grid_factor"] = o.grid_factor;
    c["tau"] = o.tau;
    c["p"] = o.p;
    c["delta"] = o.delta;
    c["k"] = o.k;
    c["M"] = o.M;
    c["qmax"] = o.qmax;
    c["r"] = o.r;
    c["n_max"] = o.n_max;
    c["trials"] = o.trials;
    c["seed"] = o.seed;
    c["max_nodes"] = o.max_nodes;
    c["max_seconds"] = o.max_seconds;
    c["equation"] = o.equation;
    c["forms"] = o.forms;
    c["format"] = o.format;
    return c;
}

std::string resolve_output(const Opts& o, const std::string& cmd) {
    if (!o.output.empty()) return o.output;
    if (const char* dir = std::getenv("SQTRANSFER_OUTDIR")) {
        std::string ext = o.format == "csv" ? ".csv" : ".json";
        return std::string(dir) + "/" + cmd + ext;
    }
    return "";  // stdout
}

void emit(const Opts& o, const std::string& cmd, const std::string& text) {
    std::string path = resolve_output(o, cmd);
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("output: cannot write " + path);
    out << text;
    std::cerr << cmd << ": wrote " << path << "\n";
}

json wparams_json(const sqt::WParams& p) {
    json j;
    j["X"] = p.X;
    j["w"] = p.ctx.w;
    j["W"] = p.ctx.W;
    j["b1"] = p.b1;
    j["b2"] = p.b2;
    j["sigma"] = p.sigma;
    j["Nb"] = p.Nb;
    return j;
}

sqt::SubspaceFamily resolve_family(const Opts& o, const sqt::Equation& eq) {
    if (o.forms.empty()) return sqt::pairs_equal_family(eq);
    json f;
    f["c"] = eq.coeffs;
    f["forms"] = json::parse(o.forms);
    return sqt::io::family_from_json(f);
}

long long default_modulus(const sqt::Equation& eq, long long N) {
    long long span = 0;
    for (long long c : eq.coeffs) span += std::llabs(c);
    long long m = 1;
    while (m <= span * N + 1) m <<= 1;
    return m;
}

int run_command(const std::string& cmd, const Opts& o) {
    json report;
    report["config"] = config_json(cmd, o);
    std::string csv;
    int exit_code = 0;

    if (cmd == "wparams") {
        report["result"] = wparams_json(resolve_wparams(o));
    } else if (cmd == "majorant") {
        sqt::Majorant m =
            o.plain ? sqt::plain_majorant(o.X) : sqt::wtricked_majorant(resolve_wparams(o));
        report["result"] = sqt::io::majorant_to_json(m);
        std::ostringstream cs;
        sqt::io::write_majorant_csv(cs, m);
        csv = cs.str();
    } else if (cmd == "decay") {
        sqt::Majorant m =
            o.plain ? sqt::plain_majorant(o.X) : sqt::wtricked_majorant(resolve_wparams(o));
        sqt::DecayResult d = sqt::decay_sup(m, o.grid_factor);
        json r;
        r["sup_ratio"] = d.sup_ratio;
        r["bernstein_slack"] = d.bernstein_slack;
        r["grid_points"] = d.grid_points;
        report["result"] = r;
    } else if (cmd == "gauss") {
        sqt::WParams p = resolve_wparams(o);
        auto zs = sqt::sqrt_classes(p.ctx.W, p.b2);
        json rows = json::array();
        std::ostringstream cs;
        cs << "q,a,max_abs,bound,smooth_vanishing_residual\n";
        for (long long q = 1; q <= o.qmax; ++q) {
            bool smooth = sqt::is_smooth(q, o.w);
            double worst = 0;
            long long worst_a = 1;
            double residual = 0;
            for (long long a = 1; a <= q; ++a) {
                if (sqt::gcd_ll(a, q) != 1) continue;
                double mx = 0;
                sqt::cd total(0, 0);
                for (long long z : zs) {
                    sqt::cd v = sqt::gauss_sum(q, a, z, p);
                    mx = std::max(mx, std::abs(v));
                    total += v;
                }
                if (mx > worst) {
                    worst = mx;
                    worst_a = a;
                }
                if (smooth && q > 1)
                    residual = std::max(residual, std::abs(total) / (double)q);
            }
            double bound = 2.0 * std::sqrt((double)q);
            cs << q << ',' << worst_a << ',' << worst << ',' << bound << ',' << residual
               << '\n';
            rows.push_back(json{{"q", q},
                                {"a", worst_a},
                                {"max_abs", worst},
                                {"bound", bound},
                                {"smooth_vanishing_residual", residual}});
        }
        report["result"] = rows;
        csv = cs.str();
    } else if (cmd == "count") {
        sqt::Equation eq = sqt::io::equation_from_string(o.equation);
        sqt::Majorant m =
            o.plain ? sqt::plain_majorant(o.X) : sqt::wtricked_majorant(resolve_wparams(o));
        std::vector<sqt::WeightedFn> fs(eq.s(), m);
        long long M = o.M > 0 ? o.M : default_modulus(eq, m.support_len);
        sqt::CountValue brute = sqt::count_brute(fs, eq);
        double dft = sqt::count_dft(fs, eq, M);
        long long ktrivial = sqt::count_ktrivial(std::min(o.X, (long long)400),
                                                 resolve_family(o, eq));
        json r;
        r["brute"] = brute.value();
        r["brute_numer"] = (double)brute.numer;
        r["dft"] = dft;
        r["modulus"] = M;
        r["ktrivial"] = ktrivial;
        r["heuristic"] = std::pow((double)m.support_len, (double)(eq.s() - 1));
        report["result"] = r;
    } else if (cmd == "ktrivial") {
        sqt::Equation eq = sqt::io::equation_from_string(o.equation);
        sqt::SubspaceFamily fam = resolve_family(o, eq);
        json r;
        r["count"] = sqt::count_ktrivial(o.X, fam);
        r["family"] = sqt::io::family_to_json(fam);
        report["result"] = r;
    } else if (cmd == "moments") {
        sqt::WParams p = resolve_wparams(o);
        sqt::Majorant nu = sqt::wtricked_majorant(p);
        json r;
        double ip;
        if (o.p >= 2 && std::modf(o.p / 2.0, &ip) == 0.0) {
            r["moment_exact"] = sqt::moment_even(nu, (int)(o.p / 2)).value();
        }
        long long M = o.M > 0 ? o.M : 8 * p.Nb;
        sqt::QuadratureResult q = sqt::moment_quadrature(nu, o.p, M);
        r["moment_quadrature"] = q.value;
        r["slack"] = q.slack;
        sqt::FourthMomentReport fm = sqt::fourth_moment_ratio(p);
        r["fourth_moment_ratio"] = fm.ratio;
        r["curve_c1"] = fm.curve_c1;
        r["curve_c2"] = fm.curve_c2;
        r["curve_c4"] = fm.curve_c4;
        if (o.p > 4)
            r["restriction_ratio"] = sqt::restriction_ratio(p, o.p, o.trials, o.seed);
        report["result"] = r;
    } else if (cmd == "spectrum") {
        sqt::WParams p = resolve_wparams(o);
        sqt::Majorant nu = sqt::wtricked_majorant(p);
        sqt::SpectrumReport s = sqt::large_spectrum(nu, o.delta, p.Nb);
        json r;
        r["delta"] = s.delta;
        r["R"] = s.R;
        r["measure_estimate"] = s.measure_estimate;
        r["points"] = s.points;
        report["result"] = r;
    } else if (cmd == "rado") {
        sqt::Equation eq = sqt::io::equation_from_string(o.equation);
        sqt::Budget budget{o.max_nodes, o.max_seconds};
        sqt::ColoringResult res = sqt::rado_number(eq, o.r, o.n_max, budget);
        json r;
        r["r"] = res.r;
        r["n"] = res.n;
        const char* status = res.status == sqt::RadoStatus::regular_at_n ? "regular_at_n"
                             : res.status == sqt::RadoStatus::no_witness_up_to_n
                                 ? "no_witness_up_to_n"
                                 : "exhausted_budget";
        r["status"] = status;
        if (res.witness) r["witness"] = *res.witness;
        r["certificate"] = res.certificate;
        r["nodes"] = res.nodes;
        report["result"] = r;
        if (res.status == sqt::RadoStatus::exhausted_budget) exit_code = 3;
    } else if (cmd == "pipeline") {
        sqt::Equation eq = sqt::io::equation_from_string(o.equation);
        sqt::SubspaceFamily fam = resolve_family(o, eq);
        sqt::GreedyResult greedy = sqt::solution_free_greedy(eq, o.X, o.seed);
        sqt::TransferenceReport rep =
            sqt::transference_statistic(greedy.set, o.X, o.w, eq, fam);
        json r;
        r["greedy_density"] = greedy.density;
        r["selection"] = wparams_json(rep.selection.params);
        r["delta"] = rep.delta;
        r["delta_sq_N"] = rep.delta_sq_N;
        r["statistic"] = rep.statistic;
        r["decay_sup"] = rep.decay.sup_ratio;
        r["count_brute"] = rep.count_brute_value;
        r["count_dft"] = rep.count_dft_value;
        r["ktrivial_value"] = rep.ktrivial_value;
        r["ktrivial_ratio"] = rep.ktrivial_ratio;
        r["heuristic_scale"] = rep.heuristic_scale;
        r["lifted_size"] = rep.lifted_size;
        report["result"] = r;
    } else {
        throw std::invalid_argument("unknown command " + cmd);
    }

    if (o.format == "csv" && !csv.empty()) {
        emit(o, cmd, csv);
    } else {
        emit(o, cmd, report.dump(2) + "\n");
    }
    std::cout << cmd << ": done\n";
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sqtransfer: transference machinery for Roth-type theorems in the squares"};
    app.require_subcommand(1);
    Opts o;

    const std::vector<std::pair<std::string, std::string>> commands = {
        {"wparams", "resolve (X, w, b1, b2) and report sigma and N_b"},
        {"majorant", "emit the W-tricked (or plain) majorant weights"},
        {"decay", "sup of |nu^ - 1^_[N]| / N over the oversampled grid"},
        {"gauss", "quadratic Gauss sum sweep over moduli q <= qmax"},
        {"count", "weighted solution count of c.x = 0 (brute and DFT)"},
        {"ktrivial", "count K-trivial square tuples up to X"},
        {"moments", "even moments, quadrature and restriction ratios"},
        {"spectrum", "greedy large-spectrum points above delta"},
        {"rado", "smallest partition-regular endpoint for r colors"},
        {"pipeline", "end-to-end transference statistic for a set A"},
    };
    for (const auto& [name, desc] : commands) {
        auto* sub = app.add_subcommand(name, desc);
        sub->add_option("--X", o.X, "interval endpoint X");
        sub->add_option("--w", o.w, "smoothness bound w");
        sub->add_option("--b1", o.b1, "w-smooth scale b1 (0: default)");
        sub->add_option("--b2", o.b2, "residue b2 (0: smallest admissible)");
        sub->add_flag("--plain", o.plain, "use the plain majorant, no W-trick");
        sub->add_option("--grid-factor", o.grid_factor, "Fourier grid oversampling");
        sub->add_option("--tau", o.tau, "arc exponent tau");
        sub->add_option("--p", o.p, "moment exponent p");
        sub->add_option("--delta", o.delta, "spectrum threshold delta");
        sub->add_option("--k", o.k, "even moment half-order k");
        sub->add_option("--M", o.M, "DFT modulus (0: default power of two)");
        sub->add_option("--qmax", o.qmax, "largest modulus q for gauss sweeps");
        sub->add_option("--r", o.r, "number of colors");
        sub->add_option("--n-max", o.n_max, "largest interval endpoint searched");
        sub->add_option("--trials", o.trials, "number of random trials");
        sub->add_option("--seed", o.seed, "random seed");
        sub->add_option("--max-nodes", o.max_nodes, "search node budget");
        sub->add_option("--max-seconds", o.max_seconds, "search time budget");
        sub->add_option("--equation", o.equation, "coefficients, e.g. \"1,1,-2\"");
        sub->add_option("--forms", o.forms, "K-family forms as JSON (default: pairs-equal)");
        sub->add_option("--format", o.format, "output format: json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--output", o.output, "output path (default: stdout or $SQTRANSFER_OUTDIR)");
        sub->add_option("--config", o.config, "JSON config file overriding flags");
    }

    CLI11_PARSE(app, argc, argv);
    std::string cmd = app.get_subcommands().front()->get_name();
    try {
        if (!o.config.empty()) apply_config(o, o.config);
        return run_command(cmd, o);
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid config: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
