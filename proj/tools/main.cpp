// lpsum: exponent tables, multilinear norm estimation and growth experiments
// for coefficients of maps between l_p spaces.
//
// Exit codes: 0 success, 2 domain/region error, 3 I/O or parse error.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lpsum/constructions.hpp"
#include "lpsum/experiments.hpp"
#include "lpsum/exponent_calculus.hpp"
#include "lpsum/norm_estimator.hpp"
#include "lpsum/tensor_io.hpp"

namespace {

using namespace lpsum;
using nlohmann::ordered_json;

constexpr int kExitDomain = 2;
constexpr int kExitParse = 3;

ExtExponent parse_exponent(const std::string& text, const std::string& flag) {
    const auto e = ExtExponent::parse(text);
    if (!e) raise(Errc::parse_error, "cannot parse " + flag + " = '" + text + "' as an exponent");
    return *e;
}

DomainVector parse_domain(const std::string& text) {
    std::vector<ExtExponent> ps;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string tok =
            text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        ps.push_back(parse_exponent(tok, "--p"));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (ps.empty()) raise(Errc::parse_error, "--p needs at least one exponent");
    return DomainVector(std::move(ps));
}

std::vector<std::size_t> parse_grid(const std::string& text) {
    std::vector<std::size_t> ns;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string tok =
            text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        try {
            ns.push_back(static_cast<std::size_t>(std::stoull(tok)));
        } catch (const std::exception&) {
            raise(Errc::parse_error, "cannot parse --n entry '" + tok + "'");
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return ns;
}

NormSource parse_norm_source(const std::string& text) {
    if (text == "estimate") return NormSource::estimate;
    if (text == "analytic" || text == "analytic-bound" || text == "bound") return NormSource::analytic_bound;
    if (text == "oracle") return NormSource::oracle;
    raise(Errc::parse_error, "unknown --norm-source '" + text + "'");
}

Family parse_family_or_throw(const std::string& text) {
    const auto f = parse_family(text);
    if (!f) raise(Errc::parse_error, "unknown --family '" + text + "'");
    return *f;
}

// ---------------------------------------------------------------------------

struct ExponentArgs {
    std::string kind;
    std::string u, q, r, p;
    int m = 0;
    std::string case_label;
    std::string format = "json";
};

int run_exponent(const ExponentArgs& args) {
    ordered_json report;
    const auto put_result = [&report](const ExponentResult& res) {
        report["rho"] = res.rho.to_string();
        report["case"] = std::string(to_string(res.label));
        report["optimal_known"] = res.optimality_known;
        if (!res.applicable) report["applicable"] = false;
    };

    if (args.kind == "polynomial") {
        if (args.u.empty() || args.q.empty() || args.p.empty() || args.m < 1)
            raise(Errc::parse_error, "polynomial needs --u --q --p --m");
        put_result(polynomial_exponent(parse_exponent(args.u, "--u"), parse_exponent(args.q, "--q"),
                                       parse_exponent(args.p, "--p"), args.m));
    } else if (args.kind == "multilinear") {
        if (args.r.empty() || args.q.empty() || args.p.empty())
            raise(Errc::parse_error, "multilinear needs --r --q --p");
        put_result(multilinear_exponent(parse_exponent(args.r, "--r"), parse_exponent(args.q, "--q"),
                                        parse_domain(args.p)));
    } else if (args.kind == "praciano") {
        if (args.p.empty()) raise(Errc::parse_error, "praciano needs --p");
        put_result(praciano_exponent(parse_domain(args.p)));
    } else if (args.kind == "lp-valued") {
        if (args.u.empty() || args.q.empty() || args.p.empty())
            raise(Errc::parse_error, "lp-valued needs --u --q --p");
        const ExtExponent u = parse_exponent(args.u, "--u");
        const ExtExponent q = parse_exponent(args.q, "--q");
        const DomainVector ps = parse_domain(args.p);
        if (!args.case_label.empty()) {
            const auto c = parse_case_label(args.case_label);
            if (!c) raise(Errc::parse_error, "unknown --case '" + args.case_label + "'");
            put_result(lp_valued_case(*c, u, q, ps));
        } else {
            put_result(lp_valued_exponent(u, q, ps));
        }
    } else if (args.kind == "kwapien") {
        if (args.q.empty() || args.p.empty()) raise(Errc::parse_error, "kwapien needs --q --p");
        put_result(kwapien_exponent(parse_exponent(args.q, "--q"), parse_domain(args.p)));
    } else if (args.kind == "bennett-carl") {
        if (args.u.empty() || args.q.empty()) raise(Errc::parse_error, "bennett-carl needs --u --q");
        report["rho"] =
            bennett_carl_r(parse_exponent(args.u, "--u"), parse_exponent(args.q, "--q")).to_string();
    } else if (args.kind == "zalduendo") {
        if (args.p.empty() || args.m < 1) raise(Errc::parse_error, "zalduendo needs --p --m");
        report["rho"] = zalduendo_exponent(parse_exponent(args.p, "--p"), args.m).to_string();
    } else if (args.kind == "cotype") {
        if (args.q.empty()) raise(Errc::parse_error, "cotype needs --q");
        const ExtExponent c = cotype_of_lq(parse_exponent(args.q, "--q"));
        report["rho"] = c.to_string();
        if (c.is_infinite()) report["no_finite_cotype"] = true;
    } else {
        raise(Errc::parse_error, "unknown --kind '" + args.kind + "'");
    }

    if (args.format == "csv") {
        std::cout << "name,value\n";
        for (const auto& [key, value] : report.items()) std::cout << key << "," << value.dump() << "\n";
    } else {
        std::cout << report.dump() << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------

struct NormArgs {
    std::string tensor_file;
    std::string p, u, q;
    int restarts = 64;
    int max_sweeps = 200;
    double tol = 1e-10;
    std::uint64_t seed = 42;
    std::string format = "json";
    bool print_maximizer = false;
};

int run_norm(const NormArgs& args) {
    const CoefficientTensor tensor = load_tensor(args.tensor_file);
    const DomainVector ps = parse_domain(args.p);
    if (ps.arity() != tensor.arity())
        raise(Errc::dimension_mismatch, "--p has arity " + std::to_string(ps.arity()) + " but the tensor is " +
                                            std::to_string(tensor.arity()) + "-linear");

    MultilinearSpec spec = MultilinearSpec::scalar(ps);
    if (tensor.vector_valued()) {
        if (args.u.empty()) raise(Errc::dimension_mismatch, "vector-valued tensor needs --u");
        const ExtExponent u = parse_exponent(args.u, "--u");
        spec = args.q.empty() ? MultilinearSpec::vector_valued(ps, u)
                              : MultilinearSpec::vector_valued(ps, u, parse_exponent(args.q, "--q"));
    } else if (!args.u.empty()) {
        raise(Errc::dimension_mismatch, "--u given but the tensor is scalar-valued");
    }

    EstimatorConfig cfg;
    cfg.restarts = args.restarts;
    cfg.max_sweeps = args.max_sweeps;
    cfg.rel_tol = args.tol;
    cfg.seed = args.seed;
    const NormEstimate est = estimate_norm(tensor, spec, cfg);

    if (args.format == "csv") {
        write_report_csv(std::cout, {{"value", est.value},
                                     {"converged", est.converged ? 1.0 : 0.0},
                                     {"restarts_used", static_cast<double>(est.restarts_used)},
                                     {"iterations", static_cast<double>(est.iterations)},
                                     {"seed", static_cast<double>(args.seed)}});
        return 0;
    }
    ordered_json report;
    report["value"] = est.value;
    report["converged"] = est.converged;
    report["restarts_used"] = est.restarts_used;
    report["iterations"] = est.iterations;
    report["seed"] = args.seed;
    if (args.print_maximizer) {
        auto& vectors = report["maximizer"] = ordered_json::array();
        for (const auto& x : est.maximizer) {
            ordered_json v = ordered_json::array();
            for (const Complex& c : x) v.push_back({c.real(), c.imag()});
            vectors.push_back(std::move(v));
        }
    }
    std::cout << report.dump() << "\n";
    return 0;
}

// ---------------------------------------------------------------------------

struct SweepArgs {
    std::string family;
    std::string p, u, q;
    std::string t = "auto";
    std::string n = "4,8,16,32";
    std::uint64_t seed = 42;
    int restarts = 64;
    std::string norm_source;  // default depends on the command
    std::string format = "text";
    std::string dump_tensor;
};

FamilySpec family_from_args(const SweepArgs& args) {
    FamilySpec fs{parse_family_or_throw(args.family), parse_domain(args.p), std::nullopt, std::nullopt,
                  args.seed};
    if (!args.u.empty()) fs.u = parse_exponent(args.u, "--u");
    if (!args.q.empty()) fs.q = parse_exponent(args.q, "--q");
    return fs;
}

ordered_json family_params_json(const FamilySpec& fs) {
    ordered_json params;
    params["p"] = fs.domain.to_string();
    if (fs.u) params["u"] = fs.u->to_string();
    if (fs.q || fs.family == Family::fourier) params["q"] = fs.measure_or_default().to_string();
    params["seed"] = fs.seed;
    return params;
}

int run_sweep(const std::string& command, const SweepArgs& args) {
    const FamilySpec fs = family_from_args(args);
    const std::vector<std::size_t> grid = parse_grid(args.n);
    const NormSource source = args.norm_source.empty()
                                  ? (command == "growth" ? NormSource::analytic_bound : NormSource::estimate)
                                  : parse_norm_source(args.norm_source);

    const ExtExponent t_star = family_target_exponent(fs);
    const ExtExponent t = args.t == "auto" ? t_star : parse_exponent(args.t, "--t");

    EstimatorConfig cfg;
    cfg.restarts = args.restarts;
    cfg.seed = args.seed;

    const SweepResult sweep = sweep_inequality(fs, t, grid, cfg, source);
    const GrowthFit fit = fit_growth(sweep.n_values, sweep.ratio_values);

    if (!args.dump_tensor.empty()) save_tensor(args.dump_tensor, make_construction(fs, grid.back()).tensor);

    // expected log-log exponent of the ratio when t sits below the witness
    const double expected =
        std::max(0.0, t.recip().to_double() - t_star.recip().to_double());
    const bool pass = fit.slope <= 0.05;

    ordered_json report;
    report["command"] = command;
    report["family"] = std::string(to_string(fs.family));
    report["params"] = family_params_json(fs);
    report["t"] = t.to_string();
    report["slope"] = fit.slope;
    report["expected_exponent"] = expected;
    report["pass"] = pass;
    report["norm_source"] = std::string(to_string(source));

    if (args.format == "json") {
        auto& rows = report["rows"] = ordered_json::array();
        for (std::size_t i = 0; i < sweep.n_values.size(); ++i)
            rows.push_back({{"n", sweep.n_values[i]},
                            {"lhs", sweep.lhs_values[i]},
                            {"norm", sweep.norm_values[i]},
                            {"ratio", sweep.ratio_values[i]}});
        std::cout << report.dump() << "\n";
    } else if (args.format == "csv") {
        write_sweep_csv(std::cout, sweep);
    } else {
        write_sweep_csv(std::cout, sweep);
        std::cout << report.dump() << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------

struct MixedArgs {
    std::string p;
    std::string q = "2";
    int trials = 100;
    std::size_t n = 3;
    std::uint64_t seed = 42;
    std::string norm_source = "oracle";
    std::string format = "json";
};

int run_mixed(const MixedArgs& args) {
    const DomainVector ps = parse_domain(args.p);
    const ExtExponent q = parse_exponent(args.q, "--q");
    EstimatorConfig cfg;
    cfg.seed = args.seed;
    const double worst = mixed_sum_check(ps, q, args.trials, args.n, cfg, parse_norm_source(args.norm_source));
    const double bound = std::pow(std::sqrt(2.0), ps.arity() - 1);

    if (args.format == "csv") {
        write_report_csv(std::cout, {{"worst_ratio", worst},
                                     {"bound", bound},
                                     {"pass", worst <= bound * 1.05 ? 1.0 : 0.0},
                                     {"seed", static_cast<double>(args.seed)}});
        return 0;
    }
    ordered_json report;
    report["command"] = "mixed";
    report["p"] = ps.to_string();
    report["q"] = q.to_string();
    report["trials"] = args.trials;
    report["n"] = args.n;
    report["worst_ratio"] = worst;
    report["bound"] = bound;
    report["pass"] = worst <= bound * 1.05;
    report["seed"] = args.seed;
    std::cout << report.dump() << "\n";
    return 0;
}

struct ChevetArgs {
    std::string p;
    std::string n = "4,8,16,32";
    int samples = 32;
    int restarts = 24;
    std::uint64_t seed = 42;
    std::string format = "json";
};

int run_chevet(const ChevetArgs& args) {
    const DomainVector ps = parse_domain(args.p);
    EstimatorConfig cfg;
    cfg.seed = args.seed;
    cfg.restarts = args.restarts;
    const auto grid = parse_grid(args.n);
    const GrowthFit fit = chevet_growth(ps, grid, args.samples, cfg);
    const double bound = chevet_bound_exponent(ps).to_double();

    if (args.format == "csv") {
        write_report_csv(std::cout, {{"slope", fit.slope},
                                     {"bound_exponent", bound},
                                     {"pass", fit.slope <= bound + 0.1 ? 1.0 : 0.0},
                                     {"seed", static_cast<double>(args.seed)}});
        return 0;
    }
    ordered_json report;
    report["command"] = "chevet";
    report["p"] = ps.to_string();
    report["n"] = grid;
    report["samples"] = args.samples;
    report["slope"] = fit.slope;
    report["bound_exponent"] = bound;
    report["pass"] = fit.slope <= bound + 0.1;
    report["seed"] = args.seed;
    std::cout << report.dump() << "\n";
    return 0;
}

struct ConstructArgs {
    std::string family;
    std::size_t n = 4;
    std::string p, u;
    std::uint64_t seed = 42;
    std::string out;
};

int run_construct(const ConstructArgs& args) {
    SweepArgs tmp;
    tmp.family = args.family;
    tmp.p = args.p;
    tmp.u = args.u;
    tmp.seed = args.seed;
    const FamilySpec fs = family_from_args(tmp);
    const ConstructionOutput c = make_construction(fs, args.n);
    save_tensor(args.out, c.tensor);

    ordered_json report;
    report["file"] = args.out;
    report["family"] = std::string(to_string(fs.family));
    report["n"] = args.n;
    report["m"] = c.tensor.arity();
    report["dims"] = c.tensor.dims();
    report["target_dim"] = c.tensor.target_dim();
    report["seed"] = args.seed;
    if (!c.norm_upper_bound_formula.empty()) {
        report["norm_upper_bound"] = c.norm_upper_bound;
        report["norm_upper_bound_formula"] = c.norm_upper_bound_formula;
    }
    std::cout << report.dump() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"summability exponents and norm experiments for multilinear maps on l_p spaces"};
    app.require_subcommand(1);

    ExponentArgs exp_args;
    auto* exp_cmd = app.add_subcommand("exponent", "evaluate one of the exponent tables");
    exp_cmd->add_option("--kind", exp_args.kind,
                        "polynomial|multilinear|praciano|lp-valued|kwapien|bennett-carl|zalduendo|cotype")
        ->required();
    exp_cmd->add_option("--u", exp_args.u, "target space exponent u");
    exp_cmd->add_option("--q", exp_args.q, "measuring/cotype exponent q");
    exp_cmd->add_option("--r", exp_args.r, "summing index r");
    exp_cmd->add_option("--p", exp_args.p, "domain exponent(s), comma separated; 'inf' allowed");
    exp_cmd->add_option("--m", exp_args.m, "arity / polynomial degree");
    exp_cmd->add_option("--case", exp_args.case_label,
                        "evaluate one lp-valued region formula (I_A, I_B, II_A, II_B, III) regardless of "
                        "membership");
    exp_cmd->add_option("--format", exp_args.format, "json|csv");

    NormArgs norm_args;
    auto* norm_cmd = app.add_subcommand("norm", "estimate the operator norm of a tensor file");
    norm_cmd->add_option("--tensor", norm_args.tensor_file, "tensor JSON file")->required();
    norm_cmd->add_option("--p", norm_args.p, "domain exponents")->required();
    norm_cmd->add_option("--u", norm_args.u, "target exponent (vector-valued tensors)");
    norm_cmd->add_option("--q", norm_args.q, "coefficient-measuring exponent");
    norm_cmd->add_option("--restarts", norm_args.restarts, "random restarts");
    norm_cmd->add_option("--max-sweeps", norm_args.max_sweeps, "sweep cap per restart");
    norm_cmd->add_option("--tol", norm_args.tol, "relative convergence tolerance");
    norm_cmd->add_option("--seed", norm_args.seed, "RNG seed (echoed in the report)");
    norm_cmd->add_option("--format", norm_args.format, "json|csv");
    norm_cmd->add_flag("--print-maximizer", norm_args.print_maximizer, "include the maximizer vectors");

    SweepArgs verify_args, growth_args;
    auto* verify_cmd = app.add_subcommand("verify", "coefficient-sum / norm ratios across dimensions");
    auto* growth_cmd = app.add_subcommand("growth", "log-log slope of the inequality ratio");
    for (auto [cmd, args] : {std::pair{verify_cmd, &verify_args}, std::pair{growth_cmd, &growth_args}}) {
        cmd->add_option("--family", args->family, "diagonal|diagonal-vector|fourier|random-sign")->required();
        cmd->add_option("--p", args->p, "domain exponents")->required();
        cmd->add_option("--u", args->u, "target exponent (vector-valued families)");
        cmd->add_option("--q", args->q, "coefficient-measuring exponent");
        cmd->add_option("--t", args->t, "summability exponent, or 'auto'");
        cmd->add_option("--n", args->n, "dimension grid, comma separated");
        cmd->add_option("--seed", args->seed, "RNG seed");
        cmd->add_option("--restarts", args->restarts, "estimator restarts");
        cmd->add_option("--norm-source", args->norm_source, "estimate|analytic|oracle");
        cmd->add_option("--format", args->format, "text|json|csv");
        cmd->add_option("--dump-tensor", args->dump_tensor, "write the largest construction to a file");
    }

    MixedArgs mixed_args;
    auto* mixed_cmd = app.add_subcommand("mixed", "mixed-sum inequality check on random tensors");
    mixed_cmd->add_option("--p", mixed_args.p, "domain exponents")->required();
    mixed_cmd->add_option("--q", mixed_args.q, "inner exponent");
    mixed_cmd->add_option("--trials", mixed_args.trials, "number of random tensors");
    mixed_cmd->add_option("--n", mixed_args.n, "dimension per axis");
    mixed_cmd->add_option("--seed", mixed_args.seed, "RNG seed");
    mixed_cmd->add_option("--norm-source", mixed_args.norm_source, "oracle|estimate");
    mixed_cmd->add_option("--format", mixed_args.format, "json|csv");

    ChevetArgs chevet_args;
    auto* chevet_cmd = app.add_subcommand("chevet", "growth of mean random-sign form norms");
    chevet_cmd->add_option("--p", chevet_args.p, "domain exponents, all > 2")->required();
    chevet_cmd->add_option("--n", chevet_args.n, "dimension grid");
    chevet_cmd->add_option("--samples", chevet_args.samples, "tensors per dimension");
    chevet_cmd->add_option("--restarts", chevet_args.restarts, "estimator restarts");
    chevet_cmd->add_option("--seed", chevet_args.seed, "RNG seed");
    chevet_cmd->add_option("--format", chevet_args.format, "json|csv");

    ConstructArgs construct_args;
    auto* construct_cmd = app.add_subcommand("construct", "write an extremal construction to a tensor file");
    construct_cmd->add_option("--family", construct_args.family, "diagonal|diagonal-vector|fourier|random-sign")
        ->required();
    construct_cmd->add_option("--n", construct_args.n, "dimension per axis")->required();
    construct_cmd->add_option("--p", construct_args.p, "domain exponents")->required();
    construct_cmd->add_option("--u", construct_args.u, "target exponent (vector-valued families)");
    construct_cmd->add_option("--seed", construct_args.seed, "RNG seed (random-sign)");
    construct_cmd->add_option("--out", construct_args.out, "output tensor JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitParse;
    }

    try {
        if (exp_cmd->parsed()) return run_exponent(exp_args);
        if (norm_cmd->parsed()) return run_norm(norm_args);
        if (verify_cmd->parsed()) return run_sweep("verify", verify_args);
        if (growth_cmd->parsed()) return run_sweep("growth", growth_args);
        if (mixed_cmd->parsed()) return run_mixed(mixed_args);
        if (chevet_cmd->parsed()) return run_chevet(chevet_args);
        if (construct_cmd->parsed()) return run_construct(construct_args);
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return e.code() == Errc::parse_error ? kExitParse : kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return 0;
}
