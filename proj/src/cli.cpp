#include "tempsub/cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "tempsub/conjugate.hpp"
#include "tempsub/cumulant.hpp"
#include "tempsub/errors.hpp"
#include "tempsub/format.hpp"
#include "tempsub/ldp.hpp"
#include "tempsub/mlf.hpp"
#include "tempsub/parallel.hpp"
#include "tempsub/simulate.hpp"
#include "tempsub/timechange.hpp"

namespace tempsub::cli {

namespace {

using nlohmann::json;

constexpr const char* kVersion = "tempsub 0.1.0";

void expect_keys(const json& obj, std::initializer_list<const char*> allowed,
                 const std::string& where) {
    if (!obj.is_object()) throw ConfigInvalid(where + " must be a JSON object");
    for (const auto& [key, _] : obj.items()) {
        bool ok = false;
        for (const char* a : allowed) {
            if (key == a) {
                ok = true;
                break;
            }
        }
        if (!ok) throw ConfigInvalid("unknown key \"" + key + "\" in " + where);
    }
}

double get_num(const json& obj, const std::string& key) {
    if (!obj.contains(key) || !obj[key].is_number()) {
        throw ConfigInvalid("missing or non-numeric \"" + key + "\"");
    }
    return obj[key].get<double>();
}

double get_num_or(const json& obj, const std::string& key, double fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj[key].is_number()) throw ConfigInvalid("non-numeric \"" + key + "\"");
    return obj[key].get<double>();
}

std::int64_t get_int(const json& obj, const std::string& key) {
    if (!obj.contains(key) || !obj[key].is_number_integer()) {
        throw ConfigInvalid("missing or non-integer \"" + key + "\"");
    }
    return obj[key].get<std::int64_t>();
}

std::string get_str(const json& obj, const std::string& key) {
    if (!obj.contains(key) || !obj[key].is_string()) {
        throw ConfigInvalid("missing or non-string \"" + key + "\"");
    }
    return obj[key].get<std::string>();
}

std::vector<double> get_vec(const json& obj, const std::string& key) {
    if (!obj.contains(key) || !obj[key].is_array()) {
        throw ConfigInvalid("missing or non-array \"" + key + "\"");
    }
    std::vector<double> out;
    for (const auto& v : obj[key]) {
        if (!v.is_number()) throw ConfigInvalid("non-numeric entry in \"" + key + "\"");
        out.push_back(v.get<double>());
    }
    return out;
}

ParamSet parse_params(const json& cfg) {
    if (!cfg.contains("params")) throw ConfigInvalid("missing \"params\"");
    const json& p = cfg["params"];
    expect_keys(p, {"gamma", "lambda", "theta", "delta"}, "params");
    try {
        return ParamSet::validate(get_num(p, "gamma"), get_num(p, "lambda"),
                                  get_num_or(p, "theta", 0.0), get_num_or(p, "delta", 0.0));
    } catch (const std::invalid_argument& e) {
        throw ConfigInvalid(std::string("invalid params: ") + e.what());
    }
}

std::vector<double> parse_grid(const json& cfg, const std::string& key) {
    if (!cfg.contains(key)) throw ConfigInvalid("missing \"" + key + "\"");
    const json& g = cfg[key];
    if (g.is_object() && g.contains("points")) {
        expect_keys(g, {"points"}, key);
        auto pts = get_vec(g, "points");
        if (pts.empty()) throw ConfigInvalid("\"" + key + ".points\" must be nonempty");
        return pts;
    }
    expect_keys(g, {"min", "max", "n", "scale"}, key);
    const double lo = get_num(g, "min");
    const double hi = get_num(g, "max");
    const std::int64_t n = get_int(g, "n");
    std::string scale = "linear";
    if (g.contains("scale")) scale = get_str(g, "scale");
    if (n < 1 || !(hi >= lo)) throw ConfigInvalid("grid needs n >= 1 and max >= min");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n));
    if (scale == "linear") {
        for (std::int64_t i = 0; i < n; ++i) {
            out.push_back(n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) /
                                                 static_cast<double>(n - 1));
        }
    } else if (scale == "log") {
        if (!(lo > 0.0)) throw ConfigInvalid("log grid needs min > 0");
        const double llo = std::log(lo), lhi = std::log(hi);
        for (std::int64_t i = 0; i < n; ++i) {
            out.push_back(n == 1 ? lo
                                 : std::exp(llo + (lhi - llo) * static_cast<double>(i) /
                                                      static_cast<double>(n - 1)));
        }
    } else {
        throw ConfigInvalid("grid scale must be \"linear\" or \"log\"");
    }
    return out;
}

std::uint64_t require_seed(const json& cfg) {
    if (!cfg.contains("seed") || !cfg["seed"].is_number_unsigned()) {
        throw ConfigInvalid("\"seed\" (unsigned integer) is mandatory for stochastic commands");
    }
    return cfg["seed"].get<std::uint64_t>();
}

LevyProcess parse_levy(const json& cfg) {
    if (!cfg.contains("levy")) throw ConfigInvalid("missing \"levy\"");
    const json& l = cfg["levy"];
    const std::string type = get_str(l, "type");
    try {
        if (type == "drift") {
            expect_keys(l, {"type", "mu"}, "levy");
            return levy_drift(get_num(l, "mu"));
        }
        if (type == "brownian") {
            expect_keys(l, {"type", "mu", "sigma"}, "levy");
            return levy_brownian_with_drift(get_num(l, "mu"), get_num(l, "sigma"));
        }
        if (type == "cp_exp") {
            expect_keys(l, {"type", "rate", "jump_mean"}, "levy");
            return levy_compound_poisson_exp(get_num(l, "rate"), get_num(l, "jump_mean"));
        }
        if (type == "custom") {
            expect_keys(l, {"type", "eta", "values"}, "levy");
            LevyProcess lp;
            lp.exponent = levy_custom_sampled(get_vec(l, "eta"), get_vec(l, "values"));
            return lp;
        }
    } catch (const std::invalid_argument& e) {
        throw ConfigInvalid(std::string("invalid levy spec: ") + e.what());
    }
    throw ConfigInvalid("levy type must be drift | brownian | cp_exp | custom");
}

struct OutputSink {
    std::string path;       // "-" writes to stdout, no manifest
    std::ostringstream data;

    [[nodiscard]] bool to_stdout() const { return path == "-"; }
};

void flush_outputs(OutputSink& sink, const json& manifest) {
    if (sink.to_stdout()) {
        fputs(sink.data.str().c_str(), stdout);
        return;
    }
    {
        std::ofstream f(sink.path, std::ios::binary);
        if (!f) throw std::ios_base::failure("cannot open output file " + sink.path);
        f << sink.data.str();
        if (!f) throw std::ios_base::failure("short write to " + sink.path);
    }
    std::ofstream m(sink.path + ".manifest.json", std::ios::binary);
    if (!m) throw std::ios_base::failure("cannot open manifest for " + sink.path);
    m << manifest.dump(2) << "\n";
}

json base_manifest(const Request& req, const json& cfg) {
    json m;
    m["command"] = req.command;
    m["config"] = cfg;
    m["version"] = kVersion;
    m["threads"] = resolve_threads();
    const auto now = std::chrono::system_clock::now();
    m["timestamp_unix"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                              now.time_since_epoch())
                              .count();
    return m;
}

// ---- subcommands ------------------------------------------------------

void run_rate(const json& cfg, OutputSink& sink) {
    expect_keys(cfg, {"params", "function", "grid", "out", "seed"}, "rate config");
    const ParamSet p = parse_params(cfg);
    const std::string fn = get_str(cfg, "function");
    const auto grid = parse_grid(cfg, "grid");

    std::function<ExtReal(double)> eval;
    if (fn == "kappa") {
        const CumulantFn c(p);
        eval = [c](double y) { return c(y); };
    } else if (fn == "kappa_star") {
        eval = [p](double x) { return x == 0.0 ? kappa_star_at_zero(p) : kappa_star_closed(p, x); };
    } else if (fn == "psi") {
        eval = [p](double x) { return psi(p, x); };
    } else if (fn == "lambda") {
        eval = [p](double y) { return lambda_inverse_rate(p, y); };
    } else if (fn == "tilde_psi") {
        eval = [p](double z) { return ExtReal::finite(tilde_psi(p, z)); };
    } else {
        throw ConfigInvalid("function must be kappa | kappa_star | psi | lambda | tilde_psi");
    }

    sink.data << "x,value\n";
    for (double x : grid) {
        sink.data << format_double(x) << "," << format_ext(eval(x)) << "\n";
    }
}

void run_conjugate(const json& cfg, OutputSink& sink) {
    expect_keys(cfg, {"params", "grid", "tol", "out", "seed"}, "conjugate config");
    const ParamSet p = parse_params(cfg);
    if (p.delta() != 0.0) {
        throw ConfigInvalid("conjugate compares closed forms; requires delta = 0");
    }
    const auto grid = parse_grid(cfg, "grid");
    const double tol = get_num_or(cfg, "tol", 1e-12);
    const ConvexFn kc = cumulant_convex(CumulantFn(p));

    sink.data << "x,closed_form,numeric,abs_err\n";
    for (double x : grid) {
        const ExtReal closed = x == 0.0 ? kappa_star_at_zero(p) : kappa_star_closed(p, x);
        const ExtReal numeric = legendre_numeric(kc, x, tol).value;
        const double err = (closed.is_infinite() && numeric.is_infinite())
                               ? 0.0
                               : std::fabs(closed.as_double() - numeric.as_double());
        sink.data << format_double(x) << "," << format_ext(closed) << "," << format_ext(numeric)
                  << "," << format_double(err) << "\n";
    }
}

void run_mlf(const json& cfg, OutputSink& sink) {
    expect_keys(cfg, {"gamma", "x", "curve", "out", "seed"}, "mlf config");
    const double gamma = get_num(cfg, "gamma");
    json out;
    if (cfg.contains("curve")) {
        const json& cu = cfg["curve"];
        expect_keys(cu, {"y", "lambda", "t"}, "mlf curve");
        const double y = get_num(cu, "y");
        const double lambda = get_num_or(cu, "lambda", 1.0);
        const auto t_grid = get_vec(cu, "t");
        const ParamSet p = ParamSet::validate(gamma, lambda, 0.0, 0.0);
        const auto values = inverse_mgf_limit_curve(p, y, t_grid);
        out["gamma"] = gamma;
        out["lambda"] = lambda;
        out["y"] = y;
        out["t"] = t_grid;
        out["value"] = values;
        out["limit"] = y >= 0.0 ? std::pow(y / lambda, 1.0 / gamma) : 0.0;
    } else {
        const double x = get_num(cfg, "x");
        const MlfEval ev = log_mittag_leffler(gamma, x);
        out["gamma"] = ev.gamma;
        out["x"] = ev.x;
        out["log_value"] = ev.log_value;
        out["branch"] = to_string(ev.branch);
    }
    sink.data << out.dump() << "\n";
}

void run_simulate(const json& cfg, OutputSink& sink) {
    expect_keys(cfg, {"params", "mode", "n", "t", "step", "out", "seed"}, "simulate config");
    const ParamSet p = parse_params(cfg);
    const std::uint64_t seed = require_seed(cfg);
    const std::int64_t n = get_int(cfg, "n");
    if (n < 1) throw ConfigInvalid("\"n\" must be >= 1");
    std::string mode = "draws";
    if (cfg.contains("mode")) mode = get_str(cfg, "mode");
    const double t = get_num(cfg, "t");
    if (!(t > 0.0)) throw ConfigInvalid("\"t\" must be > 0");

    if (mode == "draws") {
        std::vector<double> draws(static_cast<std::size_t>(n));
        parallel_for(n, resolve_threads(), [&](std::int64_t b, std::int64_t e) {
            for (std::int64_t i = b; i < e; ++i) {
                RngStream rng(seed, static_cast<std::uint64_t>(i));
                draws[static_cast<std::size_t>(i)] = sample_increment(p, t, rng);
            }
        });
        sink.data << "draw\n";
        for (double d : draws) sink.data << format_double(d) << "\n";
        return;
    }
    if (mode == "passage") {
        const double step = get_num(cfg, "step");
        std::vector<PassageResult> results(static_cast<std::size_t>(n));
        parallel_for(n, resolve_threads(), [&](std::int64_t b, std::int64_t e) {
            for (std::int64_t i = b; i < e; ++i) {
                RngStream rng(seed, static_cast<std::uint64_t>(i));
                results[static_cast<std::size_t>(i)] = inverse_passage(p, t, step, rng);
            }
        });
        for (const auto& r : results) {
            json rec;
            rec["t"] = r.t;
            rec["t_hat"] = r.t_hat;
            rec["bias_bound"] = r.bias_bound;
            sink.data << rec.dump() << "\n";
        }
        return;
    }
    throw ConfigInvalid("mode must be draws | passage");
}

void run_verify(const json& cfg, OutputSink& sink) {
    const std::string experiment =
        cfg.contains("experiment") ? get_str(cfg, "experiment") : std::string();

    if (experiment == "invariance") {
        expect_keys(cfg,
                    {"experiment", "gammas", "lambda", "theta_grid", "y_grid", "times", "tol",
                     "out", "seed"},
                    "verify invariance config");
        const auto gammas = get_vec(cfg, "gammas");
        const double lambda = get_num(cfg, "lambda");
        const auto thetas = get_vec(cfg, "theta_grid");
        const auto ys = get_vec(cfg, "y_grid");
        const auto times = get_vec(cfg, "times");
        const double tol = get_num_or(cfg, "tol", 1e-12);
        for (double gamma : gammas) {
            const double resid = theta_invariance_check(gamma, lambda, thetas, ys, times);
            json rec;
            rec["experiment"] = "invariance";
            rec["gamma"] = gamma;
            rec["max_residual"] = resid;
            rec["tol"] = tol;
            rec["pass"] = resid <= tol;
            sink.data << rec.dump() << "\n";
        }
        return;
    }

    if (experiment == "rate-i") {
        expect_keys(cfg, {"experiment", "gamma", "lambda", "times", "xs", "out", "seed"},
                    "verify rate-i config");
        const double gamma = get_num(cfg, "gamma");
        const double lambda = get_num(cfg, "lambda");
        const auto times = get_vec(cfg, "times");
        if (!cfg.contains("xs") || !cfg["xs"].is_array()) {
            throw ConfigInvalid("missing \"xs\" (array of x vectors)");
        }
        for (const auto& xv : cfg["xs"]) {
            std::vector<double> xs;
            for (const auto& v : xv) xs.push_back(v.get<double>());
            json rec;
            rec["experiment"] = "rate-i";
            rec["x"] = xs;
            rec["value"] = format_ext(rate_I(gamma, lambda, times, xs));
            sink.data << rec.dump() << "\n";
        }
        // the vanishing point x_i = dt_i * lambda * sgn(gamma) * gamma
        std::vector<double> zero_x;
        double prev = 0.0;
        for (double t : times) {
            zero_x.push_back((t - prev) * lambda * (gamma < 0 ? -1.0 : 1.0) * gamma);
            prev = t;
        }
        json rec;
        rec["experiment"] = "rate-i";
        rec["zero_x"] = zero_x;
        rec["value_at_zero"] = format_ext(rate_I(gamma, lambda, times, zero_x));
        sink.data << rec.dump() << "\n";
        return;
    }

    if (experiment == "tail") {
        expect_keys(cfg, {"experiment", "params", "t", "x", "x_factor", "n", "plain", "out",
                          "seed"},
                    "verify tail config");
        const ParamSet p = parse_params(cfg);
        const std::uint64_t seed = require_seed(cfg);
        const double t = get_num(cfg, "t");
        const std::int64_t n = get_int(cfg, "n");
        if (n < 1) throw ConfigInvalid("\"n\" must be >= 1");
        double x;
        if (cfg.contains("x")) {
            x = get_num(cfg, "x");
        } else {
            x = get_num(cfg, "x_factor") * CumulantFn(p).mean();
        }
        const bool plain = cfg.contains("plain") && cfg["plain"].get<bool>();
        const TailEstimate te = tilted_tail_estimator(p, t, x, n, seed, 0, 0, plain);
        json rec;
        rec["experiment"] = "tail";
        rec["t"] = t;
        rec["x"] = x;
        rec["n"] = n;
        rec["plain"] = plain;
        rec["tilt_y"] = te.tilt_y;
        rec["p_hat"] = te.p_hat;
        rec["p_se"] = te.p_se;
        rec["hits"] = te.estimate.hits;
        rec["emp_rate"] = format_ext(te.estimate.emp_rate);
        rec["ci_halfwidth"] = te.estimate.ci_halfwidth;
        rec["kappa_star"] = te.kappa_star;
        if (te.estimate.emp_rate.is_finite() && te.kappa_star > 0.0) {
            rec["rel_err"] = std::fabs(te.estimate.emp_rate.value() - te.kappa_star) /
                             te.kappa_star;
        }
        sink.data << rec.dump() << "\n";
        return;
    }

    if (experiment == "moderate") {
        expect_keys(cfg,
                    {"experiment", "gamma", "lambda", "g", "power", "direction", "theta_grid",
                     "y_grid", "times", "tol", "out", "seed"},
                    "verify moderate config");
        const double gamma = get_num(cfg, "gamma");
        const double lambda = get_num(cfg, "lambda");
        const double g = get_num(cfg, "g");
        const double power = get_num(cfg, "power");
        const ThetaLimit limit = get_str(cfg, "direction") == "to_zero" ? ThetaLimit::ToZero
                                                                        : ThetaLimit::ToInfinity;
        const auto thetas = get_vec(cfg, "theta_grid");
        const auto ys = get_vec(cfg, "y_grid");
        const auto times = get_vec(cfg, "times");
        const double tol = get_num_or(cfg, "tol", 1e-12);
        ScalingSpec spec = ScalingSpec::moderate_power(gamma, g, power, limit);
        for (double theta : thetas) {
            // Analytic reduction: the moderate-mode log-MGF must equal the
            // a-scaled unit-theta cumulant sum for every y.
            const double a = spec.a_theta(theta);
            const CumulantFn scaled(ParamSet::validate(gamma, lambda, theta, 0.0));
            const CumulantFn unit(ParamSet::validate(gamma, lambda, 1.0, 0.0));
            double resid = 0.0;
            for (double y : ys) {
                double prev = 0.0;
                for (double tpt : times) {
                    const double dt = tpt - prev;
                    prev = tpt;
                    const double lhs =
                        dt / (a * std::pow(theta, gamma)) * scaled(theta * (a * y)).value();
                    const double rhs = dt / a * unit(a * y).value();
                    resid = std::max(resid, std::fabs(lhs - rhs));
                }
            }
            json rec;
            rec["experiment"] = "moderate";
            rec["theta"] = theta;
            rec["a_theta"] = a;
            rec["speed"] = spec.speed(theta);
            rec["max_mgf_residual"] = resid;
            rec["pass"] = resid <= tol;
            sink.data << rec.dump() << "\n";
        }
        return;
    }

    throw ConfigInvalid("experiment must be invariance | rate-i | tail | moderate");
}

void run_timechange(const json& cfg, OutputSink& sink) {
    expect_keys(cfg, {"params", "levy", "grid", "tol", "out", "seed"}, "timechange config");
    const ParamSet p = parse_params(cfg);
    const LevyProcess lp = parse_levy(cfg);
    const auto grid = parse_grid(cfg, "grid");
    const double tol = get_num_or(cfg, "tol", 1e-10);
    HRateFn h(p, lp.exponent);
    sink.data << "x,h\n";
    for (double x : grid) {
        sink.data << format_double(x) << "," << format_ext(h_rate(h, x, tol)) << "\n";
    }
}

}  // namespace

int run(const Request& req, std::ostream& err) {
    auto fail = [&err](const char* kind, const std::string& msg, int code) {
        json rec;
        rec["error"] = kind;
        rec["message"] = msg;
        err << rec.dump() << "\n";
        return code;
    };

    json cfg;
    try {
        cfg = json::parse(req.config_json);
    } catch (const json::parse_error& e) {
        return fail("ConfigInvalid", std::string("config is not valid JSON: ") + e.what(), 2);
    }
    if (!cfg.is_object()) return fail("ConfigInvalid", "config must be a JSON object", 2);
    if (req.seed_override) cfg["seed"] = *req.seed_override;
    if (req.out_override) cfg["out"] = *req.out_override;

    OutputSink sink;
    sink.path = cfg.contains("out") ? cfg["out"].get<std::string>() : "-";

    const auto t0 = std::chrono::steady_clock::now();
    try {
        if (req.command == "rate") {
            run_rate(cfg, sink);
        } else if (req.command == "conjugate") {
            run_conjugate(cfg, sink);
        } else if (req.command == "mlf") {
            run_mlf(cfg, sink);
        } else if (req.command == "simulate") {
            run_simulate(cfg, sink);
        } else if (req.command == "verify") {
            run_verify(cfg, sink);
        } else if (req.command == "timechange") {
            run_timechange(cfg, sink);
        } else {
            return fail("ConfigInvalid", "unknown command \"" + req.command + "\"", 2);
        }
    } catch (const ConfigInvalid& e) {
        return fail("ConfigInvalid", e.what(), 2);
    } catch (const std::ios_base::failure& e) {
        return fail("IoError", e.what(), 4);
    } catch (const std::exception& e) {  // module errors, wrapped with context
        return fail("UpstreamError",
                    std::string(typeid(e).name()) + ": " + e.what() + " (command " +
                        req.command + ")",
                    3);
    }

    json manifest = base_manifest(req, cfg);
    manifest["wall_time_s"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    manifest["output"] = sink.path;
    try {
        flush_outputs(sink, manifest);
    } catch (const std::ios_base::failure& e) {
        return fail("IoError", e.what(), 4);
    }
    return 0;
}

}  // namespace tempsub::cli
