// Command-line surface for the spectral-set toolkit.
//
// Exit codes: 0 verification passed / command succeeded, 1 verification
// failed (witness in the JSON output), 2 inconclusive or a budget ran out,
// 64 usage or input error.

#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spectra/fourier.hpp"
#include "spectra/io.hpp"
#include "spectra/period.hpp"
#include "spectra/phase_vectors.hpp"
#include "spectra/search.hpp"
#include "spectra/spectrum.hpp"
#include "spectra/verify.hpp"
#include "spectra/zero_set.hpp"

namespace {

using nlohmann::ordered_json;
using namespace spectra;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 64;

struct CommonArgs {
    std::string omega_file;
    std::string omega_inline;
    std::string lambda_file;
    std::string lambda_inline;
    std::string out_dir;
    std::vector<std::string> formats{"json"};
    bool timestamp = false;
};

void add_omega_flags(CLI::App* cmd, CommonArgs& a) {
    auto* f = cmd->add_option("--omega", a.omega_file, "interval union JSON file");
    auto* i = cmd->add_option("--omega-inline", a.omega_inline, "interval union JSON literal");
    f->excludes(i);
}

void add_lambda_flags(CLI::App* cmd, CommonArgs& a) {
    auto* f = cmd->add_option("--lambda", a.lambda_file, "spectrum JSON file");
    auto* i = cmd->add_option("--lambda-inline", a.lambda_inline, "spectrum JSON literal");
    f->excludes(i);
}

void add_output_flags(CLI::App* cmd, CommonArgs& a) {
    cmd->add_option("--out", a.out_dir, "output directory for artifacts");
    cmd->add_option("--format", a.formats, "output formats: json,csv,svg")->delimiter(',');
    cmd->add_flag("--timestamp", a.timestamp, "embed a timestamp in JSON output");
}

IntervalInput require_omega(const CommonArgs& a) {
    if (!a.omega_file.empty()) return parse_interval_union(load_json_file(a.omega_file));
    if (!a.omega_inline.empty())
        return parse_interval_union(nlohmann::json::parse(a.omega_inline));
    throw std::invalid_argument("an interval union is required (--omega or --omega-inline)");
}

SpectrumInput require_lambda(const CommonArgs& a) {
    if (!a.lambda_file.empty()) return parse_spectrum(load_json_file(a.lambda_file));
    if (!a.lambda_inline.empty()) return parse_spectrum(nlohmann::json::parse(a.lambda_inline));
    throw std::invalid_argument("a spectrum is required (--lambda or --lambda-inline)");
}

bool wants(const CommonArgs& a, const std::string& fmt) {
    for (const auto& f : a.formats)
        if (f == fmt) return true;
    return false;
}

void stamp(const CommonArgs& a, ordered_json& j) {
    if (!a.timestamp) return;
    char buf[64];
    std::time_t now = std::time(nullptr);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    j["timestamp"] = buf;
}

void emit_file(const CommonArgs& a, const std::string& name, const std::string& content) {
    if (a.out_dir.empty()) return;
    std::filesystem::create_directories(a.out_dir);
    write_text_file((std::filesystem::path(a.out_dir) / name).string(), content);
}

void emit_json(const CommonArgs& a, const std::string& name, const ordered_json& j,
               bool to_stdout = true) {
    const std::string text = j.dump(2) + "\n";
    if (to_stdout) std::cout << text;
    emit_file(a, name, text);
}

// A scalar argument: "p/q" and plain integers stay exact, decimals go float.
struct ScalarArg {
    bool exact = false;
    Rational r;
    double d = 0.0;
};

ScalarArg parse_scalar(const std::string& s) {
    const auto slash = s.find('/');
    if (slash != std::string::npos) {
        const long long num = std::stoll(s.substr(0, slash));
        const long long den = std::stoll(s.substr(slash + 1));
        const Rational r(num, den);
        return {true, r, r.to_double()};
    }
    char* end = nullptr;
    const long long n = std::strtoll(s.c_str(), &end, 10);
    if (end && *end == '\0' && end != s.c_str()) return {true, Rational(n), static_cast<double>(n)};
    return {false, Rational(0), parse_double(s)};
}

ordered_json samples_json(const std::vector<TilingSample>& samples) {
    ordered_json arr = ordered_json::array();
    for (const auto& s : samples)
        arr.push_back(ordered_json::array(
            {format_double(s.x), format_double(s.lo), format_double(s.hi)}));
    return arr;
}

std::vector<TilingSample> samples_from_json(const nlohmann::json& arr) {
    std::vector<TilingSample> out;
    for (const auto& row : arr) {
        if (!row.is_array() || row.size() != 3)
            throw std::invalid_argument("sample rows must be [x, lo, hi]");
        auto val = [](const nlohmann::json& v) {
            return v.is_string() ? parse_double(v.get<std::string>()) : v.get<double>();
        };
        out.push_back({val(row[0]), val(row[1]), val(row[2])});
    }
    return out;
}

void emit_tiling_artifacts(const CommonArgs& a, const std::vector<TilingSample>& samples) {
    if (samples.empty()) return;
    if (wants(a, "csv")) {
        std::ostringstream csv;
        write_samples_csv(csv, samples);
        emit_file(a, "samples.csv", csv.str());
    }
    if (wants(a, "svg"))
        emit_file(a, "plot.svg", svg_function_band(samples, "packing sum over one period"));
}

int verdict_exit(Verdict v) {
    switch (v) {
        case Verdict::Pass: return kExitPass;
        case Verdict::Fail: return kExitFail;
        case Verdict::Inconclusive: return kExitInconclusive;
    }
    return kExitInconclusive;
}

// ---- subcommand bodies ----

int run_zeros(const CommonArgs& a, double radius, double tol) {
    const IntervalInput omega = require_omega(a);
    const ZeroSet zs = omega.exact ? find_zeros(*omega.exact, radius, tol)
                                   : find_zeros(*omega.numeric, radius, tol);
    std::ostringstream csv;
    write_zeros_csv(csv, zs);
    std::cout << csv.str();
    emit_file(a, "zeros.csv", csv.str());
    if (!a.out_dir.empty() || wants(a, "json")) {
        ordered_json j;
        j["subcommand"] = "zeros";
        j["parameters"] = {{"radius", format_double(radius)}, {"tol", format_double(tol)}};
        j["zero_set"] = zero_set_json(zs);
        stamp(a, j);
        emit_json(a, "zeros.json", j, /*to_stdout=*/false);
    }
    return zs.all_certified ? kExitPass : kExitInconclusive;
}

int run_eval(const CommonArgs& a, const std::vector<std::string>& xi_args,
             const std::string& func) {
    const IntervalInput omega = require_omega(a);
    const FourierEvaluator f(*omega.numeric);
    std::ostringstream csv;
    csv << "xi,re,im,abs\n";
    for (const auto& arg : xi_args) {
        const double xi = parse_scalar(arg).d;
        const complexd v = func == "g" ? f.exp_sum(xi) : f.chi_hat(xi);
        csv << format_double(xi) << ',' << format_double(v.real()) << ','
            << format_double(v.imag()) << ',' << format_double(std::abs(v)) << '\n';
    }
    std::cout << csv.str();
    emit_file(a, "eval.csv", csv.str());
    return kExitPass;
}

int run_verify_spectrum(const CommonArgs& a, double tol, double tiling_tol, double grid_step) {
    const IntervalInput omega = require_omega(a);
    const SpectrumInput lambda = require_lambda(a);

    ordered_json j;
    j["subcommand"] = "verify-spectrum";
    j["parameters"] = {{"tol", format_double(tol)},
                       {"tiling_tol", format_double(tiling_tol)},
                       {"grid_step", format_double(grid_step)},
                       {"exact_path", omega.exact.has_value() && lambda.exact()}};

    Verdict verdict = Verdict::Pass;
    ordered_json checks = ordered_json::array();

    if (lambda.periodic) {
        const FloatPeriodic& pf = *lambda.numeric_periodic;
        VerificationReport zeros_rep;
        if (omega.exact && lambda.exact_periodic) {
            const Rational horizon = Rational(3) * lambda.exact_periodic->period;
            zeros_rep = check_zeros_condition(
                *omega.exact, unroll(*lambda.exact_periodic, Rational(0) - horizon, horizon),
                tol);
        } else {
            const double horizon = 3.0 * pf.period;
            zeros_rep =
                check_zeros_condition(*omega.numeric, unroll(pf, -horizon, horizon), tol);
        }
        checks.push_back(zeros_rep.to_json());
        if (zeros_rep.verdict == Verdict::Fail) verdict = Verdict::Fail;

        if (verdict != Verdict::Fail) {
            std::vector<TilingSample> samples;
            const VerificationReport tiling_rep =
                check_tiling_condition(*omega.numeric, pf, grid_step, tiling_tol, &samples);
            checks.push_back(tiling_rep.to_json());
            if (tiling_rep.verdict == Verdict::Fail) verdict = Verdict::Fail;
            emit_tiling_artifacts(a, samples);
        }
    } else {
        // A finite window can witness failure but never completeness.
        VerificationReport zeros_rep;
        if (omega.exact && lambda.exact_window) {
            zeros_rep = check_zeros_condition(*omega.exact, *lambda.exact_window, tol);
        } else {
            zeros_rep = check_zeros_condition(*omega.numeric, *lambda.numeric_window, tol);
        }
        checks.push_back(zeros_rep.to_json());
        verdict = zeros_rep.verdict == Verdict::Fail ? Verdict::Fail : Verdict::Inconclusive;
        if (verdict == Verdict::Inconclusive)
            j["note"] = "finite window: orthogonality checked, completeness undecidable";
    }

    j["checks"] = std::move(checks);
    j["verdict"] = to_string(verdict);
    stamp(a, j);
    emit_json(a, "report.json", j);
    return verdict_exit(verdict);
}

int run_verify_tile(const CommonArgs& a, double tol, double grid_step, bool indicator) {
    const IntervalInput omega = require_omega(a);
    const SpectrumInput lambda = require_lambda(a);
    if (!lambda.periodic)
        throw std::invalid_argument("verify-tile needs a periodic spectrum (base + period)");

    ordered_json j;
    j["subcommand"] = indicator ? "verify-tile (indicator)" : "verify-tile";
    j["parameters"] = {{"tol", format_double(tol)},
                       {"grid_step", format_double(grid_step)},
                       {"indicator", indicator},
                       {"exact_path", omega.exact.has_value() && lambda.exact()}};

    VerificationReport rep;
    std::vector<TilingSample> samples;
    if (indicator) {
        if (omega.exact && lambda.exact_periodic)
            rep = check_translational_tiling(*omega.exact, *lambda.exact_periodic);
        else
            rep = check_translational_tiling(*omega.numeric, *lambda.numeric_periodic,
                                             grid_step);
    } else {
        rep = check_tiling_condition(*omega.numeric, *lambda.numeric_periodic, grid_step, tol,
                                     &samples);
    }
    j["report"] = rep.to_json();
    if (!samples.empty()) j["samples"] = samples_json(samples);
    stamp(a, j);
    emit_json(a, "report.json", j);
    emit_tiling_artifacts(a, samples);
    return verdict_exit(rep.verdict);
}

int run_membership(const CommonArgs& a, const std::string& xi_arg, double tol, double rank_tol) {
    const IntervalInput omega = require_omega(a);
    const SpectrumInput lambda = require_lambda(a);
    if (lambda.periodic)
        throw std::invalid_argument("membership expects a finite point window, not base+period");
    const ScalarArg xi = parse_scalar(xi_arg);

    ordered_json j;
    j["subcommand"] = "membership";
    j["parameters"] = {{"xi", xi_arg}, {"tol", format_double(tol)},
                       {"rank_tol", format_double(rank_tol)}};

    bool member;
    if (omega.exact && lambda.exact_window && xi.exact) {
        j["path"] = "exact";
        member = membership_test_exact(*omega.exact, lambda.exact_window->points, xi.r);
        j["member"] = member;
    } else {
        j["path"] = "numeric";
        const FloatWindow& w = *lambda.numeric_window;
        PhiBasis basis = rank_of(*omega.numeric, w.points, rank_tol);
        is_generating(*omega.numeric, basis, w);
        const MembershipResult res = membership_test(*omega.numeric, basis, xi.d, tol);
        member = res.member;
        j["member"] = member;
        j["max_residual"] = format_double(res.max_residual);
    }
    stamp(a, j);
    emit_json(a, "membership.json", j);
    return member ? kExitPass : kExitFail;
}

int run_generating_set(const CommonArgs& a, double rank_tol) {
    const IntervalInput omega = require_omega(a);
    const SpectrumInput lambda = require_lambda(a);
    if (lambda.periodic)
        throw std::invalid_argument("generating-set expects a finite point window");

    const GeneratingWindowScan scan =
        find_generating_window(*omega.numeric, *lambda.numeric_window, rank_tol);

    ordered_json anchors = ordered_json::array();
    for (const auto& [anchor, status] : scan.anchors) {
        const char* label = status == AnchorStatus::Generating     ? "generating"
                            : status == AnchorStatus::NotGenerating ? "not-generating"
                                                                    : "unknown";
        anchors.push_back(ordered_json{{"anchor", format_double(anchor)}, {"status", label}});
    }
    ordered_json j;
    j["subcommand"] = "generating-set";
    j["parameters"] = {{"rank_tol", format_double(rank_tol)}};
    j["width"] = format_double(scan.width);
    j["window_rank"] = scan.window_rank;
    j["anchors"] = std::move(anchors);
    stamp(a, j);
    emit_json(a, "generating.json", j);
    return kExitPass;
}

int run_period(const CommonArgs& a, double width, std::optional<double> period, double tol) {
    const SpectrumInput lambda = require_lambda(a);
    if (lambda.periodic)
        throw std::invalid_argument("period works on a finite point window");
    const FloatWindow& w = *lambda.numeric_window;

    ordered_json j;
    j["subcommand"] = "period";
    if (period) {
        j["parameters"] = {{"period", format_double(*period)}, {"tol", format_double(tol)}};
        const VerificationReport rep = verify_period(w, *period, tol);
        j["report"] = rep.to_json();
        stamp(a, j);
        emit_json(a, "period.json", j);
        return verdict_exit(rep.verdict);
    }
    j["parameters"] = {{"width", format_double(width)}, {"tol", format_double(tol)}};
    const auto cand = detect_period(w, width, tol);
    j["found"] = cand.has_value();
    if (cand) {
        j["period"] = format_double(cand->value);
        j["anchor_low"] = format_double(cand->anchor_low);
        j["anchor_high"] = format_double(cand->anchor_high);
    }
    stamp(a, j);
    emit_json(a, "period.json", j);
    return cand ? kExitPass : kExitFail;
}

int run_search(const CommonArgs& a, int max_period, long long budget, double tol,
               double tiling_tol, double grid_step) {
    const IntervalInput omega = require_omega(a);
    SearchConfig cfg;
    cfg.max_period = max_period;
    cfg.node_budget = budget;
    cfg.tol = tol;
    cfg.tiling_tol = tiling_tol;
    cfg.tiling_grid_step = grid_step;

    ordered_json j;
    j["subcommand"] = "search";
    j["parameters"] = {{"max_period", max_period},
                       {"budget", budget},
                       {"tol", format_double(tol)},
                       {"tiling_tol", format_double(tiling_tol)},
                       {"grid_step", format_double(grid_step)},
                       {"exact_path", omega.exact.has_value()}};

    ordered_json list = ordered_json::array();
    bool exhausted;
    if (omega.exact) {
        const ExactSearchOutcome out = search_spectra(*omega.exact, cfg);
        for (const auto& p : out.spectra) {
            ordered_json entry = spectrum_json(p);
            entry["verification"] = "tiling-certified";
            list.push_back(std::move(entry));
        }
        j["gap_pool_complete"] = out.gap_pool_complete;
        j["nodes"] = out.nodes;
        exhausted = out.budget_exhausted;
    } else {
        const FloatSearchOutcome out = search_spectra(*omega.numeric, cfg);
        for (const auto& p : out.spectra) {
            ordered_json entry = spectrum_json(p);
            entry["verification"] = "numerically verified";
            list.push_back(std::move(entry));
        }
        j["nodes"] = out.nodes;
        exhausted = out.budget_exhausted;
    }
    j["budget_exhausted"] = exhausted;
    j["spectra"] = std::move(list);
    stamp(a, j);
    emit_json(a, "search.json", j);
    return exhausted ? kExitInconclusive : kExitPass;
}

int run_report(const CommonArgs& a, const std::string& in_file) {
    const nlohmann::json j = load_json_file(in_file);
    if (!j.contains("samples"))
        throw std::invalid_argument("report input has no samples to render");
    const std::vector<TilingSample> samples = samples_from_json(j.at("samples"));
    if (a.out_dir.empty())
        throw std::invalid_argument("report needs --out to place rendered artifacts");
    emit_tiling_artifacts(a, samples);
    if (wants(a, "json")) emit_file(a, "report.json", j.dump(2) + "\n");
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified zero sets, orthogonality and tiling verification, and spectrum "
                 "search for finite unions of intervals"};
    app.require_subcommand(1);

    CommonArgs a;
    double radius = 10.0, tol = 1e-9, tiling_tol = 1e-6, grid_step = 1e-3, rank_tol = 1e-9;
    double width = 1.0;
    std::optional<double> period_arg;
    std::vector<std::string> xi_list;
    std::string func = "chi", xi_single, report_in;
    int max_period = 4;
    long long budget = 1'000'000;
    bool indicator = false;

    auto* zeros = app.add_subcommand("zeros", "certified zero scan of the transform");
    add_omega_flags(zeros, a);
    add_output_flags(zeros, a);
    zeros->add_option("--radius", radius, "scan window radius")->capture_default_str();
    zeros->add_option("--tol", tol, "localization tolerance")->capture_default_str();

    auto* eval = app.add_subcommand("eval", "evaluate the transform as CSV rows");
    add_omega_flags(eval, a);
    add_output_flags(eval, a);
    eval->add_option("--xi", xi_list, "points to evaluate")->required();
    eval->add_option("--func", func, "chi (transform) or g (endpoint sum)")
        ->check(CLI::IsMember({"chi", "g"}))
        ->capture_default_str();

    auto* vs = app.add_subcommand("verify-spectrum", "orthogonality + tiling verification");
    add_omega_flags(vs, a);
    add_lambda_flags(vs, a);
    add_output_flags(vs, a);
    vs->add_option("--tol", tol, "orthogonality tolerance")->capture_default_str();
    vs->add_option("--tiling-tol", tiling_tol, "tiling tolerance")->capture_default_str();
    vs->add_option("--grid-step", grid_step, "tiling grid step")->capture_default_str();

    auto* vt = app.add_subcommand("verify-tile", "tiling verification for base + period");
    add_omega_flags(vt, a);
    add_lambda_flags(vt, a);
    add_output_flags(vt, a);
    vt->add_option("--tol", tiling_tol, "tiling tolerance")->capture_default_str();
    vt->add_option("--grid-step", grid_step, "grid step")->capture_default_str();
    vt->add_flag("--indicator", indicator,
                 "check translational tiling of the set itself instead of the packing sum");

    auto* mem = app.add_subcommand("membership", "test a point against known spectrum points");
    add_omega_flags(mem, a);
    add_lambda_flags(mem, a);
    add_output_flags(mem, a);
    mem->add_option("--xi", xi_single, "query point (p/q stays exact)")->required();
    mem->add_option("--tol", tol, "residual tolerance")->capture_default_str();
    mem->add_option("--rank-tol", rank_tol, "numeric rank threshold")->capture_default_str();

    auto* gen = app.add_subcommand("generating-set", "smallest window width whose anchored "
                                                     "sub-windows reach full phase rank");
    add_omega_flags(gen, a);
    add_lambda_flags(gen, a);
    add_output_flags(gen, a);
    gen->add_option("--rank-tol", rank_tol, "numeric rank threshold")->capture_default_str();

    auto* per = app.add_subcommand("period", "detect or verify a period of a point window");
    add_lambda_flags(per, a);
    add_output_flags(per, a);
    per->add_option("--width", width, "fingerprint width for detection")->capture_default_str();
    per->add_option("--period", [&period_arg](const std::vector<std::string>& vals) {
        period_arg = parse_double(vals.front());
        return true;
    }, "verify this period instead of detecting one");
    per->add_option("--tol", tol, "matching tolerance")->capture_default_str();

    auto* sea = app.add_subcommand("search", "enumerate verified periodic spectra");
    add_omega_flags(sea, a);
    add_output_flags(sea, a);
    sea->add_option("--max-period", max_period, "largest integer period tried")
        ->capture_default_str();
    sea->add_option("--budget", budget, "node budget")->capture_default_str();
    sea->add_option("--tol", tol, "orthogonality tolerance")->capture_default_str();
    sea->add_option("--tiling-tol", tiling_tol, "verification tolerance")->capture_default_str();
    sea->add_option("--grid-step", grid_step, "verification grid step")->capture_default_str();

    auto* rep = app.add_subcommand("report", "re-render artifacts from a saved report");
    add_output_flags(rep, a);
    rep->add_option("--in", report_in, "report JSON produced by verify-tile")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(zeros)) return run_zeros(a, radius, tol);
        if (app.got_subcommand(eval)) return run_eval(a, xi_list, func);
        if (app.got_subcommand(vs)) return run_verify_spectrum(a, tol, tiling_tol, grid_step);
        if (app.got_subcommand(vt)) return run_verify_tile(a, tiling_tol, grid_step, indicator);
        if (app.got_subcommand(mem)) return run_membership(a, xi_single, tol, rank_tol);
        if (app.got_subcommand(gen)) return run_generating_set(a, rank_tol);
        if (app.got_subcommand(per)) return run_period(a, width, period_arg, tol);
        if (app.got_subcommand(sea))
            return run_search(a, max_period, budget, tol, tiling_tol, grid_step);
        if (app.got_subcommand(rep)) return run_report(a, report_in);
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::runtime_error& e) {
        std::cerr << "inconclusive: " << e.what() << '\n';
        return kExitInconclusive;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
