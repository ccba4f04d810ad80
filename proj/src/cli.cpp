#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "wph/certificate.hpp"
#include "wph/cli.hpp"
#include "wph/version.hpp"

namespace wph::cli {

namespace {

struct CommonOptions {
    std::vector<int> weights;
    int degree = 0;
    std::string poly_text;
    std::string poly_file;
    std::string mode = "exact";
    std::uint64_t seed = 0;
    std::string format = "json";
    std::string out_path;
    bool include_matrices = false;
    bool include_timing = false;
};

WeightSystem make_weight_system(const std::vector<int>& weights, int degree) {
    if (weights.size() != kNumVars)
        throw std::invalid_argument("expected exactly 4 weights");
    return WeightSystem({weights[0], weights[1], weights[2], weights[3]}, degree);
}

PencilMode parse_mode(const std::string& mode) {
    if (mode == "exact") return PencilMode::Exact;
    if (mode == "sampled") return PencilMode::Sampled;
    throw std::invalid_argument("mode must be 'exact' or 'sampled'");
}

std::string load_polynomial_text(const CommonOptions& opts) {
    if (!opts.poly_text.empty() && !opts.poly_file.empty())
        throw std::invalid_argument("--poly and --poly-file are mutually exclusive");
    if (!opts.poly_text.empty()) return opts.poly_text;
    if (!opts.poly_file.empty()) {
        std::ifstream in(opts.poly_file);
        if (!in) throw std::invalid_argument("cannot read polynomial file " + opts.poly_file);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        std::string text = buffer.str();
        while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
        return text;
    }
    throw std::invalid_argument("a polynomial is required: pass --poly or --poly-file");
}

AnalysisResult run_pipeline(const std::string& command, const WeightSystem& ws,
                            const std::string& poly_text, PencilMode mode, std::uint64_t seed) {
    const auto start = std::chrono::steady_clock::now();

    const WeightedPolynomial f = parse_polynomial(poly_text, ws);
    const auto degree = f.homogeneous_degree();
    if (f.is_zero() || !degree || *degree != ws.degree())
        throw std::invalid_argument("polynomial must be homogeneous of degree " +
                                    std::to_string(ws.degree()));

    const JacobianRingModel model = jacobian_ring(f);

    AnalysisResult result;
    result.inputs.command = command;
    result.inputs.weights = ws.weights();
    result.inputs.degree = ws.degree();
    result.inputs.polynomial = f.to_string();
    result.inputs.mode = mode;
    result.inputs.seed = seed;

    result.socle_degree = model.socle_degree();
    result.socle_dimension = model.socle_dimension();
    if (model.socle_dimension() == 1) result.socle_monomial = model.socle_monomial().to_string();
    for (long k = 0; k <= std::max(model.socle_degree(), 0L); ++k)
        result.hilbert.push_back(model.dim(k));
    for (const Monomial& lm : model.groebner().leading_monomials())
        result.groebner_leading_monomials.push_back(lm.to_string());
    result.scan_band = model.band();

    result.profile = hodge_numbers(ws, model);
    if (result.profile.h20 >= 1 && result.profile.h11_prim >= 1)
        result.geometry = domain_geometry(result.profile.h20, result.profile.h11_prim);

    result.period = period_differential(model, mode, seed);
    if (result.geometry && result.geometry->is_contact)
        result.non_geodesy = non_geodesy_certificate(result.period, *result.geometry);

    result.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

void emit(const std::string& rendered, const CommonOptions& opts, std::ostream& out) {
    if (opts.out_path.empty()) {
        out << rendered;
        if (rendered.empty() || rendered.back() != '\n') out << "\n";
    } else {
        write_atomic(opts.out_path, rendered);
    }
}

int run_analysis_command(const std::string& command, const CommonOptions& opts,
                         std::ostream& out) {
    const WeightSystem ws = make_weight_system(opts.weights, opts.degree);
    const std::string poly_text =
        command == "fermat" ? fermat_polynomial(ws).to_string() : load_polynomial_text(opts);
    const AnalysisResult result =
        run_pipeline(command, ws, poly_text, parse_mode(opts.mode), opts.seed);

    RenderOptions render;
    render.include_matrices = opts.include_matrices;
    render.include_timing = opts.include_timing;
    const Json j = certificate_json(result, render);
    emit(opts.format == "markdown" ? rendered_markdown_from_json(j) : j.dump(2) + "\n", opts,
         out);
    return kExitOk;
}

void add_common_options(CLI::App* cmd, CommonOptions& opts, bool with_poly) {
    cmd->add_option("--weights", opts.weights, "comma-separated weights w1,w2,w3,w4")
        ->required()
        ->delimiter(',');
    cmd->add_option("--degree", opts.degree, "weighted degree d")->required();
    if (with_poly) {
        cmd->add_option("--poly", opts.poly_text, "polynomial text, e.g. \"x1^10 + x2^10\"");
        cmd->add_option("--poly-file", opts.poly_file, "file containing the polynomial");
    }
    cmd->add_option("--mode", opts.mode, "pencil certificate mode: exact or sampled")
        ->check(CLI::IsMember({"exact", "sampled"}));
    cmd->add_option("--seed", opts.seed, "seed for sampled mode");
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"json", "markdown"}));
    cmd->add_option("--out", opts.out_path, "output path (written atomically)");
    cmd->add_flag("--include-matrices", opts.include_matrices,
                  "embed full matrices in the certificate");
    cmd->add_flag("--timing", opts.include_timing,
                  "include wall-clock timing (breaks byte-reproducibility)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact Jacobian-ring and period-map certificates for weighted "
                 "projective hypersurfaces"};
    app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
    app.require_subcommand(1);

    CommonOptions analyze_opts, fermat_opts, certify_opts;
    CLI::App* analyze = app.add_subcommand("analyze", "full pipeline for a given polynomial");
    add_common_options(analyze, analyze_opts, true);
    CLI::App* fermat = app.add_subcommand("fermat", "full pipeline for the Fermat member");
    add_common_options(fermat, fermat_opts, false);
    CLI::App* certify =
        app.add_subcommand("certify", "non-geodesy certificate only for a given polynomial");
    add_common_options(certify, certify_opts, true);

    CommonOptions search_opts;
    std::vector<int> max_weights;
    int max_degree = 0;
    CLI::App* search_cmd =
        app.add_subcommand("search", "scan weight systems and degrees for maximal candidates");
    search_cmd->add_option("--max-weights", max_weights, "componentwise weight bounds")
        ->required()
        ->delimiter(',');
    search_cmd->add_option("--max-degree", max_degree, "largest degree to scan")->required();
    search_cmd->add_option("--mode", search_opts.mode, "pencil certificate mode")
        ->check(CLI::IsMember({"exact", "sampled"}));
    search_cmd->add_option("--seed", search_opts.seed, "seed for sampled mode");
    search_cmd->add_option("--format", search_opts.format, "output format")
        ->check(CLI::IsMember({"json", "markdown"}));
    search_cmd->add_option("--out", search_opts.out_path, "output path");

    CommonOptions report_opts;
    std::string report_in;
    CLI::App* report_cmd =
        app.add_subcommand("report", "render an existing certificate JSON as markdown");
    report_cmd->add_option("--in", report_in, "certificate JSON file")->required();
    report_cmd->add_option("--out", report_opts.out_path, "output path");

    std::vector<const char*> argv;
    argv.push_back(kToolName);
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitInvalidInput;
    }

    try {
        if (analyze->parsed()) return run_analysis_command("analyze", analyze_opts, out);
        if (fermat->parsed()) return run_analysis_command("fermat", fermat_opts, out);
        if (certify->parsed()) return run_analysis_command("certify", certify_opts, out);
        if (search_cmd->parsed()) {
            if (max_weights.size() != kNumVars)
                throw std::invalid_argument("expected exactly 4 weight bounds");
            if (max_degree < 0) throw std::invalid_argument("max degree must be non-negative");
            SearchOptions options;
            options.mode = parse_mode(search_opts.mode);
            options.seed = search_opts.seed;
            const SearchReport result = search(
                {max_weights[0], max_weights[1], max_weights[2], max_weights[3]}, max_degree,
                options);
            const Json j = search_report_json(result);
            emit(search_opts.format == "markdown" ? rendered_markdown_from_json(j)
                                                  : j.dump(2) + "\n",
                 search_opts, out);
            return kExitOk;
        }
        if (report_cmd->parsed()) {
            std::ifstream in(report_in);
            if (!in) throw std::invalid_argument("cannot read " + report_in);
            Json j;
            try {
                in >> j;
            } catch (const Json::parse_error& e) {
                throw std::invalid_argument("invalid certificate JSON: " + std::string(e.what()));
            }
            emit(rendered_markdown_from_json(j), report_opts, out);
            return kExitOk;
        }
    } catch (const NotQuasiSmoothError& e) {
        err << "error: " << e.what() << "\n";
        return kExitNotQuasiSmooth;
    } catch (const ConsistencyError& e) {
        err << "internal consistency violation: " << e.what() << "\n";
        return kExitConsistency;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const ExhaustionError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitConsistency;
    }
    return kExitInvalidInput;
}

}  // namespace wph::cli
