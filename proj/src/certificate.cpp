#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "wph/certificate.hpp"
#include "wph/version.hpp"

namespace wph {

namespace {

Json hodge_json(const HodgeProfile& profile) {
    Json j;
    j["h20"] = profile.h20;
    j["h11"] = profile.h11_prim;
    j["h02"] = profile.h02;
    j["source_degrees"] = profile.source_degrees;
    j["duality_symmetric"] = profile.duality_symmetric();
    return j;
}

Json geometry_json(const DomainGeometry& g) {
    Json j;
    j["p"] = g.p;
    j["q"] = g.q;
    j["dim_domain"] = g.dim_domain;
    j["dim_horizontal"] = g.dim_horizontal;
    j["is_contact"] = g.is_contact;
    j["max_integral_dim"] = g.max_integral_dim;
    j["max_integral_exact"] = g.max_integral_exact;
    if (g.geodesic_orbit_dim >= 0) j["geodesic_orbit_dim"] = g.geodesic_orbit_dim;
    if (g.lagrangian_grassmannian_dim >= 0)
        j["lagrangian_grassmannian_dim"] = g.lagrangian_grassmannian_dim;
    if (g.complex_structure_space_dim_real >= 0) {
        j["complex_structure_space_dim_real"] = g.complex_structure_space_dim_real;
        j["complex_structure_space_dim_complex"] = g.complex_structure_space_dim_complex;
    }
    return j;
}

Json non_geodesy_json(const NonGeodesyCertificate& c) {
    Json j;
    j["min_wv_dim"] = c.min_wv_dim;
    j["threshold"] = c.threshold;
    j["verdict"] = c.verdict;
    j["span_full"] = c.span_full;
    j["mode"] = to_string(c.mode);
    return j;
}

Json inputs_json(const AnalysisInputs& inputs) {
    Json j;
    j["weights"] = inputs.weights;
    j["degree"] = inputs.degree;
    j["polynomial"] = inputs.polynomial;
    j["mode"] = to_string(inputs.mode);
    if (inputs.mode == PencilMode::Sampled) j["seed"] = inputs.seed;
    return j;
}

}  // namespace

Json matrix_json(const RationalMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    Json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["entries"] = std::move(rows);
    return j;
}

Json pencil_json(const PencilRankCertificate& cert) {
    Json j;
    j["generic_rank"] = cert.generic_rank;
    j["min_rank"] = cert.min_rank;
    j["mode"] = to_string(cert.mode);
    j["certifying"] = cert.certifying;
    if (cert.mode == PencilMode::Sampled) j["seed"] = cert.seed;
    Json drops = Json::array();
    for (const auto& p : cert.drop_points) {
        Json d;
        d["form"] = p.form;
        d["rank"] = p.rank;
        d["at_infinity"] = p.at_infinity;
        drops.push_back(std::move(d));
    }
    j["drop_points"] = std::move(drops);
    return j;
}

Json certificate_json(const AnalysisResult& result, const RenderOptions& opts) {
    Json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["command"] = result.inputs.command;
    j["input"] = inputs_json(result.inputs);

    Json period;
    period["shape"] = {result.period.h20 * result.period.h11, result.period.dim_source};
    period["rank"] = result.period.rank_m;
    period["kernel_dimension"] = result.period.kernel_dim;
    if (result.period.span_rank >= 0) period["span_rank"] = result.period.span_rank;
    if (result.period.isotropy_ok) period["isotropy_ok"] = *result.period.isotropy_ok;
    if (result.period.pencil) period["pencil"] = pencil_json(*result.period.pencil);
    if (opts.include_matrices) {
        period["matrix"] = matrix_json(result.period.matrix_m);
        if (result.period.A) period["matrix_A"] = matrix_json(*result.period.A);
        if (result.period.B) period["matrix_B"] = matrix_json(*result.period.B);
    }

    if (result.inputs.command != "certify") {
        Json ring;
        ring["quasi_smooth"] = true;
        ring["socle_degree"] = result.socle_degree;
        ring["socle_dimension"] = result.socle_dimension;
        if (!result.socle_monomial.empty()) ring["socle_monomial"] = result.socle_monomial;
        ring["hilbert"] = result.hilbert;
        ring["groebner_leading_monomials"] = result.groebner_leading_monomials;
        ring["scan_band"] = result.scan_band;
        j["ring"] = std::move(ring);
        j["hodge"] = hodge_json(result.profile);
        if (result.geometry) j["domain"] = geometry_json(*result.geometry);
        j["period_differential"] = std::move(period);
    } else {
        Json summary;
        summary["shape"] = {result.period.h20 * result.period.h11, result.period.dim_source};
        summary["rank"] = result.period.rank_m;
        summary["kernel_dimension"] = result.period.kernel_dim;
        if (result.period.span_rank >= 0) summary["span_rank"] = result.period.span_rank;
        if (result.period.pencil) summary["pencil"] = pencil_json(*result.period.pencil);
        j["period_differential"] = std::move(summary);
    }

    if (result.non_geodesy) j["non_geodesy"] = non_geodesy_json(*result.non_geodesy);
    if (opts.include_timing) j["timing_seconds"] = result.seconds;
    return j;
}

Json search_report_json(const SearchReport& report) {
    Json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["command"] = "search";
    Json bounds;
    bounds["max_weights"] = report.max_weights;
    bounds["max_degree"] = report.max_degree;
    bounds["mode"] = to_string(report.options.mode);
    if (report.options.mode == PencilMode::Sampled) bounds["seed"] = report.options.seed;
    j["bounds"] = std::move(bounds);

    Json rows = Json::array();
    for (const SearchRow& row : report.rows) {
        Json r;
        r["weights"] = row.weights;
        r["degree"] = row.degree;
        r["status"] = row.status;
        if (row.hodge) {
            r["h20"] = row.hodge->h20;
            r["h11"] = row.hodge->h11_prim;
            r["h02"] = row.hodge->h02;
            r["duality_symmetric"] = row.hodge->duality_symmetric();
            r["socle_degree"] = row.socle_degree;
            r["socle_dimension"] = row.socle_dimension;
        }
        if (row.geometry) {
            r["dim_domain"] = row.geometry->dim_domain;
            r["dim_horizontal"] = row.geometry->dim_horizontal;
            r["is_contact"] = row.geometry->is_contact;
        }
        if (row.rank_m >= 0) {
            r["rank_m"] = row.rank_m;
            r["span_rank"] = row.span_rank;
            r["maximal"] = row.maximal;
            if (row.pencil) r["pencil"] = pencil_json(*row.pencil);
            if (row.isotropy_ok) r["isotropy_ok"] = *row.isotropy_ok;
        }
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j;
}

namespace {

std::string scalar_to_markdown(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

void render_value(std::ostream& os, const std::string& key, const Json& value, int level);

bool renders_as_section(const Json& value) {
    return value.is_object() || (value.is_array() && !value.empty() && value[0].is_object());
}

void render_object(std::ostream& os, const Json& obj, int level) {
    // scalars first so they stay attached to the current section
    for (const auto& [key, value] : obj.items())
        if (!renders_as_section(value)) render_value(os, key, value, level);
    for (const auto& [key, value] : obj.items())
        if (renders_as_section(value)) render_value(os, key, value, level);
}

void render_table(std::ostream& os, const Json& rows) {
    // union of keys over all rows, in sorted (canonical) order
    std::set<std::string> keys;
    for (const auto& row : rows)
        for (const auto& [key, value] : row.items()) keys.insert(key);
    os << "|";
    for (const auto& k : keys) os << " " << k << " |";
    os << "\n|";
    for (std::size_t i = 0; i < keys.size(); ++i) os << " --- |";
    os << "\n";
    for (const auto& row : rows) {
        os << "|";
        for (const auto& k : keys) {
            os << " ";
            if (row.contains(k)) {
                const Json& cell = row.at(k);
                if (cell.is_structured())
                    os << cell.dump();
                else
                    os << scalar_to_markdown(cell);
            }
            os << " |";
        }
        os << "\n";
    }
}

void render_value(std::ostream& os, const std::string& key, const Json& value, int level) {
    if (value.is_object()) {
        os << "\n" << std::string(level + 2, '#') << " " << key << "\n\n";
        render_object(os, value, level + 1);
        return;
    }
    if (value.is_array() && !value.empty() && value[0].is_object()) {
        os << "\n" << std::string(level + 2, '#') << " " << key << "\n\n";
        render_table(os, value);
        return;
    }
    if (value.is_array()) {
        os << "- " << key << ": " << value.dump() << "\n";
        return;
    }
    os << "- " << key << ": " << scalar_to_markdown(value) << "\n";
}

}  // namespace

std::string rendered_markdown_from_json(const Json& j) {
    std::ostringstream os;
    std::string title = "wph report";
    if (j.contains("command") && j.at("command").is_string())
        title = "wph " + j.at("command").get<std::string>() + " report";
    os << "# " << title << "\n\n";
    render_object(os, j, 0);
    return os.str();
}

std::string certificate_markdown(const AnalysisResult& result, const RenderOptions& opts) {
    return rendered_markdown_from_json(certificate_json(result, opts));
}

std::string search_report_markdown(const SearchReport& report) {
    return rendered_markdown_from_json(search_report_json(report));
}

void write_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
        out << content;
        if (!out.good()) {
            std::remove(tmp.c_str());
            throw std::runtime_error("failed writing " + tmp);
        }
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw std::runtime_error("failed to move " + tmp + " into place");
    }
}

}  // namespace wph
