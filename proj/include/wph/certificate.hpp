#ifndef WPH_CERTIFICATE_HPP
#define WPH_CERTIFICATE_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "wph/hodge.hpp"
#include "wph/search.hpp"

namespace wph {

using Json = nlohmann::json;

struct AnalysisInputs {
    std::string command;  // analyze | fermat | certify
    std::array<int, kNumVars> weights{};
    int degree = 0;
    std::string polynomial;
    PencilMode mode = PencilMode::Exact;
    std::uint64_t seed = 0;
};

/// Everything the full pipeline produced for one polynomial.
struct AnalysisResult {
    AnalysisInputs inputs;
    std::vector<long> hilbert;  // degrees 0..socle
    long socle_degree = -1;
    long socle_dimension = 0;
    std::string socle_monomial;
    std::vector<std::string> groebner_leading_monomials;
    long scan_band = 0;
    HodgeProfile profile;
    std::optional<DomainGeometry> geometry;
    PeriodDifferentialReport period;
    std::optional<NonGeodesyCertificate> non_geodesy;
    double seconds = 0.0;
};

struct RenderOptions {
    bool include_matrices = false;
    bool include_timing = false;
};

/// Canonical JSON: keys sorted, rationals rendered "p/q". Re-running with
/// the same inputs reproduces the bytes (timing stays out unless asked for).
Json certificate_json(const AnalysisResult& result, const RenderOptions& opts = {});
std::string certificate_markdown(const AnalysisResult& result, const RenderOptions& opts = {});

Json search_report_json(const SearchReport& report);
std::string search_report_markdown(const SearchReport& report);

Json pencil_json(const PencilRankCertificate& cert);
Json matrix_json(const RationalMatrix& m);

/// Renders a certificate JSON as markdown (the `report` command).
std::string rendered_markdown_from_json(const Json& j);

/// Write-then-rename; no partial files on error.
void write_atomic(const std::string& path, const std::string& content);

}  // namespace wph

#endif
