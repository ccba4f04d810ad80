#include <algorithm>
#include <numeric>

#include "wph/search.hpp"

namespace wph {

namespace {

constexpr const char* kNoFermat = "no quasi-smooth Fermat member";

SearchRow analyze_candidate(const WeightSystem& ws, const SearchOptions& options) {
    SearchRow row;
    row.weights = ws.weights();
    row.degree = ws.degree();

    for (std::size_t i = 0; i < kNumVars; ++i) {
        if (ws.degree() % ws.weight(i) != 0) {
            row.status = kNoFermat;
            return row;
        }
    }

    const WeightedPolynomial fermat = fermat_polynomial(ws);
    if (!is_quasi_smooth(fermat)) {
        row.status = kNoFermat;
        return row;
    }

    const JacobianRingModel model = jacobian_ring(fermat);
    row.status = "ok";
    row.socle_degree = model.socle_degree();
    row.socle_dimension = model.socle_dimension();
    row.hodge = hodge_numbers(ws, model);

    const long p = row.hodge->h20;
    const long q = row.hodge->h11_prim;
    if (p >= 1 && q >= 1) row.geometry = domain_geometry(p, q);

    if (p == 2) {
        const PeriodDifferentialReport report =
            period_differential(model, options.mode, options.seed);
        row.rank_m = report.rank_m;
        row.span_rank = report.span_rank;
        row.pencil = report.pencil;
        row.isotropy_ok = report.isotropy_ok;
        row.maximal = (q > 0 && report.rank_m == q);
    }
    return row;
}

}  // namespace

SearchReport search(const std::array<int, kNumVars>& max_weights, int max_degree,
                    const SearchOptions& options) {
    SearchReport report;
    report.max_weights = max_weights;
    report.max_degree = max_degree;
    report.options = options;
    if (max_degree < 1) return report;

    std::array<int, kNumVars> bounds = max_weights;
    std::sort(bounds.begin(), bounds.end());
    for (int b : bounds)
        if (b < 1) throw std::invalid_argument("search: weight bounds must be positive");

    // reduced non-decreasing weight tuples within the sorted bounds
    for (int w1 = 1; w1 <= bounds[0]; ++w1)
        for (int w2 = w1; w2 <= bounds[1]; ++w2)
            for (int w3 = w2; w3 <= bounds[2]; ++w3)
                for (int w4 = w3; w4 <= bounds[3]; ++w4) {
                    if (std::gcd(std::gcd(w1, w2), std::gcd(w3, w4)) != 1) continue;
                    for (int d = 1; d <= max_degree; ++d) {
                        const WeightSystem ws({w1, w2, w3, w4}, d);
                        report.rows.push_back(analyze_candidate(ws, options));
                    }
                }

    std::sort(report.rows.begin(), report.rows.end(), [](const SearchRow& a, const SearchRow& b) {
        const long ha = a.hodge ? a.hodge->h11_prim : -1;
        const long hb = b.hodge ? b.hodge->h11_prim : -1;
        if (ha != hb) return ha > hb;
        if (a.degree != b.degree) return a.degree < b.degree;
        return a.weights < b.weights;
    });
    return report;
}

}  // namespace wph
