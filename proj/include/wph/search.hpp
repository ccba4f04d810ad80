#ifndef WPH_SEARCH_HPP
#define WPH_SEARCH_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wph/hodge.hpp"

namespace wph {

struct SearchOptions {
    PencilMode mode = PencilMode::Exact;
    std::uint64_t seed = 0;
};

/// One (weights, degree) candidate anchored at its Fermat member.
struct SearchRow {
    std::array<int, kNumVars> weights{};
    int degree = 0;
    std::string status;  // "ok" or "no quasi-smooth Fermat member"
    std::optional<HodgeProfile> hodge;
    std::optional<DomainGeometry> geometry;
    long socle_degree = -1;
    long socle_dimension = 0;
    // contact candidates (h20 == 2) only:
    long rank_m = -1;
    long span_rank = -1;
    std::optional<PencilRankCertificate> pencil;
    std::optional<bool> isotropy_ok;
    bool maximal = false;  // rank_m == h11, the Lagrangian bound attained
};

struct SearchReport {
    std::array<int, kNumVars> max_weights{};
    int max_degree = 0;
    SearchOptions options;
    std::vector<SearchRow> rows;
};

/// Scans reduced non-decreasing weight systems w <= max_weights
/// (componentwise, bounds sorted) and degrees d <= max_degree. Pairs with a
/// Fermat member (all w_i | d) get the full Fermat analysis; the rest are
/// recorded as having no quasi-smooth Fermat member. Rows are sorted by
/// h11 descending, then degree ascending, then weights.
SearchReport search(const std::array<int, kNumVars>& max_weights, int max_degree,
                    const SearchOptions& options = {});

}  // namespace wph

#endif
