#ifndef WPH_PENCIL_HPP
#define WPH_PENCIL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "wph/matrix.hpp"
#include "wph/qpoly.hpp"

namespace wph {

enum class PencilMode { Exact, Sampled };

std::string to_string(PencilMode mode);

/// A point set on the pencil line where the rank drops below the generic
/// value: the vanishing locus of a squarefree binary form, with the rank
/// attained at every root of the form.
struct PencilDropPoint {
    QPoly factor;           // affine factor in t = b/a; ignored at infinity
    bool at_infinity = false;  // the point (0:1)
    long rank = 0;
    std::string form;       // rendered homogeneous binary form in a, b
};

/// Certified minimum rank of a*A + b*B over the projective line.
/// In exact mode the drop set is exhaustive: every point not annihilating a
/// listed form has the generic rank.
struct PencilRankCertificate {
    long generic_rank = 0;
    long min_rank = 0;
    std::vector<PencilDropPoint> drop_points;
    PencilMode mode = PencilMode::Exact;
    std::uint64_t seed = 0;  // sampled mode only
    bool certifying = true;
};

/// Exact mode: generic rank over Q(t) by fraction-free elimination on A + tB,
/// one nonzero maximal minor extracted and squarefree-factored, candidate
/// ranks recomputed exactly in Q[t]/(factor) with gcd splitting. Sampled
/// mode: ranks at (1:0), (0:1) and 16 seeded random rational points,
/// minimum observed, flagged non-certifying.
PencilRankCertificate pencil_min_rank(const RationalMatrix& A, const RationalMatrix& B,
                                      PencilMode mode, std::uint64_t seed = 0);

/// Homogenization of an affine factor to a binary form in a, b (degree taken
/// from the factor), rendered canonically.
std::string render_binary_form(const QPoly& affine_factor);

}  // namespace wph

#endif
