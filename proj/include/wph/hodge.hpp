#ifndef WPH_HODGE_HPP
#define WPH_HODGE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "wph/jacobian_ring.hpp"
#include "wph/matrix.hpp"
#include "wph/pencil.hpp"

namespace wph {

/// A computed invariant contradicts a structural bound (e.g. an integral
/// element larger than Lagrangian). Maps to CLI exit code 3.
struct ConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Hodge numbers of the weight-two structure read off the graded slices
/// R_{d-sigma}, R_{2d-sigma}, R_{3d-sigma}. Negative source degrees give 0.
struct HodgeProfile {
    std::array<int, kNumVars> weights;
    int degree = 0;
    long h20 = 0;
    long h11_prim = 0;
    long h02 = 0;
    std::array<long, 3> source_degrees{0, 0, 0};

    bool duality_symmetric() const { return h20 == h02; }
};

HodgeProfile hodge_numbers(const WeightSystem& ws, const JacobianRingModel& model);

/// Dimension bookkeeping for the period domain SO(2p,q)/U(p)xSO(q) and its
/// horizontal sub-bundle.
struct DomainGeometry {
    long p = 0;
    long q = 0;
    long dim_domain = 0;           // p(p-1)/2 + pq
    long dim_horizontal = 0;       // pq
    bool is_contact = false;       // p == 2
    long max_integral_dim = -1;    // pq/2 when contact; else geodesic-orbit dim
    bool max_integral_exact = false;  // lower bound only when not contact
    long geodesic_orbit_dim = -1;  // p*q/2 for even q
    long lagrangian_grassmannian_dim = -1;      // g(g+1)/2, g = pq/2, contact case
    long complex_structure_space_dim_real = -1;     // q(q-1)/2 - (q/2)^2, even q
    long complex_structure_space_dim_complex = -1;  // half of the real value
};

DomainGeometry domain_geometry(long p, long q);

/// Contact geometry of the domain fibered over quaternionic hyperbolic
/// n-space: dimensions only.
struct QuaternionicDomainGeometry {
    long n = 0;
    long dim_domain = 0;        // 2n + 1
    long dim_horizontal = 0;    // 2n
    long lagrangian_dim = 0;    // n(n+1)/2
    long geodesic_orbit_dim = 0;  // n, the complex-hyperbolic orbit
};

QuaternionicDomainGeometry quaternionic_domain_geometry(long n);

/// The period-map differential at f as an exact matrix: columns indexed by
/// the basis of R_d, rows by (basis of R_{d-sigma}) x (basis of R_{2d-sigma}).
/// For h20 = 2 also carries the two multiplication matrices, the pencil
/// certificate and the span/isotropy checks.
struct PeriodDifferentialReport {
    long h20 = 0;
    long h11 = 0;
    long dim_source = 0;  // dim R_d
    RationalMatrix matrix_m;
    long rank_m = 0;
    long kernel_dim = 0;
    std::optional<RationalMatrix> A, B;  // multiplication by the R_{d-sigma} basis
    std::optional<PencilRankCertificate> pencil;
    long span_rank = -1;  // rank of [A|B]
    std::optional<bool> isotropy_ok;
};

PeriodDifferentialReport period_differential(const JacobianRingModel& model,
                                             PencilMode mode = PencilMode::Exact,
                                             std::uint64_t seed = 0);

/// Pencil/span analysis of an arbitrary horizontal subspace given as the
/// column span of a (2q x k) matrix (columns reshaped to q x 2 tangent
/// vectors). Used for constructed tangent spaces; no isotropy data.
PeriodDifferentialReport tangent_report_from_span(const RationalMatrix& span, long q,
                                                  PencilMode mode = PencilMode::Exact,
                                                  std::uint64_t seed = 0);

/// Value of the contact symplectic form on the pair of horizontal vectors
/// m(phi), m(psi): the socle coefficient of
/// (phi v1)(psi v2) - (psi v1)(phi v2) for the basis v1, v2 of R_{d-sigma}.
/// Identically zero on the image of m by commutativity.
Rational symplectic_form(const JacobianRingModel& model, const WeightedPolynomial& phi,
                         const WeightedPolynomial& psi);

/// Same form on arbitrary tangent vectors X, Y given as (h11 x 2) matrices,
/// paired through the duality Gram matrix of R_{2d-sigma}.
Rational symplectic_form_hom(const JacobianRingModel& model, const RationalMatrix& X,
                             const RationalMatrix& Y);

/// Duality Gram matrix on R_{2d-sigma} (socle coefficients of basis
/// products); the algebraic polarization used by the symplectic form.
RationalMatrix duality_gram(const JacobianRingModel& model);

/// Solution space of J X = X ihat in Hom(Q^2, Q^q), ihat the standard
/// rotation on the 2-dimensional slice: the rational form of a geodesic
/// SU(2, q/2)-orbit tangent space. Pre: J orthogonal with J^2 = -I.
/// Dimension is q (= p*q/2 with p = 2).
std::vector<RationalMatrix> geodesic_tangent_space(const RationalMatrix& J);

/// True iff every column of span (reshaped q x 2) satisfies J X = X ihat.
bool span_contained_in_geodesic_tangent_space(const RationalMatrix& span,
                                              const RationalMatrix& J);

/// Random rational J with J^2 = -I and J^t J = I, built from a Cayley
/// transform of a random skew matrix. q must be even.
RationalMatrix random_orthogonal_complex_structure(long q, Rng& rng);

/// The non-geodesy verdict: min dim Wv over the pencil exceeds q/2, which
/// excludes fixed subspaces of split isotropy elements and geodesic
/// SU(2, q/2)-orbit tangencies.
struct NonGeodesyCertificate {
    long min_wv_dim = 0;
    long threshold = 0;  // q/2
    bool verdict = false;
    bool span_full = false;  // span_rank == q
    PencilMode mode = PencilMode::Exact;
};

NonGeodesyCertificate non_geodesy_certificate(const PeriodDifferentialReport& report,
                                              const DomainGeometry& geometry);

}  // namespace wph

#endif
