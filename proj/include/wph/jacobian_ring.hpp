#ifndef WPH_JACOBIAN_RING_HPP
#define WPH_JACOBIAN_RING_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "wph/groebner.hpp"
#include "wph/matrix.hpp"
#include "wph/polynomial.hpp"

namespace wph {

struct NotQuasiSmoothError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ExhaustionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The four partial derivatives of f (the generators of J(f)).
std::vector<WeightedPolynomial> jacobian_ideal(const WeightedPolynomial& f);

/// True iff the Jacobian ideal is zero-dimensional, i.e. the partials vanish
/// simultaneously only at the origin.
bool is_quasi_smooth(const WeightedPolynomial& f);

/// The graded ring R(f) = S/J(f) with standard-monomial bases and dimensions
/// cached for every degree up to a verified band above the socle.
class JacobianRingModel {
public:
    const WeightedPolynomial& f() const { return f_; }
    const WeightSystem& weight_system() const { return ws_; }
    const GroebnerBasis& groebner() const { return gb_; }

    /// Socle bound (n+2)d - 2*sigma used to size the scan; the socle itself
    /// is measured, not assumed.
    long socle_bound() const { return socle_bound_; }
    /// Top cached degree. Dimensions beyond it are provably zero: every
    /// standard monomial is bounded by the pure-power caps.
    long band() const { return band_; }

    long socle_degree() const { return socle_degree_; }
    long socle_dimension() const { return socle_dim_; }
    const Monomial& socle_monomial() const;

    long dim(long k) const;
    const std::vector<Monomial>& basis(long k) const;

    /// Full Hilbert vector for degrees 0..band.
    const std::vector<long>& hilbert() const { return hilbert_; }

    /// Coordinates of a normal form in the degree-k standard basis.
    std::vector<Rational> coordinates(const WeightedPolynomial& reduced, long k) const;

    /// Coefficient of the socle monomial in the normal form of p; the fixed
    /// identification of the top graded piece with the scalars. Requires a
    /// one-dimensional socle.
    Rational socle_coefficient(const WeightedPolynomial& p) const;

private:
    friend JacobianRingModel jacobian_ring(const WeightedPolynomial& f);

    WeightedPolynomial f_;
    WeightSystem ws_;
    GroebnerBasis gb_;
    long socle_bound_ = 0;
    long band_ = 0;
    long socle_degree_ = -1;
    long socle_dim_ = 0;
    Monomial socle_monomial_;
    std::vector<std::vector<Monomial>> bases_;
    std::vector<long> hilbert_;
    std::vector<std::map<std::array<int, kNumVars>, std::size_t>> index_;

    JacobianRingModel(WeightedPolynomial f, GroebnerBasis gb);
};

/// Builds the model; throws NotQuasiSmoothError when J(f) is not
/// zero-dimensional.
JacobianRingModel jacobian_ring(const WeightedPolynomial& f);

struct DualityReport {
    long degree = 0;
    RationalMatrix pairing_matrix;  // dim R_i  x  dim R_{N-i}
    bool nondegenerate = false;
};

/// The pairing R_i x R_{N-i} -> R_N expressed in standard bases, with the
/// non-degeneracy verdict (equal dimensions and full rank).
DualityReport duality_check(const JacobianRingModel& model, long i);

/// Matrix of multiplication by g from the degree-a slice, columns indexed by
/// basis(a), rows by basis(a + deg g).
RationalMatrix multiplication_matrix(const JacobianRingModel& model,
                                     const WeightedPolynomial& g, long from_degree);

/// Random f in S_d with small integer coefficients, verified quasi-smooth;
/// deterministic for a fixed seed. Throws ExhaustionError after the retry
/// bound (a hint that S_d^0 may be empty or thin).
WeightedPolynomial random_quasi_smooth(const WeightSystem& ws, std::uint64_t seed);

}  // namespace wph

#endif
