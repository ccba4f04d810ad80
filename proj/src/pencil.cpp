#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "wph/pencil.hpp"

namespace wph {

std::string to_string(PencilMode mode) {
    return mode == PencilMode::Exact ? "exact" : "sampled";
}

std::string render_binary_form(const QPoly& affine_factor) {
    // delta(t) = sum c_i t^i homogenizes to sum c_i a^(e-i) b^i
    QPoly f = affine_factor.primitive();
    const long e = f.degree();
    if (e < 0) return "0";
    std::vector<Rational> c(f.coeffs());
    std::size_t first = 0;
    while (first < c.size() && c[first] == 0) ++first;
    if (first < c.size() && c[first] < 0)
        for (auto& v : c) v = -v;

    std::ostringstream os;
    bool lead = true;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        const bool negative = c[i] < 0;
        Rational mag = negative ? Rational(-c[i]) : c[i];
        if (lead) {
            if (negative) os << '-';
            lead = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        const long pa = e - static_cast<long>(i);
        const long pb = static_cast<long>(i);
        std::string mono;
        if (pa > 0) {
            mono += "a";
            if (pa > 1) mono += "^" + std::to_string(pa);
        }
        if (pb > 0) {
            if (!mono.empty()) mono += "*";
            mono += "b";
            if (pb > 1) mono += "^" + std::to_string(pb);
        }
        if (mono.empty()) {
            os << mag.get_str();
        } else if (mag == 1) {
            os << mono;
        } else {
            os << mag.get_str() << '*' << mono;
        }
    }
    return os.str();
}

namespace {

struct PolyRankResult {
    long rank = 0;
    QPoly minor;  // nonzero rank x rank minor of A + tB (up to sign)
};

/// Fraction-free elimination over Q[t]; the final pivot equals the maximal
/// nonzero minor of the chosen rows/columns.
PolyRankResult poly_pencil_rank(const RationalMatrix& A, const RationalMatrix& B) {
    const std::size_t rows = A.rows(), cols = A.cols();
    std::vector<std::vector<QPoly>> m(rows, std::vector<QPoly>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            std::vector<Rational> c{A.at(i, j), B.at(i, j)};
            m[i][j] = QPoly(std::move(c));
        }

    std::vector<std::size_t> row_of(rows), col_of(cols);
    for (std::size_t i = 0; i < rows; ++i) row_of[i] = i;
    for (std::size_t j = 0; j < cols; ++j) col_of[j] = j;

    QPoly prev(Rational(1));
    QPoly last_pivot(Rational(1));
    std::size_t r = 0;
    while (r < rows && r < cols) {
        // lowest-degree nonzero entry keeps the minor small
        long best_deg = -1;
        std::size_t pi = r, pj = r;
        for (std::size_t i = r; i < rows; ++i)
            for (std::size_t j = r; j < cols; ++j) {
                const QPoly& e = m[row_of[i]][col_of[j]];
                if (e.is_zero()) continue;
                if (best_deg < 0 || e.degree() < best_deg) {
                    best_deg = e.degree();
                    pi = i;
                    pj = j;
                }
            }
        if (best_deg < 0) break;
        std::swap(row_of[r], row_of[pi]);
        std::swap(col_of[r], col_of[pj]);

        const QPoly pivot = m[row_of[r]][col_of[r]];
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = r + 1; j < cols; ++j) {
                QPoly t = m[row_of[i]][col_of[j]] * pivot -
                          m[row_of[i]][col_of[r]] * m[row_of[r]][col_of[j]];
                m[row_of[i]][col_of[j]] = t.exact_div(prev);
            }
            m[row_of[i]][col_of[r]] = QPoly();
        }
        prev = pivot;
        last_pivot = pivot;
        ++r;
    }
    return {static_cast<long>(r), r == 0 ? QPoly(Rational(1)) : last_pivot};
}

RationalMatrix evaluate_pencil(const RationalMatrix& A, const RationalMatrix& B,
                               const Rational& a, const Rational& b) {
    RationalMatrix m(A.rows(), A.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j)
            m.at(i, j) = a * A.at(i, j) + b * B.at(i, j);
    return m;
}

/// Exact ranks of A + tB over Q[t]/(modulus) for squarefree monic modulus,
/// splitting on zero divisors (dynamic evaluation). Appends one
/// (component modulus, rank) pair per component; the rank is uniform over
/// the roots of each component.
void rank_modulo(const RationalMatrix& A, const RationalMatrix& B, const QPoly& modulus,
                 std::vector<std::pair<QPoly, long>>& out) {
    const std::size_t rows = A.rows(), cols = A.cols();
    std::vector<std::vector<QPoly>> m(rows, std::vector<QPoly>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            std::vector<Rational> c{A.at(i, j), B.at(i, j)};
            m[i][j] = QPoly(std::move(c)) % modulus;
        }

    std::vector<bool> row_done(rows, false), col_done(cols, false);
    long r = 0;
    while (true) {
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = 0; i < rows && pi == rows; ++i) {
            if (row_done[i]) continue;
            for (std::size_t j = 0; j < cols; ++j) {
                if (col_done[j] || m[i][j].is_zero()) continue;
                const QPoly d = gcd(m[i][j], modulus);
                if (d.degree() == 0) {
                    pi = i;
                    pj = j;
                    break;
                }
                // zero divisor: split the modulus and redo both branches
                rank_modulo(A, B, d, out);
                rank_modulo(A, B, modulus.exact_div(d).monic(), out);
                return;
            }
        }
        if (pi == rows) break;  // no usable pivot left: remaining block is zero

        const auto bezout = xgcd(m[pi][pj], modulus);
        const QPoly inv = bezout[1] % modulus;  // gcd is 1 here
        for (std::size_t i = 0; i < rows; ++i) {
            if (row_done[i] || i == pi || m[i][pj].is_zero()) continue;
            const QPoly factor = (m[i][pj] * inv) % modulus;
            for (std::size_t j = 0; j < cols; ++j) {
                if (col_done[j]) continue;
                m[i][j] = (m[i][j] - factor * m[pi][j]) % modulus;
            }
        }
        row_done[pi] = true;
        col_done[pj] = true;
        ++r;
    }
    out.emplace_back(modulus, r);
}

}  // namespace

PencilRankCertificate pencil_min_rank(const RationalMatrix& A, const RationalMatrix& B,
                                      PencilMode mode, std::uint64_t seed) {
    if (A.rows() != B.rows() || A.cols() != B.cols())
        throw std::invalid_argument("pencil_min_rank: shape mismatch");

    PencilRankCertificate cert;
    cert.mode = mode;
    cert.seed = seed;
    cert.certifying = (mode == PencilMode::Exact);

    if (mode == PencilMode::Sampled) {
        struct Sample {
            Rational a, b;
            bool infinity;
            long rank;
        };
        std::vector<Sample> samples;
        samples.push_back({Rational(1), Rational(0), false, rank(A)});
        samples.push_back({Rational(0), Rational(1), true, rank(B)});
        Rng rng(seed);
        for (int i = 0; i < 16; ++i) {
            const Rational t = make_rational(Integer(rng.uniform(-99, 99)),
                                             Integer(rng.uniform(1, 99)));
            samples.push_back({Rational(1), t, false, rank(evaluate_pencil(A, B, 1, t))});
        }
        long generic = 0, minimum = samples.front().rank;
        for (const auto& s : samples) {
            generic = std::max(generic, s.rank);
            minimum = std::min(minimum, s.rank);
        }
        cert.generic_rank = generic;
        cert.min_rank = minimum;
        for (const auto& s : samples) {
            if (s.rank >= generic) continue;
            PencilDropPoint p;
            p.rank = s.rank;
            if (s.infinity) {
                p.at_infinity = true;
                p.form = "a";
            } else {
                // the linear form vanishing at (1 : t)
                std::vector<Rational> c{-s.b, Rational(1)};
                p.factor = QPoly(std::move(c)).primitive();
                p.form = render_binary_form(p.factor);
            }
            cert.drop_points.push_back(std::move(p));
        }
        return cert;
    }

    const PolyRankResult generic = poly_pencil_rank(A, B);
    cert.generic_rank = generic.rank;
    cert.min_rank = generic.rank;
    if (generic.rank == 0) return cert;  // both matrices vanish identically

    // Candidate points: roots of the extracted minor delta(t), plus (0:1)
    // when deg delta < rank (the homogenization picks up a factor a^k).
    // Any point with a rank drop kills every maximal minor, so this set is
    // exhaustive.
    std::vector<std::pair<QPoly, long>> component_ranks;
    for (const auto& [factor, mult] : squarefree_decomposition(generic.minor))
        rank_modulo(A, B, factor.monic(), component_ranks);

    for (const auto& [factor, r] : component_ranks) {
        if (r >= generic.rank) continue;
        PencilDropPoint p;
        p.factor = factor.primitive();
        p.rank = r;
        p.form = render_binary_form(p.factor);
        cert.drop_points.push_back(std::move(p));
        cert.min_rank = std::min(cert.min_rank, r);
    }

    if (generic.minor.degree() < generic.rank) {
        const long rank_at_infinity = rank(B);
        if (rank_at_infinity < generic.rank) {
            PencilDropPoint p;
            p.at_infinity = true;
            p.rank = rank_at_infinity;
            p.form = "a";
            cert.drop_points.push_back(std::move(p));
            cert.min_rank = std::min(cert.min_rank, rank_at_infinity);
        }
    }

    std::sort(cert.drop_points.begin(), cert.drop_points.end(),
              [](const PencilDropPoint& x, const PencilDropPoint& y) {
                  if (x.at_infinity != y.at_infinity) return y.at_infinity;
                  return x.form < y.form;
              });
    return cert;
}

}  // namespace wph
