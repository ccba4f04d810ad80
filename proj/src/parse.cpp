#include <cctype>
#include <string>

#include "wph/polynomial.hpp"

namespace wph {

namespace {

// Recursive-descent parser for
//   expr   := ['+'|'-'] term { ('+'|'-') term }
//   term   := factor { '*' factor }
//   factor := number ['^' uint] | variable ['^' uint]
//   number := uint ['/' uint]
// with variables x1..x4 and insignificant whitespace.
class Parser {
public:
    Parser(const std::string& text, const WeightSystem& ws) : text_(text), ws_(ws) {}

    WeightedPolynomial parse() {
        std::vector<WeightedPolynomial::Term> terms;
        skip_ws();
        bool negative = consume_sign();
        while (true) {
            auto [m, c] = parse_term();
            terms.emplace_back(m, negative ? Rational(-c) : c);
            skip_ws();
            if (pos_ >= text_.size()) break;
            if (text_[pos_] == '+') {
                ++pos_;
                negative = false;
            } else if (text_[pos_] == '-') {
                ++pos_;
                negative = true;
            } else {
                fail("expected '+' or '-'");
            }
            skip_ws();
        }
        return WeightedPolynomial::from_terms(ws_, std::move(terms));
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool consume_sign() {
        if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
            const bool neg = text_[pos_] == '-';
            ++pos_;
            skip_ws();
            return neg;
        }
        return false;
    }

    bool at_digit() const {
        return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }

    Integer parse_uint() {
        if (!at_digit()) fail("expected a digit");
        const std::size_t start = pos_;
        while (at_digit()) ++pos_;
        return Integer(text_.substr(start, pos_ - start));
    }

    long parse_exponent() {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '-') fail("negative exponent");
        if (!at_digit()) fail("expected a non-negative exponent");
        Integer e = parse_uint();
        if (!e.fits_slong_p()) fail("exponent too large");
        return e.get_si();
    }

    std::pair<Monomial, Rational> parse_term() {
        Monomial m;
        Rational c(1);
        bool expect_factor = true;
        while (expect_factor) {
            skip_ws();
            if (at_digit()) {
                Integer num = parse_uint();
                Integer den(1);
                skip_ws();
                if (pos_ < text_.size() && text_[pos_] == '/') {
                    ++pos_;
                    skip_ws();
                    const std::size_t den_pos = pos_;
                    den = parse_uint();
                    if (den == 0) throw ParseError(den_pos, "zero denominator");
                }
                Rational value = make_rational(num, den);
                skip_ws();
                if (pos_ < text_.size() && text_[pos_] == '^') {
                    ++pos_;
                    const long e = parse_exponent();
                    Rational p(1);
                    for (long i = 0; i < e; ++i) p *= value;
                    value = p;
                }
                c *= value;
            } else if (pos_ < text_.size() && text_[pos_] == 'x') {
                const std::size_t var_pos = pos_;
                ++pos_;
                if (!at_digit()) throw ParseError(var_pos, "unknown variable");
                Integer idx = parse_uint();
                if (idx < 1 || idx > static_cast<long>(kNumVars))
                    throw ParseError(var_pos, "unknown variable (only x1..x4)");
                const std::size_t var = idx.get_ui() - 1;
                long e = 1;
                skip_ws();
                if (pos_ < text_.size() && text_[pos_] == '^') {
                    ++pos_;
                    e = parse_exponent();
                }
                m.k[var] += static_cast<int>(e);
            } else if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
                fail("unknown variable");
            } else {
                fail("expected a coefficient or variable");
            }
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '*') {
                ++pos_;
                expect_factor = true;
            } else {
                expect_factor = false;
            }
        }
        return {m, c};
    }

    const std::string& text_;
    WeightSystem ws_;
    std::size_t pos_ = 0;
};

}  // namespace

WeightedPolynomial parse_polynomial(const std::string& text, const WeightSystem& ws) {
    Parser parser(text, ws);
    return parser.parse();
}

}  // namespace wph
