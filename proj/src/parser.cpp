#include "fermat/parser.hpp"

#include <algorithm>
#include <cctype>

namespace fermat {

namespace {

// Character-level recursive descent over one input string. Variables are
// optional so the same grammar serves full expressions and bare coefficients.
class ExpressionParser {
  public:
    ExpressionParser(const std::string& text, RingSpecPtr spec)
        : text_(text), spec_(std::move(spec)) {}

    RingElem parse() {
        RingElem value = expression();
        skip_spaces();
        if (pos_ != text_.size()) fail_syntax("unexpected trailing input");
        return value;
    }

  private:
    [[noreturn]] void fail(ParseError::Kind kind, const std::string& message) {
        throw ParseError(kind, pos_, message);
    }
    [[noreturn]] void fail_syntax(const std::string& message) { fail(ParseError::Kind::syntax, message); }

    void skip_spaces() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_spaces();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_spaces();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    BigInt read_uint() {
        skip_spaces();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail_syntax("expected a number");
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return BigInt(text_.substr(start, pos_ - start));
    }

    unsigned read_small_uint(const char* what) {
        const BigInt v = read_uint();
        if (v > 1000000) fail_syntax(std::string("unreasonably large ") + what);
        return static_cast<unsigned>(v);
    }

    RingElem expression() {
        skip_spaces();
        bool negate = false;
        if (eat('-'))
            negate = true;
        else
            eat('+');
        RingElem value = term();
        if (negate) value = -value;
        while (true) {
            skip_spaces();
            if (eat('+'))
                value += term();
            else if (eat('-'))
                value -= term();
            else
                break;
        }
        return value;
    }

    RingElem term() {
        RingElem value = primary();
        while (true) {
            skip_spaces();
            if (eat('*')) {
                value = value * primary();
                continue;
            }
            // Juxtaposition: a primary may follow without an explicit '*'.
            const char c = peek();
            if (c == 'x' || c == 'w' || c == 'i' || c == '(' ||
                std::isdigit(static_cast<unsigned char>(c))) {
                value = value * primary();
                continue;
            }
            break;
        }
        return value;
    }

    RingElem primary() {
        RingElem value = base();
        skip_spaces();
        if (eat('^')) {
            const unsigned e = read_small_uint("exponent");
            RingElem out = RingElem::one(spec_);
            for (unsigned t = 0; t < e; ++t) out = out * value;
            return out;
        }
        return value;
    }

    RingElem base() {
        skip_spaces();
        if (pos_ >= text_.size()) fail_syntax("unexpected end of input");
        const std::size_t at = pos_;
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            RingElem value = expression();
            if (!eat(')')) fail_syntax("expected ')'");
            return value;
        }
        if (c == 'x') {
            ++pos_;
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                pos_ = at;
                fail_syntax("expected a variable index after 'x'");
            }
            const unsigned index = read_small_uint("variable index");
            if (index < 1 || index > spec_->n()) {
                pos_ = at;
                fail(ParseError::Kind::arity,
                     "variable x" + std::to_string(index) + " out of range for n=" +
                         std::to_string(spec_->n()));
            }
            return RingElem::variable(spec_, index);
        }
        if (c == 'w') {
            ++pos_;
            return RingElem::constant(spec_, CycloNum::zeta(spec_->field()));
        }
        if (c == 'i') {
            ++pos_;
            if (spec_->field()->conductor() % 4 != 0) {
                pos_ = at;
                fail(ParseError::Kind::literal,
                     "'i' needs 4 | conductor; field has conductor " +
                         std::to_string(spec_->field()->conductor()));
            }
            return RingElem::constant(spec_, CycloNum::imaginary_unit(spec_->field()));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const BigInt num = read_uint();
            if (eat('/')) {
                const BigInt den = read_uint();
                if (den == 0) fail_syntax("zero denominator");
                return RingElem::constant(spec_, Rational(num, den));
            }
            return RingElem::constant(spec_, Rational(num));
        }
        fail_syntax(std::string("unexpected character '") + c + "'");
    }

    const std::string& text_;
    RingSpecPtr spec_;
    std::size_t pos_ = 0;
};

// Coefficient-only inputs reuse the expression machinery through a minimal
// ring whose variables are rejected up front.
RingSpecPtr scalar_spec(const FieldPtr& field) {
    return RingSpec::make(3, {2, 2, 2}, field);
}

}  // namespace

RingElem parse_expression(const std::string& text, const RingSpecPtr& spec) {
    return ExpressionParser(text, spec).parse();
}

CycloNum parse_coefficient(const std::string& text, const FieldPtr& field) {
    for (std::size_t at = 0; at < text.size(); ++at)
        if (text[at] == 'x') throw ParseError(ParseError::Kind::syntax, at, "variables are not allowed here");
    const RingElem value = ExpressionParser(text, scalar_spec(field)).parse();
    if (!value.is_constant()) throw ParseError(ParseError::Kind::syntax, 0, "expected a constant");
    return value.is_zero() ? CycloNum::zero(field)
                           : value.terms().begin()->second;
}

Matrix parse_matrix(const std::string& text, const FieldPtr& field) {
    std::vector<std::vector<CycloNum>> rows;
    std::size_t row_start = 0;
    std::size_t at = 0;
    auto flush_row = [&](std::size_t end) {
        std::vector<CycloNum> row;
        std::size_t cell_start = row_start;
        for (std::size_t p = row_start; p <= end; ++p) {
            if (p == end || text[p] == ',') {
                const std::string cell = text.substr(cell_start, p - cell_start);
                try {
                    row.push_back(parse_coefficient(cell, field));
                } catch (const ParseError& e) {
                    throw ParseError(e.kind, cell_start + e.offset, "bad matrix entry");
                }
                cell_start = p + 1;
            }
        }
        rows.push_back(std::move(row));
    };
    for (; at < text.size(); ++at)
        if (text[at] == ';') {
            flush_row(at);
            row_start = at + 1;
        }
    flush_row(text.size());

    const std::size_t cols = rows.front().size();
    for (const auto& row : rows)
        if (row.size() != cols) throw ParseError(ParseError::Kind::syntax, 0, "ragged matrix rows");
    Matrix m(field, static_cast<unsigned>(rows.size()), static_cast<unsigned>(cols));
    for (unsigned r = 0; r < rows.size(); ++r)
        for (unsigned c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
    return m;
}

RingSpecText parse_ring_spec(const std::string& text, unsigned default_conductor) {
    RingSpecText out{0, {}, default_conductor, false};
    bool have_n = false, have_m = false;
    std::size_t at = 0;
    while (at < text.size()) {
        std::size_t end = text.find(';', at);
        if (end == std::string::npos) end = text.size();
        const std::string piece = text.substr(at, end - at);
        const std::size_t eq = piece.find('=');
        if (eq == std::string::npos)
            throw ParseError(ParseError::Kind::syntax, at, "expected key=value in ring spec");
        const std::string key = piece.substr(0, eq);
        const std::string value = piece.substr(eq + 1);
        auto parse_uint = [&](const std::string& s, std::size_t offset) -> unsigned {
            if (s.empty()) throw ParseError(ParseError::Kind::syntax, offset, "expected a number");
            unsigned v = 0;
            for (char c : s) {
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    throw ParseError(ParseError::Kind::syntax, offset, "expected a number");
                v = v * 10 + static_cast<unsigned>(c - '0');
                if (v > 1000000) throw ParseError(ParseError::Kind::syntax, offset, "number too large");
            }
            return v;
        };
        if (key == "n") {
            out.n = parse_uint(value, at + eq + 1);
            have_n = true;
        } else if (key == "m") {
            std::size_t start = 0;
            while (start <= value.size()) {
                std::size_t comma = value.find(',', start);
                if (comma == std::string::npos) comma = value.size();
                out.exponents.push_back(parse_uint(value.substr(start, comma - start), at + eq + 1 + start));
                start = comma + 1;
            }
            have_m = true;
        } else if (key == "field") {
            out.conductor = parse_uint(value, at + eq + 1);
            out.conductor_given = true;
        } else {
            throw ParseError(ParseError::Kind::syntax, at, "unknown ring spec key '" + key + "'");
        }
        at = end + 1;
    }
    if (!have_n || !have_m)
        throw ParseError(ParseError::Kind::syntax, text.size(), "ring spec needs n=... and m=...");
    return out;
}

std::vector<RingElem> parse_images(const std::string& text, const RingSpecPtr& spec) {
    std::string body = text;
    const std::string tag = "images:";
    if (body.rfind(tag, 0) == 0) body = body.substr(tag.size());

    std::vector<RingElem> images(spec->n(), RingElem::zero(spec));
    std::vector<bool> seen(spec->n(), false);
    std::size_t at = 0;
    while (at < body.size()) {
        std::size_t end = body.find(';', at);
        if (end == std::string::npos) end = body.size();
        std::string piece = body.substr(at, end - at);
        const std::size_t eq = piece.find('=');
        if (eq == std::string::npos)
            throw ParseError(ParseError::Kind::syntax, at, "expected d(xk)=<expr>");
        std::string lhs = piece.substr(0, eq);
        lhs.erase(std::remove_if(lhs.begin(), lhs.end(),
                                 [](unsigned char c) { return std::isspace(c); }),
                  lhs.end());
        if (lhs.size() < 5 || lhs.rfind("d(x", 0) != 0 || lhs.back() != ')')
            throw ParseError(ParseError::Kind::syntax, at, "expected d(xk)=<expr>");
        unsigned index = 0;
        for (std::size_t p = 3; p + 1 < lhs.size(); ++p) {
            if (!std::isdigit(static_cast<unsigned char>(lhs[p])))
                throw ParseError(ParseError::Kind::syntax, at, "expected d(xk)=<expr>");
            index = index * 10 + static_cast<unsigned>(lhs[p] - '0');
        }
        if (index < 1 || index > spec->n())
            throw ParseError(ParseError::Kind::arity, at, "image index out of range");
        try {
            images[index - 1] = parse_expression(piece.substr(eq + 1), spec);
        } catch (const ParseError& e) {
            throw ParseError(e.kind, at + eq + 1 + e.offset, "bad image expression");
        }
        seen[index - 1] = true;
        at = end + 1;
    }
    for (unsigned i = 0; i < spec->n(); ++i)
        if (!seen[i])
            throw ParseError(ParseError::Kind::arity, body.size(),
                             "missing image for x" + std::to_string(i + 1));
    return images;
}

}  // namespace fermat
