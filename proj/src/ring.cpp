#include "fermat/ring.hpp"

#include <numeric>
#include <sstream>

namespace fermat {

RingSpec::RingSpec(unsigned n, std::vector<unsigned> exponents, FieldPtr field)
    : n_(n), exponents_(std::move(exponents)), field_(std::move(field)) {}

RingSpecPtr RingSpec::make(unsigned n, std::vector<unsigned> exponents, const FieldPtr& field) {
    if (n < 3) throw ShapeError("ring needs n >= 3 variables");
    if (exponents.size() != n) throw ShapeError("exponent list length differs from n");
    for (unsigned m : exponents)
        if (m < 2) throw ShapeError("every exponent m_i must be >= 2");
    return RingSpecPtr(new RingSpec(n, std::move(exponents), field));
}

RingSpecPtr RingSpec::make(unsigned n, std::vector<unsigned> exponents, unsigned conductor) {
    return make(n, std::move(exponents), FieldSpec::make(conductor));
}

bool RingSpec::all_exponents_at_least(unsigned bound) const {
    for (unsigned m : exponents_)
        if (m < bound) return false;
    return true;
}

bool RingSpec::uniform_exponent() const {
    for (unsigned m : exponents_)
        if (m != exponents_.front()) return false;
    return true;
}

std::string RingSpec::str() const {
    std::ostringstream out;
    out << "n=" << n_ << ";m=";
    for (unsigned i = 0; i < n_; ++i) out << (i ? "," : "") << exponents_[i];
    out << ";field=" << field_->conductor();
    return out.str();
}

void require_same_spec(const RingSpecPtr& a, const RingSpecPtr& b) {
    if (!(*a == *b)) throw RingMismatchError("ring mismatch: " + a->str() + " vs " + b->str());
}

unsigned Monomial::total_degree() const {
    return std::accumulate(exponents.begin(), exponents.end(), 0u);
}

std::string Monomial::str() const {
    std::ostringstream out;
    bool any = false;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] == 0) continue;
        if (any) out << "*";
        out << "x" << (i + 1);
        if (exponents[i] > 1) out << "^" << exponents[i];
        any = true;
    }
    return any ? out.str() : "1";
}

RingElem RingElem::zero(const RingSpecPtr& spec) { return RingElem(spec, {}); }

RingElem RingElem::one(const RingSpecPtr& spec) { return constant(spec, Rational(1)); }

RingElem RingElem::constant(const RingSpecPtr& spec, const CycloNum& c) {
    TermMap terms;
    if (!c.is_zero()) terms.emplace(Monomial{std::vector<unsigned>(spec->n(), 0)}, c);
    return RingElem(spec, std::move(terms));
}

RingElem RingElem::constant(const RingSpecPtr& spec, const Rational& r) {
    return constant(spec, CycloNum::from_rational(spec->field(), r));
}

RingElem RingElem::variable(const RingSpecPtr& spec, unsigned i) {
    if (i < 1 || i > spec->n()) throw IndexError("variable index out of range");
    Monomial mono{std::vector<unsigned>(spec->n(), 0)};
    mono.exponents[i - 1] = 1;
    return monomial(spec, std::move(mono), CycloNum::one(spec->field()));
}

RingElem RingElem::monomial(const RingSpecPtr& spec, Monomial mono, const CycloNum& coeff) {
    return from_terms(spec, {{std::move(mono), coeff}});
}

RingElem RingElem::from_terms(const RingSpecPtr& spec,
                              std::vector<std::pair<Monomial, CycloNum>> terms) {
    const unsigned n = spec->n();
    const unsigned mn = spec->exponents().back();
    TermMap normal;
    auto add_term = [&](const Monomial& mono, const CycloNum& coeff) {
        if (coeff.is_zero()) return;
        auto [it, inserted] = normal.emplace(mono, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) normal.erase(it);
        }
    };

    // Worklist of not-yet-normal terms; each rewrite lowers the x_n exponent
    // by m_n, so the loop terminates.
    std::vector<std::pair<Monomial, CycloNum>> pending = std::move(terms);
    while (!pending.empty()) {
        auto [mono, coeff] = std::move(pending.back());
        pending.pop_back();
        if (mono.exponents.size() != n) throw ShapeError("monomial arity differs from ring");
        if (coeff.is_zero()) continue;
        if (mono.exponents.back() < mn) {
            add_term(mono, coeff);
            continue;
        }
        Monomial base = mono;
        base.exponents.back() -= mn;
        for (unsigned j = 0; j + 1 < n; ++j) {
            Monomial rewritten = base;
            rewritten.exponents[j] += spec->exponent(j);
            pending.emplace_back(std::move(rewritten), -coeff);
        }
    }
    return RingElem(spec, std::move(normal));
}

bool RingElem::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.total_degree() == 0);
}

unsigned RingElem::degree() const {
    unsigned d = 0;
    for (const auto& [mono, coeff] : terms_) d = std::max(d, mono.total_degree());
    return d;
}

bool RingElem::is_homogeneous(unsigned* degree_out) const {
    if (terms_.empty()) {
        if (degree_out) *degree_out = 0;
        return true;
    }
    const unsigned k = terms_.begin()->first.total_degree();
    for (const auto& [mono, coeff] : terms_)
        if (mono.total_degree() != k) return false;
    if (degree_out) *degree_out = k;
    return true;
}

CycloNum RingElem::coefficient(const Monomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? CycloNum::zero(spec_->field()) : it->second;
}

RingElem RingElem::operator-() const {
    TermMap terms = terms_;
    for (auto& [mono, coeff] : terms) coeff = -coeff;
    return RingElem(spec_, std::move(terms));
}

RingElem& RingElem::operator+=(const RingElem& o) {
    require_same_spec(spec_, o.spec_);
    for (const auto& [mono, coeff] : o.terms_) {
        auto [it, inserted] = terms_.emplace(mono, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

RingElem& RingElem::operator-=(const RingElem& o) { return *this += -o; }

RingElem operator*(const RingElem& a, const RingElem& b) {
    require_same_spec(a.spec_, b.spec_);
    std::vector<std::pair<Monomial, CycloNum>> products;
    products.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            Monomial mono = ma;
            for (std::size_t i = 0; i < mono.exponents.size(); ++i) mono.exponents[i] += mb.exponents[i];
            products.emplace_back(std::move(mono), ca * cb);
        }
    return RingElem::from_terms(a.spec_, std::move(products));
}

RingElem operator*(const CycloNum& s, const RingElem& f) {
    if (s.is_zero()) return RingElem::zero(f.spec_);
    TermMap terms = f.terms_;
    for (auto it = terms.begin(); it != terms.end();) {
        it->second = s * it->second;
        it = it->second.is_zero() ? terms.erase(it) : std::next(it);
    }
    return RingElem(f.spec_, std::move(terms));
}

bool operator==(const RingElem& a, const RingElem& b) {
    require_same_spec(a.spec_, b.spec_);
    return a.terms_ == b.terms_;
}

std::map<unsigned, RingElem> RingElem::homogeneous_components() const {
    std::map<unsigned, TermMap> split;
    for (const auto& [mono, coeff] : terms_) split[mono.total_degree()].emplace(mono, coeff);
    std::map<unsigned, RingElem> out;
    for (auto& [k, terms] : split) out.emplace(k, RingElem(spec_, std::move(terms)));
    return out;
}

RingElem RingElem::partial_derivative(unsigned i) const {
    TermMap out;
    for (const auto& [mono, coeff] : terms_) {
        const unsigned e = mono.exponents[i];
        if (e == 0) continue;
        Monomial lowered = mono;
        lowered.exponents[i] = e - 1;
        out.emplace(std::move(lowered), Rational(static_cast<int>(e)) * coeff);
    }
    return RingElem(spec_, std::move(out));
}

std::string RingElem::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [mono, coeff] : terms_) {
        const bool constant_term = mono.total_degree() == 0;
        // Count the nonzero coordinates to decide between a bare literal,
        // "c*", and a parenthesized multi-term coefficient.
        unsigned nonzero = 0;
        std::size_t power = 0;
        for (std::size_t t = 0; t < coeff.coords().size(); ++t)
            if (!coeff.coords()[t].is_zero()) {
                ++nonzero;
                power = t;
            }
        if (nonzero > 1) {
            out << (first ? "" : " + ") << "(" << coeff.str() << ")";
            if (!constant_term) out << "*" << mono.str();
            first = false;
            continue;
        }
        const Rational& c = coeff.coords()[power];
        if (first) {
            if (c.is_negative()) out << "-";
            first = false;
        } else {
            out << (c.is_negative() ? " - " : " + ");
        }
        const Rational mag = c.abs();
        std::string coeff_part;
        if (power > 0) {
            if (mag != Rational(1)) coeff_part = mag.str() + "*";
            coeff_part += "w";
            if (power > 1) coeff_part += "^" + std::to_string(power);
        } else if (mag != Rational(1) || constant_term) {
            coeff_part = mag.str();
        }
        if (constant_term) {
            out << coeff_part;
        } else if (coeff_part.empty()) {
            out << mono.str();
        } else {
            out << coeff_part << "*" << mono.str();
        }
    }
    return out.str();
}

namespace {
void enumerate_basis(const RingSpecPtr& spec, unsigned index, unsigned remaining,
                     Monomial& scratch, std::vector<Monomial>& out) {
    const unsigned n = spec->n();
    if (index + 1 == n) {
        if (remaining < spec->exponents().back()) {
            scratch.exponents[index] = remaining;
            out.push_back(scratch);
            scratch.exponents[index] = 0;
        }
        return;
    }
    for (unsigned e = remaining + 1; e-- > 0;) {
        scratch.exponents[index] = e;
        enumerate_basis(spec, index + 1, remaining - e, scratch, out);
    }
    scratch.exponents[index] = 0;
}
}  // namespace

std::vector<Monomial> vk_basis(const RingSpecPtr& spec, unsigned k) {
    std::vector<Monomial> out;
    Monomial scratch{std::vector<unsigned>(spec->n(), 0)};
    enumerate_basis(spec, 0, k, scratch, out);
    return out;
}

unsigned vk_dimension(const RingSpecPtr& spec, unsigned k) {
    return static_cast<unsigned>(vk_basis(spec, k).size());
}

RingElem relation_element(const RingSpecPtr& spec) {
    std::vector<std::pair<Monomial, CycloNum>> terms;
    for (unsigned i = 0; i < spec->n(); ++i) {
        Monomial mono{std::vector<unsigned>(spec->n(), 0)};
        mono.exponents[i] = spec->exponent(i);
        terms.emplace_back(std::move(mono), CycloNum::one(spec->field()));
    }
    return RingElem::from_terms(spec, std::move(terms));
}

}  // namespace fermat
