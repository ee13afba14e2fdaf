#include "fermat/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <utility>

namespace fermat {

namespace {

// --- integer polynomial helpers (ascending coefficients) ---

std::vector<BigInt> int_poly_mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    std::vector<BigInt> out(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

// Exact division by a monic divisor; the remainder must vanish.
std::vector<BigInt> int_poly_div_exact(std::vector<BigInt> num, const std::vector<BigInt>& den) {
    const std::size_t dn = num.size() - 1;
    const std::size_t dd = den.size() - 1;
    std::vector<BigInt> quo(dn - dd + 1, BigInt(0));
    for (std::size_t i = dn + 1; i-- > dd;) {
        BigInt c = num[i];
        if (c == 0) continue;
        quo[i - dd] = c;
        for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    for (const BigInt& c : num)
        if (c != 0) throw Error("cyclotomic polynomial division left a remainder");
    return quo;
}

// --- rational polynomial helpers for the power table and inversion ---

using RatPoly = std::vector<Rational>;  // ascending, may carry trailing zeros

void rat_poly_trim(RatPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

RatPoly rat_poly_mul(const RatPoly& a, const RatPoly& b) {
    if (a.empty() || b.empty()) return {};
    RatPoly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    rat_poly_trim(out);
    return out;
}

RatPoly rat_poly_sub(RatPoly a, const RatPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    rat_poly_trim(a);
    return a;
}

// Division with remainder; quotient discarded by callers that only need the remainder.
std::pair<RatPoly, RatPoly> rat_poly_divmod(RatPoly num, const RatPoly& den) {
    rat_poly_trim(num);
    if (den.empty()) throw DivisionByZeroError("polynomial division by zero");
    RatPoly quo;
    if (num.size() >= den.size()) quo.assign(num.size() - den.size() + 1, Rational(0));
    const Rational lead_inv = den.back().inverse();
    while (num.size() >= den.size()) {
        const std::size_t shift = num.size() - den.size();
        Rational c = num.back() * lead_inv;
        quo[shift] = c;
        for (std::size_t j = 0; j < den.size(); ++j) num[shift + j] -= c * den[j];
        rat_poly_trim(num);
        if (num.size() > shift + den.size() - 1) throw Error("polynomial division failed to reduce degree");
    }
    return {std::move(quo), std::move(num)};
}

std::map<unsigned, std::vector<BigInt>>& cyclotomic_cache() {
    static std::map<unsigned, std::vector<BigInt>> cache;
    return cache;
}

std::mutex& cyclotomic_mutex() {
    static std::mutex m;
    return m;
}

std::vector<BigInt> cyclotomic_polynomial_locked(unsigned k) {
    auto& cache = cyclotomic_cache();
    if (auto it = cache.find(k); it != cache.end()) return it->second;
    std::vector<BigInt> phi;
    if (k == 1) {
        phi = {BigInt(-1), BigInt(1)};  // X - 1
    } else {
        std::vector<BigInt> divisor_product{BigInt(1)};
        for (unsigned d = 1; d < k; ++d)
            if (k % d == 0) divisor_product = int_poly_mul(divisor_product, cyclotomic_polynomial_locked(d));
        std::vector<BigInt> xk_minus_1(k + 1, BigInt(0));
        xk_minus_1[0] = -1;
        xk_minus_1[k] = 1;
        phi = int_poly_div_exact(std::move(xk_minus_1), divisor_product);
    }
    cache.emplace(k, phi);
    return phi;
}

}  // namespace

std::vector<BigInt> cyclotomic_polynomial(unsigned k) {
    if (k < 1) throw IndexError("cyclotomic polynomial needs k >= 1");
    std::lock_guard<std::mutex> lock(cyclotomic_mutex());
    return cyclotomic_polynomial_locked(k);
}

FieldSpec::FieldSpec(unsigned conductor) : conductor_(conductor) {
    minpoly_ = cyclotomic_polynomial(conductor);
    degree_ = static_cast<unsigned>(minpoly_.size() - 1);

    // zeta^t for 0 <= t <= 2*(degree-1), using zeta^degree = -(low-order part of Phi).
    const unsigned table_size = degree_ >= 1 ? 2 * degree_ - 1 : 1;
    power_table_.reserve(table_size);
    for (unsigned t = 0; t < degree_; ++t) {
        std::vector<Rational> unit(degree_, Rational(0));
        unit[t] = Rational(1);
        power_table_.push_back(std::move(unit));
    }
    for (unsigned t = degree_; t < table_size; ++t) {
        // zeta^t = zeta * zeta^(t-1); fold the overflow coordinate through the minimal polynomial.
        const std::vector<Rational>& prev = power_table_[t - 1];
        std::vector<Rational> next(degree_, Rational(0));
        for (unsigned j = 0; j + 1 < degree_; ++j) next[j + 1] = prev[j];
        const Rational& top = prev[degree_ - 1];
        if (!top.is_zero())
            for (unsigned j = 0; j < degree_; ++j) next[j] -= top * Rational(minpoly_[j]);
        power_table_.push_back(std::move(next));
    }
}

FieldPtr FieldSpec::make(unsigned conductor) {
    if (conductor < 1) throw IndexError("field conductor must be >= 1");
    static std::mutex mutex;
    static std::map<unsigned, FieldPtr> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(conductor);
    if (it != cache.end()) return it->second;
    FieldPtr spec(new FieldSpec(conductor));
    cache.emplace(conductor, spec);
    return spec;
}

CycloNum::CycloNum(FieldPtr field, std::vector<Rational> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {}

CycloNum CycloNum::zero(const FieldPtr& field) {
    return CycloNum(field, std::vector<Rational>(field->degree(), Rational(0)));
}

CycloNum CycloNum::one(const FieldPtr& field) { return from_rational(field, Rational(1)); }

CycloNum CycloNum::from_rational(const FieldPtr& field, const Rational& r) {
    std::vector<Rational> coords(field->degree(), Rational(0));
    coords[0] = r;
    // Degenerate conductor 1: zeta = 1, so the basis vector is still correct.
    return CycloNum(field, std::move(coords));
}

CycloNum CycloNum::from_coords(const FieldPtr& field, std::vector<Rational> coords) {
    if (coords.size() != field->degree()) throw ShapeError("coordinate vector has wrong length");
    return CycloNum(field, std::move(coords));
}

CycloNum CycloNum::zeta(const FieldPtr& field) { return zeta_power(field, 1); }

CycloNum CycloNum::zeta_power(const FieldPtr& field, long long t) {
    const long long k = field->conductor();
    long long r = t % k;
    if (r < 0) r += k;
    CycloNum out = one(field);
    CycloNum z = [&] {
        if (field->degree() == 1) {
            // Conductor 1 (zeta = 1) or 2 (zeta = -1): read zeta off the minimal polynomial.
            return from_rational(field, Rational(BigInt(-field->minimal_polynomial()[0])));
        }
        std::vector<Rational> coords(field->degree(), Rational(0));
        coords[1] = Rational(1);
        return CycloNum(field, std::move(coords));
    }();
    for (long long s = 0; s < r; ++s) out *= z;
    return out;
}

CycloNum CycloNum::imaginary_unit(const FieldPtr& field) {
    if (field->conductor() % 4 != 0)
        throw UnsupportedElementError("i is not representable: 4 does not divide conductor " +
                                      std::to_string(field->conductor()));
    return zeta_power(field, field->conductor() / 4);
}

bool CycloNum::is_zero() const {
    for (const Rational& c : coords_)
        if (!c.is_zero()) return false;
    return true;
}

bool CycloNum::is_rational() const {
    for (std::size_t t = 1; t < coords_.size(); ++t)
        if (!coords_[t].is_zero()) return false;
    return true;
}

Rational CycloNum::rational_value() const {
    if (!is_rational()) throw UnsupportedElementError("element is not rational: " + str());
    return coords_[0];
}

void require_same_field(const CycloNum& a, const CycloNum& b) {
    if (a.field()->conductor() != b.field()->conductor())
        throw FieldMismatchError("field mismatch: conductor " + std::to_string(a.field()->conductor()) +
                                 " vs " + std::to_string(b.field()->conductor()));
}

CycloNum CycloNum::operator-() const {
    std::vector<Rational> coords(coords_.size());
    for (std::size_t t = 0; t < coords_.size(); ++t) coords[t] = -coords_[t];
    return CycloNum(field_, std::move(coords));
}

CycloNum& CycloNum::operator+=(const CycloNum& o) {
    require_same_field(*this, o);
    for (std::size_t t = 0; t < coords_.size(); ++t) coords_[t] += o.coords_[t];
    return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& o) {
    require_same_field(*this, o);
    for (std::size_t t = 0; t < coords_.size(); ++t) coords_[t] -= o.coords_[t];
    return *this;
}

CycloNum& CycloNum::operator*=(const CycloNum& o) {
    require_same_field(*this, o);
    const unsigned d = field_->degree();
    std::vector<Rational> conv(2 * d - 1, Rational(0));
    for (unsigned i = 0; i < d; ++i) {
        if (coords_[i].is_zero()) continue;
        for (unsigned j = 0; j < d; ++j) {
            if (o.coords_[j].is_zero()) continue;
            conv[i + j] += coords_[i] * o.coords_[j];
        }
    }
    std::vector<Rational> out(conv.begin(), conv.begin() + d);
    for (unsigned t = d; t < conv.size(); ++t) {
        if (conv[t].is_zero()) continue;
        const std::vector<Rational>& fold = field_->zeta_power_coords(t);
        for (unsigned j = 0; j < d; ++j)
            if (!fold[j].is_zero()) out[j] += conv[t] * fold[j];
    }
    coords_ = std::move(out);
    return *this;
}

CycloNum operator*(const Rational& r, CycloNum a) {
    for (Rational& c : a.coords_) c *= r;
    return a;
}

bool operator==(const CycloNum& a, const CycloNum& b) {
    require_same_field(a, b);
    return a.coords_ == b.coords_;
}

CycloNum CycloNum::inverse() const {
    if (is_zero()) throw DivisionByZeroError("inverse of zero field element");
    const unsigned d = field_->degree();
    RatPoly a(coords_);
    rat_poly_trim(a);
    RatPoly modulus(d + 1);
    for (unsigned j = 0; j <= d; ++j) modulus[j] = Rational(field_->minimal_polynomial()[j]);

    // Extended Euclid: maintain r = s*a + t*modulus, keep only s.
    RatPoly r0 = modulus, r1 = a;
    RatPoly s0 = {}, s1 = {Rational(1)};
    while (true) {
        auto [q, rem] = rat_poly_divmod(r0, r1);
        if (rem.empty()) break;  // r1 is the gcd
        RatPoly s2 = rat_poly_sub(s0, rat_poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // Phi_k is irreducible over Q, so the gcd r1 is a nonzero constant.
    if (r1.size() != 1) throw Error("minimal polynomial shares a factor with a nonzero element");
    const Rational scale = r1[0].inverse();
    std::vector<Rational> coords(d, Rational(0));
    for (std::size_t j = 0; j < s1.size(); ++j) coords[j] = s1[j] * scale;
    return CycloNum(field_, std::move(coords));
}

std::string CycloNum::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t t = 0; t < coords_.size(); ++t) {
        const Rational& c = coords_[t];
        if (c.is_zero()) continue;
        const Rational mag = c.abs();
        if (first) {
            if (c.is_negative()) out << "-";
            first = false;
        } else {
            out << (c.is_negative() ? " - " : " + ");
        }
        if (t == 0) {
            out << mag.str();
        } else {
            if (mag != Rational(1)) out << mag.str() << "*";
            out << "w";
            if (t > 1) out << "^" << t;
        }
    }
    return out.str();
}

}  // namespace fermat
