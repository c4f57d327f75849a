/**
 * @file field.hpp
 * @brief Runtime finite field F_q, q = p^e, in polynomial-basis representation.
 *
 * Elements are identified with their canonical index c_0 + c_1 p + ... + c_{e-1} p^{e-1},
 * where (c_0, ..., c_{e-1}) are the coefficients of the representing polynomial modulo the
 * field modulus. Index 0 is the additive identity, index 1 the multiplicative identity, and the
 * index order is the total order used by every enumeration in this library.
 *
 * Two access levels are provided:
 *  - Field::add / mul / ... operate on raw indices and are what the enumeration kernels use;
 *  - Element is a value type carrying its field, with checked operators.
 */
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace symcode {

using Index = std::uint32_t;

inline constexpr unsigned max_field_order = 65536;

namespace details {

inline bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Polynomials over F_p as coefficient vectors, lowest degree first, no trailing zeros.
using PolyP = std::vector<unsigned>;

inline void trim(PolyP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline unsigned inv_mod(unsigned a, unsigned p) {
    // a^(p-2) mod p
    std::uint64_t result = 1, base = a % p;
    unsigned e = p - 2;
    while (e) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<unsigned>(result);
}

// Remainder of a modulo b (b nonzero).
inline PolyP poly_mod(PolyP a, const PolyP& b, unsigned p) {
    trim(a);
    const unsigned lead_inv = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
        const unsigned factor = static_cast<unsigned>(std::uint64_t{a.back()} * lead_inv % p);
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = static_cast<unsigned>((a[shift + i] + std::uint64_t{p - factor} * b[i]) % p);
        trim(a);
    }
    return a;
}

inline std::vector<unsigned> digits(unsigned value, unsigned base, unsigned count) {
    std::vector<unsigned> out(count);
    for (unsigned i = 0; i < count; ++i) {
        out[i] = value % base;
        value /= base;
    }
    return out;
}

inline bool is_irreducible(const PolyP& modulus, unsigned p) {
    const unsigned e = static_cast<unsigned>(modulus.size() - 1);
    // Trial division by every monic polynomial of degree 1..e/2.
    for (unsigned deg = 1; deg <= e / 2; ++deg) {
        unsigned count = 1;
        for (unsigned i = 0; i < deg; ++i) count *= p;
        for (unsigned t = 0; t < count; ++t) {
            PolyP divisor = digits(t, p, deg);
            divisor.push_back(1);
            if (poly_mod(modulus, divisor, p).empty()) return false;
        }
    }
    return true;
}

inline PolyP default_modulus(unsigned p, unsigned e) {
    if (e == 1) return {0, 1};
    unsigned count = 1;
    for (unsigned i = 0; i < e; ++i) count *= p;
    for (unsigned t = 0; t < count; ++t) {
        PolyP candidate = digits(t, p, e);
        candidate.push_back(1);
        if (is_irreducible(candidate, p)) return candidate;
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable for prime p
}

struct FieldTables {
    unsigned p = 0;
    unsigned e = 0;
    unsigned q = 0;
    std::vector<unsigned> modulus;
    std::vector<std::uint16_t> add_table;  // q*q, only when q <= add_table_limit
    std::vector<Index> neg;
    std::vector<Index> log;  // log[0] unused
    std::vector<Index> exp;  // length 2(q-1)
    std::vector<std::uint8_t> square;

    static constexpr unsigned add_table_limit = 1024;

    Index add_digits(Index a, Index b) const {
        Index result = 0, scale = 1;
        for (unsigned i = 0; i < e; ++i) {
            result += ((a % p + b % p) % p) * scale;
            a /= p;
            b /= p;
            scale *= p;
        }
        return result;
    }

    Index add(Index a, Index b) const {
        if (!add_table.empty()) return add_table[std::size_t{a} * q + b];
        return add_digits(a, b);
    }

    Index mul(Index a, Index b) const {
        if (a == 0 || b == 0) return 0;
        return exp[log[a] + log[b]];
    }

    bool same_as(const FieldTables& other) const {
        return this == &other || (p == other.p && e == other.e && modulus == other.modulus);
    }
};

// Multiplication by brute force in the polynomial basis; used only to build the log tables.
inline Index slow_mul(const FieldTables& t, Index a, Index b) {
    if (t.e == 1) return static_cast<Index>(std::uint64_t{a} * b % t.p);
    const auto ca = digits(a, t.p, t.e);
    const auto cb = digits(b, t.p, t.e);
    PolyP prod(2 * t.e - 1, 0);
    for (unsigned i = 0; i < t.e; ++i)
        for (unsigned j = 0; j < t.e; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % t.p;
    const PolyP r = poly_mod(prod, t.modulus, t.p);
    Index result = 0, scale = 1;
    for (unsigned i = 0; i < r.size() && i < t.e; ++i) {
        result += r[i] * scale;
        scale *= t.p;
    }
    return result;
}

inline std::shared_ptr<const FieldTables> build_tables(unsigned p, unsigned e, std::vector<unsigned> modulus) {
    auto t = std::make_shared<FieldTables>();
    t->p = p;
    t->e = e;
    t->modulus = std::move(modulus);
    t->q = 1;
    for (unsigned i = 0; i < e; ++i) t->q *= p;
    const unsigned q = t->q;

    t->neg.resize(q);
    for (Index a = 0; a < q; ++a) {
        Index r = 0, scale = 1, x = a;
        for (unsigned i = 0; i < e; ++i) {
            r += ((p - x % p) % p) * scale;
            x /= p;
            scale *= p;
        }
        t->neg[a] = r;
    }
    if (q <= FieldTables::add_table_limit) {
        t->add_table.resize(std::size_t{q} * q);
        for (Index a = 0; a < q; ++a)
            for (Index b = 0; b < q; ++b) t->add_table[std::size_t{a} * q + b] = static_cast<std::uint16_t>(t->add_digits(a, b));
    }

    // Find the smallest-index primitive element and build log/antilog tables.
    t->log.assign(q, 0);
    t->exp.assign(2 * (q - 1), 0);
    if (q == 2) {
        t->exp = {1, 1};
    } else {
        for (Index g = 2; g < q; ++g) {
            std::vector<Index> powers;
            powers.reserve(q - 1);
            Index x = 1;
            bool primitive = true;
            for (unsigned k = 0; k < q - 1; ++k) {
                if (k > 0 && x == 1) {
                    primitive = false;
                    break;
                }
                powers.push_back(x);
                x = slow_mul(*t, x, g);
            }
            if (!primitive || x != 1) continue;
            for (unsigned k = 0; k < q - 1; ++k) {
                t->exp[k] = powers[k];
                t->exp[k + q - 1] = powers[k];
                t->log[powers[k]] = k;
            }
            break;
        }
    }

    t->square.assign(q, 0);
    for (Index a = 0; a < q; ++a) t->square[t->mul(a, a)] = 1;
    return t;
}

}  // namespace details

class Field;

/// A field element that knows its field. Mixing elements of different fields throws.
class Element {
  public:
    Element(std::shared_ptr<const details::FieldTables> tables, Index index) : t_(std::move(tables)), v_(index) {}

    Index index() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    Element operator+(const Element& o) const { return {t_, tables(o).add(v_, o.v_)}; }
    Element operator-() const { return {t_, t_->neg[v_]}; }
    Element operator-(const Element& o) const { return {t_, tables(o).add(v_, t_->neg[o.v_])}; }
    Element operator*(const Element& o) const { return {t_, tables(o).mul(v_, o.v_)}; }
    Element operator/(const Element& o) const {
        tables(o);
        return *this * o.inverse();
    }
    Element inverse() const {
        if (v_ == 0) throw std::domain_error("division by zero in F_" + std::to_string(t_->q));
        return {t_, t_->exp[(t_->q - 1 - t_->log[v_]) % (t_->q - 1)]};
    }
    Element pow(std::uint64_t k) const {
        Element result{t_, 1}, base = *this;
        while (k) {
            if (k & 1) result = result * base;
            base = base * base;
            k >>= 1;
        }
        return result;
    }

    bool operator==(const Element& o) const { return t_->same_as(*o.t_) && v_ == o.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Element& a) { return os << a.v_; }

  private:
    const details::FieldTables& tables(const Element& o) const {
        if (!t_->same_as(*o.t_)) throw std::invalid_argument("field element arithmetic across different fields");
        return *t_;
    }

    std::shared_ptr<const details::FieldTables> t_;
    Index v_;
};

/// Handle to F_q. Cheap to copy; all copies share the same lookup tables.
class Field {
  public:
    /// F_{p^e} with the default modulus (least monic irreducible, ordered by canonical index).
    Field(unsigned p, unsigned e = 1) : Field(p, e, std::nullopt) {}

    Field(unsigned p, unsigned e, std::optional<std::vector<unsigned>> modulus) {
        if (!details::is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
        if (e < 1) throw std::invalid_argument("field degree must be at least 1");
        std::uint64_t q = 1;
        for (unsigned i = 0; i < e; ++i) {
            q *= p;
            if (q > max_field_order)
                throw std::invalid_argument("field order exceeds " + std::to_string(max_field_order));
        }
        std::vector<unsigned> mod;
        if (e == 1) {
            mod = {0, 1};
        } else if (modulus) {
            mod = *modulus;
            if (mod.size() != e + 1) throw std::invalid_argument("modulus must have exactly e+1 coefficients");
            for (unsigned c : mod)
                if (c >= p) throw std::invalid_argument("modulus coefficient out of range [0, p)");
            if (mod.back() != 1) throw std::invalid_argument("modulus must be monic");
            if (!details::is_irreducible(mod, p)) throw std::invalid_argument("modulus is reducible over F_p");
        } else {
            mod = details::default_modulus(p, e);
        }
        t_ = details::build_tables(p, e, std::move(mod));
    }

    /// Field of order q, which must be a prime power; default modulus.
    static Field of_order(unsigned q) {
        if (q < 2) throw std::invalid_argument("field order must be at least 2");
        unsigned p = 2;
        while (q % p != 0) ++p;
        unsigned e = 0, x = q;
        while (x % p == 0) {
            x /= p;
            ++e;
        }
        if (x != 1) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
        return Field(p, e);
    }

    unsigned characteristic() const { return t_->p; }
    unsigned degree() const { return t_->e; }
    unsigned order() const { return t_->q; }
    /// Monic modulus c_0..c_e. For prime fields this is x, which is never used.
    const std::vector<unsigned>& modulus() const { return t_->modulus; }

    Index add(Index a, Index b) const { return t_->add(a, b); }
    Index neg(Index a) const { return t_->neg[a]; }
    Index sub(Index a, Index b) const { return t_->add(a, t_->neg[b]); }
    Index mul(Index a, Index b) const { return t_->mul(a, b); }
    Index inv(Index a) const { return element(a).inverse().index(); }
    Index pow(Index a, std::uint64_t k) const { return element(a).pow(k).index(); }
    bool is_square(Index a) const { return t_->square[a] != 0; }

    /// Euler's criterion; agrees with is_square (which is table-driven) on every field.
    bool is_square_euler(Index a) const {
        if (a == 0 || t_->p == 2) return true;
        return pow(a, (t_->q - 1) / 2) == 1;
    }

    Element element(Index index) const {
        if (index >= t_->q) throw std::out_of_range("element index " + std::to_string(index) + " out of range");
        return {t_, index};
    }
    Element zero() const { return {t_, 0}; }
    Element one() const { return {t_, 1}; }

    std::vector<Element> elements() const {
        std::vector<Element> out;
        out.reserve(t_->q);
        for (Index i = 0; i < t_->q; ++i) out.emplace_back(t_, i);
        return out;
    }

    std::vector<unsigned> coefficients(Index a) const { return details::digits(a, t_->p, t_->e); }

    Index from_coefficients(std::span<const unsigned> coeffs) const {
        if (coeffs.size() != t_->e) throw std::invalid_argument("expected e coefficients");
        Index result = 0, scale = 1;
        for (unsigned c : coeffs) {
            if (c >= t_->p) throw std::invalid_argument("coefficient out of range [0, p)");
            result += c * scale;
            scale *= t_->p;
        }
        return result;
    }

    bool operator==(const Field& o) const { return t_->same_as(*o.t_); }

    std::string describe() const {
        std::string s = "F_" + std::to_string(t_->q) + " p=" + std::to_string(t_->p) + " e=" + std::to_string(t_->e);
        if (t_->e > 1) {
            s += " modulus=";
            for (std::size_t i = 0; i < t_->modulus.size(); ++i) s += (i ? "," : "") + std::to_string(t_->modulus[i]);
        }
        return s;
    }

  private:
    std::shared_ptr<const details::FieldTables> t_;
};

}  // namespace symcode
