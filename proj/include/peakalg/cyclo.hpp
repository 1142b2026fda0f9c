#pragma once

#include "peakalg/rational.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <vector>

namespace peakalg {

// Dense rational polynomial, lowest degree first. Only what the cyclotomic
// construction needs: no sparse tricks, degrees stay tiny.
namespace polyq {

using Poly = std::vector<Rational>;

inline void trim(Poly &p) {
    while (!p.empty() && is_zero(p.back())) p.pop_back();
}

inline Poly mul(const Poly &a, const Poly &b) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    trim(c);
    return c;
}

// Exact division, throws if the remainder is nonzero.
inline Poly divexact(Poly a, const Poly &b) {
    trim(a);
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
    while (a.size() >= b.size()) {
        Rational c = a.back() / b.back();
        size_t shift = a.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        trim(a);
        if (a.size() >= b.size() + shift && !a.empty())
            throw std::logic_error("divexact failed to reduce degree");
    }
    if (!a.empty()) throw std::domain_error("inexact polynomial division");
    trim(q);
    return q;
}

// Remainder of a modulo b (b monic not required).
inline Poly mod(Poly a, const Poly &b) {
    trim(a);
    if (b.empty()) throw std::domain_error("polynomial mod by zero");
    while (a.size() >= b.size()) {
        Rational c = a.back() / b.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        trim(a);
    }
    return a;
}

} // namespace polyq

int euler_phi(int r);

// r-th cyclotomic polynomial, dense coefficients, cached per order.
const polyq::Poly &cyclotomic_polynomial(int r);

// Element of Q[q]/Phi_r(q), q the canonical generator (a fixed primitive
// r-th root of unity). For r in {1,2} the field is Q itself and coeffs has
// length 1.
class Cyclo {
  public:
    Cyclo() : order_(1), coeffs_(1, Rational(0)) {}
    explicit Cyclo(int order, Rational constant = Rational(0))
        : order_(order), coeffs_(euler_phi(order), Rational(0)) {
        if (order < 1) throw std::invalid_argument("cyclotomic order must be >= 1");
        coeffs_[0] = std::move(constant);
    }
    Cyclo(int order, std::vector<Rational> poly) : order_(order) {
        if (order < 1) throw std::invalid_argument("cyclotomic order must be >= 1");
        coeffs_ = reduce(order, std::move(poly));
    }

    static Cyclo generator(int order) {
        std::vector<Rational> p(2, Rational(0));
        p[1] = 1;
        return Cyclo(order, std::move(p));
    }

    int order() const { return order_; }
    int degree() const { return static_cast<int>(coeffs_.size()); }
    const std::vector<Rational> &coeffs() const { return coeffs_; }

    bool is_zero() const {
        for (const auto &c : coeffs_)
            if (!peakalg::is_zero(c)) return false;
        return true;
    }
    bool is_rational() const {
        for (size_t i = 1; i < coeffs_.size(); ++i)
            if (!peakalg::is_zero(coeffs_[i])) return false;
        return true;
    }
    const Rational &rational_part() const { return coeffs_[0]; }

    friend bool operator==(const Cyclo &a, const Cyclo &b) {
        if (a.order_ != b.order_) {
            if (a.is_rational() && b.is_rational()) return a.coeffs_[0] == b.coeffs_[0];
            return false;
        }
        return a.coeffs_ == b.coeffs_;
    }

    Cyclo &operator+=(const Cyclo &o) {
        unify(o);
        int d = std::min(degree(), o.degree());
        for (int i = 0; i < d; ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }
    Cyclo &operator-=(const Cyclo &o) {
        unify(o);
        int d = std::min(degree(), o.degree());
        for (int i = 0; i < d; ++i) coeffs_[i] -= o.coeffs_[i];
        return *this;
    }
    friend Cyclo operator+(Cyclo a, const Cyclo &b) { return a += b; }
    friend Cyclo operator-(Cyclo a, const Cyclo &b) { return a -= b; }
    friend Cyclo operator-(const Cyclo &a) {
        Cyclo r = a;
        for (auto &c : r.coeffs_) c = -c;
        return r;
    }
    friend Cyclo operator*(const Cyclo &a, const Cyclo &b) {
        Cyclo x = a;
        x.unify(b);
        if (b.degree() == 1) {
            for (auto &c : x.coeffs_) c *= b.coeffs_[0];
            return x;
        }
        std::vector<Rational> prod = polyq::mul(x.coeffs_trimmed(), b.coeffs_trimmed());
        return Cyclo(x.order_, std::move(prod));
    }
    Cyclo &operator*=(const Cyclo &o) { return *this = *this * o; }
    Cyclo &operator*=(const Rational &c) {
        for (auto &x : coeffs_) x *= c;
        return *this;
    }
    friend Cyclo operator*(Cyclo a, const Rational &c) { return a *= c; }
    friend Cyclo operator*(const Rational &c, Cyclo a) { return a *= c; }

    Cyclo inverse() const;
    Cyclo pow(long e) const;

  private:
    // Values of order 1 or 2 have a single rational coefficient and combine
    // freely with any order; mismatched genuine orders are an error. Only
    // *this is ever widened (binary operators copy first).
    void unify(const Cyclo &o) {
        if (order_ == o.order_ || o.degree() == 1) return;
        if (degree() == 1) {
            Rational c = coeffs_[0];
            order_ = o.order_;
            coeffs_.assign(euler_phi(order_), Rational(0));
            coeffs_[0] = c;
            return;
        }
        throw std::invalid_argument("cyclotomic order mismatch");
    }
    std::vector<Rational> coeffs_trimmed() const {
        std::vector<Rational> p = coeffs_;
        polyq::trim(p);
        return p;
    }
    static std::vector<Rational> reduce(int order, std::vector<Rational> poly);

    int order_;
    std::vector<Rational> coeffs_;
};

inline bool is_zero(const Cyclo &x) { return x.is_zero(); }
inline Cyclo inverse(const Cyclo &x) { return x.inverse(); }

std::string to_string(const Cyclo &x);
Cyclo cyclo_from_string(int order, const std::string &s);

// Field glue used by the templated element/matrix code.
template <class K> struct FieldTraits;

template <> struct FieldTraits<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static Rational from_long(long v) { return Rational(v); }
    static Rational from_rational(const Rational &v) { return v; }
};

template <> struct FieldTraits<Cyclo> {
    // Order-1 values coerce on contact with genuine cyclotomic values.
    static Cyclo zero() { return Cyclo(1); }
    static Cyclo one() { return Cyclo(1, Rational(1)); }
    static Cyclo from_long(long v) { return Cyclo(1, Rational(v)); }
    static Cyclo from_rational(const Rational &v) { return Cyclo(1, v); }
};

} // namespace peakalg
