#pragma once

#include "peakalg/cyclo.hpp"
#include "peakalg/labels.hpp"

#include <map>

namespace peakalg {

// Homogeneous element: finite map from weight-n basis labels to scalars.
// Zero coefficients are never stored. Weight -1 marks the zero element of
// unknown grade (absorbing in + and *).
template <class Label, class K> struct BasisElem {
    int weight = -1;
    std::map<Label, K> terms;

    BasisElem() = default;
    explicit BasisElem(int n) : weight(n) {}

    static BasisElem unit() {
        BasisElem e(0);
        e.terms.emplace(Label{}, FieldTraits<K>::one());
        return e;
    }
    static BasisElem basis(Label l, int n, K coeff = FieldTraits<K>::one()) {
        BasisElem e(n);
        e.add(std::move(l), std::move(coeff));
        return e;
    }

    bool is_zero() const { return terms.empty(); }
    int term_count() const { return static_cast<int>(terms.size()); }

    void add(Label l, K coeff) {
        if (peakalg::is_zero(coeff)) return;
        auto [it, inserted] = terms.emplace(std::move(l), coeff);
        if (!inserted) {
            it->second += coeff;
            if (peakalg::is_zero(it->second)) terms.erase(it);
        }
    }

    K coeff(const Label &l) const {
        auto it = terms.find(l);
        return it == terms.end() ? FieldTraits<K>::zero() : it->second;
    }

    BasisElem &operator+=(const BasisElem &o) {
        if (o.is_zero()) return *this;
        if (is_zero()) { *this = o; return *this; }
        if (weight != o.weight) throw std::invalid_argument("adding elements of different weights");
        for (const auto &[l, c] : o.terms) add(l, c);
        return *this;
    }
    BasisElem &operator-=(const BasisElem &o) { return *this += -o; }
    friend BasisElem operator+(BasisElem a, const BasisElem &b) { return a += b; }
    friend BasisElem operator-(BasisElem a, const BasisElem &b) { return a -= b; }
    friend BasisElem operator-(const BasisElem &a) {
        BasisElem r(a.weight);
        for (const auto &[l, c] : a.terms) r.terms.emplace(l, -c);
        return r;
    }

    BasisElem &operator*=(const K &c) {
        if (peakalg::is_zero(c)) { terms.clear(); return *this; }
        for (auto &[l, x] : terms) x = x * c;
        return *this;
    }
    friend BasisElem operator*(BasisElem a, const K &c) { return a *= c; }
    friend BasisElem operator*(const K &c, BasisElem a) { return a *= c; }

    friend bool operator==(const BasisElem &a, const BasisElem &b) {
        if (a.is_zero() && b.is_zero()) return true;
        return a.weight == b.weight && a.terms == b.terms;
    }
};

// Concatenation product of basis labels is supplied per label type.
inline Composition concat(const Composition &a, const Composition &b) {
    std::vector<int> p = a.parts;
    p.insert(p.end(), b.parts.begin(), b.parts.end());
    return Composition(std::move(p));
}

inline SignedComposition concat(const SignedComposition &a, const SignedComposition &b) {
    std::vector<SignedPart> p = a.parts;
    p.insert(p.end(), b.parts.begin(), b.parts.end());
    return SignedComposition(std::move(p));
}

// Free (external) product: bilinear concatenation.
template <class Label, class K>
BasisElem<Label, K> operator*(const BasisElem<Label, K> &f, const BasisElem<Label, K> &g) {
    if (f.is_zero() || g.is_zero()) return {};
    BasisElem<Label, K> out(f.weight + g.weight);
    for (const auto &[la, ca] : f.terms)
        for (const auto &[lb, cb] : g.terms) out.add(concat(la, lb), ca * cb);
    return out;
}

template <class K> using SymElem = BasisElem<Composition, K>;
template <class K> using MrElem = BasisElem<SignedComposition, K>;

using SymElemQ = SymElem<Rational>;
using SymElemC = SymElem<Cyclo>;
using MrElemQ = MrElem<Rational>;

// Weight-split tensor: finite map (label, label) -> scalar.
template <class Label, class K> using Tensor2 = std::map<std::pair<Label, Label>, K>;

// Graded series: component k has weight k; truncation order is explicit and
// arithmetic never reads beyond it.
template <class E> struct Series {
    std::vector<E> c; // size N+1

    Series() = default;
    explicit Series(int order) : c(order + 1) {
        for (int k = 0; k <= order; ++k) c[k].weight = k;
    }

    int order() const { return static_cast<int>(c.size()) - 1; }
    E &operator[](int k) { return c[k]; }
    const E &operator[](int k) const { return c[k]; }

    static Series one(int order) {
        Series s(order);
        s.c[0] = E::unit();
        return s;
    }

    Series truncated(int new_order) const {
        Series s(std::min(new_order, order()));
        for (int k = 0; k <= s.order(); ++k) s.c[k] = c[k];
        return s;
    }

    friend Series operator+(const Series &a, const Series &b) {
        Series s(std::min(a.order(), b.order()));
        for (int k = 0; k <= s.order(); ++k) {
            s.c[k] = a.c[k];
            if (!b.c[k].is_zero()) {
                if (s.c[k].is_zero()) s.c[k] = b.c[k];
                else s.c[k] += b.c[k];
            }
        }
        return s;
    }
    friend Series operator-(const Series &a, const Series &b) {
        Series s(std::min(a.order(), b.order()));
        for (int k = 0; k <= s.order(); ++k) {
            s.c[k] = a.c[k];
            if (!b.c[k].is_zero()) s.c[k] -= b.c[k];
        }
        return s;
    }
    friend Series operator*(const Series &a, const Series &b) {
        Series s(std::min(a.order(), b.order()));
        for (int i = 0; i <= s.order(); ++i) {
            if (a.c[i].is_zero()) continue;
            for (int j = 0; i + j <= s.order(); ++j) {
                if (b.c[j].is_zero()) continue;
                E prod = a.c[i] * b.c[j];
                if (s.c[i + j].is_zero()) s.c[i + j] = std::move(prod);
                else s.c[i + j] += prod;
            }
        }
        return s;
    }
};

} // namespace peakalg
