#pragma once

#include "peakalg/elem.hpp"

#include <functional>

namespace peakalg {

// Scalar bridge: the element's field built from a rational.
template <class E> auto field_from_rational(const Rational &q) {
    using K = typename std::decay_t<decltype(std::declval<E>().terms)>::mapped_type;
    return FieldTraits<K>::from_rational(q);
}

// Formal series calculus on graded series with scalar component 0.
// Inputs are validated: exp needs constant term 0, the rest constant term 1.

template <class E> bool has_unit_constant_term(const Series<E> &s) {
    return s[0] == E::unit();
}

template <class E> Series<E> series_exp(const Series<E> &f) {
    if (!f[0].is_zero()) throw std::invalid_argument("series_exp: constant term must be 0");
    int n = f.order();
    Series<E> out = Series<E>::one(n);
    Series<E> power = Series<E>::one(n);
    Integer kfact = 1;
    for (int k = 1; k <= n; ++k) {
        power = power * f;
        kfact *= k;
        Rational inv_fact(1);
        inv_fact /= Rational(kfact);
        bool empty = true;
        for (int d = k; d <= n; ++d) {
            if (power[d].is_zero()) continue;
            empty = false;
            auto scaled = power[d];
            scaled *= field_from_rational<E>(inv_fact);
            out[d] += scaled;
        }
        if (empty) break;
    }
    return out;
}

template <class E> Series<E> series_log(const Series<E> &f) {
    if (!has_unit_constant_term(f)) throw std::invalid_argument("series_log: constant term must be 1");
    int n = f.order();
    Series<E> x = f;
    x[0] = {};
    x[0].weight = 0;
    Series<E> out(n);
    Series<E> power = Series<E>::one(n);
    for (int k = 1; k <= n; ++k) {
        power = power * x;
        Rational c(k % 2 == 1 ? 1 : -1, k);
        for (int d = k; d <= n; ++d) {
            if (power[d].is_zero()) continue;
            auto scaled = power[d];
            scaled *= field_from_rational<E>(c);
            out[d] += scaled;
        }
    }
    return out;
}

template <class E> Series<E> series_inverse(const Series<E> &f) {
    if (!has_unit_constant_term(f)) throw std::invalid_argument("series_inverse: constant term must be 1");
    int n = f.order();
    Series<E> out = Series<E>::one(n);
    // out_d = -sum_{i=1..d} f_i out_{d-i}
    for (int d = 1; d <= n; ++d) {
        E acc(d);
        for (int i = 1; i <= d; ++i) {
            if (f[i].is_zero() || out[d - i].is_zero()) continue;
            acc += f[i] * out[d - i];
        }
        out[d] = -acc;
    }
    return out;
}

// exp(-1/2 log f); squares to the inverse of f.
template <class E> Series<E> series_inverse_sqrt(const Series<E> &f) {
    if (!has_unit_constant_term(f))
        throw std::invalid_argument("series_inverse_sqrt: constant term must be 1");
    Series<E> lg = series_log(f);
    for (int d = 0; d <= lg.order(); ++d)
        if (!lg[d].is_zero()) lg[d] *= field_from_rational<E>(Rational(-1, 2));
    return series_exp(lg);
}

// Component n scaled by x^n (sigma_t at t = x).
template <class E, class K> Series<E> scale_by_powers(const Series<E> &f, const K &x) {
    Series<E> out = f;
    K p = FieldTraits<K>::one();
    for (int d = 1; d <= out.order(); ++d) {
        p = p * x;
        if (!out[d].is_zero()) out[d] *= p;
    }
    return out;
}

// sigma_{-t}: alternate signs by degree.
template <class E> Series<E> alternate(const Series<E> &f) {
    Series<E> out = f;
    for (int d = 1; d <= out.order(); ++d)
        if (d % 2 == 1 && !out[d].is_zero()) out[d] *= field_from_rational<E>(Rational(-1));
    return out;
}

// Degree-by-degree solver for graded factorizations. The builder receives
// the map of already-solved homogeneous components (zeta_k for k < d, and
// zeta_d still zero) and returns the product series built from them; the
// unknown enters linearly at top degree with the stated coefficient, so
// each degree is solved by one subtraction.
template <class E>
std::vector<E> solve_graded_factorization(
    const Series<E> &target, int top_coefficient,
    const std::function<Series<E>(const std::vector<E> &, int)> &build) {
    if (!has_unit_constant_term(target))
        throw std::invalid_argument("factorization target must have constant term 1");
    int n = target.order();
    std::vector<E> zeta(n + 1); // zeta[0] unused
    for (int k = 0; k <= n; ++k) zeta[k].weight = k;
    for (int d = 1; d <= n; ++d) {
        Series<E> partial = build(zeta, d);
        E rhs = target[d] - partial[d];
        if (top_coefficient != 1) rhs *= field_from_rational<E>(Rational(1, top_coefficient));
        zeta[d] = std::move(rhs);
    }
    return zeta;
}

} // namespace peakalg
