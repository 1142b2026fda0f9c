#pragma once

#include "peakalg/mr.hpp"
#include "peakalg/orders.hpp"

namespace peakalg {

// Left Zassenhaus idempotents: sigma_1 = ... e^{zeta_3} e^{zeta_2} e^{zeta_1}.
// Returns zeta_1..zeta_N (index 0 unused). Cached.
const std::vector<SymElemQ> &zassenhaus_zetas(int N);

// Level-r variant: sigma_1 = (sum_p zeta_{pr}) * desc prod over r-nmid-i of
// e^{zeta_i}. zeta^{(r)}_n = zeta_n for n < 2r.
const std::vector<SymElemQ> &level_zetas(int N, int r);

// defY factorization: sigma_1 = asc prod over p of e^{Y_{rp}} * desc prod
// over r-nmid-i of e^{Y_i}. All Y_i primitive.
std::vector<SymElemQ> solve_y_elements(int N, int r);

// zeta^I = zeta_{i_1} ... zeta_{i_r} from a supplied family.
SymElemQ zeta_product(const std::vector<SymElemQ> &zetas, const std::vector<int> &parts);

// Complete system of orthogonal idempotents of (Sym_n, *), both routes.
struct TypeAIdempotents {
    int n;
    std::vector<Partition> order; // the paper's order <
    std::vector<SymElemQ> closed_form;
    std::vector<SymElemQ> recursion;

    const SymElemQ &at(const Partition &p) const;
};

TypeAIdempotents type_a_idempotents(int n);

// e_I = zeta^I / m_I for all compositions of n: an idempotent basis.
std::vector<std::pair<Composition, SymElemQ>> idempotent_basis(int n);

// Gamma_K = zeta_k * zeta^K, a primitive element.
SymElemQ gamma_element(const Composition &K);

// Y_mu = Y^alpha Y^beta / (m_alpha m_beta): complete orthogonal system of
// Sym_n indexed by all partitions; alpha = parts divisible by r ascending,
// beta = the rest descending.
std::vector<std::pair<Partition, SymElemQ>> y_idempotents(int n, int r);

// Descending exponential product built from a zeta family (helper shared
// with BSym; index range [1, N], zero entries act as identity).
template <class E> Series<E> descending_exponentials(const std::vector<E> &zeta, int order) {
    Series<E> prod = Series<E>::one(order);
    for (int k = order; k >= 1; --k) {
        if (k >= static_cast<int>(zeta.size()) || zeta[k].is_zero()) continue;
        Series<E> f(order);
        f[k] = zeta[k];
        prod = prod * series_exp(f);
    }
    return prod;
}

template <class E> Series<E> ascending_exponentials(const std::vector<E> &zeta, int order) {
    Series<E> prod = Series<E>::one(order);
    for (int k = 1; k <= order; ++k) {
        if (k >= static_cast<int>(zeta.size()) || zeta[k].is_zero()) continue;
        Series<E> f(order);
        f[k] = zeta[k];
        prod = prod * series_exp(f);
    }
    return prod;
}

} // namespace peakalg
