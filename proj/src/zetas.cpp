#include "peakalg/zetas.hpp"

#include <map>
#include <mutex>

namespace peakalg {

namespace {

std::vector<SymElemQ> solve_type_a(int N) {
    auto build = [N](const std::vector<SymElemQ> &z, int) {
        return descending_exponentials(z, N);
    };
    return solve_graded_factorization<SymElemQ>(sigma_series<Rational>(N), 1, build);
}

std::vector<SymElemQ> solve_level(int N, int r) {
    auto build = [N, r](const std::vector<SymElemQ> &z, int) {
        Series<SymElemQ> head = Series<SymElemQ>::one(N);
        std::vector<SymElemQ> tail_z(z.size());
        for (int k = 1; k < static_cast<int>(z.size()); ++k) {
            if (k % r == 0) head[k] = z[k];
            else tail_z[k] = z[k];
        }
        return head * descending_exponentials(tail_z, N);
    };
    return solve_graded_factorization<SymElemQ>(sigma_series<Rational>(N), 1, build);
}

} // namespace

const std::vector<SymElemQ> &zassenhaus_zetas(int N) {
    static std::mutex mtx;
    static std::map<int, std::vector<SymElemQ>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.lower_bound(N);
    if (it != cache.end()) return it->second;
    return cache.emplace(N, solve_type_a(N)).first->second;
}

const std::vector<SymElemQ> &level_zetas(int N, int r) {
    static std::mutex mtx;
    static std::map<std::pair<int, int>, std::vector<SymElemQ>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(N, r);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    return cache.emplace(key, solve_level(N, r)).first->second;
}

std::vector<SymElemQ> solve_y_elements(int N, int r) {
    auto build = [N, r](const std::vector<SymElemQ> &z, int) {
        std::vector<SymElemQ> head_z(z.size()), tail_z(z.size());
        for (int k = 1; k < static_cast<int>(z.size()); ++k) {
            if (k % r == 0) head_z[k] = z[k];
            else tail_z[k] = z[k];
        }
        return ascending_exponentials(head_z, N) * descending_exponentials(tail_z, N);
    };
    return solve_graded_factorization<SymElemQ>(sigma_series<Rational>(N), 1, build);
}

SymElemQ zeta_product(const std::vector<SymElemQ> &zetas, const std::vector<int> &parts) {
    SymElemQ prod = SymElemQ::unit();
    for (int p : parts) {
        if (p == 0) continue;
        prod = prod * zetas.at(p);
    }
    return prod;
}

const SymElemQ &TypeAIdempotents::at(const Partition &p) const {
    for (size_t i = 0; i < order.size(); ++i)
        if (order[i] == p) return closed_form[i];
    throw std::invalid_argument("no idempotent with label " + render(p));
}

TypeAIdempotents type_a_idempotents(int n) {
    TypeAIdempotents out;
    out.n = n;
    out.order = ordered_partitions(n);
    const auto &zetas = zassenhaus_zetas(n);

    for (const auto &lambda : out.order) {
        SymElemQ e = zeta_product(zetas, lambda.parts);
        Rational m(m_factor(lambda));
        e *= inverse(m);
        out.closed_form.push_back(std::move(e));
    }

    SymElemQ sn = complete_function<Rational>(n);
    for (size_t i = 0; i < out.order.size(); ++i) {
        SymElemQ rest = sn;
        for (size_t j = 0; j < i; ++j) rest -= out.recursion[j];
        SymElemQ e = internal_product(s_basis<Rational>(Composition(out.order[i].parts)), rest);
        Rational m(m_factor(out.order[i]));
        e *= inverse(m);
        out.recursion.push_back(std::move(e));
    }

    for (size_t i = 0; i < out.order.size(); ++i)
        if (!(out.closed_form[i] == out.recursion[i]))
            throw std::logic_error("type A idempotents: recursion and closed form disagree at " +
                                   render(out.order[i]));
    return out;
}

std::vector<std::pair<Composition, SymElemQ>> idempotent_basis(int n) {
    const auto &zetas = zassenhaus_zetas(n);
    std::vector<std::pair<Composition, SymElemQ>> out;
    for (const auto &I : compositions(n)) {
        SymElemQ e = zeta_product(zetas, I.parts);
        Rational m(m_factor(I));
        e *= inverse(m);
        out.emplace_back(I, std::move(e));
    }
    return out;
}

SymElemQ gamma_element(const Composition &K) {
    int k = K.weight();
    const auto &zetas = zassenhaus_zetas(k);
    return internal_product(zetas[k], zeta_product(zetas, K.parts));
}

std::vector<std::pair<Partition, SymElemQ>> y_idempotents(int n, int r) {
    std::vector<SymElemQ> y = solve_y_elements(n, r);
    std::vector<std::pair<Partition, SymElemQ>> out;
    for (const auto &mu : ordered_partitions(n)) {
        std::vector<int> alpha, beta;
        for (int p : mu.parts)
            (p % r == 0 ? alpha : beta).push_back(p);
        std::sort(alpha.begin(), alpha.end()); // ascending
        // beta is already descending (partition order)
        SymElemQ e = zeta_product(y, alpha) * zeta_product(y, beta);
        Rational m(m_factor(Partition(alpha)) * m_factor(Partition(beta)));
        e *= inverse(m);
        out.emplace_back(mu, std::move(e));
    }
    return out;
}

} // namespace peakalg
