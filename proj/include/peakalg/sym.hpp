#pragma once

#include "peakalg/elem.hpp"

#include <mutex>
#include <unordered_map>

namespace peakalg {

// Structure constants of the internal product on Sym_n in the S basis,
// computed from the splitting formula: S^I * S^J expands over nonnegative
// integer matrices with row sums the parts of J and column sums the parts
// of I, each matrix contributing the word of its nonzero entries read down
// the columns. Memoized per weight; label index = descent-set bitmask.
class SymTable {
  public:
    using Row = std::vector<std::pair<uint32_t, long long>>;

    static SymTable &get(int n);

    int weight() const { return n_; }
    int size() const { return static_cast<int>(labels_.size()); }
    const Composition &label(uint32_t idx) const { return labels_[idx]; }
    uint32_t index(const Composition &c) const { return n_ == 0 ? 0 : c.descent_mask(n_); }

    const Row &product(uint32_t left, uint32_t right);

  private:
    explicit SymTable(int n);
    Row compute(uint32_t left, uint32_t right) const;

    int n_;
    std::vector<Composition> labels_;
    std::mutex mtx_;
    std::unordered_map<uint64_t, Row> memo_;
};

// Internal product f * g of homogeneous elements of equal weight.
template <class K> SymElem<K> internal_product(const SymElem<K> &f, const SymElem<K> &g) {
    if (f.is_zero() || g.is_zero()) return {};
    if (f.weight != g.weight)
        throw std::invalid_argument("internal product: weight mismatch");
    SymTable &table = SymTable::get(f.weight);
    std::vector<K> acc(table.size(), FieldTraits<K>::zero());
    for (const auto &[li, ci] : f.terms) {
        uint32_t i = table.index(li);
        for (const auto &[lj, cj] : g.terms) {
            uint32_t j = table.index(lj);
            K c = ci * cj;
            for (const auto &[k, cnt] : table.product(i, j))
                acc[k] += c * FieldTraits<K>::from_long(cnt);
        }
    }
    SymElem<K> out(f.weight);
    for (uint32_t k = 0; k < acc.size(); ++k)
        if (!is_zero(acc[k])) out.terms.emplace(table.label(k), std::move(acc[k]));
    return out;
}

// Coproduct of S^I: every part splits as a + b with a, b >= 0, extended as
// an algebra morphism.
template <class K> Tensor2<Composition, K> coproduct(const SymElem<K> &f) {
    Tensor2<Composition, K> out;
    for (const auto &[label, coeff] : f.terms) {
        std::vector<int> left, right;
        auto rec = [&](auto &&self, size_t pos) -> void {
            if (pos == label.parts.size()) {
                auto key = std::make_pair(Composition(left), Composition(right));
                auto [it, inserted] = out.emplace(key, coeff);
                if (!inserted) {
                    it->second += coeff;
                    if (is_zero(it->second)) out.erase(it);
                }
                return;
            }
            int p = label.parts[pos];
            for (int a = 0; a <= p; ++a) {
                if (a > 0) left.push_back(a);
                if (p - a > 0) right.push_back(p - a);
                self(self, pos + 1);
                if (a > 0) left.pop_back();
                if (p - a > 0) right.pop_back();
            }
        };
        rec(rec, 0);
    }
    return out;
}

template <class K> bool is_primitive(const SymElem<K> &f) {
    if (f.is_zero()) return true;
    Tensor2<Composition, K> delta = coproduct(f);
    Composition empty;
    for (const auto &[label, coeff] : f.terms) {
        for (auto key : {std::make_pair(empty, label), std::make_pair(label, empty)}) {
            auto it = delta.find(key);
            if (it == delta.end()) return false;
            it->second -= coeff;
            if (is_zero(it->second)) delta.erase(it);
        }
    }
    return delta.empty();
}

// Ribbon basis change. R_I = sum over coarsenings J of I of
// (-1)^{l(I)-l(J)} S^J; inversely S^I = sum of R_J over coarsenings.
template <class K = Rational> SymElem<K> ribbon_to_complete(const Composition &I) {
    int n = I.weight();
    SymElem<K> out(n);
    if (n == 0) return SymElem<K>::unit();
    uint32_t des = I.descent_mask(n);
    // subsets of the descent set
    uint32_t sub = des;
    while (true) {
        Composition J = Composition::from_descent_mask(sub, n);
        int sign = (I.length() - J.length()) % 2 == 0 ? 1 : -1;
        out.add(J, FieldTraits<K>::from_long(sign));
        if (sub == 0) break;
        sub = (sub - 1) & des;
    }
    return out;
}

template <class K = Rational> SymElem<K> complete_to_ribbon(const Composition &I) {
    // Coordinates of S^I on the ribbon basis: all coarsenings with
    // coefficient 1. Returned as an element whose labels name ribbons.
    int n = I.weight();
    SymElem<K> out(n);
    if (n == 0) return SymElem<K>::unit();
    uint32_t des = I.descent_mask(n);
    uint32_t sub = des;
    while (true) {
        out.add(Composition::from_descent_mask(sub, n), FieldTraits<K>::one());
        if (sub == 0) break;
        sub = (sub - 1) & des;
    }
    return out;
}

// Commutative image: S^I maps to the product of complete homogeneous
// functions h_{I sorted}; an element is in the radical iff this vanishes.
template <class K> std::map<Partition, K> commutative_image(const SymElem<K> &f) {
    std::map<Partition, K> out;
    for (const auto &[label, coeff] : f.terms) {
        Partition p = sort_down(label);
        auto [it, inserted] = out.emplace(std::move(p), coeff);
        if (!inserted) {
            it->second += coeff;
            if (is_zero(it->second)) out.erase(it);
        }
    }
    return out;
}

template <class K> bool in_radical(const SymElem<K> &f) { return commutative_image(f).empty(); }

// S_n as an element, S^I as an element.
template <class K = Rational> SymElem<K> complete_function(int n) {
    if (n == 0) return SymElem<K>::unit();
    return SymElem<K>::basis(Composition(std::vector<int>{n}), n);
}

template <class K = Rational> SymElem<K> s_basis(const Composition &I) {
    if (I.empty()) return SymElem<K>::unit();
    return SymElem<K>::basis(I, I.weight());
}

// sigma_1 truncated at order N.
template <class K = Rational> Series<SymElem<K>> sigma_series(int order) {
    Series<SymElem<K>> s(order);
    for (int d = 0; d <= order; ++d) s[d] = complete_function<K>(d);
    return s;
}

// Dense coordinate vector on the S basis of weight n.
template <class K> std::vector<K> to_dense(const SymElem<K> &f, int n) {
    SymTable &table = SymTable::get(n);
    std::vector<K> v(table.size(), FieldTraits<K>::zero());
    if (f.is_zero()) return v;
    if (f.weight != n) throw std::invalid_argument("to_dense: weight mismatch");
    for (const auto &[label, coeff] : f.terms) v[table.index(label)] = coeff;
    return v;
}

template <class K> SymElem<K> from_dense(const std::vector<K> &v, int n) {
    SymTable &table = SymTable::get(n);
    SymElem<K> f(n);
    for (uint32_t i = 0; i < v.size(); ++i)
        if (!is_zero(v[i])) f.terms.emplace(table.label(i), v[i]);
    return f;
}

} // namespace peakalg
