#pragma once

#include "peakalg/series_ops.hpp"
#include "peakalg/sym.hpp"

#include <mutex>
#include <unordered_map>

namespace peakalg {

// Structure constants of the internal product on MR_n in the signed S
// basis. Same matrix enumeration as SymTable on the underlying sizes; a
// letter in row m, column k carries bar(row m) xor bar(column k), which is
// the splitting recursion with base cases S_n neutral and S_{bar n} acting
// by the alphabet swap.
class MrTable {
  public:
    using Row = std::vector<std::pair<uint32_t, long long>>;

    static MrTable &get(int n);

    int weight() const { return n_; }
    int size() const { return static_cast<int>(labels_.size()); }
    const SignedComposition &label(uint32_t idx) const { return labels_[idx]; }
    uint32_t index(const SignedComposition &c) const;

    const Row &product(uint32_t left, uint32_t right);

  private:
    explicit MrTable(int n);
    Row compute(uint32_t left, uint32_t right) const;

    int n_;
    std::vector<SignedComposition> labels_;
    std::unordered_map<uint64_t, uint32_t> index_;
    std::mutex mtx_;
    std::unordered_map<uint64_t, Row> memo_;
};

template <class K> MrElem<K> internal_product(const MrElem<K> &f, const MrElem<K> &g) {
    if (f.is_zero() || g.is_zero()) return {};
    if (f.weight != g.weight)
        throw std::invalid_argument("internal product: weight mismatch");
    MrTable &table = MrTable::get(f.weight);
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
    MrElem<K> out(f.weight);
    for (uint32_t k = 0; k < acc.size(); ++k)
        if (!is_zero(acc[k])) out.terms.emplace(table.label(k), std::move(acc[k]));
    return out;
}

// A <-> Abar relabeling; an algebra automorphism.
template <class K> MrElem<K> swap_alphabets(const MrElem<K> &f) {
    MrElem<K> out(f.weight);
    for (const auto &[label, coeff] : f.terms) {
        SignedComposition l = label;
        for (auto &p : l.parts) p.barred = !p.barred;
        out.terms.emplace(std::move(l), coeff);
    }
    return out;
}

// The involutive antiautomorphism exchanging S_n and S_{bar n}: reverses
// every word and toggles bars.
template <class K> MrElem<K> bar_antimorphism(const MrElem<K> &f) {
    MrElem<K> out(f.weight);
    for (const auto &[label, coeff] : f.terms) {
        SignedComposition l = label;
        std::reverse(l.parts.begin(), l.parts.end());
        for (auto &p : l.parts) p.barred = !p.barred;
        out.terms.emplace(std::move(l), coeff);
    }
    return out;
}

// Projection onto Sym: erase bars (Abar = A).
template <class K> SymElem<K> project_to_sym(const MrElem<K> &f) {
    SymElem<K> out(f.weight);
    for (const auto &[label, coeff] : f.terms) {
        std::vector<int> parts;
        parts.reserve(label.parts.size());
        for (const auto &p : label.parts) parts.push_back(p.size);
        out.add(Composition(std::move(parts)), coeff);
    }
    return out;
}

// Embedding Sym -> MR on unbarred labels.
template <class K> MrElem<K> embed_sym(const SymElem<K> &f) {
    MrElem<K> out(f.weight);
    for (const auto &[label, coeff] : f.terms) {
        std::vector<SignedPart> parts;
        parts.reserve(label.parts.size());
        for (int x : label.parts) parts.push_back({x, false});
        out.terms.emplace(SignedComposition(std::move(parts)), coeff);
    }
    return out;
}

using MrSeries = Series<MrElemQ>;
using SymSeriesQ = Series<SymElemQ>;

// sigma_1, bar sigma_1, bar lambda_1, sigma_1^sharp = bar lambda_1 sigma_1.
MrSeries mr_sigma(int order);
MrSeries mr_sigma_bar(int order);
MrSeries mr_lambda_bar(int order);
const MrSeries &mr_sigma_sharp(int order); // cached

// Superization F^sharp = F * sigma_1^sharp. Multiplicative on the S basis,
// so it is computed letterwise: S^I -> S_{i_1}^sharp ... S_{i_r}^sharp.
MrElemQ superize(const SymElemQ &f);
MrElemQ superize_letter(int m); // S_m^sharp, cached

} // namespace peakalg
