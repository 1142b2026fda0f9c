#include "peakalg/mr.hpp"

#include <map>

namespace peakalg {

MrTable &MrTable::get(int n) {
    static std::mutex registry_mtx;
    static std::map<int, MrTable *> registry;
    std::lock_guard<std::mutex> lock(registry_mtx);
    auto it = registry.find(n);
    if (it == registry.end()) it = registry.emplace(n, new MrTable(n)).first;
    return *it->second;
}

MrTable::MrTable(int n) : n_(n), labels_(signed_compositions(n)) {
    for (uint32_t i = 0; i < labels_.size(); ++i) index_.emplace(labels_[i].pack(), i);
}

uint32_t MrTable::index(const SignedComposition &c) const {
    auto it = index_.find(c.pack());
    if (it == index_.end()) throw std::invalid_argument("label not of this weight");
    return it->second;
}

const MrTable::Row &MrTable::product(uint32_t left, uint32_t right) {
    uint64_t key = (static_cast<uint64_t>(left) << 32) | right;
    {
        std::lock_guard<std::mutex> lock(mtx_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    Row row = compute(left, right);
    std::lock_guard<std::mutex> lock(mtx_);
    return memo_.emplace(key, std::move(row)).first->second;
}

MrTable::Row MrTable::compute(uint32_t left, uint32_t right) const {
    const std::vector<SignedPart> &cols = labels_[left].parts;
    const std::vector<SignedPart> &rows = labels_[right].parts;
    int s = static_cast<int>(rows.size());
    int p = static_cast<int>(cols.size());

    std::map<uint32_t, long long> counts;
    std::vector<int> row_rem(s);
    for (int m = 0; m < s; ++m) row_rem[m] = rows[m].size;
    std::vector<SignedPart> word;
    word.reserve(static_cast<size_t>(n_ > 0 ? n_ : 1));

    auto emit = [&]() {
        uint64_t key = 0;
        for (const auto &part : word)
            key = key * 32 + static_cast<uint64_t>(2 * part.size + (part.barred ? 1 : 0));
        ++counts[index_.at(key)];
    };

    auto column = [&](auto &&self, int k) -> void {
        if (k == p) {
            emit();
            return;
        }
        std::vector<int> suffix(s + 1, 0);
        for (int m = s - 1; m >= 0; --m) suffix[m] = suffix[m + 1] + row_rem[m];
        bool colbar = cols[k].barred;
        auto cell = [&](auto &&cself, int m, int budget) -> void {
            if (budget == 0) {
                self(self, k + 1);
                return;
            }
            if (m == s) return;
            int lo = std::max(0, budget - suffix[m + 1]);
            int hi = std::min(row_rem[m], budget);
            for (int v = lo; v <= hi; ++v) {
                row_rem[m] -= v;
                if (v > 0) word.push_back({v, rows[m].barred != colbar});
                cself(cself, m + 1, budget - v);
                if (v > 0) word.pop_back();
                row_rem[m] += v;
            }
        };
        cell(cell, 0, cols[k].size);
    };

    if (p == 0) {
        if (s == 0) emit();
    } else {
        column(column, 0);
    }

    Row row;
    row.reserve(counts.size());
    for (const auto &[idx, cnt] : counts) row.emplace_back(idx, cnt);
    return row;
}

MrSeries mr_sigma(int order) {
    MrSeries s(order);
    s[0] = MrElemQ::unit();
    for (int d = 1; d <= order; ++d)
        s[d] = MrElemQ::basis(SignedComposition({{d, false}}), d);
    return s;
}

MrSeries mr_sigma_bar(int order) {
    MrSeries s(order);
    s[0] = MrElemQ::unit();
    for (int d = 1; d <= order; ++d)
        s[d] = MrElemQ::basis(SignedComposition({{d, true}}), d);
    return s;
}

MrSeries mr_lambda_bar(int order) {
    // lambda_t is the two-sided inverse of sigma_{-t}; bars via the swap.
    MrSeries lambda = series_inverse(alternate(mr_sigma(order)));
    MrSeries out(order);
    for (int d = 0; d <= order; ++d) out[d] = swap_alphabets(lambda[d]);
    return out;
}

const MrSeries &mr_sigma_sharp(int order) {
    static std::mutex mtx;
    static std::map<int, MrSeries> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(order);
    if (it == cache.end())
        it = cache.emplace(order, mr_lambda_bar(order) * mr_sigma(order)).first;
    return it->second;
}

MrElemQ superize_letter(int m) {
    static std::mutex mtx;
    static std::map<int, MrElemQ> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(m);
    if (it == cache.end()) it = cache.emplace(m, mr_sigma_sharp(m)[m]).first;
    return it->second;
}

MrElemQ superize(const SymElemQ &f) {
    if (f.is_zero()) return {};
    MrElemQ out(f.weight);
    for (const auto &[label, coeff] : f.terms) {
        MrElemQ prod = MrElemQ::unit();
        for (int x : label.parts) prod = prod * superize_letter(x);
        out += prod * coeff;
    }
    return out;
}

} // namespace peakalg
