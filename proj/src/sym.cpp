#include "peakalg/sym.hpp"

#include <map>

namespace peakalg {

SymTable &SymTable::get(int n) {
    static std::mutex registry_mtx;
    static std::map<int, SymTable *> registry;
    std::lock_guard<std::mutex> lock(registry_mtx);
    auto it = registry.find(n);
    if (it == registry.end()) it = registry.emplace(n, new SymTable(n)).first;
    return *it->second;
}

SymTable::SymTable(int n) : n_(n), labels_(compositions(n)) {}

const SymTable::Row &SymTable::product(uint32_t left, uint32_t right) {
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

// Enumerates matrices column by column (columns = parts of the left factor,
// rows = parts of the right factor), building the result word as it goes.
// The word of a matrix lists its nonzero entries, read down each column.
SymTable::Row SymTable::compute(uint32_t left, uint32_t right) const {
    const std::vector<int> &cols = labels_[left].parts;
    const std::vector<int> &rows = labels_[right].parts;
    int s = static_cast<int>(rows.size());
    int p = static_cast<int>(cols.size());

    std::map<uint32_t, long long> counts;
    std::vector<int> row_rem(rows.begin(), rows.end());
    std::vector<int> word;
    word.reserve(static_cast<size_t>(n_ > 0 ? n_ : 1));

    auto emit = [&]() {
        uint32_t mask = 0;
        int acc = 0;
        for (size_t i = 0; i + 1 < word.size(); ++i) {
            acc += word[i];
            mask |= 1u << (acc - 1);
        }
        ++counts[mask];
    };

    auto column = [&](auto &&self, int k) -> void {
        if (k == p) {
            emit();
            return;
        }
        // Suffix sums of untouched row budgets; rows above the current cell
        // in this column were already decremented, rows below were not.
        std::vector<int> suffix(s + 1, 0);
        for (int m = s - 1; m >= 0; --m) suffix[m] = suffix[m + 1] + row_rem[m];
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
                if (v > 0) word.push_back(v);
                cself(cself, m + 1, budget - v);
                if (v > 0) word.pop_back();
                row_rem[m] += v;
            }
        };
        cell(cell, 0, cols[k]);
    };

    if (p == 0) {
        if (s == 0) emit();
    } else {
        column(column, 0);
    }

    Row row;
    row.reserve(counts.size());
    for (const auto &[mask, cnt] : counts) row.emplace_back(mask, cnt);
    return row;
}

} // namespace peakalg
