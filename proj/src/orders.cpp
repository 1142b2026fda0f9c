#include "peakalg/orders.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace peakalg {

namespace {

Integer multiplicity_factor(std::vector<int> parts) {
    std::map<int, int> mult;
    for (int x : parts) ++mult[x];
    Integer m = 1;
    for (auto &[part, k] : mult) m *= factorial(k);
    return m;
}

} // namespace

Integer m_factor(const Partition &p) { return multiplicity_factor(p.parts); }
Integer m_factor(const Composition &c) { return multiplicity_factor(c.parts); }

bool refines(const Partition &lambda, const Partition &mu) {
    if (lambda.weight() != mu.weight())
        throw std::invalid_argument("refines: weight mismatch");
    // Assign lambda's parts to mu's parts, blockwise sums must match.
    // Backtracking over the largest remaining lambda part.
    std::vector<int> need = mu.parts;
    std::vector<int> parts = lambda.parts; // decreasing
    std::function<bool(size_t)> rec = [&](size_t i) -> bool {
        if (i == parts.size()) {
            for (int x : need)
                if (x != 0) return false;
            return true;
        }
        std::set<int> tried;
        for (size_t j = 0; j < need.size(); ++j) {
            if (need[j] < parts[i] || tried.count(need[j])) continue;
            tried.insert(need[j]);
            need[j] -= parts[i];
            if (rec(i + 1)) {
                need[j] += parts[i];
                return true;
            }
            need[j] += parts[i];
        }
        return false;
    };
    return rec(0);
}

std::vector<Composition> rearrangements(const Partition &p) {
    std::vector<int> v = p.parts;
    std::sort(v.begin(), v.end());
    std::vector<Composition> out;
    do {
        out.push_back(Composition(v));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

std::vector<Composition> rearrangements(const Composition &c) {
    return rearrangements(Partition(c.parts));
}

std::vector<int> printed_tuple(const Partition &p) { return p.parts; }

std::vector<int> printed_tuple(const BPartition &p) {
    std::vector<int> t;
    if (p.head > 0) t.push_back(p.head);
    t.insert(t.end(), p.tail.parts.begin(), p.tail.parts.end());
    return t;
}

std::vector<int> printed_tuple(const RPeakPartition &p) {
    std::vector<int> t;
    if (p.head > 0) t.push_back(p.head);
    t.insert(t.end(), p.tail.parts.begin(), p.tail.parts.end());
    return t;
}

namespace {

// Decreasing length, then ascending lex on the reversed printed tuple.
// Returns -1 / 0 / +1.
int order_cmp(int len_a, int len_b, std::vector<int> ta, std::vector<int> tb) {
    if (len_a != len_b) return len_a > len_b ? -1 : 1;
    std::reverse(ta.begin(), ta.end());
    std::reverse(tb.begin(), tb.end());
    if (ta < tb) return -1;
    if (tb < ta) return 1;
    return 0;
}

} // namespace

bool LabelLess::operator()(const Partition &a, const Partition &b) const {
    return order_cmp(a.length(), b.length(), printed_tuple(a), printed_tuple(b)) < 0;
}

bool LabelLess::operator()(const BPartition &a, const BPartition &b) const {
    int c = order_cmp(a.length(), b.length(), printed_tuple(a), printed_tuple(b));
    if (c != 0) return c < 0;
    return a.head < b.head;
}

bool LabelLess::operator()(const RPeakPartition &a, const RPeakPartition &b) const {
    return order_cmp(a.length(), b.length(), printed_tuple(a), printed_tuple(b)) < 0;
}

std::vector<Partition> ordered_partitions(int n) {
    auto out = partitions(n);
    std::sort(out.begin(), out.end(), LabelLess{});
    return out;
}

std::vector<BPartition> ordered_b_partitions(int n) {
    auto out = b_partitions(n);
    std::sort(out.begin(), out.end(), LabelLess{});
    return out;
}

std::vector<RPeakPartition> ordered_r_peak_partitions(int n, int r) {
    auto out = r_peak_partitions(n, r);
    std::sort(out.begin(), out.end(), LabelLess{});
    return out;
}

std::vector<int> standardize(const std::vector<int> &word) {
    if (word.empty()) throw std::invalid_argument("standardize: empty word");
    int n = static_cast<int>(word.size());
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(), [&](int i, int j) { return word[i] < word[j]; });
    std::vector<int> out(n);
    for (int rank = 0; rank < n; ++rank) out[idx[rank]] = rank + 1;
    return out;
}

Partition cycle_transform(const Composition &word, int r) {
    for (int x : word.parts)
        if (x % r == 0)
            throw std::invalid_argument("cycle_transform: parts must not be divisible by r");
    if (word.empty()) return Partition();
    std::vector<int> tau = standardize(word.parts);
    int n = static_cast<int>(tau.size());
    std::vector<bool> seen(n + 1, false);
    std::vector<int> sums;
    for (int start = 1; start <= n; ++start) {
        if (seen[start]) continue;
        int total = 0;
        int cur = start;
        while (!seen[cur]) {
            seen[cur] = true;
            total += word.parts[cur - 1];
            cur = tau[cur - 1];
        }
        if (total % r != 0) sums.push_back(total);
    }
    return Partition(std::move(sums));
}

} // namespace peakalg
