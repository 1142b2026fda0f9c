#include "peakalg/labels.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace peakalg {

namespace {

int sum(const std::vector<int> &v) { return std::accumulate(v.begin(), v.end(), 0); }

void check_positive(const std::vector<int> &v, const char *what) {
    for (int x : v)
        if (x < 1) throw std::invalid_argument(std::string(what) + ": parts must be >= 1");
}

} // namespace

Composition::Composition(std::vector<int> p) : parts(std::move(p)) {
    check_positive(parts, "composition");
}

int Composition::weight() const { return sum(parts); }

uint32_t Composition::descent_mask(int n) const {
    if (weight() != n) throw std::invalid_argument("descent_mask: weight mismatch");
    uint32_t mask = 0;
    int acc = 0;
    for (size_t i = 0; i + 1 < parts.size(); ++i) {
        acc += parts[i];
        mask |= 1u << (acc - 1);
    }
    return mask;
}

Composition Composition::from_descent_mask(uint32_t mask, int n) {
    std::vector<int> parts;
    int prev = 0;
    for (int k = 1; k < n; ++k) {
        if (mask & (1u << (k - 1))) {
            parts.push_back(k - prev);
            prev = k;
        }
    }
    if (n > 0) parts.push_back(n - prev);
    return Composition(std::move(parts));
}

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    check_positive(parts, "partition");
    std::sort(parts.begin(), parts.end(), std::greater<int>());
}

int Partition::weight() const { return sum(parts); }

SignedComposition::SignedComposition(std::vector<SignedPart> p) : parts(std::move(p)) {
    for (const auto &x : parts)
        if (x.size < 1) throw std::invalid_argument("signed composition: sizes must be >= 1");
}

int SignedComposition::weight() const {
    int w = 0;
    for (const auto &p : parts) w += p.size;
    return w;
}

bool SignedComposition::any_barred() const {
    for (const auto &p : parts)
        if (p.barred) return true;
    return false;
}

uint64_t SignedComposition::pack() const {
    uint64_t key = 0;
    for (const auto &p : parts) key = key * 32 + static_cast<uint64_t>(2 * p.size + (p.barred ? 1 : 0));
    return key;
}

BComposition::BComposition(int i0, Composition t) : head(i0), tail(std::move(t)) {
    if (head < 0) throw std::invalid_argument("B-composition: head must be >= 0");
}

RPeakComposition::RPeakComposition(int rr, int i0, Composition t)
    : r(rr), head(i0), tail(std::move(t)) {
    if (r < 1) throw std::invalid_argument("r-peak composition: r must be >= 1");
    if (head < 0 || head % r != 0)
        throw std::invalid_argument("r-peak composition: head must be a nonnegative multiple of r");
    for (int x : tail.parts)
        if (x % r == 0) throw std::invalid_argument("r-peak composition: tail parts must not be divisible by r");
}

RPeakPartition::RPeakPartition(int rr, int h, Partition t) : r(rr), head(h), tail(std::move(t)) {
    if (r < 1) throw std::invalid_argument("r-peak partition: r must be >= 1");
    if (head < 0 || head % r != 0)
        throw std::invalid_argument("r-peak partition: head must be a nonnegative multiple of r");
    for (int x : tail.parts)
        if (x % r == 0) throw std::invalid_argument("r-peak partition: tail parts must not be divisible by r");
}

std::vector<Composition> compositions(int n) {
    std::vector<Composition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    out.reserve(1u << (n - 1));
    for (uint32_t mask = 0; mask < (1u << (n - 1)); ++mask)
        out.push_back(Composition::from_descent_mask(mask, n));
    return out;
}

std::vector<Partition> partitions(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rem, int maxpart) {
        if (rem == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (int p = std::min(rem, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rem - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<SignedComposition> signed_compositions(int n) {
    std::vector<SignedComposition> out;
    std::vector<SignedPart> cur;
    std::function<void(int)> rec = [&](int rem) {
        if (rem == 0) {
            out.push_back(SignedComposition(cur));
            return;
        }
        for (int p = 1; p <= rem; ++p) {
            for (int b = 0; b < 2; ++b) {
                cur.push_back({p, b == 1});
                rec(rem - p);
                cur.pop_back();
            }
        }
    };
    rec(n);
    return out;
}

std::vector<BComposition> b_compositions(int n) {
    std::vector<BComposition> out;
    for (int i0 = 0; i0 <= n; ++i0)
        for (const auto &tail : compositions(n - i0)) out.emplace_back(i0, tail);
    return out;
}

std::vector<BPartition> b_partitions(int n) {
    std::vector<BPartition> out;
    for (int i0 = 0; i0 <= n; ++i0)
        for (const auto &tail : partitions(n - i0)) out.emplace_back(i0, tail);
    return out;
}

std::vector<RPeakComposition> r_peak_compositions(int n, int r) {
    std::vector<RPeakComposition> out;
    for (int i0 = 0; i0 <= n; i0 += r) {
        for (const auto &tail : compositions(n - i0)) {
            bool ok = true;
            for (int x : tail.parts)
                if (x % r == 0) { ok = false; break; }
            if (ok) out.emplace_back(r, i0, tail);
        }
        if (r == 0) break;
    }
    return out;
}

std::vector<RPeakPartition> r_peak_partitions(int n, int r) {
    std::vector<RPeakPartition> out;
    for (int i0 = 0; i0 <= n; i0 += r) {
        for (const auto &tail : partitions(n - i0)) {
            bool ok = true;
            for (int x : tail.parts)
                if (x % r == 0) { ok = false; break; }
            if (ok) out.emplace_back(r, i0, tail);
        }
    }
    return out;
}

Partition sort_down(const Composition &c) { return Partition(c.parts); }

BPartition sort_down(const BComposition &c) { return BPartition(c.head, Partition(c.tail.parts)); }

RPeakPartition sort_down(const RPeakComposition &c) {
    return RPeakPartition(c.r, c.head, Partition(c.tail.parts));
}

namespace {

std::string join(const std::vector<int> &v, char sep) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << sep;
        os << v[i];
    }
    return os.str();
}

} // namespace

std::string render(const Composition &c) { return c.empty() ? "()" : join(c.parts, '.'); }

std::string render(const Partition &p) { return p.empty() ? "()" : join(p.parts, ','); }

std::string render(const SignedComposition &c) {
    if (c.parts.empty()) return "()";
    std::ostringstream os;
    for (size_t i = 0; i < c.parts.size(); ++i) {
        if (i) os << ',';
        os << (c.parts[i].barred ? -c.parts[i].size : c.parts[i].size);
    }
    return os.str();
}

std::string render(const BComposition &c) {
    std::ostringstream os;
    os << c.head << ';' << join(c.tail.parts, ',');
    return os.str();
}

std::string render(const BPartition &p) {
    std::ostringstream os;
    os << p.head << ';' << join(p.tail.parts, ',');
    return os.str();
}

std::string render(const RPeakPartition &p) {
    std::ostringstream os;
    os << p.head << ';' << join(p.tail.parts, ',');
    return os.str();
}

std::string render(const RPeakComposition &c) {
    std::ostringstream os;
    os << c.head << ';' << join(c.tail.parts, ',');
    return os.str();
}

namespace {

std::vector<int> parse_ints(const std::string &s, char sep) {
    std::vector<int> out;
    if (s.empty() || s == "()") return out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) out.push_back(std::stoi(cur));
    return out;
}

} // namespace

Composition composition_from_string(const std::string &s) {
    return Composition(parse_ints(s, '.'));
}

Partition partition_from_string(const std::string &s) { return Partition(parse_ints(s, ',')); }

SignedComposition signed_composition_from_string(const std::string &s) {
    std::vector<SignedPart> parts;
    for (int x : parse_ints(s, ','))
        parts.push_back({std::abs(x), x < 0});
    return SignedComposition(std::move(parts));
}

} // namespace peakalg
