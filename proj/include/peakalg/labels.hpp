#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace peakalg {

// Composition of n: ordered parts >= 1. Canonical text form "3.1.1".
struct Composition {
    std::vector<int> parts;

    Composition() = default;
    explicit Composition(std::vector<int> p);

    int weight() const;
    int length() const { return static_cast<int>(parts.size()); }
    bool empty() const { return parts.empty(); }

    // Descent-set bitmask inside weight n: bit k-1 set iff k is a partial sum.
    uint32_t descent_mask(int n) const;
    static Composition from_descent_mask(uint32_t mask, int n);

    auto operator<=>(const Composition &) const = default;
};

// Partition: weakly decreasing parts >= 1. Canonical text form "3,1,1".
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p); // sorts decreasingly

    int weight() const;
    int length() const { return static_cast<int>(parts.size()); }
    bool empty() const { return parts.empty(); }

    auto operator<=>(const Partition &) const = default;
};

// One letter of the Mantaci-Reutenauer alphabet: size with a bar flag.
struct SignedPart {
    int size = 0;
    bool barred = false;
    auto operator<=>(const SignedPart &) const = default;
};

// Signed composition (MR basis label). Text form "1,-2" with barred parts
// written negative.
struct SignedComposition {
    std::vector<SignedPart> parts;

    SignedComposition() = default;
    explicit SignedComposition(std::vector<SignedPart> p);

    int weight() const;
    int length() const { return static_cast<int>(parts.size()); }
    bool any_barred() const;
    uint64_t pack() const; // dense key, weight <= 12

    auto operator<=>(const SignedComposition &) const = default;
};

// Type B composition: head i0 >= 0 (only the head may vanish), then a plain
// composition. Text form "2;1,3" / "0;1,1" / "4;".
struct BComposition {
    int head = 0;
    Composition tail;

    BComposition() = default;
    BComposition(int i0, Composition t);

    int weight() const { return head + tail.weight(); }
    // Head counts only when nonzero; the convention behind every order here.
    int length() const { return (head > 0 ? 1 : 0) + tail.length(); }

    auto operator<=>(const BComposition &) const = default;
};

// r-peak composition: head divisible by r (possibly 0), tail parts not.
struct RPeakComposition {
    int r = 2;
    int head = 0;
    Composition tail;

    RPeakComposition() = default;
    RPeakComposition(int r, int i0, Composition t);

    int weight() const { return head + tail.weight(); }
    int length() const { return (head > 0 ? 1 : 0) + tail.length(); }

    auto operator<=>(const RPeakComposition &) const = default;
};

// B-partition: head >= 0, tail a partition. Labels BSym idempotents.
struct BPartition {
    int head = 0;
    Partition tail;

    BPartition() = default;
    BPartition(int i0, Partition t) : head(i0), tail(std::move(t)) {}

    int weight() const { return head + tail.weight(); }
    int length() const { return (head > 0 ? 1 : 0) + tail.length(); }

    auto operator<=>(const BPartition &) const = default;
};

// r-peak partition: at most one part divisible by r (the head), tail parts
// not divisible by r.
struct RPeakPartition {
    int r = 2;
    int head = 0;
    Partition tail;

    RPeakPartition() = default;
    RPeakPartition(int r, int h, Partition t);

    int weight() const { return head + tail.weight(); }
    int length() const { return (head > 0 ? 1 : 0) + tail.length(); }

    auto operator<=>(const RPeakPartition &) const = default;
};

// Enumeration, all in a fixed deterministic order.
std::vector<Composition> compositions(int n);
std::vector<Partition> partitions(int n);
std::vector<SignedComposition> signed_compositions(int n);
std::vector<BComposition> b_compositions(int n);
std::vector<BPartition> b_partitions(int n);
std::vector<RPeakComposition> r_peak_compositions(int n, int r);
std::vector<RPeakPartition> r_peak_partitions(int n, int r);

// Nonincreasing rearrangement I-down.
Partition sort_down(const Composition &c);
BPartition sort_down(const BComposition &c);
RPeakPartition sort_down(const RPeakComposition &c);

// Canonical text.
std::string render(const Composition &c);
std::string render(const Partition &p);
std::string render(const SignedComposition &c);
std::string render(const BComposition &c);
std::string render(const BPartition &p);
std::string render(const RPeakPartition &p);
std::string render(const RPeakComposition &c);

Composition composition_from_string(const std::string &s);
Partition partition_from_string(const std::string &s);
SignedComposition signed_composition_from_string(const std::string &s);

} // namespace peakalg
