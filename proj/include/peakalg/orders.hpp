#pragma once

#include "peakalg/labels.hpp"
#include "peakalg/rational.hpp"

#include <set>

namespace peakalg {

// m_lambda = product of factorials of part multiplicities.
Integer m_factor(const Partition &p);
Integer m_factor(const Composition &c); // multiplicities of the multiset of parts

// lambda refines mu (lambda <_p mu): mu's parts are blockwise sums of
// lambda's parts. Equal partitions refine each other.
bool refines(const Partition &lambda, const Partition &mu);

// All distinct rearrangements of the parts.
std::vector<Composition> rearrangements(const Partition &p);
std::vector<Composition> rearrangements(const Composition &c);

// Printed tuple: head first when nonzero, then tail decreasing. This is the
// digit string the tables print, kept as a vector of ints.
std::vector<int> printed_tuple(const Partition &p);
std::vector<int> printed_tuple(const BPartition &p);
std::vector<int> printed_tuple(const RPeakPartition &p);

// The total order "<": decreasing length first (heads count only when
// nonzero), then ascending lexicographic order on the reversed printed
// tuple. B-partitions that tie on both get the smaller head first, which is
// the unique extension compatible with refinement.
struct LabelLess {
    bool operator()(const Partition &a, const Partition &b) const;
    bool operator()(const BPartition &a, const BPartition &b) const;
    bool operator()(const RPeakPartition &a, const RPeakPartition &b) const;
};

std::vector<Partition> ordered_partitions(int n);          // P_n
std::vector<BPartition> ordered_b_partitions(int n);       // type B labels
std::vector<RPeakPartition> ordered_r_peak_partitions(int n, int r); // P_n^{(r)}

// Standardization: equal letters numbered left to right; one-line form.
std::vector<int> standardize(const std::vector<int> &word);

// Steps 1-4 of the combinatorial Cartan rule: standardize, read each cycle's
// letters, keep cycle sums not divisible by r, sort decreasingly.
Partition cycle_transform(const Composition &word, int r);

} // namespace peakalg
