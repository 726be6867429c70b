#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "capelli/scalar.hpp"

namespace capelli {

/// Strictly increasing tuple of 1-based indices from {1..m}.
struct IndexSet {
  std::vector<int> v;

  IndexSet() = default;
  explicit IndexSet(std::vector<int> vals);

  int size() const { return static_cast<int>(v.size()); }
  auto operator<=>(const IndexSet&) const = default;
  std::string str() const;
};

/// Weakly increasing tuple of 1-based indices (a sorted multi-set).
struct MultiIndex {
  std::vector<int> v;

  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> vals);

  int size() const { return static_cast<int>(v.size()); }
  auto operator<=>(const MultiIndex&) const = default;
  std::string str() const;
};

/// All d-subsets of {1..m}, lexicographic.
std::vector<IndexSet> comb(int m, int d);

/// All weakly increasing d-tuples from {1..m}, lexicographic.
std::vector<MultiIndex> bcomb(int m, int d);

/// Number of pairs (a, b) with a in s1, b in s2, a > b.  The two sets
/// must be disjoint.
long inversion_count(const IndexSet& s1, const IndexSet& s2);

/// Product of factorials of multiplicities (S! in the permanent weights).
BigInt multiset_factorial(const MultiIndex& s);

/// All ways to split S into an l-subset and its complement, as
/// (chosen, rest) pairs in lexicographic order of the chosen part.
std::vector<std::pair<IndexSet, IndexSet>> subset_splits(const IndexSet& s, int l);

/// All distinct splits of a multi-set into a sub-multi-set of size l and
/// the remainder; each distinct (chosen, rest) pair appears once.
std::vector<std::pair<MultiIndex, MultiIndex>> multiset_splits(const MultiIndex& s, int l);

}  // namespace capelli
