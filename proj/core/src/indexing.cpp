#include "capelli/indexing.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace capelli {

namespace {

std::string tuple_str(const std::vector<int>& v) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  os << "}";
  return os.str();
}

}  // namespace

IndexSet::IndexSet(std::vector<int> vals) : v(std::move(vals)) {
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    if (v[i] >= v[i + 1]) throw std::invalid_argument("IndexSet: not strictly increasing");
  }
  if (!v.empty() && v.front() < 1) throw std::invalid_argument("IndexSet: indices are 1-based");
}

std::string IndexSet::str() const { return tuple_str(v); }

MultiIndex::MultiIndex(std::vector<int> vals) : v(std::move(vals)) {
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    if (v[i] > v[i + 1]) throw std::invalid_argument("MultiIndex: not weakly increasing");
  }
  if (!v.empty() && v.front() < 1) throw std::invalid_argument("MultiIndex: indices are 1-based");
}

std::string MultiIndex::str() const { return tuple_str(v); }

std::vector<IndexSet> comb(int m, int d) {
  std::vector<IndexSet> out;
  if (d < 0 || d > m) return out;
  std::vector<int> cur(d);
  for (int i = 0; i < d; ++i) cur[i] = i + 1;
  while (true) {
    out.push_back(IndexSet(cur));
    int i = d - 1;
    while (i >= 0 && cur[i] == m - (d - 1 - i)) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < d; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::vector<MultiIndex> bcomb(int m, int d) {
  std::vector<MultiIndex> out;
  if (d < 0 || m < 1) return out;
  std::vector<int> cur(d, 1);
  while (true) {
    out.push_back(MultiIndex(cur));
    int i = d - 1;
    while (i >= 0 && cur[i] == m) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < d; ++j) cur[j] = cur[i];
  }
  return out;
}

long inversion_count(const IndexSet& s1, const IndexSet& s2) {
  std::set<int> seen(s1.v.begin(), s1.v.end());
  for (int b : s2.v) {
    if (seen.count(b)) throw std::invalid_argument("inversion_count: overlapping index sets");
  }
  long n = 0;
  for (int a : s1.v) {
    for (int b : s2.v) {
      if (a > b) ++n;
    }
  }
  return n;
}

BigInt multiset_factorial(const MultiIndex& s) {
  BigInt r = 1;
  std::size_t i = 0;
  while (i < s.v.size()) {
    std::size_t j = i;
    while (j < s.v.size() && s.v[j] == s.v[i]) ++j;
    r *= factorial(static_cast<long>(j - i));
    i = j;
  }
  return r;
}

std::vector<std::pair<IndexSet, IndexSet>> subset_splits(const IndexSet& s, int l) {
  std::vector<std::pair<IndexSet, IndexSet>> out;
  const int d = s.size();
  if (l < 0 || l > d) return out;
  for (const IndexSet& pos : comb(d, l)) {
    std::vector<int> chosen, rest;
    std::size_t pi = 0;
    for (int i = 1; i <= d; ++i) {
      if (pi < pos.v.size() && pos.v[pi] == i) {
        chosen.push_back(s.v[i - 1]);
        ++pi;
      } else {
        rest.push_back(s.v[i - 1]);
      }
    }
    out.emplace_back(IndexSet(chosen), IndexSet(rest));
  }
  return out;
}

std::vector<std::pair<MultiIndex, MultiIndex>> multiset_splits(const MultiIndex& s, int l) {
  std::vector<std::pair<MultiIndex, MultiIndex>> out;
  const int d = s.size();
  if (l < 0 || l > d) return out;
  std::set<std::vector<int>> seen;
  for (const IndexSet& pos : comb(d, l)) {
    std::vector<int> chosen, rest;
    std::size_t pi = 0;
    for (int i = 1; i <= d; ++i) {
      if (pi < pos.v.size() && pos.v[pi] == i) {
        chosen.push_back(s.v[i - 1]);
        ++pi;
      } else {
        rest.push_back(s.v[i - 1]);
      }
    }
    if (!seen.insert(chosen).second) continue;
    out.emplace_back(MultiIndex(chosen), MultiIndex(rest));
  }
  return out;
}

}  // namespace capelli
