#include "capelli/pbw.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace capelli {

namespace {

void check_same_structure(const UEnvElement& a, const UEnvElement& b, const char* what) {
  if (a.blocks() != b.blocks())
    throw std::invalid_argument(std::string(what) + ": block structure mismatch");
}

}  // namespace

void UEnvElement::check_generator(const GlGenerator& g) const {
  if (g.block < 0 || g.block >= static_cast<int>(blocks_.size()))
    throw std::out_of_range("UEnvElement: block index out of range");
  const int n = blocks_[g.block];
  if (g.row < 1 || g.row > n || g.col < 1 || g.col > n)
    throw std::out_of_range("UEnvElement: generator index out of range");
}

UEnvElement UEnvElement::constant(std::vector<int> blocks, const Scalar& c) {
  UEnvElement e(std::move(blocks));
  e.add_term(PbwMonomial{}, c);
  return e;
}

UEnvElement UEnvElement::generator(std::vector<int> blocks, const GlGenerator& g, const Scalar& c) {
  UEnvElement e(std::move(blocks));
  e.check_generator(g);
  e.add_term(PbwMonomial{{g}}, c);
  return e;
}

int UEnvElement::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

void UEnvElement::add_term(const PbwMonomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

UEnvElement UEnvElement::scaled(const Scalar& c) const {
  UEnvElement r(blocks_);
  if (c.is_zero()) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
  return r;
}

UEnvElement& UEnvElement::operator+=(const UEnvElement& o) {
  check_same_structure(*this, o, "UEnvElement::operator+");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

UEnvElement& UEnvElement::operator-=(const UEnvElement& o) {
  check_same_structure(*this, o, "UEnvElement::operator-");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

namespace {

// Straightens a generator word into PBW normal form, accumulating into
// out.  Swapping an out-of-order adjacent pair spawns the bracket word
//   [E_ij, E_kl] = delta_jk E_il - delta_li E_kj  (same block only).
void straighten_into(UEnvElement& out, std::vector<GlGenerator> word, Scalar coeff) {
  struct Item {
    std::vector<GlGenerator> w;
    Scalar c;
  };
  std::vector<Item> stack;
  stack.push_back({std::move(word), std::move(coeff)});
  while (!stack.empty()) {
    Item item = std::move(stack.back());
    stack.pop_back();
    std::size_t i = 0;
    for (; i + 1 < item.w.size(); ++i) {
      if (item.w[i + 1] < item.w[i]) break;
    }
    if (i + 1 >= item.w.size()) {
      out.add_term(PbwMonomial{std::move(item.w)}, item.c);
      continue;
    }
    const GlGenerator a = item.w[i], b = item.w[i + 1];
    std::vector<GlGenerator> swapped = item.w;
    std::swap(swapped[i], swapped[i + 1]);
    stack.push_back({std::move(swapped), item.c});
    if (a.block == b.block) {
      if (a.col == b.row) {
        std::vector<GlGenerator> shorter;
        shorter.reserve(item.w.size() - 1);
        shorter.insert(shorter.end(), item.w.begin(), item.w.begin() + i);
        shorter.push_back(GlGenerator{a.block, a.row, b.col});
        shorter.insert(shorter.end(), item.w.begin() + i + 2, item.w.end());
        stack.push_back({std::move(shorter), item.c});
      }
      if (b.col == a.row) {
        std::vector<GlGenerator> shorter;
        shorter.reserve(item.w.size() - 1);
        shorter.insert(shorter.end(), item.w.begin(), item.w.begin() + i);
        shorter.push_back(GlGenerator{a.block, b.row, a.col});
        shorter.insert(shorter.end(), item.w.begin() + i + 2, item.w.end());
        stack.push_back({std::move(shorter), -item.c});
      }
    }
  }
}

}  // namespace

UEnvElement operator*(const UEnvElement& a, const UEnvElement& b) {
  check_same_structure(a, b, "UEnvElement::operator*");
  UEnvElement r(a.blocks());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      std::vector<GlGenerator> word = ma.w;
      word.insert(word.end(), mb.w.begin(), mb.w.end());
      straighten_into(r, std::move(word), ca * cb);
    }
  }
  return r;
}

UEnvElement ue_commutator(const UEnvElement& a, const UEnvElement& b) {
  return a * b - b * a;
}

bool invariance_check(const UEnvElement& x, const std::vector<UEnvElement>& subalgebra_basis) {
  for (const UEnvElement& k : subalgebra_basis) {
    if (!ue_commutator(x, k).is_zero()) return false;
  }
  return true;
}

int symbol_var_count(const std::vector<int>& blocks) {
  int n = 0;
  for (int b : blocks) n += b * b;
  return n;
}

int symbol_var_index(const std::vector<int>& blocks, const GlGenerator& g) {
  int off = 0;
  for (int b = 0; b < g.block; ++b) off += blocks[b] * blocks[b];
  return off + (g.row - 1) * blocks[g.block] + (g.col - 1);
}

Polynomial UEnvElement::top_symbol() const {
  const int nv = symbol_var_count(blocks_);
  Polynomial r(nv);
  const int top = degree();
  if (top < 0) return r;
  for (const auto& [m, c] : terms_) {
    if (m.degree() != top) continue;
    PolyMonomial pm{std::vector<int>(nv, 0)};
    for (const GlGenerator& g : m.w) pm.e[symbol_var_index(blocks_, g)] += 1;
    r.add_term(pm, c);
  }
  return r;
}

std::string UEnvElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.str();
    for (const GlGenerator& g : m.w) {
      os << "·E" << g.block << "[" << g.row << "," << g.col << "]";
    }
  }
  return os.str();
}

}  // namespace capelli
