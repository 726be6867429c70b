#include "capelli/grassmann.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace capelli {

GrassmannElement GrassmannElement::one(int generators, int weyl_vars) {
  GrassmannElement g(generators, weyl_vars);
  g.add_term(0, WeylElement::constant(weyl_vars, Scalar(1)));
  return g;
}

GrassmannElement GrassmannElement::generator(int generators, int weyl_vars, int g) {
  if (g < 0 || g >= generators) throw std::out_of_range("GrassmannElement::generator index");
  GrassmannElement r(generators, weyl_vars);
  r.add_term(std::uint64_t{1} << g, WeylElement::constant(weyl_vars, Scalar(1)));
  return r;
}

GrassmannElement GrassmannElement::from_weyl(int generators, const WeylElement& w) {
  GrassmannElement r(generators, w.vars());
  r.add_term(0, w);
  return r;
}

void GrassmannElement::add_term(std::uint64_t mask, const WeylElement& w) {
  if (w.is_zero()) return;
  auto [it, inserted] = terms_.emplace(mask, w);
  if (!inserted) {
    it->second += w;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GrassmannElement GrassmannElement::scaled(const Scalar& c) const {
  GrassmannElement r(gens_, weyl_vars_);
  if (c.is_zero()) return r;
  for (const auto& [m, w] : terms_) r.terms_.emplace(m, w.scaled(c));
  return r;
}

GrassmannElement& GrassmannElement::operator+=(const GrassmannElement& o) {
  if (gens_ != o.gens_ || weyl_vars_ != o.weyl_vars_)
    throw std::invalid_argument("GrassmannElement::operator+: dimension mismatch");
  for (const auto& [m, w] : o.terms_) add_term(m, w);
  return *this;
}

GrassmannElement& GrassmannElement::operator-=(const GrassmannElement& o) {
  if (gens_ != o.gens_ || weyl_vars_ != o.weyl_vars_)
    throw std::invalid_argument("GrassmannElement::operator-: dimension mismatch");
  for (const auto& [m, w] : o.terms_) add_term(m, -w);
  return *this;
}

namespace {

// Parity of the interleave-sort of (sorted a, sorted b): counts pairs
// (g in a, h in b) with g > h.
int merge_sign(std::uint64_t a, std::uint64_t b) {
  int swaps = 0;
  while (b != 0) {
    const int j = std::countr_zero(b);
    b &= b - 1;
    swaps += std::popcount(a >> (j + 1));
  }
  return (swaps % 2 == 0) ? 1 : -1;
}

}  // namespace

GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b) {
  if (a.generators() != b.generators() || a.weyl_vars() != b.weyl_vars())
    throw std::invalid_argument("GrassmannElement::operator*: dimension mismatch");
  GrassmannElement r(a.generators(), a.weyl_vars());
  for (const auto& [ma, wa] : a.terms()) {
    for (const auto& [mb, wb] : b.terms()) {
      if ((ma & mb) != 0) continue;
      WeylElement w = wa * wb;
      if (merge_sign(ma, mb) < 0) w = -w;
      r.add_term(ma | mb, w);
    }
  }
  return r;
}

WeylElement GrassmannElement::contract() const {
  if (gens_ % 2 != 0) throw std::domain_error("GrassmannElement::contract: odd generator count");
  const int k = gens_ / 2;
  const std::uint64_t low = (std::uint64_t{1} << k) - 1;
  WeylElement out(weyl_vars_);
  for (const auto& [m, w] : terms_) {
    const std::uint64_t e_part = m & low;
    const std::uint64_t dual_part = m >> k;
    if (e_part == dual_part) out += w;
  }
  return out;
}

std::string GrassmannElement::str() const {
  if (terms_.empty()) return "0";
  const int k = gens_ / 2;
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, w] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "[";
    bool fg = true;
    for (int g = 0; g < gens_; ++g) {
      if (!(m >> g & 1)) continue;
      if (!fg) os << " ";
      fg = false;
      if (g < k) {
        os << "e" << (g + 1);
      } else {
        os << "e*" << (g - k + 1);
      }
    }
    if (m == 0) os << "1";
    os << "]⊗(" << w.str() << ")";
  }
  return os.str();
}

std::string first_difference(const GrassmannElement& a, const GrassmannElement& b) {
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  auto mask_str = [&](std::uint64_t m) {
    GrassmannElement probe(a.generators(), a.weyl_vars());
    probe.add_term(m, WeylElement::constant(a.weyl_vars(), Scalar(1)));
    return probe.str();
  };
  while (ia != a.terms().end() || ib != b.terms().end()) {
    if (ib == b.terms().end() || (ia != a.terms().end() && ia->first < ib->first)) {
      return mask_str(ia->first) + " only on lhs";
    }
    if (ia == a.terms().end() || ib->first < ia->first) {
      return mask_str(ib->first) + " only on rhs";
    }
    if (ia->second != ib->second) {
      return mask_str(ia->first) + " coefficient: " + first_difference(ia->second, ib->second);
    }
    ++ia;
    ++ib;
  }
  return {};
}

}  // namespace capelli
