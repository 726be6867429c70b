#include "capelli/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace capelli {

namespace {

void check_same_vars(int a, int b, const char* what) {
  if (a != b) {
    throw std::invalid_argument(std::string(what) + ": algebra size mismatch (" +
                                std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

}  // namespace

int PolyMonomial::degree() const {
  return std::accumulate(e.begin(), e.end(), 0);
}

Polynomial Polynomial::constant(int vars, const Scalar& c) {
  Polynomial p(vars);
  p.add_term(PolyMonomial{std::vector<int>(vars, 0)}, c);
  return p;
}

Polynomial Polynomial::variable(int vars, int i, int exp) {
  if (i < 0 || i >= vars) throw std::out_of_range("Polynomial::variable index");
  PolyMonomial m{std::vector<int>(vars, 0)};
  m.e[i] = exp;
  return monomial(vars, std::move(m), Scalar(1));
}

Polynomial Polynomial::monomial(int vars, PolyMonomial m, const Scalar& c) {
  Polynomial p(vars);
  p.add_term(m, c);
  return p;
}

Scalar Polynomial::coeff(const PolyMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

void Polynomial::add_term(const PolyMonomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  Polynomial r(vars_);
  if (c.is_zero()) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_same_vars(vars_, o.vars_, "Polynomial::operator+");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_same_vars(vars_, o.vars_, "Polynomial::operator-");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_same_vars(a.vars_, b.vars_, "Polynomial::operator*");
  Polynomial r(a.vars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      PolyMonomial m = ma;
      for (int i = 0; i < r.vars_; ++i) m.e[i] += mb.e[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

std::string Polynomial::str(const std::string& var_name) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.str();
    for (int i = 0; i < vars_; ++i) {
      if (m.e[i] == 0) continue;
      os << "·" << var_name << "[" << i << "]";
      if (m.e[i] != 1) os << "^" << m.e[i];
    }
  }
  return os.str();
}

int WeylMonomial::order() const {
  return std::accumulate(d.begin(), d.end(), 0);
}

int WeylMonomial::degree() const {
  return std::accumulate(x.begin(), x.end(), 0);
}

WeylElement WeylElement::constant(int vars, const Scalar& c) {
  WeylElement w(vars);
  w.add_term(WeylMonomial{std::vector<int>(vars, 0), std::vector<int>(vars, 0)}, c);
  return w;
}

WeylElement WeylElement::variable(int vars, int i) {
  if (i < 0 || i >= vars) throw std::out_of_range("WeylElement::variable index");
  WeylMonomial m{std::vector<int>(vars, 0), std::vector<int>(vars, 0)};
  m.x[i] = 1;
  return monomial(vars, std::move(m), Scalar(1));
}

WeylElement WeylElement::derivative(int vars, int i) {
  if (i < 0 || i >= vars) throw std::out_of_range("WeylElement::derivative index");
  WeylMonomial m{std::vector<int>(vars, 0), std::vector<int>(vars, 0)};
  m.d[i] = 1;
  return monomial(vars, std::move(m), Scalar(1));
}

WeylElement WeylElement::monomial(int vars, WeylMonomial m, const Scalar& c) {
  WeylElement w(vars);
  w.add_term(m, c);
  return w;
}

Scalar WeylElement::coeff(const WeylMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

int WeylElement::order() const {
  int r = -1;
  for (const auto& [m, c] : terms_) r = std::max(r, m.order());
  return r;
}

int WeylElement::degree() const {
  int r = -1;
  for (const auto& [m, c] : terms_) r = std::max(r, m.degree());
  return r;
}

void WeylElement::add_term(const WeylMonomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

WeylElement WeylElement::scaled(const Scalar& c) const {
  WeylElement r(vars_);
  if (c.is_zero()) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
  return r;
}

WeylElement& WeylElement::operator+=(const WeylElement& o) {
  check_same_vars(vars_, o.vars_, "WeylElement::operator+");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& o) {
  check_same_vars(vars_, o.vars_, "WeylElement::operator-");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  check_same_vars(a.vars_, b.vars_, "WeylElement::operator*");
  const int n = a.vars_;
  WeylElement r(n);
  std::vector<int> k(n), kmax(n);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      // Contract d^b against x^c over all k with 0 <= k_i <= min(b_i, c_i).
      for (int i = 0; i < n; ++i) {
        k[i] = 0;
        kmax[i] = std::min(ma.d[i], mb.x[i]);
      }
      const Scalar cc = ca * cb;
      while (true) {
        BigInt w = 1;
        for (int i = 0; i < n; ++i) {
          if (k[i] > 0) w *= binomial(ma.d[i], k[i]) * binomial(mb.x[i], k[i]) * factorial(k[i]);
        }
        WeylMonomial m{std::vector<int>(n), std::vector<int>(n)};
        for (int i = 0; i < n; ++i) {
          m.x[i] = ma.x[i] + mb.x[i] - k[i];
          m.d[i] = ma.d[i] + mb.d[i] - k[i];
        }
        r.add_term(m, cc * Scalar(Rational(w)));
        int i = 0;
        while (i < n && k[i] == kmax[i]) k[i++] = 0;
        if (i == n) break;
        ++k[i];
      }
    }
  }
  return r;
}

WeylElement commutator(const WeylElement& a, const WeylElement& b) {
  return a * b - b * a;
}

Polynomial WeylElement::apply(const Polynomial& p) const {
  check_same_vars(vars_, p.vars(), "WeylElement::apply");
  Polynomial r(vars_);
  for (const auto& [m, c] : terms_) {
    for (const auto& [pm, pc] : p.terms()) {
      // d^b x^e -> falling factorial coefficients, then multiply by x^a.
      BigInt w = 1;
      bool vanish = false;
      for (int i = 0; i < vars_; ++i) {
        if (pm.e[i] < m.d[i]) {
          vanish = true;
          break;
        }
        for (int t = 0; t < m.d[i]; ++t) w *= pm.e[i] - t;
      }
      if (vanish) continue;
      PolyMonomial out{std::vector<int>(vars_)};
      for (int i = 0; i < vars_; ++i) out.e[i] = pm.e[i] - m.d[i] + m.x[i];
      r.add_term(out, c * pc * Scalar(Rational(w)));
    }
  }
  return r;
}

Polynomial WeylElement::principal_symbol() const {
  Polynomial r(2 * vars_);
  const int top = order();
  if (top < 0) return r;
  for (const auto& [m, c] : terms_) {
    if (m.order() != top) continue;
    PolyMonomial pm{std::vector<int>(2 * vars_)};
    for (int i = 0; i < vars_; ++i) {
      pm.e[i] = m.x[i];
      pm.e[vars_ + i] = m.d[i];
    }
    r.add_term(pm, c);
  }
  return r;
}

std::string WeylElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.str();
    for (int i = 0; i < vars_; ++i) {
      if (m.x[i] == 0) continue;
      os << "·x[" << i << "]";
      if (m.x[i] != 1) os << "^" << m.x[i];
    }
    for (int i = 0; i < vars_; ++i) {
      if (m.d[i] == 0) continue;
      os << "·d[" << i << "]";
      if (m.d[i] != 1) os << "^" << m.d[i];
    }
  }
  return os.str();
}

WeylElement WeylElement::parse(const std::string& s, int vars) {
  WeylElement r(vars);
  if (s == "0") return r;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t end = s.find(" + ", pos);
    if (end == std::string::npos) end = s.size();
    std::string term = s.substr(pos, end - pos);
    pos = end == s.size() ? end : end + 3;

    WeylMonomial m{std::vector<int>(vars, 0), std::vector<int>(vars, 0)};
    std::size_t dot = term.find("·");
    std::string coeff_str = dot == std::string::npos ? term : term.substr(0, dot);
    Scalar c = Scalar::parse(coeff_str);
    while (dot != std::string::npos) {
      std::size_t fpos = dot + std::string("·").size();
      std::size_t next = term.find("·", fpos);
      std::string factor = term.substr(fpos, next == std::string::npos ? std::string::npos : next - fpos);
      dot = next;
      if (factor.size() < 4 || (factor[0] != 'x' && factor[0] != 'd') || factor[1] != '[')
        throw std::invalid_argument("WeylElement::parse: bad factor '" + factor + "'");
      std::size_t close = factor.find(']');
      int idx = std::stoi(factor.substr(2, close - 2));
      int exp = 1;
      std::size_t caret = factor.find('^', close);
      if (caret != std::string::npos) exp = std::stoi(factor.substr(caret + 1));
      if (idx < 0 || idx >= vars) throw std::out_of_range("WeylElement::parse: index");
      (factor[0] == 'x' ? m.x : m.d)[idx] += exp;
    }
    r.add_term(m, c);
  }
  return r;
}

std::string first_difference(const WeylElement& a, const WeylElement& b) {
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  auto emit = [](const WeylMonomial& m, const Scalar& ca, const Scalar& cb) {
    WeylElement probe = WeylElement::monomial(static_cast<int>(m.x.size()), m, Scalar(1));
    std::string mono = probe.str();
    if (mono.size() >= 2 && mono.rfind("1·", 0) == 0) mono = mono.substr(std::string("1·").size());
    return mono + ": lhs=" + ca.str() + " rhs=" + cb.str();
  };
  while (ia != a.terms().end() || ib != b.terms().end()) {
    if (ib == b.terms().end() || (ia != a.terms().end() && ia->first < ib->first)) {
      return emit(ia->first, ia->second, Scalar(0));
    }
    if (ia == a.terms().end() || ib->first < ia->first) {
      return emit(ib->first, Scalar(0), ib->second);
    }
    if (ia->second != ib->second) return emit(ia->first, ia->second, ib->second);
    ++ia;
    ++ib;
  }
  return {};
}

}  // namespace capelli
