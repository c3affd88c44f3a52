#include "quadra/poly.hpp"

#include "quadra/errors.hpp"

namespace quadra {

Poly::Poly(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{0, 0, 0, 0}, c);
}

Poly Poly::monomial(Monomial m, const Rational& c) {
  Poly p;
  p.add_term(m, c);
  return p;
}

Poly Poly::var(int index) {
  require(index >= 0 && index < 4, "polynomial variable index out of range");
  Monomial m{0, 0, 0, 0};
  m[index] = 1;
  return monomial(m);
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0, 0, 0});
}

Rational Poly::constant_term() const { return coefficient(Monomial{0, 0, 0, 0}); }

Rational Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::degree() const {
  // graded order: the last key has the top degree
  if (terms_.empty()) return -1;
  const auto& m = terms_.rbegin()->first;
  return m[0] + m[1] + m[2] + m[3];
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  Poly out;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m;
      for (int i = 0; i < 4; ++i) m[i] = static_cast<std::uint16_t>(ma[i] + mb[i]);
      out.add_term(m, ca * cb);
    }
  terms_ = std::move(out.terms_);
  return *this;
}

Poly Poly::scale(const Rational& c) const {
  Poly out;
  if (c.is_zero()) return out;
  for (const auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
  return out;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  static const char names[4] = {'q', 't', 'v', 'w'};
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string mono;
    for (int i = 0; i < 4; ++i) {
      if (m[i] == 0) continue;
      mono.push_back(names[i]);
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    Rational mag = abs(c);
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    first = false;
    if (mono.empty()) {
      out += mag.str();
    } else if (mag == Rational(1)) {
      out += mono;
    } else if (mag.raw().get_den() == 1) {
      out += mag.str() + mono;
    } else {
      out += "(" + mag.str() + ")" + mono;
    }
  }
  return out;
}

Poly pow(const Poly& base, unsigned exponent) {
  Poly result(1), b = base;
  while (exponent) {
    if (exponent & 1u) result *= b;
    exponent >>= 1;
    if (exponent) b *= b;
  }
  return result;
}

}  // namespace quadra
