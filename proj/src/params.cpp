#include "quadra/params.hpp"

namespace quadra {

namespace {

void check_pair(const std::optional<Rational>& a, const std::optional<Rational>& b,
                const char* what) {
  if (b) require(*b <= Rational(1), std::string(what) + ": upper parameter exceeds 1");
  if (a && b) require(abs(*a) <= *b, std::string(what) + ": |lower| exceeds upper");
}

}  // namespace

DeformationParams DeformationParams::admissible(std::optional<Rational> q,
                                                std::optional<Rational> t,
                                                std::optional<Rational> v,
                                                std::optional<Rational> w) {
  check_pair(q, t, "(q,t)");
  check_pair(v, w, "(v,w)");
  return relaxed(q, t, v, w);
}

DeformationParams DeformationParams::relaxed(std::optional<Rational> q, std::optional<Rational> t,
                                             std::optional<Rational> v,
                                             std::optional<Rational> w) {
  DeformationParams p;
  p.vals_[0] = std::move(q);
  p.vals_[1] = std::move(t);
  p.vals_[2] = std::move(v);
  p.vals_[3] = std::move(w);
  return p;
}

bool DeformationParams::fully_rational() const {
  for (const auto& v : vals_)
    if (!v) return false;
  return true;
}

bool DeformationParams::fully_symbolic() const {
  for (const auto& v : vals_)
    if (v) return false;
  return true;
}

std::string DeformationParams::str() const {
  static const char* names[4] = {"q", "t", "v", "w"};
  std::string out = "(";
  for (int i = 0; i < 4; ++i) {
    if (i) out += ",";
    out += std::string(names[i]) + "=" + (vals_[i] ? vals_[i]->str() : "sym");
  }
  return out + ")";
}

ParamValues<Rational> rational_values(const DeformationParams& p) {
  require(p.fully_rational(), "exact mode needs rational q,t,v,w; got " + p.str());
  return {*p[0], *p[1], *p[2], *p[3]};
}

ParamValues<Poly> poly_values(const DeformationParams& p) {
  ParamValues<Poly> out;
  Poly* slots[4] = {&out.q, &out.t, &out.v, &out.w};
  for (int i = 0; i < 4; ++i) *slots[i] = p[i] ? Poly(*p[i]) : Poly::var(i);
  return out;
}

Poly poly_substitute(const Poly& p, const DeformationParams& params) {
  auto vals = poly_values(params);
  const Poly* slots[4] = {&vals.q, &vals.t, &vals.v, &vals.w};
  Poly out;
  for (const auto& [m, c] : p.terms()) {
    Poly term(c);
    for (int i = 0; i < 4; ++i)
      if (m[i]) term *= pow(*slots[i], m[i]);
    out += term;
  }
  return out;
}

Rational poly_eval(const Poly& p, const ParamValues<Rational>& vals) {
  const Rational* slots[4] = {&vals.q, &vals.t, &vals.v, &vals.w};
  Rational out(0);
  for (const auto& [m, c] : p.terms()) {
    Rational term = c;
    for (int i = 0; i < 4; ++i)
      if (m[i]) term *= pow(*slots[i], m[i]);
    out += term;
  }
  return out;
}

Rational poly_eval(const Poly& p, const DeformationParams& params) {
  return poly_eval(p, rational_values(params));
}

}  // namespace quadra
