#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "quadra/fock.hpp"
#include "quadra/levy.hpp"
#include "quadra/moments.hpp"
#include "quadra/params.hpp"

namespace quadra {

using nlohmann::ordered_json;

// 17 significant digits, round-trippable.
std::string format_double(double x);

Rational rational_from_json(const ordered_json& j);  // "3/2", "-1", or an integer
std::vector<Rational> rational_vector(const ordered_json& j);
RatMatrix rational_matrix(const ordered_json& j);
ordered_json to_json(const Rational& r);  // string form
ordered_json to_json(const Poly& p);

// "sym" (or empty) leaves a parameter symbolic.
std::optional<Rational> parse_param(const std::string& text);
DeformationParams params_from_strings(const std::string& q, const std::string& t, const std::string& v,
                                      const std::string& w, bool check_range = true);
// Object {q, t, v, w}; missing keys fall back to the given defaults.
DeformationParams params_from_json(const ordered_json& j, const DeformationParams& fallback);

// The wick input file: named vectors/matrices, optional params, and either a
// token word "C(x1) A(x1) G(T1) L(3/2,1)" or a list of quadrabasic factors
// {vector, gauge, lambda: [a, b]}.
struct WickDocument {
  Space space;
  std::map<std::string, VectorPair> vectors;
  std::map<std::string, GaugePair> matrices;
  std::optional<ordered_json> params;

  bool has_word = false;
  std::vector<OperatorToken> word;
  // set when the word consists of C/A tokens only
  std::optional<std::vector<Eps>> eps;
  std::vector<VectorPair> word_vectors;

  bool has_factors = false;
  QuadrabasicSpec spec;
  bool gaussian = true;  // no gauge and zero lambdas
};

WickDocument parse_wick_document(const ordered_json& j);
std::vector<OperatorToken> parse_operator_word(const std::string& text, const WickDocument& doc,
                                               std::vector<Eps>* eps, std::vector<VectorPair>* vecs);

LevySpec levy_spec_from_json(const ordered_json& j);
ordered_json to_json(const LevySpec& spec);
LevyHinchinPair lh_pair_from_json(const ordered_json& j);

// Words are written 1-based, space separated: "1 2 1".
VarWord parse_var_word(const std::string& text);
std::string var_word_str(const VarWord& w);
Functional<Rational> functional_from_json(const ordered_json& j);  // {k, cap, values: {"1 1": "2", ...}}

}  // namespace quadra
