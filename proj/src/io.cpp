#include "quadra/io.hpp"

#include <cstdio>
#include <regex>
#include <sstream>

namespace quadra {

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Rational rational_from_json(const ordered_json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw ContractViolation("expected a rational as a string \"p/q\" or an integer, got " + j.dump());
}

std::vector<Rational> rational_vector(const ordered_json& j) {
  require(j.is_array(), "expected an array of rationals");
  std::vector<Rational> out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

RatMatrix rational_matrix(const ordered_json& j) {
  require(j.is_array(), "expected a matrix as an array of rows");
  std::vector<std::vector<Rational>> rows;
  for (const auto& r : j) rows.push_back(rational_vector(r));
  return RatMatrix::from_rows(rows);
}

ordered_json to_json(const Rational& r) { return r.str(); }
ordered_json to_json(const Poly& p) { return p.str(); }

std::optional<Rational> parse_param(const std::string& text) {
  if (text.empty() || text == "sym") return std::nullopt;
  return Rational::parse(text);
}

DeformationParams params_from_strings(const std::string& q, const std::string& t, const std::string& v,
                                      const std::string& w, bool check_range) {
  auto make = check_range ? &DeformationParams::admissible : &DeformationParams::relaxed;
  return make(parse_param(q), parse_param(t), parse_param(v), parse_param(w));
}

DeformationParams params_from_json(const ordered_json& j, const DeformationParams& fallback) {
  std::optional<Rational> vals[4];
  const char* keys[4] = {"q", "t", "v", "w"};
  for (int i = 0; i < 4; ++i) {
    vals[i] = fallback[i];
    if (!j.contains(keys[i])) continue;
    const auto& x = j.at(keys[i]);
    vals[i] = x.is_string() ? parse_param(x.get<std::string>()) : std::optional(rational_from_json(x));
  }
  return DeformationParams::admissible(vals[0], vals[1], vals[2], vals[3]);
}

namespace {

const VectorPair& find_vector(const WickDocument& doc, const std::string& name) {
  auto it = doc.vectors.find(name);
  if (it == doc.vectors.end()) throw ContractViolation("unknown vector '" + name + "'");
  return it->second;
}

const GaugePair& find_matrix(const WickDocument& doc, const std::string& name) {
  auto it = doc.matrices.find(name);
  if (it == doc.matrices.end()) throw ContractViolation("unknown matrix '" + name + "'");
  return it->second;
}

std::string trim(std::string s) {
  auto b = s.find_first_not_of(" \t"), e = s.find_last_not_of(" \t");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

}  // namespace

std::vector<OperatorToken> parse_operator_word(const std::string& text, const WickDocument& doc,
                                               std::vector<Eps>* eps, std::vector<VectorPair>* vecs) {
  static const std::regex token(R"(\s*([CAGL])\(([^)]*)\)\s*)");
  std::vector<OperatorToken> out;
  bool pure = true;
  auto it = text.cbegin();
  std::smatch m;
  while (it != text.cend()) {
    if (!std::regex_search(it, text.cend(), m, token, std::regex_constants::match_continuous))
      throw ContractViolation("cannot parse operator word near '" + std::string(it, text.cend()) + "'");
    const char kind = m[1].str()[0];
    const std::string arg = trim(m[2].str());
    switch (kind) {
      case 'C':
        out.push_back(Create{find_vector(doc, arg)});
        if (eps) eps->push_back(Eps::Create);
        if (vecs) vecs->push_back(find_vector(doc, arg));
        break;
      case 'A':
        out.push_back(Annihilate{find_vector(doc, arg)});
        if (eps) eps->push_back(Eps::Annihilate);
        if (vecs) vecs->push_back(find_vector(doc, arg));
        break;
      case 'G':
        out.push_back(Gauge{find_matrix(doc, arg)});
        pure = false;
        break;
      case 'L': {
        auto comma = arg.find(',');
        require(comma != std::string::npos, "L(a,b) needs two arguments");
        out.push_back(Scalar{Rational::parse(trim(arg.substr(0, comma))) *
                             Rational::parse(trim(arg.substr(comma + 1)))});
        pure = false;
        break;
      }
    }
    it = m[0].second;
  }
  require(!out.empty(), "empty operator word");
  if (!pure && eps) eps->clear();
  return out;
}

WickDocument parse_wick_document(const ordered_json& j) {
  WickDocument doc;
  require(j.contains("vectors") && j.at("vectors").is_object() && !j.at("vectors").empty(),
          "wick input needs a non-empty 'vectors' object");
  std::size_t d = 0, dbar = 0;
  for (const auto& [name, v] : j.at("vectors").items()) {
    VectorPair x{rational_vector(v.at("xi")), rational_vector(v.at("eta"))};
    if (doc.vectors.empty()) {
      d = x.xi.size();
      dbar = x.eta.size();
    }
    if (x.xi.size() != d || x.eta.size() != dbar) throw DimensionMismatch("vector '" + name + "' has another size");
    doc.vectors.emplace(name, std::move(x));
  }
  require(d >= 1 && dbar >= 1 && d <= 255 && dbar <= 255, "vector dimensions out of range");
  doc.space = Space::euclidean(d, dbar);
  if (j.contains("matrices"))
    for (const auto& [name, m] : j.at("matrices").items())
      doc.matrices.emplace(name, GaugePair::symmetric(rational_matrix(m.at("T")), rational_matrix(m.at("Tbar"))));
  if (j.contains("params")) doc.params = j.at("params");

  if (j.contains("word")) {
    doc.has_word = true;
    std::vector<Eps> eps;
    doc.word = parse_operator_word(j.at("word").get<std::string>(), doc, &eps, &doc.word_vectors);
    if (!eps.empty()) doc.eps = std::move(eps);
  }
  if (j.contains("factors")) {
    doc.has_factors = true;
    doc.spec.space = doc.space;
    const GaugePair zero{RatMatrix(d, d), RatMatrix(dbar, dbar)};
    for (const auto& f : j.at("factors")) {
      doc.spec.vectors.push_back(find_vector(doc, f.at("vector").get<std::string>()));
      if (f.contains("gauge")) {
        doc.spec.gauges.push_back(find_matrix(doc, f.at("gauge").get<std::string>()));
        doc.gaussian = false;
      } else {
        doc.spec.gauges.push_back(zero);
      }
      std::pair<Rational, Rational> lam{Rational(0), Rational(0)};
      if (f.contains("lambda")) {
        auto l = rational_vector(f.at("lambda"));
        require(l.size() == 2, "lambda must be [lambda, lambda-bar]");
        lam = {l[0], l[1]};
        if (!(l[0] * l[1]).is_zero()) doc.gaussian = false;
      }
      doc.spec.lambdas.push_back(lam);
    }
    doc.spec.validate();
  }
  require(doc.has_word || doc.has_factors, "wick input needs 'word' or 'factors'");
  return doc;
}

LevySpec levy_spec_from_json(const ordered_json& j) {
  std::vector<std::vector<Rational>> xi;
  std::vector<RatMatrix> T;
  for (const auto& x : j.at("xi")) xi.push_back(rational_vector(x));
  for (const auto& m : j.at("T")) T.push_back(rational_matrix(m));
  auto lambda = rational_vector(j.at("lambda"));
  std::vector<Rational> metric;
  if (j.contains("metric")) metric = rational_vector(j.at("metric"));
  return LevySpec::make(std::move(xi), std::move(T), std::move(lambda), std::move(metric));
}

ordered_json to_json(const LevySpec& spec) {
  ordered_json j;
  j["xi"] = ordered_json::array();
  for (const auto& x : spec.xi) {
    ordered_json row = ordered_json::array();
    for (const auto& r : x) row.push_back(r.str());
    j["xi"].push_back(row);
  }
  j["T"] = ordered_json::array();
  for (const auto& m : spec.T) {
    ordered_json mj = ordered_json::array();
    for (std::size_t a = 0; a < m.rows(); ++a) {
      ordered_json row = ordered_json::array();
      for (std::size_t b = 0; b < m.cols(); ++b) row.push_back(m(a, b).str());
      mj.push_back(row);
    }
    j["T"].push_back(mj);
  }
  j["lambda"] = ordered_json::array();
  for (const auto& l : spec.lambda) j["lambda"].push_back(l.str());
  j["metric"] = ordered_json::array();
  for (const auto& m : spec.metric) j["metric"].push_back(m.str());
  return j;
}

LevyHinchinPair lh_pair_from_json(const ordered_json& j) {
  return {rational_from_json(j.at("lambda")), rational_vector(j.at("tau_moments"))};
}

VarWord parse_var_word(const std::string& text) {
  std::istringstream in(text);
  VarWord w;
  int x;
  while (in >> x) {
    require(x >= 1, "word letters are 1-based");
    w.push_back(x - 1);
  }
  require(in.eof() && !w.empty(), "cannot parse word '" + text + "'");
  return w;
}

std::string var_word_str(const VarWord& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + std::to_string(w[i] + 1);
  return s;
}

Functional<Rational> functional_from_json(const ordered_json& j) {
  Functional<Rational> f;
  f.k = j.at("k").get<int>();
  f.cap = j.at("cap").get<int>();
  require(f.k >= 1 && f.cap >= 1, "functional needs k >= 1 and cap >= 1");
  // unspecified words are zero
  for (const auto& w : words_up_to(f.k, f.cap)) f.values.emplace(w, Rational(0));
  for (const auto& [key, v] : j.at("values").items()) {
    auto w = parse_var_word(key);
    require(static_cast<int>(w.size()) <= f.cap, "functional word longer than cap");
    for (int x : w) require(x < f.k, "functional word uses an undeclared variable");
    f.values[w] = rational_from_json(v);
  }
  return f;
}

}  // namespace quadra
