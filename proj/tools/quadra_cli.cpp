// quadra: command-line front end. Exit codes: 0 ok, 1 verification failure,
// 2 usage error, 3 resource guard.
#include <complex>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "quadra/io.hpp"
#include "quadra/orthopoly.hpp"
#include "quadra/verify.hpp"

using namespace quadra;
using json = ordered_json;

namespace {

enum class Mode { Exact, Symbolic, Float };
enum class Output { Json, Csv, Text };

struct RunConfig {
  std::string q = "sym", t = "sym", v = "sym", w = "sym";
  std::string mode_text, output_text;  // empty: defaults
  std::uint64_t seed = 1;
  int cap = 0;  // 0: module defaults
  Mode mode = Mode::Exact;
  Output output = Output::Json;
  bool params_given = false;

  DeformationParams params(bool check_range = true) const { return params_from_strings(q, t, v, w, check_range); }
};

RunConfig cfg;

// ---- output -------------------------------------------------------------------

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<json>> rows;
  json meta = json::object();
};

std::string cell_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_float()) return format_double(j.get<double>());
  if (j.is_null()) return "";
  return j.dump();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

void emit(const Table& t) {
  switch (cfg.output) {
    case Output::Json: {
      json out = t.meta;
      json rows = json::array();
      for (const auto& r : t.rows) {
        json o = json::object();
        for (std::size_t i = 0; i < t.columns.size(); ++i) o[t.columns[i]] = r[i];
        rows.push_back(o);
      }
      out["rows"] = rows;
      std::cout << out.dump(2) << "\n";
      break;
    }
    case Output::Csv:
      for (std::size_t i = 0; i < t.columns.size(); ++i) std::cout << (i ? "," : "") << csv_escape(t.columns[i]);
      std::cout << "\n";
      for (const auto& r : t.rows) {
        for (std::size_t i = 0; i < r.size(); ++i) std::cout << (i ? "," : "") << csv_escape(cell_text(r[i]));
        std::cout << "\n";
      }
      break;
    case Output::Text: {
      for (const auto& [k, v] : t.meta.items()) std::cout << "# " << k << ": " << cell_text(v) << "\n";
      std::vector<std::size_t> width(t.columns.size());
      for (std::size_t i = 0; i < t.columns.size(); ++i) width[i] = t.columns[i].size();
      for (const auto& r : t.rows)
        for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], cell_text(r[i]).size());
      auto line = [&](auto get) {
        for (std::size_t i = 0; i < t.columns.size(); ++i)
          std::cout << (i ? "  " : "") << std::left << std::setw(static_cast<int>(width[i])) << get(i);
        std::cout << "\n";
      };
      line([&](std::size_t i) { return t.columns[i]; });
      for (const auto& r : t.rows) line([&](std::size_t i) { return cell_text(r[i]); });
      break;
    }
  }
}

// Key/value documents (wick, gns) go through the same writer as a two-column table.
void emit_object(const json& obj) {
  if (cfg.output == Output::Json) {
    std::cout << obj.dump(2) << "\n";
    return;
  }
  Table t;
  t.columns = {"key", "value"};
  for (const auto& [k, v] : obj.items()) t.rows.push_back({k, v.is_string() ? v : json(v.dump())});
  emit(t);
}

json scalar(const Rational& r) {
  if (cfg.mode == Mode::Float) return r.to_double();
  return r.str();
}
json scalar(const Poly& p) {
  if (cfg.mode == Mode::Float && p.is_constant()) return p.constant_term().to_double();
  return p.str();
}
json scalar(double x) { return x; }

json meta_params(const DeformationParams& p) {
  json m;
  m["params"] = p.str();
  m["mode"] = cfg.mode == Mode::Exact ? "exact" : cfg.mode == Mode::Symbolic ? "symbolic" : "float";
  return m;
}

// Runs f.template operator()<S>(values) in the ring the mode asks for.
template <class F>
void in_scalar_ring(const DeformationParams& p, F&& f) {
  if (cfg.mode == Mode::Symbolic)
    f(poly_values(p));
  else
    f(rational_values(p));
}

int cap_or(int fallback) {
  if (cfg.cap <= 0) return fallback;
  guard(cfg.cap <= fallback, "--cap exceeds the module guard " + std::to_string(fallback));
  return cfg.cap;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ContractViolation(std::string("invalid JSON in '") + path + "': " + e.what());
  }
}

// File params are the base; explicit --q/--t/--v/--w flags win.
DeformationParams merged_params(const std::optional<json>& file_params) {
  if (!file_params) return cfg.params();
  auto base = params_from_json(*file_params, DeformationParams::symbolic());
  std::optional<Rational> vals[4];
  const std::string* flags[4] = {&cfg.q, &cfg.t, &cfg.v, &cfg.w};
  for (int i = 0; i < 4; ++i) vals[i] = *flags[i] != "sym" ? parse_param(*flags[i]) : base[i];
  return DeformationParams::admissible(vals[0], vals[1], vals[2], vals[3]);
}

// ---- euler / partitions ------------------------------------------------------------

int cmd_euler(int max_n) {
  guard(max_n <= cap_or(5), "euler capped at n = 5");
  require(max_n >= 1, "--max-n must be positive");
  static const std::uint64_t euler[] = {1, 1, 5, 61, 1385, 50521};
  Table t;
  t.columns = {"n", "count", "euler", "match"};
  bool all = true;
  for (int n = 1; n <= max_n; ++n) {
    const auto c = count_diagonal_pairings_by_openers(2 * n);
    all = all && c == euler[n];
    t.rows.push_back({n, c, euler[n], c == euler[n]});
  }
  emit(t);
  return all ? 0 : 1;
}

int cmd_partitions(int n, int min_block, bool diagonal, bool pairs) {
  require(n >= 1, "--n must be positive");
  Table t;
  if (!diagonal) {
    guard(n <= cap_or(10), "set partition listing capped at n = 10");
    t.columns = {"partition", "blocks", "cr", "nest", "rc", "rnest"};
    for (const auto& p : enumerate_set_partitions(n, min_block)) {
      const bool small = p.max_block_at_most(2);
      t.rows.push_back({p.str(), p.block_count(), small ? json(stat_cr(p)) : json(nullptr),
                        small ? json(stat_nest(p)) : json(nullptr), stat_rc(p), stat_rnest(p)});
    }
    t.meta["count"] = t.rows.size();
    emit(t);
    return 0;
  }
  guard(n <= cap_or(8), "diagonal partition listing capped at n = 8");
  auto p = cfg.params(false);
  auto list = pairs ? enumerate_diagonal_pair_partitions(n) : enumerate_diagonal_partitions(n, min_block);
  t.meta = meta_params(p);
  t.meta["count"] = list.size();
  t.columns = {"diagonal", "weight"};
  in_scalar_ring(p, [&](const auto& P) {
    using S = std::decay_t<decltype(P.q)>;
    auto q = power_table(P.q, n * n), tt = power_table(P.t, n * n), v = power_table(P.v, n * n),
         w = power_table(P.w, n * n);
    for (const auto& d : list) {
      S weight = q[stat_rc(d.top)] * tt[stat_rnest(d.top)] * v[stat_rc(d.bar)] * w[stat_rnest(d.bar)];
      t.rows.push_back({d.str(), scalar(weight)});
    }
  });
  emit(t);
  return 0;
}

// ---- moments / polys / cauchy / density ---------------------------------------------

struct FamilyArgs {
  std::string family = "gaussian";
  std::string alpha = "0";
  std::string jacobi_file;
};

// Jacobi prefix of the requested family in ring S.
template <class S>
JacobiParams<S> family_jacobi(const FamilyArgs& fa, const ParamValues<S>& P, int length) {
  if (fa.family == "gaussian") return jacobi_quadrabasic_hermite(P, length);
  if (fa.family == "poisson") return jacobi_quadrabasic_poisson(P, length);
  if (fa.family == "sech") {
    ParamValues<S> one{S(1), S(1), S(1), S(1)};
    return jacobi_quadrabasic_hermite(one, length);
  }
  JacobiParams<Rational> jr;
  if (fa.family == "qmp") {
    require(static_cast<bool>(cfg.params()[0]), "qmp needs a rational --q");
    jr = jacobi_qmp(Rational::parse(fa.alpha), *cfg.params()[0], length);
  } else if (fa.family == "custom") {
    require(!fa.jacobi_file.empty(), "custom family needs --jacobi FILE");
    auto j = read_json_file(fa.jacobi_file);
    jr.beta = rational_vector(j.at("beta"));
    jr.gamma = rational_vector(j.at("gamma"));
    require(static_cast<int>(jr.beta.size()) >= length && static_cast<int>(jr.gamma.size()) >= length,
            "custom Jacobi prefix shorter than needed (" + std::to_string(length) + ")");
  } else {
    throw ContractViolation("unknown family '" + fa.family + "'");
  }
  JacobiParams<S> out;
  for (const auto& b : jr.beta) out.beta.push_back(lift<S>(b));
  for (const auto& g : jr.gamma) out.gamma.push_back(lift<S>(g));
  return out;
}

// Families that do not read q,t,v,w are evaluated at fixed rationals.
DeformationParams family_params(const FamilyArgs& fa) {
  if (fa.family == "gaussian" || fa.family == "poisson") return cfg.params();
  return DeformationParams::relaxed(Rational(1), Rational(1), Rational(1), Rational(1));
}

int cmd_moments(const FamilyArgs& fa, int N, bool crosscheck) {
  guard(N <= cap_or(kMaxMomentOrder), "moments capped at N = 20");
  require(N >= 1, "--N must be positive");
  auto p = family_params(fa);
  Table t;
  t.meta = meta_params(p);
  t.meta["family"] = fa.family;
  t.columns = {"n", "moment"};
  if (crosscheck) {
    require(fa.family == "gaussian", "--crosscheck is available for the gaussian family");
    guard(N <= kMaxWickN, "crosscheck capped at N = 10");
    t.columns = {"n", "moment", "wick", "fock", "agree"};
  }
  bool agree_all = true;
  in_scalar_ring(p, [&](const auto& P) {
    using S = std::decay_t<decltype(P.q)>;
    auto m = moments_from_jacobi(family_jacobi(fa, P, N / 2 + 1), N);
    for (int n = 0; n <= N; ++n) {
      std::vector<json> row{n, scalar(m[n])};
      if (crosscheck) {
        // all-equal unit vector in d = dbar = 1
        const VectorPair unit{{Rational(1)}, {Rational(1)}};
        GaussianSpec spec{Space::euclidean(1, 1), std::vector<VectorPair>(n, unit)};
        S wick = n == 0 ? S(1) : gaussian_wick(spec, P);
        std::vector<Factor> word(n, Factor{Annihilate{unit}, Create{unit}});
        S fock = Fock<S>(spec.space, P).vacuum_expectation(word);
        const bool ok = wick == m[n] && fock == m[n];
        agree_all = agree_all && ok;
        row.insert(row.end(), {scalar(wick), scalar(fock), ok});
      }
      t.rows.push_back(std::move(row));
    }
  });
  emit(t);
  return agree_all ? 0 : 1;
}

int cmd_polys(const FamilyArgs& fa, int n) {
  guard(n <= cap_or(kMaxPolyDegree), "polys capped at degree 30");
  require(n >= 0, "--n must be non-negative");
  auto p = family_params(fa);
  Table t;
  t.meta = meta_params(p);
  t.meta["family"] = fa.family;
  t.columns = {"degree", "coefficients", "norm_squared"};
  in_scalar_ring(p, [&](const auto& P) {
    auto j = family_jacobi(fa, P, std::max(n, 1));
    auto norms = norm_squares_from_jacobi(j, n);
    for (int k = 0; k <= n; ++k) {
      json coeffs = json::array();
      for (const auto& c : poly_from_jacobi(j, k).coeffs) coeffs.push_back(scalar(c));
      t.rows.push_back({k, cfg.output == Output::Json ? coeffs : json(coeffs.dump()),
                        k == 0 ? scalar(Rational(1)) : scalar(norms[k - 1])});
    }
  });
  emit(t);
  return 0;
}

JacobiParams<double> double_jacobi(const FamilyArgs& fa, int length) {
  auto p = family_params(fa);
  require(p.fully_rational(), "numeric evaluation needs rational q,t,v,w");
  return to_double(family_jacobi(fa, rational_values(p), length));
}

int cmd_cauchy(const FamilyArgs& fa, double re, double im, int depth) {
  guard(depth <= cap_or(200), "cauchy depth capped at 200");
  auto j = double_jacobi(fa, depth);
  auto r = cauchy_transform(j, {re, im}, depth);
  Table t;
  t.meta["family"] = fa.family;
  t.columns = {"z_re", "z_im", "G_re", "G_im", "depth_achieved", "ok"};
  t.rows.push_back({re, im, r.value.real(), r.value.imag(), r.depth_achieved, r.ok});
  emit(t);
  return 0;
}

int cmd_density(const FamilyArgs& fa, const std::string& grid, const std::string& form) {
  double lo = 0, hi = 0;
  int count = 101;
  if (!grid.empty()) {
    char c1 = 0, c2 = 0;
    std::istringstream in(grid);
    require(static_cast<bool>(in >> lo >> c1 >> hi >> c2 >> count) && c1 == ':' && c2 == ':' && count >= 2 &&
                lo < hi,
            "--grid expects lo:hi:count");
  }
  guard(count <= 100000, "density grid capped at 100000 points");
  Table t;
  t.meta["family"] = fa.family;
  t.columns = {"x", "density"};
  if (fa.family == "sech") {
    if (grid.empty()) lo = -8, hi = 8;
    for (int i = 0; i < count; ++i) {
      const double x = lo + (hi - lo) * i / (count - 1);
      t.rows.push_back({x, 1.0 / (2.0 * std::cosh(M_PI * x / 2))});
    }
  } else if (fa.family == "qmp") {
    auto p = cfg.params(false);
    require(static_cast<bool>(p[0]), "qmp needs a rational --q");
    const Rational q = *p[0], alpha = Rational::parse(fa.alpha);
    const MpForm mf = form == "printed" ? MpForm::AsPrinted : MpForm::AskeyWilson;
    require(form == "printed" || form == "askey-wilson", "--form is printed or askey-wilson");
    const double L = 2.0 / std::sqrt(1.0 - q.to_double());
    if (grid.empty()) lo = -L, hi = L;
    t.meta["alpha"] = alpha.str();
    t.meta["q"] = q.str();
    t.meta["form"] = form;
    for (int i = 0; i < count; ++i) {
      const double x = lo + (hi - lo) * i / (count - 1);
      // zero outside the open support
      t.rows.push_back({x, std::abs(x) < L ? mp_density(x, alpha, q, mf) : 0.0});
    }
  } else {
    throw ContractViolation("density is available for the qmp and sech families");
  }
  if (cfg.output == Output::Json && cfg.output_text.empty()) cfg.output = Output::Csv;
  emit(t);
  return 0;
}

// ---- wick ----------------------------------------------------------------------------

int cmd_wick(const std::string& path) {
  auto doc = parse_wick_document(read_json_file(path));
  auto p = merged_params(doc.params);
  json out;
  bool equal = true;
  in_scalar_ring(p, [&](const auto& P) {
    using S = std::decay_t<decltype(P.q)>;
    Fock<S> F(doc.space, P);
    if (doc.has_factors) {
      std::vector<Factor> word;
      for (std::size_t i = 0; i < doc.spec.size(); ++i)
        word.push_back({Annihilate{doc.spec.vectors[i]}, Create{doc.spec.vectors[i]}, Gauge{doc.spec.gauges[i]},
                        Scalar{doc.spec.lambdas[i].first * doc.spec.lambdas[i].second}});
      S formula = doc.gaussian ? gaussian_wick(GaussianSpec{doc.space, doc.spec.vectors}, P) : full_wick(doc.spec, P);
      S oracle = F.vacuum_expectation(word);
      equal = formula == oracle;
      out["formula"] = scalar(formula);
      out["oracle"] = scalar(oracle);
      out["equal"] = equal;
    }
    if (doc.has_word) {
      S oracle = F.vacuum_expectation(doc.word);
      json w;
      w["oracle"] = scalar(oracle);
      if (doc.eps) {
        S formula = word_vacuum_formula(*doc.eps, doc.word_vectors, doc.space, P).vacuum_coefficient();
        w["formula"] = scalar(formula);
        w["equal"] = formula == oracle;
        equal = equal && formula == oracle;
      } else {
        // gauge/scalar tokens have no closed pairing formula for arbitrary words
        w["formula"] = nullptr;
        w["equal"] = nullptr;
      }
      if (doc.has_factors)
        out["word"] = w;
      else
        for (const auto& [k, v] : w.items()) out[k] = v;
    }
  });
  out["params"] = p.str();
  emit_object(out);
  return equal ? 0 : 1;
}

// ---- levy / convolve / gns ---------------------------------------------------------------

int cmd_levy(const std::string& path) {
  auto j = read_json_file(path);
  auto spec = levy_spec_from_json(j.at("spec"));
  auto p = merged_params(j.contains("params") ? std::optional<json>(j.at("params")) : std::nullopt);
  const Rational s = j.contains("s") ? rational_from_json(j.at("s")) : Rational(1);
  require(s.sign() > 0, "s must be positive");
  std::vector<VarWord> words;
  for (const auto& w : j.at("words")) words.push_back(parse_var_word(w.get<std::string>()));
  Table t;
  t.meta = meta_params(p);
  t.meta["s"] = s.str();
  t.columns = {"word", "moment", "cumulant", "oracle", "agree"};
  bool agree = true;
  in_scalar_ring(p, [&](const auto& P) {
    using S = std::decay_t<decltype(P.q)>;
    for (const auto& w : words) {
      for (int x : w) require(x < spec.k, "word uses an undeclared variable");
      guard(static_cast<int>(w.size()) <= cap_or(kMaxLevyN), "levy words capped at length 8");
      S m = levy_moment(spec, w, s, P);
      std::vector<int> all(w.size());
      for (std::size_t i = 0; i < w.size(); ++i) all[i] = static_cast<int>(i);
      json oracle = nullptr, ok = nullptr;
      if (w.size() <= 6) {
        S o = fock_levy_oracle(spec, w, std::vector<IntervalSet>(w.size(), IntervalSet{{Rational(0), s}}), P);
        oracle = scalar(o);
        ok = o == m;
        agree = agree && o == m;
      }
      t.rows.push_back({var_word_str(w), scalar(m), scalar(levy_cumulant(spec, w, all, s)), oracle, ok});
    }
  });
  emit(t);
  return agree ? 0 : 1;
}

int cmd_convolve(const std::string& path) {
  auto j = read_json_file(path);
  auto mu = lh_pair_from_json(j.at("mu")), nu = lh_pair_from_json(j.at("nu"));
  const int N = j.value("N", 6);
  guard(N <= cap_or(kMaxWickN), "convolution capped at N = 10");
  require(N >= 1, "N must be positive");
  auto p = merged_params(j.contains("params") ? std::optional<json>(j.at("params")) : std::nullopt);
  auto r1 = lh_cumulants(mu, N), r2 = lh_cumulants(nu, N);
  Table t;
  t.meta = meta_params(p);
  t.columns = {"n", "r_mu", "r_nu", "r_sum", "moment"};
  in_scalar_ring(p, [&](const auto& P) {
    auto m = convolve(mu, nu, P, N);
    for (int n = 1; n <= N; ++n)
      t.rows.push_back({n, scalar(r1[n - 1]), scalar(r2[n - 1]), scalar(r1[n - 1] + r2[n - 1]), scalar(m[n - 1])});
  });
  emit(t);
  return 0;
}

int cmd_gns(const std::string& path, int D) {
  auto j = read_json_file(path);
  require(D >= 1, "--D must be positive");
  guard(D <= cap_or(3), "gns capped at D = 3");
  Functional<Rational> psi;
  if (j.contains("psi")) {
    psi = functional_from_json(j.at("psi"));
  } else {
    auto spec = levy_spec_from_json(j.at("spec"));
    psi = levy_cumulant_functional<Rational>(spec, Rational(1), 2 * D + 1);
  }
  auto verdict = conditional_positivity(psi, D);
  json out;
  out["D"] = D;
  out["conditional_positivity"] = to_string(verdict.verdict);
  out["rank"] = verdict.rank;
  if (verdict.verdict == Definiteness::Indefinite) {
    out["spec"] = nullptr;
    emit_object(out);
    return 1;
  }
  auto spec = gns_reconstruct(psi, D);
  auto again = levy_cumulant_functional<Rational>(spec, Rational(1), D + 1);
  bool same = true;
  for (const auto& [w, v] : again.values) same = same && v == psi.at(w);
  out["spec"] = to_json(spec);
  out["round_trip_length"] = D + 1;
  out["round_trip"] = same;
  emit_object(out);
  return same ? 0 : 1;
}

// ---- verify ----------------------------------------------------------------------------

int cmd_verify(const std::string& suite) {
  std::vector<std::string> suites;
  if (suite == "all")
    suites = suite_names();
  else
    suites = {suite};
  auto p = cfg.params();
  bool all = true;
  json reports = json::array();
  Table t;
  t.columns = {"suite", "case", "pass", "detail"};
  for (const auto& s : suites) {
    auto r = run_suite(s, cfg.seed, p);
    all = all && r.pass;
    json cases = json::array();
    for (const auto& c : r.cases) {
      cases.push_back({{"case", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      t.rows.push_back({s, c.name, c.pass, c.detail});
    }
    reports.push_back({{"suite", s}, {"pass", r.pass}, {"cases", cases}});
  }
  if (cfg.output == Output::Json)
    std::cout << json{{"seed", cfg.seed}, {"pass", all}, {"suites", reports}}.dump(2) << "\n";
  else
    emit(t);
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quadra: (q,t,v,w)-deformed Fock space toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  for (auto [name, target] : {std::pair{"--q", &cfg.q}, {"--t", &cfg.t}, {"--v", &cfg.v}, {"--w", &cfg.w}})
    app.add_option(name, *target, "rational value or 'sym'")->capture_default_str();
  app.add_option("--mode", cfg.mode_text, "exact | symbolic | float (default: exact, symbolic if any param is sym)")
      ->check(CLI::IsMember({"exact", "symbolic", "float"}));
  app.add_option("--output", cfg.output_text, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--seed", cfg.seed, "seed for randomized suites")->capture_default_str();
  app.add_option("--cap", cfg.cap, "lower the size guard of the command");

  int max_n = 5, n = 4, min_block = 1, N = 8, depth = 40, D = 2;
  bool diagonal = false, pairs = false, crosscheck = false;
  double re = 0, im = 1;
  std::string input, grid, form = "askey-wilson", suite;
  FamilyArgs fa;
  auto add_family = [&](CLI::App* sc) {
    sc->add_option("--family", fa.family, "gaussian | poisson | qmp | sech | custom")->capture_default_str();
    sc->add_option("--alpha", fa.alpha, "q-Meixner-Pollaczek alpha")->capture_default_str();
    sc->add_option("--jacobi", fa.jacobi_file, "custom family: JSON {beta, gamma}");
  };

  auto* euler = app.add_subcommand("euler", "diagonal pair partition counts vs Euler numbers");
  euler->add_option("--max-n", max_n)->capture_default_str();
  auto* parts = app.add_subcommand("partitions", "list set or diagonal partitions");
  parts->add_option("--n", n)->capture_default_str();
  parts->add_option("--min-block", min_block)->capture_default_str();
  parts->add_flag("--diagonal", diagonal);
  parts->add_flag("--pairs", pairs, "diagonal pair partitions only");
  auto* moments = app.add_subcommand("moments", "moments m_0..m_N");
  add_family(moments);
  moments->add_option("--N", N)->capture_default_str();
  moments->add_flag("--crosscheck", crosscheck, "compare with the Wick sum and the Fock oracle");
  auto* polys = app.add_subcommand("polys", "monic orthogonal polynomials P_0..P_n");
  add_family(polys);
  polys->add_option("--n", n)->capture_default_str();
  auto* cauchy = app.add_subcommand("cauchy", "Cauchy transform by continued fraction");
  add_family(cauchy);
  cauchy->add_option("--re", re)->capture_default_str();
  cauchy->add_option("--im", im)->capture_default_str();
  cauchy->add_option("--depth", depth)->capture_default_str();
  auto* density = app.add_subcommand("density", "density samples (CSV unless --output given)");
  add_family(density);
  density->add_option("--grid", grid, "lo:hi:count");
  density->add_option("--form", form, "qmp: askey-wilson | printed")->capture_default_str();
  auto* wick = app.add_subcommand("wick", "Wick formula vs Fock oracle for a JSON spec");
  wick->add_option("input", input)->required();
  auto* levy = app.add_subcommand("levy", "Levy moments and cumulants");
  levy->add_option("input", input)->required();
  auto* conv = app.add_subcommand("convolve", "convolution of two Levy-Hinchin pairs");
  conv->add_option("input", input)->required();
  auto* gns = app.add_subcommand("gns", "GNS reconstruction from a generator");
  gns->add_option("input", input)->required();
  gns->add_option("--D", D)->capture_default_str();
  auto* verify = app.add_subcommand("verify", "run an oracle-equivalence suite");
  std::vector<std::string> suite_choices = suite_names();
  suite_choices.push_back("all");
  verify->add_option("suite", suite)->required()->check(CLI::IsMember(suite_choices));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    cfg.output = cfg.output_text == "csv" ? Output::Csv : cfg.output_text == "text" ? Output::Text : Output::Json;
    const bool any_sym = cfg.q == "sym" || cfg.t == "sym" || cfg.v == "sym" || cfg.w == "sym";
    cfg.mode = cfg.mode_text == "float"      ? Mode::Float
               : cfg.mode_text == "symbolic" ? Mode::Symbolic
               : cfg.mode_text == "exact"    ? Mode::Exact
               : any_sym                     ? Mode::Symbolic
                                             : Mode::Exact;
    if (cfg.mode_text.empty() && (verify->parsed() || wick->parsed() || levy->parsed() || conv->parsed()))
      cfg.mode = Mode::Exact;  // file-driven commands: mode follows the merged params below

    if (euler->parsed()) return cmd_euler(max_n);
    if (parts->parsed()) return cmd_partitions(n, min_block, diagonal, pairs);
    if (moments->parsed()) return cmd_moments(fa, N, crosscheck);
    if (polys->parsed()) return cmd_polys(fa, n);
    if (cauchy->parsed()) return cmd_cauchy(fa, re, im, depth);
    if (density->parsed()) return cmd_density(fa, grid, form);
    if (wick->parsed() || levy->parsed() || conv->parsed()) {
      // symbolic exactly when the merged params leave something open
      auto j = read_json_file(input);
      auto p = merged_params(j.contains("params") ? std::optional<json>(j.at("params")) : std::nullopt);
      if (cfg.mode_text.empty()) cfg.mode = p.fully_rational() ? Mode::Exact : Mode::Symbolic;
      if (cfg.mode != Mode::Symbolic) require(p.fully_rational(), "exact/float mode needs rational params");
      if (wick->parsed()) return cmd_wick(input);
      if (levy->parsed()) return cmd_levy(input);
      return cmd_convolve(input);
    }
    if (gns->parsed()) return cmd_gns(input, D);
    if (verify->parsed()) return cmd_verify(suite);
  } catch (const ResourceLimit& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {  // ContractViolation, DimensionMismatch
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
