#pragma once
// JSON serialization and plain-text pretty printing for the public formats:
// Coxeter matrices, words, group and algebra presentations, coefficient
// vectors, and check reports.

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "alterna/alpha.hpp"
#include "alterna/coxeter.hpp"
#include "alterna/presentation.hpp"
#include "alterna/verify.hpp"

namespace alterna {

using Json = nlohmann::json;

// ---------------------------------------------------------------------------
// Coxeter matrices.  Entry 0 stands for infinity.

inline Json matrix_to_json(const CoxeterMatrix& mat) {
  Json rows = Json::array();
  for (int i = 0; i < mat.n; ++i) {
    Json row = Json::array();
    for (int j = 0; j < mat.n; ++j) row.push_back(mat.m[i][j]);
    rows.push_back(row);
  }
  return Json{{"rank", mat.n}, {"matrix", rows}};
}

inline CoxeterMatrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rank") || !j.contains("matrix"))
    throw std::invalid_argument("matrix JSON needs \"rank\" and \"matrix\"");
  int n = j.at("rank").get<int>();
  const Json& rows = j.at("matrix");
  if (!rows.is_array() || static_cast<int>(rows.size()) != n)
    throw std::invalid_argument("matrix row count disagrees with rank");
  std::vector<std::vector<int>> raw;
  for (const Json& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw std::invalid_argument("matrix row length disagrees with rank");
    raw.push_back(row.get<std::vector<int>>());
  }
  return validate_matrix(raw);
}

// Accept either a named type or a path to a JSON file.
inline CoxeterMatrix matrix_from_spec(const std::string& arg) {
  std::ifstream in(arg);
  if (in.good()) {
    Json j;
    in >> j;
    return matrix_from_json(j);
  }
  return named_matrix(arg);
}

// ---------------------------------------------------------------------------
// Words and group presentations.

inline Json word_to_json(const FreeWord& w) {
  Json out = Json::array();
  size_t i = 0;
  while (i < w.letters.size()) {
    size_t j = i;
    int exp = 0;
    while (j < w.letters.size() && w.letters[j].first == w.letters[i].first &&
           (w.letters[j].second > 0) == (w.letters[i].second > 0)) {
      exp += w.letters[j].second;
      ++j;
    }
    out.push_back(Json::array({w.letters[i].first, exp}));
    i = j;
  }
  return out;
}

inline FreeWord word_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("word must be a JSON array");
  FreeWord w;
  for (const Json& item : j) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_string() ||
        !item[1].is_number_integer())
      throw std::invalid_argument("word letter must be [generator, exponent]");
    w.push(item[0].get<std::string>(), item[1].get<int>());
  }
  return w;
}

inline Json group_to_json(const GroupPresentation& pres) {
  Json rels = Json::array();
  for (const auto& [lhs, rhs] : pres.relations)
    rels.push_back(Json{{"lhs", word_to_json(lhs)}, {"rhs", word_to_json(rhs)}});
  return Json{{"generators", pres.generators}, {"relations", rels}};
}

inline GroupPresentation group_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("generators") || !j.contains("relations"))
    throw std::invalid_argument(
        "presentation JSON needs \"generators\" and \"relations\"");
  GroupPresentation pres;
  pres.generators = j.at("generators").get<std::vector<std::string>>();
  for (const Json& rel : j.at("relations")) {
    if (!rel.is_object() || !rel.contains("lhs") || !rel.contains("rhs"))
      throw std::invalid_argument("relation JSON needs \"lhs\" and \"rhs\"");
    pres.relations.emplace_back(word_from_json(rel.at("lhs")),
                                word_from_json(rel.at("rhs")));
  }
  validate(pres);
  return pres;
}

// ---------------------------------------------------------------------------
// Laurent polynomials and algebra presentations.

inline Json poly_to_json(const LaurentPoly& p) {
  Json out = Json::array();
  for (const auto& [mono, c] : p.terms) {
    Json exps = Json::object();
    for (const auto& [v, e] : mono) exps[v] = e;
    out.push_back(Json{{"coeff", c.str()}, {"exps", exps}});
  }
  return out;
}

inline LaurentPoly poly_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be an array");
  LaurentPoly p;
  for (const Json& term : j) {
    if (!term.is_object() || !term.contains("coeff") || !term.contains("exps"))
      throw std::invalid_argument("poly term needs \"coeff\" and \"exps\"");
    Int c(term.at("coeff").get<std::string>());
    Monomial mono;
    for (const auto& [v, e] : term.at("exps").items())
      if (e.get<int>() != 0) mono[v] = e.get<int>();
    p.add_term(mono, c);
  }
  return p;
}

inline Json algebra_to_json(const AlgebraPresentation& pres) {
  Json rels = Json::array();
  for (const auto& rel : pres.relations) {
    Json terms = Json::array();
    for (const auto& t : rel.terms)
      terms.push_back(Json{{"coeff", poly_to_json(t.coeff)},
                           {"word", word_to_json(t.word)}});
    rels.push_back(Json{{"terms", terms}});
  }
  return Json{{"generators", pres.generators}, {"relations", rels}};
}

inline AlgebraPresentation algebra_from_json(const Json& j) {
  AlgebraPresentation pres;
  pres.generators = j.at("generators").get<std::vector<std::string>>();
  for (const Json& rel : j.at("relations")) {
    AlgebraRelation r;
    for (const Json& t : rel.at("terms"))
      r.terms.push_back(
          {poly_from_json(t.at("coeff")), word_from_json(t.at("word"))});
    pres.relations.push_back(std::move(r));
  }
  return pres;
}

// ---------------------------------------------------------------------------
// Text rendering.

inline std::string mono_to_text(const Monomial& mono) {
  std::string out;
  for (const auto& [v, e] : mono) {
    if (!out.empty()) out += "*";
    out += v;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

inline std::string poly_to_text(const LaurentPoly& p) {
  if (p.terms.empty()) return "0";
  std::string out;
  for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
    const auto& [mono, c] = *it;
    Int mag = c < 0 ? Int(-c) : c;
    bool neg = c < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string vars = mono_to_text(mono);
    if (vars.empty())
      out += mag.str();
    else if (mag == 1)
      out += vars;
    else
      out += mag.str() + "*" + vars;
  }
  return out;
}

inline std::string word_to_text(const FreeWord& w) {
  if (w.empty()) return "1";
  std::string out;
  size_t i = 0;
  while (i < w.letters.size()) {
    size_t j = i;
    int exp = 0;
    while (j < w.letters.size() && w.letters[j].first == w.letters[i].first &&
           (w.letters[j].second > 0) == (w.letters[i].second > 0)) {
      exp += w.letters[j].second;
      ++j;
    }
    if (!out.empty()) out += " ";
    out += w.letters[i].first;
    if (exp != 1) out += "^" + std::to_string(exp);
    i = j;
  }
  return out;
}

inline std::string relation_to_text(const FreeWord& lhs, const FreeWord& rhs) {
  return word_to_text(lhs) + " = " + word_to_text(rhs);
}

inline std::string group_to_text(const GroupPresentation& pres) {
  std::ostringstream out;
  out << "generators:";
  for (const auto& g : pres.generators) out << " " << g;
  out << "\n";
  for (const auto& [lhs, rhs] : pres.relations)
    out << relation_to_text(lhs, rhs) << "\n";
  return out.str();
}

inline std::string algebra_term_to_text(const AlgebraTerm& t) {
  bool simple = t.coeff.terms.size() == 1;
  std::string c = simple ? poly_to_text(t.coeff)
                         : "(" + poly_to_text(t.coeff) + ")";
  if (t.word.empty()) return c;
  if (t.coeff == LaurentPoly(1)) return word_to_text(t.word);
  return c + "*" + word_to_text(t.word);
}

inline std::string algebra_to_text(const AlgebraPresentation& pres) {
  std::ostringstream out;
  out << "generators:";
  for (const auto& g : pres.generators) out << " " << g;
  out << "\n";
  for (const auto& rel : pres.relations) {
    std::vector<AlgebraTerm> terms = rel.terms;
    std::stable_sort(terms.begin(), terms.end(),
                     [](const AlgebraTerm& a, const AlgebraTerm& b) {
                       return a.word.size() > b.word.size();
                     });
    std::string line;
    for (const auto& src : terms) {
      AlgebraTerm t = src;
      bool neg =
          t.coeff.terms.size() == 1 && t.coeff.terms.begin()->second < 0;
      if (neg) t.coeff = LaurentPoly(0) - t.coeff;
      if (line.empty())
        line += (neg ? "-" : "") + algebra_term_to_text(t);
      else
        line += (neg ? " - " : " + ") + algebra_term_to_text(t);
    }
    out << (line.empty() ? "0" : line) << " = 0\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Coefficient output.

inline Json ak_to_json(const AKVector& v) {
  Json entries = Json::array();
  for (auto it = v.a.rbegin(); it != v.a.rend(); ++it)
    if (!it->second.is_zero())
      entries.push_back(Json{{"k", it->first},
                             {"coeff", poly_to_json(it->second)}});
  return Json{{"m", v.m}, {"one_param", v.equal_params}, {"a", entries}};
}

inline std::string ak_to_text(const AKVector& v) {
  std::ostringstream out;
  for (auto it = v.a.rbegin(); it != v.a.rend(); ++it)
    if (!it->second.is_zero())
      out << "a" << it->first << " = " << poly_to_text(it->second) << "\n";
  return out.str();
}

inline Json alpha_to_json(const AlphaTable& t, int m) {
  Json entries = Json::array();
  for (const auto& [key, val] : t.entries) {
    auto [k, l, lp] = key;
    entries.push_back(
        Json{{"k", k}, {"l", l}, {"lp", lp}, {"value", val.str()}});
  }
  return Json{{"m", m}, {"entries", entries}};
}

inline std::string alpha_to_text(const AlphaTable& t) {
  std::ostringstream out;
  for (const auto& [key, val] : t.entries) {
    auto [k, l, lp] = key;
    out << "alpha[" << k << "][" << l << "][" << lp << "] = " << val.str()
        << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Reports.

inline Json report_to_json(const SuiteReport& rep) {
  Json checks = Json::array();
  for (const auto& c : rep.checks) {
    Json item{{"name", c.name}, {"pass", c.pass}};
    if (!c.detail.empty()) item["detail"] = c.detail;
    checks.push_back(item);
  }
  return Json{{"suite", rep.suite}, {"checks", checks},
              {"pass", rep.all_pass()}};
}

inline std::string report_to_text(const SuiteReport& rep) {
  std::ostringstream out;
  for (const auto& c : rep.checks) {
    out << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
    if (!c.detail.empty()) out << "  (" << c.detail << ")";
    out << "\n";
  }
  out << rep.suite << ": " << (rep.all_pass() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace alterna
