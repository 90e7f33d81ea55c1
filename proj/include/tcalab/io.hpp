#pragma once

#include "tcalab/homalg.hpp"
#include "tcalab/hilbert.hpp"
#include "tcalab/ktheory.hpp"
#include "tcalab/partition.hpp"

#include <json.hpp>

#include <cctype>
#include <limits>
#include <string>
#include <variant>

namespace tcalab {

using json = nlohmann::json;

// "7,5,3,3,2"; "0" and "" are the empty partition.
inline Partition parse_partition(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty() || s == "0") return Partition{};
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t comma = s.find(',', pos);
    const std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (tok.empty() || tok.size() > 6 || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw Error(Errc::InvalidInput, "bad partition '" + text + "'");
    const int v = std::stoi(tok);
    if (v == 0) throw Error(Errc::InvalidInput, "zero part in partition '" + text + "'");
    parts.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

inline int parse_int(const std::string& text, const char* what) {
  try {
    std::size_t used = 0;
    const long v = std::stol(text, &used);
    if (used != text.size() || v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
      throw std::invalid_argument(text);
    return static_cast<int>(v);
  } catch (const std::exception&) {
    throw Error(Errc::InvalidInput, std::string("bad integer for ") + what + ": '" + text + "'");
  }
}

// Signed sums of S[..] (simple), P[..] (projective A(x)S), L[..], Q[..] terms, e.g. "P[2,1]-S[1]" or "2*Q[1]+L[]".
using ParsedClass = std::variant<AClass, KClassK>;

inline ParsedClass parse_class_spec(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw Error(Errc::InvalidInput, "empty class spec");
  AClass a;
  KClassK k;
  bool saw_a = false, saw_k = false, saw_l = false, saw_q = false;
  std::size_t i = 0;
  while (i < s.size()) {
    Coeff sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i > 0) {
      throw Error(Errc::InvalidInput, "expected '+' or '-' at position " + std::to_string(i) + " of '" + text + "'");
    }
    Coeff mult = 1;
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) {
      if (j - i > 12) throw Error(Errc::InvalidInput, "coefficient too large in '" + text + "'");
      mult = std::stoll(s.substr(i, j - i));
      i = j;
      if (i < s.size() && s[i] == '*') ++i;
    }
    if (i >= s.size()) throw Error(Errc::InvalidInput, "truncated class spec '" + text + "'");
    const char kind = s[i++];
    if (i >= s.size() || s[i] != '[') throw Error(Errc::InvalidInput, "expected '[' after " + std::string(1, kind));
    const std::size_t close = s.find(']', i);
    if (close == std::string::npos) throw Error(Errc::InvalidInput, "missing ']' in '" + text + "'");
    const Partition p = parse_partition(s.substr(i + 1, close - i - 1));
    i = close + 1;
    const Coeff c = sign * mult;
    switch (kind) {
      case 'S': a.torsion.add(p, c); saw_a = true; break;
      case 'P': a.projective.add(p, c); saw_a = true; break;
      case 'L': k.basis = Basis::L; k.coeffs.add(p, c); saw_k = saw_l = true; break;
      case 'Q': k.basis = Basis::Q; k.coeffs.add(p, c); saw_k = saw_q = true; break;
      default: throw Error(Errc::InvalidInput, std::string("unknown class symbol '") + kind + "'");
    }
  }
  if (saw_a && saw_k) throw Error(Errc::InvalidInput, "class spec mixes Mod_A (S,P) and Mod_K (L,Q) terms");
  if (saw_l && saw_q) throw Error(Errc::BasisMismatch, "class spec mixes L- and Q-basis terms");
  if (saw_k) return k;
  return a;
}

// ---------------------------------------------------------------------------
// JSON

inline json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

inline json to_json(const Partition& p) { return p.parts(); }

inline json to_json(const PartitionComb& x) {
  json terms = json::array();
  for (const auto& [p, c] : x.terms()) terms.push_back({{"partition", to_json(p)}, {"coeff", c}});
  return terms;
}

inline json to_json(const KClassK& x) { return {{"basis", basis_name(x.basis)}, {"terms", to_json(x.coeffs)}}; }

inline json to_json(const AClass& x) { return {{"torsion", to_json(x.torsion)}, {"projective", to_json(x.projective)}}; }

inline json to_json(const MPoly& f) {
  json terms = json::array();
  for (const auto& [m, c] : f.terms()) {
    json e = json::object();
    for (std::size_t i = 0; i < m.exponents().size(); ++i)
      if (m.exponents()[i] > 0) e[std::to_string(i + 1)] = m.exponents()[i];
    terms.push_back({{"exponents", e}, {"num", big_to_json(numerator(c))}, {"den", big_to_json(denominator(c))}});
  }
  return terms;
}

inline json to_json(const UPoly& f) {
  json c = json::array();
  for (const Rational& x : f.coeffs()) c.push_back({{"num", big_to_json(numerator(x))}, {"den", big_to_json(denominator(x))}});
  return c;
}

inline json to_json(const EnhancedSeries& s) { return {{"p", to_json(s.p)}, {"q", to_json(s.q)}}; }

inline json to_json(const LocalCohomologyTable& t) {
  json j = json::object();
  for (const auto& [i, row] : t.rows) {
    json ps = json::array();
    for (const Partition& p : row) ps.push_back(to_json(p));
    j[std::to_string(i)] = {{"partitions", ps}, {"generator", to_json(t.generator.at(i))}};
  }
  return j;
}

inline json to_json(const FreeResShape& s) {
  json ex = json::object();
  for (const auto& [i, gens] : s.explicit_terms) {
    json g = json::array();
    for (const Partition& p : gens) g.push_back(to_json(p));
    ex[std::to_string(i)] = g;
  }
  json tail = nullptr;
  if (s.tail) tail = {{"append_box_in_column", s.tail->columns}};
  return {{"explicit", ex}, {"tail", tail}, {"complete", s.complete}};
}

inline json to_json(const PoincareTruncation& P) {
  json c = json::array();
  for (const auto& [k, v] : P.coeffs)
    c.push_back({{"t", k.first}, {"q", k.second}, {"num", big_to_json(numerator(v))}, {"den", big_to_json(denominator(v))}});
  return {{"bound", P.bound}, {"coefficients", c}};
}

inline json to_json(const Modification& m) {
  if (m.zero) return {{"result", "zero"}};
  return {{"result", "nonzero"}, {"sign", m.sign}, {"target", to_json(m.target)}};
}

inline json to_json(const InjResolution& r) {
  json terms = json::array();
  for (const auto& t : r.terms) {
    json row = json::array();
    for (const Partition& p : t) row.push_back(to_json(p));
    terms.push_back(row);
  }
  json signs = json::array();
  for (const auto& [k, s] : r.signs) signs.push_back({{"from", to_json(k.first)}, {"to", to_json(k.second)}, {"sign", s}});
  return {{"terms", terms}, {"signs", signs}};
}

inline json to_json(const std::map<Partition, int>& m) {
  json a = json::array();
  for (const auto& [p, c] : m) a.push_back({{"partition", to_json(p)}, {"multiplicity", c}});
  return a;
}

}  // namespace tcalab
