#pragma once

#include "tcalab/partition.hpp"
#include "tcalab/rational.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace tcalab {

enum class VarFamily { t, a };

inline const char* var_name(VarFamily f) { return f == VarFamily::t ? "t" : "a"; }

// Exponent vector: entry i is the exponent of x_{i+1}. Trailing zeros are stripped.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> e) : e_(std::move(e)) {
    for (int x : e_)
      if (x < 0) throw Error(Errc::InvalidInput, "negative exponent");
    trim();
  }
  // x_i^d, i >= 1
  static Monomial var(int i, int d = 1) {
    std::vector<int> e(i, 0);
    e[i - 1] = d;
    return Monomial(std::move(e));
  }
  // t^mu = prod t_i^{m_i(mu)}
  static Monomial of_partition(const Partition& mu) {
    std::vector<int> e(mu.first(), 0);
    for (int x : mu.parts()) ++e[x - 1];
    return Monomial(std::move(e));
  }

  const std::vector<int>& exponents() const { return e_; }
  int exponent(int i) const { return i >= 1 && i <= static_cast<int>(e_.size()) ? e_[i - 1] : 0; }
  int total_degree() const {
    int d = 0;
    for (int x : e_) d += x;
    return d;
  }
  // deg x_i = i
  int weighted_degree() const {
    int d = 0;
    for (std::size_t i = 0; i < e_.size(); ++i) d += static_cast<int>(i + 1) * e_[i];
    return d;
  }
  // The partition with m_i = exponent of x_i (inverse of of_partition).
  Partition as_partition() const {
    std::vector<int> p;
    for (int i = static_cast<int>(e_.size()); i >= 1; --i)
      for (int k = 0; k < e_[i - 1]; ++k) p.push_back(i);
    return Partition(std::move(p));
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    std::vector<int> e(std::max(a.e_.size(), b.e_.size()), 0);
    for (std::size_t i = 0; i < a.e_.size(); ++i) e[i] += a.e_[i];
    for (std::size_t i = 0; i < b.e_.size(); ++i) e[i] += b.e_[i];
    return Monomial(std::move(e));
  }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  void trim() {
    while (!e_.empty() && e_.back() == 0) e_.pop_back();
  }
  std::vector<int> e_;
};

// Sparse polynomial with exact rational coefficients in x_1, x_2, ...
class MPoly {
 public:
  using Map = std::map<Monomial, Rational>;

  MPoly() = default;
  explicit MPoly(VarFamily f) : fam_(f) {}
  static MPoly constant(const Rational& c, VarFamily f = VarFamily::t) {
    MPoly p(f);
    p.add(Monomial(), c);
    return p;
  }
  static MPoly var(int i, VarFamily f = VarFamily::t) {
    MPoly p(f);
    p.add(Monomial::var(i), 1);
    return p;
  }
  static MPoly term(const Monomial& m, const Rational& c, VarFamily f = VarFamily::t) {
    MPoly p(f);
    p.add(m, c);
    return p;
  }

  VarFamily family() const { return fam_; }
  const Map& terms() const { return m_; }
  bool is_zero() const { return m_.empty(); }
  Rational coeff(const Monomial& m) const {
    auto it = m_.find(m);
    return it == m_.end() ? Rational(0) : it->second;
  }

  void add(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = m_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) m_.erase(it);
    }
  }

  // Highest weighted degree (deg x_i = i); -1 for zero.
  int weighted_degree() const {
    int d = -1;
    for (const auto& [m, c] : m_) d = std::max(d, m.weighted_degree());
    return d;
  }
  // Variables that occur with positive exponent.
  std::set<int> variable_support() const {
    std::set<int> s;
    for (const auto& [m, c] : m_)
      for (std::size_t i = 0; i < m.exponents().size(); ++i)
        if (m.exponents()[i] > 0) s.insert(static_cast<int>(i + 1));
    return s;
  }

  MPoly& operator+=(const MPoly& o) {
    check_family(o);
    for (const auto& [m, c] : o.m_) add(m, c);
    return *this;
  }
  MPoly& operator-=(const MPoly& o) {
    check_family(o);
    for (const auto& [m, c] : o.m_) add(m, -c);
    return *this;
  }
  MPoly& operator*=(const Rational& s) {
    if (s == 0) {
      m_.clear();
      return *this;
    }
    for (auto& [m, c] : m_) c *= s;
    return *this;
  }
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator-(MPoly a) { return a *= Rational(-1); }
  friend MPoly operator*(MPoly a, const Rational& s) { return a *= s; }
  friend MPoly operator*(const Rational& s, MPoly a) { return a *= s; }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    a.check_family(b);
    MPoly r(a.fam_);
    for (const auto& [ma, ca] : a.m_)
      for (const auto& [mb, cb] : b.m_) r.add(ma * mb, ca * cb);
    return r;
  }
  // Equality ignores the family tag of the zero polynomial.
  friend bool operator==(const MPoly& a, const MPoly& b) {
    if (a.m_.empty() && b.m_.empty()) return true;
    return a.fam_ == b.fam_ && a.m_ == b.m_;
  }

  // Product truncated to weighted degree <= bound.
  static MPoly mul_truncated(const MPoly& a, const MPoly& b, int bound) {
    a.check_family(b);
    MPoly r(a.fam_);
    for (const auto& [ma, ca] : a.m_) {
      const int da = ma.weighted_degree();
      if (da > bound) continue;
      for (const auto& [mb, cb] : b.m_)
        if (da + mb.weighted_degree() <= bound) r.add(ma * mb, ca * cb);
    }
    return r;
  }

  MPoly truncated(int bound) const {
    MPoly r(fam_);
    for (const auto& [m, c] : m_)
      if (m.weighted_degree() <= bound) r.add(m, c);
    return r;
  }

  // The substitution x_i -> -x_i for every i.
  MPoly negate_variables() const {
    MPoly r(fam_);
    for (const auto& [m, c] : m_) r.add(m, m.total_degree() % 2 == 0 ? c : -c);
    return r;
  }

  MPoly derivative(int i) const {
    MPoly r(fam_);
    for (const auto& [m, c] : m_) {
      const int d = m.exponent(i);
      if (d == 0) continue;
      std::vector<int> e = m.exponents();
      e[i - 1] -= 1;
      r.add(Monomial(std::move(e)), c * d);
    }
    return r;
  }

  // values[i-1] is substituted for x_i; missing values are 0.
  Rational evaluate(const std::vector<Rational>& values) const {
    Rational total = 0;
    for (const auto& [m, c] : m_) {
      Rational v = c;
      for (std::size_t i = 0; i < m.exponents().size() && v != 0; ++i) {
        const int d = m.exponents()[i];
        if (d == 0) continue;
        const Rational x = i < values.size() ? values[i] : Rational(0);
        for (int k = 0; k < d; ++k) v *= x;
      }
      total += v;
    }
    return total;
  }

  std::string str() const {
    if (m_.empty()) return "0";
    std::string s;
    for (auto it = m_.rbegin(); it != m_.rend(); ++it) {
      const auto& [m, c] = *it;
      if (!s.empty()) s += c < 0 ? " - " : " + ";
      else if (c < 0) s += "-";
      const Rational a = c < 0 ? Rational(-c) : c;
      std::string mono;
      for (std::size_t i = 0; i < m.exponents().size(); ++i) {
        const int d = m.exponents()[i];
        if (d == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += std::string(var_name(fam_)) + std::to_string(i + 1);
        if (d > 1) mono += "^" + std::to_string(d);
      }
      if (mono.empty())
        s += to_string(a);
      else if (a == 1)
        s += mono;
      else
        s += to_string(a) + "*" + mono;
    }
    return s;
  }

 private:
  void check_family(const MPoly& o) const {
    if (!m_.empty() && !o.m_.empty() && fam_ != o.fam_)
      throw Error(Errc::InvalidInput, "MPoly: mixing variable families");
  }
  VarFamily fam_ = VarFamily::t;
  Map m_;
};

// prod_{k<d} (x_i - k)
inline MPoly falling_factorial(int i, int d, VarFamily f = VarFamily::a) {
  MPoly r = MPoly::constant(1, f);
  for (int k = 0; k < d; ++k) r = r * (MPoly::var(i, f) - MPoly::constant(k, f));
  return r;
}

// exp(T_0) = exp(t_1 + t_2 + ...) = sum_mu t^mu / mu!, through weighted degree `bound`.
inline MPoly exp_T0_truncated(int bound) {
  MPoly r(VarFamily::t);
  for (const Partition& mu : partitions_up_to(bound))
    r.add(Monomial::of_partition(mu), Rational(1, factorial_weight(mu)));
  return r;
}

}  // namespace tcalab
