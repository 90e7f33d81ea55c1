#pragma once

#include "tcalab/partition.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace tcalab {

using Coeff = std::int64_t;

// Finitely supported integer combination of partitions. Zero coefficients are never stored.
class PartitionComb {
 public:
  using Map = std::map<Partition, Coeff>;

  PartitionComb() = default;
  PartitionComb(std::initializer_list<std::pair<const Partition, Coeff>> init) {
    for (const auto& [k, v] : init) add(k, v);
  }
  static PartitionComb basis(const Partition& p, Coeff c = 1) {
    PartitionComb r;
    r.add(p, c);
    return r;
  }

  void add(const Partition& p, Coeff c) {
    if (c == 0) return;
    auto [it, inserted] = m_.emplace(p, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) m_.erase(it);
    }
  }
  Coeff operator[](const Partition& p) const {
    auto it = m_.find(p);
    return it == m_.end() ? 0 : it->second;
  }
  const Map& terms() const { return m_; }
  bool is_zero() const { return m_.empty(); }
  std::size_t support_size() const { return m_.size(); }
  int max_degree() const {
    int d = -1;
    for (const auto& [p, c] : m_) d = std::max(d, p.size());
    return d;
  }

  PartitionComb& operator+=(const PartitionComb& o) {
    for (const auto& [p, c] : o.m_) add(p, c);
    return *this;
  }
  PartitionComb& operator-=(const PartitionComb& o) {
    for (const auto& [p, c] : o.m_) add(p, -c);
    return *this;
  }
  PartitionComb& operator*=(Coeff s) {
    if (s == 0) {
      m_.clear();
      return *this;
    }
    for (auto& [p, c] : m_) c *= s;
    return *this;
  }
  friend PartitionComb operator+(PartitionComb a, const PartitionComb& b) { return a += b; }
  friend PartitionComb operator-(PartitionComb a, const PartitionComb& b) { return a -= b; }
  friend PartitionComb operator-(PartitionComb a) { return a *= -1; }
  friend PartitionComb operator*(Coeff s, PartitionComb a) { return a *= s; }
  friend bool operator==(const PartitionComb&, const PartitionComb&) = default;

  std::string str(const std::string& sym) const {
    if (m_.empty()) return "0";
    std::string s;
    for (const auto& [p, c] : m_) {
      if (!s.empty()) s += c < 0 ? " - " : " + ";
      else if (c < 0) s += "-";
      const Coeff a = c < 0 ? -c : c;
      if (a != 1) s += std::to_string(a) + "*";
      s += sym + "" + p.str();
    }
    return s;
  }

 private:
  Map m_;
};

// Class in K(V_f): sum c_lam [S_lam].
using VClass = PartitionComb;

}  // namespace tcalab
