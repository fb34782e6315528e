#pragma once

// ZM(m, n, r) = <a, b | a^m = b^n = 1, b^-1 a b = a^r>: parameter validation
// and the triple model (m1, n1, s) of its subgroup lattice.

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

#include "zmdeg/arith.hpp"

namespace zmdeg {

enum class Violation {
  NonPositive,       // m or n is zero
  CoprimeMN,         // gcd(m, n) != 1
  CoprimeMR,         // gcd(m, r - 1) != 1
  Order,             // r^n != 1 (mod m)
  EvenM,
};

inline const char* violation_name(Violation v) {
  switch (v) {
    case Violation::NonPositive: return "NonPositive";
    case Violation::CoprimeMN: return "CoprimalityViolation(m,n)";
    case Violation::CoprimeMR: return "CoprimalityViolation(m,r-1)";
    case Violation::Order: return "OrderViolation";
    case Violation::EvenM: return "EvenM";
  }
  return "Unknown";
}

class InvalidParams : public std::invalid_argument {
 public:
  InvalidParams(std::vector<Violation> violations, const std::string& detail)
      : std::invalid_argument(detail), violations_(std::move(violations)) {}

  const std::vector<Violation>& violations() const { return violations_; }

  bool has(Violation v) const {
    for (auto x : violations_) {
      if (x == v) return true;
    }
    return false;
  }

 private:
  std::vector<Violation> violations_;
};

/// A validated presentation triple. Only `validate` constructs one, so every
/// instance satisfies the ZM conditions. r is stored reduced mod m (r = 1
/// when m = 1).
class ZmParams {
 public:
  const Natural& m() const { return m_; }
  const Natural& n() const { return n_; }
  const Natural& r() const { return r_; }
  Natural order() const { return m_ * n_; }

  std::string str() const { return "ZM(" + m_.str() + "," + n_.str() + "," + r_.str() + ")"; }

  friend bool operator==(const ZmParams&, const ZmParams&) = default;

 private:
  friend ZmParams validate(const Natural&, const Natural&, const Natural&);
  ZmParams(Natural m, Natural n, Natural r) : m_(std::move(m)), n_(std::move(n)), r_(std::move(r)) {}

  Natural m_;
  Natural n_;
  Natural r_;
};

/// Every ZM condition that (m, n, r) fails; empty when the triple is valid.
/// For n = 1 the relation forces r = 1 (mod m), so the gcd(m, r - 1)
/// condition is not applied there and ZM(m, 1, 1) is the cyclic group Z_m.
inline std::vector<Violation> check_params(const Natural& m, const Natural& n, const Natural& r) {
  if (m <= 0 || n <= 0 || r < 0) return {Violation::NonPositive};
  std::vector<Violation> out;
  const Natural r_mod = r % m;
  if (gcd(m, n) != 1) out.push_back(Violation::CoprimeMN);
  if (n != 1 && gcd(m, (r_mod + m - 1) % m) != 1) out.push_back(Violation::CoprimeMR);
  if (pow_mod(r_mod, n, m) != 1 % m) out.push_back(Violation::Order);
  if (m % 2 == 0) out.push_back(Violation::EvenM);
  return out;
}

inline ZmParams validate(const Natural& m, const Natural& n, const Natural& r) {
  auto violations = check_params(m, n, r);
  if (!violations.empty()) {
    std::string detail = "ZM(" + m.str() + "," + n.str() + "," + r.str() + ") is not a valid ZM triple:";
    for (auto v : violations) detail += std::string(" ") + violation_name(v);
    throw InvalidParams(std::move(violations), detail);
  }
  Natural r_norm = m == 1 ? Natural(1) : Natural(r % m);
  return ZmParams(m, n, std::move(r_norm));
}

/// (m1, n1, s) indexes the subgroup H(m1, n1, s) = <a^m1, b^n1 a^s>.
struct SubgroupTriple {
  Natural m1;
  Natural n1;
  Natural s;

  friend bool operator==(const SubgroupTriple&, const SubgroupTriple&) = default;
  friend std::strong_ordering operator<=>(const SubgroupTriple& a, const SubgroupTriple& b) {
    auto cmp = [](const Natural& x, const Natural& y) {
      return x < y ? std::strong_ordering::less : x > y ? std::strong_ordering::greater : std::strong_ordering::equal;
    };
    if (auto c = cmp(a.m1, b.m1); c != 0) return c;
    if (auto c = cmp(a.n1, b.n1); c != 0) return c;
    return cmp(a.s, b.s);
  }

  std::string str() const { return "(" + m1.str() + "," + n1.str() + "," + s.str() + ")"; }
};

/// Conjugacy class [H(m1, n1, 0)]; every subgroup of order mn/(m1 n1) lies in it.
struct ConjClassRecord {
  Natural m1;
  Natural n1;
  Natural size;
};

inline Natural conj_class_size(const ZmParams& params, const Natural& m1, const Natural& n1) {
  if (!divides(m1, params.m()) || !divides(n1, params.n())) {
    throw std::invalid_argument("conj_class_size: (" + m1.str() + "," + n1.str() + ") is not a divisor pair of " +
                                params.str());
  }
  return quotient_gcd(m1, params.r(), n1, params.n());
}

/// (m/m1) | r^n1 - 1, i.e. H(m1, n1, s) is cyclic (for any admissible s).
inline bool is_cyclic_class(const ZmParams& params, const Natural& m1, const Natural& n1) {
  const Natural index = params.m() / m1;
  return pow_mod(params.r(), n1, index) == 1 % index;
}

inline bool is_cyclic_triple(const ZmParams& params, const SubgroupTriple& t) {
  return is_cyclic_class(params, t.m1, t.n1);
}

/// Divisor lists of m and n with the class-size and cyclicity grids indexed
/// [i][j] for (m_divisors[i], n_divisors[j]). Built once per group and shared
/// by the counting and degree routines.
struct ClassLattice {
  explicit ClassLattice(const ZmParams& p)
      : params(p), m_divisors(divisors(p.m())), n_divisors(divisors(p.n())) {
    sizes.resize(m_divisors.size());
    cyclic.resize(m_divisors.size());
    for (std::size_t i = 0; i < m_divisors.size(); ++i) {
      for (const auto& n1 : n_divisors) {
        sizes[i].push_back(quotient_gcd(m_divisors[i], p.r(), n1, p.n()));
        cyclic[i].push_back(is_cyclic_class(p, m_divisors[i], n1));
      }
    }
  }

  ZmParams params;
  std::vector<Natural> m_divisors;
  std::vector<Natural> n_divisors;
  std::vector<std::vector<Natural>> sizes;
  std::vector<std::vector<bool>> cyclic;

  std::size_t m_index(const Natural& m1) const { return index_of(m_divisors, m1, "m1"); }
  std::size_t n_index(const Natural& n1) const { return index_of(n_divisors, n1, "n1"); }

 private:
  static std::size_t index_of(const std::vector<Natural>& divs, const Natural& d, const char* what) {
    auto it = std::lower_bound(divs.begin(), divs.end(), d);
    if (it == divs.end() || *it != d) {
      throw std::invalid_argument(std::string(what) + " = " + d.str() + " is not a divisor");
    }
    return static_cast<std::size_t>(it - divs.begin());
  }
};

inline std::vector<ConjClassRecord> conj_classes(const ZmParams& params) {
  const ClassLattice lattice(params);
  std::vector<ConjClassRecord> out;
  for (std::size_t i = 0; i < lattice.m_divisors.size(); ++i) {
    for (std::size_t j = 0; j < lattice.n_divisors.size(); ++j) {
      out.push_back({lattice.m_divisors[i], lattice.n_divisors[j], lattice.sizes[i][j]});
    }
  }
  return out;
}

/// All of L in lexicographic (m1, n1, s) order. The admissible s for a
/// divisor pair are the multiples of m1 / gcd(m1, Q) below m1, where
/// Q = (r^n - 1)/(r^n1 - 1); there are exactly gcd(m1, Q) of them.
inline std::vector<SubgroupTriple> enumerate_triples(const ZmParams& params) {
  const ClassLattice lattice(params);
  std::vector<SubgroupTriple> out;
  for (std::size_t i = 0; i < lattice.m_divisors.size(); ++i) {
    const Natural& m1 = lattice.m_divisors[i];
    for (std::size_t j = 0; j < lattice.n_divisors.size(); ++j) {
      const Natural step = m1 / lattice.sizes[i][j];
      for (Natural s = 0; s < m1; s += step) out.push_back({m1, lattice.n_divisors[j], s});
    }
  }
  return out;
}

inline Natural count_subgroups(const ClassLattice& lattice) {
  Natural total = 0;
  for (const auto& row : lattice.sizes) {
    for (const auto& size : row) total += size;
  }
  return total;
}

inline Natural count_cyclic_subgroups(const ClassLattice& lattice) {
  Natural total = 0;
  for (std::size_t i = 0; i < lattice.sizes.size(); ++i) {
    for (std::size_t j = 0; j < lattice.sizes[i].size(); ++j) {
      if (lattice.cyclic[i][j]) total += lattice.sizes[i][j];
    }
  }
  return total;
}

inline Natural count_subgroups(const ZmParams& params) { return count_subgroups(ClassLattice(params)); }
inline Natural count_cyclic_subgroups(const ZmParams& params) { return count_cyclic_subgroups(ClassLattice(params)); }

}  // namespace zmdeg
