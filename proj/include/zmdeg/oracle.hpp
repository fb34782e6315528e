#pragma once

// Brute-force ground truth. Groups are built as explicit multiplication
// tables, subgroups are found by closure of cyclic subgroups, and every
// count is taken straight from its definition. Nothing here consults the
// closed-form formulas or the triple parametrization of the lattice, except
// triple_to_subgroup, which is the bridge the consistency checks test.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "zmdeg/arith.hpp"
#include "zmdeg/exact_ratio.hpp"
#include "zmdeg/zm_core.hpp"

namespace zmdeg::oracle {

using Element = std::uint32_t;

inline constexpr std::size_t kDefaultBound = 2000;

class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GenerationMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Element bound for table construction; ZMDEG_ORACLE_BOUND overrides it.
inline std::size_t oracle_bound() {
  if (const char* env = std::getenv("ZMDEG_ORACLE_BOUND"); env != nullptr && *env != '\0') {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("ZMDEG_ORACLE_BOUND is not a number: ") + env);
    }
  }
  return kDefaultBound;
}

/// Fixed-universe bitset over group element indices.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const { return universe_; }

  void insert(Element x) { words_[x / 64] |= std::uint64_t{1} << (x % 64); }
  bool contains(Element x) const { return (words_[x / 64] >> (x % 64)) & 1U; }

  std::size_t size() const {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }

  bool is_subset_of(const ElementSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if ((words_[i] & ~other.words_[i]) != 0) return false;
    }
    return true;
  }

  std::size_t intersection_size(const ElementSet& other) const {
    std::size_t total = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      total += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    }
    return total;
  }

  std::vector<Element> elements() const {
    std::vector<Element> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      for (auto w = words_[i]; w != 0; w &= w - 1) {
        out.push_back(static_cast<Element>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
      }
    }
    return out;
  }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  std::size_t hash() const {
    std::size_t h = universe_;
    for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

/// Complete multiplication table; element 0 is the identity.
class GroupTable {
 public:
  GroupTable(std::string name, std::size_t order, std::vector<Element> mul)
      : name_(std::move(name)), order_(order), mul_(std::move(mul)), inv_(order) {
    verify_axioms();
  }

  const std::string& name() const { return name_; }
  std::size_t order() const { return order_; }
  Element identity() const { return 0; }
  Element multiply(Element x, Element y) const { return mul_[static_cast<std::size_t>(x) * order_ + y]; }
  Element inverse(Element x) const { return inv_[x]; }

  /// <generators>, by breadth-first right multiplication.
  ElementSet closure(const std::vector<Element>& generators) const {
    ElementSet set(order_);
    std::vector<Element> frontier{identity()};
    set.insert(identity());
    while (!frontier.empty()) {
      const Element x = frontier.back();
      frontier.pop_back();
      for (Element g : generators) {
        const Element y = multiply(x, g);
        if (!set.contains(y)) {
          set.insert(y);
          frontier.push_back(y);
        }
      }
    }
    return set;
  }

  /// g^-1 H g.
  ElementSet conjugate(const ElementSet& h, Element g) const {
    ElementSet out(order_);
    const Element g_inv = inverse(g);
    for (Element x : h.elements()) out.insert(multiply(multiply(g_inv, x), g));
    return out;
  }

  /// The product set HK.
  ElementSet product(const ElementSet& h, const ElementSet& k) const {
    ElementSet out(order_);
    const auto ke = k.elements();
    for (Element x : h.elements()) {
      for (Element y : ke) out.insert(multiply(x, y));
    }
    return out;
  }

 private:
  void verify_axioms() {
    if (mul_.size() != order_ * order_) throw std::logic_error(name_ + ": table has wrong shape");
    for (Element x = 0; x < order_; ++x) {
      if (multiply(0, x) != x || multiply(x, 0) != x) throw std::logic_error(name_ + ": element 0 is not the identity");
      bool found = false;
      for (Element y = 0; y < order_ && !found; ++y) {
        if (multiply(x, y) == 0) {
          if (multiply(y, x) != 0) throw std::logic_error(name_ + ": one-sided inverse");
          inv_[x] = y;
          found = true;
        }
      }
      if (!found) throw std::logic_error(name_ + ": element without inverse");
    }
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(order_ - 1));
    for (int trial = 0; trial < 1000; ++trial) {
      const Element a = pick(rng), b = pick(rng), c = pick(rng);
      if (multiply(multiply(a, b), c) != multiply(a, multiply(b, c))) {
        throw std::logic_error(name_ + ": multiplication is not associative");
      }
    }
  }

  std::string name_;
  std::size_t order_;
  std::vector<Element> mul_;
  std::vector<Element> inv_;
};

/// Index of b^j a^i in a ZM table built by build_group.
inline Element zm_element(std::size_t m, std::size_t j, std::size_t i) { return static_cast<Element>(j * m + i); }

/// ZM(m, n, r) with elements b^j a^i and
/// (b^j1 a^i1)(b^j2 a^i2) = b^(j1 + j2) a^(i1 r^j2 + i2), from b^-1 a b = a^r.
inline GroupTable build_group(const ZmParams& params, std::size_t bound = oracle_bound()) {
  if (params.order() > bound) {
    throw BoundExceeded("build_group: " + params.str() + " has " + params.order().str() + " elements, bound is " +
                        std::to_string(bound));
  }
  const auto m = params.m().convert_to<std::size_t>();
  const auto n = params.n().convert_to<std::size_t>();
  const auto r = params.r().convert_to<std::size_t>();
  std::vector<std::size_t> r_pow(n, 1 % m);
  for (std::size_t j = 1; j < n; ++j) r_pow[j] = r_pow[j - 1] * r % m;

  const std::size_t order = m * n;
  std::vector<Element> mul(order * order);
  for (std::size_t j1 = 0; j1 < n; ++j1) {
    for (std::size_t i1 = 0; i1 < m; ++i1) {
      for (std::size_t j2 = 0; j2 < n; ++j2) {
        for (std::size_t i2 = 0; i2 < m; ++i2) {
          mul[zm_element(m, j1, i1) * order + zm_element(m, j2, i2)] =
              zm_element(m, (j1 + j2) % n, (i1 * r_pow[j2] + i2) % m);
        }
      }
    }
  }
  return GroupTable(params.str(), order, std::move(mul));
}

/// D_2m as symmetries of a regular m-gon acting on vertices 0..m-1: index k is
/// the rotation v -> v + k, index m + k the reflection v -> k - v. Products
/// are composed as vertex permutations, (xy)(v) = x(y(v)).
inline GroupTable build_dihedral(std::size_t m, std::size_t bound = oracle_bound()) {
  if (m < 3 || m % 2 == 0) {
    throw std::invalid_argument("build_dihedral: m must be odd and at least 3, got " + std::to_string(m));
  }
  if (2 * m > bound) throw BoundExceeded("build_dihedral: D_" + std::to_string(2 * m) + " exceeds the element bound");

  const std::size_t order = 2 * m;
  std::vector<std::vector<std::size_t>> perms(order, std::vector<std::size_t>(m));
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t v = 0; v < m; ++v) {
      perms[k][v] = (v + k) % m;
      perms[m + k][v] = (k + m - v) % m;
    }
  }
  std::map<std::vector<std::size_t>, Element> index;
  for (std::size_t x = 0; x < order; ++x) index.emplace(perms[x], static_cast<Element>(x));

  std::vector<Element> mul(order * order);
  std::vector<std::size_t> composed(m);
  for (std::size_t x = 0; x < order; ++x) {
    for (std::size_t y = 0; y < order; ++y) {
      for (std::size_t v = 0; v < m; ++v) composed[v] = perms[x][perms[y][v]];
      mul[x * order + y] = index.at(composed);
    }
  }
  return GroupTable("D" + std::to_string(order), order, std::move(mul));
}

struct Subgroup {
  ElementSet elements;
  std::size_t order = 0;
  bool cyclic = false;
  std::vector<Element> generators;
};

/// Every subgroup of a table, ordered by (order, sorted element list).
class SubgroupLattice {
 public:
  explicit SubgroupLattice(std::vector<Subgroup> subgroups) : subgroups_(std::move(subgroups)) {
    for (std::size_t i = 0; i < subgroups_.size(); ++i) lookup_.emplace(subgroups_[i].elements, i);
  }

  const std::vector<Subgroup>& subgroups() const { return subgroups_; }
  std::size_t size() const { return subgroups_.size(); }
  const Subgroup& operator[](std::size_t i) const { return subgroups_[i]; }

  std::size_t cyclic_count() const {
    return static_cast<std::size_t>(std::count_if(subgroups_.begin(), subgroups_.end(), [](const Subgroup& s) { return s.cyclic; }));
  }

  /// Index of the subgroup with exactly these elements, or size() if none.
  std::size_t find(const ElementSet& elements) const {
    auto it = lookup_.find(elements);
    return it == lookup_.end() ? subgroups_.size() : it->second;
  }

 private:
  std::vector<Subgroup> subgroups_;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> lookup_;
};

/// Cyclic subgroups <x> for every x, then joins with cyclic subgroups until
/// nothing new appears. Every subgroup is a join of cyclic ones, so the
/// fixpoint is all of L(G).
inline SubgroupLattice enumerate_subgroups(const GroupTable& table) {
  std::vector<Subgroup> found;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen;

  for (Element x = 0; x < table.order(); ++x) {
    ElementSet set = table.closure({x});
    if (seen.contains(set)) continue;
    seen.emplace(set, found.size());
    found.push_back({set, set.size(), true, {x}});
  }
  const std::size_t cyclic_end = found.size();

  std::deque<std::size_t> work;
  for (std::size_t i = 0; i < found.size(); ++i) work.push_back(i);
  while (!work.empty()) {
    const std::size_t current = work.front();
    work.pop_front();
    for (std::size_t c = 0; c < cyclic_end; ++c) {
      if (found[c].elements.is_subset_of(found[current].elements)) continue;
      std::vector<Element> gens = found[current].generators;
      gens.push_back(found[c].generators.front());
      ElementSet joined = table.closure(gens);
      if (seen.contains(joined)) continue;
      seen.emplace(joined, found.size());
      found.push_back({joined, joined.size(), false, std::move(gens)});
      work.push_back(found.size() - 1);
    }
  }

  std::vector<std::vector<Element>> keys(found.size());
  for (std::size_t i = 0; i < found.size(); ++i) keys[i] = found[i].elements.elements();
  std::vector<std::size_t> order(found.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (found[a].order != found[b].order) return found[a].order < found[b].order;
    return keys[a] < keys[b];
  });
  std::vector<Subgroup> sorted;
  sorted.reserve(found.size());
  for (std::size_t i : order) sorted.push_back(std::move(found[i]));
  return SubgroupLattice(std::move(sorted));
}

/// HK == KH as element sets.
inline bool permutes(const GroupTable& table, const ElementSet& h, const ElementSet& k) {
  return table.product(h, k) == table.product(k, h);
}

struct OracleCounts {
  Natural subgroup_count;
  Natural cyclic_subgroup_count;
  Natural f2;
  Natural cf2;
  ExactRatio sd;
  ExactRatio csd;
};

/// sd, csd, F2 and CF2 by exhaustive enumeration of ordered subgroup pairs.
inline OracleCounts definitional_counts(const GroupTable& table, const SubgroupLattice& lattice) {
  const std::size_t count = lattice.size();
  const std::size_t cyclic = lattice.cyclic_count();
  Natural permuting = 0, permuting_cyclic = 0, factorizations = 0, cyclic_factorizations = 0;
  for (std::size_t a = 0; a < count; ++a) {
    const Subgroup& h = lattice[a];
    for (std::size_t b = 0; b < count; ++b) {
      const Subgroup& k = lattice[b];
      const ElementSet hk = table.product(h.elements, k.elements);
      const bool both_cyclic = h.cyclic && k.cyclic;
      if (hk == table.product(k.elements, h.elements)) {
        ++permuting;
        if (both_cyclic) ++permuting_cyclic;
      }
      if (hk.size() == table.order()) {
        ++factorizations;
        if (both_cyclic) ++cyclic_factorizations;
      }
    }
  }
  return OracleCounts{count,
                      cyclic,
                      factorizations,
                      cyclic_factorizations,
                      ExactRatio(permuting, Natural(count) * count),
                      ExactRatio(permuting_cyclic, Natural(cyclic) * cyclic)};
}

inline ExactRatio sd_oracle(const GroupTable& table) {
  return definitional_counts(table, enumerate_subgroups(table)).sd;
}
inline ExactRatio csd_oracle(const GroupTable& table) {
  return definitional_counts(table, enumerate_subgroups(table)).csd;
}
inline Natural f2_oracle(const GroupTable& table) { return definitional_counts(table, enumerate_subgroups(table)).f2; }
inline Natural cf2_oracle(const GroupTable& table) { return definitional_counts(table, enumerate_subgroups(table)).cf2; }

/// Ordered pairs (A, B) of subgroups of lattice[target] with AB equal to it.
/// Uses |AB| = |A||B| / |A n B| and AB being a subset of the target.
inline Natural factorizations_of(const SubgroupLattice& lattice, std::size_t target, bool cyclic_only) {
  const Subgroup& h = lattice[target];
  std::vector<std::size_t> inside;
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    if (lattice[i].order <= h.order && (!cyclic_only || lattice[i].cyclic) &&
        lattice[i].elements.is_subset_of(h.elements)) {
      inside.push_back(i);
    }
  }
  Natural total = 0;
  for (std::size_t a : inside) {
    for (std::size_t b : inside) {
      const std::size_t meet = lattice[a].elements.intersection_size(lattice[b].elements);
      if (lattice[a].order * lattice[b].order == h.order * meet) ++total;
    }
  }
  return total;
}

/// Conjugacy-class id of every subgroup and the size of each class.
struct ConjugacyClasses {
  std::vector<std::size_t> class_of;
  std::vector<std::size_t> class_size;
};

inline ConjugacyClasses conjugacy_classes(const GroupTable& table, const SubgroupLattice& lattice) {
  constexpr auto unset = static_cast<std::size_t>(-1);
  ConjugacyClasses out{std::vector<std::size_t>(lattice.size(), unset), {}};
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    if (out.class_of[i] != unset) continue;
    const std::size_t id = out.class_size.size();
    std::size_t members = 0;
    for (Element g = 0; g < table.order(); ++g) {
      const std::size_t j = lattice.find(table.conjugate(lattice[i].elements, g));
      if (j == lattice.size()) throw std::logic_error("conjugate of a subgroup is not in the lattice");
      if (out.class_of[j] == unset) {
        out.class_of[j] = id;
        ++members;
      }
    }
    out.class_size.push_back(members);
  }
  return out;
}

/// H(m1, n1, s) = <a^m1, b^n1 a^s> realized inside a ZM table.
inline ElementSet triple_to_subgroup(const ZmParams& params, const GroupTable& table, const SubgroupTriple& t) {
  const auto m = params.m().convert_to<std::size_t>();
  const auto n = params.n().convert_to<std::size_t>();
  const auto m1 = t.m1.convert_to<std::size_t>();
  const auto n1 = t.n1.convert_to<std::size_t>();
  const auto s = t.s.convert_to<std::size_t>();
  ElementSet set = table.closure({zm_element(m, 0, m1 % m), zm_element(m, n1 % n, s % m)});
  const std::size_t expected = m * n / (m1 * n1);
  if (set.size() != expected) {
    throw GenerationMismatch(params.str() + ": triple " + t.str() + " generates " + std::to_string(set.size()) +
                             " elements, expected " + std::to_string(expected));
  }
  return set;
}

}  // namespace zmdeg::oracle
