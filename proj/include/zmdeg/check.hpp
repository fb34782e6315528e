#pragma once

// Formula-versus-oracle comparison for a single ZM triple, and enumeration
// of every valid triple up to an order bound.

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "zmdeg/degrees.hpp"
#include "zmdeg/oracle.hpp"
#include "zmdeg/zm_core.hpp"

namespace zmdeg {

/// Valid (m, n, r) with m n <= max_mn, ordered by (m, n, r). r runs over
/// 1 <= r < m (r = 1 alone when m = 1); isomorphic presentations are kept.
inline std::vector<ZmParams> valid_triples(std::size_t max_mn) {
  std::vector<ZmParams> out;
  for (std::size_t m = 1; m <= max_mn; m += 2) {
    for (std::size_t n = 1; m * n <= max_mn; ++n) {
      const std::size_t r_end = m == 1 ? 2 : m;
      for (std::size_t r = 1; r < r_end; ++r) {
        if (check_params(m, n, r).empty()) out.push_back(validate(m, n, r));
      }
    }
  }
  return out;
}

/// Runs fn(i) for i in [0, count) on `jobs` threads; results land by index so
/// output order never depends on scheduling.
template <typename Result>
std::vector<Result> parallel_map(std::size_t count, unsigned jobs, const std::function<Result(std::size_t)>& fn) {
  std::vector<Result> results(count);
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) results[i] = fn(i);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(count);
  {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            results[i] = fn(i);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

struct Mismatch {
  std::string quantity;
  std::string formula;
  std::string oracle;
};

struct CheckResult {
  ZmParams params;
  std::vector<Mismatch> mismatches;
  std::size_t comparisons = 0;
  // Conjugate-ratio weighted local counts (f_local_weighted/cf_local_weighted):
  // classes where a weight was fractional, and classes where the weighted
  // value was integral but differed from the definitional count.
  std::vector<std::string> weighted_integrality_violations;
  std::vector<std::string> weighted_mismatches;

  bool ok() const { return mismatches.empty(); }
};

namespace detail {

struct Recorder {
  CheckResult& result;

  template <typename A, typename B>
  void compare(const std::string& quantity, const A& formula, const B& oracle) {
    ++result.comparisons;
    if (!(formula == oracle)) result.mismatches.push_back({quantity, to_text(formula), to_text(oracle)});
  }

  static std::string to_text(const Natural& x) { return x.str(); }
  static std::string to_text(const ExactRatio& x) { return x.str(); }
  static std::string to_text(bool x) { return x ? "true" : "false"; }
  static std::string to_text(std::size_t x) { return std::to_string(x); }
};

}  // namespace detail

/// Compares every closed-form quantity for `params` with its definitional
/// value: lattice sizes, the triple bijection and subgroup orders, cyclicity,
/// conjugacy classes, per-subgroup F2/CF2, and the global F2, CF2, sd, csd.
inline CheckResult check_against_oracle(const ZmParams& params, std::size_t bound = oracle::oracle_bound()) {
  CheckResult result{params, {}, 0, {}, {}};
  detail::Recorder rec{result};

  const oracle::GroupTable table = oracle::build_group(params, bound);
  const oracle::SubgroupLattice subgroups = oracle::enumerate_subgroups(table);
  const oracle::ConjugacyClasses classes = oracle::conjugacy_classes(table, subgroups);
  const ClassLattice lattice(params);

  rec.compare("subgroups", count_subgroups(lattice), Natural(subgroups.size()));
  rec.compare("cyclic_subgroups", count_cyclic_subgroups(lattice), Natural(subgroups.cyclic_count()));

  // Triple bijection, cyclicity and per-subgroup factorization counts.
  std::vector<bool> hit(subgroups.size(), false);
  std::map<std::pair<std::size_t, std::size_t>, std::pair<Natural, Natural>> local_cache;
  for (const auto& t : enumerate_triples(params)) {
    const std::string tag = " " + t.str();
    oracle::ElementSet set;
    try {
      set = oracle::triple_to_subgroup(params, table, t);
    } catch (const oracle::GenerationMismatch& e) {
      result.mismatches.push_back({"order" + tag, "", e.what()});
      continue;
    }
    const std::size_t idx = subgroups.find(set);
    if (idx == subgroups.size()) {
      result.mismatches.push_back({"subgroup" + tag, "generated", "not a subgroup"});
      continue;
    }
    rec.compare("distinct" + tag, true, !hit[idx]);
    hit[idx] = true;
    rec.compare("cyclic" + tag, is_cyclic_triple(params, t), subgroups[idx].cyclic);

    const auto key = std::make_pair(lattice.m_index(t.m1), lattice.n_index(t.n1));
    auto it = local_cache.find(key);
    if (it == local_cache.end()) {
      it = local_cache.emplace(key, std::make_pair(f_local(lattice, t.m1, t.n1), cf_local(lattice, t.m1, t.n1))).first;
    }
    const Natural f_truth = oracle::factorizations_of(subgroups, idx, false);
    const Natural cf_truth = oracle::factorizations_of(subgroups, idx, true);
    rec.compare("f_local" + tag, it->second.first, f_truth);
    rec.compare("cf_local" + tag, it->second.second, cf_truth);

    if (t.s == 0) {
      const std::string cls = " (" + t.m1.str() + "," + t.n1.str() + ")";
      auto weighted = [&](const char* name, auto&& eval, const Natural& truth) {
        try {
          if (eval() != truth) result.weighted_mismatches.push_back(name + cls);
        } catch (const IntegralityViolation&) {
          result.weighted_integrality_violations.push_back(name + cls);
        }
      };
      weighted("f_local_weighted", [&] { return f_local_weighted(lattice, t.m1, t.n1); }, f_truth);
      weighted("cf_local_weighted", [&] { return cf_local_weighted(lattice, t.m1, t.n1); }, cf_truth);
    }
  }
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    if (!hit[i]) {
      result.mismatches.push_back({"bijection", "no triple", "subgroup of order " + std::to_string(subgroups[i].order)});
    }
  }

  // Class sizes, and conjugacy classes keyed by order alone.
  std::map<std::size_t, std::size_t> class_by_order;
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    auto [it, inserted] = class_by_order.emplace(subgroups[i].order, classes.class_of[i]);
    if (!inserted) rec.compare("conjugate-by-order |H|=" + std::to_string(subgroups[i].order), it->second, classes.class_of[i]);
  }
  const auto m = params.m().convert_to<std::size_t>();
  const auto n = params.n().convert_to<std::size_t>();
  for (std::size_t i = 0; i < lattice.m_divisors.size(); ++i) {
    for (std::size_t j = 0; j < lattice.n_divisors.size(); ++j) {
      const auto m1 = lattice.m_divisors[i].convert_to<std::size_t>();
      const auto n1 = lattice.n_divisors[j].convert_to<std::size_t>();
      const std::size_t idx = subgroups.find(oracle::triple_to_subgroup(params, table, {m1, n1, 0}));
      if (idx == subgroups.size()) continue;
      const std::string tag = " (" + std::to_string(m1) + "," + std::to_string(n1) + ")";
      rec.compare("class_size" + tag, lattice.sizes[i][j], Natural(classes.class_size[classes.class_of[idx]]));
      rec.compare("class_order" + tag, m * n / (m1 * n1), subgroups[idx].order);
    }
  }

  const oracle::OracleCounts truth = oracle::definitional_counts(table, subgroups);
  rec.compare("f2", f2(lattice), truth.f2);
  rec.compare("cf2", cf2(lattice), truth.cf2);
  rec.compare("sd", sd(lattice), truth.sd);
  rec.compare("csd", csd(lattice), truth.csd);
  return result;
}

}  // namespace zmdeg
