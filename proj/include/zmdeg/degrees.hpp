#pragma once

// Closed-form factorization numbers and (cyclic) subgroup commutativity
// degrees of ZM-groups. Everything here is exact; no floating point.

#include <stdexcept>
#include <string>
#include <vector>

#include "zmdeg/arith.hpp"
#include "zmdeg/exact_ratio.hpp"
#include "zmdeg/zm_core.hpp"

namespace zmdeg {

/// A conjugate-ratio weight in f_local_weighted / cf_local_weighted did not
/// divide exactly.
class IntegralityViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

inline Natural exact_div(const Natural& num, const Natural& den, const ClassLattice& lattice, const char* where) {
  if (num % den != 0) {
    throw IntegralityViolation(std::string(where) + ": " + num.str() + " not divisible by " + den.str() + " in " +
                               lattice.params.str());
  }
  return num / den;
}

// Number of subgroups of class (m_k, n_k) inside H(m1, n1, 0), for m1 | m_k
// and n1 | n_k. H(m1, n1, 0) = { b^(n1 i) a^(m1 t) }, so H(m_k, n_k, s) lies in
// it exactly when m1 | s; the admissible s are the multiples of
// m_k / s_k, which leaves m_k / lcm(m_k / s_k, m1) of them.
inline Natural contained_in(const ClassLattice& lattice, std::size_t ik, std::size_t jk, std::size_t i1) {
  const Natural& mk = lattice.m_divisors[ik];
  return mk / lcm(mk / lattice.sizes[ik][jk], lattice.m_divisors[i1]);
}

// Ordered pairs (H2, H3) of subgroups of H(m1, n1, 0) with H2 H3 = H(m1, n1, 0).
// Keyed by classes, these are the (m2, n2), (m3, n3) with gcd(m2, m3) = m1
// and gcd(n2, n3) = n1: any two subgroups of H(m1, n1, 0) of those orders
// meet in a subgroup of order |H2||H3| / |H(m1, n1, 0)|, so every such pair
// factorizes it. `cyclic_only` restricts both factors to cyclic classes.
inline Natural local_factorizations(const ClassLattice& lattice, std::size_t i1, std::size_t j1, bool cyclic_only) {
  const auto& md = lattice.m_divisors;
  const auto& nd = lattice.n_divisors;
  const Natural& m1 = md[i1];
  const Natural& n1 = nd[j1];

  Natural total = 0;
  for (std::size_t i2 = 0; i2 < md.size(); ++i2) {
    if (md[i2] % m1 != 0) continue;
    for (std::size_t i3 = 0; i3 < md.size(); ++i3) {
      if (md[i3] % m1 != 0 || gcd(md[i2], md[i3]) != m1) continue;
      for (std::size_t j2 = 0; j2 < nd.size(); ++j2) {
        if (nd[j2] % n1 != 0) continue;
        if (cyclic_only && !lattice.cyclic[i2][j2]) continue;
        const Natural left = contained_in(lattice, i2, j2, i1);
        for (std::size_t j3 = 0; j3 < nd.size(); ++j3) {
          if (nd[j3] % n1 != 0 || gcd(nd[j2], nd[j3]) != n1) continue;
          if (cyclic_only && !lattice.cyclic[i3][j3]) continue;
          total += left * contained_in(lattice, i3, j3, i1);
        }
      }
    }
  }
  return total;
}

// The same sum with the conjugate count taken as s_k / s1 for a nontrivial
// class (s_k = |[H(m_k, n_k, 0)]|, s1 = |[H(m1, n1, 0)]|) and 1 for a normal
// one:
//   s2 = s3 = 1        -> s2 s3
//   s2 != 1, s3 = 1    -> 2 s2 s3 / s1   (the mirrored case is folded in here)
//   s2 = 1, s3 != 1    -> 0
//   s2, s3 != 1        -> s2 s3 / s1^2
// This agrees with local_factorizations whenever s1 divides every s_k that
// occurs, but s_k / s1 is not a subgroup count in general (ZM(15,4,2) has
// s1 = 3, s_k = 5 for (m1, n1) = (3, 1), (m_k, n_k) = (15, 2)); an inexact
// division raises IntegralityViolation.
inline Natural weighted_local_factorizations(const ClassLattice& lattice, std::size_t i1, std::size_t j1,
                                             bool cyclic_only) {
  const auto& md = lattice.m_divisors;
  const auto& nd = lattice.n_divisors;
  const Natural& m1 = md[i1];
  const Natural& n1 = nd[j1];
  const Natural& s1 = lattice.sizes[i1][j1];
  const char* where = cyclic_only ? "cf_local_weighted" : "f_local_weighted";

  Natural total = 0;
  for (std::size_t i2 = 0; i2 < md.size(); ++i2) {
    for (std::size_t i3 = 0; i3 < md.size(); ++i3) {
      if (gcd(md[i2], md[i3]) != m1) continue;
      for (std::size_t j2 = 0; j2 < nd.size(); ++j2) {
        if (cyclic_only && !lattice.cyclic[i2][j2]) continue;
        for (std::size_t j3 = 0; j3 < nd.size(); ++j3) {
          if (gcd(nd[j2], nd[j3]) != n1) continue;
          if (cyclic_only && !lattice.cyclic[i3][j3]) continue;
          const Natural& s2 = lattice.sizes[i2][j2];
          const Natural& s3 = lattice.sizes[i3][j3];
          const Natural product = s2 * s3;
          if (s2 == 1 && s3 == 1) {
            total += product;
          } else if (s2 != 1 && s3 == 1) {
            total += 2 * exact_div(product, s1, lattice, where);
          } else if (s2 != 1 && s3 != 1) {
            total += exact_div(product, s1 * s1, lattice, where);
          }
        }
      }
    }
  }
  return total;
}

// sum over (m2, n2), (m3, n3) with gcd(m2, m3) = gcd(n2, n3) = 1 of s2 s3.
inline Natural global_factorizations(const ClassLattice& lattice, bool cyclic_only) {
  const auto& md = lattice.m_divisors;
  const auto& nd = lattice.n_divisors;
  Natural total = 0;
  for (std::size_t i2 = 0; i2 < md.size(); ++i2) {
    for (std::size_t i3 = 0; i3 < md.size(); ++i3) {
      if (gcd(md[i2], md[i3]) != 1) continue;
      for (std::size_t j2 = 0; j2 < nd.size(); ++j2) {
        if (cyclic_only && !lattice.cyclic[i2][j2]) continue;
        for (std::size_t j3 = 0; j3 < nd.size(); ++j3) {
          if (gcd(nd[j2], nd[j3]) != 1) continue;
          if (cyclic_only && !lattice.cyclic[i3][j3]) continue;
          total += lattice.sizes[i2][j2] * lattice.sizes[i3][j3];
        }
      }
    }
  }
  return total;
}

// sum over all classes of |class| * (local count), i.e. the number of
// permuting ordered pairs.
inline Natural permuting_pairs(const ClassLattice& lattice, bool cyclic_only) {
  Natural total = 0;
  for (std::size_t i = 0; i < lattice.m_divisors.size(); ++i) {
    for (std::size_t j = 0; j < lattice.n_divisors.size(); ++j) {
      total += lattice.sizes[i][j] * local_factorizations(lattice, i, j, cyclic_only);
    }
  }
  return total;
}

}  // namespace detail

/// F2: ordered pairs of subgroups whose product is the whole group.
inline Natural f2(const ClassLattice& lattice) { return detail::global_factorizations(lattice, false); }
inline Natural f2(const ZmParams& params) { return f2(ClassLattice(params)); }

/// CF2: ordered pairs of cyclic subgroups whose product is the whole group.
inline Natural cf2(const ClassLattice& lattice) { return detail::global_factorizations(lattice, true); }
inline Natural cf2(const ZmParams& params) { return cf2(ClassLattice(params)); }

/// F2(H(m1, n1, 0)).
inline Natural f_local(const ClassLattice& lattice, const Natural& m1, const Natural& n1) {
  return detail::local_factorizations(lattice, lattice.m_index(m1), lattice.n_index(n1), false);
}
inline Natural f_local(const ZmParams& params, const Natural& m1, const Natural& n1) {
  return f_local(ClassLattice(params), m1, n1);
}

/// CF2(H(m1, n1, 0)).
inline Natural cf_local(const ClassLattice& lattice, const Natural& m1, const Natural& n1) {
  return detail::local_factorizations(lattice, lattice.m_index(m1), lattice.n_index(n1), true);
}
inline Natural cf_local(const ZmParams& params, const Natural& m1, const Natural& n1) {
  return cf_local(ClassLattice(params), m1, n1);
}

/// f_local and cf_local evaluated with the conjugate-ratio weights s_k / s1
/// instead of exact containment counts. Throws IntegralityViolation where a
/// weight is fractional.
inline Natural f_local_weighted(const ClassLattice& lattice, const Natural& m1, const Natural& n1) {
  return detail::weighted_local_factorizations(lattice, lattice.m_index(m1), lattice.n_index(n1), false);
}
inline Natural cf_local_weighted(const ClassLattice& lattice, const Natural& m1, const Natural& n1) {
  return detail::weighted_local_factorizations(lattice, lattice.m_index(m1), lattice.n_index(n1), true);
}

inline ExactRatio sd(const ClassLattice& lattice) {
  const Natural count = count_subgroups(lattice);
  return ExactRatio(detail::permuting_pairs(lattice, false), count * count);
}
inline ExactRatio sd(const ZmParams& params) { return sd(ClassLattice(params)); }

/// The numerator sums cf over every class (not only cyclic ones): each
/// permuting pair of cyclic subgroups is counted in the subgroup it spans.
inline ExactRatio csd(const ClassLattice& lattice) {
  const Natural count = count_cyclic_subgroups(lattice);
  return ExactRatio(detail::permuting_pairs(lattice, true), count * count);
}
inline ExactRatio csd(const ZmParams& params) { return csd(ClassLattice(params)); }

namespace detail {

inline void require_odd_positive(const Natural& m, const char* where) {
  if (m <= 0 || m % 2 == 0) {
    throw std::invalid_argument(std::string(where) + ": m must be an odd positive integer, got " + m.str());
  }
}

}  // namespace detail

/// sd of any ZM(m, n, r) with n prime: (tau^2 + 2 tau sigma + g) / (tau + sigma)^2.
inline ExactRatio sd_n_prime(const Natural& m) {
  detail::require_odd_positive(m, "sd_n_prime");
  const Natural t = tau(m);
  const Natural s = sigma(m);
  return ExactRatio(t * t + 2 * t * s + g_function(m), (t + s) * (t + s));
}

/// csd of any ZM(m, n, r) with n prime: (tau (tau + m) + m (tau + 1)) / (tau + m)^2.
inline ExactRatio csd_n_prime(const Natural& m) {
  detail::require_odd_positive(m, "csd_n_prime");
  const Natural t = tau(m);
  return ExactRatio(t * (t + m) + m * (t + 1), (t + m) * (t + m));
}

struct AsymptoticRow {
  unsigned alpha = 0;
  ExactRatio sd;
  ExactRatio csd;
};

/// sd and csd of ZM(p^alpha, n, r), n prime, for alpha = 1..alpha_max.
inline std::vector<AsymptoticRow> asymptotic_sweep(const Natural& p, unsigned alpha_max) {
  if (p < 3 || !is_prime(p)) {
    throw std::invalid_argument("asymptotic_sweep: p must be an odd prime, got " + p.str());
  }
  if (alpha_max < 1) throw std::invalid_argument("asymptotic_sweep: alpha_max must be at least 1");
  std::vector<AsymptoticRow> rows;
  Natural m = 1;
  for (unsigned alpha = 1; alpha <= alpha_max; ++alpha) {
    m *= p;
    rows.push_back({alpha, sd_n_prime(m), csd_n_prime(m)});
  }
  return rows;
}

struct DegreeReport {
  ZmParams params;
  Natural subgroup_count;
  Natural cyclic_subgroup_count;
  Natural f2;
  Natural cf2;
  ExactRatio sd;
  ExactRatio csd;
};

inline DegreeReport make_report(const ZmParams& params) {
  const ClassLattice lattice(params);
  return DegreeReport{params,
                      count_subgroups(lattice),
                      count_cyclic_subgroups(lattice),
                      f2(lattice),
                      cf2(lattice),
                      sd(lattice),
                      csd(lattice)};
}

}  // namespace zmdeg
