#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <span>
#include <vector>

#include "fragkin/count128.hpp"
#include "fragkin/errors.hpp"

namespace fragkin {

/// Cluster and fragment masses are small positive integers; 64 bits is ample.
using Mass = std::int64_t;

/// One-component fragment configuration: the ordered list of fragment masses
/// produced by a single breakup event.  Every entry is >= 1 and the entries
/// sum to the parent mass.  These are exactly the ordered compositions of the
/// parent mass into `n` positive parts.
using Config1C = std::vector<Mass>;

/// An (A-mass, B-mass) pair; used both for bicomponent fragments and for
/// bicomponent cluster states.
struct MassPair {
  Mass a = 0;
  Mass b = 0;
  constexpr Mass total() const { return a + b; }
  friend constexpr auto operator<=>(const MassPair&, const MassPair&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const MassPair& p) {
  return os << '(' << p.a << ',' << p.b << ')';
}

/// Bicomponent fragment configuration at composition level: the ordered list
/// of per-bucket (A,B) contents.  The `multiplicity` is the number of
/// distinct component-order manifestations of this composition, the product
/// of binomial(a+b, a) over the buckets.  All manifestations carry the same
/// kernel value, so one weighted representative stands for all of them.
struct Config2C {
  std::vector<MassPair> fragments;
  Count128 multiplicity{1};
};

/// Default cap on the number of configurations any enumeration may yield.
inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

/// Exact binomial coefficient C(n, k); 0 when k > n or k < 0.
inline Count128 binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw ConfigError("binomial requires n >= 0");
  if (k < 0 || k > n) return Count128(0);
  if (k > n - k) k = n - k;
  Count128 r(1);
  for (std::int64_t i = 1; i <= k; ++i) {
    // exact at every step: r holds C(n-k+i-1, i-1) before the update
    r = r * Count128(static_cast<std::uint64_t>(n - k + i)) /
        Count128(static_cast<std::uint64_t>(i));
  }
  return r;
}

/// Number of ordered compositions of parent mass v into n positive fragments:
/// C(v-1, n-1).  Zero when v < n (the domain is empty).
inline Count128 count_configs_1c(Mass v, int n) {
  if (v < 1) throw ConfigError("parent mass must be >= 1");
  if (n < 1) throw ConfigError("fragment count must be >= 1");
  if (v < n) return Count128(0);
  return binomial(v - 1, n - 1);
}

/// Number of bicomponent configurations from parent (vA, vB) into n
/// fragments, counting component-order manifestations:
/// C(vA+vB, vA) * C(vA+vB-1, n-1).
inline Count128 count_configs_2c(Mass va, Mass vb, int n) {
  if (va < 0 || vb < 0) throw ConfigError("component masses must be >= 0");
  if (va + vb < 1) throw ConfigError("parent must carry at least one mass unit");
  if (n < 1) throw ConfigError("fragment count must be >= 1");
  return binomial(va + vb, va) * count_configs_1c(va + vb, n);
}

/// Number of composition-level bicomponent configurations (i.e. items yielded
/// by ConfigEnumerator2C, without the component-order multiplicities).
/// Inclusion-exclusion over empty buckets.
inline Count128 count_compositions_2c(Mass va, Mass vb, int n) {
  if (va < 0 || vb < 0) throw ConfigError("component masses must be >= 0");
  if (va + vb < 1) throw ConfigError("parent must carry at least one mass unit");
  if (n < 1) throw ConfigError("fragment count must be >= 1");
  Count128 pos(0);
  Count128 neg(0);
  for (int j = 0; j < n; ++j) {
    const std::int64_t m = n - j - 1;  // free buckets minus one
    Count128 term = binomial(n, j) * binomial(va + m, m) * binomial(vb + m, m);
    if (j % 2 == 0)
      pos += term;
    else
      neg += term;
  }
  return pos - neg;
}

/// Number of component-order manifestations of a bicomponent composition:
/// the product of binomial(a+b, a) over the fragments.
inline Count128 component_multiplicity(std::span<const MassPair> fragments) {
  Count128 m(1);
  for (const MassPair& f : fragments) {
    if (f.a < 0 || f.b < 0) throw ConfigError("fragment component masses must be >= 0");
    if (f.total() < 1) throw ConfigError("empty fragment bucket");
    m *= binomial(f.total(), f.a);
  }
  return m;
}

inline Count128 component_multiplicity(const Config2C& config) {
  return component_multiplicity(std::span<const MassPair>(config.fragments));
}

/// Builds a Config2C from bucket contents, validating them and computing the
/// component-order multiplicity.
inline Config2C make_config_2c(std::vector<MassPair> fragments) {
  Config2C c;
  c.multiplicity = component_multiplicity(std::span<const MassPair>(fragments));
  c.fragments = std::move(fragments);
  return c;
}

/// Tally of fragment sizes in a configuration; insensitive to fragment order.
inline std::map<Mass, std::int64_t> distribution_of(const Config1C& config) {
  std::map<Mass, std::int64_t> counts;
  for (Mass m : config) {
    if (m < 1) throw ConfigError("fragment masses must be >= 1");
    ++counts[m];
  }
  return counts;
}

inline std::map<MassPair, std::int64_t> distribution_of(const Config2C& config) {
  std::map<MassPair, std::int64_t> counts;
  for (const MassPair& f : config.fragments) {
    if (f.a < 0 || f.b < 0 || f.total() < 1) throw ConfigError("invalid fragment bucket");
    ++counts[f];
  }
  return counts;
}

inline Mass parent_mass(const Config1C& config) {
  Mass v = 0;
  for (Mass m : config) v += m;
  return v;
}

inline MassPair parent_mass(const Config2C& config) {
  MassPair p;
  for (const MassPair& f : config.fragments) {
    p.a += f.a;
    p.b += f.b;
  }
  return p;
}

/// Restartable enumerator over the ordered compositions of v into n positive
/// parts, in lexicographic order of the mass sequence.  The full count is
/// checked against the budget up front.
class ConfigEnumerator1C {
 public:
  ConfigEnumerator1C(Mass v, int n, std::uint64_t budget = kDefaultEnumerationBudget)
      : v_(v), n_(n) {
    if (count_configs_1c(v, n) > Count128(budget))
      throw BudgetError("configuration count for (v=" + std::to_string(v) +
                        ", n=" + std::to_string(n) + ") exceeds the enumeration budget of " +
                        std::to_string(budget));
    reset();
  }

  void reset() {
    current_.clear();
    done_ = v_ < n_;
  }

  /// Writes the next composition into `out`; returns false when exhausted.
  bool next(Config1C& out) {
    if (done_) return false;
    if (current_.empty()) {
      current_.assign(static_cast<std::size_t>(n_), 1);
      current_.back() = v_ - (n_ - 1);
    } else if (!advance()) {
      done_ = true;
      return false;
    }
    out = current_;
    return true;
  }

 private:
  bool advance() {
    // Rightmost entry with spare mass; the entry before it gets incremented
    // and everything after collapses to the smallest feasible suffix.
    int j = -1;
    for (int i = n_ - 1; i >= 1; --i) {
      if (current_[static_cast<std::size_t>(i)] > 1) {
        j = i;
        break;
      }
    }
    if (j < 0) return false;
    const int k = j - 1;
    Mass suffix = 0;
    for (int i = k; i < n_; ++i) suffix += current_[static_cast<std::size_t>(i)];
    current_[static_cast<std::size_t>(k)] += 1;
    for (int i = k + 1; i < n_; ++i) current_[static_cast<std::size_t>(i)] = 1;
    current_[static_cast<std::size_t>(n_ - 1)] =
        suffix - current_[static_cast<std::size_t>(k)] - (n_ - 2 - k);
    return true;
  }

  Mass v_;
  int n_;
  Config1C current_;
  bool done_ = true;
};

/// Restartable enumerator over composition-level bicomponent configurations:
/// ordered sequences of n buckets (a, b) with a+b >= 1, summing to (vA, vB).
/// Order is lexicographic over the flattened (a, b) sequence.  Each yielded
/// configuration carries its component-order multiplicity.
class ConfigEnumerator2C {
 public:
  ConfigEnumerator2C(Mass va, Mass vb, int n,
                     std::uint64_t budget = kDefaultEnumerationBudget)
      : va_(va), vb_(vb), n_(n) {
    if (count_compositions_2c(va, vb, n) > Count128(budget))
      throw BudgetError("composition count for (vA=" + std::to_string(va) +
                        ", vB=" + std::to_string(vb) + ", n=" + std::to_string(n) +
                        ") exceeds the enumeration budget of " + std::to_string(budget));
    reset();
  }

  void reset() {
    buckets_.assign(static_cast<std::size_t>(n_), MassPair{});
    started_ = false;
    done_ = va_ + vb_ < n_;
  }

  bool next(Config2C& out) {
    if (done_) return false;
    if (!started_) {
      if (!descend(0, va_, vb_)) {
        done_ = true;
        return false;
      }
      started_ = true;
    } else if (!advance()) {
      done_ = true;
      return false;
    }
    out.fragments = buckets_;
    out.multiplicity = component_multiplicity(std::span<const MassPair>(buckets_));
    return true;
  }

 private:
  // Remaining mass strictly before bucket p.
  MassPair remaining_before(int p) const {
    MassPair r{va_, vb_};
    for (int i = 0; i < p; ++i) {
      r.a -= buckets_[static_cast<std::size_t>(i)].a;
      r.b -= buckets_[static_cast<std::size_t>(i)].b;
    }
    return r;
  }

  // Smallest feasible b for bucket p holding a units of A, or -1.
  Mass min_b(int p, MassPair rem, Mass a) const {
    if (a > rem.a) return -1;
    if (p == n_ - 1) {
      // last bucket takes everything that is left
      if (a != rem.a || rem.a + rem.b < 1) return -1;
      return rem.b;
    }
    const Mass left = n_ - p - 1;  // buckets after p
    const Mass lo = (a == 0) ? 1 : 0;
    // every later bucket needs at least one unit in total
    const Mass hi = std::min(rem.b, rem.a + rem.b - a - left);
    if (lo > hi) return -1;
    return lo;
  }

  // Fill buckets p..n-1 with the lexicographically first feasible contents.
  bool descend(int p, Mass rem_a, Mass rem_b) {
    for (int q = p; q < n_; ++q) {
      MassPair rem{rem_a, rem_b};
      bool placed = false;
      for (Mass a = 0; a <= rem.a && !placed; ++a) {
        Mass b = min_b(q, rem, a);
        if (b >= 0) {
          buckets_[static_cast<std::size_t>(q)] = MassPair{a, b};
          rem_a -= a;
          rem_b -= b;
          placed = true;
        }
      }
      if (!placed) return false;
    }
    return true;
  }

  // Advance to the next configuration in lexicographic order.
  bool advance() {
    for (int p = n_ - 2; p >= 0; --p) {
      const MassPair rem = remaining_before(p);
      MassPair cur = buckets_[static_cast<std::size_t>(p)];
      // next (a, b) after cur: bump b, else bump a and restart b
      Mass a = cur.a;
      Mass b = -1;
      {
        const Mass left = n_ - p - 1;
        const Mass hi = std::min(rem.b, rem.a + rem.b - a - left);
        if (cur.b + 1 <= hi) b = cur.b + 1;
      }
      while (b < 0 && a + 1 <= rem.a) {
        ++a;
        b = min_b(p, rem, a);
      }
      if (b < 0) continue;  // bucket p exhausted; backtrack further left
      buckets_[static_cast<std::size_t>(p)] = MassPair{a, b};
      if (descend(p + 1, rem.a - a, rem.b - b)) return true;
      // a feasible prefix always extends; reaching here means a logic error
      throw NumericError("internal enumeration error");
    }
    return false;
  }

  Mass va_;
  Mass vb_;
  int n_;
  std::vector<MassPair> buckets_;
  bool started_ = false;
  bool done_ = true;
};

/// Materializes the full one-component domain (small domains and tests).
inline std::vector<Config1C> enumerate_configs_1c(
    Mass v, int n, std::uint64_t budget = kDefaultEnumerationBudget) {
  ConfigEnumerator1C en(v, n, budget);
  std::vector<Config1C> out;
  Config1C cfg;
  while (en.next(cfg)) out.push_back(cfg);
  return out;
}

/// Materializes the full composition-level bicomponent domain.
inline std::vector<Config2C> enumerate_configs_2c(
    Mass va, Mass vb, int n, std::uint64_t budget = kDefaultEnumerationBudget) {
  ConfigEnumerator2C en(va, vb, n, budget);
  std::vector<Config2C> out;
  Config2C cfg;
  while (en.next(cfg)) out.push_back(cfg);
  return out;
}

}  // namespace fragkin
