#pragma once

// Brute-force reference enumerations used as independent oracles in tests.
// Deliberately naive; shares no code with the library paths it checks.

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace oracle {

using Mass = long long;
using ull = unsigned long long;

inline void compositions_rec(Mass v, int n, std::vector<Mass>& cur,
                             std::vector<std::vector<Mass>>& out) {
  if (n == 1) {
    if (v >= 1) {
      cur.push_back(v);
      out.push_back(cur);
      cur.pop_back();
    }
    return;
  }
  for (Mass first = 1; first + (n - 1) <= v; ++first) {
    cur.push_back(first);
    compositions_rec(v - first, n - 1, cur, out);
    cur.pop_back();
  }
}

/// All ordered compositions of v into n positive parts (recursive reference).
inline std::vector<std::vector<Mass>> compositions(Mass v, int n) {
  std::vector<std::vector<Mass>> out;
  std::vector<Mass> cur;
  compositions_rec(v, n, cur, out);
  return out;
}

/// Pascal-triangle binomial for small arguments.
inline ull binom_ull(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::vector<std::vector<ull>> p(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    p[static_cast<size_t>(i)].assign(static_cast<size_t>(i) + 1, 1);
    for (int j = 1; j < i; ++j)
      p[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          p[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] +
          p[static_cast<size_t>(i - 1)][static_cast<size_t>(j)];
  }
  return p[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

using BicompKey = std::vector<std::pair<Mass, Mass>>;

/// Full bicomponent configuration domain, enumerated the hard way: every
/// (bucket-size composition, component-order word) pair is one distinct
/// configuration.  Returns composition-level keys with the number of
/// manifestations of each.
inline std::map<BicompKey, ull> bicomponent_domain(Mass va, Mass vb, int n) {
  std::map<BicompKey, ull> tally;
  const auto comps = compositions(va + vb, n);
  std::vector<int> word;
  word.insert(word.end(), static_cast<size_t>(va), 0);  // 0 = component A
  word.insert(word.end(), static_cast<size_t>(vb), 1);  // 1 = component B
  std::sort(word.begin(), word.end());
  do {
    for (const auto& comp : comps) {
      BicompKey key;
      size_t pos = 0;
      for (Mass len : comp) {
        Mass a = 0;
        for (Mass i = 0; i < len; ++i)
          if (word[pos + static_cast<size_t>(i)] == 0) ++a;
        key.emplace_back(a, len - a);
        pos += static_cast<size_t>(len);
      }
      ++tally[key];
    }
  } while (std::next_permutation(word.begin(), word.end()));
  return tally;
}

}  // namespace oracle
