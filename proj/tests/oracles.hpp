#ifndef SETCALC_TESTS_ORACLES_HPP
#define SETCALC_TESTS_ORACLES_HPP

// Independent reference implementations for oracle tests. Everything here
// deliberately avoids the library's set machinery: plain nested loops
// over element vectors and std::set for canonicalization.

#include <cstdint>
#include <set>
#include <vector>

#include "setcalc/group.hpp"

namespace oracles {

using setcalc::Element;
using setcalc::GroupPtr;

inline std::vector<Element> sorted(std::set<Element> s) {
  return {s.begin(), s.end()};
}

inline std::vector<Element> naive_product(const GroupPtr& g,
                                          const std::vector<Element>& a,
                                          const std::vector<Element>& b) {
  std::set<Element> out;
  for (const auto& x : a)
    for (const auto& y : b) out.insert(g->mul(x, y));
  return sorted(std::move(out));
}

inline std::vector<Element> naive_inverse(const GroupPtr& g,
                                          const std::vector<Element>& a) {
  std::set<Element> out;
  for (const auto& x : a) out.insert(g->inv(x));
  return sorted(std::move(out));
}

inline std::vector<Element> naive_power(const GroupPtr& g, const std::vector<Element>& b,
                                        int h) {
  std::vector<Element> acc = b;
  for (int i = 1; i < h; ++i) acc = naive_product(g, acc, b);
  return acc;
}

// One-line permutation composition, (a.b)(i) = a(b(i)), written separately
// from the group engine so the two can disagree if either is wrong.
inline std::vector<std::int64_t> compose_perm(const std::vector<std::int64_t>& a,
                                              const std::vector<std::int64_t>& b) {
  std::vector<std::int64_t> c(a.size());
  for (size_t i = 0; i < a.size(); ++i)
    c[i] = a[static_cast<size_t>(b[i] - 1)];
  return c;
}

// Minimum |ZB|/|Z| over nonempty Z of A, by explicit subset enumeration
// with naive products. Returns the pair (|ZB|, |Z|) of the best ratio.
inline std::pair<std::int64_t, std::int64_t> naive_min_ratio(
    const GroupPtr& g, const std::vector<Element>& a, const std::vector<Element>& b) {
  size_t n = a.size();
  std::int64_t bp = -1, bq = 1;
  for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
    std::vector<Element> z;
    for (size_t i = 0; i < n; ++i)
      if (mask >> i & 1) z.push_back(a[i]);
    auto zb = naive_product(g, z, b);
    std::int64_t p = static_cast<std::int64_t>(zb.size());
    std::int64_t q = static_cast<std::int64_t>(z.size());
    if (bp < 0 || p * bq < bp * q) {
      bp = p;
      bq = q;
    }
  }
  return {bp, bq};
}

}  // namespace oracles

#endif
