#include "setcalc/covering.hpp"

#include <algorithm>

namespace setcalc {

CoverCertificate ruzsa_cover(const GSet& a, const GSet& b, ScanOrder order,
                             std::uint64_t size_cap) {
  require_nonempty(a, "A");
  require_nonempty(b, "B");
  require_same_group(a, b);
  const GroupPtr& g = a.group();

  std::vector<Element> scan = b.elements();
  if (order == ScanOrder::reverse) std::reverse(scan.begin(), scan.end());

  // Greedy maximal family: take b whenever A*b misses every translate
  // already taken. Maximality gives A*b meeting some A*t, so
  // b in t^{-1}... b in A^{-1}At for that t.
  GSet taken_union = GSet::empty(g);
  std::vector<Element> t_elems;
  for (const auto& elem : scan) {
    GSet translate = product(a, GSet::single(g, elem), size_cap);
    if (t_elems.empty() || disjoint(translate, taken_union)) {
      t_elems.push_back(elem);
      taken_union = set_union(taken_union, translate);
    }
  }

  CoverCertificate cert;
  cert.T = GSet::of(g, t_elems);
  GSet ab = product(a, b, size_cap);
  cert.size_bound = Rational(BigInt(ab.size()), BigInt(a.size()));
  cert.covered = check_cover(cert, a, b, size_cap);
  if (!cert.covered)
    fail(errc::hypothesis, "covering construction failed to verify (internal error)");
  return cert;
}

bool check_cover(const CoverCertificate& cert, const GSet& a, const GSet& b,
                 std::uint64_t size_cap) {
  if (cert.T.is_empty() || !cert.T.subset_of(b)) return false;
  // Pairwise disjoint translates: each |A*t| = |A| (right translation is
  // injective), so disjointness is exactly |A*T| = |A||T|.
  GSet at = product(a, cert.T, size_cap);
  if (at.size() != a.size() * cert.T.size()) return false;
  // |T| <= |AB|/|A|, cross-multiplied.
  GSet ab = product(a, b, size_cap);
  if (BigInt(cert.T.size()) * BigInt(a.size()) > BigInt(ab.size())) return false;
  if (!(cert.size_bound == Rational(BigInt(ab.size()), BigInt(a.size())))) return false;
  // B subseteq A^{-1} A T.
  GSet cover = product(product(inverse_set(a), a, size_cap), cert.T, size_cap);
  return b.subset_of(cover);
}

}  // namespace setcalc
