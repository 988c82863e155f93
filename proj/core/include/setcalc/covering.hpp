#ifndef SETCALC_COVERING_HPP
#define SETCALC_COVERING_HPP

#include "setcalc/gset.hpp"
#include "setcalc/rational.hpp"

namespace setcalc {

// Constructive covering: T subseteq B with pairwise disjoint translates
// A*t, |T| <= |AB|/|A|, and B subseteq A^{-1} A T.
struct CoverCertificate {
  GSet T;
  Rational size_bound;  // |AB|/|A|
  bool covered = false;
};

enum class ScanOrder { forward, reverse };

// Greedy maximal disjoint-translate family over B in canonical order
// (or reverse order; any maximal family works). The certificate is
// re-verified before returning.
CoverCertificate ruzsa_cover(const GSet& a, const GSet& b,
                             ScanOrder order = ScanOrder::forward,
                             std::uint64_t size_cap = kDefaultSizeCap);

// Re-checks the three certificate invariants from scratch.
bool check_cover(const CoverCertificate& cert, const GSet& a, const GSet& b,
                 std::uint64_t size_cap = kDefaultSizeCap);

}  // namespace setcalc

#endif
