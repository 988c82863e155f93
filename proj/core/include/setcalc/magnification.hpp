#ifndef SETCALC_MAGNIFICATION_HPP
#define SETCALC_MAGNIFICATION_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "setcalc/gset.hpp"
#include "setcalc/rational.hpp"

namespace setcalc {

// K = min over nonempty Z subseteq A of |ZB|/|Z|, together with a
// minimizing set X. Ties are broken toward the minimizer of maximum
// cardinality (it is unique: minimizers are closed under union), then
// lexicographically least element sequence.
struct MagnificationCertificate {
  Rational K;
  GSet X;
  enum class Method { brute, flow } method = Method::brute;
  int iterations = 0;
  std::uint64_t candidates_examined = 0;
};

struct MagnificationOptions {
  int brute_cap = 20;                        // max |A| for exhaustive search
  std::uint64_t flow_graph_cap = 1ull << 22; // max |A| * |AB| for the network
  std::uint64_t size_cap = kDefaultSizeCap;
  int exhaustive_cap = 20;                   // max |X| for exhaustive verification
};

// Exhaustive minimum over all 2^|A|-1 nonempty subsets.
MagnificationCertificate magnification_brute(const GSet& a, const GSet& b,
                                             const MagnificationOptions& opts = {});

// Exact Dinkelbach iteration: repeatedly solve min over Z of
// (|ZB| - lambda|Z|) by a single min-cut with cleared-denominator integer
// capacities, lowering lambda to the ratio of any strictly improving set.
// Returns the same K (and in fact the same X) as the brute solver.
MagnificationCertificate magnification_flow(const GSet& a, const GSet& b,
                                            const MagnificationOptions& opts = {});

struct CertCheck {
  bool ok = false;
  std::string detail;
  std::optional<GSet> witness;  // a subset Z of X with r(Z) < K, when found

  explicit operator bool() const { return ok; }
};

// Checks |XB| = K|X| exactly; with `exhaustive` set and |X| within the
// cap, also checks K <= r(Z) for every nonempty Z of X (the hypothesis
// the middle-set proposition needs).
CertCheck verify_certificate(const MagnificationCertificate& cert, const GSet& a,
                             const GSet& b, bool exhaustive,
                             const MagnificationOptions& opts = {});

}  // namespace setcalc

#endif
