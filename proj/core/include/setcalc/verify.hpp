#ifndef SETCALC_VERIFY_HPP
#define SETCALC_VERIFY_HPP

#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "setcalc/covering.hpp"
#include "setcalc/gset.hpp"
#include "setcalc/magnification.hpp"
#include "setcalc/rational.hpp"

namespace setcalc {

enum class TheoremId {
  plunnecke_h,
  ruzsa_kl,
  stronger_middle,
  middle,
  b_inv_chain,
  triple,
  tao_power,
  alternating,
  s_chain,
  sbb,
  sb_h,
  triangle,
  triangle_abelian,
  gallery_counterexample,
  gallery_sharpness,
};

const char* theorem_name(TheoremId id) noexcept;
TheoremId parse_theorem(std::string_view name);

enum class ReportStatus { pass, fail, hypothesis_not_met };
const char* status_name(ReportStatus s) noexcept;

enum class StepCmp { le, eq, ge };

// One verified (in)equality instance: lhs <cmp> rhs, recomputable from
// the report inputs. lhs is always an exact integer (a cardinality or a
// cross-multiplied product of two), rhs an exact rational.
struct Step {
  std::string label;
  std::int64_t lhs = 0;
  Rational rhs;
  StepCmp cmp = StepCmp::le;
  bool holds = false;
};

// Full audit record for one theorem instance. pass is true iff the final
// bound and every ledger step hold exactly.
struct TheoremReport {
  TheoremId id = TheoremId::triangle;
  GroupSpec group;
  std::vector<std::pair<std::string, Rational>> hypothesis;  // alpha, beta, gamma
  std::optional<int> h, k, l;
  std::vector<int> signs;
  Rational bound_coeff;        // coefficient multiplying `reference`
  std::int64_t reference = 0;  // |B|, |S|, |X|, ... as the theorem states
  std::int64_t actual = 0;
  Rational slack;  // bound_coeff*reference/actual (inverted for lower bounds)
  std::vector<Step> steps;
  ReportStatus status = ReportStatus::fail;
  bool pass = false;
  std::vector<std::string> notes;
};

struct VerifyOptions {
  std::uint64_t size_cap = kDefaultSizeCap;
  MagnificationOptions mag;
  // h/k/l larger than these caps need allow_large_params; iterated
  // products blow up fast outside small finite groups.
  int h_cap = 6;
  int k_cap = 3;
  int l_cap = 3;
  bool allow_large_params = false;
  // The minimizer hypothesis (K <= r(Z) for all Z inside the pivot set)
  // is re-checked exhaustively unless the caller certifies it, e.g.
  // because the set came straight out of magnification.
  bool hypothesis_certified = false;
  // Exploratory overrides. Bounds are monotone in the constants, so the
  // tight values give the strongest check; a larger user constant is
  // accepted as-is, a smaller one is a hypothesis error.
  std::optional<Rational> alpha_override;
  std::optional<Rational> beta_override;
  std::optional<Rational> gamma_override;
};

// The X_i decomposition of CX: X_1 = X and
// X_i = {x in X : c_i x not in {c_1..c_{i-1}}X}, in canonical C order.
struct Decomposition {
  std::vector<Element> c_order;
  std::vector<GSet> parts;
};

Decomposition decompose_cx(const GSet& c, const GSet& x,
                           std::uint64_t size_cap = kDefaultSizeCap);

// |CXB| <= K|CX| for the minimal-growth set X with K = |XB|/|X|.
TheoremReport verify_stronger_middle(const GSet& x, const GSet& b, const GSet& c,
                                     const VerifyOptions& opts = {});
// Same bound with alpha = |AB|/|A| after choosing X inside A.
TheoremReport verify_middle(const GSet& a, const GSet& b, const GSet& c,
                            const VerifyOptions& opts = {});
// |X+hB| <= alpha^h|X| for one X and every h = 1..h_max (abelian).
std::vector<TheoremReport> verify_plunnecke(const GSet& a, const GSet& b, int h_max,
                                            const VerifyOptions& opts = {});
// |kB-lB| <= alpha^{k+l}|A| (abelian, k+l > 1).
TheoremReport verify_ruzsa_kl(const GSet& a, const GSet& b, int k, int l,
                              const VerifyOptions& opts = {});
// |X||YZ| <= |YX^{-1}||XZ| in any group.
TheoremReport verify_triangle(const GSet& x, const GSet& y, const GSet& z,
                              const VerifyOptions& opts = {});
// |X||Y-Z| <= |X+Y||X+Z| (abelian form).
TheoremReport verify_triangle_abelian(const GSet& x, const GSet& y, const GSet& z,
                                      const VerifyOptions& opts = {});
// |BA^{-1}AB^{-1}| <= alpha^6|B| given |BB| <= alpha|B|, |BAB| <= alpha^2|B|.
TheoremReport verify_b_inv_chain(const GSet& a, const GSet& b,
                                 const VerifyOptions& opts = {});
// |BBB| <= alpha^7 beta |B|.
TheoremReport verify_triple(const GSet& b, const VerifyOptions& opts = {});
// |B^h| <= alpha^{8h-17} beta^{h-2} |B| for h > 2.
TheoremReport verify_tao_power(const GSet& b, int h, const VerifyOptions& opts = {});
// |B B^{e1}...B^{eh} B^{-1}| <= (alpha^7 beta)^{2h} |B|.
TheoremReport verify_alternating(const GSet& b, const std::vector<int>& signs,
                                 const VerifyOptions& opts = {});
// |SS^{-1}SS^{-1}| <= alpha^6 (|S|/|B|)^3 |S| for minimal-growth S.
TheoremReport verify_s_chain(const GSet& s, const GSet& b,
                             const VerifyOptions& opts = {});
// |SBB| <= alpha^7 beta gamma^3 |S|.
TheoremReport verify_sbb(const GSet& a, const GSet& b, const VerifyOptions& opts = {});
// |SB^h| <= alpha^{8h-9} beta^{h-1} gamma^{4h-5} |S| for h > 1.
TheoremReport verify_sb_h(const GSet& a, const GSet& b, int h,
                          const VerifyOptions& opts = {});

// The subgroup-plus-swap construction in S_6: |AA| <= 3|A| while
// |AAA| >= (|A|-1)^2.
TheoremReport gallery_counterexample(const VerifyOptions& opts = {});
// Subgroup + generic points: |A+hB| = C(|B|+h-1, h)|A| while the
// minimal-growth bound gives alpha^h|A|; one report per instance and h.
std::vector<TheoremReport> gallery_sharpness(int h_max, const VerifyOptions& opts = {});

// Tight hypothesis constants.
Rational tight_alpha(const GSet& a, const GSet& b, std::uint64_t size_cap = kDefaultSizeCap);
// max over b in B of |AbB|/|A|.
Rational tight_beta(const GSet& a, const GSet& b, std::uint64_t size_cap = kDefaultSizeCap);
Rational tight_gamma(const GSet& a, const GSet& b);

// Closed-form bound coefficients, used both by the verifiers and by the
// exponent cross-check tests.
Rational tao_power_bound_coeff(const Rational& alpha, const Rational& beta, int h);
Rational sb_h_bound_coeff(const Rational& alpha, const Rational& beta,
                          const Rational& gamma, int h);

namespace testing {
// Fault injection for the mutation-sensitivity suite: offsets every
// measured product cardinality that verifiers feed into their ledgers.
// Hypothesis constants are computed through the ordinary set ops and
// stay exact, so a nonzero offset must surface as violations.
extern std::atomic<std::int64_t> product_card_offset;
}  // namespace testing

}  // namespace setcalc

#endif
