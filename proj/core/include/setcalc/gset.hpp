#ifndef SETCALC_GSET_HPP
#define SETCALC_GSET_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "setcalc/group.hpp"
#include "setcalc/rational.hpp"

namespace setcalc {

// Any single product may not exceed this many elements unless the caller
// raises the cap; iterated products in free groups grow geometrically.
inline constexpr std::uint64_t kDefaultSizeCap = 1ull << 22;

// Finite set of elements of one group, canonically ordered and duplicate
// free. Groups of order <= kDenseCap store a rank-indexed bit-vector;
// everything else keeps a sorted element sequence. Immutable after
// construction.
class GSet {
 public:
  GSet() = default;

  static GSet empty(GroupPtr g);
  static GSet of(GroupPtr g, std::vector<Element> elems);
  static GSet single(GroupPtr g, const Element& e);
  static GSet universe(GroupPtr g);
  // Subgroup generated by `gens` (closure under product and inverse).
  static GSet closure(GroupPtr g, const std::vector<Element>& gens,
                      std::uint64_t size_cap = kDefaultSizeCap);

  const GroupPtr& group() const { return group_; }
  bool dense() const { return dense_; }
  std::uint64_t size() const { return size_; }
  bool is_empty() const { return size_ == 0; }

  bool contains(const Element& e) const;
  bool contains_rank(std::uint64_t r) const;
  // Elements in canonical order.
  std::vector<Element> elements() const;
  // Ranks of members in increasing order (dense groups only).
  std::vector<std::uint32_t> ranks() const;
  Element first() const;

  bool subset_of(const GSet& other) const;
  // Members of *this that are missing from `other`.
  std::uint64_t count_outside(const GSet& other) const;

  friend bool operator==(const GSet& a, const GSet& b);

  // Internal-ish accessors used by the solvers.
  const std::vector<std::uint64_t>& words() const { return bits_; }

 private:
  friend class SetBuilder;

  GroupPtr group_;
  bool dense_ = false;
  std::uint64_t size_ = 0;
  std::vector<std::uint64_t> bits_;  // dense: |G| bits
  std::vector<Element> elems_;       // sparse: sorted unique
};

// Accumulates elements, then freezes into a canonical GSet. Enforces the
// size cap as elements are inserted.
class SetBuilder {
 public:
  explicit SetBuilder(GroupPtr g, std::uint64_t size_cap = kDefaultSizeCap);
  void insert(const Element& e);
  void insert_rank(std::uint64_t r);
  GSet take();

 private:
  GroupPtr group_;
  std::uint64_t size_cap_;
  bool dense_;
  std::uint64_t count_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<Element> elems_;  // unsorted until take()
};

// {a*b : a in A, b in B}. Same group required.
GSet product(const GSet& a, const GSet& b, std::uint64_t size_cap = kDefaultSizeCap);
// {a^{-1} : a in A}.
GSet inverse_set(const GSet& a);
// h-fold product B...B, h >= 1, left-associated.
GSet power(const GSet& b, int h, std::uint64_t size_cap = kDefaultSizeCap);
// k copies of B plus l copies of -B (abelian only), k+l >= 1.
GSet signed_sum(const GSet& b, int k, int l, std::uint64_t size_cap = kDefaultSizeCap);
// B * B^{e1} * ... * B^{eh} * B^{-1} with signs e in {+1,-1}.
GSet mixed_product(const GSet& b, const std::vector<int>& signs,
                   std::uint64_t size_cap = kDefaultSizeCap);
// Exact |A*B| / |A|; A nonempty.
Rational growth_ratio(const GSet& a, const GSet& b, std::uint64_t size_cap = kDefaultSizeCap);

GSet set_union(const GSet& a, const GSet& b);
GSet intersect(const GSet& a, const GSet& b);
bool disjoint(const GSet& a, const GSet& b);
// A with one element adjoined.
GSet with_element(const GSet& a, const Element& e);

// Set literals: "{0,1,2}", "{(0,1),(1,2)}", "subgroup:<gen>;<gen>;...",
// "universe".
GSet parse_set(const GroupPtr& g, std::string_view text);
std::string format_set(const GSet& s);

void require_same_group(const GSet& a, const GSet& b);
void require_nonempty(const GSet& a, const char* what);

}  // namespace setcalc

#endif
