#ifndef SETCALC_GROUP_HPP
#define SETCALC_GROUP_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "setcalc/errors.hpp"

namespace setcalc {

enum class GroupKind {
  cyclic,            // Z_n, residues mod n
  product_cyclic,    // Z_{m1} x ... x Z_{mk}
  dihedral,          // D_n, n >= 3, pairs (rotation, reflection bit)
  symmetric,         // S_n, n in 1..8, one-line permutations (1-based)
  general_linear_2,  // GL_2(F_p), p prime <= 31, row-major entries mod p
  free_group,        // free on k generators, words capped at length L
};

// Value descriptor of a concrete group. Parsed from strings such as
// "zn:30", "zprod:2,3,5", "dihedral:8", "sym:5", "gl2:7", "free:2:12".
struct GroupSpec {
  GroupKind kind = GroupKind::cyclic;
  std::vector<std::int64_t> moduli;  // cyclic: {n}; product: the moduli
  int n = 0;                         // dihedral/symmetric degree
  int p = 0;                         // gl2 prime
  int rank = 0;                      // free generators
  int max_word_len = 0;              // free word cap L

  static GroupSpec cyclic(std::int64_t n);
  static GroupSpec product(std::vector<std::int64_t> moduli);
  static GroupSpec dihedral(int n);
  static GroupSpec symmetric(int n);
  static GroupSpec gl2(int p);
  static GroupSpec free_group(int rank, int max_word_len);
  static GroupSpec parse(std::string_view text);

  void validate() const;
  bool is_abelian() const;
  // Exact order for finite variants; nullopt for the free (unbounded) one.
  std::optional<std::uint64_t> order() const;
  std::string str() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

// Canonically encoded group element. The encoding is variant-specific:
//   cyclic          [r]
//   product_cyclic  [r1..rk]
//   dihedral        [rot, refl]
//   symmetric       one-line images, 1-based
//   gl2             [a,b,c,d] row-major
//   free            freely reduced word of signed generator indices
// Equal elements have identical encodings; the shortlex order below is a
// strict total order used for set canonicalization and tie-breaking.
struct Element {
  std::vector<std::int64_t> data;

  friend bool operator==(const Element&, const Element&) = default;
  friend std::strong_ordering operator<=>(const Element& a, const Element& b) {
    if (a.data.size() != b.data.size())
      return a.data.size() <=> b.data.size();
    for (size_t i = 0; i < a.data.size(); ++i)
      if (a.data[i] != b.data[i]) return a.data[i] <=> b.data[i];
    return std::strong_ordering::equal;
  }
};

struct ElementHash {
  size_t operator()(const Element& e) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (std::int64_t v : e.data) {
      h ^= static_cast<std::uint64_t>(v);
      h *= 0x100000001b3ull;
    }
    h ^= e.data.size();
    return static_cast<size_t>(h);
  }
};

// Group sets are indexed by enumeration rank whenever the order fits a
// dense bit-vector; groups at most kCayleyCap additionally intern the full
// multiplication table so set products become plain array lookups.
inline constexpr std::uint64_t kDenseCap = 1u << 16;
inline constexpr std::uint64_t kCayleyCap = 2048;

class Group;
using GroupPtr = std::shared_ptr<const Group>;

class Group : public std::enable_shared_from_this<Group> {
 public:
  static GroupPtr make(const GroupSpec& spec);

  const GroupSpec& spec() const { return spec_; }
  bool is_abelian() const { return spec_.is_abelian(); }
  bool finite() const { return spec_.kind != GroupKind::free_group; }
  std::optional<std::uint64_t> order() const { return spec_.order(); }

  Element identity() const;
  Element mul(const Element& a, const Element& b) const;
  Element inv(const Element& a) const;
  bool valid(const Element& a) const;
  void require_valid(const Element& a) const;

  // Rank <-> element bijection in canonical (shortlex) order. Finite only.
  std::uint64_t rank(const Element& a) const;
  Element unrank(std::uint64_t r) const;
  std::vector<Element> enumerate() const;

  bool dense() const { return finite() && *order() <= kDenseCap; }
  bool has_cayley() const { return finite() && *order() <= kCayleyCap; }
  // Rank-level operations; valid when has_cayley().
  std::uint32_t mul_rank(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv_rank(std::uint32_t a) const;

  Element parse_element(std::string_view text) const;
  std::string format_element(const Element& e) const;

 private:
  explicit Group(GroupSpec spec) : spec_(std::move(spec)) {}

  void build_tables() const;   // Cayley + inverse tables (lazily, once)
  void build_gl2_index() const;

  GroupSpec spec_;

  mutable std::once_flag tables_once_;
  mutable std::vector<std::uint32_t> cayley_;   // order x order
  mutable std::vector<std::uint32_t> inv_table_;

  mutable std::once_flag gl2_once_;
  mutable std::vector<std::uint32_t> gl2_codes_;  // rank -> packed entries
  mutable std::unordered_map<std::uint32_t, std::uint32_t> gl2_rank_;
};

// Convenience: make(parse(text)).
GroupPtr make_group(std::string_view text);

}  // namespace setcalc

#endif
