#include "setcalc/gset.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace setcalc {

namespace {

size_t word_count(std::uint64_t bits) { return static_cast<size_t>((bits + 63) / 64); }

std::string_view trim_view(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

void require_same_group(const GSet& a, const GSet& b) {
  if (!a.group() || !b.group() || !(a.group()->spec() == b.group()->spec()))
    fail(errc::unsupported, "sets belong to different groups");
}

void require_nonempty(const GSet& a, const char* what) {
  if (a.is_empty()) fail(errc::empty_set, std::string(what) + " must be nonempty");
}

SetBuilder::SetBuilder(GroupPtr g, std::uint64_t size_cap)
    : group_(std::move(g)), size_cap_(size_cap), dense_(group_->dense()) {
  if (dense_) bits_.assign(word_count(*group_->order()), 0);
}

void SetBuilder::insert(const Element& e) {
  if (dense_) {
    insert_rank(group_->rank(e));
    return;
  }
  elems_.push_back(e);
  if (elems_.size() > size_cap_ * 2 + 64) {
    // Deduplicate periodically so transient duplicates cannot blow memory.
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    if (elems_.size() > size_cap_)
      fail(errc::size_overflow, "set exceeds size cap " + std::to_string(size_cap_));
  }
}

void SetBuilder::insert_rank(std::uint64_t r) {
  std::uint64_t& w = bits_[static_cast<size_t>(r >> 6)];
  std::uint64_t mask = 1ull << (r & 63);
  if (!(w & mask)) {
    w |= mask;
    ++count_;
    if (count_ > size_cap_)
      fail(errc::size_overflow, "set exceeds size cap " + std::to_string(size_cap_));
  }
}

GSet SetBuilder::take() {
  GSet s;
  s.group_ = group_;
  s.dense_ = dense_;
  if (dense_) {
    s.bits_ = std::move(bits_);
    s.size_ = count_;
  } else {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    if (elems_.size() > size_cap_)
      fail(errc::size_overflow, "set exceeds size cap " + std::to_string(size_cap_));
    s.elems_ = std::move(elems_);
    s.size_ = s.elems_.size();
  }
  return s;
}

GSet GSet::empty(GroupPtr g) { return SetBuilder(std::move(g)).take(); }

GSet GSet::of(GroupPtr g, std::vector<Element> elems) {
  SetBuilder b(g);
  for (auto& e : elems) {
    g->require_valid(e);
    b.insert(e);
  }
  return b.take();
}

GSet GSet::single(GroupPtr g, const Element& e) {
  g->require_valid(e);
  SetBuilder b(std::move(g));
  b.insert(e);
  return b.take();
}

GSet GSet::universe(GroupPtr g) {
  if (!g->finite()) fail(errc::not_enumerable, "no universe for an infinite group");
  std::uint64_t o = *g->order();
  SetBuilder b(g, std::max(kDefaultSizeCap, o));
  if (g->dense()) {
    for (std::uint64_t r = 0; r < o; ++r) b.insert_rank(r);
  } else {
    for (auto& e : g->enumerate()) b.insert(e);
  }
  return b.take();
}

GSet GSet::closure(GroupPtr g, const std::vector<Element>& gens, std::uint64_t size_cap) {
  // BFS under multiplication by the generators and their inverses.
  std::vector<Element> frontier{g->identity()};
  std::unordered_set<Element, ElementHash> seen{g->identity()};
  std::vector<Element> step = gens;
  for (const auto& e : gens) step.push_back(g->inv(e));
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (const auto& cur : frontier) {
      for (const auto& s : step) {
        Element prod = g->mul(cur, s);
        if (seen.insert(prod).second) {
          if (seen.size() > size_cap)
            fail(errc::size_overflow, "subgroup closure exceeds size cap");
          next.push_back(std::move(prod));
        }
      }
    }
    frontier = std::move(next);
  }
  return of(std::move(g), std::vector<Element>(seen.begin(), seen.end()));
}

bool GSet::contains(const Element& e) const {
  if (dense_) return contains_rank(group_->rank(e));
  return std::binary_search(elems_.begin(), elems_.end(), e);
}

bool GSet::contains_rank(std::uint64_t r) const {
  return (bits_[static_cast<size_t>(r >> 6)] >> (r & 63)) & 1;
}

std::vector<Element> GSet::elements() const {
  if (!dense_) return elems_;
  std::vector<Element> out;
  out.reserve(static_cast<size_t>(size_));
  for (std::uint32_t r : ranks()) out.push_back(group_->unrank(r));
  return out;
}

std::vector<std::uint32_t> GSet::ranks() const {
  std::vector<std::uint32_t> out;
  out.reserve(static_cast<size_t>(size_));
  for (size_t w = 0; w < bits_.size(); ++w) {
    std::uint64_t word = bits_[w];
    while (word) {
      unsigned bit = static_cast<unsigned>(std::countr_zero(word));
      out.push_back(static_cast<std::uint32_t>(w * 64 + bit));
      word &= word - 1;
    }
  }
  return out;
}

Element GSet::first() const {
  require_nonempty(*this, "set");
  if (!dense_) return elems_.front();
  return group_->unrank(ranks().front());
}

bool GSet::subset_of(const GSet& other) const { return count_outside(other) == 0; }

std::uint64_t GSet::count_outside(const GSet& other) const {
  require_same_group(*this, other);
  std::uint64_t missing = 0;
  if (dense_) {
    for (size_t w = 0; w < bits_.size(); ++w)
      missing += static_cast<std::uint64_t>(std::popcount(bits_[w] & ~other.bits_[w]));
  } else {
    for (const auto& e : elems_)
      if (!other.contains(e)) ++missing;
  }
  return missing;
}

bool operator==(const GSet& a, const GSet& b) {
  if (!a.group_ || !b.group_) return a.size_ == 0 && b.size_ == 0;
  if (!(a.group_->spec() == b.group_->spec()) || a.size_ != b.size_) return false;
  if (a.dense_) return a.bits_ == b.bits_;
  return a.elems_ == b.elems_;
}

GSet product(const GSet& a, const GSet& b, std::uint64_t size_cap) {
  require_same_group(a, b);
  const GroupPtr& g = a.group();
  SetBuilder out(g, size_cap);
  if (a.dense()) {
    auto ra = a.ranks();
    auto rb = b.ranks();
    if (g->has_cayley()) {
      for (std::uint32_t x : ra)
        for (std::uint32_t y : rb) out.insert_rank(g->mul_rank(x, y));
    } else {
      std::vector<Element> eb;
      eb.reserve(rb.size());
      for (std::uint32_t y : rb) eb.push_back(g->unrank(y));
      for (std::uint32_t x : ra) {
        Element ex = g->unrank(x);
        for (const auto& ey : eb) out.insert_rank(g->rank(g->mul(ex, ey)));
      }
    }
  } else {
    auto ea = a.elements();
    auto eb = b.elements();
    for (const auto& x : ea)
      for (const auto& y : eb) out.insert(g->mul(x, y));
  }
  return out.take();
}

GSet inverse_set(const GSet& a) {
  const GroupPtr& g = a.group();
  SetBuilder out(g, std::max<std::uint64_t>(a.size(), kDefaultSizeCap));
  if (a.dense() && g->has_cayley()) {
    for (std::uint32_t r : a.ranks()) out.insert_rank(g->inv_rank(r));
  } else {
    for (const auto& e : a.elements()) out.insert(g->inv(e));
  }
  return out.take();
}

GSet power(const GSet& b, int h, std::uint64_t size_cap) {
  if (h < 1) fail(errc::unsupported, "power needs h >= 1");
  GSet acc = b;
  for (int i = 1; i < h; ++i) acc = product(acc, b, size_cap);
  return acc;
}

GSet signed_sum(const GSet& b, int k, int l, std::uint64_t size_cap) {
  if (!b.group()->is_abelian())
    fail(errc::unsupported, "signed sums require an abelian group");
  if (k < 0 || l < 0 || k + l < 1) fail(errc::unsupported, "signed_sum needs k+l >= 1");
  GSet acc = GSet::single(b.group(), b.group()->identity());
  for (int i = 0; i < k; ++i) acc = product(acc, b, size_cap);
  if (l > 0) {
    GSet neg = inverse_set(b);
    for (int i = 0; i < l; ++i) acc = product(acc, neg, size_cap);
  }
  return acc;
}

GSet mixed_product(const GSet& b, const std::vector<int>& signs, std::uint64_t size_cap) {
  GSet binv = inverse_set(b);
  GSet acc = b;
  for (int s : signs) {
    if (s != 1 && s != -1) fail(errc::unsupported, "signs must be +1 or -1");
    acc = product(acc, s == 1 ? b : binv, size_cap);
  }
  return product(acc, binv, size_cap);
}

Rational growth_ratio(const GSet& a, const GSet& b, std::uint64_t size_cap) {
  require_nonempty(a, "ratio numerator set");
  require_nonempty(b, "ratio multiplier set");
  GSet ab = product(a, b, size_cap);
  return Rational(BigInt(ab.size()), BigInt(a.size()));
}

GSet set_union(const GSet& a, const GSet& b) {
  require_same_group(a, b);
  SetBuilder out(a.group(), std::max<std::uint64_t>(kDefaultSizeCap, a.size() + b.size()));
  if (a.dense()) {
    for (std::uint32_t r : a.ranks()) out.insert_rank(r);
    for (std::uint32_t r : b.ranks()) out.insert_rank(r);
  } else {
    for (const auto& e : a.elements()) out.insert(e);
    for (const auto& e : b.elements()) out.insert(e);
  }
  return out.take();
}

GSet intersect(const GSet& a, const GSet& b) {
  require_same_group(a, b);
  SetBuilder out(a.group());
  if (a.dense()) {
    for (std::uint32_t r : a.ranks())
      if (b.contains_rank(r)) out.insert_rank(r);
  } else {
    for (const auto& e : a.elements())
      if (b.contains(e)) out.insert(e);
  }
  return out.take();
}

bool disjoint(const GSet& a, const GSet& b) {
  require_same_group(a, b);
  if (a.dense()) {
    const auto& wa = a.words();
    const auto& wb = b.words();
    for (size_t i = 0; i < wa.size(); ++i)
      if (wa[i] & wb[i]) return false;
    return true;
  }
  for (const auto& e : a.elements())
    if (b.contains(e)) return false;
  return true;
}

GSet with_element(const GSet& a, const Element& e) {
  a.group()->require_valid(e);
  SetBuilder out(a.group(), std::max<std::uint64_t>(kDefaultSizeCap, a.size() + 1));
  if (a.dense()) {
    for (std::uint32_t r : a.ranks()) out.insert_rank(r);
  } else {
    for (const auto& x : a.elements()) out.insert(x);
  }
  out.insert(e);
  return out.take();
}

GSet parse_set(const GroupPtr& g, std::string_view text) {
  text = trim_view(text);
  if (text == "universe") return GSet::universe(g);
  if (text.starts_with("subgroup:")) {
    std::vector<Element> gens;
    std::string_view rest = text.substr(9);
    size_t start = 0;
    while (start <= rest.size()) {
      size_t pos = rest.find(';', start);
      std::string_view item =
          pos == std::string_view::npos ? rest.substr(start) : rest.substr(start, pos - start);
      item = trim_view(item);
      if (!item.empty()) gens.push_back(g->parse_element(item));
      if (pos == std::string_view::npos) break;
      start = pos + 1;
    }
    if (gens.empty()) fail(errc::parse, "subgroup shorthand needs generators");
    return GSet::closure(g, gens);
  }
  if (text.size() < 2 || text.front() != '{' || text.back() != '}')
    fail(errc::parse, "set literal must be {..}, subgroup:<gens> or universe");
  std::string_view body = text.substr(1, text.size() - 2);
  // Split on commas at depth zero; element literals may contain (), [].
  std::vector<Element> elems;
  int depth = 0;
  size_t start = 0;
  auto flush = [&](size_t end) {
    std::string_view item = trim_view(body.substr(start, end - start));
    if (!item.empty()) elems.push_back(g->parse_element(item));
  };
  for (size_t i = 0; i < body.size(); ++i) {
    char c = body[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == ',' && depth == 0) {
      flush(i);
      start = i + 1;
    }
  }
  flush(body.size());
  return GSet::of(g, std::move(elems));
}

std::string format_set(const GSet& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& e : s.elements()) {
    if (!first) out += ",";
    first = false;
    out += s.group()->format_element(e);
  }
  out += "}";
  return out;
}

}  // namespace setcalc
