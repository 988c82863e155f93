#include "setcalc/group.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <sstream>

namespace setcalc {

namespace {

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Factorials up to 8! for symmetric-group ranking.
constexpr std::array<std::uint64_t, 9> kFact = {1, 1, 2, 6, 24, 120, 720, 5040, 40320};

std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  auto* begin = s.data();
  auto* end = s.data() + s.size();
  auto res = std::from_chars(begin, end, v);
  if (res.ec != std::errc{} || res.ptr != end)
    fail(errc::parse, "bad integer literal: '" + std::string(s) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  size_t start = 0;
  while (true) {
    size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::parse: return "parse";
    case errc::invalid_spec: return "invalid_spec";
    case errc::length_overflow: return "length_overflow";
    case errc::not_enumerable: return "not_enumerable";
    case errc::unsupported: return "unsupported";
    case errc::size_overflow: return "size_overflow";
    case errc::empty_set: return "empty_set";
    case errc::capacity: return "capacity";
    case errc::hypothesis: return "hypothesis";
    case errc::config: return "config";
  }
  return "unknown";
}

GroupSpec GroupSpec::cyclic(std::int64_t n) {
  GroupSpec s;
  s.kind = GroupKind::cyclic;
  s.moduli = {n};
  s.validate();
  return s;
}

GroupSpec GroupSpec::product(std::vector<std::int64_t> moduli) {
  GroupSpec s;
  s.kind = GroupKind::product_cyclic;
  s.moduli = std::move(moduli);
  s.validate();
  return s;
}

GroupSpec GroupSpec::dihedral(int n) {
  GroupSpec s;
  s.kind = GroupKind::dihedral;
  s.n = n;
  s.validate();
  return s;
}

GroupSpec GroupSpec::symmetric(int n) {
  GroupSpec s;
  s.kind = GroupKind::symmetric;
  s.n = n;
  s.validate();
  return s;
}

GroupSpec GroupSpec::gl2(int p) {
  GroupSpec s;
  s.kind = GroupKind::general_linear_2;
  s.p = p;
  s.validate();
  return s;
}

GroupSpec GroupSpec::free_group(int rank, int max_word_len) {
  GroupSpec s;
  s.kind = GroupKind::free_group;
  s.rank = rank;
  s.max_word_len = max_word_len;
  s.validate();
  return s;
}

void GroupSpec::validate() const {
  switch (kind) {
    case GroupKind::cyclic:
      if (moduli.size() != 1 || moduli[0] < 1)
        fail(errc::invalid_spec, "cyclic group needs one positive modulus");
      break;
    case GroupKind::product_cyclic: {
      if (moduli.empty()) fail(errc::invalid_spec, "product of cyclics needs moduli");
      for (auto m : moduli)
        if (m < 1) fail(errc::invalid_spec, "moduli must be positive");
      break;
    }
    case GroupKind::dihedral:
      if (n < 3) fail(errc::invalid_spec, "dihedral degree must be >= 3");
      break;
    case GroupKind::symmetric:
      if (n < 1 || n > 8) fail(errc::invalid_spec, "symmetric degree must be in 1..8");
      break;
    case GroupKind::general_linear_2:
      if (!is_prime(p) || p > 31)
        fail(errc::invalid_spec, "gl2 needs a prime p <= 31");
      break;
    case GroupKind::free_group:
      if (rank < 1) fail(errc::invalid_spec, "free group rank must be >= 1");
      if (max_word_len < 1) fail(errc::invalid_spec, "free group word cap must be >= 1");
      break;
  }
}

bool GroupSpec::is_abelian() const {
  switch (kind) {
    case GroupKind::cyclic:
    case GroupKind::product_cyclic:
      return true;
    case GroupKind::dihedral:
      return false;  // n >= 3 enforced
    case GroupKind::symmetric:
      return n <= 2;
    case GroupKind::general_linear_2:
      return false;
    case GroupKind::free_group:
      return rank == 1;
  }
  return false;
}

std::optional<std::uint64_t> GroupSpec::order() const {
  switch (kind) {
    case GroupKind::cyclic:
      return static_cast<std::uint64_t>(moduli[0]);
    case GroupKind::product_cyclic: {
      std::uint64_t o = 1;
      for (auto m : moduli) o *= static_cast<std::uint64_t>(m);
      return o;
    }
    case GroupKind::dihedral:
      return 2ull * static_cast<std::uint64_t>(n);
    case GroupKind::symmetric:
      return kFact[static_cast<size_t>(n)];
    case GroupKind::general_linear_2: {
      std::uint64_t q = static_cast<std::uint64_t>(p) * static_cast<std::uint64_t>(p);
      return (q - 1) * (q - static_cast<std::uint64_t>(p));
    }
    case GroupKind::free_group:
      return std::nullopt;
  }
  return std::nullopt;
}

std::string GroupSpec::str() const {
  std::ostringstream os;
  switch (kind) {
    case GroupKind::cyclic:
      os << "zn:" << moduli[0];
      break;
    case GroupKind::product_cyclic:
      os << "zprod:";
      for (size_t i = 0; i < moduli.size(); ++i) {
        if (i) os << ',';
        os << moduli[i];
      }
      break;
    case GroupKind::dihedral:
      os << "dihedral:" << n;
      break;
    case GroupKind::symmetric:
      os << "sym:" << n;
      break;
    case GroupKind::general_linear_2:
      os << "gl2:" << p;
      break;
    case GroupKind::free_group:
      os << "free:" << rank << ':' << max_word_len;
      break;
  }
  return os.str();
}

GroupSpec GroupSpec::parse(std::string_view text) {
  text = trim(text);
  size_t colon = text.find(':');
  if (colon == std::string_view::npos)
    fail(errc::parse, "group spec needs '<family>:<params>': '" + std::string(text) + "'");
  std::string_view head = text.substr(0, colon);
  std::string_view rest = text.substr(colon + 1);
  if (head == "zn") return cyclic(parse_int(rest));
  if (head == "zprod") {
    std::vector<std::int64_t> mods;
    for (auto part : split(rest, ',')) mods.push_back(parse_int(trim(part)));
    return product(std::move(mods));
  }
  if (head == "dihedral") return dihedral(static_cast<int>(parse_int(rest)));
  if (head == "sym") return symmetric(static_cast<int>(parse_int(rest)));
  if (head == "gl2") return gl2(static_cast<int>(parse_int(rest)));
  if (head == "free") {
    auto parts = split(rest, ':');
    if (parts.size() != 2) fail(errc::parse, "free group spec is free:<rank>:<maxlen>");
    return free_group(static_cast<int>(parse_int(parts[0])),
                      static_cast<int>(parse_int(parts[1])));
  }
  fail(errc::parse, "unknown group family: '" + std::string(head) + "'");
}

GroupPtr Group::make(const GroupSpec& spec) {
  spec.validate();
  return GroupPtr(new Group(spec));
}

GroupPtr make_group(std::string_view text) { return Group::make(GroupSpec::parse(text)); }

Element Group::identity() const {
  switch (spec_.kind) {
    case GroupKind::cyclic:
      return Element{{0}};
    case GroupKind::product_cyclic:
      return Element{std::vector<std::int64_t>(spec_.moduli.size(), 0)};
    case GroupKind::dihedral:
      return Element{{0, 0}};
    case GroupKind::symmetric: {
      std::vector<std::int64_t> d(static_cast<size_t>(spec_.n));
      for (int i = 0; i < spec_.n; ++i) d[static_cast<size_t>(i)] = i + 1;
      return Element{std::move(d)};
    }
    case GroupKind::general_linear_2:
      return Element{{1, 0, 0, 1}};
    case GroupKind::free_group:
      return Element{{}};
  }
  fail(errc::invalid_spec, "bad group kind");
}

Element Group::mul(const Element& a, const Element& b) const {
  switch (spec_.kind) {
    case GroupKind::cyclic:
      return Element{{mod_floor(a.data[0] + b.data[0], spec_.moduli[0])}};
    case GroupKind::product_cyclic: {
      std::vector<std::int64_t> d(spec_.moduli.size());
      for (size_t i = 0; i < d.size(); ++i)
        d[i] = mod_floor(a.data[i] + b.data[i], spec_.moduli[i]);
      return Element{std::move(d)};
    }
    case GroupKind::dihedral: {
      std::int64_t n = spec_.n;
      std::int64_t rot = mod_floor(a.data[0] + (a.data[1] ? -b.data[0] : b.data[0]), n);
      return Element{{rot, a.data[1] ^ b.data[1]}};
    }
    case GroupKind::symmetric: {
      // Convention: (a*b)(i) = a(b(i)) -- the right factor acts first.
      std::vector<std::int64_t> d(a.data.size());
      for (size_t i = 0; i < d.size(); ++i)
        d[i] = a.data[static_cast<size_t>(b.data[i] - 1)];
      return Element{std::move(d)};
    }
    case GroupKind::general_linear_2: {
      std::int64_t p = spec_.p;
      const auto& x = a.data;
      const auto& y = b.data;
      return Element{{(x[0] * y[0] + x[1] * y[2]) % p, (x[0] * y[1] + x[1] * y[3]) % p,
                      (x[2] * y[0] + x[3] * y[2]) % p, (x[2] * y[1] + x[3] * y[3]) % p}};
    }
    case GroupKind::free_group: {
      std::vector<std::int64_t> d = a.data;
      for (std::int64_t letter : b.data) {
        if (!d.empty() && d.back() == -letter)
          d.pop_back();
        else
          d.push_back(letter);
      }
      if (d.size() > static_cast<size_t>(spec_.max_word_len))
        fail(errc::length_overflow,
             "free-group product exceeds word cap L=" + std::to_string(spec_.max_word_len));
      return Element{std::move(d)};
    }
  }
  fail(errc::invalid_spec, "bad group kind");
}

Element Group::inv(const Element& a) const {
  switch (spec_.kind) {
    case GroupKind::cyclic:
      return Element{{mod_floor(-a.data[0], spec_.moduli[0])}};
    case GroupKind::product_cyclic: {
      std::vector<std::int64_t> d(spec_.moduli.size());
      for (size_t i = 0; i < d.size(); ++i) d[i] = mod_floor(-a.data[i], spec_.moduli[i]);
      return Element{std::move(d)};
    }
    case GroupKind::dihedral:
      if (a.data[1]) return a;  // reflections are involutions
      return Element{{mod_floor(-a.data[0], spec_.n), 0}};
    case GroupKind::symmetric: {
      std::vector<std::int64_t> d(a.data.size());
      for (size_t i = 0; i < d.size(); ++i)
        d[static_cast<size_t>(a.data[i] - 1)] = static_cast<std::int64_t>(i) + 1;
      return Element{std::move(d)};
    }
    case GroupKind::general_linear_2: {
      std::int64_t p = spec_.p;
      std::int64_t det = mod_floor(a.data[0] * a.data[3] - a.data[1] * a.data[2], p);
      // Fermat inverse; p prime and det != 0 for valid elements.
      std::int64_t dinv = 1, base = det, e = p - 2;
      while (e) {
        if (e & 1) dinv = dinv * base % p;
        base = base * base % p;
        e >>= 1;
      }
      return Element{{a.data[3] * dinv % p, mod_floor(-a.data[1], p) * dinv % p,
                      mod_floor(-a.data[2], p) * dinv % p, a.data[0] * dinv % p}};
    }
    case GroupKind::free_group: {
      std::vector<std::int64_t> d(a.data.rbegin(), a.data.rend());
      for (auto& v : d) v = -v;
      return Element{std::move(d)};
    }
  }
  fail(errc::invalid_spec, "bad group kind");
}

bool Group::valid(const Element& a) const {
  switch (spec_.kind) {
    case GroupKind::cyclic:
      return a.data.size() == 1 && a.data[0] >= 0 && a.data[0] < spec_.moduli[0];
    case GroupKind::product_cyclic: {
      if (a.data.size() != spec_.moduli.size()) return false;
      for (size_t i = 0; i < a.data.size(); ++i)
        if (a.data[i] < 0 || a.data[i] >= spec_.moduli[i]) return false;
      return true;
    }
    case GroupKind::dihedral:
      return a.data.size() == 2 && a.data[0] >= 0 && a.data[0] < spec_.n &&
             (a.data[1] == 0 || a.data[1] == 1);
    case GroupKind::symmetric: {
      if (a.data.size() != static_cast<size_t>(spec_.n)) return false;
      std::vector<bool> seen(static_cast<size_t>(spec_.n), false);
      for (auto v : a.data) {
        if (v < 1 || v > spec_.n || seen[static_cast<size_t>(v - 1)]) return false;
        seen[static_cast<size_t>(v - 1)] = true;
      }
      return true;
    }
    case GroupKind::general_linear_2: {
      if (a.data.size() != 4) return false;
      for (auto v : a.data)
        if (v < 0 || v >= spec_.p) return false;
      return mod_floor(a.data[0] * a.data[3] - a.data[1] * a.data[2], spec_.p) != 0;
    }
    case GroupKind::free_group: {
      if (a.data.size() > static_cast<size_t>(spec_.max_word_len)) return false;
      for (size_t i = 0; i < a.data.size(); ++i) {
        std::int64_t v = a.data[i];
        if (v == 0 || v < -spec_.rank || v > spec_.rank) return false;
        if (i + 1 < a.data.size() && a.data[i + 1] == -v) return false;  // not reduced
      }
      return true;
    }
  }
  return false;
}

void Group::require_valid(const Element& a) const {
  if (!valid(a))
    fail(errc::parse, "element " + format_element(a) + " not valid for " + spec_.str());
}

std::uint64_t Group::rank(const Element& a) const {
  switch (spec_.kind) {
    case GroupKind::cyclic:
      return static_cast<std::uint64_t>(a.data[0]);
    case GroupKind::product_cyclic: {
      std::uint64_t r = 0;
      for (size_t i = 0; i < a.data.size(); ++i)
        r = r * static_cast<std::uint64_t>(spec_.moduli[i]) + static_cast<std::uint64_t>(a.data[i]);
      return r;
    }
    case GroupKind::dihedral:
      return 2ull * static_cast<std::uint64_t>(a.data[0]) + static_cast<std::uint64_t>(a.data[1]);
    case GroupKind::symmetric: {
      // Lehmer code; lex rank of the one-line form.
      std::uint64_t r = 0;
      size_t n = a.data.size();
      for (size_t i = 0; i < n; ++i) {
        std::uint64_t smaller = 0;
        for (size_t j = i + 1; j < n; ++j)
          if (a.data[j] < a.data[i]) ++smaller;
        r += smaller * kFact[n - 1 - i];
      }
      return r;
    }
    case GroupKind::general_linear_2: {
      build_gl2_index();
      std::uint32_t code = static_cast<std::uint32_t>(
          ((a.data[0] * spec_.p + a.data[1]) * spec_.p + a.data[2]) * spec_.p + a.data[3]);
      auto it = gl2_rank_.find(code);
      if (it == gl2_rank_.end()) fail(errc::parse, "not an invertible matrix");
      return it->second;
    }
    case GroupKind::free_group:
      fail(errc::not_enumerable, "free groups have no element ranks");
  }
  fail(errc::invalid_spec, "bad group kind");
}

Element Group::unrank(std::uint64_t r) const {
  switch (spec_.kind) {
    case GroupKind::cyclic:
      return Element{{static_cast<std::int64_t>(r)}};
    case GroupKind::product_cyclic: {
      std::vector<std::int64_t> d(spec_.moduli.size());
      for (size_t i = d.size(); i-- > 0;) {
        d[i] = static_cast<std::int64_t>(r % static_cast<std::uint64_t>(spec_.moduli[i]));
        r /= static_cast<std::uint64_t>(spec_.moduli[i]);
      }
      return Element{std::move(d)};
    }
    case GroupKind::dihedral:
      return Element{{static_cast<std::int64_t>(r / 2), static_cast<std::int64_t>(r % 2)}};
    case GroupKind::symmetric: {
      size_t n = static_cast<size_t>(spec_.n);
      std::vector<std::int64_t> avail(n);
      for (size_t i = 0; i < n; ++i) avail[i] = static_cast<std::int64_t>(i) + 1;
      std::vector<std::int64_t> d(n);
      for (size_t i = 0; i < n; ++i) {
        std::uint64_t f = kFact[n - 1 - i];
        size_t idx = static_cast<size_t>(r / f);
        r %= f;
        d[i] = avail[idx];
        avail.erase(avail.begin() + static_cast<std::ptrdiff_t>(idx));
      }
      return Element{std::move(d)};
    }
    case GroupKind::general_linear_2: {
      build_gl2_index();
      std::uint32_t code = gl2_codes_.at(static_cast<size_t>(r));
      std::int64_t p = spec_.p;
      std::int64_t d3 = code % p;
      std::int64_t d2 = code / p % p;
      std::int64_t d1 = code / (p * p) % p;
      std::int64_t d0 = code / (p * p * p);
      return Element{{d0, d1, d2, d3}};
    }
    case GroupKind::free_group:
      fail(errc::not_enumerable, "free groups have no element ranks");
  }
  fail(errc::invalid_spec, "bad group kind");
}

std::vector<Element> Group::enumerate() const {
  if (!finite())
    fail(errc::not_enumerable, "cannot enumerate " + spec_.str());
  std::uint64_t o = *order();
  if (o > (1ull << 22))
    fail(errc::capacity, "group too large to enumerate: order " + std::to_string(o));
  std::vector<Element> out;
  out.reserve(static_cast<size_t>(o));
  for (std::uint64_t r = 0; r < o; ++r) out.push_back(unrank(r));
  return out;
}

void Group::build_gl2_index() const {
  std::call_once(gl2_once_, [this] {
    std::int64_t p = spec_.p;
    gl2_codes_.reserve(static_cast<size_t>(*order()));
    for (std::int64_t a = 0; a < p; ++a)
      for (std::int64_t b = 0; b < p; ++b)
        for (std::int64_t c = 0; c < p; ++c)
          for (std::int64_t d = 0; d < p; ++d) {
            if (mod_floor(a * d - b * c, p) == 0) continue;
            std::uint32_t code =
                static_cast<std::uint32_t>(((a * p + b) * p + c) * p + d);
            gl2_rank_.emplace(code, static_cast<std::uint32_t>(gl2_codes_.size()));
            gl2_codes_.push_back(code);
          }
  });
}

void Group::build_tables() const {
  std::call_once(tables_once_, [this] {
    std::uint64_t o = *order();
    std::vector<Element> elems;
    elems.reserve(static_cast<size_t>(o));
    for (std::uint64_t r = 0; r < o; ++r) elems.push_back(unrank(r));
    cayley_.assign(static_cast<size_t>(o * o), 0);
    inv_table_.assign(static_cast<size_t>(o), 0);
    for (std::uint64_t i = 0; i < o; ++i) {
      inv_table_[static_cast<size_t>(i)] = static_cast<std::uint32_t>(rank(inv(elems[static_cast<size_t>(i)])));
      for (std::uint64_t j = 0; j < o; ++j)
        cayley_[static_cast<size_t>(i * o + j)] = static_cast<std::uint32_t>(
            rank(mul(elems[static_cast<size_t>(i)], elems[static_cast<size_t>(j)])));
    }
  });
}

std::uint32_t Group::mul_rank(std::uint32_t a, std::uint32_t b) const {
  build_tables();
  return cayley_[static_cast<size_t>(a) * static_cast<size_t>(*order()) + b];
}

std::uint32_t Group::inv_rank(std::uint32_t a) const {
  build_tables();
  return inv_table_[a];
}

namespace {

std::vector<std::int64_t> parse_int_list(std::string_view body, char open, char close) {
  body = trim(body);
  if (body.size() < 2 || body.front() != open || body.back() != close)
    fail(errc::parse, "expected '" + std::string(1, open) + "...'" + std::string(1, close));
  body = body.substr(1, body.size() - 2);
  std::vector<std::int64_t> vals;
  for (auto part : split(body, ',')) vals.push_back(parse_int(trim(part)));
  return vals;
}

}  // namespace

Element Group::parse_element(std::string_view text) const {
  text = trim(text);
  Element e;
  switch (spec_.kind) {
    case GroupKind::cyclic:
      e = Element{{mod_floor(parse_int(text), spec_.moduli[0])}};
      break;
    case GroupKind::product_cyclic: {
      auto vals = parse_int_list(text, '(', ')');
      if (vals.size() != spec_.moduli.size())
        fail(errc::parse, "tuple arity mismatch for " + spec_.str());
      for (size_t i = 0; i < vals.size(); ++i) vals[i] = mod_floor(vals[i], spec_.moduli[i]);
      e = Element{std::move(vals)};
      break;
    }
    case GroupKind::dihedral: {
      auto vals = parse_int_list(text, '(', ')');
      if (vals.size() != 2) fail(errc::parse, "dihedral element is (rot,refl)");
      e = Element{{mod_floor(vals[0], spec_.n), mod_floor(vals[1], 2)}};
      break;
    }
    case GroupKind::symmetric: {
      auto vals = parse_int_list(text, '[', ']');
      e = Element{std::move(vals)};
      break;
    }
    case GroupKind::general_linear_2: {
      // [[a,b],[c,d]]
      std::string flat;
      for (char c : text)
        if (c != '[' && c != ']') flat += c;
      std::vector<std::int64_t> vals;
      for (auto part : split(flat, ','))
        if (!trim(part).empty()) vals.push_back(mod_floor(parse_int(trim(part)), spec_.p));
      if (vals.size() != 4) fail(errc::parse, "gl2 element is [[a,b],[c,d]]");
      e = Element{std::move(vals)};
      break;
    }
    case GroupKind::free_group: {
      // Words like "x1 x2^-1"; "e" is the identity.
      if (text == "e" || text.empty()) {
        e = identity();
        break;
      }
      Element acc = identity();
      std::istringstream is{std::string(text)};
      std::string tok;
      while (is >> tok) {
        if (tok == "e") continue;
        if (tok[0] != 'x') fail(errc::parse, "free-group letter must look like x1 or x2^-1");
        size_t caret = tok.find('^');
        std::int64_t gen = parse_int(std::string_view(tok).substr(1, caret == std::string::npos
                                                                         ? std::string::npos
                                                                         : caret - 1));
        std::int64_t exp = 1;
        if (caret != std::string::npos)
          exp = parse_int(std::string_view(tok).substr(caret + 1));
        if (gen < 1 || gen > spec_.rank) fail(errc::parse, "generator index out of range");
        std::int64_t letter = exp < 0 ? -gen : gen;
        for (std::int64_t i = 0; i < (exp < 0 ? -exp : exp); ++i)
          acc = mul(acc, Element{{letter}});
      }
      e = std::move(acc);
      break;
    }
  }
  require_valid(e);
  return e;
}

std::string Group::format_element(const Element& e) const {
  std::ostringstream os;
  switch (spec_.kind) {
    case GroupKind::cyclic:
      os << e.data[0];
      break;
    case GroupKind::product_cyclic:
    case GroupKind::dihedral: {
      os << '(';
      for (size_t i = 0; i < e.data.size(); ++i) {
        if (i) os << ',';
        os << e.data[i];
      }
      os << ')';
      break;
    }
    case GroupKind::symmetric: {
      os << '[';
      for (size_t i = 0; i < e.data.size(); ++i) {
        if (i) os << ',';
        os << e.data[i];
      }
      os << ']';
      break;
    }
    case GroupKind::general_linear_2:
      os << "[[" << e.data[0] << ',' << e.data[1] << "],[" << e.data[2] << ',' << e.data[3]
         << "]]";
      break;
    case GroupKind::free_group: {
      if (e.data.empty()) {
        os << 'e';
        break;
      }
      // Run-length collapse repeated letters into powers.
      size_t i = 0;
      bool first = true;
      while (i < e.data.size()) {
        size_t j = i;
        while (j < e.data.size() && e.data[j] == e.data[i]) ++j;
        if (!first) os << ' ';
        first = false;
        std::int64_t letter = e.data[i];
        std::int64_t count = static_cast<std::int64_t>(j - i);
        os << 'x' << (letter < 0 ? -letter : letter);
        if (letter < 0) count = -count;
        if (count != 1) os << '^' << count;
        i = j;
      }
      break;
    }
  }
  return os.str();
}

}  // namespace setcalc
