#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "setcalc/gset.hpp"

using namespace setcalc;

namespace {

GSet from_literal(const char* group, const char* set) {
  GroupPtr g = make_group(group);
  return parse_set(g, set);
}

GSet random_set(const GroupPtr& g, size_t count, std::mt19937_64& rng) {
  std::uint64_t order = *g->order();
  std::vector<Element> elems;
  for (size_t i = 0; i < count; ++i) elems.push_back(g->unrank(rng() % order));
  return GSet::of(g, std::move(elems));
}

bool equal_to_oracle(const GSet& s, const std::vector<Element>& oracle) {
  return s.elements() == oracle;
}

}  // namespace

TEST_CASE("set literals and canonical form") {
  GSet s = from_literal("zn:10", "{3,1,3,7}");
  CHECK(s.size() == 3);
  CHECK(format_set(s) == "{1,3,7}");
  CHECK(from_literal("zn:12", "subgroup:3").elements().size() == 4);
  CHECK(from_literal("sym:3", "universe").size() == 6);
  GSet sub = from_literal("sym:6", "subgroup:[2,1,3,4,5,6];[2,3,1,4,5,6]");
  CHECK(sub.size() == 6);
  CHECK_THROWS_AS(from_literal("zn:10", "oops"), Error);
}

TEST_CASE("product basics") {
  GSet a = from_literal("zn:10", "{0,1,2}");
  GSet b = from_literal("zn:10", "{0,1}");
  CHECK(format_set(product(a, b)) == "{0,1,2,3}");

  // Identity singleton is neutral.
  GroupPtr g = make_group("sym:4");
  std::mt19937_64 rng(5);
  GSet rnd = random_set(g, 5, rng);
  GSet e = GSet::single(g, g->identity());
  CHECK(product(rnd, e) == rnd);
  CHECK(product(e, rnd) == rnd);
}

TEST_CASE("product matches the nested-loop oracle across group families") {
  std::mt19937_64 rng(17);
  for (const char* spec : {"zn:30", "zprod:2,3,5", "dihedral:8", "sym:4", "gl2:3"}) {
    GroupPtr g = make_group(spec);
    for (int i = 0; i < 50; ++i) {
      GSet a = random_set(g, 1 + rng() % 6, rng);
      GSet b = random_set(g, 1 + rng() % 6, rng);
      CHECK(equal_to_oracle(product(a, b),
                            oracles::naive_product(g, a.elements(), b.elements())));
    }
  }
}

TEST_CASE("triple product of the subgroup-plus-swap set in S6 is large") {
  GroupPtr g = make_group("sym:6");
  GSet h = parse_set(g, "subgroup:[2,1,3,4,5,6];[2,3,1,4,5,6]");
  GSet a = with_element(h, g->parse_element("[4,5,6,1,2,3]"));
  GSet aaa = power(a, 3);
  CHECK(aaa.size() >= 36);
  CHECK(equal_to_oracle(aaa, oracles::naive_power(g, a.elements(), 3)));
}

TEST_CASE("inverse sets") {
  CHECK(format_set(inverse_set(from_literal("zn:10", "{1,3}"))) == "{7,9}");
  GSet h = from_literal("zn:12", "subgroup:3");
  CHECK(inverse_set(h) == h);

  std::mt19937_64 rng(23);
  GroupPtr g = make_group("sym:4");
  for (int i = 0; i < 50; ++i) {
    GSet a = random_set(g, 1 + rng() % 5, rng);
    GSet b = random_set(g, 1 + rng() % 5, rng);
    // (AB)^{-1} = B^{-1}A^{-1}, and inversion is an involution.
    CHECK(inverse_set(product(a, b)) == product(inverse_set(b), inverse_set(a)));
    CHECK(inverse_set(inverse_set(a)) == a);
  }
}

TEST_CASE("powers") {
  GSet b = from_literal("zn:20", "{0,1}");
  CHECK(power(b, 1) == b);
  CHECK(format_set(power(b, 5)) == "{0,1,2,3,4,5}");
  GSet h = from_literal("zn:12", "subgroup:3");
  for (int hh = 1; hh <= 4; ++hh) CHECK(power(h, hh) == h);
  CHECK_THROWS_AS(power(b, 0), Error);
}

TEST_CASE("signed sums") {
  GSet b = from_literal("zn:10", "{0,1}");
  CHECK(signed_sum(b, 1, 0) == b);
  CHECK(format_set(signed_sum(b, 1, 1)) == "{0,1,9}");

  // Triple-loop oracle for 2B - B in Z_100.
  GSet b2 = from_literal("zn:100", "{0,1,10}");
  GroupPtr g = b2.group();
  std::set<Element> expect;
  for (const auto& x : b2.elements())
    for (const auto& y : b2.elements())
      for (const auto& z : b2.elements())
        expect.insert(g->mul(g->mul(x, y), g->inv(z)));
  CHECK(signed_sum(b2, 2, 1).size() == expect.size());
  CHECK(signed_sum(b2, 2, 1).elements() == oracles::sorted(std::move(expect)));

  CHECK_THROWS_AS(signed_sum(from_literal("sym:3", "{[2,1,3]}"), 1, 1), Error);
  CHECK_THROWS_AS(signed_sum(b, 0, 0), Error);
}

TEST_CASE("mixed products") {
  GSet b = from_literal("dihedral:8", "{(1,0),(0,1),(3,1)}");
  GroupPtr g = b.group();
  // signs empty: B B^{-1}.
  CHECK(mixed_product(b, {}) == product(b, inverse_set(b)));
  GSet h = from_literal("dihedral:8", "subgroup:(2,0)");
  CHECK(mixed_product(h, {1, -1}) == h);

  // Nested-loop oracle for B B^{+1} B^{-1} B^{-1}.
  std::set<Element> expect;
  auto bi = inverse_set(b);
  for (const auto& p : b.elements())
    for (const auto& q : b.elements())
      for (const auto& r : bi.elements())
        for (const auto& s : bi.elements())
          expect.insert(g->mul(g->mul(g->mul(p, q), r), s));
  CHECK(mixed_product(b, {1, -1}).elements() == oracles::sorted(std::move(expect)));
}

TEST_CASE("growth ratio") {
  GroupPtr g = make_group("zn:10");
  GSet a = parse_set(g, "{0,1,2}");
  CHECK(growth_ratio(a, GSet::single(g, g->identity())) == Rational(1));
  CHECK(growth_ratio(a, parse_set(g, "{0,1}")) == Rational(BigInt(4), BigInt(3)));

  // Generic coset points: |A+B| = |A||B|.
  GroupPtr zz = make_group("zprod:5,7");
  GSet coset = GSet::closure(zz, {zz->parse_element("(1,0)")});
  GSet pts = parse_set(zz, "{(0,1),(1,2),(2,4)}");
  CHECK(growth_ratio(coset, pts) == Rational(3));

  CHECK_THROWS_AS(growth_ratio(GSet::empty(g), a), Error);
  try {
    growth_ratio(GSet::empty(g), a);
  } catch (const Error& e) {
    CHECK(e.code() == errc::empty_set);
  }
}

TEST_CASE("cardinality bounds: max(|A|,|B|) <= |AB| <= |A||B|") {
  std::mt19937_64 rng(31);
  for (const char* spec : {"zn:30", "dihedral:8", "sym:4", "gl2:5"}) {
    GroupPtr g = make_group(spec);
    for (int i = 0; i < 200; ++i) {
      GSet a = random_set(g, 1 + rng() % 8, rng);
      GSet b = random_set(g, 1 + rng() % 8, rng);
      GSet ab = product(a, b);
      CHECK(ab.size() >= std::max(a.size(), b.size()));
      CHECK(ab.size() <= a.size() * b.size());
    }
  }
}

TEST_CASE("set product is associative") {
  std::mt19937_64 rng(37);
  for (const char* spec : {"zn:30", "zprod:2,3,5", "dihedral:8", "sym:4", "gl2:3"}) {
    GroupPtr g = make_group(spec);
    for (int i = 0; i < 1000; ++i) {
      GSet a = random_set(g, 1 + rng() % 5, rng);
      GSet b = random_set(g, 1 + rng() % 5, rng);
      GSet c = random_set(g, 1 + rng() % 5, rng);
      CHECK(product(product(a, b), c) == product(a, product(b, c)));
    }
  }
}

TEST_CASE("abelian symmetry properties") {
  std::mt19937_64 rng(41);
  for (const char* spec : {"zn:30", "zprod:4,9"}) {
    GroupPtr g = make_group(spec);
    for (int i = 0; i < 100; ++i) {
      GSet a = random_set(g, 1 + rng() % 6, rng);
      GSet b = random_set(g, 1 + rng() % 6, rng);
      CHECK(product(a, b) == product(b, a));
      int k = static_cast<int>(rng() % 3);
      int l = static_cast<int>(rng() % 3);
      if (k + l >= 1)
        CHECK(signed_sum(b, k, l) == inverse_set(signed_sum(b, l, k)));
    }
  }
}

TEST_CASE("power recurrences") {
  std::mt19937_64 rng(43);
  GroupPtr g = make_group("zn:60");
  for (int i = 0; i < 30; ++i) {
    GSet b = random_set(g, 1 + rng() % 4, rng);
    for (int h = 2; h <= 6; ++h) {
      GSet p = power(b, h);
      CHECK(p == product(power(b, h - 1), b));
      CHECK(p == product(b, power(b, h - 1)));
    }
  }
}

TEST_CASE("blow-up guard") {
  GroupPtr f = make_group("free:2:14");
  GSet b = parse_set(f, "{x1,x2,x1^-1,x2^-1}");
  CHECK_THROWS_AS(power(b, 7, /*size_cap=*/500), Error);
  try {
    power(b, 7, 500);
  } catch (const Error& e) {
    CHECK(e.code() == errc::size_overflow);
  }
  // Free-group length overflow propagates out of products.
  GSet w = parse_set(f, "{x1 x2 x1 x2 x1 x2 x1}");
  CHECK_THROWS_AS(power(w, 3), Error);
}

TEST_CASE("free-group sets use the sparse path") {
  GroupPtr f = make_group("free:2:10");
  GSet b = parse_set(f, "{x1,x2}");
  GSet bb = product(b, b);
  CHECK(bb.size() == 4);
  CHECK(!bb.dense());
  GSet bbinv = product(b, inverse_set(b));
  CHECK(bbinv.size() == 3);  // x1x2^-1, e, x2x1^-1
  CHECK(bbinv.contains(f->identity()));
}
