#include "setcalc/magnification.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_map>

#include "setcalc/maxflow.hpp"

namespace setcalc {

namespace {

// Rows of the bipartite growth graph: for each a in A (canonical order)
// the set a*B, re-indexed onto the support A*B so subset unions are small
// bitset ORs regardless of the ambient group.
struct GrowthRows {
  std::uint64_t support_size = 0;          // |A*B|
  size_t words = 0;
  std::vector<std::vector<std::uint64_t>> row_bits;  // per a, support-indexed
  std::vector<std::vector<std::uint32_t>> row_ids;   // sorted unique ids
};

GrowthRows build_rows(const GSet& a, const GSet& b, std::uint64_t size_cap) {
  GrowthRows rows;
  const GroupPtr& g = a.group();
  GSet ab = product(a, b, size_cap);
  rows.support_size = ab.size();
  rows.words = static_cast<size_t>((ab.size() + 63) / 64);

  auto add_row = [&](std::vector<std::uint32_t> ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    std::vector<std::uint64_t> bits(rows.words, 0);
    for (std::uint32_t id : ids) bits[id >> 6] |= 1ull << (id & 63);
    rows.row_bits.push_back(std::move(bits));
    rows.row_ids.push_back(std::move(ids));
  };

  if (a.dense()) {
    // Map group rank -> support id.
    std::vector<std::uint32_t> local(static_cast<size_t>(*g->order()), 0);
    auto ab_ranks = ab.ranks();
    for (std::uint32_t i = 0; i < ab_ranks.size(); ++i) local[ab_ranks[i]] = i;
    auto rb = b.ranks();
    if (g->has_cayley()) {
      for (std::uint32_t ra : a.ranks()) {
        std::vector<std::uint32_t> ids;
        ids.reserve(rb.size());
        for (std::uint32_t y : rb) ids.push_back(local[g->mul_rank(ra, y)]);
        add_row(std::move(ids));
      }
    } else {
      std::vector<Element> eb;
      for (std::uint32_t y : rb) eb.push_back(g->unrank(y));
      for (std::uint32_t ra : a.ranks()) {
        Element ea = g->unrank(ra);
        std::vector<std::uint32_t> ids;
        ids.reserve(eb.size());
        for (const auto& ey : eb)
          ids.push_back(local[g->rank(g->mul(ea, ey))]);
        add_row(std::move(ids));
      }
    }
  } else {
    std::unordered_map<Element, std::uint32_t, ElementHash> local;
    auto ab_elems = ab.elements();
    local.reserve(ab_elems.size());
    for (std::uint32_t i = 0; i < ab_elems.size(); ++i)
      local.emplace(ab_elems[i], i);
    auto eb = b.elements();
    for (const auto& ea : a.elements()) {
      std::vector<std::uint32_t> ids;
      ids.reserve(eb.size());
      for (const auto& ey : eb) ids.push_back(local.at(g->mul(ea, ey)));
      add_row(std::move(ids));
    }
  }
  return rows;
}

GSet subset_from_mask(const GSet& a, std::uint64_t mask) {
  SetBuilder out(a.group());
  if (a.dense()) {
    auto ranks = a.ranks();
    for (size_t i = 0; i < ranks.size(); ++i)
      if (mask >> i & 1) out.insert_rank(ranks[i]);
  } else {
    auto elems = a.elements();
    for (size_t i = 0; i < elems.size(); ++i)
      if (mask >> i & 1) out.insert(elems[i]);
  }
  return out.take();
}

GSet subset_from_flags(const GSet& a, const std::vector<bool>& keep) {
  SetBuilder out(a.group());
  if (a.dense()) {
    auto ranks = a.ranks();
    for (size_t i = 0; i < ranks.size(); ++i)
      if (keep[i]) out.insert_rank(ranks[i]);
  } else {
    auto elems = a.elements();
    for (size_t i = 0; i < elems.size(); ++i)
      if (keep[i]) out.insert(elems[i]);
  }
  return out.take();
}

struct BruteBest {
  std::int64_t p = -1;  // |ZB|
  std::int64_t q = 1;   // |Z|
  std::uint64_t mask = 0;

  // Strictly better ratio, or equal ratio with the agreed tie-break:
  // larger |Z| first, then lexicographically least element sequence
  // (equivalently: the mask owning the lowest differing bit).
  bool improves(std::int64_t np, std::int64_t nq, std::uint64_t nmask) const {
    if (p < 0) return true;
    std::int64_t lhs = np * q;
    std::int64_t rhs = p * nq;
    if (lhs != rhs) return lhs < rhs;
    if (nq != q) return nq > q;
    std::uint64_t diff = nmask ^ mask;
    if (diff == 0) return false;
    return nmask & (diff & ~(diff - 1));
  }
};

}  // namespace

MagnificationCertificate magnification_brute(const GSet& a, const GSet& b,
                                             const MagnificationOptions& opts) {
  require_nonempty(a, "A");
  require_nonempty(b, "B");
  require_same_group(a, b);
  size_t n = static_cast<size_t>(a.size());
  if (n > static_cast<size_t>(opts.brute_cap))
    fail(errc::capacity, "|A| = " + std::to_string(n) + " exceeds the brute-force cap " +
                             std::to_string(opts.brute_cap) +
                             "; use magnification_flow");

  GrowthRows rows = build_rows(a, b, opts.size_cap);
  size_t words = rows.words;
  // DFS over include/exclude with one accumulator per depth.
  std::vector<std::vector<std::uint64_t>> acc(n + 1,
                                              std::vector<std::uint64_t>(words, 0));
  BruteBest best;

  auto popcount_words = [&](const std::vector<std::uint64_t>& w) {
    std::int64_t c = 0;
    for (auto v : w) c += std::popcount(v);
    return c;
  };

  // Iterative DFS: state = (depth, chosen count, mask); include first so
  // every nonempty subset is reached exactly once.
  struct Frame {
    size_t depth;
    int branch;  // 0 = include pending, 1 = exclude pending, 2 = done
    std::int64_t count;
    std::uint64_t mask;
  };
  std::vector<Frame> stack;
  stack.push_back({0, 0, 0, 0});
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.depth == n) {
      if (f.count > 0) {
        std::int64_t zb = popcount_words(acc[f.depth]);
        if (best.improves(zb, f.count, f.mask)) best = {zb, f.count, f.mask};
      }
      stack.pop_back();
      continue;
    }
    if (f.branch == 0) {
      f.branch = 1;
      const auto& row = rows.row_bits[f.depth];
      auto& next = acc[f.depth + 1];
      const auto& cur = acc[f.depth];
      for (size_t w = 0; w < words; ++w) next[w] = cur[w] | row[w];
      stack.push_back({f.depth + 1, 0, f.count + 1, f.mask | (1ull << f.depth)});
    } else if (f.branch == 1) {
      f.branch = 2;
      acc[f.depth + 1] = acc[f.depth];
      stack.push_back({f.depth + 1, 0, f.count, f.mask});
    } else {
      stack.pop_back();
    }
  }

  MagnificationCertificate cert;
  cert.K = Rational(BigInt(best.p), BigInt(best.q));
  cert.X = subset_from_mask(a, best.mask);
  cert.method = MagnificationCertificate::Method::brute;
  cert.iterations = 0;
  cert.candidates_examined = (n >= 64 ? 0 : (1ull << n) - 1);
  return cert;
}

MagnificationCertificate magnification_flow(const GSet& a, const GSet& b,
                                            const MagnificationOptions& opts) {
  require_nonempty(a, "A");
  require_nonempty(b, "B");
  require_same_group(a, b);

  GrowthRows rows = build_rows(a, b, opts.size_cap);
  std::int64_t n = static_cast<std::int64_t>(a.size());
  std::int64_t m = static_cast<std::int64_t>(rows.support_size);
  if (static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(m) > opts.flow_graph_cap)
    fail(errc::capacity, "growth graph |A|*|AB| exceeds the flow cap");

  // lambda = p/q, reduced. Start at r(A) = |AB|/|A|.
  std::int64_t p = m;
  std::int64_t q = n;
  std::int64_t g0 = std::gcd(p, q);
  p /= g0;
  q /= g0;

  // Node layout: 0 source, 1..n the elements of A, n+1..n+m the support,
  // n+m+1 sink.
  int source = 0;
  int sink = static_cast<int>(n + m + 1);
  int iterations = 0;
  std::vector<bool> final_keep;

  while (true) {
    MaxFlow net(static_cast<int>(n + m + 2));
    std::int64_t inf = p * n + 1;
    for (std::int64_t i = 0; i < n; ++i) {
      net.add_edge(source, static_cast<int>(1 + i), p);
      for (std::uint32_t y : rows.row_ids[static_cast<size_t>(i)])
        net.add_edge(static_cast<int>(1 + i), static_cast<int>(1 + n + y), inf);
    }
    for (std::int64_t y = 0; y < m; ++y)
      net.add_edge(static_cast<int>(1 + n + y), sink, q);
    std::int64_t flow = net.run(source, sink);
    ++iterations;

    // mincut = p*n + q*min_Z(|ZB| - (p/q)|Z|); a strictly improving
    // nonempty Z exists iff the cut undercuts the trivial one.
    std::vector<bool> side = net.max_source_side(sink);
    std::vector<bool> keep(static_cast<size_t>(n));
    std::int64_t zsize = 0;
    for (std::int64_t i = 0; i < n; ++i) {
      keep[static_cast<size_t>(i)] = side[static_cast<size_t>(1 + i)];
      if (keep[static_cast<size_t>(i)]) ++zsize;
    }
    if (flow >= p * n) {
      // No improving set: lambda is the minimum. The maximal source side
      // is the union of all ratio-K subsets, i.e. the tie-break winner.
      final_keep = std::move(keep);
      break;
    }
    // Recompute r(Z) exactly from the rows.
    std::vector<std::uint64_t> unionw(rows.words, 0);
    for (std::int64_t i = 0; i < n; ++i)
      if (keep[static_cast<size_t>(i)])
        for (size_t w = 0; w < rows.words; ++w)
          unionw[w] |= rows.row_bits[static_cast<size_t>(i)][w];
    std::int64_t zb = 0;
    for (auto w : unionw) zb += std::popcount(w);
    if (zsize == 0 || zb * q >= p * zsize)
      fail(errc::capacity, "flow solver failed to improve; internal error");
    std::int64_t g1 = std::gcd(zb, zsize);
    p = zb / g1;
    q = zsize / g1;
  }

  MagnificationCertificate cert;
  cert.K = Rational(BigInt(p), BigInt(q));
  cert.X = subset_from_flags(a, final_keep);
  cert.method = MagnificationCertificate::Method::flow;
  cert.iterations = iterations;
  cert.candidates_examined = static_cast<std::uint64_t>(iterations);
  return cert;
}

CertCheck verify_certificate(const MagnificationCertificate& cert, const GSet& a,
                             const GSet& b, bool exhaustive,
                             const MagnificationOptions& opts) {
  CertCheck out;
  if (cert.X.is_empty()) {
    out.detail = "X is empty";
    return out;
  }
  require_same_group(cert.X, a);
  if (!cert.X.subset_of(a)) {
    out.detail = "X is not a subset of A";
    return out;
  }
  GSet xb = product(cert.X, b, opts.size_cap);
  if (BigInt(xb.size()) * cert.K.den() != cert.K.num() * BigInt(cert.X.size())) {
    out.detail = "|XB| != K|X|: |XB| = " + std::to_string(xb.size()) + ", |X| = " +
                 std::to_string(cert.X.size()) + ", K = " + cert.K.str();
    return out;
  }
  if (exhaustive && cert.X.size() <= static_cast<std::uint64_t>(opts.exhaustive_cap)) {
    GrowthRows rows = build_rows(cert.X, b, opts.size_cap);
    size_t n = static_cast<size_t>(cert.X.size());
    // Walk all nonempty subsets; any ratio below K is a counterexample.
    std::vector<std::vector<std::uint64_t>> acc(n + 1,
                                                std::vector<std::uint64_t>(rows.words, 0));
    // K as an int64 pair for the cross-multiplied comparison.
    std::int64_t kn = cert.K.num().convert_to<std::int64_t>();
    std::int64_t kd = cert.K.den().convert_to<std::int64_t>();
    std::uint64_t bad_mask = 0;
    bool found_bad = false;
    auto popcount_words = [&](const std::vector<std::uint64_t>& w) {
      std::int64_t c = 0;
      for (auto v : w) c += std::popcount(v);
      return c;
    };
    struct Frame {
      size_t depth;
      int branch;
      std::int64_t count;
      std::uint64_t mask;
    };
    std::vector<Frame> stack{{0, 0, 0, 0}};
    while (!stack.empty() && !found_bad) {
      Frame& f = stack.back();
      if (f.depth == n) {
        if (f.count > 0) {
          std::int64_t zb = popcount_words(acc[f.depth]);
          if (zb * kd < kn * f.count) {
            found_bad = true;
            bad_mask = f.mask;
          }
        }
        stack.pop_back();
        continue;
      }
      if (f.branch == 0) {
        f.branch = 1;
        const auto& row = rows.row_bits[f.depth];
        auto& next = acc[f.depth + 1];
        const auto& cur = acc[f.depth];
        for (size_t w = 0; w < rows.words; ++w) next[w] = cur[w] | row[w];
        stack.push_back({f.depth + 1, 0, f.count + 1, f.mask | (1ull << f.depth)});
      } else if (f.branch == 1) {
        f.branch = 2;
        acc[f.depth + 1] = acc[f.depth];
        stack.push_back({f.depth + 1, 0, f.count, f.mask});
      } else {
        stack.pop_back();
      }
    }
    if (found_bad) {
      out.witness = subset_from_mask(cert.X, bad_mask);
      out.detail = "subset of X with ratio below K: " + format_set(*out.witness);
      return out;
    }
  }
  out.ok = true;
  out.detail = "ok";
  return out;
}

}  // namespace setcalc
