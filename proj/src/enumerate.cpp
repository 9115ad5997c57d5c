#include "rauszer/enumerate.hpp"

#include <algorithm>
#include <numeric>

namespace rauszer {

namespace {

// Off-diagonal bit layout for small relation matrices.
std::size_t offdiag_index(std::size_t n, std::size_t x, std::size_t y) {
  std::size_t i = x * (n - 1) + y;
  return y > x ? i - 1 : i;
}

std::optional<Preorder> preorder_from_offdiag(std::size_t n, std::uint64_t mask) {
  std::vector<Bits> up(n, Bits(n));
  for (std::size_t x = 0; x < n; ++x) {
    up[x].set(x);
    for (std::size_t y = 0; y < n; ++y)
      if (x != y && ((mask >> offdiag_index(n, x, y)) & 1)) up[x].set(y);
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (up[x].test(y) && !up[y].subset_of(up[x])) return std::nullopt;
  return Preorder::from_up_sets(std::move(up));
}

std::vector<std::uint8_t> encode_relation(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& rel) {
  std::vector<std::uint8_t> code;
  code.reserve(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) code.push_back(rel(x, y) ? 1 : 0);
  return code;
}

template <typename Fn>
void for_each_permutation(std::size_t n, Fn&& fn) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    fn(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

void for_each_preorder(std::size_t n, const std::function<void(const Preorder&)>& fn) {
  if (n == 0) {
    fn(Preorder::identity(0));
    return;
  }
  const std::size_t bits = n * (n - 1);
  if (bits >= 32) throw CapacityError("exhaustive preorder enumeration needs n*(n-1) < 32 relation bits");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask)
    if (auto p = preorder_from_offdiag(n, mask)) fn(*p);
}

void for_each_equivalence(std::size_t n, const std::function<void(const Preorder&)>& fn) {
  if (n == 0) {
    fn(Preorder::identity(0));
    return;
  }
  // Restricted growth strings: a[0]=0, a[i] <= 1 + max(a[0..i-1]).
  std::vector<std::size_t> a(n, 0);
  while (true) {
    std::vector<Bits> up(n, Bits(n));
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (a[x] == a[y]) up[x].set(y);
    fn(Preorder::from_up_sets(std::move(up)));

    bool advanced = false;
    for (std::size_t i = n; i-- > 1 && !advanced;) {
      std::size_t cap = 0;
      for (std::size_t j = 0; j < i; ++j) cap = std::max(cap, a[j]);
      if (a[i] <= cap) {
        ++a[i];
        for (std::size_t j = i + 1; j < n; ++j) a[j] = 0;
        advanced = true;
      }
    }
    if (!advanced) return;
  }
}

Preorder random_preorder(std::size_t n, Rng& rng) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  const std::size_t k = rng.below(n * n + 1);
  for (std::size_t i = 0; i < k; ++i) pairs.emplace_back(rng.below(n), rng.below(n));
  return Preorder::build(n, pairs, BuildMode::close);
}

std::vector<std::uint8_t> canonical_preorder_code(const Preorder& p) {
  const std::size_t n = p.size();
  if (n > kMaxCanonPoints) throw CapacityError("canonization is capped at n <= " + std::to_string(kMaxCanonPoints));
  std::vector<std::uint8_t> best;
  for_each_permutation(n, [&](const std::vector<std::size_t>& perm) {
    std::vector<std::size_t> inv(n);
    for (std::size_t i = 0; i < n; ++i) inv[perm[i]] = i;
    // relabeled relation: perm(x) R' perm(y) iff x R y
    auto code = encode_relation(n, [&](std::size_t x, std::size_t y) { return p.related(inv[x], inv[y]); });
    if (best.empty() || code < best) best = std::move(code);
  });
  return best;
}

std::vector<PointInvolution> antitone_involutions(const Preorder& p) {
  const std::size_t n = p.size();
  std::vector<PointInvolution> out;
  std::vector<std::size_t> perm(n, n);  // n = unassigned
  std::function<void(std::size_t)> rec = [&](std::size_t x) {
    while (x < n && perm[x] != n) ++x;
    if (x == n) {
      PointInvolution v(perm);
      if (v.antitone_for(p)) out.push_back(std::move(v));
      return;
    }
    perm[x] = x;
    rec(x + 1);
    perm[x] = n;
    for (std::size_t y = x + 1; y < n; ++y) {
      if (perm[y] != n) continue;
      perm[x] = y;
      perm[y] = x;
      rec(x + 1);
      perm[x] = n;
      perm[y] = n;
    }
  };
  rec(0);
  return out;
}

// --- algebra corpus --------------------------------------------------------

FiniteAlgebra chain_algebra(int k) {
  std::vector<int> meet(static_cast<std::size_t>(k) * static_cast<std::size_t>(k));
  std::vector<int> join(meet.size());
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      meet[static_cast<std::size_t>(a) * static_cast<std::size_t>(k) + static_cast<std::size_t>(b)] = std::min(a, b);
      join[static_cast<std::size_t>(a) * static_cast<std::size_t>(k) + static_cast<std::size_t>(b)] = std::max(a, b);
    }
  return FiniteAlgebra::make(k, std::move(meet), std::move(join), 0, k - 1);
}

FiniteAlgebra product_algebra(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  const int n = a.size() * b.size();
  auto id = [&](int x, int y) { return x * b.size() + y; };
  std::vector<int> meet(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  std::vector<int> join(meet.size());
  for (int x1 = 0; x1 < a.size(); ++x1)
    for (int y1 = 0; y1 < b.size(); ++y1)
      for (int x2 = 0; x2 < a.size(); ++x2)
        for (int y2 = 0; y2 < b.size(); ++y2) {
          const std::size_t at = static_cast<std::size_t>(id(x1, y1)) * static_cast<std::size_t>(n) +
                                 static_cast<std::size_t>(id(x2, y2));
          meet[at] = id(a.meet(x1, x2), b.meet(y1, y2));
          join[at] = id(a.join(x1, x2), b.join(y1, y2));
        }
  return FiniteAlgebra::make(n, std::move(meet), std::move(join), id(a.bot(), b.bot()), id(a.top(), b.top()));
}

FiniteAlgebra with_heyting_tables(const FiniteAlgebra& a) {
  const int n = a.size();
  std::vector<int> impl(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  std::vector<int> minus(impl.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto i = relative_pseudocomplement(a, x, y);
      auto m = pseudo_difference(a, x, y);
      if (!i) throw InputError("relative pseudocomplement missing at (" + std::to_string(x) + "," + std::to_string(y) + ")");
      if (!m) throw InputError("pseudo difference missing at (" + std::to_string(x) + "," + std::to_string(y) + ")");
      impl[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) + static_cast<std::size_t>(y)] = *i;
      minus[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) + static_cast<std::size_t>(y)] = *m;
    }
  return a.with_table("impl", std::move(impl)).with_table("minus", std::move(minus));
}

std::vector<int> chain_reversal_negation(int k) {
  std::vector<int> neg(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) neg[static_cast<std::size_t>(i)] = k - 1 - i;
  return neg;
}

namespace {

struct SmallOrder {
  int n;
  std::vector<std::uint32_t> upmask;  // upmask[x] = {y : x <= y}
  bool leq(int x, int y) const { return (upmask[static_cast<std::size_t>(x)] >> y) & 1; }
};

bool transitive(const SmallOrder& o) {
  for (int x = 0; x < o.n; ++x)
    for (int y = 0; y < o.n; ++y)
      if (o.leq(x, y) && (o.upmask[static_cast<std::size_t>(y)] & ~o.upmask[static_cast<std::size_t>(x)])) return false;
  return true;
}

std::vector<std::uint8_t> order_code(const SmallOrder& o) {
  std::vector<std::uint8_t> code;
  code.reserve(static_cast<std::size_t>(o.n) * static_cast<std::size_t>(o.n));
  for (int x = 0; x < o.n; ++x)
    for (int y = 0; y < o.n; ++y) code.push_back(o.leq(x, y) ? 1 : 0);
  return code;
}

std::vector<std::uint8_t> min_order_code(const SmallOrder& o) {
  std::vector<std::uint8_t> best;
  for_each_permutation(static_cast<std::size_t>(o.n), [&](const std::vector<std::size_t>& perm) {
    std::vector<std::uint8_t> code;
    code.reserve(static_cast<std::size_t>(o.n) * static_cast<std::size_t>(o.n));
    // leq'[perm(x)][perm(y)] = leq[x][y]; read back row-major in new labels
    std::vector<std::size_t> inv(static_cast<std::size_t>(o.n));
    for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = i;
    for (int x = 0; x < o.n; ++x)
      for (int y = 0; y < o.n; ++y)
        code.push_back(o.leq(static_cast<int>(inv[static_cast<std::size_t>(x)]), static_cast<int>(inv[static_cast<std::size_t>(y)])) ? 1 : 0);
    if (best.empty() || code < best) best = std::move(code);
  });
  return best;
}

// Lattice tables from an order, when every pair has a glb and lub.
std::optional<FiniteAlgebra> lattice_from_order(const SmallOrder& o) {
  const int n = o.n;
  int bot = -1, top = -1;
  const std::uint32_t full = (n == 32) ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1);
  for (int x = 0; x < n; ++x) {
    if (o.upmask[static_cast<std::size_t>(x)] == full) bot = x;
    bool greatest = true;
    for (int y = 0; y < n; ++y)
      if (!o.leq(y, x)) greatest = false;
    if (greatest) top = x;
  }
  if (bot < 0 || top < 0) return std::nullopt;

  std::vector<int> meet(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  std::vector<int> join(meet.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int glb = -1, lub = -1;
      for (int g = 0; g < n; ++g) {
        if (!o.leq(g, x) || !o.leq(g, y)) continue;
        bool greatest = true;
        for (int c = 0; c < n; ++c)
          if (o.leq(c, x) && o.leq(c, y) && !o.leq(c, g)) greatest = false;
        if (greatest) {
          glb = g;
          break;
        }
      }
      for (int l = 0; l < n; ++l) {
        if (!o.leq(x, l) || !o.leq(y, l)) continue;
        bool least = true;
        for (int c = 0; c < n; ++c)
          if (o.leq(x, c) && o.leq(y, c) && !o.leq(l, c)) least = false;
        if (least) {
          lub = l;
          break;
        }
      }
      if (glb < 0 || lub < 0) return std::nullopt;
      meet[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) + static_cast<std::size_t>(y)] = glb;
      join[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) + static_cast<std::size_t>(y)] = lub;
    }
  return FiniteAlgebra::make(n, std::move(meet), std::move(join), bot, top);
}


}  // namespace

void for_each_distributive_lattice(int n, const std::function<void(const FiniteAlgebra&)>& fn) {
  if (n < 1) return;
  if (n > kMaxExhaustiveAlgebra + 1) throw CapacityError("exhaustive lattice enumeration is capped");
  const int pairs = n * (n - 1) / 2;
  std::vector<int> state(static_cast<std::size_t>(pairs), 0);  // 0: incomparable, 1: i<j, 2: j<i
  while (true) {
    SmallOrder o{n, std::vector<std::uint32_t>(static_cast<std::size_t>(n), 0)};
    for (int x = 0; x < n; ++x) o.upmask[static_cast<std::size_t>(x)] |= std::uint32_t{1} << x;
    int p = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j, ++p) {
        if (state[static_cast<std::size_t>(p)] == 1) o.upmask[static_cast<std::size_t>(i)] |= std::uint32_t{1} << j;
        if (state[static_cast<std::size_t>(p)] == 2) o.upmask[static_cast<std::size_t>(j)] |= std::uint32_t{1} << i;
      }
    // canonical-form check last: it is the expensive step, lattices are rare
    if (transitive(o)) {
      if (auto alg = lattice_from_order(o); alg && alg->is_distributive() && order_code(o) == min_order_code(o))
        fn(*alg);
    }
    int k = pairs - 1;
    while (k >= 0 && state[static_cast<std::size_t>(k)] == 2) state[static_cast<std::size_t>(k--)] = 0;
    if (k < 0) break;
    ++state[static_cast<std::size_t>(k)];
  }
}

std::vector<std::vector<int>> demorgan_involutions(const FiniteAlgebra& a) {
  const int n = a.size();
  std::vector<std::vector<int>> out;
  std::vector<int> perm(static_cast<std::size_t>(n), -1);
  std::function<void(int)> rec = [&](int x) {
    while (x < n && perm[static_cast<std::size_t>(x)] != -1) ++x;
    if (x == n) {
      // involutive by construction; check order reversal both ways
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
          if (a.leq(p, q) != a.leq(perm[static_cast<std::size_t>(q)], perm[static_cast<std::size_t>(p)])) return;
      out.push_back(perm);
      return;
    }
    for (int y = x; y < n; ++y) {
      if (perm[static_cast<std::size_t>(y)] != -1) continue;
      perm[static_cast<std::size_t>(x)] = y;
      perm[static_cast<std::size_t>(y)] = x;
      rec(x + 1);
      perm[static_cast<std::size_t>(x)] = -1;
      perm[static_cast<std::size_t>(y)] = -1;
    }
  };
  rec(0);
  return out;
}

std::vector<std::uint8_t> canonical_lattice_neg_code(const FiniteAlgebra& a, const std::vector<int>& neg) {
  const std::size_t n = static_cast<std::size_t>(a.size());
  std::vector<std::uint8_t> best;
  for_each_permutation(n, [&](const std::vector<std::size_t>& perm) {
    std::vector<std::size_t> inv(n);
    for (std::size_t i = 0; i < n; ++i) inv[perm[i]] = i;
    std::vector<std::uint8_t> code;
    code.reserve(n * n + n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        code.push_back(a.leq(static_cast<int>(inv[x]), static_cast<int>(inv[y])) ? 1 : 0);
    for (std::size_t x = 0; x < n; ++x)
      code.push_back(static_cast<std::uint8_t>(perm[static_cast<std::size_t>(neg[inv[x]])]));
    if (best.empty() || code < best) best = std::move(code);
  });
  return best;
}

std::vector<FiniteAlgebra> kleene_sym_heyting_upto(int max_n) {
  std::vector<FiniteAlgebra> out;
  for (int n = 1; n <= max_n; ++n) {
    for_each_distributive_lattice(n, [&](const FiniteAlgebra& lat) {
      for (const auto& neg : demorgan_involutions(lat)) {
        FiniteAlgebra with_neg = lat.with_table("neg", neg);
        if (!check_class(with_neg, "kleene").holds) continue;
        // keep one representative per (lattice, neg) isomorphism class
        std::vector<std::uint8_t> self;
        const std::size_t nn = static_cast<std::size_t>(n);
        self.reserve(nn * nn + nn);
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y) self.push_back(lat.leq(x, y) ? 1 : 0);
        for (int x = 0; x < n; ++x) self.push_back(static_cast<std::uint8_t>(neg[static_cast<std::size_t>(x)]));
        if (self != canonical_lattice_neg_code(lat, neg)) continue;
        out.push_back(with_heyting_tables(with_neg));
      }
    });
  }
  return out;
}

std::vector<FiniteAlgebra> nelson_algebras_upto(int max_n) {
  std::vector<FiniteAlgebra> out;
  for (const FiniteAlgebra& a : kleene_sym_heyting_upto(max_n)) {
    const int n = a.size();
    std::vector<int> wimpl(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        wimpl[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) + static_cast<std::size_t>(y)] =
            a.binary("impl", x, a.join(a.unary("neg", x), y));
    FiniteAlgebra b = a.with_table("wimpl", std::move(wimpl));
    bool exchange = true;
    for (int x = 0; x < n && exchange; ++x)
      for (int y = 0; y < n && exchange; ++y)
        for (int z = 0; z < n; ++z)
          if (b.binary("wimpl", x, b.binary("wimpl", y, z)) != b.binary("wimpl", b.meet(x, y), z)) {
            exchange = false;
            break;
          }
    if (exchange) out.push_back(std::move(b));
  }
  return out;
}

}  // namespace rauszer
