#include "rauszer/search.hpp"

#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "rauszer/enumerate.hpp"
#include "rauszer/representation.hpp"

namespace rauszer {

namespace {

Bits bits_from_mask(std::size_t n, std::uint64_t mask) {
  Bits b(n);
  for (std::size_t i = 0; i < n; ++i)
    if ((mask >> i) & 1) b.set(i);
  return b;
}

std::string describe(const Preorder& p) {
  std::ostringstream os;
  os << "preorder n=" << p.size() << " pairs=[";
  bool first = true;
  for (auto [x, y] : p.pairs()) {
    if (x == y) continue;
    if (!first) os << ",";
    os << "(" << x << "," << y << ")";
    first = false;
  }
  os << "]";
  return os.str();
}

std::string describe(const FiniteAlgebra& a) {
  std::ostringstream os;
  os << "algebra n=" << a.size() << " leq=";
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < a.size(); ++y) os << (a.leq(x, y) ? '1' : '0');
  if (a.has("neg")) {
    os << " neg=";
    for (int x = 0; x < a.size(); ++x) os << a.unary("neg", x);
  }
  return os.str();
}

// Failure detail, or nullopt when the property holds on the structure.
using PreorderProperty = std::function<std::optional<std::string>(const Preorder&)>;
using AlgebraProperty = std::function<std::optional<std::string>(const FiniteAlgebra&)>;

struct OperatorTables {
  std::vector<Bits> clo, intr;  // indexed by subset mask, n <= 16
};

OperatorTables tables_for(const Preorder& p) {
  const std::size_t n = p.size();
  if (n > 16) throw CapacityError("subset-exhaustive properties are capped at n <= 16");
  OperatorTables t;
  const std::size_t count = std::size_t{1} << n;
  t.clo.reserve(count);
  t.intr.reserve(count);
  for (std::uint64_t m = 0; m < count; ++m) {
    Bits x = bits_from_mask(n, m);
    t.clo.push_back(closure(p, x));
    t.intr.push_back(interior(p, x));
  }
  return t;
}

std::uint64_t mask_of(const Bits& b) {
  std::uint64_t m = 0;
  b.for_each([&](std::size_t i) { m |= std::uint64_t{1} << i; });
  return m;
}

std::optional<std::string> check_axioms(const Preorder& p) {
  const std::size_t n = p.size();
  OperatorTables t = tables_for(p);
  const std::size_t count = std::size_t{1} << n;
  const Bits full = Bits::all(n);
  if (!t.clo[0].empty()) return "C1 fails";
  if (t.intr[count - 1] != full) return "I1 fails";
  for (std::uint64_t m = 0; m < count; ++m) {
    Bits x = bits_from_mask(n, m);
    if (!x.subset_of(t.clo[m])) return "C2 fails at " + x.to_string();
    if (!t.intr[m].subset_of(x)) return "I2 fails at " + x.to_string();
    if (t.clo[mask_of(t.clo[m])] != t.clo[m]) return "C4 fails at " + x.to_string();
    if (t.intr[mask_of(t.intr[m])] != t.intr[m]) return "I4 fails at " + x.to_string();
  }
  for (std::uint64_t m1 = 0; m1 < count; ++m1)
    for (std::uint64_t m2 = 0; m2 < count; ++m2) {
      if (t.clo[m1 | m2] != (t.clo[m1] | t.clo[m2]))
        return "C3 fails at " + bits_from_mask(n, m1).to_string() + "," + bits_from_mask(n, m2).to_string();
      if (t.intr[m1 & m2] != (t.intr[m1] & t.intr[m2]))
        return "I3 fails at " + bits_from_mask(n, m1).to_string() + "," + bits_from_mask(n, m2).to_string();
    }
  return std::nullopt;
}

std::optional<std::string> check_conjugacy(const Preorder& p) {
  OperatorTables t = tables_for(p);
  const std::size_t count = std::size_t{1} << p.size();
  for (std::uint64_t m = 0; m < count; ++m) {
    if (t.intr[mask_of(t.clo[m])] != t.clo[m]) return "I C X != C X at mask " + std::to_string(m);
    if (t.clo[mask_of(t.intr[m])] != t.intr[m]) return "C I X != I X at mask " + std::to_string(m);
  }
  return std::nullopt;
}

std::optional<std::string> check_duality(const Preorder& p) {
  const Preorder s = p.converse();
  const std::size_t count = std::size_t{1} << p.size();
  for (std::uint64_t m = 0; m < count; ++m) {
    Bits x = bits_from_mask(p.size(), m);
    if (closure(p, x) != interior(s, x.complement()).complement())
      return "C_R X != -I_S -X at " + x.to_string();
    if (closure(s, x) != interior(p, x.complement()).complement())
      return "C_S X != -I_R -X at " + x.to_string();
  }
  return std::nullopt;
}

std::optional<std::string> check_residuation(const Preorder& p) {
  OpensLattice lat = OpensLattice::enumerate(p);
  for (const Bits& g : lat.members())
    for (const Bits& h : lat.members()) {
      Bits r = heyting_implies(p, g, h);
      Bits d = brouwer_minus(p, g, h);
      if (!is_open(p, r)) return "implication left the opens at " + g.to_string() + "," + h.to_string();
      if (!is_open(p, d)) return "difference left the opens at " + g.to_string() + "," + h.to_string();
      for (const Bits& x : lat.members()) {
        if (((g & x).subset_of(h)) != x.subset_of(r))
          return "Heyting residuation fails at " + g.to_string() + "," + h.to_string() + "," + x.to_string();
        if (g.subset_of(h | x) != d.subset_of(x))
          return "Brouwer residuation fails at " + g.to_string() + "," + h.to_string() + "," + x.to_string();
      }
    }
  return std::nullopt;
}

std::optional<std::string> check_opens_closure(const Preorder& p) {
  OpensLattice lat = OpensLattice::enumerate(p);
  for (const Bits& g : lat.members()) {
    if (interior(p, g) != g) return "non-open member " + g.to_string();
    if (closure(p, g) != g) return "member not closed " + g.to_string();
  }
  if (p.size() <= 12) {
    // cross-oracle: fixpoint filter over the full powerset
    std::size_t fixpoints = 0;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << p.size()); ++m) {
      Bits x = bits_from_mask(p.size(), m);
      bool open = interior(p, x) == x;
      if (open != (closure(p, x) == x)) return "I-fixpoints differ from C-fixpoints at " + x.to_string();
      if (open) {
        ++fixpoints;
        if (!lat.contains(x)) return "fixpoint missing from union-closure: " + x.to_string();
      }
    }
    if (fixpoints != lat.size()) return "union-closure produced extra members";
  }
  for (const Bits& g : lat.members())
    for (const Bits& h : lat.members()) {
      if (!lat.contains(g | h)) return "opens not closed under union";
      if (!lat.contains(g & h)) return "opens not closed under intersection";
    }
  return std::nullopt;
}

std::optional<std::string> check_exception_property(const Preorder& p) {
  for (const PointInvolution& v : antitone_involutions(p)) {
    OpensAlgebra oa = opens_algebra(p, v);
    const FiniteAlgebra& a = oa.algebra;
    for (int g = 0; g < a.size(); ++g)
      for (int h = 0; h < a.size(); ++h) {
        int e = a.unary("neg", a.binary("impl", a.unary("neg", h), a.unary("neg", g)));
        if (e != a.binary("minus", g, h))
          return "E(G,H) != G -· H at " + oa.lattice.at(static_cast<std::size_t>(g)).to_string() + "," +
                 oa.lattice.at(static_cast<std::size_t>(h)).to_string();
      }
  }
  return std::nullopt;
}

// The weak-implication laws M0-M3 over the opens-indexed tables: the
// triple scan is pure table arithmetic once opens_algebra has
// materialized neg and wimpl.
std::optional<std::string> check_m_laws(const Preorder& p) {
  for (const PointInvolution& v : antitone_involutions(p)) {
    OpensAlgebra oa = opens_algebra(p, v);
    const FiniteAlgebra& a = oa.algebra;
    const bool kleene = v.kleene_for(p);
    for (int g = 0; g < a.size(); ++g) {
      if (a.binary("wimpl", g, g) != a.top()) return "M1 fails";
      const int ng = a.unary("neg", g);
      for (int h = 0; h < a.size(); ++h) {
        if (a.meet(g, a.binary("wimpl", g, h)) != a.meet(g, a.join(ng, h))) return "M2 fails";
        if (kleene && !a.leq(a.meet(g, ng), a.join(h, a.unary("neg", h)))) return "M0 fails";
        for (int k = 0; k < a.size(); ++k)
          if (!a.leq(a.binary("wimpl", g, a.binary("wimpl", h, k)), a.binary("wimpl", a.meet(g, h), k)))
            return "M3 fails";
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_monadic(const Preorder& p) {
  if (!p.is_equivalence()) return std::nullopt;  // vacuous off the equivalence case
  const std::size_t count = std::size_t{1} << p.size();
  if (closure(p, Bits(p.size())) != Bits(p.size())) return "E0 fails";
  for (std::uint64_t m1 = 0; m1 < count; ++m1) {
    Bits x = bits_from_mask(p.size(), m1);
    if (!x.subset_of(closure(p, x))) return "E1 fails at " + x.to_string();
    if (interior(p, x) != closure(p, x.complement()).complement())
      return "universal quantifier differs from interior at " + x.to_string();
    for (std::uint64_t m2 = 0; m2 < count; ++m2) {
      Bits y = bits_from_mask(p.size(), m2);
      if (closure(p, x & closure(p, y)) != (closure(p, x) & closure(p, y)))
        return "E2 fails at " + x.to_string() + "," + y.to_string();
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_deductive(const Preorder& p) {
  // (O_R, ⇒, Ob)
  OpensAlgebra oa = opens_algebra(p);
  FiniteAlgebra with_arrow = oa.algebra.with_table("dimpl", oa.algebra.table("impl"));
  if (auto rep = check_class(with_arrow, "deductive"); !rep.holds)
    return "opens deductive axiom " + rep.witness->axiom + " fails";
  // (P(Ob), ⊃, Ob): classical implication on the powerset
  const std::size_t n = p.size();
  if (n <= 5) {
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    auto imp = [&](std::uint64_t x, std::uint64_t y) { return (~x & full) | y; };
    for (std::uint64_t x = 0; x <= full; ++x)
      for (std::uint64_t y = 0; y <= full; ++y) {
        if (imp(x, imp(y, x)) != full) return "powerset I1 fails";
        for (std::uint64_t z = 0; z <= full; ++z)
          if (imp(imp(x, imp(y, z)), imp(imp(x, y), imp(x, z))) != full) return "powerset I2 fails";
      }
    for (std::uint64_t x = 0; x < full; ++x)
      if (imp(full, x) == full) return "powerset I3 fails";
  }
  return std::nullopt;
}

std::optional<std::string> check_monteiro_agree(const FiniteAlgebra& a) {
  MonteiroReport r = monteiro_equivalence(a);
  if (!r.agree) {
    std::ostringstream os;
    os << "(N) " << (r.n_holds ? "holds" : "fails") << " but interpolation " << (r.interp_holds ? "holds" : "fails");
    return os.str();
  }
  return std::nullopt;
}

std::optional<std::string> check_stone_laws(const FiniteAlgebra& a) {
  PrimeFilterSpace space = prime_spectrum(a);
  if (a.has("neg")) space = with_rasiowa_involution(std::move(space));
  StoneEmbedding emb = stone_map(space);
  for (const auto& l : emb.laws)
    if (!l.ok) return "law " + l.law + " fails";
  return std::nullopt;
}

std::optional<std::string> check_spectrum_m_laws(const FiniteAlgebra& a) {
  PrimeFilterSpace space = with_rasiowa_involution(prime_spectrum(a));
  if (!space.phi->kleene_for(space.order)) return "involution fails (K) on a Kleene input";
  return check_m_laws(space.order);
}

std::optional<std::string> check_interpolation(const FiniteAlgebra& a) {
  PrimeFilterSpace space = with_rasiowa_involution(prime_spectrum(a));
  InterpolationResult r = interpolation_check(space);
  if (!r.holds)
    return "no interpolant for point pair (" + std::to_string(r.witness->first) + "," +
           std::to_string(r.witness->second) + ")";
  return std::nullopt;
}

std::optional<std::string> check_opens_nelson(const FiniteAlgebra& a) {
  PrimeFilterSpace space = with_rasiowa_involution(prime_spectrum(a));
  ClassReport rep = opens_nelson_check(space);
  if (!rep.holds) return "spectrum opens fail Nelson axiom " + rep.witness->axiom;
  return std::nullopt;
}

const std::map<std::string, PreorderProperty>& preorder_properties() {
  static const std::map<std::string, PreorderProperty> props = {
      {"axioms", check_axioms},           {"conjugacy", check_conjugacy},
      {"duality", check_duality},         {"residuation", check_residuation},
      {"opens-closure", check_opens_closure}, {"exception", check_exception_property},
      {"m-laws", check_m_laws},           {"monadic", check_monadic},
      {"deductive", check_deductive},
  };
  return props;
}

const std::map<std::string, AlgebraProperty>& kleene_properties() {
  static const std::map<std::string, AlgebraProperty> props = {
      {"monteiro-agree", check_monteiro_agree},
      {"stone-laws", check_stone_laws},
      {"spectrum-m-laws", check_spectrum_m_laws},
  };
  return props;
}

const std::map<std::string, AlgebraProperty>& nelson_properties() {
  static const std::map<std::string, AlgebraProperty> props = {
      {"interpolation", check_interpolation},
      {"opens-nelson", check_opens_nelson},
      {"stone-laws", check_stone_laws},
  };
  return props;
}

std::optional<FiniteAlgebra> random_kleene_sym_heyting(int n, Rng& rng) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    Preorder p = random_preorder(static_cast<std::size_t>(n), rng);
    if (!p.is_antisymmetric()) continue;
    // order tables from the poset, if it is a bounded distributive lattice
    std::vector<int> meet(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
    std::vector<int> join = meet;
    bool lattice = true;
    for (int x = 0; x < n && lattice; ++x)
      for (int y = 0; y < n && lattice; ++y) {
        int glb = -1, lub = -1;
        for (int c = 0; c < n; ++c) {
          if (p.related(static_cast<std::size_t>(c), static_cast<std::size_t>(x)) &&
              p.related(static_cast<std::size_t>(c), static_cast<std::size_t>(y))) {
            bool greatest = true;
            for (int d = 0; d < n; ++d)
              if (p.related(static_cast<std::size_t>(d), static_cast<std::size_t>(x)) &&
                  p.related(static_cast<std::size_t>(d), static_cast<std::size_t>(y)) &&
                  !p.related(static_cast<std::size_t>(d), static_cast<std::size_t>(c)))
                greatest = false;
            if (greatest) glb = c;
          }
          if (p.related(static_cast<std::size_t>(x), static_cast<std::size_t>(c)) &&
              p.related(static_cast<std::size_t>(y), static_cast<std::size_t>(c))) {
            bool least = true;
            for (int d = 0; d < n; ++d)
              if (p.related(static_cast<std::size_t>(x), static_cast<std::size_t>(d)) &&
                  p.related(static_cast<std::size_t>(y), static_cast<std::size_t>(d)) &&
                  !p.related(static_cast<std::size_t>(c), static_cast<std::size_t>(d)))
                least = false;
            if (least) lub = c;
          }
        }
        if (glb < 0 || lub < 0) {
          lattice = false;
          break;
        }
        meet[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) + static_cast<std::size_t>(y)] = glb;
        join[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) + static_cast<std::size_t>(y)] = lub;
      }
    if (!lattice) continue;
    int bot = -1, top = -1;
    for (int x = 0; x < n; ++x) {
      bool least = true, greatest = true;
      for (int y = 0; y < n; ++y) {
        if (!p.related(static_cast<std::size_t>(x), static_cast<std::size_t>(y))) least = false;
        if (!p.related(static_cast<std::size_t>(y), static_cast<std::size_t>(x))) greatest = false;
      }
      if (least) bot = x;
      if (greatest) top = x;
    }
    if (bot < 0 || top < 0) continue;
    FiniteAlgebra lat = FiniteAlgebra::make(n, std::move(meet), std::move(join), bot, top);
    if (!lat.is_distributive()) continue;
    auto negs = demorgan_involutions(lat);
    std::vector<std::vector<int>> kleene;
    for (auto& neg : negs)
      if (check_class(lat.with_table("neg", neg), "kleene").holds) kleene.push_back(neg);
    if (kleene.empty()) continue;
    return with_heyting_tables(lat.with_table("neg", kleene[rng.below(kleene.size())]));
  }
  return std::nullopt;
}

FiniteAlgebra attach_derived_wimpl(const FiniteAlgebra& a) {
  const int n = a.size();
  std::vector<int> wimpl(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      wimpl[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) + static_cast<std::size_t>(y)] =
          a.binary("impl", x, a.join(a.unary("neg", x), y));
  return a.with_table("wimpl", std::move(wimpl));
}

bool derived_wimpl_is_nelson(const FiniteAlgebra& b) {
  for (int x = 0; x < b.size(); ++x)
    for (int y = 0; y < b.size(); ++y)
      for (int z = 0; z < b.size(); ++z)
        if (b.binary("wimpl", x, b.binary("wimpl", y, z)) != b.binary("wimpl", b.meet(x, y), z)) return false;
  return true;
}

}  // namespace

std::vector<std::string> search_families() { return {"preorders", "kleene-sym-heyting", "nelson"}; }

std::vector<std::string> search_properties(const std::string& family) {
  std::vector<std::string> out;
  if (family == "preorders")
    for (const auto& [k, v] : preorder_properties()) out.push_back(k);
  else if (family == "kleene-sym-heyting")
    for (const auto& [k, v] : kleene_properties()) out.push_back(k);
  else if (family == "nelson")
    for (const auto& [k, v] : nelson_properties()) out.push_back(k);
  else
    throw InputError("unknown family '" + family + "'");
  return out;
}

SearchResult run_search(const SearchConfig& cfg) {
  SearchResult result;
  result.config = cfg;
  Rng rng(cfg.seed);

  if (cfg.family == "preorders") {
    auto it = preorder_properties().find(cfg.property);
    if (it == preorder_properties().end())
      throw InputError("unknown property '" + cfg.property + "' for family preorders");
    // these two scan every antitone involution against the opens lattice;
    // past six points the worst structures take minutes
    if ((cfg.property == "m-laws" || cfg.property == "exception") && cfg.max_n > 6)
      throw InputError("property '" + cfg.property + "' is exhaustive over involutions and opens; supported up to --max-n 6");
    const PreorderProperty& prop = it->second;
    auto visit = [&](const Preorder& p) {
      ++result.checked;
      if (auto detail = prop(p)) result.counterexamples.push_back({describe(p), *detail});
    };
    for (std::size_t n = 1; n <= std::min<std::size_t>(cfg.max_n, kMaxExhaustivePreorder); ++n)
      for_each_preorder(n, visit);
    for (std::size_t n = kMaxExhaustivePreorder + 1; n <= cfg.max_n; ++n)
      for (std::size_t i = 0; i < cfg.samples; ++i) visit(random_preorder(n, rng));
    return result;
  }

  const std::map<std::string, AlgebraProperty>* props = nullptr;
  if (cfg.family == "kleene-sym-heyting")
    props = &kleene_properties();
  else if (cfg.family == "nelson")
    props = &nelson_properties();
  else
    throw InputError("unknown family '" + cfg.family + "'");

  auto it = props->find(cfg.property);
  if (it == props->end())
    throw InputError("unknown property '" + cfg.property + "' for family " + cfg.family);
  const AlgebraProperty& prop = it->second;
  const bool want_nelson = cfg.family == "nelson";

  auto visit = [&](const FiniteAlgebra& a) {
    ++result.checked;
    if (auto detail = prop(a)) result.counterexamples.push_back({describe(a), *detail});
  };

  const int exhaustive_cap = std::min<int>(static_cast<int>(cfg.max_n), kMaxExhaustiveAlgebra);
  if (want_nelson) {
    for (const FiniteAlgebra& a : nelson_algebras_upto(exhaustive_cap)) visit(a);
  } else {
    for (const FiniteAlgebra& a : kleene_sym_heyting_upto(exhaustive_cap)) visit(a);
  }
  for (int n = kMaxExhaustiveAlgebra + 1; n <= static_cast<int>(cfg.max_n); ++n)
    for (std::size_t i = 0; i < cfg.samples; ++i) {
      auto a = random_kleene_sym_heyting(n, rng);
      if (!a) continue;
      if (want_nelson) {
        FiniteAlgebra b = attach_derived_wimpl(*a);
        if (derived_wimpl_is_nelson(b)) visit(b);
      } else {
        visit(*a);
      }
    }
  return result;
}

}  // namespace rauszer
