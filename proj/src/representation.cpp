#include "rauszer/representation.hpp"

#include <algorithm>

namespace rauszer {

PrimeFilterSpace prime_spectrum(const FiniteAlgebra& a, std::size_t filter_cap) {
  if (auto w = a.distributivity_witness())
    throw InputError("lattice is not distributive: witness (" + std::to_string((*w)[0]) + "," +
                     std::to_string((*w)[1]) + "," + std::to_string((*w)[2]) + ")");
  PrimeFilterSpace space{a, filters(a, FilterKind::prime, filter_cap).members, Preorder::identity(0), {}, {}, {}};
  const std::size_t k = space.points.size();
  std::vector<Bits> up(k, Bits(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (space.points[i].subset_of(space.points[j])) up[i].set(j);
  space.order = Preorder::from_up_sets(std::move(up));
  return space;
}

PointInvolution rasiowa_involution(const PrimeFilterSpace& space) {
  const FiniteAlgebra& a = space.algebra;
  const auto& neg = a.table("neg");
  const std::size_t k = space.points.size();

  std::vector<std::size_t> perm(k);
  for (std::size_t i = 0; i < k; ++i) {
    Bits neg_image(static_cast<std::size_t>(a.size()));
    space.points[i].for_each([&](std::size_t p) { neg_image.set(static_cast<std::size_t>(neg[p])); });
    Bits phi_set = neg_image.complement();
    auto it = std::lower_bound(space.points.begin(), space.points.end(), phi_set);
    if (it == space.points.end() || *it != phi_set)
      throw PreconditionError("φ of point " + space.points[i].to_string() + " is " + phi_set.to_string() +
                              ", which is not a prime filter; the negation table is not De Morgan");
    perm[i] = static_cast<std::size_t>(it - space.points.begin());
  }

  for (std::size_t i = 0; i < k; ++i)
    if (perm[perm[i]] != i)
      throw PreconditionError("φ is not involutive at point " + space.points[i].to_string() +
                              "; the negation table is not De Morgan");
  PointInvolution phi(std::move(perm));
  if (!phi.antitone_for(space.order))
    throw PreconditionError("φ is not antitone on the spectrum; the negation table is not De Morgan");

  bool kleene = check_class(a, "kleene").holds;
  if (kleene && !phi.kleene_for(space.order))
    throw ConsistencyError("Kleene input but φ fails P ⊆ φ(P) or φ(P) ⊆ P at some point");
  return phi;
}

PrimeFilterSpace with_rasiowa_involution(PrimeFilterSpace space) {
  PointInvolution phi = rasiowa_involution(space);
  const std::size_t k = space.points.size();

  if (space.algebra.has("wimpl") && check_class(space.algebra, "nelson").holds) {
    Bits ob1(k), ob2(k);
    for (std::size_t i = 0; i < k; ++i)
      if (is_deductive_system(space.algebra, "wimpl", space.points[i])) ob1.set(i);
    ob1.for_each([&](std::size_t i) { ob2.set(phi(i)); });
    if ((ob1 | ob2) != Bits::all(k))
      throw ConsistencyError("Nelson spectrum points not exhausted by Ob1 ∪ Ob2");
    bool kinds_ok = true;
    ob1.for_each([&](std::size_t i) {
      if (!space.order.related(i, phi(i))) kinds_ok = false;
    });
    ob2.for_each([&](std::size_t i) {
      if (!space.order.related(phi(i), i)) kinds_ok = false;
    });
    if (!kinds_ok) throw ConsistencyError("Nelson kind order laws violated on the spectrum");
    space.ob1 = std::move(ob1);
    space.ob2 = std::move(ob2);
  }
  space.phi = std::move(phi);
  return space;
}

bool StoneEmbedding::all_ok() const {
  for (const auto& l : laws)
    if (!l.ok) return false;
  return true;
}

const LawResult* StoneEmbedding::find(std::string_view law) const {
  for (const auto& l : laws)
    if (l.law == law) return &l;
  return nullptr;
}

namespace {

// Scans elements (arity 1) or pairs (arity 2); records the first failure.
template <typename Fn>
LawResult scan_law(const FiniteAlgebra& a, std::string law, int arity, Fn&& fn) {
  LawResult r{std::move(law), true, {}};
  if (arity == 0) {
    if (!fn(0, 0)) r = LawResult{r.law, false, {}};
    return r;
  }
  for (int x = 0; x < a.size(); ++x) {
    for (int y = 0; y < (arity == 2 ? a.size() : 1); ++y) {
      if (!fn(x, y)) {
        r.ok = false;
        r.witness = arity == 2 ? std::vector<int>{x, y} : std::vector<int>{x};
        return r;
      }
    }
  }
  return r;
}

}  // namespace

StoneEmbedding stone_map(const PrimeFilterSpace& space) {
  const FiniteAlgebra& a = space.algebra;
  const Preorder& r = space.order;
  const std::size_t k = space.points.size();

  StoneEmbedding emb;
  emb.h.reserve(static_cast<std::size_t>(a.size()));
  for (int x = 0; x < a.size(); ++x) {
    Bits hx(k);
    for (std::size_t i = 0; i < k; ++i)
      if (space.points[i].test(static_cast<std::size_t>(x))) hx.set(i);
    emb.h.push_back(std::move(hx));
  }
  auto h = [&](int x) -> const Bits& { return emb.h[static_cast<std::size_t>(x)]; };

  emb.laws.push_back(scan_law(a, "open", 1, [&](int x, int) { return is_open(r, h(x)); }));
  emb.laws.push_back(scan_law(a, "h0-injective", 2, [&](int x, int y) { return x == y || h(x) != h(y); }));
  emb.laws.push_back(scan_law(a, "h0-increasing", 2, [&](int x, int y) {
    return !a.leq(x, y) || h(x).subset_of(h(y));
  }));
  emb.laws.push_back(scan_law(a, "h0-top", 0, [&](int, int) { return h(a.top()) == Bits::all(k); }));
  emb.laws.push_back(scan_law(a, "h1-meet", 2, [&](int x, int y) { return h(a.meet(x, y)) == (h(x) & h(y)); }));
  emb.laws.push_back(scan_law(a, "h1-join", 2, [&](int x, int y) { return h(a.join(x, y)) == (h(x) | h(y)); }));

  if (a.has("impl")) {
    emb.laws.push_back(scan_law(a, "h2", 1, [&](int x, int) { return h(a.hneg(x)) == heyting_not(r, h(x)); }));
    emb.laws.push_back(scan_law(a, "h3", 2, [&](int x, int y) {
      return h(a.binary("impl", x, y)) == heyting_implies(r, h(x), h(y));
    }));
  }
  if (a.has("minus")) {
    emb.laws.push_back(scan_law(a, "h4", 2, [&](int x, int y) {
      return h(a.binary("minus", x, y)) == brouwer_minus(r, h(x), h(y));
    }));
  }
  if (a.has("neg")) {
    if (!space.phi) throw PreconditionError("input has a negation table but the space carries no involution");
    const PointInvolution& phi = *space.phi;
    emb.laws.push_back(scan_law(a, "sim", 1, [&](int x, int) {
      return h(a.unary("neg", x)) == demorgan_complement(phi, h(x));
    }));
    if (a.has("wimpl")) {
      emb.laws.push_back(scan_law(a, "wimpl", 2, [&](int x, int y) {
        return h(a.binary("wimpl", x, y)) == weak_implies(r, phi, h(x), h(y));
      }));
    }
  }
  if (a.has("impl") && a.has("minus") && check_class(a, "lukasiewicz3").holds) {
    const Preorder s = r.converse();
    emb.laws.push_back(scan_law(a, "t-image", 1, [&](int x, int) {
      return h(a.hneg(a.bneg(x))) == interior(r, interior(s, h(x)));
    }));
  }

  // A law that its theorem guarantees cannot fail on an input whose class
  // check passed; if it does, the workbench itself is broken, which is a
  // different condition from a user table that simply is not a residual.
  for (const auto& l : emb.laws) {
    if (l.ok) continue;
    std::string guarantee;  // empty: holds for every distributive input
    if (l.law == "h2" || l.law == "h3") guarantee = "heyting";
    else if (l.law == "h4") guarantee = "brouwer";
    else if (l.law == "sim") guarantee = "demorgan";
    else if (l.law == "wimpl") guarantee = "nelson";
    if (guarantee.empty() || check_class(a, guarantee).holds)
      throw ConsistencyError("embedding law " + l.law + " failed although its hypotheses hold");
  }
  return emb;
}

InterpolationResult interpolation_check(const PrimeFilterSpace& space) {
  if (!space.phi) throw PreconditionError("interpolation check needs the involution; run rasiowa_involution first");
  const PointInvolution& phi = *space.phi;
  const Preorder& ord = space.order;
  const std::size_t k = space.points.size();

  for (std::size_t i = 0; i < k; ++i) {
    if (!ord.related(i, phi(i))) continue;  // (α)
    for (std::size_t j = 0; j < k; ++j) {
      if (!ord.related(j, phi(j))) continue;  // (β)
      if (!ord.related(i, phi(j))) continue;  // (γ)
      // (δ) follows from (γ) and antitonicity; a failure here means φ is broken.
      if (!ord.related(j, phi(i)))
        throw ConsistencyError("derived hypothesis Q ⊆ φ(P) failed for an eligible pair");
      bool found = false;
      for (std::size_t m = 0; m < k && !found; ++m)
        if (ord.related(i, m) && ord.related(j, m) && ord.related(m, phi(i)) && ord.related(m, phi(j)))
          found = true;
      if (!found) return InterpolationResult{false, std::make_pair(i, j)};
    }
  }
  return InterpolationResult{true, {}};
}

MonteiroReport monteiro_equivalence(const FiniteAlgebra& a) {
  if (!a.has("neg")) throw MissingTableError("monteiro equivalence needs a 'neg' table");
  if (auto rep = check_class(a, "kleene"); !rep.holds)
    throw PreconditionError("input is not a Kleene algebra: axiom " + rep.witness->axiom + " fails");

  const int n = a.size();
  std::vector<int> wimpl(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto v = relative_pseudocomplement(a, x, a.join(a.unary("neg", x), y));
      if (!v)
        throw PreconditionError("intuitionistic implication missing at pair (" + std::to_string(x) + "," +
                                std::to_string(y) + ")");
      wimpl[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) + static_cast<std::size_t>(y)] = *v;
    }
  FiniteAlgebra b = a.with_table("wimpl", wimpl);

  MonteiroReport report;
  report.n_holds = true;
  for (int x = 0; x < n && report.n_holds; ++x)
    for (int y = 0; y < n && report.n_holds; ++y)
      for (int z = 0; z < n; ++z)
        if (!b.leq(b.binary("wimpl", b.meet(x, y), z), b.binary("wimpl", x, b.binary("wimpl", y, z)))) {
          report.n_holds = false;
          report.n_witness = std::array<int, 3>{x, y, z};
          break;
        }

  PrimeFilterSpace space = with_rasiowa_involution(prime_spectrum(b));
  InterpolationResult interp = interpolation_check(space);
  report.interp_holds = interp.holds;
  report.interp_witness = interp.witness;
  report.agree = report.n_holds == report.interp_holds;
  return report;
}

OpensAlgebra opens_algebra(const Preorder& r, const std::optional<PointInvolution>& v) {
  OpensLattice lat = OpensLattice::enumerate(r);
  const int m = static_cast<int>(lat.size());
  auto index = [&](const Bits& g) {
    auto i = lat.index_of(g);
    if (!i) throw ConsistencyError("operation left the opens lattice at " + g.to_string());
    return static_cast<int>(*i);
  };

  const std::size_t mm = static_cast<std::size_t>(m) * static_cast<std::size_t>(m);
  std::vector<int> meet(mm), join(mm), impl(mm), minus(mm);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const Bits &g = lat.at(static_cast<std::size_t>(i)), &h = lat.at(static_cast<std::size_t>(j));
      const std::size_t at = static_cast<std::size_t>(i) * static_cast<std::size_t>(m) + static_cast<std::size_t>(j);
      meet[at] = index(g & h);
      join[at] = index(g | h);
      impl[at] = index(heyting_implies(r, g, h));
      minus[at] = index(brouwer_minus(r, g, h));
    }
  std::map<std::string, std::vector<int>> ops{{"impl", std::move(impl)}, {"minus", std::move(minus)}};

  if (v) {
    if (!v->antitone_for(r)) throw PreconditionError("involution is not antitone for this preorder");
    std::vector<int> neg(static_cast<std::size_t>(m));
    std::vector<int> wimpl(mm);
    for (int i = 0; i < m; ++i) {
      neg[static_cast<std::size_t>(i)] = index(demorgan_complement(*v, lat.at(static_cast<std::size_t>(i))));
      for (int j = 0; j < m; ++j)
        wimpl[static_cast<std::size_t>(i) * static_cast<std::size_t>(m) + static_cast<std::size_t>(j)] =
            index(weak_implies(r, *v, lat.at(static_cast<std::size_t>(i)), lat.at(static_cast<std::size_t>(j))));
    }
    ops["neg"] = std::move(neg);
    ops["wimpl"] = std::move(wimpl);
  }

  // ∅ sorts first and the full set last under the mask order.
  FiniteAlgebra alg = FiniteAlgebra::make(m, std::move(meet), std::move(join), 0, m - 1, std::move(ops));
  return OpensAlgebra{std::move(lat), std::move(alg)};
}

ClassReport opens_nelson_check(const PrimeFilterSpace& space) {
  if (!space.phi) throw PreconditionError("opens check needs the involution; run rasiowa_involution first");
  InterpolationResult interp = interpolation_check(space);
  if (!interp.holds)
    throw PreconditionError("involution lacks the interpolation property; witness pair (" +
                            std::to_string(interp.witness->first) + "," + std::to_string(interp.witness->second) + ")");
  OpensAlgebra oa = opens_algebra(space.order, space.phi);
  return check_class(oa.algebra, "nelson");
}

}  // namespace rauszer
