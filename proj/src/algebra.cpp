#include "rauszer/algebra.hpp"

#include <algorithm>
#include <cstdint>

namespace rauszer {

namespace {

void check_table_entries(int n, const std::string& name, const std::vector<int>& t, std::size_t want) {
  if (t.size() != want)
    throw InputError("table '" + name + "' has " + std::to_string(t.size()) + " entries, expected " + std::to_string(want));
  for (int v : t)
    if (v < 0 || v >= n) throw InputError("table '" + name + "' entry " + std::to_string(v) + " out of range");
}

bool known_unary(const std::string& s) {
  for (auto* n : FiniteAlgebra::kUnaryNames)
    if (s == n) return true;
  return false;
}

bool known_binary(const std::string& s) {
  for (auto* n : FiniteAlgebra::kBinaryNames)
    if (s == n) return true;
  return false;
}

}  // namespace

FiniteAlgebra FiniteAlgebra::make(int size, std::vector<int> meet, std::vector<int> join, int bot, int top,
                                  std::map<std::string, std::vector<int>> ops) {
  if (size < 1) throw InputError("carrier must be nonempty");
  if (static_cast<std::size_t>(size) > kMaxUniverse) throw CapacityError("carrier size exceeds capacity");
  const std::size_t nn = static_cast<std::size_t>(size) * static_cast<std::size_t>(size);
  check_table_entries(size, "meet", meet, nn);
  check_table_entries(size, "join", join, nn);
  if (bot < 0 || bot >= size || top < 0 || top >= size) throw InputError("bot/top out of range");

  FiniteAlgebra a;
  a.n_ = size;
  a.meet_ = std::move(meet);
  a.join_ = std::move(join);
  a.bot_ = bot;
  a.top_ = top;

  for (int x = 0; x < size; ++x) {
    if (a.meet(x, x) != x) throw LatticeLawError("idempotence violated by meet", "idempotence-meet", {x});
    if (a.join(x, x) != x) throw LatticeLawError("idempotence violated by join", "idempotence-join", {x});
  }
  for (int x = 0; x < size; ++x)
    for (int y = 0; y < size; ++y) {
      if (a.meet(x, y) != a.meet(y, x)) throw LatticeLawError("commutativity violated by meet", "commutativity-meet", {x, y});
      if (a.join(x, y) != a.join(y, x)) throw LatticeLawError("commutativity violated by join", "commutativity-join", {x, y});
      if (a.meet(x, a.join(x, y)) != x) throw LatticeLawError("absorption violated (meet over join)", "absorption-meet", {x, y});
      if (a.join(x, a.meet(x, y)) != x) throw LatticeLawError("absorption violated (join over meet)", "absorption-join", {x, y});
    }
  for (int x = 0; x < size; ++x)
    for (int y = 0; y < size; ++y)
      for (int z = 0; z < size; ++z) {
        if (a.meet(a.meet(x, y), z) != a.meet(x, a.meet(y, z)))
          throw LatticeLawError("associativity violated by meet", "associativity-meet", {x, y, z});
        if (a.join(a.join(x, y), z) != a.join(x, a.join(y, z)))
          throw LatticeLawError("associativity violated by join", "associativity-join", {x, y, z});
      }
  for (int x = 0; x < size; ++x) {
    if (a.meet(bot, x) != bot) throw LatticeLawError("bot is not the least element", "bot-least", {x});
    if (a.meet(x, top) != x) throw LatticeLawError("top is not the greatest element", "top-greatest", {x});
  }

  for (auto& [name, t] : ops) {
    if (known_unary(name))
      check_table_entries(size, name, t, static_cast<std::size_t>(size));
    else if (known_binary(name))
      check_table_entries(size, name, t, nn);
    else
      throw InputError("unknown operation table '" + name + "'");
  }
  a.ops_ = std::move(ops);

  // Explicit negation tables must match their defining formulas.
  auto check_derived = [&](const char* un, const char* bin, auto derive) {
    if (!a.has(un) || !a.has(bin)) return;
    for (int x = 0; x < size; ++x)
      if (a.unary(un, x) != derive(x))
        throw InputError(std::string("table '") + un + "' disagrees with value derived from '" + bin + "' at " + std::to_string(x));
  };
  check_derived("hneg", "impl", [&](int x) { return a.binary("impl", x, bot); });
  check_derived("bneg", "minus", [&](int x) { return a.binary("minus", top, x); });
  check_derived("wneg", "wimpl", [&](int x) { return a.binary("wimpl", x, bot); });

  return a;
}

const std::vector<int>& FiniteAlgebra::table(std::string_view name) const {
  auto it = ops_.find(std::string(name));
  if (it == ops_.end()) throw MissingTableError("operation table '" + std::string(name) + "' is not present");
  return it->second;
}

int FiniteAlgebra::hneg(int a) const { return has("hneg") ? unary("hneg", a) : binary("impl", a, bot_); }
int FiniteAlgebra::bneg(int a) const { return has("bneg") ? unary("bneg", a) : binary("minus", top_, a); }
int FiniteAlgebra::wneg(int a) const { return has("wneg") ? unary("wneg", a) : binary("wimpl", a, bot_); }

std::optional<std::array<int, 3>> FiniteAlgebra::distributivity_witness() const {
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      for (int c = 0; c < n_; ++c)
        if (meet(a, join(b, c)) != join(meet(a, b), meet(a, c))) return std::array<int, 3>{a, b, c};
  return std::nullopt;
}

std::optional<int> FiniteAlgebra::boolean_complement(int a) const {
  std::optional<int> found;
  for (int b = 0; b < n_; ++b)
    if (meet(a, b) == bot_ && join(a, b) == top_) {
      if (found) return std::nullopt;  // not unique: not a Boolean complement
      found = b;
    }
  return found;
}

FiniteAlgebra FiniteAlgebra::with_table(const std::string& name, std::vector<int> tbl) const {
  auto ops = ops_;
  ops[name] = std::move(tbl);
  return make(n_, meet_, join_, bot_, top_, std::move(ops));
}

// ---------------------------------------------------------------------------
// class checking

namespace {

struct Axiom {
  const char* name;
  int arity;
  std::vector<const char*> needs;
  bool (*eval)(const FiniteAlgebra&, const int*);
};

const std::vector<Axiom>& axiom_registry() {
  static const std::vector<Axiom> axioms = {
      {"distributivity", 3, {}, [](const FiniteAlgebra& a, const int* t) {
         return a.meet(t[0], a.join(t[1], t[2])) == a.join(a.meet(t[0], t[1]), a.meet(t[0], t[2]));
       }},
      {"DM1", 1, {"neg"}, [](const FiniteAlgebra& a, const int* t) { return a.unary("neg", a.unary("neg", t[0])) == t[0]; }},
      {"DM2", 2, {"neg"}, [](const FiniteAlgebra& a, const int* t) {
         return a.unary("neg", a.meet(t[0], t[1])) == a.join(a.unary("neg", t[0]), a.unary("neg", t[1]));
       }},
      {"K", 2, {"neg"}, [](const FiniteAlgebra& a, const int* t) {
         return a.leq(a.meet(t[0], a.unary("neg", t[0])), a.join(t[1], a.unary("neg", t[1])));
       }},
      {"H1", 2, {"impl"}, [](const FiniteAlgebra& a, const int* t) {
         return a.leq(a.meet(t[0], a.binary("impl", t[0], t[1])), t[1]);
       }},
      {"H2", 3, {"impl"}, [](const FiniteAlgebra& a, const int* t) {
         return !(a.leq(a.meet(t[0], t[2]), t[1]) && !a.leq(t[2], a.binary("impl", t[0], t[1])));
       }},
      {"B1", 2, {"minus"}, [](const FiniteAlgebra& a, const int* t) {
         return a.leq(t[0], a.join(t[1], a.binary("minus", t[0], t[1])));
       }},
      {"B2", 3, {"minus"}, [](const FiniteAlgebra& a, const int* t) {
         return !(a.leq(t[0], a.join(t[1], t[2])) && !a.leq(a.binary("minus", t[0], t[1]), t[2]));
       }},
      {"SH2", 1, {"neg"}, [](const FiniteAlgebra& a, const int* t) { return a.unary("neg", a.unary("neg", t[0])) == t[0]; }},
      {"SH3", 2, {"neg"}, [](const FiniteAlgebra& a, const int* t) {
         return a.unary("neg", a.meet(t[0], t[1])) == a.join(a.unary("neg", t[0]), a.unary("neg", t[1]));
       }},
      {"N1", 1, {"wimpl"}, [](const FiniteAlgebra& a, const int* t) { return a.binary("wimpl", t[0], t[0]) == a.top(); }},
      {"N2", 2, {"neg", "wimpl"}, [](const FiniteAlgebra& a, const int* t) {
         return a.meet(t[0], a.binary("wimpl", t[0], t[1])) == a.meet(t[0], a.join(a.unary("neg", t[0]), t[1]));
       }},
      {"N3", 3, {"wimpl"}, [](const FiniteAlgebra& a, const int* t) {
         return a.binary("wimpl", t[0], a.binary("wimpl", t[1], t[2])) == a.binary("wimpl", a.meet(t[0], t[1]), t[2]);
       }},
      {"neg-top", 0, {"neg"}, [](const FiniteAlgebra& a, const int*) { return a.unary("neg", a.top()) == a.bot(); }},
      {"T", 2, {"impl", "minus"}, [](const FiniteAlgebra& a, const int* t) {
         return a.join(a.binary("impl", t[0], t[1]), a.binary("impl", t[1], a.hneg(a.bneg(t[0])))) == a.top();
       }},
      {"boolean-complement", 1, {}, [](const FiniteAlgebra& a, const int* t) { return a.boolean_complement(t[0]).has_value(); }},
      {"E0", 0, {"quant"}, [](const FiniteAlgebra& a, const int*) { return a.unary("quant", a.bot()) == a.bot(); }},
      {"E1", 1, {"quant"}, [](const FiniteAlgebra& a, const int* t) { return a.meet(t[0], a.unary("quant", t[0])) == t[0]; }},
      {"E2", 2, {"quant"}, [](const FiniteAlgebra& a, const int* t) {
         return a.unary("quant", a.meet(t[0], a.unary("quant", t[1]))) == a.meet(a.unary("quant", t[0]), a.unary("quant", t[1]));
       }},
      {"I1", 2, {"dimpl"}, [](const FiniteAlgebra& a, const int* t) {
         return a.binary("dimpl", t[0], a.binary("dimpl", t[1], t[0])) == a.top();
       }},
      {"I2", 3, {"dimpl"}, [](const FiniteAlgebra& a, const int* t) {
         const int x = t[0], y = t[1], z = t[2];
         return a.binary("dimpl", a.binary("dimpl", x, a.binary("dimpl", y, z)),
                         a.binary("dimpl", a.binary("dimpl", x, y), a.binary("dimpl", x, z))) == a.top();
       }},
      {"I3", 1, {"dimpl"}, [](const FiniteAlgebra& a, const int* t) {
         return !(a.binary("dimpl", a.top(), t[0]) == a.top() && t[0] != a.top());
       }},
  };
  return axioms;
}

const Axiom& find_axiom(std::string_view name) {
  for (const auto& ax : axiom_registry())
    if (name == ax.name) return ax;
  throw InputError("unknown axiom '" + std::string(name) + "'");
}

const std::map<std::string, std::vector<const char*>>& class_registry() {
  static const std::map<std::string, std::vector<const char*>> classes = {
      {"distributive", {"distributivity"}},
      {"demorgan", {"distributivity", "DM1", "DM2"}},
      {"kleene", {"distributivity", "DM1", "DM2", "K"}},
      {"heyting", {"H1", "H2"}},
      {"brouwer", {"B1", "B2"}},
      {"hb", {"H1", "H2", "B1", "B2"}},
      {"symmetric-heyting", {"H1", "H2", "SH2", "SH3"}},
      {"nelson", {"distributivity", "DM1", "DM2", "K", "neg-top", "N1", "N2", "N3"}},
      {"lukasiewicz3", {"H1", "H2", "B1", "B2", "T"}},
      {"monadic", {"distributivity", "boolean-complement", "E0", "E1", "E2"}},
      {"deductive", {"I1", "I2", "I3"}},
  };
  return classes;
}

// First lexicographic tuple failing the axiom, if any.
std::optional<std::vector<int>> scan_axiom(const FiniteAlgebra& a, const Axiom& ax) {
  std::vector<int> t(static_cast<std::size_t>(ax.arity), 0);
  if (ax.arity == 0) {
    if (!ax.eval(a, t.data())) return t;
    return std::nullopt;
  }
  while (true) {
    if (!ax.eval(a, t.data())) return t;
    int k = ax.arity - 1;
    while (k >= 0 && t[static_cast<std::size_t>(k)] == a.size() - 1) t[static_cast<std::size_t>(k--)] = 0;
    if (k < 0) return std::nullopt;
    ++t[static_cast<std::size_t>(k)];
  }
}

}  // namespace

const std::vector<std::string>& known_classes() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, _] : class_registry()) v.push_back(name);
    return v;
  }();
  return names;
}

ClassReport check_class(const FiniteAlgebra& a, std::string_view cls) {
  auto it = class_registry().find(std::string(cls));
  if (it == class_registry().end()) throw InputError("unknown class '" + std::string(cls) + "'");

  std::string missing;
  for (const char* ax_name : it->second)
    for (const char* need : find_axiom(ax_name).needs)
      if (!a.has(need) && missing.find(need) == std::string::npos) {
        if (!missing.empty()) missing += ", ";
        missing += need;
      }
  if (!missing.empty())
    throw MissingTableError("class '" + std::string(cls) + "' needs missing table(s): " + missing);

  ClassReport report;
  report.class_name = std::string(cls);
  for (const char* ax_name : it->second) {
    const Axiom& ax = find_axiom(ax_name);
    if (auto tuple = scan_axiom(a, ax)) {
      report.holds = false;
      report.witness = Witness{ax.name, *tuple};
      return report;
    }
  }
  report.holds = true;
  return report;
}

bool eval_axiom(const FiniteAlgebra& a, std::string_view axiom, const std::vector<int>& tuple) {
  const Axiom& ax = find_axiom(axiom);
  if (tuple.size() != static_cast<std::size_t>(ax.arity))
    throw InputError("axiom '" + std::string(axiom) + "' expects " + std::to_string(ax.arity) + " elements");
  for (int v : tuple)
    if (v < 0 || v >= a.size()) throw InputError("witness element out of range");
  return ax.eval(a, tuple.data());
}

// ---------------------------------------------------------------------------
// residuals

namespace {

void check_element(const FiniteAlgebra& a, int x) {
  if (x < 0 || x >= a.size()) throw InputError("element " + std::to_string(x) + " out of range");
}

}  // namespace

std::optional<int> relative_pseudocomplement(const FiniteAlgebra& a, int x, int y) {
  check_element(a, x);
  check_element(a, y);
  // Greatest element of {c : x∧c ≤ y}, when that set has one. The other
  // half of the residuation law follows from monotonicity of meet.
  std::vector<int> cand;
  for (int c = 0; c < a.size(); ++c)
    if (a.leq(a.meet(x, c), y)) cand.push_back(c);
  for (int g : cand) {
    bool greatest = true;
    for (int c : cand)
      if (!a.leq(c, g)) {
        greatest = false;
        break;
      }
    if (greatest) return g;
  }
  return std::nullopt;
}

std::optional<int> pseudo_difference(const FiniteAlgebra& a, int x, int y) {
  check_element(a, x);
  check_element(a, y);
  std::vector<int> cand;
  for (int c = 0; c < a.size(); ++c)
    if (a.leq(x, a.join(y, c))) cand.push_back(c);
  for (int l : cand) {
    bool least = true;
    for (int c : cand)
      if (!a.leq(l, c)) {
        least = false;
        break;
      }
    if (least) return l;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// filters

bool is_filter(const FiniteAlgebra& a, const Bits& f) {
  if (f.universe() != static_cast<std::size_t>(a.size())) throw InputError("filter universe mismatch");
  if (!f.test(static_cast<std::size_t>(a.top()))) return false;
  bool ok = true;
  f.for_each([&](std::size_t x) {
    f.for_each([&](std::size_t y) {
      if (!f.test(static_cast<std::size_t>(a.meet(static_cast<int>(x), static_cast<int>(y))))) ok = false;
    });
    for (int b = 0; b < a.size(); ++b)
      if (a.leq(static_cast<int>(x), b) && !f.test(static_cast<std::size_t>(b))) ok = false;
  });
  return ok;
}

bool is_prime_filter(const FiniteAlgebra& a, const Bits& f) {
  if (!is_filter(a, f)) return false;
  if (f.count() == static_cast<std::size_t>(a.size())) return false;  // (p1)
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < a.size(); ++y)
      if (f.test(static_cast<std::size_t>(a.join(x, y))) && !f.test(static_cast<std::size_t>(x)) &&
          !f.test(static_cast<std::size_t>(y)))
        return false;
  return true;
}

std::vector<int> join_irreducibles(const FiniteAlgebra& a) {
  std::vector<int> out;
  for (int j = 0; j < a.size(); ++j) {
    if (j == a.bot()) continue;
    bool irr = true;
    for (int x = 0; x < a.size() && irr; ++x)
      for (int y = 0; y < a.size() && irr; ++y)
        if (a.join(x, y) == j && x != j && y != j) irr = false;
    if (irr) out.push_back(j);
  }
  return out;
}

FilterSet filters(const FiniteAlgebra& a, FilterKind kind, std::size_t cap) {
  const int n = a.size();
  if (static_cast<std::size_t>(n) > cap)
    throw CapacityError("filter enumeration capacity exceeded: size " + std::to_string(n) + " > cap " + std::to_string(cap));

  // Masks of principal up-sets, for the (f3) check.
  std::vector<std::uint64_t> upmask(static_cast<std::size_t>(n), 0);
  for (int x = 0; x < n; ++x)
    for (int b = 0; b < n; ++b)
      if (a.leq(x, b)) upmask[static_cast<std::size_t>(x)] |= std::uint64_t{1} << b;

  const std::uint64_t full = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  FilterSet out{kind, {}};
  for (std::uint64_t m = 0; m <= full; ++m) {
    if (!((m >> a.top()) & 1)) continue;
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      if (!((m >> x) & 1)) continue;
      if ((upmask[static_cast<std::size_t>(x)] & ~m) != 0) ok = false;
      for (int y = x; y < n && ok; ++y)
        if (((m >> y) & 1) && !((m >> a.meet(x, y)) & 1)) ok = false;
    }
    if (!ok) continue;
    if (kind == FilterKind::prime) {
      if (m == full) continue;
      for (int x = 0; x < n && ok; ++x)
        for (int y = x; y < n && ok; ++y)
          if (((m >> a.join(x, y)) & 1) && !((m >> x) & 1) && !((m >> y) & 1)) ok = false;
      if (!ok) continue;
    }
    Bits b(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x)
      if ((m >> x) & 1) b.set(static_cast<std::size_t>(x));
    out.members.push_back(std::move(b));
    if (m == full) break;
  }
  std::sort(out.members.begin(), out.members.end());

  if (kind == FilterKind::prime && a.is_distributive()) {
    // Birkhoff shortcut: prime filters of a distributive lattice are the
    // principal up-sets of the join-irreducibles.
    std::vector<Bits> shortcut;
    for (int j : join_irreducibles(a)) {
      Bits b(static_cast<std::size_t>(n));
      for (int x = 0; x < n; ++x)
        if (a.leq(j, x)) b.set(static_cast<std::size_t>(x));
      shortcut.push_back(std::move(b));
    }
    std::sort(shortcut.begin(), shortcut.end());
    if (shortcut != out.members)
      throw ConsistencyError("prime filter scan disagrees with join-irreducible shortcut");
  }
  return out;
}

FilterSet deductive_systems(const FiniteAlgebra& a, std::string_view arrow, std::size_t cap) {
  const auto& arr = a.table(arrow);
  const int n = a.size();
  if (static_cast<std::size_t>(n) > cap)
    throw CapacityError("deductive system enumeration capacity exceeded");
  const std::uint64_t full = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  FilterSet out{FilterKind::deductive, {}};
  for (std::uint64_t m = 0; m <= full; ++m) {
    if (!((m >> a.top()) & 1)) continue;
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      if (!((m >> x) & 1)) continue;
      for (int b = 0; b < n && ok; ++b)
        if (((m >> arr[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b)]) & 1) &&
            !((m >> b) & 1))
          ok = false;
    }
    if (!ok) continue;
    Bits b(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x)
      if ((m >> x) & 1) b.set(static_cast<std::size_t>(x));
    out.members.push_back(std::move(b));
    if (m == full) break;
  }
  std::sort(out.members.begin(), out.members.end());
  return out;
}

std::optional<Bits> extend_to_prime(const FiniteAlgebra& a, const Bits& f, int avoid) {
  if (!is_filter(a, f)) throw PreconditionError("set " + f.to_string() + " is not a filter");
  if (avoid < 0 || avoid >= a.size()) throw InputError("avoided element out of range");
  if (f.test(static_cast<std::size_t>(avoid))) throw PreconditionError("avoided element already in the filter");
  for (const Bits& p : filters(a, FilterKind::prime).members)
    if (f.subset_of(p) && !p.test(static_cast<std::size_t>(avoid))) return p;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// deductive systems

bool is_deductive_system(const FiniteAlgebra& a, std::string_view arrow, const Bits& d) {
  const auto& arr = a.table(arrow);
  if (d.universe() != static_cast<std::size_t>(a.size())) throw InputError("deductive system universe mismatch");
  if (!d.test(static_cast<std::size_t>(a.top()))) return false;
  const std::size_t n = static_cast<std::size_t>(a.size());
  bool ok = true;
  d.for_each([&](std::size_t x) {
    for (std::size_t b = 0; b < n; ++b)
      if (d.test(static_cast<std::size_t>(arr[x * n + b])) && !d.test(b)) ok = false;
  });
  return ok;
}

namespace {

Bits modus_ponens_closure(const FiniteAlgebra& a, const std::vector<int>& arr, Bits d) {
  const std::size_t n = static_cast<std::size_t>(a.size());
  bool changed = true;
  while (changed) {
    changed = false;
    Bits next = d;
    d.for_each([&](std::size_t x) {
      for (std::size_t b = 0; b < n; ++b)
        if (d.test(static_cast<std::size_t>(arr[x * n + b])) && !next.test(b)) {
          next.set(b);
          changed = true;
        }
    });
    d = next;
  }
  return d;
}

// ⋃_{k=1..|A|} R_k with R_0 = {1}, R_k = {t : z ↣ t ∈ R_{k-1} for some z ∈ Z}.
Bits chained_characterization(const FiniteAlgebra& a, const std::vector<int>& arr, const Bits& z) {
  const std::size_t n = static_cast<std::size_t>(a.size());
  Bits r = Bits::single(n, static_cast<std::size_t>(a.top()));
  Bits acc(n);
  for (int k = 0; k < a.size(); ++k) {
    Bits next(n);
    for (std::size_t t = 0; t < n; ++t) {
      bool in = false;
      z.for_each([&](std::size_t zz) {
        if (r.test(static_cast<std::size_t>(arr[zz * n + t]))) in = true;
      });
      if (in) next.set(t);
    }
    r = next;
    acc |= r;
  }
  return acc;
}

// {t : m ↣ t = 1 for some m in the meet-closure of Z}.
Bits conjunctive_characterization(const FiniteAlgebra& a, const std::vector<int>& arr, const Bits& z) {
  const std::size_t n = static_cast<std::size_t>(a.size());
  Bits meets = z;
  bool changed = true;
  while (changed) {
    changed = false;
    Bits next = meets;
    meets.for_each([&](std::size_t x) {
      meets.for_each([&](std::size_t y) {
        std::size_t m = static_cast<std::size_t>(a.meet(static_cast<int>(x), static_cast<int>(y)));
        if (!next.test(m)) {
          next.set(m);
          changed = true;
        }
      });
    });
    meets = next;
  }
  Bits out(n);
  for (std::size_t t = 0; t < n; ++t) {
    bool in = false;
    meets.for_each([&](std::size_t m) {
      if (arr[m * n + t] == a.top()) in = true;
    });
    if (in) out.set(t);
  }
  return out;
}

}  // namespace

Bits generate_deductive_system(const FiniteAlgebra& a, std::string_view arrow, const Bits& z, GenMode mode) {
  const auto& arr = a.table(arrow);
  if (z.universe() != static_cast<std::size_t>(a.size())) throw InputError("generator set universe mismatch");

  Bits seed = z;
  seed.set(static_cast<std::size_t>(a.top()));
  Bits fixpoint = modus_ponens_closure(a, arr, seed);

  if (!z.empty()) {
    Bits formula = mode == GenMode::chained ? chained_characterization(a, arr, z)
                                            : conjunctive_characterization(a, arr, z);
    if (formula != fixpoint)
      throw ConsistencyError("deductive characterization mismatch for arrow '" + std::string(arrow) +
                             "': fixpoint " + fixpoint.to_string() + " vs formula " + formula.to_string() +
                             " (arrow is not deductive)");
  }
  return fixpoint;
}

Bits generate_from_system_and_element(const FiniteAlgebra& a, std::string_view arrow, const Bits& d1, int x) {
  const auto& arr = a.table(arrow);
  if (!is_deductive_system(a, arrow, d1))
    throw PreconditionError("set " + d1.to_string() + " is not a deductive system for '" + std::string(arrow) + "'");
  if (x < 0 || x >= a.size()) throw InputError("element out of range");
  if (d1.test(static_cast<std::size_t>(x))) throw PreconditionError("element already belongs to the system");

  const std::size_t n = static_cast<std::size_t>(a.size());
  Bits out(n);
  for (std::size_t t = 0; t < n; ++t)
    if (d1.test(static_cast<std::size_t>(arr[static_cast<std::size_t>(x) * n + t]))) out.set(t);

  if (!is_deductive_system(a, arrow, out) || !d1.subset_of(out) || !out.test(static_cast<std::size_t>(x)))
    throw ConsistencyError("generated set is not a deductive system over the inputs (arrow is not deductive)");
  return out;
}

}  // namespace rauszer
