#include "rauszer/opens.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace rauszer {

namespace {

void check_universe(const Preorder& r, const Bits& x) {
  if (x.universe() != r.size())
    throw InputError("subset universe " + std::to_string(x.universe()) + " does not match preorder size " +
                     std::to_string(r.size()));
}

void check_open(const Preorder& r, const Bits& g, const char* role) {
  if (!is_open(r, g))
    throw PreconditionError(std::string(role) + " argument " + g.to_string() + " is not open (interior differs)");
}

}  // namespace

Bits closure(const Preorder& r, const Bits& x) {
  check_universe(r, x);
  Bits out(r.size());
  x.for_each([&](std::size_t p) { out |= r.up(p); });
  return out;
}

Bits interior(const Preorder& r, const Bits& x) {
  check_universe(r, x);
  Bits out(r.size());
  for (std::size_t p = 0; p < r.size(); ++p)
    if (r.up(p).subset_of(x)) out |= r.up(p);
  return out;
}

bool is_open(const Preorder& r, const Bits& x) { return interior(r, x) == x; }

OpensLattice OpensLattice::enumerate(const Preorder& r, std::size_t point_cap) {
  if (r.size() > point_cap)
    throw CapacityError("opens enumeration capacity exceeded: n=" + std::to_string(r.size()) + " > cap=" +
                        std::to_string(point_cap));
  // Union-closure of the up-set family, seeded with ∅: fold in one up-set
  // at a time, so members are exactly the unions of up-set subfamilies and
  // the other 2^n subsets are never touched.
  std::unordered_set<Bits, BitsHash> seen;
  std::vector<Bits> members;
  auto add = [&](const Bits& b) {
    if (seen.insert(b).second) {
      if (seen.size() > kMaxOpens) throw CapacityError("opens enumeration exceeded the generated-set guard");
      members.push_back(b);
    }
  };
  add(Bits(r.size()));
  for (std::size_t p = 0; p < r.size(); ++p) {
    const std::size_t existing = members.size();
    for (std::size_t i = 0; i < existing; ++i) add(members[i] | r.up(p));
  }
  std::sort(members.begin(), members.end());
  return OpensLattice(r, std::move(members));
}

std::optional<std::size_t> OpensLattice::index_of(const Bits& g) const {
  auto it = std::lower_bound(opens_.begin(), opens_.end(), g);
  if (it != opens_.end() && *it == g) return static_cast<std::size_t>(it - opens_.begin());
  return std::nullopt;
}

PointInvolution::PointInvolution(std::vector<std::size_t> perm) : perm_(std::move(perm)) {
  const std::size_t n = perm_.size();
  for (std::size_t x = 0; x < n; ++x) {
    if (perm_[x] >= n) throw InputError("involution maps " + std::to_string(x) + " out of range");
    if (perm_[perm_[x]] != x)
      throw InputError("map is not involutive at " + std::to_string(x));
  }
}

PointInvolution PointInvolution::identity(std::size_t n) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  return PointInvolution(std::move(p));
}

Bits PointInvolution::image(const Bits& x) const {
  if (x.universe() != perm_.size()) throw InputError("universe mismatch on involution image");
  Bits out(perm_.size());
  x.for_each([&](std::size_t p) { out.set(perm_[p]); });
  return out;
}

bool PointInvolution::antitone_for(const Preorder& r) const {
  if (r.size() != perm_.size()) throw InputError("involution size does not match preorder");
  for (std::size_t x = 0; x < perm_.size(); ++x)
    for (std::size_t y = 0; y < perm_.size(); ++y)
      if (r.related(x, y) && !r.related(perm_[y], perm_[x])) return false;
  return true;
}

bool PointInvolution::kleene_for(const Preorder& r) const {
  if (r.size() != perm_.size()) throw InputError("involution size does not match preorder");
  for (std::size_t x = 0; x < perm_.size(); ++x)
    if (!r.related(x, perm_[x]) && !r.related(perm_[x], x)) return false;
  return true;
}

Bits heyting_implies(const Preorder& r, const Bits& g, const Bits& h) {
  check_open(r, g, "antecedent");
  check_open(r, h, "consequent");
  return interior(r, g.complement() | h);
}

Bits heyting_not(const Preorder& r, const Bits& g) { return heyting_implies(r, g, Bits(r.size())); }

Bits brouwer_minus(const Preorder& r, const Bits& g, const Bits& h) {
  check_open(r, g, "minuend");
  check_open(r, h, "subtrahend");
  return closure(r, g - h);
}

Bits brouwer_not(const Preorder& r, const Bits& g) { return brouwer_minus(r, Bits::all(r.size()), g); }

Bits demorgan_complement(const PointInvolution& v, const Bits& x) {
  return v.image(x).complement();
}

Bits weak_implies(const Preorder& r, const PointInvolution& v, const Bits& g, const Bits& h) {
  if (!v.antitone_for(r)) throw PreconditionError("involution is not antitone for this preorder");
  check_open(r, g, "antecedent");
  check_open(r, h, "consequent");
  return heyting_implies(r, g, demorgan_complement(v, g) | h);
}

Bits weak_not(const Preorder& r, const PointInvolution& v, const Bits& g) {
  return weak_implies(r, v, g, Bits(r.size()));
}

Bits exception(const Preorder& r, const PointInvolution& v, const Bits& g, const Bits& h) {
  if (!v.antitone_for(r)) throw PreconditionError("involution is not antitone for this preorder");
  check_open(r, g, "first");
  check_open(r, h, "second");
  return demorgan_complement(v, heyting_implies(r, demorgan_complement(v, h), demorgan_complement(v, g)));
}

}  // namespace rauszer
