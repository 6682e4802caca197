#include "gm/group.hpp"

#include <algorithm>
#include <array>
#include <bitset>
#include <deque>
#include <limits>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "gm/error.hpp"

namespace gm {

PermGroup::PermGroup(int n) : n_(n), elements_{Permutation::identity(n)} {}

PermGroup PermGroup::from_elements(int n, std::vector<Permutation> generators,
                                   std::vector<Permutation> elements)
{
  check_degree(n);
  for (auto const &g : elements)
    if (g.degree() != n)
      throw DomainError("group element of degree " + std::to_string(g.degree()) +
                        " in a group of degree " + std::to_string(n));
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (!std::binary_search(elements.begin(), elements.end(), Permutation::identity(n)))
    throw PreconditionError("element list lacks the identity");

  PermGroup G(n);
  G.generators_ = std::move(generators);
  G.elements_ = std::move(elements);
  return G;
}

std::optional<std::size_t> PermGroup::index_of(Permutation const &g) const
{
  auto it = std::lower_bound(elements_.begin(), elements_.end(), g);
  if (it == elements_.end() || *it != g)
    return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

std::string to_string(GroupSpec::Kind kind)
{
  switch (kind) {
  case GroupSpec::Kind::symmetric: return "symmetric";
  case GroupSpec::Kind::alternating: return "alternating";
  case GroupSpec::Kind::cyclic: return "cyclic";
  case GroupSpec::Kind::dihedral: return "dihedral";
  case GroupSpec::Kind::trivial: return "trivial";
  case GroupSpec::Kind::generators: return "generators";
  case GroupSpec::Kind::product: return "product";
  }
  return "?";
}

GroupSpec::Kind parse_group_kind(std::string_view name)
{
  for (auto k : {GroupSpec::Kind::symmetric, GroupSpec::Kind::alternating, GroupSpec::Kind::cyclic,
                 GroupSpec::Kind::dihedral, GroupSpec::Kind::trivial, GroupSpec::Kind::generators,
                 GroupSpec::Kind::product})
    if (to_string(k) == name)
      return k;
  throw ParseError("unknown group kind '" + std::string(name) + "'");
}

PermGroup generate(int n, std::vector<Permutation> gens, std::size_t cap)
{
  check_degree(n);
  for (auto const &s : gens)
    if (s.degree() != n)
      throw DomainError("generator " + format_cycles(s) + " has degree " +
                        std::to_string(s.degree()) + ", expected " + std::to_string(n));

  std::vector<Permutation> elements{Permutation::identity(n)};
  std::unordered_set<std::uint64_t> seen{elements.front().key()};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (auto const &s : gens) {
      Permutation h = compose(s, elements[head]);
      if (seen.insert(h.key()).second) {
        if (elements.size() >= cap)
          throw CapExceeded("group order exceeds cap " + std::to_string(cap));
        elements.push_back(h);
      }
    }
  }
  return PermGroup::from_elements(n, std::move(gens), std::move(elements));
}

namespace {

Permutation n_cycle(int n)
{
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i)
    img[i] = (i + 1) % n;
  return Permutation::from_images(img);
}

Permutation transposition(int n, int a, int b)
{
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i)
    img[i] = i;
  std::swap(img[a], img[b]);
  return Permutation::from_images(img);
}

} // namespace

PermGroup symmetric_group(int n)
{
  check_degree(n);
  if (n == 1)
    return PermGroup(1);
  return generate(n, {transposition(n, 0, 1), n_cycle(n)}, std::numeric_limits<std::size_t>::max());
}

PermGroup alternating_group(int n)
{
  check_degree(n);
  std::vector<Permutation> gens;
  for (int i = 2; i < n; ++i) {
    std::vector<int> img(n);
    for (int p = 0; p < n; ++p)
      img[p] = p;
    img[0] = 1;
    img[1] = i;
    img[i] = 0;
    gens.push_back(Permutation::from_images(img));
  }
  return generate(n, std::move(gens), std::numeric_limits<std::size_t>::max());
}

PermGroup cyclic_group(int n)
{
  check_degree(n);
  if (n == 1)
    return PermGroup(1);
  return generate(n, {n_cycle(n)});
}

PermGroup dihedral_group(int n)
{
  check_degree(n);
  if (n < 3)
    throw PreconditionError("dihedral group needs n >= 3, got " + std::to_string(n));
  std::vector<int> reflection(n);
  for (int i = 0; i < n; ++i)
    reflection[i] = n - 1 - i;
  return generate(n, {n_cycle(n), Permutation::from_images(reflection)});
}

PermGroup named_group(GroupSpec const &spec)
{
  check_degree(spec.n);
  switch (spec.kind) {
  case GroupSpec::Kind::symmetric: return symmetric_group(spec.n);
  case GroupSpec::Kind::alternating: return alternating_group(spec.n);
  case GroupSpec::Kind::cyclic: return cyclic_group(spec.n);
  case GroupSpec::Kind::dihedral: return dihedral_group(spec.n);
  case GroupSpec::Kind::trivial: return PermGroup(spec.n);
  case GroupSpec::Kind::generators: {
    std::vector<Permutation> gens;
    for (auto const &text : spec.generators)
      gens.push_back(parse_cycles(text, spec.n));
    return generate(spec.n, std::move(gens));
  }
  case GroupSpec::Kind::product: {
    std::vector<ProductFactor> factors;
    for (auto const &f : spec.factors) {
      if (static_cast<int>(f.domain.size()) != f.spec.n)
        throw PreconditionError("product factor of degree " + std::to_string(f.spec.n) +
                                " has a domain of size " + std::to_string(f.domain.size()));
      std::vector<int> domain;
      for (int p : f.domain) {
        if (p < 1 || p > spec.n)
          throw DomainError("product domain point " + std::to_string(p) + " outside [" +
                            std::to_string(spec.n) + "]");
        domain.push_back(p - 1);
      }
      factors.push_back({named_group(f.spec), std::move(domain)});
    }
    return direct_product(spec.n, factors);
  }
  }
  throw PreconditionError("invalid group spec");
}

PermGroup direct_product(int n, std::span<const ProductFactor> factors)
{
  check_degree(n);
  std::uint32_t used = 0;
  for (auto const &f : factors) {
    if (static_cast<int>(f.domain.size()) != f.group.degree())
      throw PreconditionError("factor of degree " + std::to_string(f.group.degree()) +
                              " on a domain of size " + std::to_string(f.domain.size()));
    for (int p : f.domain) {
      if (p < 0 || p >= n)
        throw DomainError("domain point " + std::to_string(p + 1) + " outside [" +
                          std::to_string(n) + "]");
      if ((used >> p) & 1u)
        throw PreconditionError("product domains overlap at point " + std::to_string(p + 1));
      used |= 1u << p;
    }
  }

  auto lift = [n](ProductFactor const &f, Permutation const &g) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i)
      img[i] = i;
    for (std::size_t i = 0; i < f.domain.size(); ++i)
      img[f.domain[i]] = f.domain[g(static_cast<int>(i))];
    return Permutation::from_images(img);
  };

  std::vector<Permutation> elements{Permutation::identity(n)};
  std::vector<Permutation> gens;
  for (auto const &f : factors) {
    std::vector<Permutation> next;
    next.reserve(elements.size() * f.group.order());
    for (auto const &e : elements)
      for (auto const &g : f.group.elements())
        next.push_back(compose(lift(f, g), e));
    elements = std::move(next);
    for (auto const &s : f.group.generators())
      gens.push_back(lift(f, s));
  }
  return PermGroup::from_elements(n, std::move(gens), std::move(elements));
}

bool contains(PermGroup const &G, Permutation const &g)
{
  if (g.degree() != G.degree())
    throw DomainError("contains: degree mismatch " + std::to_string(g.degree()) + " vs " +
                      std::to_string(G.degree()));
  return G.index_of(g).has_value();
}

bool is_closed(PermGroup const &G)
{
  if (!contains(G, Permutation::identity(G.degree())))
    return false;
  for (auto const &a : G.elements()) {
    if (!contains(G, inverse(a)))
      return false;
    for (auto const &b : G.elements())
      if (!contains(G, compose(a, b)))
        return false;
  }
  return true;
}

namespace {

using ElementMask = std::bitset<kSubgroupEnumerationCap + 8>;

struct MaskLess {
  bool operator()(ElementMask const &a, ElementMask const &b) const
  {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i])
        return b[i];
    return false;
  }
};

} // namespace

std::vector<PermGroup> all_subgroups(PermGroup const &G, std::size_t cap)
{
  std::size_t m = G.order();
  if (m > cap || m > kSubgroupEnumerationCap)
    throw CapExceeded("subgroup enumeration needs |G| <= " +
                      std::to_string(std::min(cap, kSubgroupEnumerationCap)) + ", got " +
                      std::to_string(m));

  auto elems = G.elements();
  std::size_t id = *G.index_of(Permutation::identity(G.degree()));
  std::vector<std::size_t> table(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      table[a * m + b] = *G.index_of(compose(elems[a], elems[b]));

  struct Record {
    ElementMask mask;
    std::vector<std::size_t> gens;
  };

  auto closure = [&](std::vector<std::size_t> const &gens) {
    ElementMask mask;
    std::vector<std::size_t> queue{id};
    mask.set(id);
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (std::size_t s : gens) {
        std::size_t h = table[s * m + queue[head]];
        if (!mask[h]) {
          mask.set(h);
          queue.push_back(h);
        }
      }
    return mask;
  };

  std::set<ElementMask, MaskLess> seen;
  std::vector<Record> found;
  std::deque<std::size_t> frontier;
  auto add = [&](std::vector<std::size_t> gens) {
    ElementMask mask = closure(gens);
    if (seen.insert(mask).second) {
      found.push_back({mask, std::move(gens)});
      frontier.push_back(found.size() - 1);
    }
  };

  add({});
  for (std::size_t g = 0; g < m; ++g)
    add({g});
  while (!frontier.empty()) {
    std::size_t r = frontier.front();
    frontier.pop_front();
    for (std::size_t g = 0; g < m; ++g) {
      if (found[r].mask[g])
        continue;
      auto gens = found[r].gens;
      gens.push_back(g);
      add(std::move(gens));
    }
  }

  std::vector<PermGroup> out;
  out.reserve(found.size());
  for (auto const &rec : found) {
    std::vector<Permutation> members, gens;
    for (std::size_t i = 0; i < m; ++i)
      if (rec.mask[i])
        members.push_back(elems[i]);
    for (std::size_t s : rec.gens)
      gens.push_back(elems[s]);
    out.push_back(PermGroup::from_elements(G.degree(), std::move(gens), std::move(members)));
  }
  std::sort(out.begin(), out.end(), [](PermGroup const &a, PermGroup const &b) {
    if (a.order() != b.order())
      return a.order() < b.order();
    return std::lexicographical_compare(a.elements().begin(), a.elements().end(),
                                        b.elements().begin(), b.elements().end());
  });
  return out;
}

} // namespace gm
