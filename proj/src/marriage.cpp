#include "gm/marriage.hpp"

#include <array>
#include <functional>

#include "gm/error.hpp"
#include "gm/structure.hpp"

namespace gm {

SetSystem::SetSystem(std::vector<PointSet> sets) : sets_(std::move(sets))
{
  int n = static_cast<int>(sets_.size());
  check_degree(n);
  for (int i = 0; i < n; ++i)
    if (!sets_[i].subset_of(PointSet::full(n)))
      throw DomainError("V_" + std::to_string(i + 1) + " has points outside [" +
                        std::to_string(n) + "]");
}

SetSystem SetSystem::from_lists(int n, std::vector<std::vector<int>> const &lists)
{
  check_degree(n);
  if (static_cast<int>(lists.size()) != n)
    throw DomainError("expected " + std::to_string(n) + " sets, got " +
                      std::to_string(lists.size()));
  std::vector<PointSet> sets;
  for (std::size_t i = 0; i < lists.size(); ++i) {
    PointSet s;
    for (int p : lists[i]) {
      if (p < 1 || p > n)
        throw DomainError("V_" + std::to_string(i + 1) + " contains " + std::to_string(p) +
                          ", outside [" + std::to_string(n) + "]");
      s.insert(p - 1);
    }
    sets.push_back(s);
  }
  return SetSystem(std::move(sets));
}

SetSystem SetSystem::from_encoding(int n, std::uint64_t code)
{
  check_degree(n);
  if (n * n > 64)
    throw DomainError("set-system encoding needs n*n <= 64");
  std::vector<PointSet> sets(n);
  std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  for (int j = 0; j < n; ++j)
    sets[j] = PointSet(static_cast<std::uint32_t>((code >> (n * j)) & mask));
  return SetSystem(std::move(sets));
}

SetSystem SetSystem::full(int n)
{
  check_degree(n);
  return SetSystem(std::vector<PointSet>(n, PointSet::full(n)));
}

PointSet SetSystem::union_over(PointSet Y) const
{
  PointSet out;
  for (std::uint32_t b = Y.bits(); b != 0; b &= b - 1)
    out = out | sets_[std::countr_zero(b)];
  return out;
}

std::uint64_t SetSystem::encoding() const
{
  int n = degree();
  if (n * n > 64)
    throw DomainError("set-system encoding needs n*n <= 64");
  std::uint64_t code = 0;
  for (int j = 0; j < n; ++j)
    code |= std::uint64_t(sets_[j].bits()) << (n * j);
  return code;
}

std::vector<std::vector<int>> SetSystem::lists_one_based() const
{
  std::vector<std::vector<int>> out;
  for (PointSet s : sets_) {
    auto pts = s.points();
    for (int &p : pts)
      ++p;
    out.push_back(std::move(pts));
  }
  return out;
}

std::string format_system(SetSystem const &V)
{
  std::string out = "(";
  for (int i = 0; i < V.degree(); ++i) {
    if (i)
      out += ',';
    out += format_set(V[i]);
  }
  return out + ")";
}

std::string to_string(MarriageStrategy s)
{
  switch (s) {
  case MarriageStrategy::enumeration: return "enumeration";
  case MarriageStrategy::matching: return "matching";
  case MarriageStrategy::decomposed: return "decomposed";
  }
  return "?";
}

bool is_marriage(SetSystem const &V, Permutation const &g)
{
  if (g.degree() != V.degree())
    return false;
  for (int i = 0; i < V.degree(); ++i)
    if (!V[i].contains(g(i)))
      return false;
  return true;
}

namespace {

void check_same_degree(PermGroup const &G, SetSystem const &V)
{
  if (G.degree() != V.degree())
    throw DomainError("group of degree " + std::to_string(G.degree()) +
                      " against a set system of degree " + std::to_string(V.degree()));
}

MarriageResult validated(PermGroup const &G, SetSystem const &V, MarriageResult r)
{
  if (r.found && (!r.witness || !contains(G, *r.witness) || !is_marriage(V, *r.witness)))
    throw Error("internal: marriage witness failed re-validation");
  return r;
}

} // namespace

MarriageResult find_marriage(PermGroup const &G, SetSystem const &V)
{
  check_same_degree(G, V);
  for (auto const &g : G.elements()) {
    bool ok = true;
    for (int i = 0; i < V.degree() && ok; ++i)
      ok = V[i].contains(g(i));
    if (ok)
      return validated(G, V, {true, g, MarriageStrategy::enumeration});
  }
  return {false, std::nullopt, MarriageStrategy::enumeration};
}

HallReport hall_condition(SetSystem const &V)
{
  for (PointSet Y : subsets_size_then_lex(V.degree()))
    if (V.union_over(Y).size() < Y.size())
      return {false, Y};
  return {true, std::nullopt};
}

MarriageResult hall_matching(SetSystem const &V)
{
  int n = V.degree();
  std::array<int, kMaxDegree> owner;  // point -> position
  owner.fill(-1);

  std::function<bool(int, std::uint32_t &)> augment = [&](int pos, std::uint32_t &visited) {
    for (int p : V[pos].points()) {
      if ((visited >> p) & 1u)
        continue;
      visited |= 1u << p;
      if (owner[p] < 0 || augment(owner[p], visited)) {
        owner[p] = pos;
        return true;
      }
    }
    return false;
  };

  for (int pos = 0; pos < n; ++pos) {
    std::uint32_t visited = 0;
    if (!augment(pos, visited))
      return {false, std::nullopt, MarriageStrategy::matching};
  }
  std::vector<int> img(n);
  for (int p = 0; p < n; ++p)
    img[owner[p]] = p;
  auto g = Permutation::from_images(img);
  if (!is_marriage(V, g))
    throw Error("internal: matching failed re-validation");
  return {true, g, MarriageStrategy::matching};
}

SetSystem restrict_system(SetSystem const &V, PointSet orbit)
{
  auto points = orbit.points();
  std::array<int, kMaxDegree> position{};
  for (std::size_t i = 0; i < points.size(); ++i)
    position[points[i]] = static_cast<int>(i);
  std::vector<PointSet> sets;
  for (int j : points) {
    PointSet s;
    for (int p : (V[j] & orbit).points())
      s.insert(position[p]);
    sets.push_back(s);
  }
  return SetSystem(std::move(sets));
}

MarriageResult marriage_decomposed(PermGroup const &G, SetSystem const &V)
{
  check_same_degree(G, V);
  if (!is_product_of_symmetrics(G))
    throw PreconditionError("marriage_decomposed needs a direct product of symmetric groups");

  int n = V.degree();
  std::vector<int> img(n);
  for (PointSet orbit : orbits(G).orbits) {
    auto local = hall_matching(restrict_system(V, orbit));
    if (!local.found)
      return {false, std::nullopt, MarriageStrategy::decomposed};
    auto points = orbit.points();
    for (std::size_t i = 0; i < points.size(); ++i)
      img[points[i]] = points[(*local.witness)(static_cast<int>(i))];
  }
  return validated(G, V, {true, Permutation::from_images(img), MarriageStrategy::decomposed});
}

} // namespace gm
