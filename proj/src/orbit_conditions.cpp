#include "gm/orbit_conditions.hpp"

#include <algorithm>

#include "gm/error.hpp"
#include "gm/structure.hpp"

namespace gm {

std::string to_string(OrbitVerdict v)
{
  switch (v) {
  case OrbitVerdict::satisfied: return "satisfied";
  case OrbitVerdict::violated: return "violated";
  case OrbitVerdict::satisfied_up_to_bound: return "satisfied_up_to_bound";
  }
  return "?";
}

std::string format_tuple(PointTuple const &t)
{
  std::string out = "(";
  for (int j = 0; j < t.arity(); ++j) {
    if (j)
      out += ',';
    out += std::to_string(t[j] + 1);
  }
  return out + ")";
}

bool in_box(SetSystem const &V, PointTuple const &box, PointTuple const &x)
{
  if (box.arity() != x.arity())
    return false;
  for (int j = 0; j < x.arity(); ++j)
    if (!V[box[j]].contains(x[j]))
      return false;
  return true;
}

bool satisfies(Permutation const &g, SetSystem const &V, std::vector<PointTuple> const &Y)
{
  for (auto const &y : Y) {
    PointTuple image = act_tuple(g, y);
    bool covered = std::any_of(Y.begin(), Y.end(),
                               [&](PointTuple const &box) { return in_box(V, box, image); });
    if (!covered)
      return false;
  }
  return true;
}

bool is_violation(PermGroup const &G, SetSystem const &V, std::vector<PointTuple> const &Y)
{
  if (Y.empty())
    return false;
  return std::none_of(G.elements().begin(), G.elements().end(),
                      [&](Permutation const &g) { return satisfies(g, V, Y); });
}

namespace {

void check_same_degree(PermGroup const &G, SetSystem const &V)
{
  if (G.degree() != V.degree())
    throw DomainError("group of degree " + std::to_string(G.degree()) +
                      " against a set system of degree " + std::to_string(V.degree()));
}

// hits[g * P + a] has bit b set iff g(pool[a]) lies in the box V_{pool[b]}.
// Only usable for pools of at most 64 tuples.
std::vector<std::uint64_t> box_hits(PermGroup const &G, SetSystem const &V,
                                    std::vector<PointTuple> const &pool)
{
  std::size_t P = pool.size();
  std::vector<std::uint64_t> hits(G.order() * P, 0);
  for (std::size_t gi = 0; gi < G.order(); ++gi) {
    auto const &g = G.elements()[gi];
    for (std::size_t a = 0; a < P; ++a) {
      PointTuple image = act_tuple(g, pool[a]);
      for (std::size_t b = 0; b < P; ++b)
        if (in_box(V, pool[b], image))
          hits[gi * P + a] |= std::uint64_t{1} << b;
    }
  }
  return hits;
}

Witness make_witness(PermGroup const &G, SetSystem const &V, int k,
                     std::vector<PointTuple> tuples, WitnessKind kind)
{
  if (!is_violation(G, V, tuples))
    throw Error("internal: orbit-condition witness failed re-validation");
  return {k, std::move(tuples), kind};
}

} // namespace

OrbitCheckReport check_1_orbit(PermGroup const &G, SetSystem const &V)
{
  check_same_degree(G, V);
  for (PointSet Y : subsets_size_then_lex(V.degree())) {
    PointSet cover = V.union_over(Y);
    bool ok = std::any_of(G.elements().begin(), G.elements().end(),
                          [&](Permutation const &g) { return g(Y).subset_of(cover); });
    if (!ok) {
      std::vector<PointTuple> tuples;
      for (int p : Y.points())
        tuples.push_back(PointTuple{p});
      return {OrbitVerdict::violated, make_witness(G, V, 1, std::move(tuples), WitnessKind::exact),
              std::nullopt};
    }
  }
  return {OrbitVerdict::satisfied, std::nullopt, std::nullopt};
}

OrbitCheckReport check_k_orbit_exact(PermGroup const &G, SetSystem const &V, int k)
{
  check_same_degree(G, V);
  int n = V.degree();
  if (k < 1)
    throw PreconditionError("arity must be at least 1");
  long long count = 1;
  for (int j = 0; j < k && count <= 9; ++j)
    count *= n;
  if (count > 9)
    throw CapExceeded("exact k-orbit check needs n^k <= 9, got n=" + std::to_string(n) +
                      ", k=" + std::to_string(k));

  auto tuples = full_pool(n, k).tuples;
  std::size_t P = tuples.size();
  auto hits = box_hits(G, V, tuples);
  for (PointSet Y : subsets_size_then_lex(static_cast<int>(P))) {
    bool ok = false;
    for (std::size_t gi = 0; gi < G.order() && !ok; ++gi) {
      ok = true;
      for (std::uint32_t b = Y.bits(); b != 0 && ok; b &= b - 1)
        ok = (hits[gi * P + std::countr_zero(b)] & Y.bits()) != 0;
    }
    if (!ok) {
      std::vector<PointTuple> witness;
      for (int a : Y.points())
        witness.push_back(tuples[a]);
      return {OrbitVerdict::violated, make_witness(G, V, k, std::move(witness), WitnessKind::exact),
              std::nullopt};
    }
  }
  return {OrbitVerdict::satisfied, std::nullopt, std::nullopt};
}

TuplePool structured_pool(int n, int k)
{
  check_degree(n);
  if (k < 1 || k > n)
    throw PreconditionError("pool arity " + std::to_string(k) + " outside 1.." + std::to_string(n));
  TuplePool pool{k, {}};
  auto add = [&](std::vector<int> const &entries) {
    PointTuple t(entries);
    if (std::find(pool.tuples.begin(), pool.tuples.end(), t) == pool.tuples.end())
      pool.tuples.push_back(t);
  };
  for (int p = 0; p < n; ++p)
    add(std::vector<int>(k, p));
  if (k == n - 1) {
    for (int i = 0; i < n; ++i) {
      std::vector<int> deleted;
      for (int p = 0; p < n; ++p)
        if (p != i)
          deleted.push_back(p);
      add(deleted);
    }
    for (int t = 0; t < n; ++t) {
      std::vector<int> run;
      for (int j = 0; j < k; ++j)
        run.push_back((t + j) % n);
      add(run);
    }
  }
  return pool;
}

TuplePool full_pool(int n, int k)
{
  check_degree(n);
  if (k < 1 || k > kMaxDegree)
    throw PreconditionError("pool arity " + std::to_string(k) + " out of range");
  long long count = 1;
  for (int j = 0; j < k && count <= 4096; ++j)
    count *= n;
  if (count > 4096)
    throw CapExceeded("full tuple pool limited to 4096 tuples");
  TuplePool pool{k, {}};
  std::vector<int> digits(k, 0);
  for (long long c = 0; c < count; ++c) {
    pool.tuples.emplace_back(digits);
    for (int j = k - 1; j >= 0; --j) {
      if (++digits[j] < n)
        break;
      digits[j] = 0;
    }
  }
  return pool;
}

OrbitCheckReport check_k_orbit_bounded(PermGroup const &G, SetSystem const &V, int k,
                                       TuplePool const &pool, int max_size)
{
  check_same_degree(G, V);
  if (max_size < 1)
    throw PreconditionError("max witness size must be at least 1");
  if (pool.tuples.empty())
    throw PreconditionError("empty tuple pool");
  for (auto const &t : pool.tuples) {
    if (t.arity() != k)
      throw PreconditionError("pool tuple " + format_tuple(t) + " does not have arity " +
                              std::to_string(k));
    for (int j = 0; j < k; ++j)
      if (t[j] >= V.degree())
        throw DomainError("pool tuple " + format_tuple(t) + " leaves [" +
                          std::to_string(V.degree()) + "]");
  }

  auto const &tuples = pool.tuples;
  std::size_t P = tuples.size();
  std::size_t m = G.order();
  // hit[(g * P + a) * P + b]: g(tuples[a]) lies in the box of tuples[b].
  std::vector<std::uint8_t> hit(m * P * P, 0);
  for (std::size_t gi = 0; gi < m; ++gi) {
    auto const &g = G.elements()[gi];
    for (std::size_t a = 0; a < P; ++a) {
      PointTuple image = act_tuple(g, tuples[a]);
      for (std::size_t b = 0; b < P; ++b)
        hit[(gi * P + a) * P + b] = in_box(V, tuples[b], image);
    }
  }

  int limit = static_cast<int>(std::min<std::size_t>(P, static_cast<std::size_t>(max_size)));
  std::vector<std::size_t> idx;
  for (int size = 1; size <= limit; ++size) {
    idx.resize(size);
    for (int j = 0; j < size; ++j)
      idx[j] = static_cast<std::size_t>(j);
    for (;;) {
      bool ok = false;
      for (std::size_t gi = 0; gi < m && !ok; ++gi) {
        ok = true;
        for (std::size_t a : idx) {
          std::uint8_t const *row = &hit[(gi * P + a) * P];
          bool covered = false;
          for (std::size_t b : idx)
            covered = covered || row[b];
          if (!covered) {
            ok = false;
            break;
          }
        }
      }
      if (!ok) {
        std::vector<PointTuple> witness;
        for (std::size_t a : idx)
          witness.push_back(tuples[a]);
        return {OrbitVerdict::violated,
                make_witness(G, V, k, std::move(witness), WitnessKind::bounded), max_size};
      }
      int j = size - 1;
      while (j >= 0 && idx[j] == P - static_cast<std::size_t>(size - j))
        --j;
      if (j < 0)
        break;
      ++idx[j];
      for (int r = j + 1; r < size; ++r)
        idx[r] = idx[r - 1] + 1;
    }
  }
  return {OrbitVerdict::satisfied_up_to_bound, std::nullopt, max_size};
}

bool singleton_n_orbit_satisfied(PermGroup const &G, SetSystem const &V)
{
  std::vector<int> all(V.degree());
  for (int p = 0; p < V.degree(); ++p)
    all[p] = p;
  TuplePool pool{V.degree(), {PointTuple(all)}};
  return check_k_orbit_bounded(G, V, V.degree(), pool, 1).verdict != OrbitVerdict::violated;
}

std::optional<ResidualStructure> residual_structure(PermGroup const &G, SetSystem const &V)
{
  check_same_degree(G, V);
  if (find_marriage(G, V).found)
    throw PreconditionError("residual_structure: the system admits a G-marriage");

  int n = V.degree();
  PointSet full = PointSet::full(n);
  ResidualStructure out;
  PointSet missing;
  for (int i = 0; i < n; ++i) {
    PointSet gap = full - V[i];
    if (gap.size() != 1)
      return std::nullopt;
    out.a_list.push_back(gap.least());
    missing = missing | gap;
  }
  if (missing != full)
    return std::nullopt;

  for (int i = 0; i < n; ++i) {
    int a = out.a_list[i];
    auto it = std::find_if(G.elements().begin(), G.elements().end(), [&](Permutation const &g) {
      if (g(i) != a)
        return false;
      for (int j = 0; j < n; ++j)
        if (j != i && !(V[j].contains(g(j)) && V[j].contains(a)))
          return false;
      return true;
    });
    if (it == G.elements().end())
      return std::nullopt;
    out.g_list.push_back(*it);
  }
  return out;
}

} // namespace gm
