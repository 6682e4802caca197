#pragma once

// Deterministic sweeps over set systems. A system is the integer whose j-th
// n-bit field is the characteristic vector of V_j; sweeps visit codes in
// ascending order and merge per-worker results in that order, so the
// aggregate does not depend on the worker count.

#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

#include "gm/marriage.hpp"

namespace gm {

class SweepPlan {
public:
  /// Every one of the 2^(n*n) systems; requires n <= 5.
  static SweepPlan full(int n);

  /// About fraction * 2^(n*n) systems chosen by an odd-multiplier stride
  /// (a bijection of the code space), visited in ascending code order.
  /// fraction >= 1 gives the full sweep.
  static SweepPlan sampled(int n, double fraction);

  int degree() const { return n_; }
  bool is_sampled() const { return sampled_; }
  std::uint64_t size() const { return sampled_ ? codes_.size() : total_; }
  std::uint64_t code(std::uint64_t index) const { return sampled_ ? codes_[index] : index; }
  double fraction() const;

private:
  int n_ = 1;
  bool sampled_ = false;
  std::uint64_t total_ = 0;
  std::vector<std::uint64_t> codes_;
};

/// Runs visit(acc, system, code) over the plan on `workers` threads with one
/// contiguous index range each; Acc must provide merge(Acc&&) that appends
/// in order.
template <class Acc, class Visit>
Acc sweep_all_systems(SweepPlan const &plan, int workers, Visit const &visit)
{
  if (workers < 1)
    workers = 1;
  std::uint64_t total = plan.size();
  auto chunks = static_cast<std::uint64_t>(workers);
  if (chunks > total)
    chunks = total == 0 ? 1 : total;

  std::vector<Acc> partial(chunks);
  std::vector<std::exception_ptr> errors(chunks);
  auto run = [&](std::uint64_t c) {
    try {
      std::uint64_t lo = total * c / chunks, hi = total * (c + 1) / chunks;
      for (std::uint64_t i = lo; i < hi; ++i) {
        std::uint64_t code = plan.code(i);
        visit(partial[c], SetSystem::from_encoding(plan.degree(), code), code);
      }
    } catch (...) {
      errors[c] = std::current_exception();
    }
  };

  if (chunks == 1) {
    run(0);
  } else {
    std::vector<std::jthread> threads;
    for (std::uint64_t c = 0; c < chunks; ++c)
      threads.emplace_back(run, c);
  }
  for (auto const &e : errors)
    if (e)
      std::rethrow_exception(e);

  Acc out = std::move(partial[0]);
  for (std::uint64_t c = 1; c < chunks; ++c)
    out.merge(std::move(partial[c]));
  return out;
}

} // namespace gm
