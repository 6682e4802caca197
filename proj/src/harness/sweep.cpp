#include "gm/harness/sweep.hpp"

#include <algorithm>
#include <cmath>

#include "gm/error.hpp"

namespace gm {

namespace {

std::uint64_t space_size(int n)
{
  if (n < 1 || n > 5)
    throw PreconditionError("set-system sweeps need 1 <= n <= 5, got " + std::to_string(n));
  return std::uint64_t{1} << (n * n);
}

} // namespace

SweepPlan SweepPlan::full(int n)
{
  SweepPlan plan;
  plan.n_ = n;
  plan.total_ = space_size(n);
  return plan;
}

SweepPlan SweepPlan::sampled(int n, double fraction)
{
  if (!(fraction > 0.0))
    throw PreconditionError("sample fraction must be positive");
  if (fraction >= 1.0)
    return full(n);

  SweepPlan plan;
  plan.n_ = n;
  plan.total_ = space_size(n);
  plan.sampled_ = true;
  auto count = static_cast<std::uint64_t>(std::ceil(static_cast<double>(plan.total_) * fraction));
  count = std::clamp<std::uint64_t>(count, 1, plan.total_);

  // An odd multiplier permutes Z / 2^(n*n), so i -> i*M spreads the sample
  // over every bit field instead of pinning the low fields as a plain
  // stride would.
  std::uint64_t mask = plan.total_ - 1;
  std::uint64_t multiplier = (std::uint64_t{0x9E3779B1} & mask) | 1u;
  plan.codes_.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i)
    plan.codes_.push_back((i * multiplier) & mask);
  std::sort(plan.codes_.begin(), plan.codes_.end());
  return plan;
}

double SweepPlan::fraction() const
{
  return static_cast<double>(size()) / static_cast<double>(total_);
}

} // namespace gm
