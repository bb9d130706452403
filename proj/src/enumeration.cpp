#include "posetlie/enumeration.hpp"

#include "posetlie/bijection_analysis.hpp"
#include "posetlie/errors.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <limits>
#include <mutex>
#include <thread>

namespace posetlie {

namespace {

using Filter = std::function<bool(const EdgeBijection&)>;
using Partition = std::function<void(std::size_t, std::vector<EdgeBijection>&)>;

// Runs partitions 0..count-1 over `jobs` workers and concatenates in partition order.
std::vector<EdgeBijection> run_partitions(std::size_t count, unsigned jobs, const Partition& work)
{
  std::vector<std::vector<EdgeBijection>> results(count);
  const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i)
      work(i, results[i]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            work(i, results[i]);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure)
              failure = std::current_exception();
          }
        }
      });
    for (auto& t : pool)
      t.join();
    if (failure)
      std::rethrow_exception(failure);
  }
  std::vector<EdgeBijection> out;
  for (auto& r : results)
    out.insert(out.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EdgeBijection> scan_symmetric_group(const Poset& poset, const EnumerationOptions& options,
                                                const Filter& keep)
{
  const std::size_t n = poset.pair_count();
  if (n > options.bound)
    throw BoundExceeded(n, options.bound);
  if (n == 0) {
    std::vector<EdgeBijection> out;
    if (keep(EdgeBijection{}))
      out.emplace_back();
    return out;
  }
  // partition by the image of the first pair
  return run_partitions(n, options.jobs, [&](std::size_t first, std::vector<EdgeBijection>& out) {
    EdgeBijection theta;
    theta.perm.push_back(static_cast<std::uint32_t>(first));
    for (std::uint32_t v = 0; v < n; ++v)
      if (v != first)
        theta.perm.push_back(v);
    do {
      if (keep(theta))
        out.push_back(theta);
    } while (std::next_permutation(theta.perm.begin() + 1, theta.perm.end()));
  });
}

constexpr std::uint32_t unset = std::numeric_limits<std::uint32_t>::max();

struct ChainPlan
{
  std::vector<std::uint32_t> edges;                 // pair indices of u_i < u_j
  std::vector<std::vector<std::uint32_t>> options;  // images of `edges`, one list per (target, direction)
};

std::vector<ChainPlan> plan_chains(const Poset& poset)
{
  const auto& chains = poset.chains();
  std::vector<ChainPlan> plans(chains.size());
  for (std::size_t k = 0; k < chains.size(); ++k) {
    const auto& u = chains[k].elements;
    const std::size_t m = u.size();
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        plans[k].edges.push_back(static_cast<std::uint32_t>(poset.pair_index(u[i], u[j])));
    for (const auto& target : chains) {
      if (target.size() != m)
        continue;
      const auto& v = target.elements;
      for (int reversed = 0; reversed < (m >= 3 ? 2 : 1); ++reversed) {
        std::vector<std::uint32_t> images;
        for (std::size_t i = 0; i < m; ++i)
          for (std::size_t j = i + 1; j < m; ++j)
            images.push_back(static_cast<std::uint32_t>(
              reversed ? poset.pair_index(v[m - 1 - j], v[m - 1 - i]) : poset.pair_index(v[i], v[j])));
        plans[k].options.push_back(std::move(images));
      }
    }
  }
  return plans;
}

class ChainAssignment
{
public:
  ChainAssignment(const Poset& poset, const std::vector<ChainPlan>& plans, const Filter& keep,
                  std::vector<EdgeBijection>& out)
    : plans_(plans)
    , keep_(keep)
    , out_(out)
    , image_(poset.pair_count(), unset)
    , owner_(poset.pair_count(), unset)
  {
  }

  void run_from(std::size_t first_option)
  {
    if (plans_.empty())
      return;
    std::vector<std::uint32_t> trail;
    if (apply(0, first_option, trail))
      descend(1);
    undo(trail);
  }

private:
  bool apply(std::size_t chain, std::size_t option, std::vector<std::uint32_t>& trail)
  {
    const auto& plan = plans_[chain];
    const auto& images = plan.options[option];
    for (std::size_t i = 0; i < plan.edges.size(); ++i) {
      const auto e = plan.edges[i];
      const auto f = images[i];
      if (image_[e] == unset) {
        if (owner_[f] != unset)
          return false;
        image_[e] = f;
        owner_[f] = e;
        trail.push_back(e);
      } else if (image_[e] != f) {
        return false;
      }
    }
    return true;
  }

  void undo(std::vector<std::uint32_t>& trail)
  {
    for (auto e : trail) {
      owner_[image_[e]] = unset;
      image_[e] = unset;
    }
    trail.clear();
  }

  void descend(std::size_t chain)
  {
    if (chain == plans_.size()) {
      EdgeBijection theta{image_};
      if (keep_(theta))
        out_.push_back(std::move(theta));
      return;
    }
    std::vector<std::uint32_t> trail;
    for (std::size_t o = 0; o < plans_[chain].options.size(); ++o) {
      if (apply(chain, o, trail))
        descend(chain + 1);
      undo(trail);
    }
  }

  const std::vector<ChainPlan>& plans_;
  const Filter& keep_;
  std::vector<EdgeBijection>& out_;
  std::vector<std::uint32_t> image_;
  std::vector<std::uint32_t> owner_;
};

std::vector<EdgeBijection> enumerate_monotone(const Poset& poset, const EnumerationOptions& options,
                                              const Filter& keep)
{
  if (poset.length() <= 1)
    return scan_symmetric_group(poset, options, keep);
  const auto plans = plan_chains(poset);
  return run_partitions(plans.front().options.size(), options.jobs,
                        [&](std::size_t first, std::vector<EdgeBijection>& out) {
                          ChainAssignment(poset, plans, keep, out).run_from(first);
                        });
}

} // namespace

std::vector<EdgeBijection> enumerate_M(const Poset& poset, const EnumerationOptions& options)
{
  return enumerate_monotone(poset, options, [](const EdgeBijection&) { return true; });
}

std::vector<EdgeBijection> enumerate_AM(const Poset& poset, const EnumerationOptions& options)
{
  const AdmissibilityChecker admissible(poset);
  return enumerate_monotone(poset, options, [&](const EdgeBijection& theta) { return admissible(theta); });
}

std::vector<EdgeBijection> enumerate_P(const Poset& poset)
{
  std::vector<EdgeBijection> out;
  for (const auto& map : poset_maps(poset))
    out.push_back(restrict_to_edges(poset, map));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<EdgeBijection> scan_M(const Poset& poset, const EnumerationOptions& options)
{
  return scan_symmetric_group(poset, options, [&](const EdgeBijection& theta) { return in_M(poset, theta); });
}

} // namespace posetlie
