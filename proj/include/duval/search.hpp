#pragma once

// Exhaustive enumeration of du Val baskets and of quasismooth weighted K3
// hypersurfaces F_d in P(a_0, a_1, a_2, a_3) with d = a_0 + a_1 + a_2 + a_3.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "duval/basket.hpp"
#include "duval/catalog.hpp"
#include "duval/threefold.hpp"
#include "duval/wps.hpp"

namespace duval {

struct BasketSignature {
  Basket basket;
  int sigma;

  friend bool operator==(const BasketSignature&, const BasketSignature&) = default;
};

/// Every multiset of ADE types with at most `max_total_d` exceptional curves,
/// ordered by total_d and then lexicographically.
inline std::vector<BasketSignature> enumerate_baskets(int max_total_d) {
  if (max_total_d < 0) throw InvalidType("max_total_d must be nonnegative");
  if (max_total_d > kMaxTotalD) throw BoundViolation("K3 baskets carry at most 19 exceptional curves");
  std::vector<AdeType> types;
  for (int n = 1; n <= max_total_d; ++n) types.push_back(AdeType::A(n));
  for (int n = 4; n <= max_total_d; ++n) types.push_back(AdeType::D(n));
  for (int n = 6; n <= std::min(8, max_total_d); ++n) types.push_back(AdeType::E(n));
  std::sort(types.begin(), types.end());

  std::vector<BasketSignature> out;
  std::vector<AdeType> current;
  std::function<void(std::size_t, int)> grow = [&](std::size_t from, int budget) {
    Basket b(current);
    out.push_back({b, sigma_k3(b, 0)});
    for (std::size_t i = from; i < types.size(); ++i) {
      if (types[i].components() > budget) continue;
      current.push_back(types[i]);
      grow(i, budget - types[i].components());
      current.pop_back();
    }
  };
  grow(0, max_total_d);
  std::sort(out.begin(), out.end(), [](const BasketSignature& x, const BasketSignature& y) {
    const int dx = x.basket.total_d(), dy = y.basket.total_d();
    return dx != dy ? dx < dy : x.basket < y.basket;
  });
  return out;
}

struct K3Family {
  HypersurfaceFamily family;
  Basket basket;
  int sigma;

  CatalogRow to_row() const {
    const auto& w = family.weights.values();
    return {"F_" + std::to_string(family.degree) + " ⊂ " + family.weights.to_string(),
            {w.begin(), w.end()},
            {family.degree},
            basket,
            sigma};
  }
};

/// The K3 hypersurface on sorted weights `w`, if it passes every filter.
inline std::optional<K3Family> k3_candidate(const Weights& w) {
  if (!well_formed(w)) return std::nullopt;
  const HypersurfaceFamily f(w, w.sum());
  if (!quasismooth(f)) return std::nullopt;
  try {
    Basket b = basket(f);
    const int s = sigma_k3(b, 0);
    return K3Family{f, std::move(b), s};
  } catch (const NotDuVal&) {
    return std::nullopt;
  }
}

namespace detail {

/// Families with a_0 <= a_1 <= a_2 <= a_3, lo < a_3 <= hi, in lexicographic
/// order. Work is split by the leading weight a_0.
inline std::vector<K3Family> enumerate_top_weight_range(int lo, int hi, int jobs) {
  if (hi <= lo) return {};
  const int tasks = hi;
  std::vector<std::vector<K3Family>> buckets(static_cast<std::size_t>(tasks));
  std::atomic<int> next{1};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (int a0 = next++; a0 <= tasks; a0 = next++) {
      try {
        auto& bucket = buckets[static_cast<std::size_t>(a0 - 1)];
        for (int a1 = a0; a1 <= hi; ++a1)
          for (int a2 = a1; a2 <= hi; ++a2)
            for (int a3 = std::max(a2, lo + 1); a3 <= hi; ++a3)
              if (auto fam = k3_candidate(Weights(a0, a1, a2, a3))) bucket.push_back(std::move(*fam));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  if (jobs <= 0) jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  jobs = std::min(jobs, tasks);
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<K3Family> out;
  for (auto& b : buckets) std::move(b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline void canonical_sort(std::vector<K3Family>& fams) {
  std::sort(fams.begin(), fams.end(),
            [](const K3Family& x, const K3Family& y) { return x.family.weights < y.family.weights; });
}

}  // namespace detail

/// All quasismooth well-formed K3 hypersurfaces with weights at most `max_weight`,
/// sorted by weight quadruple.
inline std::vector<K3Family> enumerate_k3_hypersurfaces(int max_weight, int jobs = 1) {
  if (max_weight < 1) throw InvalidType("max_weight must be positive");
  auto out = detail::enumerate_top_weight_range(0, max_weight, jobs);
  detail::canonical_sort(out);
  return out;
}

struct StabilizedSearch {
  int max_weight = 0;
  std::vector<K3Family> families;
  std::vector<std::pair<int, std::size_t>> history;  ///< (bound, family count)
};

/// Raises the weight bound by `step` until the family count has stayed the same
/// over two consecutive increments.
inline StabilizedSearch stabilize_k3_hypersurfaces(int start = 40, int step = 10, int jobs = 1, int limit = 400) {
  if (start < 1 || step < 1) throw InvalidType("start and step must be positive");
  StabilizedSearch s;
  s.max_weight = start;
  s.families = detail::enumerate_top_weight_range(0, start, jobs);
  s.history.emplace_back(start, s.families.size());
  auto settled = [&] {
    const auto n = s.history.size();
    return n >= 3 && s.history[n - 1].second == s.history[n - 2].second &&
           s.history[n - 2].second == s.history[n - 3].second;
  };
  while (!settled()) {
    if (s.max_weight + step > limit) throw Error("family count did not stabilize below weight " + std::to_string(limit));
    auto more = detail::enumerate_top_weight_range(s.max_weight, s.max_weight + step, jobs);
    std::move(more.begin(), more.end(), std::back_inserter(s.families));
    s.max_weight += step;
    s.history.emplace_back(s.max_weight, s.families.size());
  }
  detail::canonical_sort(s.families);
  return s;
}

inline std::vector<K3Family> filter_signature(const std::vector<K3Family>& fams, int target) {
  std::vector<K3Family> out;
  std::copy_if(fams.begin(), fams.end(), std::back_inserter(out), [&](const K3Family& f) { return f.sigma == target; });
  return out;
}

inline std::vector<K3Family> find_signature(int target, int max_weight, int jobs = 1) {
  return filter_signature(enumerate_k3_hypersurfaces(max_weight, jobs), target);
}

}  // namespace duval
