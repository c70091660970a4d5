#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lafr/checks.hpp"
#include "lafr/corpus.hpp"
#include "lafr/error.hpp"
#include "lafr/graph/constructions.hpp"
#include "lafr/graph/graph.hpp"
#include "lafr/graph/io.hpp"
#include "lafr/revival.hpp"
#include "lafr/spectral.hpp"

namespace lafr {

/// Runs body(i) for i in [0, count) on `workers` threads. Items are claimed in
/// blocks; the first exception is rethrown after all threads join.
inline void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& body,
                         std::size_t block = 256) {
  workers = std::max(1U, workers);
  if (workers == 1 || count <= block) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    try {
      for (std::size_t lo; (lo = next.fetch_add(block)) < count;)
        for (std::size_t i = lo; i < std::min(count, lo + block); ++i) body(i);
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      next = count;
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

struct Counterexample {
  std::string graph6;
  std::string reason;
  friend bool operator==(const Counterexample&, const Counterexample&) = default;
  friend auto operator<=>(const Counterexample&, const Counterexample&) = default;
};

struct CheckLine {
  std::string name;
  bool passed = false;
  std::string detail;
  friend bool operator==(const CheckLine&, const CheckLine&) = default;
};

struct CampaignResult {
  std::string name;
  std::size_t corpus_size = 0;
  /// Graphs with at least one proper pair.
  std::size_t positives = 0;
  std::vector<Counterexample> counterexamples;
  std::vector<CheckLine> checks;
  /// Trees: corpus size per order, starting at order 2.
  std::vector<std::size_t> level_sizes;
  double wall_seconds = 0.0;
  unsigned workers = 1;

  bool ok() const { return counterexamples.empty(); }
};

inline nlohmann::json to_json(const CampaignResult& r) {
  nlohmann::json j;
  j["campaign"] = r.name;
  j["corpus_size"] = r.corpus_size;
  j["positives"] = r.positives;
  j["counterexamples"] = nlohmann::json::array();
  for (const auto& c : r.counterexamples) j["counterexamples"].push_back({{"graph6", c.graph6}, {"reason", c.reason}});
  j["checks"] = nlohmann::json::array();
  for (const auto& c : r.checks) j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  if (!r.level_sizes.empty()) j["level_sizes"] = r.level_sizes;
  j["wall_seconds"] = r.wall_seconds;
  j["workers"] = r.workers;
  return j;
}

namespace detail {

template <class F>
CampaignResult timed(std::string name, unsigned workers, F&& body) {
  const auto t0 = std::chrono::steady_clock::now();
  CampaignResult r;
  r.name = std::move(name);
  r.workers = std::max(1U, workers);
  body(r);
  std::sort(r.counterexamples.begin(), r.counterexamples.end());
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace detail

inline constexpr std::size_t kMaxTreeCampaignOrder = 14;

/// Every free tree on 2..n_max vertices other than K2 and P3 has no proper pair.
inline CampaignResult campaign_trees(std::size_t n_max, unsigned workers = 1) {
  if (n_max < 2 || n_max > kMaxTreeCampaignOrder) throw DomainError("campaign trees: n_max must be in [2, 14]");
  return detail::timed("trees", workers, [&](CampaignResult& r) {
    for (std::size_t n = 2; n <= n_max; ++n) {
      const auto trees = corpus::free_trees(n);
      r.level_sizes.push_back(trees.size());
      r.corpus_size += trees.size();
      if (n == 2) {
        ++r.positives;  // K2, closed-form schedule
        continue;
      }
      std::vector<char> positive(trees.size());
      parallel_for(trees.size(), workers, [&](std::size_t i) {
        SpectralAnalyzer sa(trees[i]);
        positive[i] = has_proper_pair(sa);
      }, 8);
      for (std::size_t i = 0; i < trees.size(); ++i) {
        if (!positive[i]) continue;
        ++r.positives;
        if (n != 3) r.counterexamples.push_back({to_graph6(trees[i]), "tree with a proper pair"});
      }
    }
  });
}

/// Called once per positive graph with its first proper decision; calls are serialized.
using PositiveObserver = std::function<void(const Graph&, const RevivalDecision&)>;

/// Every connected labeled graph on p vertices with a proper pair is a double cone.
inline CampaignResult campaign_prime(std::size_t p, unsigned workers = 1, const PositiveObserver& on_positive = {}) {
  if (p != 5 && p != 7) throw DomainError("campaign prime: order must be 5 or 7");
  return detail::timed("prime" + std::to_string(p), workers, [&](CampaignResult& r) {
    const std::uint64_t masks = corpus::labeled_mask_count(p);
    std::atomic<std::size_t> connected{0}, positives{0};
    std::mutex mu;
    parallel_for(masks, workers, [&](std::size_t mask) {
      const Graph g = graph_from_mask(p, mask);
      if (!is_connected(g)) return;
      connected.fetch_add(1, std::memory_order_relaxed);
      SpectralAnalyzer sa(g);
      const auto found = all_lafr_pairs(sa, true);
      if (found.empty() || found.back().status != RevivalStatus::proper) return;
      positives.fetch_add(1, std::memory_order_relaxed);
      const bool cone = is_double_cone(g).has_value();
      if (!cone || on_positive) {
        std::lock_guard lock(mu);
        if (!cone) r.counterexamples.push_back({to_graph6(g), "proper pair on a graph that is not a double cone"});
        if (on_positive) on_positive(g, found.back());
      }
    }, 4096);
    r.corpus_size = connected;
    r.positives = positives;
  });
}

namespace detail {

inline void check(CampaignResult& r, std::string name, bool passed, std::string detail = {}) {
  if (!passed) r.counterexamples.push_back({name, detail.empty() ? "check failed" : detail});
  r.checks.push_back({std::move(name), passed, std::move(detail)});
}

inline std::string verdict_name(Verdict v) {
  return v == Verdict::holds ? "holds" : v == Verdict::fails ? "fails" : "not applicable";
}

/// Connected graph with complement disconnected, on 3..10 vertices.
inline Graph random_join(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> size(1, 5);
  auto random_graph = [&](std::size_t n) {
    std::bernoulli_distribution coin(0.5);
    std::vector<Edge> e;
    for (Vertex j = 1; j < n; ++j)
      for (Vertex i = 0; i < j; ++i)
        if (coin(rng)) e.emplace_back(i, j);
    return Graph(n, e);
  };
  while (true) {
    const std::size_t nx = size(rng), ny = size(rng);
    if (nx + ny < 3) continue;
    return join(random_graph(nx), random_graph(ny));
  }
}

}  // namespace detail

inline constexpr std::size_t kRandomJoins = 20;
inline constexpr std::uint64_t kRandomJoinSeed = 20240601;

/// The fixed battery of construction theorems.
inline CampaignResult campaign_constructions(unsigned workers = 1) {
  using detail::check;
  return detail::timed("constructions", workers, [&](CampaignResult& r) {
    // Double cones over every labeled graph on 1..5 vertices.
    {
      std::vector<std::pair<std::size_t, std::uint64_t>> ys;
      for (std::size_t m = 1; m <= 5; ++m)
        for (std::uint64_t mask = 0; mask < corpus::labeled_mask_count(m); ++mask) ys.emplace_back(m, mask);
      std::vector<std::string> failure(ys.size());
      parallel_for(ys.size(), workers, [&](std::size_t i) {
        const Graph z = double_cone(graph_from_mask(ys[i].first, ys[i].second));
        const auto n = static_cast<long long>(z.order());
        const auto d = decide_proper_lafr(z, 0, 1);
        const bool ok = d.status == RevivalStatus::proper && d.g == n && d.earliest_time == PiTime::make(2, n) &&
                        d.is_pst == (n == 4);
        if (!ok) failure[i] = to_graph6(z);
      }, 16);
      std::size_t bad = 0;
      for (const auto& f : failure)
        if (!f.empty()) r.counterexamples.push_back({f, "double cone without revival at 2 pi / n"}), ++bad;
      r.checks.push_back({"double cones over all graphs on 1..5 vertices", bad == 0, std::to_string(ys.size()) + " cones"});
      r.corpus_size += ys.size();
    }

    const PiTime two_thirds = PiTime::make(2, 3);
    {
      const auto c = check_cartesian_theorem(complete_graph(3), path_graph(3), two_thirds);
      check(r, "cartesian K3 x P3 at 2pi/3", c.holds() && c.left, "left=" + std::to_string(c.left) + " right=" + std::to_string(c.right));
    }
    {
      const auto c = check_cartesian_theorem(complete_graph(2), path_graph(3), two_thirds);
      check(r, "cartesian K2 x P3 at 2pi/3", c.holds() && !c.left, "left=" + std::to_string(c.left) + " right=" + std::to_string(c.right));
    }
    {
      const auto c = check_cartesian_theorem(complete_graph(1), path_graph(3), two_thirds);
      check(r, "cartesian K1 x P3 at 2pi/3", c.holds() && c.left, "left=" + std::to_string(c.left) + " right=" + std::to_string(c.right));
    }
    {
      const auto v = check_complement_transfer(cycle_graph(4), PiTime::make(1, 2));
      check(r, "complement identity C4 at pi/2", v == Verdict::holds, detail::verdict_name(v));
      const auto w = check_complement_transfer(disjoint_union(path_graph(3), complete_graph(1)), PiTime::make(1, 2));
      check(r, "complement identity P3+K1 at pi/2", w == Verdict::holds, detail::verdict_name(w));
    }
    {
      std::mt19937_64 rng(kRandomJoinSeed);
      std::size_t failed = 0;
      for (std::size_t i = 0; i < kRandomJoins; ++i) {
        const Graph z = detail::random_join(rng);
        if (check_join_timing(z) != Verdict::holds) {
          ++failed;
          r.counterexamples.push_back({to_graph6(z), "join with a proper pair where g does not divide n"});
        }
      }
      r.checks.push_back({"join timing on 20 random joins", failed == 0, std::to_string(failed) + " failed"});
      r.corpus_size += kRandomJoins;
    }
    {
      struct Inst {
        const char* name;
        Graph x;
        Vertex a, b;
        Graph y;
        PiTime t;
      };
      const Inst insts[] = {
          {"infjoin C4 + K4 at pi/2", cycle_graph(4), 0, 2, complete_graph(4), PiTime::make(1, 2)},
          {"infjoin P3 + K3 at 2pi/3", path_graph(3), 0, 2, complete_graph(3), two_thirds},
          {"infjoin DC(K4) + C6 at pi/3", double_cone(complete_graph(4)), 0, 1, cycle_graph(6), PiTime::make(1, 3)},
      };
      for (const auto& in : insts) {
        const auto d = check_infjoin_construction(in.x, in.a, in.b, in.y);
        check(r, in.name, d && proper_at(*d, in.t), d ? std::string(to_string(d->status)) : "hypothesis failed");
      }
    }
    {
      const std::vector<std::size_t> m{2, 4};
      const auto d = decide_proper_lafr(threshold_graph(m), 0, 1);
      const PiTime t = PiTime::make(1, 3);
      check(r, "threshold (2,4) at pi/3",
            d.status == RevivalStatus::proper && d.earliest_time == t && proper_at(d, t) &&
                threshold_lafr_conditions(m, 0, 1, t),
            std::string(to_string(d.status)));
    }
    for (unsigned n : {2U, 4U}) {
      const unsigned k = n == 2 ? 2 : 4;  // Sylvester order 2^k = n^2
      const Graph h = hadamard_graph(sylvester_hadamard(k));
      SpectralAnalyzer sa(h);
      const Vertex b = h.order() / 4;
      const auto part = sa.strong_cospectral(0, b);
      check(r, "hadamard partition n=" + std::to_string(n), part && hadamard_partition_check(n, *part),
            std::to_string(h.order()) + " vertices");
    }
    for (long long q : {1, 3, 5}) {
      const auto p = check_polygamy_conditions(12 * q, 12, 6 * q, 4);
      check(r, "polygamy arithmetic q=" + std::to_string(q), p.ok,
            p.lafr_x_per_y_time.to_string() + ", " + p.lafr_y_per_x_time.to_string());
    }
  });
}

}  // namespace lafr
