#include "tropmc/montecarlo.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>

#include "tropmc/errors.hpp"
#include "tropmc/sampler.hpp"
#include "tropmc/symanzik.hpp"

namespace tropmc {

ChunkResult run_parallel(const ChunkFunction& chunk, std::uint64_t samples, int workers,
                         std::uint64_t chunk_size) {
  if (samples == 0) throw ContractError("a Monte Carlo run needs at least one sample");
  if (workers < 1) throw ContractError("need at least one worker");
  if (chunk_size == 0) throw ContractError("chunk size must be positive");
  const std::uint64_t chunks = (samples + chunk_size - 1) / chunk_size;
  std::vector<std::optional<ChunkResult>> results(static_cast<std::size_t>(chunks));
  std::atomic<std::uint64_t> next{0};
  std::atomic<bool> failed{false};
  std::mutex error_mutex;
  std::string first_error;

  auto work = [&]() {
    while (!failed.load(std::memory_order_relaxed)) {
      const std::uint64_t i = next.fetch_add(1);
      if (i >= chunks) return;
      const std::uint64_t count = std::min(chunk_size, samples - i * chunk_size);
      try {
        results[i] = chunk(i, count);
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!failed.exchange(true)) first_error = e.what();
      }
    }
  };

  const auto threads = static_cast<std::size_t>(std::min<std::uint64_t>(
      static_cast<std::uint64_t>(workers), chunks));
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  ChunkResult total;
  std::uint64_t completed = 0;
  for (const auto& r : results) {
    if (!r) continue;
    total.merge(*r);
    completed += r->primary.count();
  }
  if (failed) throw PartialResult("worker failed: " + first_error, completed);
  return total;
}

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

EstimateReport estimate_one_pi(const CoefficientTables& tables, int loops, int legs,
                               const RunOptions& options, double mass_ratio) {
  if (tables.mode() != Mode::plain) throw ContractError("the 1PI estimator needs plain-mode tables");
  if (loops < 1 || !is_valid_sector(tables.k(), loops, legs) || legs < 2 || !tables.contains(loops, legs))
    throw InvalidSector("no tabulated 1PI sector with " + std::to_string(loops) + " loops and " +
                        std::to_string(legs) + " legs");
  const double w = omega(tables.k(), tables.dimension(), loops, legs);
  if (!(w > 0.0)) throw InvalidSector("sector is not convergent (omega <= 0)");
  const double z = tables.z(loops, legs);
  if (!(z > 0.0)) throw InvalidSector("Z vanishes in the requested sector");

  const auto start = std::chrono::steady_clock::now();
  const SymanzikContext ctx{tables.dimension(), mass_ratio, w};
  ChunkResult total = run_parallel(
      [&](std::uint64_t index, std::uint64_t count) {
        Sampler sampler(tables);
        Rng rng(options.seed, index);
        ChunkResult r;
        for (std::uint64_t i = 0; i < count; ++i) {
          MetricGraphSample s = sampler.sample_one_pi(loops, legs, rng);
          r.primary.add(residual_f(s.graph, s.coords, ctx));
        }
        return r;
      },
      options.samples, options.workers, options.chunk_size);

  EstimateReport report;
  report.quantity = "one_pi_vertex";
  report.k = tables.k();
  report.dimension = tables.dimension();
  report.loops = loops;
  report.legs = legs;
  report.samples = total.primary.count();
  report.normalization = z;
  report.value = z * total.primary.mean();
  report.standard_error = z * total.primary.standard_error();
  report.wall_seconds = seconds_since(start);
  return report;
}

EstimateReport estimate_phi3_vertex(const CoefficientTables& tables, int loops, const RunOptions& options) {
  if (tables.k() != 3 || tables.dimension() != 3.0)
    throw ContractError("the phi^3 vertex estimator needs k=3, D=3 tables");
  EstimateReport r = estimate_one_pi(tables, loops, 3, options);
  r.quantity = "phi3_vertex";
  return r;
}

EstimateReport estimate_beta_prim(const CoefficientTables& tables, int loops, const RunOptions& options,
                                  TopNormalization top) {
  if (tables.k() != 4 || tables.dimension() != 4.0 || tables.mode() != Mode::positive)
    throw ContractError("the primitive beta function needs positive-mode k=4, D=4 tables");
  if (loops < 1 || !tables.contains(loops, 4))
    throw InvalidSector("loop order " + std::to_string(loops) + " is outside the tables");
  const double z_top = tables.z_top(loops, 4);
  if (!(z_top > 0.0)) throw InvalidSector("no primitive candidates at this loop order");
  const double normalization = 2.0 * (top == TopNormalization::half_beaded ? z_top : 2.0 * z_top);

  const auto start = std::chrono::steady_clock::now();
  ChunkResult total = run_parallel(
      [&](std::uint64_t index, std::uint64_t count) {
        Sampler sampler(tables);
        Rng rng(options.seed, index);
        ChunkResult r;
        for (std::uint64_t i = 0; i < count; ++i) {
          MetricGraphSample s = sampler.sample_one_pi(loops, 4, rng);
          if (!is_primitive(s.graph)) {
            r.primary.add(0.0);
            r.secondary.add(0.0);
            continue;
          }
          r.primary.add_aux();
          const double log_ratio = log_u_tropical(s.graph, s.coords) - log_u_exact(s.graph, s.coords);
          r.primary.add(std::exp(2.0 * log_ratio));
          r.secondary.add(1.0);
        }
        return r;
      },
      options.samples, options.workers, options.chunk_size);

  EstimateReport report;
  report.quantity = "beta_prim";
  report.k = 4;
  report.dimension = 4.0;
  report.loops = loops;
  report.legs = 4;
  report.samples = total.primary.count();
  report.aux_hits = total.primary.aux_count();
  report.normalization = normalization;
  report.value = normalization * total.primary.mean();
  report.standard_error = normalization * total.primary.standard_error();
  report.secondary_quantity = "beta_hepp_prim";
  report.secondary_value = normalization * total.secondary.mean();
  report.secondary_error = normalization * total.secondary.standard_error();
  report.wall_seconds = seconds_since(start);
  return report;
}

double relative_error_bound(int loops, int legs, int k, double d) {
  const SectorShape shape = sector_shape(k, loops, legs);
  const double w = omega(k, d, loops, legs);
  const double log_trees = loops >= 1 ? shape.edges * std::log(2.0) : 0.0;
  const double log_edges = shape.edges > 0 ? std::log(static_cast<double>(shape.edges)) : 0.0;
  return std::exp(0.5 * d * log_trees + w * log_edges);
}

}  // namespace tropmc
