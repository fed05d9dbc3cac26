#include "tropmc/sampler.hpp"

#include <algorithm>
#include <cmath>

#include "tropmc/errors.hpp"

namespace tropmc {

Sampler::Sampler(const CoefficientTables& tables) : tables_(tables) {
  if (!tables.samplable()) throw InvalidSector("tables with negative or singular entries cannot be sampled");
}

double Sampler::one_pi_normalization(int loops, int legs) const {
  if (!tables_.contains(loops, legs) || legs < 2) return 0.0;
  const double z = tables_.z(loops, legs);
  if (z > 0.0) return z;
  return tables_.z_top(loops, legs);
}

MetricGraphSample Sampler::sample_one_pi(int loops, int legs, Rng& rng) {
  if (!(one_pi_normalization(loops, legs) > 0.0) &&
      !(loops == 0 && legs == tables_.k() && tables_.contains(0, legs))) {
    throw InvalidSector("no 1PI graphs to sample with " + std::to_string(loops) + " loops and " +
                        std::to_string(legs) + " legs");
  }
  Raw raw;
  one_pi(loops, legs, rng, raw, true);
  return finish(std::move(raw), loops, legs, false);
}

MetricGraphSample Sampler::sample_beaded(int loops, int legs, Rng& rng) {
  if (!tables_.contains(loops, legs) || legs < 2 || !(tables_.b(loops, legs) > 0.0)) {
    throw InvalidSector("no beaded graphs to sample with " + std::to_string(loops) + " loops and " +
                        std::to_string(legs) + " legs");
  }
  Raw raw;
  beaded(loops, legs, rng, raw);
  return finish(std::move(raw), loops, legs, true);
}

void Sampler::one_pi(int loops, int legs, Rng& rng, Raw& out, bool top_level) {
  if (loops == 0) {
    // Only the bare k-valent vertex is 1PI without loops.
    out.vertices = 1;
    out.edges.clear();
    out.z.clear();
    out.legs.assign(static_cast<std::size_t>(tables_.k()), 0);
    return;
  }
  beaded(loops - 1, legs + 2, rng, out);
  out.edges.push_back({out.legs[0], out.legs[1]});
  out.legs.erase(out.legs.begin(), out.legs.begin() + 2);
  const double w = omega(tables_.k(), tables_.dimension(), loops, legs);
  double kappa = 1.0;
  if (w != 0.0) {
    kappa = std::pow(rng.uniform_positive(), 1.0 / w);
  } else if (!top_level || tables_.mode() != Mode::positive) {
    throw InternalConsistencyError("omega = 0 reached below the top level");
  }
  for (double& x : out.z) x *= kappa;
  out.z.push_back(kappa);
}

void Sampler::beaded(int loops, int legs, Rng& rng, Raw& out) {
  struct Link {
    Raw head;
    std::vector<int> subset;
    double bridge;
    int legs;
  };
  std::vector<Link> chain;
  while (true) {
    const std::size_t outcome = tables_.outcomes(loops, legs).sample(rng);
    if (outcome == 0) {
      one_pi(loops, legs, rng, out, false);
      break;
    }
    const int head_loops = static_cast<int>((outcome - 1) / static_cast<std::size_t>(legs - 1));
    const int head_plain = static_cast<int>((outcome - 1) % static_cast<std::size_t>(legs - 1));
    Link link;
    link.legs = legs;
    one_pi(head_loops, head_plain + 2, rng, link.head, false);
    // Partial Fisher-Yates for a uniform head_plain-subset of labels 3..legs.
    pool_.resize(static_cast<std::size_t>(legs - 2));
    for (int i = 0; i < legs - 2; ++i) pool_[i] = i + 3;
    for (int i = 0; i < head_plain; ++i) {
      const auto j = static_cast<std::size_t>(i) + rng.below(static_cast<std::uint64_t>(legs - 2 - i));
      std::swap(pool_[i], pool_[j]);
    }
    link.subset.assign(pool_.begin(), pool_.begin() + head_plain);
    std::sort(link.subset.begin(), link.subset.end());
    link.bridge = rng.uniform_positive();
    chain.push_back(std::move(link));
    loops -= head_loops;
    legs -= head_plain;
  }

  // Attach heads from the innermost outwards; `out` is the running tail.
  std::vector<char> taken;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    Link& link = *it;
    Raw& a = link.head;
    const int offset = a.vertices;
    Raw joined;
    joined.vertices = a.vertices + out.vertices;
    joined.edges = std::move(a.edges);
    joined.edges.reserve(joined.edges.size() + out.edges.size() + 1);
    for (const Edge& e : out.edges) joined.edges.push_back({e.u + offset, e.v + offset});
    joined.edges.push_back({a.legs[1], out.legs[0] + offset});
    joined.z = std::move(a.z);
    joined.z.insert(joined.z.end(), out.z.begin(), out.z.end());
    joined.z.push_back(link.bridge);

    joined.legs.assign(static_cast<std::size_t>(link.legs), -1);
    joined.legs[0] = a.legs[0];
    joined.legs[1] = out.legs[1] + offset;
    taken.assign(static_cast<std::size_t>(link.legs + 1), 0);
    for (std::size_t i = 0; i < link.subset.size(); ++i) {
      joined.legs[link.subset[i] - 1] = a.legs[i + 2];
      taken[link.subset[i]] = 1;
    }
    int label = 3;
    for (std::size_t i = 2; i < out.legs.size(); ++i) {
      while (taken[label]) ++label;
      joined.legs[label - 1] = out.legs[i] + offset;
      ++label;
    }
    out = std::move(joined);
  }
}

MetricGraphSample Sampler::finish(Raw&& raw, int loops, int legs, bool beaded) const {
  std::optional<LegPair> special;
  if (beaded) special = LegPair{1, 2};
  Graph g(raw.vertices, std::move(raw.edges), std::move(raw.legs), special);
  MetricAssignment m(g, std::move(raw.z));
  return {std::move(g), std::move(m), loops, legs};
}

MetricGraphSample to_projective(const MetricGraphSample& sample) {
  const auto& z = sample.coords.coords();
  if (z.empty()) throw EvaluationError("projective coordinates need at least one edge");
  const double top = *std::max_element(z.begin(), z.end());
  std::vector<double> x(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) x[i] = z[i] / top;
  // Guard the maximum against rounding so it is exactly 1.
  for (std::size_t i = 0; i < z.size(); ++i)
    if (z[i] == top) x[i] = 1.0;
  return {sample.graph, MetricAssignment(sample.graph, std::move(x)), sample.loops, sample.legs};
}

}  // namespace tropmc
