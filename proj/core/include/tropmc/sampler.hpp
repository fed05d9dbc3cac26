#pragma once

#include "tropmc/graph.hpp"
#include "tropmc/rng.hpp"
#include "tropmc/tables.hpp"

namespace tropmc {

struct MetricGraphSample {
  Graph graph;
  MetricAssignment coords;
  int loops = 0;
  int legs = 0;
};

// Draws metric 1PI and beaded graphs from the tropical measure described by a
// set of coefficient tables. Holds no random state; the caller owns the Rng,
// so one Sampler can serve many streams but is not meant to be shared between
// threads (it keeps scratch buffers).
class Sampler {
 public:
  explicit Sampler(const CoefficientTables& tables);

  const CoefficientTables& tables() const noexcept { return tables_; }

  // 1PI sample; the newest edge (glued last) carries the largest coordinate.
  MetricGraphSample sample_one_pi(int loops, int legs, Rng& rng);
  // Beaded sample with special legs 1 and 2.
  MetricGraphSample sample_beaded(int loops, int legs, Rng& rng);

  // Weight of the sector for the 1PI sampler: Z, or the top-level
  // normalisation where omega = 0 in positive mode.
  double one_pi_normalization(int loops, int legs) const;

 private:
  struct Raw {
    int vertices = 0;
    std::vector<Edge> edges;
    std::vector<int> legs;  // legs[0], legs[1] are the special legs of beaded pieces
    std::vector<double> z;
  };

  void one_pi(int loops, int legs, Rng& rng, Raw& out, bool top_level);
  void beaded(int loops, int legs, Rng& rng, Raw& out);
  MetricGraphSample finish(Raw&& raw, int loops, int legs, bool beaded) const;

  const CoefficientTables& tables_;
  std::vector<int> pool_;
};

// Divide all coordinates by their maximum.
MetricGraphSample to_projective(const MetricGraphSample& sample);

}  // namespace tropmc
