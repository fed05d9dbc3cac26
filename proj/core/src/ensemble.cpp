#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <unordered_map>

#include "tropmc/errors.hpp"
#include "tropmc/hepp.hpp"

namespace tropmc {

namespace {

mpz_class factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

// Set partitions of leg labels into blocks of size <= cap, as restricted growth
// strings: block[i] is the block of leg i+1, blocks numbered by first leg.
void for_each_leg_partition(int legs, int cap, int max_blocks,
                            const std::function<void(const std::vector<int>&, int)>& visit) {
  std::vector<int> block(static_cast<std::size_t>(legs), 0);
  std::vector<int> size(static_cast<std::size_t>(legs + 1), 0);
  std::function<void(int, int)> rec = [&](int i, int used) {
    if (i == legs) {
      visit(block, used);
      return;
    }
    for (int b = 0; b <= used && b < max_blocks; ++b) {
      if (size[b] == cap) continue;
      block[i] = b;
      ++size[b];
      rec(i + 1, std::max(used, b + 1));
      --size[b];
    }
  };
  rec(0, 0);
}

// Labelled multigraphs on `vertices` with the given residual degrees. `visit`
// receives the edge list and the symmetry denominator prod a_uv! prod 2^s s!.
class MultigraphEnumerator {
 public:
  MultigraphEnumerator(std::vector<int> residual,
                       std::function<void(const std::vector<Edge>&, const mpz_class&)> visit)
      : rem_(std::move(residual)), n_(static_cast<int>(rem_.size())), visit_(std::move(visit)) {}

  void run() { step(0, 0, 1); }

 private:
  int tail_sum(int from) const {
    int s = 0;
    for (int w = from; w < n_; ++w) s += rem_[w];
    return s;
  }

  void step(int v, int u, mpz_class denom) {
    if (v == n_) {
      visit_(edges_, denom);
      return;
    }
    if (u == v) {
      for (int s = 0; 2 * s <= rem_[v]; ++s) {
        rem_[v] -= 2 * s;
        for (int i = 0; i < s; ++i) edges_.push_back({v, v});
        mpz_class loop_sym = factorial(s) << s;
        if (rem_[v] <= tail_sum(v + 1)) {
          if (v + 1 == n_) {
            if (rem_[v] == 0) step(v + 1, v + 1, denom * loop_sym);
          } else {
            step(v, v + 1, denom * loop_sym);
          }
        }
        edges_.resize(edges_.size() - static_cast<std::size_t>(s));
        rem_[v] += 2 * s;
      }
      return;
    }
    const int max_a = std::min(rem_[v], rem_[u]);
    for (int a = 0; a <= max_a; ++a) {
      rem_[v] -= a;
      rem_[u] -= a;
      if (rem_[v] <= tail_sum(u + 1)) {
        for (int i = 0; i < a; ++i) edges_.push_back({v, u});
        mpz_class next = denom * factorial(a);
        if (u + 1 == n_) {
          if (rem_[v] == 0) step(v + 1, v + 1, next);
        } else {
          step(v, u + 1, next);
        }
        edges_.resize(edges_.size() - static_cast<std::size_t>(a));
      }
      rem_[v] += a;
      rem_[u] += a;
    }
  }

  std::vector<int> rem_;
  int n_;
  std::function<void(const std::vector<Edge>&, const mpz_class&)> visit_;
  std::vector<Edge> edges_;
};

class HeppCache {
 public:
  HeppCache(const Rational& d, Mode mode) : d_(d), mode_(mode) {}
  const Rational& operator()(const Graph& g) {
    std::string key = canonical_key(g, false);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(std::move(key), hepp(g, d_, mode_)).first;
    return it->second;
  }

 private:
  Rational d_;
  Mode mode_;
  std::unordered_map<std::string, Rational> cache_;
};

}  // namespace

std::vector<EnsembleClass> enumerate_ensemble(int k, int loops, int legs) {
  const SectorShape shape = sector_shape(k, loops, legs);
  const int V = shape.vertices;
  if (V > kCanonicalMaxVertices) throw ContractError("ensemble too large to enumerate");

  // With two vertices or more, a vertex holding k-1 legs hangs on a bridge.
  const int max_legs_per_vertex = V >= 2 ? k - 2 : k;
  std::map<std::string, EnsembleClass> classes;
  for_each_leg_partition(legs, max_legs_per_vertex, V, [&](const std::vector<int>& block, int used) {
    std::vector<int> residual(static_cast<std::size_t>(V), k);
    for (int b : block) --residual[b];
    // Vertices without legs are interchangeable; the partition stands for
    // V!/(V-used)! leg maps, which cancels the 1/V! up to (V-used)!.
    const mpz_class orbit = factorial(V - used);
    MultigraphEnumerator(residual, [&](const std::vector<Edge>& edges, const mpz_class& denom) {
      Graph g(V, edges, block);
      if (!is_one_particle_irreducible(g)) return;
      std::string key = canonical_key(g, true);
      Rational w(mpz_class(1), denom * orbit);
      w.canonicalize();
      auto it = classes.find(key);
      if (it == classes.end()) {
        classes.emplace(key, EnsembleClass{std::move(g), key, w});
      } else {
        it->second.weight += w;
      }
    }).run();
  });

  std::vector<EnsembleClass> out;
  out.reserve(classes.size());
  for (auto& [key, cls] : classes) out.push_back(std::move(cls));
  return out;
}

Rational ensemble_sum_oracle(int k, const Rational& d, int loops, int legs, Mode mode) {
  HeppCache cache(d, mode);
  Rational sum = 0;
  for (const EnsembleClass& cls : enumerate_ensemble(k, loops, legs))
    sum += cls.weight * cache(cls.representative);
  return sum;
}

Rational ensemble_sum_by_pairings(int k, const Rational& d, int loops, int legs, Mode mode) {
  const SectorShape shape = sector_shape(k, loops, legs);
  const int V = shape.vertices;
  const int slots = k * V;
  if (V > 5) throw ContractError("pairing enumeration is limited to five vertices");

  HeppCache cache(d, mode);
  Rational sum = 0;
  std::vector<int> leg_slot(static_cast<std::size_t>(legs));
  std::vector<char> used(static_cast<std::size_t>(slots), 0);
  std::vector<Edge> edges;

  // Lexicographic perfect matchings of the unused slots.
  std::function<void()> match = [&]() {
    int first = 0;
    while (first < slots && used[first]) ++first;
    if (first == slots) {
      std::vector<int> leg_vertex(static_cast<std::size_t>(legs));
      for (int i = 0; i < legs; ++i) leg_vertex[i] = leg_slot[i] / k;
      Graph g(V, edges, leg_vertex);
      if (is_one_particle_irreducible(g) && loop_number(g) == loops) sum += cache(g);
      return;
    }
    used[first] = 1;
    for (int other = first + 1; other < slots; ++other) {
      if (used[other]) continue;
      used[other] = 1;
      edges.push_back({first / k, other / k});
      match();
      edges.pop_back();
      used[other] = 0;
    }
    used[first] = 0;
  };

  std::function<void(int)> place = [&](int leg) {
    if (leg == legs) {
      match();
      return;
    }
    for (int s = 0; s < slots; ++s) {
      if (used[s]) continue;
      used[s] = 1;
      leg_slot[leg] = s;
      place(leg + 1);
      used[s] = 0;
    }
  };
  place(0);

  mpz_class k_fact = factorial(k);
  mpz_class denom = factorial(V);
  for (int i = 0; i < V; ++i) denom *= k_fact;
  sum /= Rational(denom);
  sum.canonicalize();
  return sum;
}

}  // namespace tropmc
