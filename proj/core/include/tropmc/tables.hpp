#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tropmc/alias.hpp"
#include "tropmc/sector.hpp"

namespace tropmc {

struct TableSpec {
  int k = 3;
  double dimension = 3.0;
  Mode mode = Mode::plain;
  int l_max = 0;
  int n_max = 2;

  friend bool operator==(const TableSpec&, const TableSpec&) = default;
};

struct BuildOptions {
  // Plain mode only: store NaN where omega(L,n) = 0 instead of throwing. The
  // NaN then marks every cell that depends on the divergent one.
  bool allow_singular = false;
};

// Coefficient grids Z(L,n) and B(L,n), and the alias samplers for the
// beaded-graph outcome. Row L holds 0 <= n <= n_max + 2 (l_max - L), which is
// exactly what the recursion for rows up to l_max with n <= n_max needs.
class CoefficientTables {
 public:
  static CoefficientTables build(const TableSpec& spec, const BuildOptions& options = {});

  const TableSpec& spec() const noexcept { return spec_; }
  int k() const noexcept { return spec_.k; }
  double dimension() const noexcept { return spec_.dimension; }
  Mode mode() const noexcept { return spec_.mode; }
  int l_max() const noexcept { return spec_.l_max; }
  int n_max() const noexcept { return spec_.n_max; }

  int row_width(int loops) const;  // largest n stored in the row
  bool contains(int loops, int legs) const;

  // Out-of-range access throws InvalidSector.
  double z(int loops, int legs) const;
  double b(int loops, int legs) const;
  // Top-level normalisation for sectors with omega = 0 in positive mode:
  // B(L-1, n+2)/2. Zero elsewhere.
  double z_top(int loops, int legs) const;

  // False when some entry is negative or NaN (plain mode outside the region
  // where every omega is positive); such tables cannot drive the sampler.
  bool samplable() const noexcept { return samplable_; }

  // Outcome 0 is the 1PI bead; outcome 1 + L'(n-1) + n' is the split (L', n').
  const AliasSampler& outcomes(int loops, int legs) const;
  static std::size_t outcome_index(int head_loops, int head_plain_legs, int legs) {
    return 1 + static_cast<std::size_t>(head_loops) * static_cast<std::size_t>(legs - 1) +
           static_cast<std::size_t>(head_plain_legs);
  }
  // Un-normalised outcome weights, the terms of the B recursion.
  std::vector<double> outcome_weights(int loops, int legs) const;

  const std::vector<std::vector<double>>& z_rows() const noexcept { return z_; }
  const std::vector<std::vector<double>>& b_rows() const noexcept { return b_; }
  const std::vector<std::vector<double>>& z_top_rows() const noexcept { return z_top_; }

  // Rebuild from stored grids (used by the table loader).
  static CoefficientTables from_grids(const TableSpec& spec, std::vector<std::vector<double>> z,
                                      std::vector<std::vector<double>> b,
                                      std::vector<std::vector<double>> z_top);

 private:
  void check_cell(int loops, int legs) const;
  void build_samplers();
  double binom(int n, int r) const { return binom_[n][r]; }

  TableSpec spec_;
  std::vector<std::vector<double>> z_, b_, z_top_;
  std::vector<std::vector<double>> binom_;
  std::vector<std::vector<AliasSampler>> samplers_;
  bool samplable_ = true;
};

void save_tables(const CoefficientTables& tables, const std::string& path);
CoefficientTables load_tables(const std::string& path);
// Also checks that the header matches `expected`.
CoefficientTables load_tables(const std::string& path, const TableSpec& expected);

}  // namespace tropmc
