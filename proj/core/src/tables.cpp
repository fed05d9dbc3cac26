#include "tropmc/tables.hpp"

#include <cmath>
#include <limits>

#include "tropmc/errors.hpp"

namespace tropmc {

namespace {

std::string cell_name(int loops, int legs) {
  return "(L=" + std::to_string(loops) + ", n=" + std::to_string(legs) + ")";
}

void check_spec(const TableSpec& spec) {
  if (spec.k < 3) throw ContractError("vertex valence k must be at least 3");
  if (spec.l_max < 0) throw ContractError("l_max must be non-negative");
  if (spec.n_max < 2) throw ContractError("n_max must be at least 2");
  if (!std::isfinite(spec.dimension)) throw ContractError("dimension must be finite");
}

std::vector<std::vector<double>> pascal(int rows) {
  std::vector<std::vector<double>> c(static_cast<std::size_t>(rows + 1));
  for (int n = 0; n <= rows; ++n) {
    c[n].assign(static_cast<std::size_t>(n + 1), 1.0);
    for (int r = 1; r < n; ++r) c[n][r] = c[n - 1][r - 1] + c[n - 1][r];
  }
  return c;
}

}  // namespace

int CoefficientTables::row_width(int loops) const { return spec_.n_max + 2 * (spec_.l_max - loops); }

bool CoefficientTables::contains(int loops, int legs) const {
  return loops >= 0 && loops <= spec_.l_max && legs >= 0 && legs <= row_width(loops);
}

void CoefficientTables::check_cell(int loops, int legs) const {
  if (!contains(loops, legs))
    throw InvalidSector("sector " + cell_name(loops, legs) + " is outside the tabulated range");
}

double CoefficientTables::z(int loops, int legs) const {
  check_cell(loops, legs);
  return z_[loops][legs];
}

double CoefficientTables::b(int loops, int legs) const {
  check_cell(loops, legs);
  return b_[loops][legs];
}

double CoefficientTables::z_top(int loops, int legs) const {
  check_cell(loops, legs);
  return z_top_[loops][legs];
}

const AliasSampler& CoefficientTables::outcomes(int loops, int legs) const {
  check_cell(loops, legs);
  if (!samplable_) throw InvalidSector("tables with negative or singular entries cannot be sampled");
  const AliasSampler& s = samplers_[loops][legs];
  if (s.empty()) throw InvalidSector("B vanishes in sector " + cell_name(loops, legs));
  return s;
}

std::vector<double> CoefficientTables::outcome_weights(int loops, int legs) const {
  check_cell(loops, legs);
  if (legs < 2) throw InvalidSector("beaded graphs need at least two legs");
  std::vector<double> w(1 + static_cast<std::size_t>(loops + 1) * static_cast<std::size_t>(legs - 1), 0.0);
  w[0] = z_[loops][legs];
  for (int lh = 0; lh <= loops; ++lh) {
    for (int nh = 0; nh <= legs - 2; ++nh) {
      w[outcome_index(lh, nh, legs)] =
          binom(legs - 2, nh) * z_[lh][nh + 2] * b_[loops - lh][legs - nh];
    }
  }
  return w;
}

CoefficientTables CoefficientTables::build(const TableSpec& spec, const BuildOptions& options) {
  check_spec(spec);
  CoefficientTables t;
  t.spec_ = spec;
  const int k = spec.k;
  const int top_width = t.row_width(0);
  for (int loops = 0; loops <= spec.l_max; ++loops) {
    const auto cells = static_cast<std::size_t>(t.row_width(loops) + 1);
    t.z_.emplace_back(cells, 0.0);
    t.b_.emplace_back(cells, 0.0);
    t.z_top_.emplace_back(cells, 0.0);
  }
  t.binom_ = pascal(top_width);

  bool hypothesis = true;  // every omega(L >= 1, n >= 2) in range is positive
  auto fill_b_row = [&](int loops) {
    for (int n = 2; n <= t.row_width(loops); ++n) {
      double sum = t.z_[loops][n];
      for (int lh = 0; lh <= loops; ++lh) {
        const auto& zrow = t.z_[lh];
        const auto& brow = t.b_[loops - lh];
        for (int nh = 0; nh <= n - 2; ++nh) {
          const double zv = zrow[nh + 2];
          if (zv == 0.0) continue;
          sum += t.binom_[n - 2][nh] * zv * brow[n - nh];
        }
      }
      t.b_[loops][n] = sum;
    }
  };

  if (k <= top_width) t.z_[0][k] = 1.0;
  fill_b_row(0);
  for (int loops = 1; loops <= spec.l_max; ++loops) {
    for (int n = 2; n <= t.row_width(loops); ++n) {
      if (!is_valid_sector(k, loops, n)) continue;
      const double w = omega(k, spec.dimension, loops, n);
      const double below = t.b_[loops - 1][n + 2];
      if (w <= 0.0) hypothesis = false;
      if (spec.mode == Mode::positive) {
        if (w > 0.0) {
          t.z_[loops][n] = below / (2.0 * w);
        } else if (w == 0.0) {
          t.z_top_[loops][n] = below / 2.0;
        }
        continue;
      }
      if (w == 0.0) {
        if (!options.allow_singular) {
          throw NonGenericDimension("omega vanishes in sector " + cell_name(loops, n) +
                                        ", the plain tables diverge at this dimension",
                                    cell_name(loops, n));
        }
        t.z_[loops][n] = std::numeric_limits<double>::quiet_NaN();
      } else {
        t.z_[loops][n] = below / (2.0 * w);
      }
    }
    fill_b_row(loops);
  }

  bool negative = false, singular = false;
  for (const auto* grid : {&t.z_, &t.b_, &t.z_top_}) {
    for (const auto& row : *grid) {
      for (double x : row) {
        if (std::isnan(x)) singular = true;
        else if (x < 0.0) negative = true;
        else if (!std::isfinite(x)) throw InternalConsistencyError("table entry overflowed");
      }
    }
  }
  if (negative && (spec.mode == Mode::positive || hypothesis))
    throw InternalConsistencyError("negative table entry although every sector converges");
  t.samplable_ = !negative && !singular;
  t.build_samplers();
  return t;
}

CoefficientTables CoefficientTables::from_grids(const TableSpec& spec,
                                                std::vector<std::vector<double>> z,
                                                std::vector<std::vector<double>> b,
                                                std::vector<std::vector<double>> z_top) {
  check_spec(spec);
  CoefficientTables t;
  t.spec_ = spec;
  auto check_shape = [&](const std::vector<std::vector<double>>& grid, const char* name) {
    if (grid.size() != static_cast<std::size_t>(spec.l_max + 1))
      throw FormatError(std::string("grid '") + name + "' has the wrong number of rows");
    for (int loops = 0; loops <= spec.l_max; ++loops) {
      if (grid[loops].size() != static_cast<std::size_t>(t.row_width(loops) + 1))
        throw FormatError(std::string("grid '") + name + "' row " + std::to_string(loops) +
                          " has the wrong length");
    }
  };
  check_shape(z, "z");
  check_shape(b, "b");
  check_shape(z_top, "z_top");
  t.z_ = std::move(z);
  t.b_ = std::move(b);
  t.z_top_ = std::move(z_top);
  t.binom_ = pascal(t.row_width(0));
  t.samplable_ = true;
  for (const auto* grid : {&t.z_, &t.b_, &t.z_top_})
    for (const auto& row : *grid)
      for (double x : row)
        if (!(x >= 0.0)) t.samplable_ = false;
  t.build_samplers();
  return t;
}

void CoefficientTables::build_samplers() {
  samplers_.assign(static_cast<std::size_t>(spec_.l_max + 1), {});
  if (!samplable_) return;
  for (int loops = 0; loops <= spec_.l_max; ++loops) {
    samplers_[loops].resize(static_cast<std::size_t>(row_width(loops) + 1));
    for (int n = 2; n <= row_width(loops); ++n) {
      if (b_[loops][n] > 0.0) samplers_[loops][n] = AliasSampler(outcome_weights(loops, n));
    }
  }
}

}  // namespace tropmc
