#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "tropmc/rational.hpp"
#include "tropmc/tables.hpp"

namespace tropmc {

// Exponent vector: entry 0 is the power of phi, entry i the power of the
// i-th active coupling lambda_{couplings[i-1]}.
using Monomial = std::vector<int>;

// Which part of the power series is kept. A monomial phi^n prod lambda_k^m_k
// has coupling weight c = sum m_k (k-2) and loop order L = 1 + (c - n)/2.
// Both bounds are closed under the loop equation: a coefficient of weight c
// and loop order L only depends on coefficients with smaller or equal values.
struct SeriesTruncation {
  int loop_order_max = 2;
  int weight_max = 4;
  friend bool operator==(const SeriesTruncation&, const SeriesTruncation&) = default;
};

class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  TruncatedSeries(std::vector<int> couplings, SeriesTruncation truncation);

  const std::vector<int>& couplings() const noexcept { return couplings_; }
  const SeriesTruncation& truncation() const noexcept { return truncation_; }

  // Non-zero, well-defined coefficients.
  const std::map<Monomial, Rational>& terms() const noexcept { return terms_; }
  // Monomials whose coefficient diverges at this dimension.
  const std::set<Monomial>& undefined() const noexcept { return undefined_; }

  Rational coefficient(const Monomial& m) const;
  bool is_undefined(const Monomial& m) const { return undefined_.count(m) > 0; }

  int coupling_weight(const Monomial& m) const;
  // Twice the loop order, so that odd values remain visible for malformed input.
  int twice_loop_order(const Monomial& m) const;
  bool within(const Monomial& m) const;

  // Adds to the coefficient; out-of-truncation monomials are dropped.
  void add(const Monomial& m, const Rational& value);
  void mark_undefined(const Monomial& m);

  // phi^n lambda_k^m with only coupling k non-zero; empty if k is not active.
  Monomial monomial(int phi_power, int k, int k_power) const;
  std::string format(const Monomial& m) const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<int> couplings_;
  SeriesTruncation truncation_;
  std::map<Monomial, Rational> terms_;
  std::set<Monomial> undefined_;
};

enum class SingularPolicy {
  raise,  // throw NonGenericDimension on a zero eigenvalue
  mark,   // record the monomial as undefined and poison everything built from it
};

// -D - (1 - D/2) n + sum_k (k - D (k/2 - 1)) m_k, which is 2 omega.
Rational pd_eigenvalue(const std::vector<int>& couplings, const Monomial& m, const Rational& d);

TruncatedSeries apply_inverse_pd(const TruncatedSeries& series, const Rational& d,
                                 SingularPolicy policy = SingularPolicy::raise);

// Fixed point of P = sum_k lambda_k phi^k/k! + P_D^{-1}((1 - P'')^{-1} - 1).
TruncatedSeries solve_gamma_tr(const std::vector<int>& couplings, const Rational& d,
                               SeriesTruncation truncation,
                               SingularPolicy policy = SingularPolicy::raise);

// P_D(Gamma) - ((1 - Gamma'')^{-1} - 1), restricted to the truncation.
TruncatedSeries loop_equation_residual(const TruncatedSeries& gamma, const Rational& d);

struct CrossCheckReport {
  int checked = 0;
  int singular = 0;  // cells undefined in the series and NaN in the tables
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// coefficient(phi^n lambda_k^m) n! against Z(L, n) for L <= l_max.
CrossCheckReport cross_check_tables(const TruncatedSeries& series, const CoefficientTables& tables,
                                    int l_max, double tolerance = 1e-10);

}  // namespace tropmc
