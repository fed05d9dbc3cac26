#include "tropmc/series.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tropmc/errors.hpp"

namespace tropmc {

TruncatedSeries::TruncatedSeries(std::vector<int> couplings, SeriesTruncation truncation)
    : couplings_(std::move(couplings)), truncation_(truncation) {
  if (couplings_.empty()) throw ContractError("need at least one active coupling");
  for (std::size_t i = 0; i < couplings_.size(); ++i) {
    if (couplings_[i] < 3 || (i > 0 && couplings_[i] <= couplings_[i - 1]))
      throw ContractError("couplings must be increasing valences >= 3");
  }
  if (truncation_.loop_order_max < 0 || truncation_.weight_max < 0)
    throw ContractError("truncation orders must be non-negative");
}

int TruncatedSeries::coupling_weight(const Monomial& m) const {
  int c = 0;
  for (std::size_t i = 0; i < couplings_.size(); ++i) c += m[i + 1] * (couplings_[i] - 2);
  return c;
}

int TruncatedSeries::twice_loop_order(const Monomial& m) const {
  return 2 + coupling_weight(m) - m[0];
}

bool TruncatedSeries::within(const Monomial& m) const {
  if (m.size() != couplings_.size() + 1) return false;
  if (std::any_of(m.begin(), m.end(), [](int e) { return e < 0; })) return false;
  return coupling_weight(m) <= truncation_.weight_max &&
         twice_loop_order(m) <= 2 * truncation_.loop_order_max;
}

Rational TruncatedSeries::coefficient(const Monomial& m) const {
  if (is_undefined(m)) throw NonGenericDimension("coefficient diverges at this dimension", format(m));
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void TruncatedSeries::add(const Monomial& m, const Rational& value) {
  if (!within(m) || value == 0 || is_undefined(m)) return;
  auto [it, inserted] = terms_.emplace(m, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) terms_.erase(it);
  }
}

void TruncatedSeries::mark_undefined(const Monomial& m) {
  if (!within(m)) return;
  terms_.erase(m);
  undefined_.insert(m);
}

Monomial TruncatedSeries::monomial(int phi_power, int k, int k_power) const {
  auto it = std::find(couplings_.begin(), couplings_.end(), k);
  if (it == couplings_.end()) return {};
  Monomial m(couplings_.size() + 1, 0);
  m[0] = phi_power;
  m[static_cast<std::size_t>(it - couplings_.begin()) + 1] = k_power;
  return m;
}

std::string TruncatedSeries::format(const Monomial& m) const {
  std::ostringstream out;
  bool first = true;
  auto factor = [&](const std::string& name, int power) {
    if (power == 0) return;
    if (!first) out << '*';
    first = false;
    out << name;
    if (power > 1) out << '^' << power;
  };
  factor("phi", m[0]);
  for (std::size_t i = 0; i < couplings_.size(); ++i) factor("l" + std::to_string(couplings_[i]), m[i + 1]);
  if (first) out << '1';
  return out.str();
}

Rational pd_eigenvalue(const std::vector<int>& couplings, const Monomial& m, const Rational& d) {
  Rational e = -d - (1 - d / 2) * m[0];
  for (std::size_t i = 0; i < couplings.size(); ++i) {
    const int k = couplings[i];
    e += (k - d * (k - 2) / 2) * m[i + 1];
  }
  e.canonicalize();
  return e;
}

namespace {

TruncatedSeries empty_like(const TruncatedSeries& s) { return TruncatedSeries(s.couplings(), s.truncation()); }

// d^2/dphi^2. The result is an intermediate whose monomials are not graded
// like effective-action terms, so it is kept in a loosened container.
struct Raw {
  std::map<Monomial, Rational> terms;
  std::set<Monomial> undefined;
};

Raw second_derivative(const TruncatedSeries& s) {
  Raw out;
  for (const auto& [m, c] : s.terms()) {
    if (m[0] < 2) continue;
    Monomial d = m;
    d[0] -= 2;
    out.terms[d] += c * m[0] * (m[0] - 1);
  }
  for (const auto& m : s.undefined()) {
    if (m[0] < 2) continue;
    Monomial d = m;
    d[0] -= 2;
    out.undefined.insert(d);
  }
  for (const auto& m : out.undefined) out.terms.erase(m);
  return out;
}

// A product of second-derivative terms ends up, after P_D^{-1}, as an action
// term with loop order 1 + (c - n)/2 or higher; prune on both grades.
bool keep(const TruncatedSeries& shape, const Monomial& m) {
  const int c = shape.coupling_weight(m);
  return c <= shape.truncation().weight_max && 2 + c - m[0] <= 2 * shape.truncation().loop_order_max;
}

Raw multiply(const TruncatedSeries& shape, const Raw& a, const Raw& b) {
  Raw out;
  auto visit = [&](const Monomial& x, const Monomial& y, const Rational* cx, const Rational* cy) {
    Monomial m(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) m[i] = x[i] + y[i];
    if (!keep(shape, m)) return;
    if (cx && cy)
      out.terms[m] += *cx * *cy;
    else
      out.undefined.insert(m);
  };
  for (const auto& [x, cx] : a.terms) {
    for (const auto& [y, cy] : b.terms) visit(x, y, &cx, &cy);
    for (const auto& y : b.undefined) visit(x, y, &cx, nullptr);
  }
  for (const auto& x : a.undefined) {
    for (const auto& [y, cy] : b.terms) visit(x, y, nullptr, &cy);
    for (const auto& y : b.undefined) visit(x, y, nullptr, nullptr);
  }
  for (const auto& m : out.undefined) out.terms.erase(m);
  std::erase_if(out.terms, [](const auto& kv) { return kv.second == 0; });
  return out;
}

void accumulate(Raw& into, const Raw& add) {
  for (const auto& [m, c] : add.terms) into.terms[m] += c;
  into.undefined.insert(add.undefined.begin(), add.undefined.end());
  for (const auto& m : into.undefined) into.terms.erase(m);
  std::erase_if(into.terms, [](const auto& kv) { return kv.second == 0; });
}

// (1 - X)^{-1} - 1 = X + X^2 + ..., finite because every X term has
// positive coupling weight.
Raw geometric(const TruncatedSeries& shape, const Raw& x) {
  Raw sum = x;
  Raw power = x;
  while (true) {
    power = multiply(shape, power, x);
    if (power.terms.empty() && power.undefined.empty()) break;
    accumulate(sum, power);
  }
  return sum;
}

TruncatedSeries to_series(const TruncatedSeries& shape, const Raw& raw) {
  TruncatedSeries s = empty_like(shape);
  for (const auto& [m, c] : raw.terms) s.add(m, c);
  for (const auto& m : raw.undefined) s.mark_undefined(m);
  return s;
}

TruncatedSeries tree_terms(const TruncatedSeries& shape) {
  TruncatedSeries tree = empty_like(shape);
  for (int k : shape.couplings()) {
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(k));
    tree.add(shape.monomial(k, k, 1), Rational(mpz_class(1), fact));
  }
  return tree;
}

TruncatedSeries sum(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out = a;
  for (const auto& m : b.undefined()) out.mark_undefined(m);
  for (const auto& [m, c] : b.terms()) out.add(m, c);
  return out;
}

}  // namespace

TruncatedSeries apply_inverse_pd(const TruncatedSeries& series, const Rational& d, SingularPolicy policy) {
  TruncatedSeries out = empty_like(series);
  for (const auto& m : series.undefined()) out.mark_undefined(m);
  for (const auto& [m, c] : series.terms()) {
    Rational e = pd_eigenvalue(series.couplings(), m, d);
    if (e == 0) {
      if (policy == SingularPolicy::raise)
        throw NonGenericDimension("P_D has eigenvalue 0 on " + series.format(m), series.format(m));
      out.mark_undefined(m);
      continue;
    }
    out.add(m, c / e);
  }
  return out;
}

TruncatedSeries solve_gamma_tr(const std::vector<int>& couplings, const Rational& d,
                               SeriesTruncation truncation, SingularPolicy policy) {
  TruncatedSeries shape(couplings, truncation);
  const TruncatedSeries tree = tree_terms(shape);
  TruncatedSeries current = tree;
  // Each pass settles one more loop order; allow a few spare passes.
  for (int pass = 0; pass <= truncation.loop_order_max + 3; ++pass) {
    Raw rhs = geometric(shape, second_derivative(current));
    TruncatedSeries next = sum(tree, apply_inverse_pd(to_series(shape, rhs), d, policy));
    if (next == current) return current;
    current = std::move(next);
  }
  throw InternalConsistencyError("loop equation iteration did not stabilise");
}

TruncatedSeries loop_equation_residual(const TruncatedSeries& gamma, const Rational& d) {
  TruncatedSeries residual = empty_like(gamma);
  for (const auto& [m, c] : gamma.terms()) residual.add(m, c * pd_eigenvalue(gamma.couplings(), m, d));
  Raw rhs = geometric(gamma, second_derivative(gamma));
  for (const auto& [m, c] : rhs.terms) residual.add(m, -c);
  for (const auto& m : gamma.undefined()) residual.mark_undefined(m);
  for (const auto& m : rhs.undefined) residual.mark_undefined(m);
  return residual;
}

CrossCheckReport cross_check_tables(const TruncatedSeries& series, const CoefficientTables& tables,
                                    int l_max, double tolerance) {
  if (series.couplings() != std::vector<int>{tables.k()})
    throw ContractError("cross-check needs a series with only the tables' coupling active");
  CrossCheckReport report;
  const int k = tables.k();
  for (int loops = 0; loops <= std::min(l_max, tables.l_max()); ++loops) {
    for (int n = 2; n <= tables.row_width(loops); ++n) {
      if (!is_valid_sector(k, loops, n)) continue;
      const Monomial m = series.monomial(n, k, (2 * (loops - 1) + n) / (k - 2));
      if (!series.within(m)) continue;
      const double z = tables.z(loops, n);
      const std::string cell = "(L=" + std::to_string(loops) + ", n=" + std::to_string(n) + ")";
      if (series.is_undefined(m)) {
        if (std::isnan(z))
          ++report.singular;
        else
          report.failures.push_back(cell + ": series diverges but table holds " + format_double(z));
        continue;
      }
      mpz_class fact;
      mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n));
      const double expected = Rational(series.coefficient(m) * fact).get_d();
      ++report.checked;
      const double scale = std::max(std::abs(expected), std::abs(z));
      if (!(std::abs(expected - z) <= tolerance * scale)) {
        report.failures.push_back(cell + ": series gives " + format_double(expected) + ", table " +
                                  format_double(z));
      }
    }
  }
  return report;
}

}  // namespace tropmc
