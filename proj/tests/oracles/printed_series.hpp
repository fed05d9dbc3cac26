#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tropmc/rational.hpp"

namespace oracle {

// Leading terms of the tropical effective action with lambda_3..lambda_6
// active, as closed forms in D. Exponents are {phi, l3, l4, l5, l6}.
struct PrintedTerm {
  std::string name;
  std::vector<int> exponents;
  // nullopt where the closed form has a pole at this D.
  std::function<std::optional<tropmc::Rational>(const tropmc::Rational&)> value;
};

const std::vector<PrintedTerm>& printed_series();

}  // namespace oracle
