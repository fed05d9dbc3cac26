#pragma once

#include <string>
#include <string_view>

#include "tropmc/rational.hpp"

namespace tropmc {

// plain: the Hepp bound itself. positive: 1PI pieces with omega <= 0 count as 0.
enum class Mode { plain, positive };

std::string to_string(Mode mode);
Mode parse_mode(std::string_view text);

// Vertex and edge counts of connected k-regular graphs with the given loops and legs.
struct SectorShape {
  int vertices = 0;
  int edges = 0;
};

bool is_valid_sector(int k, int loops, int legs);
// Throws InvalidSector when the counts are not non-negative integers.
SectorShape sector_shape(int k, int loops, int legs);

// ((L-1)k + n)/(k-2) - L d/2
double omega(int k, double d, int loops, int legs);
Rational omega_exact(int k, const Rational& d, int loops, int legs);

}  // namespace tropmc
