#include "tropmc/sector.hpp"

#include "tropmc/errors.hpp"

namespace tropmc {

std::string to_string(Mode mode) { return mode == Mode::plain ? "plain" : "positive"; }

Mode parse_mode(std::string_view text) {
  if (text == "plain") return Mode::plain;
  if (text == "positive") return Mode::positive;
  throw FormatError("mode must be 'plain' or 'positive', got '" + std::string(text) + "'");
}

bool is_valid_sector(int k, int loops, int legs) {
  if (k < 3 || loops < 0 || legs < 0) return false;
  const int twice_vertices = 2 * (loops - 1) + legs;
  if (twice_vertices <= 0 || twice_vertices % (k - 2) != 0) return false;
  return ((loops - 1) * k + legs) % (k - 2) == 0 && (loops - 1) * k + legs >= 0;
}

SectorShape sector_shape(int k, int loops, int legs) {
  if (!is_valid_sector(k, loops, legs)) {
    throw InvalidSector("no connected " + std::to_string(k) + "-regular graphs with " +
                        std::to_string(loops) + " loops and " + std::to_string(legs) + " legs");
  }
  return {(2 * (loops - 1) + legs) / (k - 2), ((loops - 1) * k + legs) / (k - 2)};
}

double omega(int k, double d, int loops, int legs) {
  SectorShape s = sector_shape(k, loops, legs);
  return s.edges - loops * d / 2.0;
}

Rational omega_exact(int k, const Rational& d, int loops, int legs) {
  SectorShape s = sector_shape(k, loops, legs);
  Rational w = s.edges - Rational(loops) * d / 2;
  w.canonicalize();
  return w;
}

}  // namespace tropmc
