#pragma once

#include <array>

namespace otoc {

// Power series in the coupling g, truncated at degree 3. All perturbative
// quantities (energies, transition elements, their products) live here.
struct GPoly {
  std::array<double, 4> c{0.0, 0.0, 0.0, 0.0};

  double eval(double g) const { return ((c[3] * g + c[2]) * g + c[1]) * g + c[0]; }

  GPoly truncated(int order) const {
    GPoly out = *this;
    for (int j = order + 1; j < 4; ++j) out.c[j] = 0.0;
    return out;
  }
};

inline GPoly operator+(const GPoly& a, const GPoly& b) {
  GPoly out;
  for (int j = 0; j < 4; ++j) out.c[j] = a.c[j] + b.c[j];
  return out;
}

inline GPoly operator-(const GPoly& a, const GPoly& b) {
  GPoly out;
  for (int j = 0; j < 4; ++j) out.c[j] = a.c[j] - b.c[j];
  return out;
}

// Product truncated at g^order; coefficients beyond the cut are dropped, which
// is what keeps the perturbative OTOC kernel exact order by order.
inline GPoly mul_trunc(const GPoly& a, const GPoly& b, int order) {
  GPoly out;
  for (int i = 0; i <= order; ++i)
    for (int j = 0; i + j <= order; ++j) out.c[i + j] += a.c[i] * b.c[j];
  return out;
}

}  // namespace otoc
