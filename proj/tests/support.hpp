#pragma once

#include <doctest.h>

#include "oracles.hpp"
#include "qschubert/ncpoly.hpp"

namespace support {

/// Library normal form specialized at q0, in the oracle's representation.
inline oracle::SpecPoly specialized(const qschubert::NcPoly& p, const qschubert::Rational& q0) {
  oracle::SpecPoly out;
  for (const auto& [w, c] : p.eval(q0)) {
    oracle::GenWord gw;
    for (const auto& g : w.generators(p.shape())) gw.push_back({g.row, g.col});
    out[gw] = c;
  }
  return out;
}

inline qschubert::LaurentQ L(const char* text) { return qschubert::LaurentQ::parse(text); }

}  // namespace support
