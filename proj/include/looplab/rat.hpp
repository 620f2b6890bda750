// SPDX-License-Identifier: MIT
#pragma once

#include <gmpxx.h>

#include <string>

#include "looplab/errors.hpp"

namespace looplab {

using Rat = mpq_class;
using Int = mpz_class;

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

// Accepts "p", "-p", "p/q"; canonicalizes. Rejects empty and zero denominators.
inline Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw ConfigError("empty rational literal");
  for (char ch : s) {
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '/'))
      throw ConfigError("bad rational literal: " + s);
  }
  Rat r;
  if (r.set_str(s, 10) != 0) throw ConfigError("bad rational literal: " + s);
  if (r.get_den() == 0) throw DivisionByZero("rational literal " + s);
  r.canonicalize();
  return r;
}

inline Int factorial(unsigned n) {
  Int f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= static_cast<unsigned long>(k);
  return f;
}

inline Int binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

// Rat -> Int, throwing if the value is not integral.
inline Int rat_to_int_exact(const Rat& r) {
  if (r.get_den() != 1) throw ConfigError("expected integer, got " + r.get_str());
  return r.get_num();
}

}  // namespace looplab
