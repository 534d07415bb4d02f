#pragma once

#include <gmpxx.h>

#include <string>

#include "hyperarr/errors.hpp"

namespace hyperarr {

// Exact arithmetic types. mpq_class values are kept canonical (reduced,
// positive denominator, zero stored as 0/1) via canonicalize().
using Int = mpz_class;
using Rat = mpq_class;

inline int rat_sgn(const Rat& q) { return mpq_sgn(q.get_mpq_t()); }

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw InvalidSpec("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat make_rat(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

// Parses "p", "-p" or "p/q".
inline Rat parse_rat(const std::string& tok) {
  if (tok.empty()) throw ParseError("empty rational token");
  auto slash = tok.find('/');
  try {
    Int num(tok.substr(0, slash));
    Int den = slash == std::string::npos ? Int(1) : Int(tok.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + tok + "'");
    Rat q(num, den);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational token '" + tok + "'");
  }
}

// Renders "p" when the denominator is 1, otherwise "p/q".
inline std::string rat_str(const Rat& q) {
  std::string s = q.get_num().get_str();
  if (q.get_den() != 1) s += "/" + q.get_den().get_str();
  return s;
}

}  // namespace hyperarr
