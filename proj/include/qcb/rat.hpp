#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qcb {

using Rat = mpq_class;

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct DivisionError : std::domain_error {
  using std::domain_error::domain_error;
};
struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Always "num/den", zero is "0/1".
inline std::string rat_to_string(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rat rat_from_string(const std::string& s) {
  Rat r;
  if (s.empty() || r.set_str(s, 10) != 0) throw ParseError("bad rational: " + s);
  if (r.get_den() == 0) throw ParseError("zero denominator: " + s);
  r.canonicalize();
  return r;
}

// a/b in lowest terms
inline Rat rat_frac(long a, long b) {
  if (b == 0) throw DivisionError("zero denominator");
  Rat r(a, b);
  r.canonicalize();
  return r;
}

inline bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

}  // namespace qcb
