#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "redcor/ideal.hpp"
#include "redcor/module.hpp"
#include "redcor/smith.hpp"

namespace redcor::testing {

inline Matrix parse_matrix(const Ring& ring, std::size_t cols,
                           std::initializer_list<std::initializer_list<const char*>> rows) {
  Matrix m = Matrix::from_rows(cols, {});
  for (const auto& r : rows) {
    Vector v;
    for (const char* s : r) v.push_back(ring.parse(s));
    m.append_row(v);
  }
  return m;
}

inline Ideal ideal(const Ring& ring, std::initializer_list<const char*> gens) {
  std::vector<Elem> v;
  for (const char* s : gens) v.push_back(ring.parse(s));
  return Ideal(ring, v);
}

/// R/(a) on one generator.
inline Presentation cyclic(const Ring& ring, const char* a) {
  return Presentation::cyclic(ideal(ring, {a}));
}

inline Presentation cyclic(const Ring& ring, long a) {
  return Presentation::cyclic(Ideal(ring, {ring.from_int(a)}));
}

inline std::vector<std::string> inv(const Presentation& m) { return invariant_strings(m); }

inline std::vector<std::string> strs(std::initializer_list<const char*> xs) {
  return std::vector<std::string>(xs.begin(), xs.end());
}

}  // namespace redcor::testing
