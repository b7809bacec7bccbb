#pragma once

#include <utility>
#include <vector>

#include "medlat/algebra.hpp"
#include "medlat/poset.hpp"
#include "oracle.hpp"

namespace support {

/// r below a and b.
inline medlat::Poset fork() {
  const std::vector<std::pair<std::size_t, std::size_t>> le{{0, 1}, {0, 2}};
  return medlat::Poset::from_pairs(3, le, {"r", "a", "b"}, "fork");
}

inline oracle::Matrix matrix(const medlat::Poset& p) {
  oracle::Matrix m(p.size(), std::vector<bool>(p.size()));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j) m[i][j] = p.leq(i, j);
  return m;
}

inline oracle::Matrix matrix(const medlat::BrouwerAlgebra& a) {
  oracle::Matrix m(a.size(), std::vector<bool>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      m[i][j] = a.leq(static_cast<medlat::elem>(i), static_cast<medlat::elem>(j));
  return m;
}

inline medlat::elem at(const medlat::BrouwerAlgebra& a, const std::string& label) {
  auto e = a.find_label(label);
  if (!e) throw std::runtime_error("no element labelled " + label);
  return *e;
}

}  // namespace support
