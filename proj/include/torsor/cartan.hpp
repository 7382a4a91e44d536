#pragma once

#include <string>
#include <vector>

#include "torsor/scalar.hpp"

namespace torsor {

/// Symmetrizable generalized Cartan matrix with positive symmetrizers.
struct CartanDatum {
  std::vector<std::vector<int>> a;  // a[i][j]
  std::vector<int> d;               // symmetrizers

  int rank() const { return static_cast<int>(a.size()); }
  /// (alpha_i, alpha_j) = d_i a_ij; the exponent carried by toral
  /// commutation relations.
  int pairing(int i, int j) const { return d[i] * a[i][j]; }

  /// Checks squareness, a_ii = 2, off-diagonal signs, the zero-symmetry
  /// a_ij = 0 <=> a_ji = 0 and d_i a_ij = d_j a_ji; throws ValidationError.
  void validate() const;

  std::string describe() const;

  static CartanDatum A1() { return {{{2}}, {1}}; }
  static CartanDatum A1xA1() { return {{{2, 0}, {0, 2}}, {1, 1}}; }
  static CartanDatum A2() { return {{{2, -1}, {-1, 2}}, {1, 1}}; }
};

}  // namespace torsor
