#include "torsor/cartan.hpp"

#include <sstream>

#include "torsor/element.hpp"

namespace torsor {

void CartanDatum::validate() const {
  const int n = rank();
  if (n == 0) throw ValidationError("empty Cartan matrix");
  if (static_cast<int>(d.size()) != n)
    throw ValidationError("symmetrizer count does not match the matrix rank");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(a[i].size()) != n) throw ValidationError("Cartan matrix is not square");
    if (d[i] < 1) throw ValidationError("symmetrizers must be positive");
    if (a[i][i] != 2) throw ValidationError("diagonal Cartan entries must equal 2");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a[i][j] > 0) throw ValidationError("off-diagonal Cartan entries must be <= 0");
      if ((a[i][j] == 0) != (a[j][i] == 0))
        throw ValidationError("a_ij = 0 must imply a_ji = 0");
      if (d[i] * a[i][j] != d[j] * a[j][i])
        throw ValidationError("matrix is not symmetrizable by the given d");
    }
  }
}

std::string CartanDatum::describe() const {
  if (a == A1().a && d == A1().d) return "A1";
  if (a == A1xA1().a && d == A1xA1().d) return "A1xA1";
  if (a == A2().a && d == A2().d) return "A2";
  std::ostringstream out;
  out << "cartan[";
  for (int i = 0; i < rank(); ++i) {
    if (i) out << ";";
    for (int j = 0; j < rank(); ++j) {
      if (j) out << ",";
      out << a[i][j];
    }
  }
  out << "|";
  for (int i = 0; i < rank(); ++i) {
    if (i) out << ",";
    out << d[i];
  }
  out << "]";
  return out.str();
}

}  // namespace torsor
