#pragma once

#include <map>
#include <string>
#include <vector>

#include "torsor/scalar.hpp"

namespace torsor {

/// Finite-dimensional Lie algebra over Q given by structure constants on a
/// named basis.  Brackets are stored for i < j and extended antisymmetrically.
class LieDatum {
 public:
  LieDatum(std::vector<std::string> basis);

  void set_bracket(const std::string& x, const std::string& y,
                   std::map<std::string, Rational> value);

  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<std::string>& basis() const { return basis_; }
  int index_of(const std::string& name) const;

  /// [x_i, x_j] as coefficients on the basis.
  std::vector<Rational> bracket(int i, int j) const;

  /// Checks the Jacobi identity on all basis triples; throws ValidationError.
  void validate() const;

  std::string describe() const;

 private:
  std::vector<std::string> basis_;
  std::map<std::string, int> index_;
  // key (i, j) with i < j
  std::map<std::pair<int, int>, std::vector<Rational>> brackets_;
};

/// Antisymmetric bilinear form on a LieDatum, stored for i < j.
class CocycleSpec {
 public:
  CocycleSpec() = default;

  void set_value(const std::string& x, const std::string& y, Rational v);
  Rational value(int i, int j) const;
  Rational value_named(const LieDatum& l, const std::string& x, const std::string& y) const;

  /// Pairs with names resolved against the Lie datum's basis order.
  void resolve(const LieDatum& l);

  /// 2-cocycle identity c([x,y],z) + c([y,z],x) + c([z,x],y) = 0 on all
  /// basis triples; throws CocycleError naming the first violating triple.
  void validate(const LieDatum& l) const;

  CocycleSpec negated() const;
  CocycleSpec scaled(const Rational& k) const;
  bool is_zero() const;
  std::string describe(const LieDatum& l) const;

 private:
  std::map<std::pair<std::string, std::string>, Rational> named_;
  std::map<std::pair<int, int>, Rational> values_;  // resolved, i < j
  bool resolved_ = false;
};

}  // namespace torsor
