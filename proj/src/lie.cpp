#include "torsor/lie.hpp"

#include <sstream>

#include "torsor/element.hpp"

namespace torsor {

LieDatum::LieDatum(std::vector<std::string> basis) : basis_(std::move(basis)) {
  if (basis_.empty()) throw ValidationError("Lie algebra needs a nonempty basis");
  for (size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i].empty()) throw ValidationError("empty basis name");
    if (!index_.emplace(basis_[i], static_cast<int>(i)).second)
      throw ValidationError("duplicate basis name: " + basis_[i]);
  }
}

int LieDatum::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw ValidationError("unknown basis name: " + name);
  return it->second;
}

void LieDatum::set_bracket(const std::string& x, const std::string& y,
                           std::map<std::string, Rational> value) {
  int i = index_of(x), j = index_of(y);
  if (i == j) throw ValidationError("bracket [x,x] must be zero");
  std::vector<Rational> v(dim(), Rational(0));
  for (const auto& [name, c] : value) v[index_of(name)] = c;
  if (i > j) {
    std::swap(i, j);
    for (Rational& c : v) c = -c;
  }
  brackets_[{i, j}] = std::move(v);
}

std::vector<Rational> LieDatum::bracket(int i, int j) const {
  std::vector<Rational> v(dim(), Rational(0));
  if (i == j) return v;
  bool flip = i > j;
  if (flip) std::swap(i, j);
  auto it = brackets_.find({i, j});
  if (it != brackets_.end()) {
    v = it->second;
    if (flip)
      for (Rational& c : v) c = -c;
  }
  return v;
}

void LieDatum::validate() const {
  const int n = dim();
  // Jacobi: [[x,y],z] + [[y,z],x] + [[z,x],y] = 0 on basis triples.
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      for (int z = y + 1; z < n; ++z) {
        std::vector<Rational> total(n, Rational(0));
        auto acc = [&](int a, int b, int c) {
          std::vector<Rational> ab = bracket(a, b);
          for (int k = 0; k < n; ++k) {
            if (ab[k] == 0) continue;
            std::vector<Rational> kc = bracket(k, c);
            for (int m = 0; m < n; ++m) total[m] += ab[k] * kc[m];
          }
        };
        acc(x, y, z);
        acc(y, z, x);
        acc(z, x, y);
        for (int m = 0; m < n; ++m) {
          if (total[m] != 0)
            throw ValidationError("Jacobi identity fails on (" + basis_[x] + ", " +
                                  basis_[y] + ", " + basis_[z] + ")");
        }
      }
    }
  }
}

std::string LieDatum::describe() const {
  std::ostringstream out;
  out << "lie[";
  for (size_t i = 0; i < basis_.size(); ++i) {
    if (i) out << ",";
    out << basis_[i];
  }
  out << "]";
  return out.str();
}

void CocycleSpec::set_value(const std::string& x, const std::string& y, Rational v) {
  named_[{x, y}] = std::move(v);
  resolved_ = false;
}

void CocycleSpec::resolve(const LieDatum& l) {
  values_.clear();
  for (const auto& [key, v] : named_) {
    int i = l.index_of(key.first), j = l.index_of(key.second);
    if (i == j && v != 0) throw CocycleError("cocycle must vanish on (x, x): " + key.first);
    if (i == j) continue;
    Rational val = v;
    int a = i, b = j;
    if (a > b) {
      std::swap(a, b);
      val = -val;
    }
    auto it = values_.find({a, b});
    if (it != values_.end() && it->second != val)
      throw CocycleError("conflicting cocycle values for (" + key.first + ", " + key.second + ")");
    values_[{a, b}] = val;
  }
  resolved_ = true;
}

Rational CocycleSpec::value(int i, int j) const {
  if (!resolved_) throw ValidationError("cocycle values not resolved against a basis");
  if (i == j) return Rational(0);
  bool flip = i > j;
  if (flip) std::swap(i, j);
  auto it = values_.find({i, j});
  Rational v = it == values_.end() ? Rational(0) : it->second;
  return flip ? Rational(-v) : v;
}

Rational CocycleSpec::value_named(const LieDatum& l, const std::string& x,
                                  const std::string& y) const {
  return value(l.index_of(x), l.index_of(y));
}

void CocycleSpec::validate(const LieDatum& l) const {
  const int n = l.dim();
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      for (int z = y + 1; z < n; ++z) {
        Rational total(0);
        auto acc = [&](int a, int b, int c) {
          std::vector<Rational> ab = l.bracket(a, b);
          for (int k = 0; k < n; ++k)
            if (ab[k] != 0) total += ab[k] * value(k, c);
        };
        acc(x, y, z);
        acc(y, z, x);
        acc(z, x, y);
        if (total != 0)
          throw CocycleError("2-cocycle identity fails on (" + l.basis()[x] + ", " +
                             l.basis()[y] + ", " + l.basis()[z] + ")");
      }
    }
  }
}

CocycleSpec CocycleSpec::negated() const { return scaled(Rational(-1)); }

CocycleSpec CocycleSpec::scaled(const Rational& k) const {
  CocycleSpec out = *this;
  for (auto& [key, v] : out.named_) v *= k;
  for (auto& [key, v] : out.values_) v *= k;
  return out;
}

bool CocycleSpec::is_zero() const {
  for (const auto& [key, v] : values_)
    if (v != 0) return false;
  for (const auto& [key, v] : named_)
    if (v != 0) return false;
  return true;
}

std::string CocycleSpec::describe(const LieDatum& l) const {
  std::ostringstream out;
  out << "cocycle{";
  bool first = true;
  for (const auto& [key, v] : values_) {
    if (v == 0) continue;
    if (!first) out << ",";
    first = false;
    out << "c(" << l.basis()[key.first] << "," << l.basis()[key.second] << ")=" << v;
  }
  out << "}";
  return out.str();
}

}  // namespace torsor
