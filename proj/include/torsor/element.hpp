#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "torsor/scalar.hpp"

namespace torsor {

struct EngineError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct OrientationError : EngineError {
  using EngineError::EngineError;
};
struct BudgetExceeded : EngineError {
  using EngineError::EngineError;
};
struct InconclusiveError : EngineError {
  using EngineError::EngineError;
};
struct SignatureMismatch : EngineError {
  using EngineError::EngineError;
};
struct ValidationError : EngineError {
  using EngineError::EngineError;
};
struct ParseError : EngineError {
  using EngineError::EngineError;
};
struct CocycleError : ValidationError {
  using ValidationError::ValidationError;
};

struct Generator {
  std::string name;
  int degree = 1;
};

/// A word in the free monoid on the generators; the empty word is the unit.
using Word = std::vector<int>;

/// A finitely presented associative algebra: named generators listed in
/// precedence order (index 0 ranks highest in the degree-lex comparison)
/// and a finite list of relations, each read as "element = 0".
class Presentation {
 public:
  Presentation(std::string display_name, std::vector<Generator> gens);

  const std::string& display_name() const { return display_; }
  const std::vector<Generator>& generators() const { return gens_; }
  int arity() const { return static_cast<int>(gens_.size()); }
  int gen_id(const std::string& name) const;  // -1 when absent
  const std::string& gen_name(int id) const { return gens_[id].name; }
  int gen_degree(int id) const { return gens_[id].degree; }

  int word_degree(const Word& w) const;
  std::string word_str(const Word& w) const;

  /// Degree-lex comparison: higher total degree wins; ties break at the
  /// leftmost differing letter, earlier-listed generators ranking higher.
  int compare_words(const Word& a, const Word& b) const;

  void add_relation(class Element rel);
  const std::vector<class Element>& relations() const { return rels_; }
  std::vector<std::string> relation_labels() const;

  std::string serialize() const;  // stable text form used for cache hashing

 private:
  std::string display_;
  std::vector<Generator> gens_;
  std::map<std::string, int> index_;
  std::vector<class Element> rels_;
};

using PresentationPtr = std::shared_ptr<const Presentation>;

/// Finite Scalar-linear combination of words over a fixed presentation.
/// Zero coefficients are never stored; term order is ascending degree-lex,
/// so the last term is the leading one.
class Element {
 public:
  Element() = default;
  explicit Element(PresentationPtr pres) : pres_(std::move(pres)) {}
  static Element unit(PresentationPtr pres, Scalar coeff = Scalar(1));
  static Element generator(PresentationPtr pres, int gen_id);
  static Element from_word(PresentationPtr pres, Word w, Scalar coeff = Scalar(1));

  const PresentationPtr& presentation() const { return pres_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  int degree() const;  // max word degree; -1 for zero
  const Word& leading_word() const;
  const Scalar& leading_coeff() const;
  const std::map<Word, Scalar>& terms() const { return terms_; }

  void add_term(const Word& w, const Scalar& c);

  Element operator-() const;
  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Element& b);  // concatenation
  Element scaled(const Scalar& c) const;
  Element& operator+=(const Element& o) { return *this = *this + o; }
  Element& operator-=(const Element& o) { return *this = *this - o; }

  friend bool operator==(const Element& a, const Element& b) {
    return a.terms_ == b.terms_;
  }

  std::string str() const;

 private:
  PresentationPtr pres_;
  // Word order from operator< on vectors is only a storage order; rendering
  // and leading-term selection use the presentation's degree-lex compare.
  std::map<Word, Scalar> terms_;
  void check_same(const Element& o) const;
};

}  // namespace torsor
