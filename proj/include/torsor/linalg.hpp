#pragma once

#include "torsor/element.hpp"

namespace torsor {

struct OracleBudget {
  long max_words = 300000;
  long max_rows = 300000;
};

/// Sparse row echelon machinery over the scalar field, shared by the
/// brute-force dimension oracle and by residue computations.
class SparseEliminator {
 public:
  using Row = std::vector<std::pair<long, Scalar>>;  // sorted by column

  /// Reduces the row against the pivots collected so far and absorbs it as a
  /// new pivot when nonzero.  Returns true when the row added rank.
  bool absorb(Row row);

  /// Reduces a row against the pivots without absorbing it.
  Row residue(Row row) const;

  long rank() const { return static_cast<long>(pivot_rows_.size()); }

 private:
  std::map<long, size_t> pivot_of_col_;
  std::vector<Row> pivot_rows_;
  Row reduce(Row row) const;
};

/// Dimension of the degree-<= degree truncation of the quotient algebra,
/// computed with no rewriting: enumerate all words of degree <= degree,
/// impose every shift u * r * v of every relation whose leading degree fits,
/// and row-reduce exactly over the scalar field.
long bruteforce_dimension(const Presentation& pres, int degree,
                          const OracleBudget& budget = {});

/// All words (reducible or not) of degree <= degree, ascending degree-lex.
std::vector<Word> enumerate_words(const Presentation& pres, int degree,
                                  long max_words = 300000);

}  // namespace torsor
