#include "torsor/linalg.hpp"

#include <algorithm>
#include <functional>

namespace torsor {

SparseEliminator::Row SparseEliminator::reduce(Row row) const {
  // Repeatedly cancel the first entry that sits in a pivot column.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t k = 0; k < row.size(); ++k) {
      auto it = pivot_of_col_.find(row[k].first);
      if (it == pivot_of_col_.end()) continue;
      const Row& piv = pivot_rows_[it->second];
      Scalar factor = row[k].second / piv.front().second;
      // row -= factor * piv  (sparse merge)
      Row merged;
      merged.reserve(row.size() + piv.size());
      size_t a = 0, b = 0;
      while (a < row.size() || b < piv.size()) {
        if (b == piv.size() || (a < row.size() && row[a].first < piv[b].first)) {
          merged.push_back(row[a++]);
        } else if (a == row.size() || piv[b].first < row[a].first) {
          merged.emplace_back(piv[b].first, -(factor * piv[b].second));
          ++b;
        } else {
          Scalar v = row[a].second - factor * piv[b].second;
          if (!v.is_zero()) merged.emplace_back(row[a].first, v);
          ++a;
          ++b;
        }
      }
      row = std::move(merged);
      changed = true;
      break;
    }
  }
  return row;
}

bool SparseEliminator::absorb(Row row) {
  row = reduce(std::move(row));
  if (row.empty()) return false;
  pivot_of_col_[row.front().first] = pivot_rows_.size();
  pivot_rows_.push_back(std::move(row));
  return true;
}

SparseEliminator::Row SparseEliminator::residue(Row row) const {
  return reduce(std::move(row));
}

std::vector<Word> enumerate_words(const Presentation& pres, int degree, long max_words) {
  std::vector<Word> words;
  Word w;
  std::function<void(int)> walk = [&](int deg_left) {
    words.push_back(w);
    if (static_cast<long>(words.size()) > max_words)
      throw BudgetExceeded("word enumeration exceeded the budget");
    for (int g = 0; g < pres.arity(); ++g) {
      int d = pres.gen_degree(g);
      if (d > deg_left) continue;
      w.push_back(g);
      walk(deg_left - d);
      w.pop_back();
    }
  };
  walk(degree);
  std::sort(words.begin(), words.end(),
            [&](const Word& a, const Word& b) { return pres.compare_words(a, b) < 0; });
  return words;
}

long bruteforce_dimension(const Presentation& pres, int degree, const OracleBudget& budget) {
  std::vector<Word> words = enumerate_words(pres, degree, budget.max_words);
  std::map<Word, long> column;
  for (size_t i = 0; i < words.size(); ++i) column[words[i]] = static_cast<long>(i);

  SparseEliminator elim;
  long rows = 0;
  for (const Element& rel : pres.relations()) {
    if (rel.is_zero()) continue;
    int rel_deg = rel.degree();
    // every two-sided shift u * rel * v fitting inside the truncation
    for (const Word& u : words) {
      int du = pres.word_degree(u);
      if (du + rel_deg > degree) continue;
      for (const Word& v : words) {
        int dv = pres.word_degree(v);
        if (du + rel_deg + dv > degree) continue;
        std::map<long, Scalar> entries;
        for (const auto& [mid, c] : rel.terms()) {
          Word w = u;
          w.insert(w.end(), mid.begin(), mid.end());
          w.insert(w.end(), v.begin(), v.end());
          long col = column.at(w);
          auto [it, fresh] = entries.emplace(col, c);
          if (!fresh) it->second += c;
        }
        SparseEliminator::Row row;
        for (auto& [col, c] : entries)
          if (!c.is_zero()) row.emplace_back(col, c);
        if (row.empty()) continue;
        if (++rows > budget.max_rows)
          throw BudgetExceeded("row generation exceeded the budget");
        elim.absorb(std::move(row));
      }
    }
  }
  return static_cast<long>(words.size()) - elim.rank();
}

}  // namespace torsor
