#include "torsor/rewrite.hpp"

#include <chrono>
#include <deque>
#include <sstream>

namespace torsor {

namespace {

bool subword_at(const Word& w, const Word& sub, size_t pos) {
  if (pos + sub.size() > w.size()) return false;
  for (size_t i = 0; i < sub.size(); ++i)
    if (w[pos + i] != sub[i]) return false;
  return true;
}

Rule make_rule(const Element& rel) {
  const Word& lead = rel.leading_word();
  if (lead.empty())
    throw OrientationError("relation with constant leading term presents the zero algebra: " +
                           rel.str());
  Scalar c = rel.leading_coeff();
  Element rhs(rel.presentation());
  for (const auto& [w, k] : rel.terms()) {
    if (w == lead) continue;
    rhs.add_term(w, -(k / c));
  }
  // every rewrite strictly decreases the degree-lex order; the order is
  // compatible with concatenation, so checking the rule itself suffices
  for (const auto& [w, k] : rhs.terms()) {
    if (rel.presentation()->compare_words(w, lead) >= 0)
      throw EngineError("rule does not decrease the term order: " + rel.str());
  }
  return Rule{lead, std::move(rhs)};
}

}  // namespace

std::vector<Rule> orient(const Presentation& pres) {
  std::vector<Rule> rules;
  for (const Element& rel : pres.relations()) {
    if (rel.is_zero()) throw OrientationError("zero relation cannot be oriented");
    rules.push_back(make_rule(rel));
  }
  return rules;
}

std::optional<std::pair<int, int>> CompletedSystem::find_redex(const Word& w) const {
  for (size_t pos = 0; pos < w.size(); ++pos) {
    for (size_t r = 0; r < rules_.size(); ++r) {
      if (subword_at(w, rules_[r].lhs, pos))
        return std::make_pair(static_cast<int>(pos), static_cast<int>(r));
    }
  }
  return std::nullopt;
}

bool CompletedSystem::word_irreducible(const Word& w) const {
  return !find_redex(w).has_value();
}

Element CompletedSystem::reduce_once(const Word& w, const Scalar& coeff, int pos,
                                     int rule) const {
  const Rule& r = rules_[rule];
  Element out(pres_);
  Word prefix(w.begin(), w.begin() + pos);
  Word suffix(w.begin() + pos + r.lhs.size(), w.end());
  for (const auto& [mid, c] : r.rhs.terms()) {
    Word nw = prefix;
    nw.insert(nw.end(), mid.begin(), mid.end());
    nw.insert(nw.end(), suffix.begin(), suffix.end());
    out.add_term(nw, coeff * c);
  }
  return out;
}

Element CompletedSystem::normal_form(const Element& e) const {
  Element acc(pres_);  // accumulated irreducible part
  Element work = e;
  while (!work.is_zero()) {
    // Deterministic strategy: take the degree-lex largest word first.
    const Word lead = work.leading_word();
    const Scalar c = work.terms().at(lead);
    auto redex = find_redex(lead);
    Element single = Element::from_word(pres_, lead, c);
    work -= single;
    if (!redex) {
      acc += single;
    } else {
      work += reduce_once(lead, c, redex->first, redex->second);
    }
  }
  return acc;
}

Element CompletedSystem::normal_form_random(const Element& e, std::mt19937_64& rng) const {
  Element acc(pres_);
  Element work = e;
  while (!work.is_zero()) {
    std::vector<std::pair<Word, std::pair<int, int>>> redexes;
    for (const auto& [w, c] : work.terms()) {
      // collect every reducible spot of this word
      for (size_t pos = 0; pos < w.size(); ++pos)
        for (size_t r = 0; r < rules_.size(); ++r)
          if (subword_at(w, rules_[r].lhs, pos))
            redexes.push_back({w, {static_cast<int>(pos), static_cast<int>(r)}});
    }
    if (redexes.empty()) {
      acc += work;
      break;
    }
    auto& pick = redexes[std::uniform_int_distribution<size_t>(0, redexes.size() - 1)(rng)];
    const Scalar c = work.terms().at(pick.first);
    work -= Element::from_word(pres_, pick.first, c);
    work += reduce_once(pick.first, c, pick.second.first, pick.second.second);
  }
  return acc;
}

ZeroTest CompletedSystem::is_zero(const Element& e) const {
  Element nf = normal_form(e);
  Certainty cert = Certainty::certain;
  if (status_ == SystemStatus::saturated_at_bound && e.degree() >= degree_bound_)
    cert = Certainty::bound_limited;
  return ZeroTest{nf.is_zero(), cert};
}

long CompletedSystem::graded_dimension(int degree) const {
  if (status_ != SystemStatus::confluent_up_to_bound || degree_bound_ < degree)
    throw InconclusiveError("rewriting system is not confluent up to degree " +
                            std::to_string(degree));
  long count = 0;
  Word w;
  std::function<void(int)> walk = [&](int deg_left) {
    ++count;
    for (int g = 0; g < pres_->arity(); ++g) {
      int d = pres_->gen_degree(g);
      if (d > deg_left) continue;
      w.push_back(g);
      // only suffixes ending at the new letter can newly match a rule
      bool reducible = false;
      for (const Rule& r : rules_) {
        if (r.lhs.size() <= w.size() && subword_at(w, r.lhs, w.size() - r.lhs.size())) {
          reducible = true;
          break;
        }
      }
      if (!reducible) walk(deg_left - d);
      w.pop_back();
    }
  };
  walk(degree);
  return count;
}

std::vector<Word> CompletedSystem::irreducible_words(int degree) const {
  if (status_ != SystemStatus::confluent_up_to_bound || degree_bound_ < degree)
    throw InconclusiveError("rewriting system is not confluent up to degree " +
                            std::to_string(degree));
  std::vector<Word> out;
  Word w;
  std::function<void(int)> walk = [&](int deg_left) {
    out.push_back(w);
    for (int g = 0; g < pres_->arity(); ++g) {
      int d = pres_->gen_degree(g);
      if (d > deg_left) continue;
      w.push_back(g);
      bool reducible = false;
      for (const Rule& r : rules_) {
        if (r.lhs.size() <= w.size() && subword_at(w, r.lhs, w.size() - r.lhs.size())) {
          reducible = true;
          break;
        }
      }
      if (!reducible) walk(deg_left - d);
      w.pop_back();
    }
  };
  walk(degree);
  std::sort(out.begin(), out.end(), [&](const Word& a, const Word& b) {
    return pres_->compare_words(a, b) < 0;
  });
  return out;
}

std::string CompletedSystem::serialize() const {
  std::ostringstream out;
  out << "bound " << degree_bound_ << "\n";
  out << "status "
      << (status_ == SystemStatus::confluent_up_to_bound ? "confluent" : "saturated")
      << "\n";
  out << "added " << rules_added_ << "\n";
  for (const Rule& r : rules_) {
    out << "rule " << pres_->word_str(r.lhs) << " -> " << r.rhs.str() << "\n";
  }
  return out.str();
}

CompletedSystem complete(PresentationPtr pres, int degree_bound,
                         const CompletionBudget& budget) {
  const auto start = std::chrono::steady_clock::now();
  auto elapsed_ms = [&] {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
  };

  std::vector<Rule> rules = orient(*pres);
  const int base_rules = static_cast<int>(rules.size());
  bool unresolved_above_bound = false;

  // Ambiguity queue: pairs of rule indices, processed in creation order.
  std::deque<std::pair<int, int>> queue;
  auto enqueue_with_all = [&](int k) {
    for (int i = 0; i < static_cast<int>(rules.size()); ++i) {
      queue.emplace_back(i, k);
      if (i != k) queue.emplace_back(k, i);
    }
  };
  for (int k = 0; k < static_cast<int>(rules.size()); ++k)
    for (int i = 0; i <= k; ++i) {
      queue.emplace_back(i, k);
      if (i != k) queue.emplace_back(k, i);
    }

  // One rewrite step of `word` with rule `r` applied at `pos`.
  auto apply_rule_at = [&](const Word& word, int r, size_t pos) {
    const Rule& rule = rules[r];
    Element out(pres);
    Word prefix(word.begin(), word.begin() + pos);
    Word suffix(word.begin() + pos + rule.lhs.size(), word.end());
    for (const auto& [mid, c] : rule.rhs.terms()) {
      Word nw = prefix;
      nw.insert(nw.end(), mid.begin(), mid.end());
      nw.insert(nw.end(), suffix.begin(), suffix.end());
      out.add_term(nw, c);
    }
    return out;
  };

  auto process_ambiguity = [&](const Word& word, int rule_a, size_t pos_a, int rule_b,
                               size_t pos_b) {
    if (pres->word_degree(word) > degree_bound) {
      unresolved_above_bound = true;
      return;
    }
    CompletedSystem tmp(pres, rules, degree_bound, SystemStatus::confluent_up_to_bound, 0);
    Element via_a = tmp.normal_form(apply_rule_at(word, rule_a, pos_a));
    Element via_b = tmp.normal_form(apply_rule_at(word, rule_b, pos_b));
    Element diff = via_a - via_b;
    if (diff.is_zero()) return;
    rules.push_back(make_rule(diff));
    if (static_cast<int>(rules.size()) - base_rules > budget.max_rules)
      throw BudgetExceeded("completion exceeded the rule budget");
    if (elapsed_ms() > budget.max_millis)
      throw BudgetExceeded("completion exceeded the time budget");
    enqueue_with_all(static_cast<int>(rules.size()) - 1);
  };

  while (!queue.empty()) {
    auto [i, j] = queue.front();
    queue.pop_front();
    const Word& a = rules[i].lhs;
    const Word& b = rules[j].lhs;
    // Overlap ambiguities: a proper suffix of a equals a proper prefix of b.
    for (size_t k = 1; k < a.size() && k < b.size(); ++k) {
      bool match = true;
      for (size_t t = 0; t < k; ++t)
        if (a[a.size() - k + t] != b[t]) {
          match = false;
          break;
        }
      if (!match) continue;
      Word word = a;
      word.insert(word.end(), b.begin() + k, b.end());
      process_ambiguity(word, i, 0, j, a.size() - k);
    }
    // Inclusion ambiguities: b occurs inside a.
    if (i != j && b.size() <= a.size()) {
      for (size_t p = 0; p + b.size() <= a.size(); ++p) {
        if (i == j && p == 0) continue;
        if (subword_at(a, b, p)) process_ambiguity(a, i, 0, j, p);
      }
    }
    if (elapsed_ms() > budget.max_millis)
      throw BudgetExceeded("completion exceeded the time budget");
  }

  return CompletedSystem(pres, std::move(rules), degree_bound,
                         unresolved_above_bound ? SystemStatus::saturated_at_bound
                                                : SystemStatus::confluent_up_to_bound,
                         static_cast<int>(rules.size()) - base_rules);
}

}  // namespace torsor
