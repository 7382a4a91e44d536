#pragma once

#include <functional>
#include <optional>
#include <random>

#include "torsor/element.hpp"

namespace torsor {

/// One oriented rule: the leading word rewrites to the remainder, which is
/// strictly smaller in the degree-lex order.
struct Rule {
  Word lhs;
  Element rhs;
};

enum class SystemStatus { confluent_up_to_bound, saturated_at_bound };

enum class Certainty { certain, bound_limited };

struct ZeroTest {
  bool zero;
  Certainty certainty;
};

struct CompletionBudget {
  int max_rules = 4000;
  long max_millis = 240000;
};

/// A presentation together with a rewriting system whose overlap and
/// inclusion ambiguities have been resolved up to the degree bound.
class CompletedSystem {
 public:
  CompletedSystem(PresentationPtr pres, std::vector<Rule> rules, int degree_bound,
                  SystemStatus status, int rules_added)
      : pres_(std::move(pres)),
        rules_(std::move(rules)),
        degree_bound_(degree_bound),
        status_(status),
        rules_added_(rules_added) {}

  const PresentationPtr& presentation() const { return pres_; }
  const std::vector<Rule>& rules() const { return rules_; }
  int degree_bound() const { return degree_bound_; }
  SystemStatus status() const { return status_; }
  int rules_added() const { return rules_added_; }

  /// Fully reduced form of e; every rewrite step strictly decreases the
  /// degree-lex order, so this terminates.
  Element normal_form(const Element& e) const;

  /// Normal form computed with a randomized reduction strategy; used by the
  /// confluence certificate, which demands the same result as normal_form.
  Element normal_form_random(const Element& e, std::mt19937_64& rng) const;

  ZeroTest is_zero(const Element& e) const;

  bool word_irreducible(const Word& w) const;

  /// Number of irreducible words of degree <= degree.  Requires confluence
  /// up to at least that degree; otherwise throws InconclusiveError.
  long graded_dimension(int degree) const;

  /// All irreducible words of degree <= degree, in ascending degree-lex order.
  std::vector<Word> irreducible_words(int degree) const;

  std::string serialize() const;

 private:
  PresentationPtr pres_;
  std::vector<Rule> rules_;
  int degree_bound_;
  SystemStatus status_;
  int rules_added_;

  // Finds (position, rule index) of a reducible spot in w, or nullopt.
  std::optional<std::pair<int, int>> find_redex(const Word& w) const;
  Element reduce_once(const Word& w, const Scalar& coeff, int pos, int rule) const;
};

/// Turns each relation into a rule leading-word -> remainder.  Zero
/// relations are rejected; a relation whose leading word is empty presents
/// the zero algebra and is rejected as well.
std::vector<Rule> orient(const Presentation& pres);

/// Diamond-lemma completion: resolves all overlap and inclusion ambiguities
/// whose ambiguity word has degree <= degree_bound, adding oriented
/// S-polynomial rules until stable.
CompletedSystem complete(PresentationPtr pres, int degree_bound,
                         const CompletionBudget& budget = {});

}  // namespace torsor
