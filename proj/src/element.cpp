#include "torsor/element.hpp"

#include <algorithm>
#include <sstream>

namespace torsor {

Presentation::Presentation(std::string display_name, std::vector<Generator> gens)
    : display_(std::move(display_name)), gens_(std::move(gens)) {
  for (size_t i = 0; i < gens_.size(); ++i) {
    const Generator& g = gens_[i];
    if (g.name.empty()) throw ValidationError("generator with empty name");
    if (g.degree < 1) throw ValidationError("generator degree must be positive: " + g.name);
    if (!index_.emplace(g.name, static_cast<int>(i)).second)
      throw ValidationError("duplicate generator name: " + g.name);
  }
}

int Presentation::gen_id(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

int Presentation::word_degree(const Word& w) const {
  int d = 0;
  for (int g : w) d += gens_[g].degree;
  return d;
}

std::string Presentation::word_str(const Word& w) const {
  if (w.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += " ";
    s += gens_[w[i]].name;
  }
  return s;
}

int Presentation::compare_words(const Word& a, const Word& b) const {
  int da = word_degree(a), db = word_degree(b);
  if (da != db) return da < db ? -1 : 1;
  // Equal degree: leftmost differing letter decides; smaller generator id
  // means higher precedence, hence the larger word.
  size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

void Presentation::add_relation(Element rel) {
  if (rel.presentation().get() != this)
    throw ValidationError("relation built over a different presentation");
  rels_.push_back(std::move(rel));
}

std::vector<std::string> Presentation::relation_labels() const {
  std::vector<std::string> out;
  out.reserve(rels_.size());
  for (size_t i = 0; i < rels_.size(); ++i)
    out.push_back("relation " + std::to_string(i + 1) + ": " + rels_[i].str());
  return out;
}

std::string Presentation::serialize() const {
  std::ostringstream out;
  out << "presentation " << display_ << "\n";
  for (const Generator& g : gens_) out << "gen " << g.name << " " << g.degree << "\n";
  for (const Element& r : rels_) out << "rel " << r.str() << "\n";
  return out.str();
}

Element Element::unit(PresentationPtr pres, Scalar coeff) {
  Element e(std::move(pres));
  e.add_term(Word{}, coeff);
  return e;
}

Element Element::generator(PresentationPtr pres, int gen_id) {
  if (gen_id < 0 || gen_id >= pres->arity())
    throw EngineError("generator id out of range");
  Element e(std::move(pres));
  e.add_term(Word{gen_id}, Scalar(1));
  return e;
}

Element Element::from_word(PresentationPtr pres, Word w, Scalar coeff) {
  Element e(std::move(pres));
  e.add_term(w, coeff);
  return e;
}

int Element::degree() const {
  int d = -1;
  for (const auto& [w, c] : terms_) d = std::max(d, pres_->word_degree(w));
  return d;
}

const Word& Element::leading_word() const {
  if (terms_.empty()) throw EngineError("leading word of zero element");
  const Word* best = nullptr;
  for (const auto& [w, c] : terms_) {
    if (!best || pres_->compare_words(w, *best) > 0) best = &w;
  }
  return *best;
}

const Scalar& Element::leading_coeff() const { return terms_.at(leading_word()); }

void Element::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  for (int g : w)
    if (g < 0 || g >= pres_->arity()) throw EngineError("word uses unknown generator");
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Element::check_same(const Element& o) const {
  if (pres_.get() != o.pres_.get())
    throw SignatureMismatch("elements over different presentations");
}

Element Element::operator-() const {
  Element r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

Element operator+(const Element& a, const Element& b) {
  if (a.pres_ == nullptr) return b;
  if (b.pres_ == nullptr) return a;
  a.check_same(b);
  Element r = a;
  for (const auto& [w, c] : b.terms_) r.add_term(w, c);
  return r;
}

Element operator-(const Element& a, const Element& b) { return a + (-b); }

Element operator*(const Element& a, const Element& b) {
  a.check_same(b);
  Element r(a.pres_);
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      r.add_term(w, ca * cb);
    }
  }
  return r;
}

Element Element::scaled(const Scalar& c) const {
  Element r(pres_);
  if (c.is_zero()) return r;
  for (const auto& [w, k] : terms_) r.add_term(w, k * c);
  return r;
}

std::string Element::str() const {
  if (terms_.empty()) return "0";
  std::vector<const Word*> order;
  order.reserve(terms_.size());
  for (const auto& [w, c] : terms_) order.push_back(&w);
  std::sort(order.begin(), order.end(), [&](const Word* a, const Word* b) {
    return pres_->compare_words(*a, *b) > 0;  // leading term first
  });
  std::ostringstream out;
  bool first = true;
  for (const Word* w : order) {
    const Scalar& c = terms_.at(*w);
    std::string cs = c.str();
    bool negated = !cs.empty() && cs[0] == '-';
    if (first) {
      if (negated) out << "- ", cs = cs.substr(1);
      first = false;
    } else {
      out << (negated ? " - " : " + ");
      if (negated) cs = cs.substr(1);
    }
    bool unit_coeff = (cs == "1");
    if (w->empty()) {
      out << cs;
    } else {
      if (!unit_coeff) out << cs << " ";
      out << pres_->word_str(*w);
    }
  }
  return out.str();
}

}  // namespace torsor
