#include "torsor/tensor.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace torsor {

TensorSignature::TensorSignature(std::vector<AlgebraHandle> legs, std::vector<int> blocks)
    : legs_(std::move(legs)), blocks_(std::move(blocks)) {
  if (legs_.empty()) throw SignatureMismatch("signature needs at least one leg");
  if (blocks_.empty()) blocks_.assign(legs_.size(), 1);
  if (std::accumulate(blocks_.begin(), blocks_.end(), 0) != static_cast<int>(legs_.size()))
    throw SignatureMismatch("block sizes do not cover the legs");
}

bool TensorSignature::same_presentations(const TensorSignature& o) const {
  if (legs_.size() != o.legs_.size()) return false;
  for (size_t i = 0; i < legs_.size(); ++i)
    if (!legs_[i].same_presentation(o.legs_[i])) return false;
  return true;
}

std::string TensorSignature::str() const {
  std::string s;
  for (size_t i = 0; i < legs_.size(); ++i) {
    if (i) s += " ⊗ ";
    s += legs_[i].display.empty() ? legs_[i].pres->display_name() : legs_[i].display;
  }
  return s;
}

SignaturePtr make_signature(std::vector<AlgebraHandle> legs, std::vector<int> blocks) {
  return std::make_shared<const TensorSignature>(std::move(legs), std::move(blocks));
}

TensorElement TensorElement::unit(SignaturePtr sig, Scalar coeff) {
  TensorElement t(std::move(sig));
  if (!coeff.is_zero())
    t.terms_.emplace(std::vector<Word>(t.sig_->size()), std::move(coeff));
  return t;
}

TensorElement TensorElement::pure(SignaturePtr sig, const std::vector<Element>& legs,
                                  const Scalar& coeff) {
  TensorElement t(std::move(sig));
  t.add_pure(legs, coeff);
  return t;
}

void TensorElement::add_pure(const std::vector<Element>& legs, const Scalar& coeff) {
  if (legs.size() != sig_->size())
    throw SignatureMismatch("pure tensor has wrong number of legs");
  if (coeff.is_zero()) return;
  std::vector<Element> nf;
  nf.reserve(legs.size());
  for (size_t i = 0; i < legs.size(); ++i) {
    const AlgebraHandle& h = sig_->leg(i);
    if (legs[i].presentation().get() != h.pres.get())
      throw SignatureMismatch("leg element lives in the wrong algebra");
    if (h.system->status() == SystemStatus::saturated_at_bound &&
        legs[i].degree() >= h.system->degree_bound())
      bound_limited_ = true;
    nf.push_back(h.system->normal_form(legs[i]));
    if (nf.back().is_zero()) return;
  }
  // multilinear expansion into word tuples
  std::vector<Word> tuple(legs.size());
  std::function<void(size_t, Scalar)> expand = [&](size_t i, Scalar c) {
    if (i == nf.size()) {
      auto [it, fresh] = terms_.emplace(tuple, c);
      if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
      }
      return;
    }
    for (const auto& [w, k] : nf[i].terms()) {
      tuple[i] = w;
      expand(i + 1, c * k);
    }
  };
  expand(0, coeff);
}

void TensorElement::add_raw(const std::vector<Word>& words, const Scalar& coeff) {
  std::vector<Element> legs;
  legs.reserve(words.size());
  for (size_t i = 0; i < words.size(); ++i)
    legs.push_back(Element::from_word(sig_->leg(i).pres, words[i]));
  add_pure(legs, coeff);
}

void TensorElement::check_compatible(const TensorElement& o) const {
  if (sig_ == nullptr || o.sig_ == nullptr)
    throw SignatureMismatch("tensor element without signature");
  if (sig_.get() != o.sig_.get() && !sig_->same_presentations(*o.sig_))
    throw SignatureMismatch("tensor elements over different signatures");
}

TensorElement TensorElement::operator-() const {
  TensorElement r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

TensorElement operator+(const TensorElement& a, const TensorElement& b) {
  if (!a.sig_) return b;
  if (!b.sig_) return a;
  a.check_compatible(b);
  TensorElement r = a;
  r.bound_limited_ = a.bound_limited_ || b.bound_limited_;
  for (const auto& [w, c] : b.terms_) {
    auto [it, fresh] = r.terms_.emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) r.terms_.erase(it);
    }
  }
  return r;
}

TensorElement operator-(const TensorElement& a, const TensorElement& b) { return a + (-b); }

TensorElement operator*(const TensorElement& a, const TensorElement& b) {
  a.check_compatible(b);
  TensorElement r(a.sig_);
  r.bound_limited_ = a.bound_limited_ || b.bound_limited_;
  const size_t n = a.sig_->size();
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      std::vector<Word> tuple(n);
      for (size_t i = 0; i < n; ++i) {
        const Word& x = wa[i];
        const Word& y = wb[i];
        Word w;
        w.reserve(x.size() + y.size());
        if (a.sig_->leg(i).orientation == Orientation::straight) {
          w.insert(w.end(), x.begin(), x.end());
          w.insert(w.end(), y.begin(), y.end());
        } else {
          w.insert(w.end(), y.begin(), y.end());
          w.insert(w.end(), x.begin(), x.end());
        }
        tuple[i] = std::move(w);
      }
      r.add_raw(tuple, ca * cb);
    }
  }
  return r;
}

TensorElement TensorElement::scaled(const Scalar& c) const {
  TensorElement r(sig_);
  r.bound_limited_ = bound_limited_;
  if (c.is_zero()) return r;
  for (const auto& [w, k] : terms_) r.terms_.emplace(w, k * c);
  return r;
}

int TensorElement::degree() const {
  int best = -1;
  for (const auto& [tuple, c] : terms_) {
    int d = 0;
    for (size_t i = 0; i < tuple.size(); ++i) d += sig_->leg(i).pres->word_degree(tuple[i]);
    best = std::max(best, d);
  }
  return best;
}

std::string TensorElement::str() const {
  if (terms_.empty()) return "0";
  // deterministic: order tuples by legwise degree-lex, leading first
  std::vector<const std::vector<Word>*> order;
  for (const auto& [t, c] : terms_) order.push_back(&t);
  auto cmp = [&](const std::vector<Word>* a, const std::vector<Word>* b) {
    for (size_t i = 0; i < a->size(); ++i) {
      int c = sig_->leg(i).pres->compare_words((*a)[i], (*b)[i]);
      if (c != 0) return c > 0;
    }
    return false;
  };
  std::sort(order.begin(), order.end(), cmp);
  std::ostringstream out;
  bool first = true;
  for (const auto* t : order) {
    std::string cs = terms_.at(*t).str();
    bool neg = !cs.empty() && cs[0] == '-';
    if (first) {
      if (neg) out << "- ", cs = cs.substr(1);
      first = false;
    } else {
      out << (neg ? " - " : " + ");
      if (neg) cs = cs.substr(1);
    }
    if (cs != "1") out << cs << " * ";
    for (size_t i = 0; i < t->size(); ++i) {
      if (i) out << "⊗";
      out << "(" << sig_->leg(i).pres->word_str((*t)[i]) << ")";
    }
  }
  return out.str();
}

}  // namespace torsor
