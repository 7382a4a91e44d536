#pragma once

#include "torsor/rewrite.hpp"

namespace torsor {

enum class Orientation { straight, opposite };

/// An algebra in a fixed computational form: a presentation, its completed
/// rewriting system, and an orientation.  The opposite handle shares the
/// underlying space and rules; only multiplication reverses.
struct AlgebraHandle {
  PresentationPtr pres;
  std::shared_ptr<const CompletedSystem> system;
  Orientation orientation = Orientation::straight;
  std::string display;

  AlgebraHandle opposite() const {
    AlgebraHandle h = *this;
    h.orientation = h.orientation == Orientation::straight ? Orientation::opposite
                                                           : Orientation::straight;
    h.display = h.orientation == Orientation::opposite ? display + "^op" : pres->display_name();
    return h;
  }
  bool same_presentation(const AlgebraHandle& o) const { return pres.get() == o.pres.get(); }
};

/// Ordered list of algebra factors; the optional block structure groups
/// consecutive legs that move atomically under flips.
class TensorSignature {
 public:
  explicit TensorSignature(std::vector<AlgebraHandle> legs, std::vector<int> blocks = {});

  size_t size() const { return legs_.size(); }
  const AlgebraHandle& leg(size_t i) const { return legs_[i]; }
  const std::vector<AlgebraHandle>& legs() const { return legs_; }
  const std::vector<int>& blocks() const { return blocks_; }

  bool same_presentations(const TensorSignature& o) const;
  std::string str() const;

 private:
  std::vector<AlgebraHandle> legs_;
  std::vector<int> blocks_;
};

using SignaturePtr = std::shared_ptr<const TensorSignature>;

SignaturePtr make_signature(std::vector<AlgebraHandle> legs, std::vector<int> blocks = {});

/// Finite sum of pure tensors over a signature, kept in expanded canonical
/// form: every leg word is irreducible and coefficients sit in front.
/// Multiplying, subtracting and comparing all act on this canonical form.
class TensorElement {
 public:
  TensorElement() = default;
  explicit TensorElement(SignaturePtr sig) : sig_(std::move(sig)) {}

  static TensorElement unit(SignaturePtr sig, Scalar coeff = Scalar(1));
  static TensorElement zero(SignaturePtr sig) { return TensorElement(std::move(sig)); }
  /// Pure tensor from per-leg elements; legs are normalized and expanded.
  static TensorElement pure(SignaturePtr sig, const std::vector<Element>& legs,
                            const Scalar& coeff = Scalar(1));

  const SignaturePtr& signature() const { return sig_; }
  bool is_zero() const { return terms_.empty(); }
  bool bound_limited() const { return bound_limited_; }
  void mark_bound_limited() { bound_limited_ = true; }
  size_t term_count() const { return terms_.size(); }
  const std::map<std::vector<Word>, Scalar>& terms() const { return terms_; }

  /// Adds coeff * (legs...) after normalizing each leg word.
  void add_pure(const std::vector<Element>& legs, const Scalar& coeff);
  void add_raw(const std::vector<Word>& words, const Scalar& coeff);

  TensorElement operator-() const;
  friend TensorElement operator+(const TensorElement& a, const TensorElement& b);
  friend TensorElement operator-(const TensorElement& a, const TensorElement& b);
  /// Legwise product honoring each leg's orientation.
  friend TensorElement operator*(const TensorElement& a, const TensorElement& b);
  TensorElement scaled(const Scalar& c) const;
  TensorElement& operator+=(const TensorElement& o) { return *this = *this + o; }
  TensorElement& operator-=(const TensorElement& o) { return *this = *this - o; }

  friend bool operator==(const TensorElement& a, const TensorElement& b) {
    return a.terms_ == b.terms_;
  }

  ZeroTest zero_test() const {
    return ZeroTest{terms_.empty(),
                    bound_limited_ ? Certainty::bound_limited : Certainty::certain};
  }

  int degree() const;  // max over terms of the summed leg degrees

  std::string str() const;

 private:
  SignaturePtr sig_;
  std::map<std::vector<Word>, Scalar> terms_;
  bool bound_limited_ = false;
  void check_compatible(const TensorElement& o) const;
};

}  // namespace torsor
