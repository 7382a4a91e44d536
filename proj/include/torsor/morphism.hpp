#pragma once

#include <optional>

#include "torsor/tensor.hpp"

namespace torsor {

/// Evidence that an identity failed: the offending relation or identity
/// label and the nonzero normal form exhibiting the failure.
struct Witness {
  std::string label;
  std::string normal_form;
  int degree = -1;
};

/// An algebra map between tensor signatures.  Maps out of a single presented
/// algebra carry generator images and a well-definedness certificate; maps
/// out of tensor signatures only ever arise as composites of leg operations
/// and single-source morphisms.
class Morphism {
 public:
  enum class Certificate { verified, failed, unchecked };

  /// Extends generator images multiplicatively.  A straight source extends
  /// words left to right; an opposite source reverses them.  When certify is
  /// set, the image of every source relation is reduced in the target; a
  /// bound-limited zero test raises InconclusiveError.
  static Morphism generator_images(const AlgebraHandle& source, SignaturePtr target,
                                   std::vector<TensorElement> images, bool certify = true);

  static Morphism identity(SignaturePtr sig);
  /// inner applied at `position` of `ambient`, identity on the other legs.
  static Morphism leg_lift(const Morphism& inner, int position, SignaturePtr ambient);
  /// target leg i = source leg perm[i]; orientation travels with the leg.
  static Morphism permute_legs(SignaturePtr source, std::vector<int> perm);
  /// Swaps blocks i and j (1-based) of the source signature atomically.
  static Morphism flip(SignaturePtr source, int block_i, int block_j);
  /// Merges legs i, i+1 (1-based); both must carry the same presentation.
  /// The merged product is taken in `product_orientation` and the result leg
  /// is declared straight.
  static Morphism merge_legs(SignaturePtr source, int i,
                             Orientation product_orientation = Orientation::straight);
  /// Removes leg i (1-based), which must carry the trivial algebra.
  static Morphism drop_unit_leg(SignaturePtr source, int i);
  /// f after g (g.target must match f.source legwise).
  static Morphism compose(const Morphism& f, const Morphism& g);

  const SignaturePtr& source() const { return source_; }
  const SignaturePtr& target() const { return target_; }
  Certificate certificate() const { return certificate_; }
  const std::optional<Witness>& witness() const { return witness_; }
  const std::vector<TensorElement>& images() const { return images_; }

  TensorElement apply(const TensorElement& x) const;
  /// Image of a single-leg source generator.
  TensorElement apply_generator(int gen_id) const;

  /// Name used when rendering reports.
  const std::string& name() const { return name_; }
  Morphism named(std::string n) const {
    Morphism m = *this;
    m.name_ = std::move(n);
    return m;
  }
  std::string describe() const;  // generator -> image lines for reports

 private:
  enum class Kind { generator_images, identity, leg_lift, permute, merge, drop_unit, composite };

  Kind kind_ = Kind::identity;
  SignaturePtr source_, target_;
  std::vector<TensorElement> images_;        // generator_images
  std::vector<std::shared_ptr<Morphism>> parts_;  // composite (applied left to right) / leg_lift
  std::vector<int> perm_;                    // permute
  int position_ = 0;                         // leg_lift / merge / drop_unit
  Orientation merge_orientation_ = Orientation::straight;
  Certificate certificate_ = Certificate::unchecked;
  std::optional<Witness> witness_;
  std::string name_;

  TensorElement image_of_word(const Word& w) const;
  TensorElement apply_impl(const TensorElement& x) const;
  void certify();
};

struct MorphismComparison {
  bool equal = true;
  bool bound_limited = false;
  std::optional<Witness> witness;
};

/// Compares two maps on every generator of the (single-algebra) source.
/// Sound for certified algebra morphisms.  Raises InconclusiveError when a
/// zero test is bound-limited and no certain difference was found.
MorphismComparison equal_morphisms(const Morphism& f, const Morphism& g);

/// Same comparison on explicit sample elements of the source.
MorphismComparison equal_on_samples(const Morphism& f, const Morphism& g,
                                    const std::vector<TensorElement>& samples);

}  // namespace torsor
