#include "torsor/morphism.hpp"

#include <algorithm>
#include <sstream>

namespace torsor {

Morphism Morphism::generator_images(const AlgebraHandle& source, SignaturePtr target,
                                    std::vector<TensorElement> images, bool certify) {
  if (static_cast<int>(images.size()) != source.pres->arity())
    throw SignatureMismatch("one image per source generator required");
  for (const TensorElement& img : images) {
    if (!img.signature() || !img.signature()->same_presentations(*target))
      throw SignatureMismatch("generator image lives in the wrong signature");
  }
  Morphism m;
  m.kind_ = Kind::generator_images;
  m.source_ = make_signature({source});
  m.target_ = std::move(target);
  m.images_ = std::move(images);
  if (certify) m.certify();
  return m;
}

void Morphism::certify() {
  const AlgebraHandle& src = source_->leg(0);
  certificate_ = Certificate::verified;
  const auto& rels = src.pres->relations();
  for (size_t i = 0; i < rels.size(); ++i) {
    TensorElement image(target_);
    for (const auto& [w, c] : rels[i].terms()) image += image_of_word(w).scaled(c);
    if (!image.is_zero()) {
      if (image.bound_limited())
        throw InconclusiveError("certificate for relation undecidable at this bound: " +
                                rels[i].str());
      certificate_ = Certificate::failed;
      witness_ = Witness{"relation " + std::to_string(i + 1) + ": " + rels[i].str(),
                         image.str(), image.degree()};
      return;
    }
    if (image.bound_limited())
      throw InconclusiveError("certificate for relation undecidable at this bound: " +
                              rels[i].str());
  }
}

TensorElement Morphism::image_of_word(const Word& w) const {
  const AlgebraHandle& src = source_->leg(0);
  TensorElement acc = TensorElement::unit(target_);
  if (src.orientation == Orientation::straight) {
    for (int g : w) acc = acc * images_[g];
  } else {
    for (auto it = w.rbegin(); it != w.rend(); ++it) acc = acc * images_[*it];
  }
  return acc;
}

Morphism Morphism::identity(SignaturePtr sig) {
  Morphism m;
  m.kind_ = Kind::identity;
  m.source_ = sig;
  m.target_ = std::move(sig);
  m.certificate_ = Certificate::verified;
  return m;
}

Morphism Morphism::leg_lift(const Morphism& inner, int position, SignaturePtr ambient) {
  if (position < 1 || position > static_cast<int>(ambient->size()))
    throw SignatureMismatch("leg position out of range");
  if (inner.source_->size() != 1)
    throw SignatureMismatch("only single-leg morphisms can be lifted");
  if (!ambient->leg(position - 1).same_presentation(inner.source_->leg(0)))
    throw SignatureMismatch("ambient leg does not match the lifted source");
  std::vector<AlgebraHandle> legs;
  for (int i = 0; i < static_cast<int>(ambient->size()); ++i) {
    if (i == position - 1)
      for (const AlgebraHandle& h : inner.target_->legs()) legs.push_back(h);
    else
      legs.push_back(ambient->leg(i));
  }
  Morphism m;
  m.kind_ = Kind::leg_lift;
  m.source_ = std::move(ambient);
  m.target_ = make_signature(std::move(legs));
  m.parts_.push_back(std::make_shared<Morphism>(inner));
  m.position_ = position;
  m.certificate_ = inner.certificate_;
  return m;
}

Morphism Morphism::permute_legs(SignaturePtr source, std::vector<int> perm) {
  if (perm.size() != source->size()) throw SignatureMismatch("permutation size mismatch");
  std::vector<AlgebraHandle> legs;
  for (int p : perm) {
    if (p < 0 || p >= static_cast<int>(source->size()))
      throw SignatureMismatch("permutation index out of range");
    legs.push_back(source->leg(p));
  }
  Morphism m;
  m.kind_ = Kind::permute;
  m.source_ = std::move(source);
  m.target_ = make_signature(std::move(legs));
  m.perm_ = std::move(perm);
  m.certificate_ = Certificate::verified;
  return m;
}

Morphism Morphism::flip(SignaturePtr source, int block_i, int block_j) {
  const std::vector<int>& blocks = source->blocks();
  if (block_i < 1 || block_j < 1 || block_i > static_cast<int>(blocks.size()) ||
      block_j > static_cast<int>(blocks.size()))
    throw SignatureMismatch("block index out of range");
  if (block_i == block_j) return identity(source);
  // leg ranges of each block
  std::vector<std::pair<int, int>> range;  // start, length per block
  int at = 0;
  for (int b : blocks) {
    range.emplace_back(at, b);
    at += b;
  }
  std::vector<int> order(blocks.size());
  for (size_t i = 0; i < blocks.size(); ++i) order[i] = static_cast<int>(i);
  std::swap(order[block_i - 1], order[block_j - 1]);
  std::vector<int> perm;
  std::vector<int> new_blocks;
  for (int b : order) {
    for (int k = 0; k < range[b].second; ++k) perm.push_back(range[b].first + k);
    new_blocks.push_back(range[b].second);
  }
  Morphism m = permute_legs(source, perm);
  // carry the block structure on the target
  std::vector<AlgebraHandle> legs = m.target_->legs();
  m.target_ = make_signature(std::move(legs), std::move(new_blocks));
  return m;
}

Morphism Morphism::merge_legs(SignaturePtr source, int i, Orientation product_orientation) {
  if (i < 1 || i + 1 > static_cast<int>(source->size()))
    throw SignatureMismatch("merge position out of range");
  if (!source->leg(i - 1).same_presentation(source->leg(i)))
    throw SignatureMismatch("merged legs must share a presentation");
  std::vector<AlgebraHandle> legs;
  for (int k = 0; k < static_cast<int>(source->size()); ++k) {
    if (k == i) continue;  // absorbed into leg i-1
    AlgebraHandle h = source->leg(k);
    if (k == i - 1) h.orientation = Orientation::straight;
    legs.push_back(h);
  }
  Morphism m;
  m.kind_ = Kind::merge;
  m.source_ = std::move(source);
  m.target_ = make_signature(std::move(legs));
  m.position_ = i;
  m.merge_orientation_ = product_orientation;
  m.certificate_ = Certificate::verified;
  return m;
}

Morphism Morphism::drop_unit_leg(SignaturePtr source, int i) {
  if (i < 1 || i > static_cast<int>(source->size()))
    throw SignatureMismatch("drop position out of range");
  if (source->size() == 1) throw SignatureMismatch("cannot drop the only leg");
  std::vector<AlgebraHandle> legs;
  for (int k = 0; k < static_cast<int>(source->size()); ++k)
    if (k != i - 1) legs.push_back(source->leg(k));
  Morphism m;
  m.kind_ = Kind::drop_unit;
  m.source_ = std::move(source);
  m.target_ = make_signature(std::move(legs));
  m.position_ = i;
  m.certificate_ = Certificate::verified;
  return m;
}

Morphism Morphism::compose(const Morphism& f, const Morphism& g) {
  if (!g.target_->same_presentations(*f.source_))
    throw SignatureMismatch("composition signature mismatch: " + g.target_->str() +
                            " vs " + f.source_->str());
  Morphism m;
  m.kind_ = Kind::composite;
  m.source_ = g.source_;
  m.target_ = f.target_;
  m.parts_.push_back(std::make_shared<Morphism>(g));
  m.parts_.push_back(std::make_shared<Morphism>(f));
  auto worst = [](Certificate a, Certificate b) {
    if (a == Certificate::failed || b == Certificate::failed) return Certificate::failed;
    if (a == Certificate::unchecked || b == Certificate::unchecked)
      return Certificate::unchecked;
    return Certificate::verified;
  };
  m.certificate_ = worst(f.certificate_, g.certificate_);
  if (f.witness_)
    m.witness_ = f.witness_;
  else if (g.witness_)
    m.witness_ = g.witness_;
  return m;
}

TensorElement Morphism::apply(const TensorElement& x) const {
  if (!x.signature() || !x.signature()->same_presentations(*source_))
    throw SignatureMismatch("argument signature mismatch");
  TensorElement out = apply_impl(x);
  if (x.bound_limited()) out.mark_bound_limited();
  return out;
}

TensorElement Morphism::apply_impl(const TensorElement& x) const {
  switch (kind_) {
    case Kind::identity:
      return x;
    case Kind::generator_images: {
      TensorElement out(target_);
      for (const auto& [tuple, c] : x.terms()) out += image_of_word(tuple[0]).scaled(c);
      return out;
    }
    case Kind::composite: {
      TensorElement cur = x;
      for (const auto& part : parts_) cur = part->apply(cur);
      return cur;
    }
    case Kind::leg_lift: {
      const Morphism& inner = *parts_[0];
      const int pos = position_ - 1;
      TensorElement out(target_);
      for (const auto& [tuple, c] : x.terms()) {
        TensorElement leg_in(inner.source());
        leg_in.add_raw({tuple[pos]}, Scalar(1));
        TensorElement img = inner.apply(leg_in);
        if (img.bound_limited()) out.mark_bound_limited();
        for (const auto& [ituple, ic] : img.terms()) {
          std::vector<Word> combined;
          combined.reserve(target_->size());
          for (int k = 0; k < pos; ++k) combined.push_back(tuple[k]);
          for (const Word& w : ituple) combined.push_back(w);
          for (size_t k = pos + 1; k < tuple.size(); ++k) combined.push_back(tuple[k]);
          out.add_raw(combined, c * ic);
        }
      }
      return out;
    }
    case Kind::permute: {
      TensorElement out(target_);
      for (const auto& [tuple, c] : x.terms()) {
        std::vector<Word> permuted(perm_.size());
        for (size_t k = 0; k < perm_.size(); ++k) permuted[k] = tuple[perm_[k]];
        out.add_raw(permuted, c);
      }
      return out;
    }
    case Kind::merge: {
      const int pos = position_ - 1;
      TensorElement out(target_);
      for (const auto& [tuple, c] : x.terms()) {
        std::vector<Word> merged;
        merged.reserve(tuple.size() - 1);
        for (int k = 0; k < pos; ++k) merged.push_back(tuple[k]);
        Word w;
        const Word& a = tuple[pos];
        const Word& b = tuple[pos + 1];
        if (merge_orientation_ == Orientation::straight) {
          w = a;
          w.insert(w.end(), b.begin(), b.end());
        } else {
          w = b;
          w.insert(w.end(), a.begin(), a.end());
        }
        merged.push_back(std::move(w));
        for (size_t k = pos + 2; k < tuple.size(); ++k) merged.push_back(tuple[k]);
        out.add_raw(merged, c);
      }
      return out;
    }
    case Kind::drop_unit: {
      const int pos = position_ - 1;
      TensorElement out(target_);
      for (const auto& [tuple, c] : x.terms()) {
        if (!tuple[pos].empty())
          throw SignatureMismatch("dropped leg holds a non-unit word");
        std::vector<Word> rest;
        for (size_t k = 0; k < tuple.size(); ++k)
          if (static_cast<int>(k) != pos) rest.push_back(tuple[k]);
        out.add_raw(rest, c);
      }
      return out;
    }
  }
  throw EngineError("unreachable morphism kind");
}

TensorElement Morphism::apply_generator(int gen_id) const {
  if (source_->size() != 1) throw SignatureMismatch("generator application needs a single leg");
  TensorElement x(source_);
  x.add_raw({Word{gen_id}}, Scalar(1));
  return apply(x);
}

std::string Morphism::describe() const {
  std::ostringstream out;
  if (!name_.empty()) out << name_ << ": ";
  out << source_->str() << " -> " << target_->str();
  if (kind_ == Kind::generator_images) {
    const PresentationPtr& p = source_->leg(0).pres;
    for (int g = 0; g < p->arity(); ++g)
      out << "\n  " << p->gen_name(g) << " -> " << images_[g].str();
  }
  return out.str();
}

MorphismComparison equal_morphisms(const Morphism& f, const Morphism& g) {
  if (!f.source()->same_presentations(*g.source()) ||
      !f.target()->same_presentations(*g.target()))
    throw SignatureMismatch("compared morphisms must share source and target");
  if (f.source()->size() != 1)
    throw SignatureMismatch("generator-level comparison needs a single-leg source");
  MorphismComparison cmp;
  const PresentationPtr& pres = f.source()->leg(0).pres;
  for (int gen = 0; gen < pres->arity(); ++gen) {
    TensorElement diff = f.apply_generator(gen) - g.apply_generator(gen);
    if (!diff.is_zero()) {
      if (diff.bound_limited()) {
        cmp.bound_limited = true;
        continue;
      }
      cmp.equal = false;
      cmp.witness = Witness{"generator " + pres->gen_name(gen), diff.str(), diff.degree()};
      return cmp;
    }
    if (diff.bound_limited()) cmp.bound_limited = true;
  }
  return cmp;
}

MorphismComparison equal_on_samples(const Morphism& f, const Morphism& g,
                                    const std::vector<TensorElement>& samples) {
  MorphismComparison cmp;
  for (size_t i = 0; i < samples.size(); ++i) {
    TensorElement diff = f.apply(samples[i]) - g.apply(samples[i]);
    if (!diff.is_zero()) {
      if (diff.bound_limited()) {
        cmp.bound_limited = true;
        continue;
      }
      cmp.equal = false;
      cmp.witness = Witness{"sample element " + std::to_string(i + 1), diff.str(), diff.degree()};
      return cmp;
    }
    if (diff.bound_limited()) cmp.bound_limited = true;
  }
  return cmp;
}

}  // namespace torsor
