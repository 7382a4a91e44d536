#pragma once

#include "torsor/tensor.hpp"

namespace torsor {

/// Parses an element expression over a presentation, e.g.
/// `q^2 f1 ep1 + 1` or `(q^2+1)/(q) t1 - ep1`.  Words are generator names
/// separated by spaces or `*`; `1` is the empty word.
Element parse_element(const std::string& text, const PresentationPtr& pres);

/// Parses a tensor expression over a signature, e.g.
/// `(t1 ep1)⊗(1) - (t1)⊗(ep1)` (also accepts `(x)` or `@` between legs).
/// A term without leg groups is read as a scalar multiple of the unit tensor.
TensorElement parse_tensor(const std::string& text, const SignaturePtr& sig);

}  // namespace torsor
