#pragma once

#include <optional>

#include "torsor/cache.hpp"
#include "torsor/cartan.hpp"
#include "torsor/lie.hpp"
#include "torsor/morphism.hpp"

namespace torsor {

struct BuildOptions {
  int degree_bound = 8;
  CompletionBudget budget;
  const CompletionCache* cache = nullptr;
};

/// A bialgebra with antipode in computational form: the algebra handle plus
/// certified structure maps.
struct HopfData {
  AlgebraHandle algebra;
  Morphism coproduct;  // A -> A (x) A
  Morphism antipode;   // A -> A^op
  Morphism counit;     // A -> k
  Morphism unit;       // k -> A
};

struct TorsorData {
  Morphism mu;     // T -> T (x) T^op (x) T
  Morphism theta;  // T -> T
};

/// The four algebras of a Hopf-Galois system with every structure map of
/// both the primary system (A, B, T, Z) and its mirror (B, A, Z, T).
struct GaloisBundle {
  std::string name;
  AlgebraHandle A, B, T, Z;
  HopfData hopfA, hopfB;
  Morphism alpha_T;  // T -> A (x) T
  Morphism beta_T;   // T -> T (x) B
  Morphism beta_Z;   // Z -> B (x) Z
  Morphism alpha_Z;  // Z -> Z (x) A
  Morphism gamma;    // A -> T (x) Z
  Morphism delta;    // B -> Z (x) T
  Morphism S_T;      // T -> Z^op
  Morphism S_Z;      // Z -> T^op
  std::optional<TorsorData> torsor;  // on T
};

/// The one-generator trivial algebra k (generator `one` with `one = 1`),
/// shared as the target of counits and the source of units.
AlgebraHandle trivial_algebra();

AlgebraHandle complete_handle(PresentationPtr pres, const BuildOptions& opts);

/// Drinfeld-Jimbo quantum group on e_i, f_i, t_i^{+-1}.
HopfData build_uq(const CartanDatum& c, const BuildOptions& opts = {});
/// Integral-form variant on eh_i: [eh_i, f_j] = delta_ij (t_i - t_i^-1).
HopfData build_uhat(const CartanDatum& c, const BuildOptions& opts = {});
/// Twisted-primitive variant on ep_i, fp_i with ep fp = q^-(ai,aj) fp ep.
HopfData build_uprime(const CartanDatum& c, const BuildOptions& opts = {});
/// Kashiwara algebra on ep_i, f_i, t_i^{+-1}: ep_i f_j = q^(ai,aj) f_j ep_i + delta_ij.
AlgebraHandle build_kashiwara(const CartanDatum& c, const BuildOptions& opts = {});

/// Triple coproduct and torsor endomorphism on the Kashiwara algebra.
TorsorData kashiwara_torsor(const AlgebraHandle& B, const CartanDatum& c);

/// Hopf-Galois system (U', Uhat, B, B^op) with all eight structure maps.
GaloisBundle kashiwara_bundle(const CartanDatum& c, const BuildOptions& opts = {});

/// Hopf algebra monomorphism Uhat -> Uq: eh_i -> (q_i - q_i^-1) e_i.
Morphism embed_uhat(const HopfData& uhat, const HopfData& uq, const CartanDatum& c);

/// Enveloping algebra twisted by a 2-cocycle: x y - y x - [x,y] - c(x,y).
AlgebraHandle build_sridharan(const LieDatum& l, const CocycleSpec& c,
                              const BuildOptions& opts = {});

/// Hopf-Galois system (U(g), U(g), U_c, U_-c) with torsor mu and theta = id.
GaloisBundle sridharan_bundle(const LieDatum& l, const CocycleSpec& c,
                              const BuildOptions& opts = {});

/// Specializes every relation coefficient at q = 1 and drops the toral
/// generators t<i>/t<i>inv.  Throws PoleError naming a relation whose
/// coefficients do not survive the specialization.  `rename` substitutes
/// generator names in the limit presentation.
AlgebraHandle classical_limit(const AlgebraHandle& h, const BuildOptions& opts = {},
                              const std::map<std::string, std::string>& rename = {});

/// Lie datum for the direct sum of the two nilpotent parts attached to a
/// rank <= 2 Cartan datum, the delta cocycle pairing the two sides, and
/// bracket expressions for composite basis elements.
struct ClassicalMatchData {
  LieDatum lie;
  CocycleSpec cocycle;
  std::map<std::string, std::string> bracket_exprs;
};
ClassicalMatchData nilpotent_pair_datum(const CartanDatum& c);

struct SridharanMatchResult {
  bool matched = true;
  bool bound_limited = false;
  std::optional<Witness> witness;
};

/// Mutual containment: every relation of the classical algebra reduces to
/// zero in the Sridharan algebra and conversely, composite basis names being
/// substituted by their bracket expressions.
SridharanMatchResult check_sridharan_match(const AlgebraHandle& classical_B,
                                           const LieDatum& l, const CocycleSpec& c,
                                           const std::map<std::string, std::string>& exprs,
                                           const BuildOptions& opts = {});

/// Relations of X reduce to zero in Y and conversely, after renaming
/// generators through the given maps.  Used for comparing classical limits.
SridharanMatchResult mutually_presenting(const AlgebraHandle& X, const AlgebraHandle& Y);

}  // namespace torsor
