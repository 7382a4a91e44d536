#pragma once

#include "torsor/factories.hpp"
#include "torsor/linalg.hpp"

namespace torsor {

enum class CheckStatus { pass, fail, inconclusive };
const char* to_string(CheckStatus s);

/// Outcome of one identity check.  A fail always carries a witness; an
/// inconclusive result records that a bound-limited zero test occurred.
struct CheckResult {
  std::string label;
  std::string anchor;  // the law being checked, written out as a formula
  CheckStatus status = CheckStatus::pass;
  std::optional<Witness> witness;
  long millis = 0;
};

struct CheckReport {
  std::string suite;
  std::string datum;
  int degree_bound = 0;
  std::vector<CheckResult> results;

  CheckStatus overall() const;
  void append(std::vector<CheckResult> more);
};

struct VerifyOptions {
  int random_samples = 50;   // extra random-element comparisons per diagram
  unsigned seed = 20240901;  // base seed; kept fixed for deterministic reports
};

/// Coassociativity, counit laws, and both antipode laws, checked on
/// generators of a certified Hopf structure.
std::vector<CheckResult> hopf_results(const HopfData& h, const VerifyOptions& opts = {});
CheckReport check_hopf(const HopfData& h, const VerifyOptions& opts = {});

/// Torsor laws: unit laws, coassociativity of the triple coproduct, a
/// certified endomorphism, and the five-leg exchange law tying theta to mu.
std::vector<CheckResult> torsor_results(const AlgebraHandle& T, const TorsorData& t,
                                        const VerifyOptions& opts = {});
CheckReport check_torsor(const AlgebraHandle& T, const TorsorData& t,
                         const VerifyOptions& opts = {});

enum class CoactionSide { left, right };

/// Coaction coassociativity and counit law for one side.
std::vector<CheckResult> comodule_results(const Morphism& coaction, const HopfData& H,
                                          CoactionSide side, const std::string& label_prefix,
                                          const VerifyOptions& opts = {});
/// Both coactions of a bundle plus the bicomodule compatibility square.
std::vector<CheckResult> bicomodule_results(const GaloisBundle& b,
                                            const VerifyOptions& opts = {});
CheckReport check_comodule(const GaloisBundle& b, const VerifyOptions& opts = {});

/// The three coaction squares and the two antipode contraction triangles of
/// a Hopf-Galois system, on the given bundle's primary orientation.
std::vector<CheckResult> galois_results(const GaloisBundle& b, bool mirrored,
                                        const VerifyOptions& opts = {});
CheckReport check_galois_system(const GaloisBundle& b, const VerifyOptions& opts = {});

/// The eight compatibilities between the system and its mirror, plus the
/// mirrored system's own five diagrams.
std::vector<CheckResult> complete_results(const GaloisBundle& b,
                                          const VerifyOptions& opts = {});
CheckReport check_complete_system(const GaloisBundle& b, const VerifyOptions& opts = {});

/// Membership balances for elements of T (x) T^op resp. T^op (x) T.
CheckResult check_Hl_membership(const TensorElement& u, const TorsorData& t,
                                const std::string& label);
CheckResult check_Hr_membership(const TensorElement& u, const TorsorData& t,
                                const std::string& label);

/// (theta (x) id (x) theta) applied to the reversed triple coproduct.
TensorElement compute_S_T(const Element& x, const AlgebraHandle& T, const TorsorData& t);

/// Both coinvariance balances for a three-leg element.
CheckResult check_Z_membership(const TensorElement& z, const TorsorData& t,
                               const std::string& label);

/// The two counit contractions (multiply legs 1,2 then 3; multiply legs 2,3
/// then 1) agree as elements of T.
CheckResult check_counit_agreement(const TensorElement& z, const std::string& label);

/// Irreducible-word counts match the linear-algebra oracle at every degree
/// <= degree, and irreducible words factor as toral * f-block * e-block.
CheckResult verify_basis(const AlgebraHandle& B, int degree,
                         const OracleBudget& budget = {});

/// Full membership suite for a Kashiwara bundle: images of gamma and delta,
/// the generalized antipode images, and the stated negative examples.
std::vector<CheckResult> membership_results(const GaloisBundle& b);

/// The embedding is an algebra morphism, a coalgebra morphism, and respects
/// counits.
std::vector<CheckResult> embedding_results(const HopfData& uhat, const HopfData& uq,
                                           const Morphism& embed,
                                           const VerifyOptions& opts = {});

/// One random single-token mutation applied to a bundle map.
struct MutationOutcome {
  std::string site;
  bool detected = false;
  std::string first_failure;
};

/// Applies `count` random single-token mutations (sign flip or an extra
/// factor of q on one term of one generator image) and reruns the bundle
/// suites, recording whether each mutation produced at least one failure.
std::vector<MutationOutcome> mutation_fuzz(const GaloisBundle& b, int count, unsigned seed);

/// Replaces generator images of one named bundle map; used by suite
/// overrides.  Unknown map or generator names raise ValidationError.
void override_bundle_map(GaloisBundle& b, const std::string& map_name,
                         const std::map<std::string, std::string>& images);

}  // namespace torsor
