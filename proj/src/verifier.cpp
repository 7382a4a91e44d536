#include "torsor/verifier.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "torsor/parse.hpp"

namespace torsor {

namespace {

using Clock = std::chrono::steady_clock;

long ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

Morphism seq(std::vector<Morphism> steps) {
  if (steps.empty()) throw EngineError("empty morphism chain");
  Morphism acc = steps.front();
  for (size_t i = 1; i < steps.size(); ++i) acc = Morphism::compose(steps[i], acc);
  return acc;
}

Morphism unit_map(const AlgebraHandle& T) {
  AlgebraHandle triv = trivial_algebra();
  SignaturePtr Tsig = make_signature({T});
  return Morphism::generator_images(triv, Tsig, {TensorElement::unit(Tsig)}).named("unit");
}

// x -> 1 (x) x  resp.  x -> x (x) 1, as certified morphisms T -> T (x) T
Morphism unit_tensor_map(const AlgebraHandle& T, bool unit_on_left) {
  const PresentationPtr& p = T.pres;
  SignaturePtr TT = make_signature({T, T});
  Element one = Element::unit(p);
  std::vector<TensorElement> images(p->arity());
  for (int g = 0; g < p->arity(); ++g) {
    TensorElement img(TT);
    Element x = Element::generator(p, g);
    if (unit_on_left)
      img.add_pure({one, x}, Scalar(1));
    else
      img.add_pure({x, one}, Scalar(1));
    images[g] = img;
  }
  return Morphism::generator_images(T, TT, std::move(images));
}

std::vector<TensorElement> random_source_elements(const SignaturePtr& source, int count,
                                                  unsigned seed) {
  std::vector<TensorElement> out;
  if (source->size() != 1) return out;
  const PresentationPtr& p = source->leg(0).pres;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len_dist(0, 2);
  std::uniform_int_distribution<int> gen_dist(0, p->arity() - 1);
  std::uniform_int_distribution<int> coeff_dist(0, 4);
  std::uniform_int_distribution<int> terms_dist(1, 2);
  const Scalar pool[5] = {Scalar(1), Scalar(-1), Scalar::q_power(1), Scalar::q_power(-1),
                          Scalar(2)};
  for (int i = 0; i < count; ++i) {
    TensorElement e(source);
    int terms = terms_dist(rng);
    for (int t = 0; t < terms; ++t) {
      Word w;
      int len = len_dist(rng);
      for (int k = 0; k < len; ++k) w.push_back(gen_dist(rng));
      e.add_raw({w}, pool[coeff_dist(rng)]);
    }
    if (!e.is_zero()) out.push_back(std::move(e));
  }
  return out;
}

CheckResult timed(const std::string& label, const std::string& anchor,
                  const std::function<CheckResult()>& body) {
  Clock::time_point start = Clock::now();
  CheckResult r;
  try {
    r = body();
  } catch (const InconclusiveError& e) {
    r.status = CheckStatus::inconclusive;
    r.witness = Witness{"inconclusive", e.what(), -1};
  }
  r.label = label;
  r.anchor = anchor;
  r.millis = ms_since(start);
  return r;
}

CheckResult compare_routes(const std::string& label, const std::string& anchor,
                           const Morphism& lhs, const Morphism& rhs,
                           const VerifyOptions& opts, unsigned salt) {
  return timed(label, anchor, [&]() {
    CheckResult r;
    MorphismComparison cmp = equal_morphisms(lhs, rhs);
    if (!cmp.equal) {
      r.status = CheckStatus::fail;
      r.witness = cmp.witness;
      return r;
    }
    if (cmp.bound_limited) {
      r.status = CheckStatus::inconclusive;
      return r;
    }
    if (opts.random_samples > 0) {
      auto samples =
          random_source_elements(lhs.source(), opts.random_samples, opts.seed ^ salt);
      MorphismComparison sc = equal_on_samples(lhs, rhs, samples);
      if (!sc.equal) {
        r.status = CheckStatus::fail;
        Witness w = *sc.witness;
        w.label = "engine-inconsistency: routes agree on generators but not on " + w.label;
        r.witness = w;
        return r;
      }
      if (sc.bound_limited) {
        r.status = CheckStatus::inconclusive;
        return r;
      }
    }
    r.status = CheckStatus::pass;
    return r;
  });
}

CheckResult cert_result(const std::string& label, const Morphism& m) {
  return timed(label, "images of every defining relation reduce to zero", [&]() {
    CheckResult r;
    switch (m.certificate()) {
      case Morphism::Certificate::verified:
        r.status = CheckStatus::pass;
        break;
      case Morphism::Certificate::failed:
        r.status = CheckStatus::fail;
        r.witness = m.witness();
        break;
      case Morphism::Certificate::unchecked:
        r.status = CheckStatus::inconclusive;
        break;
    }
    return r;
  });
}

}  // namespace

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

CheckStatus CheckReport::overall() const {
  CheckStatus worst = CheckStatus::pass;
  for (const CheckResult& r : results) {
    if (r.status == CheckStatus::fail) return CheckStatus::fail;
    if (r.status == CheckStatus::inconclusive) worst = CheckStatus::inconclusive;
  }
  return worst;
}

void CheckReport::append(std::vector<CheckResult> more) {
  for (CheckResult& r : more) results.push_back(std::move(r));
}

std::vector<CheckResult> hopf_results(const HopfData& h, const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  const std::string name = h.algebra.pres->display_name();
  out.push_back(cert_result(name + ": coproduct is an algebra morphism", h.coproduct));
  out.push_back(cert_result(name + ": antipode is an algebra morphism to the opposite",
                            h.antipode));
  out.push_back(cert_result(name + ": counit is an algebra morphism", h.counit));

  SignaturePtr AA = h.coproduct.target();
  Morphism d1 = Morphism::leg_lift(h.coproduct, 1, AA);
  Morphism d2 = Morphism::leg_lift(h.coproduct, 2, AA);
  out.push_back(compare_routes(name + ": coassociativity",
                               "(Delta (x) id) o Delta = (id (x) Delta) o Delta",
                               seq({h.coproduct, d1}), seq({h.coproduct, d2}), opts, 11));

  Morphism eps1 = Morphism::leg_lift(h.counit, 1, AA);
  Morphism eps2 = Morphism::leg_lift(h.counit, 2, AA);
  Morphism drop1 = Morphism::drop_unit_leg(eps1.target(), 1);
  Morphism drop2 = Morphism::drop_unit_leg(eps2.target(), 2);
  Morphism ident = Morphism::identity(make_signature({h.algebra}));
  out.push_back(compare_routes(name + ": counit law (left)",
                               "(eps (x) id) o Delta = id", seq({h.coproduct, eps1, drop1}),
                               ident, opts, 12));
  out.push_back(compare_routes(name + ": counit law (right)",
                               "(id (x) eps) o Delta = id", seq({h.coproduct, eps2, drop2}),
                               ident, opts, 13));

  Morphism s1 = Morphism::leg_lift(h.antipode, 1, AA);
  Morphism s2 = Morphism::leg_lift(h.antipode, 2, AA);
  Morphism m1 = Morphism::merge_legs(s1.target(), 1);
  Morphism m2 = Morphism::merge_legs(s2.target(), 1);
  Morphism eta_eps = seq({h.counit, h.unit});
  out.push_back(compare_routes(name + ": antipode law (left)",
                               "m o (S (x) id) o Delta = unit o eps",
                               seq({h.coproduct, s1, m1}), eta_eps, opts, 14));
  out.push_back(compare_routes(name + ": antipode law (right)",
                               "m o (id (x) S) o Delta = unit o eps",
                               seq({h.coproduct, s2, m2}), eta_eps, opts, 15));
  return out;
}

CheckReport check_hopf(const HopfData& h, const VerifyOptions& opts) {
  CheckReport rep;
  rep.suite = "hopf";
  rep.datum = h.algebra.pres->display_name();
  rep.degree_bound = h.algebra.system->degree_bound();
  rep.results = hopf_results(h, opts);
  return rep;
}

std::vector<CheckResult> torsor_results(const AlgebraHandle& T, const TorsorData& t,
                                        const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  const std::string name = T.pres->display_name();
  out.push_back(cert_result(name + ": mu is an algebra morphism into T (x) T^op (x) T", t.mu));
  out.push_back(cert_result(name + ": theta is an algebra endomorphism", t.theta));

  SignaturePtr tri = t.mu.target();
  Morphism m12 = Morphism::merge_legs(tri, 1);
  Morphism m23 = Morphism::merge_legs(tri, 2);
  out.push_back(compare_routes(name + ": torsor unit law (left)",
                               "m_12 o mu = 1 (x) id", seq({t.mu, m12}),
                               unit_tensor_map(T, true), opts, 21));
  out.push_back(compare_routes(name + ": torsor unit law (right)",
                               "m_23 o mu = id (x) 1", seq({t.mu, m23}),
                               unit_tensor_map(T, false), opts, 22));

  Morphism lift1 = Morphism::leg_lift(t.mu, 1, tri);
  Morphism lift3 = Morphism::leg_lift(t.mu, 3, tri);
  out.push_back(compare_routes(name + ": torsor coassociativity",
                               "(mu (x) id (x) id) o mu = (id (x) id (x) mu) o mu",
                               seq({t.mu, lift1}), seq({t.mu, lift3}), opts, 23));

  Morphism theta3 = Morphism::leg_lift(t.theta, 3, lift1.target());
  Morphism muop = seq({t.mu, Morphism::flip(tri, 1, 3)});
  Morphism muop2 = Morphism::leg_lift(muop, 2, tri);
  out.push_back(compare_routes(
      name + ": theta exchange law",
      "x(1) (x) x(2) (x) theta(x(3)) (x) x(4) (x) x(5) = x(1) (x) mu-reversed(x(2)) (x) x(3)",
      seq({t.mu, lift1, theta3}), seq({t.mu, muop2}), opts, 24));
  return out;
}

CheckReport check_torsor(const AlgebraHandle& T, const TorsorData& t,
                         const VerifyOptions& opts) {
  CheckReport rep;
  rep.suite = "torsor";
  rep.datum = T.pres->display_name();
  rep.degree_bound = T.system->degree_bound();
  rep.results = torsor_results(T, t, opts);
  return rep;
}

std::vector<CheckResult> comodule_results(const Morphism& coaction, const HopfData& H,
                                          CoactionSide side, const std::string& label_prefix,
                                          const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  out.push_back(cert_result(label_prefix + " is an algebra morphism", coaction));
  SignaturePtr HT = coaction.target();
  if (side == CoactionSide::left) {
    Morphism dH = Morphism::leg_lift(H.coproduct, 1, HT);
    Morphism again = Morphism::leg_lift(coaction, 2, HT);
    out.push_back(compare_routes(label_prefix + ": coaction coassociativity",
                                 "(Delta (x) id) o alpha = (id (x) alpha) o alpha",
                                 seq({coaction, dH}), seq({coaction, again}), opts, 31));
    Morphism eps = Morphism::leg_lift(H.counit, 1, HT);
    Morphism drop = Morphism::drop_unit_leg(eps.target(), 1);
    out.push_back(compare_routes(label_prefix + ": coaction counit law",
                                 "(eps (x) id) o alpha = id",
                                 seq({coaction, eps, drop}),
                                 Morphism::identity(coaction.source()), opts, 32));
  } else {
    Morphism dH = Morphism::leg_lift(H.coproduct, 2, HT);
    Morphism again = Morphism::leg_lift(coaction, 1, HT);
    out.push_back(compare_routes(label_prefix + ": coaction coassociativity",
                                 "(id (x) Delta) o beta = (beta (x) id) o beta",
                                 seq({coaction, dH}), seq({coaction, again}), opts, 33));
    Morphism eps = Morphism::leg_lift(H.counit, 2, HT);
    Morphism drop = Morphism::drop_unit_leg(eps.target(), 2);
    out.push_back(compare_routes(label_prefix + ": coaction counit law",
                                 "(id (x) eps) o beta = id",
                                 seq({coaction, eps, drop}),
                                 Morphism::identity(coaction.source()), opts, 34));
  }
  return out;
}

std::vector<CheckResult> bicomodule_results(const GaloisBundle& b, const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  auto left = comodule_results(b.alpha_T, b.hopfA, CoactionSide::left, "left coaction alpha_T",
                               opts);
  auto right = comodule_results(b.beta_T, b.hopfB, CoactionSide::right,
                                "right coaction beta_T", opts);
  out.insert(out.end(), left.begin(), left.end());
  out.insert(out.end(), right.begin(), right.end());

  Morphism lhs = seq({b.beta_T, Morphism::leg_lift(b.alpha_T, 1, b.beta_T.target())});
  Morphism rhs = seq({b.alpha_T, Morphism::leg_lift(b.beta_T, 2, b.alpha_T.target())});
  out.push_back(compare_routes("bicomodule compatibility",
                               "(alpha (x) id) o beta = (id (x) beta) o alpha", lhs, rhs,
                               opts, 35));
  return out;
}

CheckReport check_comodule(const GaloisBundle& b, const VerifyOptions& opts) {
  CheckReport rep;
  rep.suite = "comodule";
  rep.datum = b.name;
  rep.degree_bound = b.T.system->degree_bound();
  rep.results = bicomodule_results(b, opts);
  return rep;
}

namespace {

// One orientation of a Hopf-Galois system; the mirror swaps the roles.
struct SystemView {
  std::string tag;
  const HopfData* hopfA;
  const HopfData* hopfB;
  AlgebraHandle T;
  Morphism alpha_T;  // T -> A (x) T
  Morphism beta_T;   // T -> T (x) B
  Morphism gamma;    // A -> T (x) Z
  Morphism delta;    // B -> Z (x) T
  Morphism S_Z;      // Z -> T^op
};

std::vector<CheckResult> system_results(const SystemView& v, const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  const std::string& p = v.tag;
  out.push_back(cert_result(p + "alpha_T is an algebra morphism", v.alpha_T));
  out.push_back(cert_result(p + "beta_T is an algebra morphism", v.beta_T));
  out.push_back(cert_result(p + "gamma is an algebra morphism", v.gamma));
  out.push_back(cert_result(p + "delta is an algebra morphism", v.delta));
  out.push_back(cert_result(p + "S_Z is an algebra morphism to T^op", v.S_Z));

  // (gamma (x) T) o alpha_T = (T (x) delta) o beta_T
  Morphism lhs1 = seq({v.alpha_T, Morphism::leg_lift(v.gamma, 1, v.alpha_T.target())});
  Morphism rhs1 = seq({v.beta_T, Morphism::leg_lift(v.delta, 2, v.beta_T.target())});
  out.push_back(compare_routes(p + "coaction square on T",
                               "(gamma (x) id) o alpha_T = (id (x) delta) o beta_T", lhs1,
                               rhs1, opts, 41));

  // (A (x) gamma) o Delta_A = (alpha_T (x) Z) o gamma
  Morphism lhs2 = seq({v.hopfA->coproduct,
                       Morphism::leg_lift(v.gamma, 2, v.hopfA->coproduct.target())});
  Morphism rhs2 = seq({v.gamma, Morphism::leg_lift(v.alpha_T, 1, v.gamma.target())});
  out.push_back(compare_routes(p + "coproduct square on A",
                               "(id (x) gamma) o Delta_A = (alpha_T (x) id) o gamma", lhs2,
                               rhs2, opts, 42));

  // (delta (x) B) o Delta_B = (Z (x) beta_T) o delta
  Morphism lhs3 = seq({v.hopfB->coproduct,
                       Morphism::leg_lift(v.delta, 1, v.hopfB->coproduct.target())});
  Morphism rhs3 = seq({v.delta, Morphism::leg_lift(v.beta_T, 2, v.delta.target())});
  out.push_back(compare_routes(p + "coproduct square on B",
                               "(delta (x) id) o Delta_B = (id (x) beta_T) o delta", lhs3,
                               rhs3, opts, 43));

  // m_T o (T (x) S_Z) o gamma = unit o eps_A, product taken in T's orientation
  Morphism eta = unit_map(v.T);
  Morphism sz2 = Morphism::leg_lift(v.S_Z, 2, v.gamma.target());
  Morphism mt1 = Morphism::merge_legs(sz2.target(), 1, v.T.orientation);
  out.push_back(compare_routes(p + "antipode triangle on gamma",
                               "m_T o (id (x) S_Z) o gamma = unit o eps_A",
                               seq({v.gamma, sz2, mt1}), seq({v.hopfA->counit, eta}), opts,
                               44));

  // m_T o (S_Z (x) T) o delta = unit o eps_B
  Morphism sz1 = Morphism::leg_lift(v.S_Z, 1, v.delta.target());
  Morphism mt2 = Morphism::merge_legs(sz1.target(), 1, v.T.orientation);
  out.push_back(compare_routes(p + "antipode triangle on delta",
                               "m_T o (S_Z (x) id) o delta = unit o eps_B",
                               seq({v.delta, sz1, mt2}), seq({v.hopfB->counit, eta}), opts,
                               45));
  return out;
}

SystemView primary_view(const GaloisBundle& b) {
  return SystemView{"", &b.hopfA, &b.hopfB, b.T, b.alpha_T, b.beta_T, b.gamma, b.delta, b.S_Z};
}

SystemView mirrored_view(const GaloisBundle& b) {
  // (B, A, Z, T) with alpha_{T'} = beta_Z, beta_{T'} = alpha_Z, gamma' = delta,
  // delta' = gamma and S_{Z'} = S_T.
  return SystemView{"mirror: ", &b.hopfB, &b.hopfA, b.Z,
                    b.beta_Z,   b.alpha_Z, b.delta,  b.gamma, b.S_T};
}

}  // namespace

std::vector<CheckResult> galois_results(const GaloisBundle& b, bool mirrored,
                                        const VerifyOptions& opts) {
  return system_results(mirrored ? mirrored_view(b) : primary_view(b), opts);
}

CheckReport check_galois_system(const GaloisBundle& b, const VerifyOptions& opts) {
  CheckReport rep;
  rep.suite = "galois";
  rep.datum = b.name;
  rep.degree_bound = b.T.system->degree_bound();
  rep.results = galois_results(b, false, opts);
  return rep;
}

std::vector<CheckResult> complete_results(const GaloisBundle& b, const VerifyOptions& opts) {
  std::vector<CheckResult> out = galois_results(b, true, opts);

  const Morphism& S_A = b.hopfA.antipode;
  const Morphism& S_B = b.hopfB.antipode;

  // 1. (beta_T (x) Z) o gamma = (T (x) beta_Z) o gamma
  out.push_back(compare_routes(
      "compatibility: coactions through gamma",
      "(beta_T (x) id) o gamma = (id (x) beta_Z) o gamma",
      seq({b.gamma, Morphism::leg_lift(b.beta_T, 1, b.gamma.target())}),
      seq({b.gamma, Morphism::leg_lift(b.beta_Z, 2, b.gamma.target())}), opts, 51));

  // 2. (alpha_Z (x) T) o delta = (Z (x) alpha_T) o delta
  out.push_back(compare_routes(
      "compatibility: coactions through delta",
      "(alpha_Z (x) id) o delta = (id (x) alpha_T) o delta",
      seq({b.delta, Morphism::leg_lift(b.alpha_Z, 1, b.delta.target())}),
      seq({b.delta, Morphism::leg_lift(b.alpha_T, 2, b.delta.target())}), opts, 52));

  auto twist = [&](const Morphism& base, const Morphism& first, const Morphism& second) {
    Morphism l1 = Morphism::leg_lift(first, 1, base.target());
    Morphism l2 = Morphism::leg_lift(second, 2, l1.target());
    Morphism fl = Morphism::flip(l2.target(), 1, 2);
    return seq({base, l1, l2, fl});
  };

  // 3. tau o (S_T (x) S_Z) o gamma = gamma o S_A
  out.push_back(compare_routes("compatibility: antipodes through gamma",
                               "tau o (S_T (x) S_Z) o gamma = gamma o S_A",
                               twist(b.gamma, b.S_T, b.S_Z), seq({S_A, b.gamma}), opts, 53));
  // 4. tau o (S_Z (x) S_T) o delta = delta o S_B
  out.push_back(compare_routes("compatibility: antipodes through delta",
                               "tau o (S_Z (x) S_T) o delta = delta o S_B",
                               twist(b.delta, b.S_Z, b.S_T), seq({S_B, b.delta}), opts, 54));
  // 5. tau o (S_A (x) S_T) o alpha_T = alpha_Z o S_T
  out.push_back(compare_routes("compatibility: antipodes through alpha_T",
                               "tau o (S_A (x) S_T) o alpha_T = alpha_Z o S_T",
                               twist(b.alpha_T, S_A, b.S_T), seq({b.S_T, b.alpha_Z}), opts,
                               55));
  // 6. tau o (S_T (x) S_B) o beta_T = beta_Z o S_T
  out.push_back(compare_routes("compatibility: antipodes through beta_T",
                               "tau o (S_T (x) S_B) o beta_T = beta_Z o S_T",
                               twist(b.beta_T, b.S_T, S_B), seq({b.S_T, b.beta_Z}), opts,
                               56));
  // 7. beta_T o S_Z = tau o (S_B (x) S_Z) o beta_Z
  out.push_back(compare_routes("compatibility: antipodes through beta_Z",
                               "beta_T o S_Z = tau o (S_B (x) S_Z) o beta_Z",
                               seq({b.S_Z, b.beta_T}), twist(b.beta_Z, S_B, b.S_Z), opts,
                               57));
  // 8. alpha_T o S_Z = tau o (S_Z (x) S_A) o alpha_Z
  out.push_back(compare_routes("compatibility: antipodes through alpha_Z",
                               "alpha_T o S_Z = tau o (S_Z (x) S_A) o alpha_Z",
                               seq({b.S_Z, b.alpha_T}), twist(b.alpha_Z, b.S_Z, S_A), opts,
                               58));
  return out;
}

CheckReport check_complete_system(const GaloisBundle& b, const VerifyOptions& opts) {
  CheckReport rep;
  rep.suite = "complete";
  rep.datum = b.name;
  rep.degree_bound = b.T.system->degree_bound();
  rep.results = complete_results(b, opts);
  return rep;
}

namespace {

CheckResult element_balance(const std::string& label, const std::string& anchor,
                            const TensorElement& lhs, const TensorElement& rhs) {
  return timed(label, anchor, [&]() {
    CheckResult r;
    TensorElement diff = lhs - rhs;
    if (!diff.is_zero()) {
      if (diff.bound_limited()) {
        r.status = CheckStatus::inconclusive;
        return r;
      }
      r.status = CheckStatus::fail;
      r.witness = Witness{label, diff.str(), diff.degree()};
      return r;
    }
    r.status = diff.bound_limited() ? CheckStatus::inconclusive : CheckStatus::pass;
    return r;
  });
}

}  // namespace

CheckResult check_Hl_membership(const TensorElement& u, const TorsorData& t,
                                const std::string& label) {
  SignaturePtr usig = u.signature();
  Morphism mu1 = Morphism::leg_lift(t.mu, 1, usig);
  Morphism th3 = Morphism::leg_lift(t.theta, 3, mu1.target());
  TensorElement lhs = th3.apply(mu1.apply(u));
  Morphism mu2 = Morphism::leg_lift(t.mu, 2, usig);
  Morphism perm = Morphism::permute_legs(mu2.target(), {0, 3, 2, 1});
  TensorElement rhs = perm.apply(mu2.apply(u));
  return element_balance(
      label, "x(1) (x) x(2) (x) theta(x(3)) (x) y = x (x) y(3) (x) y(2) (x) y(1)", lhs, rhs);
}

CheckResult check_Hr_membership(const TensorElement& u, const TorsorData& t,
                                const std::string& label) {
  SignaturePtr usig = u.signature();
  Morphism mu2 = Morphism::leg_lift(t.mu, 2, usig);
  Morphism th2 = Morphism::leg_lift(t.theta, 2, mu2.target());
  TensorElement lhs = th2.apply(mu2.apply(u));
  Morphism mu1 = Morphism::leg_lift(t.mu, 1, usig);
  Morphism perm = Morphism::permute_legs(mu1.target(), {2, 1, 0, 3});
  TensorElement rhs = perm.apply(mu1.apply(u));
  return element_balance(
      label, "x (x) theta(y(1)) (x) y(2) (x) y(3) = x(3) (x) x(2) (x) x(1) (x) y", lhs, rhs);
}

TensorElement compute_S_T(const Element& x, const AlgebraHandle& T, const TorsorData& t) {
  SignaturePtr Tsig = make_signature({T});
  TensorElement in = TensorElement::pure(Tsig, {x});
  Morphism rev = Morphism::flip(t.mu.target(), 1, 3);
  Morphism th1 = Morphism::leg_lift(t.theta, 1, rev.target());
  Morphism th3 = Morphism::leg_lift(t.theta, 3, th1.target());
  TensorElement raw = th3.apply(th1.apply(rev.apply(t.mu.apply(in))));
  SignaturePtr zsig = make_signature({T.opposite(), T, T.opposite()});
  TensorElement out(zsig);
  for (const auto& [words, c] : raw.terms()) out.add_raw(words, c);
  if (raw.bound_limited()) out.mark_bound_limited();
  return out;
}

CheckResult check_Z_membership(const TensorElement& z, const TorsorData& t,
                               const std::string& label) {
  SignaturePtr zsig = z.signature();
  // first balance: x (x) y (x) mu(w) = x (x) y(1) (x) w (x) theta(y(3)) (x) y(2)
  Morphism mu3 = Morphism::leg_lift(t.mu, 3, zsig);
  TensorElement lhs1 = mu3.apply(z);
  Morphism mu2 = Morphism::leg_lift(t.mu, 2, zsig);
  Morphism perm1 = Morphism::permute_legs(mu2.target(), {0, 1, 4, 3, 2});
  Morphism th4 = Morphism::leg_lift(t.theta, 4, perm1.target());
  TensorElement rhs1 = th4.apply(perm1.apply(mu2.apply(z)));
  CheckResult first = element_balance(
      label + " (first balance)",
      "x (x) y (x) w(1) (x) w(2) (x) w(3) = x (x) y(1) (x) w (x) theta(y(3)) (x) y(2)", lhs1,
      rhs1);
  if (first.status != CheckStatus::pass) return first;

  // second balance: x(3) (x) x(2) (x) x(1) (x) y (x) w = x (x) theta(y(1)) (x) y(2) (x) y(3) (x) w
  Morphism mu1 = Morphism::leg_lift(t.mu, 1, zsig);
  Morphism perm2 = Morphism::permute_legs(mu1.target(), {2, 1, 0, 3, 4});
  TensorElement lhs2 = perm2.apply(mu1.apply(z));
  Morphism th2 = Morphism::leg_lift(t.theta, 2, mu2.target());
  TensorElement rhs2 = th2.apply(mu2.apply(z));
  CheckResult second = element_balance(
      label + " (second balance)",
      "x(3) (x) x(2) (x) x(1) (x) y (x) w = x (x) theta(y(1)) (x) y(2) (x) y(3) (x) w", lhs2,
      rhs2);
  second.label = label;
  return second;
}

CheckResult check_counit_agreement(const TensorElement& z, const std::string& label) {
  SignaturePtr zsig = z.signature();
  Morphism a1 = Morphism::merge_legs(zsig, 1);
  Morphism a2 = Morphism::merge_legs(a1.target(), 1);
  TensorElement left = a2.apply(a1.apply(z));
  Morphism b1 = Morphism::merge_legs(zsig, 2);
  Morphism b2 = Morphism::merge_legs(b1.target(), 1);
  TensorElement right = b2.apply(b1.apply(z));
  return element_balance(label, "(eps_B (x) id)(z) = (id (x) eps_A)(z) as elements of T",
                         left, right);
}

CheckResult verify_basis(const AlgebraHandle& B, int degree, const OracleBudget& budget) {
  return timed(B.pres->display_name() + ": basis shape and dimensions up to degree " +
                   std::to_string(degree),
               "irreducible-word count equals the relation-shift rank oracle; words factor "
               "as toral block * f-block * e-block",
               [&]() {
                 CheckResult r;
                 for (int d = 0; d <= degree; ++d) {
                   long graded = B.system->graded_dimension(d);
                   long oracle = bruteforce_dimension(*B.pres, d, budget);
                   if (graded != oracle) {
                     r.status = CheckStatus::fail;
                     r.witness = Witness{"degree " + std::to_string(d),
                                         "irreducible words: " + std::to_string(graded) +
                                             ", oracle: " + std::to_string(oracle),
                                         d};
                     return r;
                   }
                 }
                 auto type_of = [&](int g) {
                   char c = B.pres->gen_name(g)[0];
                   return c == 't' ? 0 : (c == 'f' ? 1 : 2);
                 };
                 for (const Word& w : B.system->irreducible_words(degree)) {
                   for (size_t i = 1; i < w.size(); ++i) {
                     if (type_of(w[i - 1]) > type_of(w[i])) {
                       r.status = CheckStatus::fail;
                       r.witness = Witness{"irreducible word out of block order",
                                           B.pres->word_str(w), B.pres->word_degree(w)};
                       return r;
                     }
                   }
                 }
                 r.status = CheckStatus::pass;
                 return r;
               });
}

std::vector<CheckResult> membership_results(const GaloisBundle& b) {
  std::vector<CheckResult> out;
  if (!b.torsor) throw EngineError("membership suite needs torsor data");
  const TorsorData& t = *b.torsor;
  const PresentationPtr& pB = b.T.pres;
  SignaturePtr TTop = make_signature({b.T, b.Z});
  SignaturePtr TopT = make_signature({b.Z, b.T});

  // unit elements
  out.push_back(check_Hl_membership(TensorElement::unit(TTop),
                                    t, "left membership of 1 (x) 1"));
  out.push_back(check_Hr_membership(TensorElement::unit(TopT),
                                    t, "right membership of 1 (x) 1"));

  // gamma images satisfy the left balance, delta images the right one
  for (int g = 0; g < b.A.pres->arity(); ++g) {
    TensorElement img = b.gamma.apply_generator(g);
    TensorElement u(TTop);
    for (const auto& [words, c] : img.terms()) u.add_raw(words, c);
    out.push_back(check_Hl_membership(
        u, t, "left membership of gamma(" + b.A.pres->gen_name(g) + ")"));
  }
  for (int g = 0; g < b.B.pres->arity(); ++g) {
    TensorElement img = b.delta.apply_generator(g);
    TensorElement u(TopT);
    for (const auto& [words, c] : img.terms()) u.add_raw(words, c);
    out.push_back(check_Hr_membership(
        u, t, "right membership of delta(" + b.B.pres->gen_name(g) + ")"));
  }

  // generalized antipode images land in Z and contract consistently
  for (int g = 0; g < pB->arity(); ++g) {
    Element x = Element::generator(pB, g);
    TensorElement st = compute_S_T(x, b.T, t);
    std::string gn = pB->gen_name(g);
    out.push_back(check_Z_membership(st, t, "S_T(" + gn + ") is coinvariant"));
    out.push_back(check_counit_agreement(st, "counit contractions agree on S_T(" + gn + ")"));
  }

  // stated negative examples must fail
  auto expect_fail = [&](CheckResult r, const std::string& label) {
    CheckResult flipped;
    flipped.label = label;
    flipped.anchor = "negative example: " + r.anchor;
    flipped.millis = r.millis;
    if (r.status == CheckStatus::fail) {
      flipped.status = CheckStatus::pass;
      flipped.witness = r.witness;
    } else {
      flipped.status = CheckStatus::fail;
      flipped.witness = Witness{"expected a failure witness", "balance unexpectedly holds", -1};
    }
    return flipped;
  };

  int ep = pB->gen_id("ep1") >= 0 ? pB->gen_id("ep1") : 0;
  TensorElement bad1(TTop);
  bad1.add_raw({Word{ep}, Word{}}, Scalar(1));
  out.push_back(expect_fail(check_Hl_membership(bad1, t, ""),
                            "negative: ep1 (x) 1 is not left-coinvariant"));
  TensorElement bad2(TopT);
  bad2.add_raw({Word{}, Word{ep}}, Scalar(1));
  out.push_back(expect_fail(check_Hr_membership(bad2, t, ""),
                            "negative: 1 (x) ep1 is not right-coinvariant"));
  SignaturePtr zsig = make_signature({b.Z, b.T, b.Z});
  TensorElement bad3(zsig);
  bad3.add_raw({Word{ep}, Word{}, Word{}}, Scalar(1));
  out.push_back(expect_fail(check_Z_membership(bad3, t, ""),
                            "negative: ep1 (x) 1 (x) 1 fails a coinvariance balance"));
  return out;
}

std::vector<CheckResult> embedding_results(const HopfData& uhat, const HopfData& uq,
                                           const Morphism& embed, const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  out.push_back(cert_result("embedding is an algebra morphism", embed));
  Morphism e1 = Morphism::leg_lift(embed, 1, uhat.coproduct.target());
  Morphism e2 = Morphism::leg_lift(embed, 2, e1.target());
  out.push_back(compare_routes("embedding is a coalgebra morphism",
                               "Delta o embed = (embed (x) embed) o Delta",
                               seq({embed, uq.coproduct}), seq({uhat.coproduct, e1, e2}),
                               opts, 61));
  out.push_back(compare_routes("embedding respects counits", "eps o embed = eps",
                               seq({embed, uq.counit}), uhat.counit, opts, 62));
  return out;
}

namespace {

struct MutationSite {
  std::string map_name;
  int generator;
  int term;
  bool scale_by_q;  // otherwise flip the sign
};

Morphism mutate_morphism(const Morphism& m, const AlgebraHandle& source, int generator,
                         int term, bool scale_by_q) {
  std::vector<TensorElement> images = m.images();
  const TensorElement& old_img = images[generator];
  TensorElement img(old_img.signature());
  int idx = 0;
  for (const auto& [words, c] : old_img.terms()) {
    Scalar coeff = c;
    if (idx == term) coeff = scale_by_q ? coeff * Scalar::q_power(1) : -coeff;
    img.add_raw(words, coeff);
    ++idx;
  }
  images[generator] = img;
  return Morphism::generator_images(source, m.target(), std::move(images)).named(m.name());
}

}  // namespace

void override_bundle_map(GaloisBundle& b, const std::string& map_name,
                         const std::map<std::string, std::string>& images) {
  auto rebuild = [&](Morphism& m, const AlgebraHandle& source) {
    std::vector<TensorElement> imgs = m.images();
    if (imgs.empty()) throw ValidationError("map " + map_name + " cannot be overridden");
    for (const auto& [gen_name, expr] : images) {
      int id = source.pres->gen_id(gen_name);
      if (id < 0)
        throw ValidationError("override names unknown generator " + gen_name + " of " +
                              source.pres->display_name());
      imgs[id] = parse_tensor(expr, m.target());
    }
    m = Morphism::generator_images(source, m.target(), std::move(imgs)).named(m.name());
  };
  if (map_name == "mu" && b.torsor) return rebuild(b.torsor->mu, b.T);
  if (map_name == "theta" && b.torsor) return rebuild(b.torsor->theta, b.T);
  if (map_name == "alpha_T") return rebuild(b.alpha_T, b.T);
  if (map_name == "beta_T") return rebuild(b.beta_T, b.T);
  if (map_name == "beta_Z") return rebuild(b.beta_Z, b.Z);
  if (map_name == "alpha_Z") return rebuild(b.alpha_Z, b.Z);
  if (map_name == "gamma") return rebuild(b.gamma, b.A);
  if (map_name == "delta") return rebuild(b.delta, b.B);
  if (map_name == "S_T") return rebuild(b.S_T, b.T);
  if (map_name == "S_Z") return rebuild(b.S_Z, b.Z);
  throw ValidationError("unknown map name in override: " + map_name);
}

std::vector<MutationOutcome> mutation_fuzz(const GaloisBundle& b, int count, unsigned seed) {
  struct Entry {
    std::string name;
    const Morphism* m;
    const AlgebraHandle* src;
  };
  std::vector<Entry> maps = {{"alpha_T", &b.alpha_T, &b.T}, {"beta_T", &b.beta_T, &b.T},
                             {"beta_Z", &b.beta_Z, &b.Z},   {"alpha_Z", &b.alpha_Z, &b.Z},
                             {"gamma", &b.gamma, &b.A},     {"delta", &b.delta, &b.B},
                             {"S_T", &b.S_T, &b.T},         {"S_Z", &b.S_Z, &b.Z}};
  if (b.torsor) {
    maps.push_back({"mu", &b.torsor->mu, &b.T});
    maps.push_back({"theta", &b.torsor->theta, &b.T});
  }
  std::vector<MutationSite> sites;
  for (const Entry& e : maps) {
    const auto& images = e.m->images();
    for (int g = 0; g < static_cast<int>(images.size()); ++g) {
      int terms = static_cast<int>(images[g].term_count());
      for (int t = 0; t < terms; ++t) {
        sites.push_back({e.name, g, t, false});
        sites.push_back({e.name, g, t, true});
      }
    }
  }
  std::mt19937_64 rng(seed);
  std::vector<MutationOutcome> out;
  VerifyOptions quick;
  quick.random_samples = 0;
  for (int i = 0; i < count; ++i) {
    const MutationSite& site = sites[std::uniform_int_distribution<size_t>(
        0, sites.size() - 1)(rng)];
    GaloisBundle mutated = b;
    const Entry* entry = nullptr;
    for (const Entry& e : maps)
      if (e.name == site.map_name) entry = &e;
    Morphism replacement = mutate_morphism(*entry->m, *entry->src, site.generator, site.term,
                                           site.scale_by_q);
    if (site.map_name == "mu")
      mutated.torsor->mu = replacement;
    else if (site.map_name == "theta")
      mutated.torsor->theta = replacement;
    else if (site.map_name == "alpha_T")
      mutated.alpha_T = replacement;
    else if (site.map_name == "beta_T")
      mutated.beta_T = replacement;
    else if (site.map_name == "beta_Z")
      mutated.beta_Z = replacement;
    else if (site.map_name == "alpha_Z")
      mutated.alpha_Z = replacement;
    else if (site.map_name == "gamma")
      mutated.gamma = replacement;
    else if (site.map_name == "delta")
      mutated.delta = replacement;
    else if (site.map_name == "S_T")
      mutated.S_T = replacement;
    else if (site.map_name == "S_Z")
      mutated.S_Z = replacement;

    MutationOutcome outcome;
    std::ostringstream desc;
    desc << site.map_name << " image of "
         << entry->src->pres->gen_name(site.generator) << ", term " << site.term + 1 << ", "
         << (site.scale_by_q ? "scaled by q" : "sign flipped");
    outcome.site = desc.str();

    std::vector<CheckResult> results = galois_results(mutated, false, quick);
    auto more = complete_results(mutated, quick);
    results.insert(results.end(), more.begin(), more.end());
    if (mutated.torsor) {
      auto tor = torsor_results(mutated.T, *mutated.torsor, quick);
      results.insert(results.end(), tor.begin(), tor.end());
    }
    for (const CheckResult& r : results) {
      if (r.status == CheckStatus::fail) {
        outcome.detected = true;
        outcome.first_failure = r.label;
        break;
      }
    }
    out.push_back(std::move(outcome));
  }
  return out;
}

}  // namespace torsor
