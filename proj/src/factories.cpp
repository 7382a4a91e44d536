#include "torsor/factories.hpp"

#include <sstream>

#include "torsor/parse.hpp"

namespace torsor {

namespace {

Scalar qpow(int k) { return Scalar::q_power(k); }

Scalar qbinom(int m, int k, int d) {
  return q_factorial(m, d) / (q_factorial(k, d) * q_factorial(m - k, d));
}

Element gen_by_name(const PresentationPtr& p, const std::string& name) {
  int id = p->gen_id(name);
  if (id < 0) throw EngineError("missing generator " + name + " in " + p->display_name());
  return Element::generator(p, id);
}

Element word_by_names(const PresentationPtr& p, std::initializer_list<const char*> names,
                      Scalar coeff = Scalar(1)) {
  Word w;
  for (const char* n : names) {
    int id = p->gen_id(n);
    if (id < 0) throw EngineError(std::string("missing generator ") + n);
    w.push_back(id);
  }
  return Element::from_word(p, w, coeff);
}

std::string idx(const std::string& stem, int i) { return stem + std::to_string(i + 1); }

// Family layout shared by the quantum-group style presentations.
enum class QKind { uq, uhat, uprime, kashiwara };

PresentationPtr build_quantum_presentation(QKind kind, const CartanDatum& c,
                                           const std::string& display) {
  c.validate();
  const int n = c.rank();
  std::string e_stem = kind == QKind::uhat ? "eh" : (kind == QKind::uq ? "e" : "ep");
  std::string f_stem = kind == QKind::uprime ? "fp" : "f";

  std::vector<Generator> gens;
  for (int i = 0; i < n; ++i) gens.push_back({idx(e_stem, i), 1});
  for (int i = 0; i < n; ++i) gens.push_back({idx(f_stem, i), 1});
  for (int i = 0; i < n; ++i) {
    gens.push_back({idx("t", i), 1});
    gens.push_back({idx("t", i) + "inv", 1});
  }
  auto pres = std::make_shared<Presentation>(display, std::move(gens));
  PresentationPtr cp = pres;

  auto eid = [&](int i) { return i; };
  auto fid = [&](int i) { return n + i; };
  auto tid = [&](int i) { return 2 * n + 2 * i; };
  auto tinvid = [&](int i) { return 2 * n + 2 * i + 1; };

  auto word = [&](std::initializer_list<int> ids, Scalar coeff = Scalar(1)) {
    return Element::from_word(cp, Word(ids), coeff);
  };

  // toral units
  for (int i = 0; i < n; ++i) {
    pres->add_relation(word({tid(i), tinvid(i)}) - Element::unit(cp));
    pres->add_relation(word({tinvid(i), tid(i)}) - Element::unit(cp));
  }
  // toral commutation between distinct indices
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int a : {tid(i), tinvid(i)}) {
        for (int b : {tid(j), tinvid(j)}) {
          pres->add_relation(word({a, b}) - word({b, a}));
        }
      }
    }
  }
  // toral conjugation of the e- and f-type generators; the exponent is the
  // symmetrized pairing (alpha_i, alpha_j)
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int K = c.pairing(i, j);
      pres->add_relation(word({tid(j), eid(i)}) - word({eid(i), tid(j)}, qpow(K)));
      pres->add_relation(word({tinvid(j), eid(i)}) - word({eid(i), tinvid(j)}, qpow(-K)));
      pres->add_relation(word({tid(j), fid(i)}) - word({fid(i), tid(j)}, qpow(-K)));
      pres->add_relation(word({tinvid(j), fid(i)}) - word({fid(i), tinvid(j)}, qpow(K)));
    }
  }
  // cross relations between the two families
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Element rel = Element(cp);
      switch (kind) {
        case QKind::uq: {
          rel = word({eid(i), fid(j)}) - word({fid(j), eid(i)});
          if (i == j) {
            Scalar coeff = (qpow(c.d[i]) - qpow(-c.d[i])).inverse();
            rel -= word({tid(i)}, coeff) - word({tinvid(i)}, coeff);
          }
          break;
        }
        case QKind::uhat: {
          rel = word({eid(i), fid(j)}) - word({fid(j), eid(i)});
          if (i == j) rel -= word({tid(i)}) - word({tinvid(i)});
          break;
        }
        case QKind::uprime: {
          rel = word({eid(i), fid(j)}) - word({fid(j), eid(i)}, qpow(-c.pairing(i, j)));
          break;
        }
        case QKind::kashiwara: {
          rel = word({eid(i), fid(j)}) - word({fid(j), eid(i)}, qpow(c.pairing(i, j)));
          if (i == j) rel -= Element::unit(cp);
          break;
        }
      }
      pres->add_relation(std::move(rel));
    }
  }
  // Serre relations for both families, cleared of the [m]_i! denominators
  for (int block = 0; block < 2; ++block) {
    auto base = [&](int i) { return block == 0 ? eid(i) : fid(i); };
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        int m = 1 - c.a[i][j];
        Element rel(cp);
        for (int k = 0; k <= m; ++k) {
          Word w;
          for (int s = 0; s < k; ++s) w.push_back(base(i));
          w.push_back(base(j));
          for (int s = 0; s < m - k; ++s) w.push_back(base(i));
          Scalar coeff = qbinom(m, k, c.d[i]);
          if (k % 2 == 1) coeff = -coeff;
          rel += Element::from_word(cp, w, coeff);
        }
        pres->add_relation(std::move(rel));
      }
    }
  }
  return cp;
}

SignaturePtr sig1(const AlgebraHandle& a) { return make_signature({a}); }
SignaturePtr sig2(const AlgebraHandle& a, const AlgebraHandle& b) {
  return make_signature({a, b});
}

TensorElement zero_of(const SignaturePtr& s) { return TensorElement::zero(s); }

}  // namespace

AlgebraHandle complete_handle(PresentationPtr pres, const BuildOptions& opts) {
  std::shared_ptr<const CompletedSystem> sys;
  if (opts.cache) sys = opts.cache->load(pres, opts.degree_bound);
  if (!sys) {
    sys = std::make_shared<CompletedSystem>(complete(pres, opts.degree_bound, opts.budget));
    if (opts.cache) opts.cache->store(*sys);
  }
  return AlgebraHandle{pres, sys, Orientation::straight, pres->display_name()};
}

AlgebraHandle trivial_algebra() {
  static AlgebraHandle handle = [] {
    auto pres = std::make_shared<Presentation>("k", std::vector<Generator>{{"one", 1}});
    PresentationPtr cp = pres;
    pres->add_relation(Element::generator(cp, 0) - Element::unit(cp));
    BuildOptions opts;
    opts.degree_bound = 3;
    return complete_handle(cp, opts);
  }();
  return handle;
}

namespace {

// Hopf structure shared by the three quantum groups.  The antipode on the
// f-type generator depends on the coproduct (group-like leg t_i or 1).
HopfData attach_quantum_hopf(AlgebraHandle A, const CartanDatum& c, QKind kind) {
  const int n = c.rank();
  const PresentationPtr& p = A.pres;
  SignaturePtr AA = sig2(A, A);
  SignaturePtr Aop = sig1(A.opposite());
  SignaturePtr Asig = sig1(A);
  AlgebraHandle triv = trivial_algebra();
  SignaturePtr K = sig1(triv);

  std::string e_stem = kind == QKind::uhat ? "eh" : (kind == QKind::uq ? "e" : "ep");
  std::string f_stem = kind == QKind::uprime ? "fp" : "f";

  std::vector<TensorElement> delta(p->arity(), TensorElement());
  std::vector<TensorElement> antipode(p->arity(), TensorElement());
  std::vector<TensorElement> counit(p->arity(), TensorElement());
  auto unit1 = Element::unit(p);

  for (int i = 0; i < n; ++i) {
    std::string en = idx(e_stem, i), fn = idx(f_stem, i);
    std::string tn = idx("t", i), tni = tn + "inv";
    Element e = gen_by_name(p, en), f = gen_by_name(p, fn);
    Element t = gen_by_name(p, tn), tinv = gen_by_name(p, tni);

    // Delta(e_i) = e_i (x) 1 + t_i (x) e_i
    TensorElement de(AA);
    de.add_pure({e, unit1}, Scalar(1));
    de.add_pure({t, e}, Scalar(1));
    delta[p->gen_id(en)] = de;

    // f-type coproduct: f (x) t^-1 + 1 (x) f for uq/uhat, primitive-like
    // f (x) 1 + t (x) f for uprime
    TensorElement df(AA);
    if (kind == QKind::uprime) {
      df.add_pure({f, unit1}, Scalar(1));
      df.add_pure({t, f}, Scalar(1));
    } else {
      df.add_pure({f, tinv}, Scalar(1));
      df.add_pure({unit1, f}, Scalar(1));
    }
    delta[p->gen_id(fn)] = df;

    TensorElement dt(AA);
    dt.add_pure({t, t}, Scalar(1));
    delta[p->gen_id(tn)] = dt;
    TensorElement dti(AA);
    dti.add_pure({tinv, tinv}, Scalar(1));
    delta[p->gen_id(tni)] = dti;

    // antipode: S(e) = -t^-1 e; S(f) = -f t (uq/uhat) or -t^-1 f (uprime);
    // S(t) = t^-1
    TensorElement se(Aop);
    se.add_pure({word_by_names(p, {tni.c_str(), en.c_str()})}, Scalar(-1));
    antipode[p->gen_id(en)] = se;

    TensorElement sf(Aop);
    if (kind == QKind::uprime) {
      sf.add_pure({word_by_names(p, {tni.c_str(), fn.c_str()})}, Scalar(-1));
    } else {
      sf.add_pure({word_by_names(p, {fn.c_str(), tn.c_str()})}, Scalar(-1));
    }
    antipode[p->gen_id(fn)] = sf;

    TensorElement st(Aop);
    st.add_pure({tinv}, Scalar(1));
    antipode[p->gen_id(tn)] = st;
    TensorElement sti(Aop);
    sti.add_pure({t}, Scalar(1));
    antipode[p->gen_id(tni)] = sti;

    // counit: 0 on e,f; 1 on torals
    counit[p->gen_id(en)] = zero_of(K);
    counit[p->gen_id(fn)] = zero_of(K);
    counit[p->gen_id(tn)] = TensorElement::unit(K);
    counit[p->gen_id(tni)] = TensorElement::unit(K);
  }

  HopfData h;
  h.algebra = A;
  h.coproduct = Morphism::generator_images(A, AA, std::move(delta)).named("Delta");
  h.antipode = Morphism::generator_images(A, Aop, std::move(antipode)).named("S");
  h.counit = Morphism::generator_images(A, K, std::move(counit)).named("eps");
  h.unit = Morphism::generator_images(triv, Asig, {TensorElement::unit(Asig)}).named("unit");
  return h;
}

}  // namespace

HopfData build_uq(const CartanDatum& c, const BuildOptions& opts) {
  auto pres = build_quantum_presentation(QKind::uq, c, "Uq[" + c.describe() + "]");
  return attach_quantum_hopf(complete_handle(pres, opts), c, QKind::uq);
}

HopfData build_uhat(const CartanDatum& c, const BuildOptions& opts) {
  auto pres = build_quantum_presentation(QKind::uhat, c, "Uhat[" + c.describe() + "]");
  return attach_quantum_hopf(complete_handle(pres, opts), c, QKind::uhat);
}

HopfData build_uprime(const CartanDatum& c, const BuildOptions& opts) {
  auto pres = build_quantum_presentation(QKind::uprime, c, "Uprime[" + c.describe() + "]");
  return attach_quantum_hopf(complete_handle(pres, opts), c, QKind::uprime);
}

AlgebraHandle build_kashiwara(const CartanDatum& c, const BuildOptions& opts) {
  auto pres = build_quantum_presentation(QKind::kashiwara, c, "Bq[" + c.describe() + "]");
  return complete_handle(pres, opts);
}

TorsorData kashiwara_torsor(const AlgebraHandle& B, const CartanDatum& c) {
  const int n = c.rank();
  const PresentationPtr& p = B.pres;
  SignaturePtr tri = make_signature({B, B.opposite(), B});
  SignaturePtr Bsig = sig1(B);
  std::vector<TensorElement> mu(p->arity(), TensorElement());
  std::vector<TensorElement> theta(p->arity(), TensorElement());
  Element unit1 = Element::unit(p);

  for (int i = 0; i < n; ++i) {
    std::string tn = idx("t", i), tni = tn + "inv";
    Element t = gen_by_name(p, tn), tinv = gen_by_name(p, tni);
    for (const std::string& xn : {idx("ep", i), idx("f", i)}) {
      Element x = gen_by_name(p, xn);
      // mu(x) = 1 (x) 1 (x) x - 1 (x) x t (x) t^-1 + x (x) t (x) t^-1
      TensorElement m(tri);
      m.add_pure({unit1, unit1, x}, Scalar(1));
      m.add_pure({unit1,x * t, tinv}, Scalar(-1));
      m.add_pure({x, t, tinv}, Scalar(1));
      mu[p->gen_id(xn)] = m;
      // theta(x) = t^-1 x t
      TensorElement th(Bsig);
      th.add_pure({tinv * x * t}, Scalar(1));
      theta[p->gen_id(xn)] = th;
    }
    TensorElement mt(tri);
    mt.add_pure({t, tinv, t}, Scalar(1));
    mu[p->gen_id(tn)] = mt;
    TensorElement mti(tri);
    mti.add_pure({tinv, t, tinv}, Scalar(1));
    mu[p->gen_id(tni)] = mti;

    TensorElement tht(Bsig);
    tht.add_pure({t}, Scalar(1));
    theta[p->gen_id(tn)] = tht;
    TensorElement thti(Bsig);
    thti.add_pure({tinv}, Scalar(1));
    theta[p->gen_id(tni)] = thti;
  }

  TorsorData out;
  out.mu = Morphism::generator_images(B, tri, std::move(mu)).named("mu");
  out.theta = Morphism::generator_images(B, Bsig, std::move(theta)).named("theta");
  return out;
}

GaloisBundle kashiwara_bundle(const CartanDatum& c, const BuildOptions& opts) {
  const int n = c.rank();
  GaloisBundle b;
  b.name = "kashiwara[" + c.describe() + "]";
  HopfData uprime = build_uprime(c, opts);
  HopfData uhat = build_uhat(c, opts);
  b.T = build_kashiwara(c, opts);
  b.Z = b.T.opposite();
  b.A = uprime.algebra;
  b.B = uhat.algebra;
  b.hopfA = uprime;
  b.hopfB = uhat;
  b.torsor = kashiwara_torsor(b.T, c);

  const PresentationPtr& pB = b.T.pres;
  const PresentationPtr& pA = b.A.pres;  // generators ep*, fp*, t*
  const PresentationPtr& pH = b.B.pres;  // generators eh*, f*, t*

  SignaturePtr AT = sig2(b.A, b.T);
  SignaturePtr TB = sig2(b.T, b.B);
  SignaturePtr BZ = sig2(b.B, b.Z);
  SignaturePtr ZA = sig2(b.Z, b.A);
  SignaturePtr TZ = sig2(b.T, b.Z);
  SignaturePtr ZT = sig2(b.Z, b.T);

  const int nb = pB->arity();
  std::vector<TensorElement> alphaT(nb), betaT(nb), betaZ(nb), alphaZ(nb);
  std::vector<TensorElement> gamma(pA->arity()), delta(pH->arity());
  std::vector<TensorElement> sT(nb), sZ(nb);

  Element oneB = Element::unit(pB), oneA = Element::unit(pA), oneH = Element::unit(pH);

  for (int i = 0; i < n; ++i) {
    std::string ep = idx("ep", i), f = idx("f", i), fp = idx("fp", i), eh = idx("eh", i);
    std::string tn = idx("t", i), tni = tn + "inv";
    Element epB = gen_by_name(pB, ep), fB = gen_by_name(pB, f);
    Element tB = gen_by_name(pB, tn), tiB = gen_by_name(pB, tni);

    // alpha_T : B -> U' (x) B
    {
      TensorElement img(AT);
      img.add_pure({oneA, epB}, Scalar(1));
      img.add_pure({word_by_names(pA, {tni.c_str(), ep.c_str()}), tiB}, Scalar(1));
      alphaT[pB->gen_id(ep)] = img;

      TensorElement imf(AT);
      imf.add_pure({oneA, fB}, Scalar(1));
      imf.add_pure({word_by_names(pA, {tni.c_str(), fp.c_str()}), tiB}, Scalar(1));
      alphaT[pB->gen_id(f)] = imf;

      TensorElement imt(AT);
      imt.add_pure({gen_by_name(pA, tn), tB}, Scalar(1));
      alphaT[pB->gen_id(tn)] = imt;
      TensorElement imti(AT);
      imti.add_pure({gen_by_name(pA, tni), tiB}, Scalar(1));
      alphaT[pB->gen_id(tni)] = imti;
    }

    // beta_T : B -> B (x) Uhat
    {
      TensorElement img(TB);
      img.add_pure({oneB, word_by_names(pH, {tni.c_str(), eh.c_str()})}, Scalar(1));
      img.add_pure({epB, gen_by_name(pH, tni)}, Scalar(1));
      betaT[pB->gen_id(ep)] = img;

      TensorElement imf(TB);
      imf.add_pure({fB, gen_by_name(pH, tni)}, Scalar(1));
      imf.add_pure({oneB, gen_by_name(pH, f)}, Scalar(1));
      betaT[pB->gen_id(f)] = imf;

      TensorElement imt(TB);
      imt.add_pure({tB, gen_by_name(pH, tn)}, Scalar(1));
      betaT[pB->gen_id(tn)] = imt;
      TensorElement imti(TB);
      imti.add_pure({tiB, gen_by_name(pH, tni)}, Scalar(1));
      betaT[pB->gen_id(tni)] = imti;
    }

    // beta_Z = alpha_{B^op} : B^op -> Uhat (x) B^op
    {
      TensorElement img(BZ);
      img.add_pure({gen_by_name(pH, tn), epB}, Scalar(1));
      img.add_pure({gen_by_name(pH, eh), oneB}, Scalar(-1));
      betaZ[pB->gen_id(ep)] = img;

      TensorElement imf(BZ);
      imf.add_pure({word_by_names(pH, {tn.c_str(), f.c_str()}), oneB}, Scalar(-1));
      imf.add_pure({gen_by_name(pH, tn), fB}, Scalar(1));
      betaZ[pB->gen_id(f)] = imf;

      TensorElement imt(BZ);
      imt.add_pure({gen_by_name(pH, tni), tB}, Scalar(1));
      betaZ[pB->gen_id(tn)] = imt;
      TensorElement imti(BZ);
      imti.add_pure({gen_by_name(pH, tn), tiB}, Scalar(1));
      betaZ[pB->gen_id(tni)] = imti;
    }

    // alpha_Z = beta_{B^op} : B^op -> B^op (x) U'
    {
      TensorElement img(ZA);
      img.add_pure({tiB, gen_by_name(pA, ep)}, Scalar(-1));
      img.add_pure({epB, oneA}, Scalar(1));
      alphaZ[pB->gen_id(ep)] = img;

      TensorElement imf(ZA);
      imf.add_pure({tiB, gen_by_name(pA, fp)}, Scalar(-1));
      imf.add_pure({fB, oneA}, Scalar(1));
      alphaZ[pB->gen_id(f)] = imf;

      TensorElement imt(ZA);
      imt.add_pure({tB, gen_by_name(pA, tni)}, Scalar(1));
      alphaZ[pB->gen_id(tn)] = imt;
      TensorElement imti(ZA);
      imti.add_pure({tiB, gen_by_name(pA, tn)}, Scalar(1));
      alphaZ[pB->gen_id(tni)] = imti;
    }

    // gamma : U' -> B (x) B^op
    {
      TensorElement img(TZ);
      img.add_pure({tB * epB, oneB}, Scalar(1));
      img.add_pure({tB, epB}, Scalar(-1));
      gamma[pA->gen_id(ep)] = img;

      TensorElement imf(TZ);
      imf.add_pure({tB * fB, oneB}, Scalar(1));
      imf.add_pure({tB, fB}, Scalar(-1));
      gamma[pA->gen_id(fp)] = imf;

      TensorElement imt(TZ);
      imt.add_pure({tB, tiB}, Scalar(1));
      gamma[pA->gen_id(tn)] = imt;
      TensorElement imti(TZ);
      imti.add_pure({tiB, tB}, Scalar(1));
      gamma[pA->gen_id(tni)] = imti;
    }

    // delta : Uhat -> B^op (x) B
    {
      TensorElement img(ZT);
      img.add_pure({tiB, tB * epB}, Scalar(1));
      img.add_pure({epB, oneB}, Scalar(-1));
      delta[pH->gen_id(eh)] = img;

      TensorElement imf(ZT);
      imf.add_pure({oneB, fB}, Scalar(1));
      imf.add_pure({fB * tB, tiB}, Scalar(-1));
      delta[pH->gen_id(f)] = imf;

      TensorElement imt(ZT);
      imt.add_pure({tiB, tB}, Scalar(1));
      delta[pH->gen_id(tn)] = imt;
      TensorElement imti(ZT);
      imti.add_pure({tB, tiB}, Scalar(1));
      delta[pH->gen_id(tni)] = imti;
    }

    // S_T = theta_B as a map to Z^op; S_Z = Id_B as a map to T^op
    {
      SignaturePtr Zop = sig1(b.Z.opposite());
      TensorElement th(Zop);
      th.add_pure({tiB * epB * tB}, Scalar(1));
      sT[pB->gen_id(ep)] = th;
      TensorElement thf(Zop);
      thf.add_pure({tiB * fB * tB}, Scalar(1));
      sT[pB->gen_id(f)] = thf;
      TensorElement tht(Zop);
      tht.add_pure({tB}, Scalar(1));
      sT[pB->gen_id(tn)] = tht;
      TensorElement thti(Zop);
      thti.add_pure({tiB}, Scalar(1));
      sT[pB->gen_id(tni)] = thti;

      SignaturePtr Top = sig1(b.T.opposite());
      for (const std::string& g : {ep, f, tn, tni}) {
        TensorElement ident(Top);
        ident.add_pure({gen_by_name(pB, g)}, Scalar(1));
        sZ[pB->gen_id(g)] = ident;
      }
    }
  }

  b.alpha_T = Morphism::generator_images(b.T, AT, std::move(alphaT)).named("alpha_T");
  b.beta_T = Morphism::generator_images(b.T, TB, std::move(betaT)).named("beta_T");
  b.beta_Z = Morphism::generator_images(b.Z, BZ, std::move(betaZ)).named("beta_Z");
  b.alpha_Z = Morphism::generator_images(b.Z, ZA, std::move(alphaZ)).named("alpha_Z");
  b.gamma = Morphism::generator_images(b.A, TZ, std::move(gamma)).named("gamma");
  b.delta = Morphism::generator_images(b.B, ZT, std::move(delta)).named("delta");
  b.S_T = Morphism::generator_images(b.T, sig1(b.Z.opposite()), std::move(sT)).named("S_T");
  b.S_Z = Morphism::generator_images(b.Z, sig1(b.T.opposite()), std::move(sZ)).named("S_Z");
  return b;
}

Morphism embed_uhat(const HopfData& uhat, const HopfData& uq, const CartanDatum& c) {
  const PresentationPtr& pH = uhat.algebra.pres;
  const PresentationPtr& pU = uq.algebra.pres;
  SignaturePtr U = sig1(uq.algebra);
  std::vector<TensorElement> images(pH->arity());
  for (int i = 0; i < c.rank(); ++i) {
    Scalar scale = qpow(c.d[i]) - qpow(-c.d[i]);
    TensorElement ie(U);
    ie.add_pure({gen_by_name(pU, idx("e", i))}, scale);
    images[pH->gen_id(idx("eh", i))] = ie;
    TensorElement iff(U);
    iff.add_pure({gen_by_name(pU, idx("f", i))}, Scalar(1));
    images[pH->gen_id(idx("f", i))] = iff;
    TensorElement it(U);
    it.add_pure({gen_by_name(pU, idx("t", i))}, Scalar(1));
    images[pH->gen_id(idx("t", i))] = it;
    TensorElement iti(U);
    iti.add_pure({gen_by_name(pU, idx("t", i) + "inv")}, Scalar(1));
    images[pH->gen_id(idx("t", i) + "inv")] = iti;
  }
  return Morphism::generator_images(uhat.algebra, U, std::move(images)).named("embed");
}

AlgebraHandle build_sridharan(const LieDatum& l, const CocycleSpec& c,
                              const BuildOptions& opts) {
  l.validate();
  CocycleSpec cc = c;
  cc.resolve(l);
  cc.validate(l);
  const int n = l.dim();
  std::vector<Generator> gens;
  for (const std::string& name : l.basis()) gens.push_back({name, 1});
  std::string display =
      (cc.is_zero() ? "U[" : "Uc[") + l.describe() + (cc.is_zero() ? "]" : "," + cc.describe(l) + "]");
  auto pres = std::make_shared<Presentation>(display, std::move(gens));
  PresentationPtr cp = pres;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Element rel = Element::from_word(cp, {i, j}) - Element::from_word(cp, {j, i});
      std::vector<Rational> br = l.bracket(i, j);
      for (int k = 0; k < n; ++k)
        if (br[k] != 0) rel -= Element::from_word(cp, {k}, Scalar(br[k]));
      Rational cv = cc.value(i, j);
      if (cv != 0) rel -= Element::unit(cp, Scalar(cv));
      pres->add_relation(std::move(rel));
    }
  }
  return complete_handle(cp, opts);
}

namespace {

HopfData sridharan_hopf(const AlgebraHandle& A) {
  const PresentationPtr& p = A.pres;
  SignaturePtr AA = sig2(A, A);
  SignaturePtr Aop = sig1(A.opposite());
  SignaturePtr Asig = sig1(A);
  AlgebraHandle triv = trivial_algebra();
  SignaturePtr K = sig1(triv);
  Element one = Element::unit(p);

  std::vector<TensorElement> delta(p->arity()), antipode(p->arity()), counit(p->arity());
  for (int g = 0; g < p->arity(); ++g) {
    Element x = Element::generator(p, g);
    TensorElement d(AA);
    d.add_pure({x, one}, Scalar(1));
    d.add_pure({one, x}, Scalar(1));
    delta[g] = d;
    TensorElement s(Aop);
    s.add_pure({x}, Scalar(-1));
    antipode[g] = s;
    counit[g] = zero_of(K);
  }
  HopfData h;
  h.algebra = A;
  h.coproduct = Morphism::generator_images(A, AA, std::move(delta)).named("Delta");
  h.antipode = Morphism::generator_images(A, Aop, std::move(antipode)).named("S");
  h.counit = Morphism::generator_images(A, K, std::move(counit)).named("eps");
  h.unit = Morphism::generator_images(triv, Asig, {TensorElement::unit(Asig)}).named("unit");
  return h;
}

// x -> x (x) 1 + 1 (x) x into an arbitrary two-leg signature whose legs
// share the generator names of the source.
Morphism primitive_coaction(const AlgebraHandle& src, const SignaturePtr& target,
                            const std::string& name) {
  const PresentationPtr& p = src.pres;
  std::vector<TensorElement> images(p->arity());
  Element one0 = Element::unit(target->leg(0).pres);
  Element one1 = Element::unit(target->leg(1).pres);
  for (int g = 0; g < p->arity(); ++g) {
    const std::string& n = p->gen_name(g);
    TensorElement img(target);
    img.add_pure({gen_by_name(target->leg(0).pres, n), one1}, Scalar(1));
    img.add_pure({one0, gen_by_name(target->leg(1).pres, n)}, Scalar(1));
    images[g] = img;
  }
  return Morphism::generator_images(src, target, std::move(images)).named(name);
}

Morphism negation_map(const AlgebraHandle& src, const AlgebraHandle& target_op,
                      const std::string& name) {
  const PresentationPtr& p = src.pres;
  SignaturePtr T = sig1(target_op);
  std::vector<TensorElement> images(p->arity());
  for (int g = 0; g < p->arity(); ++g) {
    TensorElement img(T);
    img.add_pure({gen_by_name(target_op.pres, p->gen_name(g))}, Scalar(-1));
    images[g] = img;
  }
  return Morphism::generator_images(src, T, std::move(images)).named(name);
}

}  // namespace

GaloisBundle sridharan_bundle(const LieDatum& l, const CocycleSpec& c,
                              const BuildOptions& opts) {
  CocycleSpec plus = c;
  plus.resolve(l);
  GaloisBundle b;
  b.name = "sridharan[" + l.describe() + "," + plus.describe(l) + "]";
  CocycleSpec zero = plus.scaled(Rational(0));
  AlgebraHandle U0 = build_sridharan(l, zero, opts);
  b.A = U0;
  b.B = U0;
  b.T = build_sridharan(l, plus, opts);
  b.Z = build_sridharan(l, plus.negated(), opts);
  b.hopfA = sridharan_hopf(U0);
  b.hopfB = b.hopfA;

  b.alpha_T = primitive_coaction(b.T, sig2(b.A, b.T), "alpha_T");
  // left-leg copy of x lands in A, right leg is x itself; alpha wants
  // x -> 1 (x) x + x (x) 1 which primitive_coaction already produces.
  b.beta_T = primitive_coaction(b.T, sig2(b.T, b.B), "beta_T");
  b.beta_Z = primitive_coaction(b.Z, sig2(b.B, b.Z), "beta_Z");
  b.alpha_Z = primitive_coaction(b.Z, sig2(b.Z, b.A), "alpha_Z");
  b.gamma = primitive_coaction(b.A, sig2(b.T, b.Z), "gamma");
  b.delta = primitive_coaction(b.B, sig2(b.Z, b.T), "delta");
  b.S_T = negation_map(b.T, b.Z.opposite(), "S_T");
  b.S_Z = negation_map(b.Z, b.T.opposite(), "S_Z");

  // torsor: mu(x) = x (x) 1 (x) 1 - 1 (x) x (x) 1 + 1 (x) 1 (x) x, theta = id
  const PresentationPtr& p = b.T.pres;
  SignaturePtr tri = make_signature({b.T, b.T.opposite(), b.T});
  SignaturePtr Tsig = sig1(b.T);
  std::vector<TensorElement> mu(p->arity()), theta(p->arity());
  Element one = Element::unit(p);
  for (int g = 0; g < p->arity(); ++g) {
    Element x = Element::generator(p, g);
    TensorElement m(tri);
    m.add_pure({x, one, one}, Scalar(1));
    m.add_pure({one, x, one}, Scalar(-1));
    m.add_pure({one, one, x}, Scalar(1));
    mu[g] = m;
    TensorElement th(Tsig);
    th.add_pure({x}, Scalar(1));
    theta[g] = th;
  }
  TorsorData t;
  t.mu = Morphism::generator_images(b.T, tri, std::move(mu)).named("mu");
  t.theta = Morphism::generator_images(b.T, Tsig, std::move(theta)).named("theta");
  b.torsor = t;
  return b;
}

AlgebraHandle classical_limit(const AlgebraHandle& h, const BuildOptions& opts,
                              const std::map<std::string, std::string>& rename) {
  const PresentationPtr& p = h.pres;
  auto is_toral = [](const std::string& name) {
    if (name.size() < 2 || name[0] != 't') return false;
    std::string rest = name.substr(1);
    if (rest.size() > 3 && rest.substr(rest.size() - 3) == "inv")
      rest = rest.substr(0, rest.size() - 3);
    return !rest.empty() && rest.find_first_not_of("0123456789") == std::string::npos;
  };

  std::vector<Generator> gens;
  std::vector<int> new_id(p->arity(), -1);
  for (int g = 0; g < p->arity(); ++g) {
    const std::string& name = p->gen_name(g);
    if (is_toral(name)) continue;
    auto it = rename.find(name);
    new_id[g] = static_cast<int>(gens.size());
    gens.push_back({it == rename.end() ? name : it->second, p->gen_degree(g)});
  }
  auto pres = std::make_shared<Presentation>("cl(" + p->display_name() + ")", std::move(gens));
  PresentationPtr cp = pres;

  std::vector<std::string> seen;
  for (const Element& rel : p->relations()) {
    Element lim(cp);
    for (const auto& [w, coeff] : rel.terms()) {
      Rational value;
      try {
        value = coeff.specialize_q1();
      } catch (const PoleError&) {
        throw PoleError("relation has no classical limit: " + rel.str());
      }
      if (value == 0) continue;
      Word nw;
      for (int g : w)
        if (new_id[g] >= 0) nw.push_back(new_id[g]);
      lim.add_term(nw, Scalar(value));
    }
    if (lim.is_zero()) continue;
    std::string key = lim.str();
    bool dup = false;
    for (const std::string& s : seen)
      if (s == key) dup = true;
    if (dup) continue;
    seen.push_back(key);
    pres->add_relation(std::move(lim));
  }
  return complete_handle(cp, opts);
}

ClassicalMatchData nilpotent_pair_datum(const CartanDatum& c) {
  c.validate();
  const int n = c.rank();
  if (n == 1) {
    LieDatum l({"ep1", "f1"});
    l.validate();
    CocycleSpec cs;
    cs.set_value("ep1", "f1", Rational(1));
    return {l, cs, {}};
  }
  if (n == 2 && c.a[0][1] == 0) {
    LieDatum l({"ep1", "ep2", "f1", "f2"});
    CocycleSpec cs;
    cs.set_value("ep1", "f1", Rational(1));
    cs.set_value("ep2", "f2", Rational(1));
    return {l, cs, {}};
  }
  if (n == 2 && c.a[0][1] == -1 && c.a[1][0] == -1) {
    LieDatum l({"ep1", "ep2", "ep12", "f1", "f2", "f12"});
    l.set_bracket("ep1", "ep2", {{"ep12", Rational(1)}});
    l.set_bracket("f1", "f2", {{"f12", Rational(1)}});
    l.validate();
    CocycleSpec cs;
    cs.set_value("ep1", "f1", Rational(1));
    cs.set_value("ep2", "f2", Rational(1));
    return {l,
            cs,
            {{"ep12", "ep1 ep2 - ep2 ep1"}, {"f12", "f1 f2 - f2 f1"}}};
  }
  throw ValidationError(
      "classical-limit comparison is implemented for rank <= 2 data with a_12 in {0, -1}");
}

SridharanMatchResult check_sridharan_match(const AlgebraHandle& classical_B,
                                           const LieDatum& l, const CocycleSpec& c,
                                           const std::map<std::string, std::string>& exprs,
                                           const BuildOptions& opts) {
  AlgebraHandle sr = build_sridharan(l, c, opts);
  SridharanMatchResult out;

  // direction 1: classical relations vanish in the Sridharan algebra
  for (const Element& rel : classical_B.pres->relations()) {
    Element image(sr.pres);
    for (const auto& [w, coeff] : rel.terms()) {
      Word nw;
      for (int g : w) {
        int id = sr.pres->gen_id(classical_B.pres->gen_name(g));
        if (id < 0)
          throw ValidationError("classical generator missing from the Lie basis: " +
                                classical_B.pres->gen_name(g));
        nw.push_back(id);
      }
      image.add_term(nw, coeff);
    }
    ZeroTest z = sr.system->is_zero(image);
    if (z.certainty == Certainty::bound_limited) out.bound_limited = true;
    if (!z.zero && z.certainty == Certainty::certain) {
      out.matched = false;
      out.witness = Witness{"classical relation " + rel.str(),
                            sr.system->normal_form(image).str(), image.degree()};
      return out;
    }
  }

  // direction 2: Sridharan relations vanish in the classical algebra after
  // substituting bracket expressions for composite basis elements
  std::vector<Element> subst(sr.pres->arity(), Element(classical_B.pres));
  for (int g = 0; g < sr.pres->arity(); ++g) {
    const std::string& name = sr.pres->gen_name(g);
    int id = classical_B.pres->gen_id(name);
    if (id >= 0) {
      subst[g] = Element::generator(classical_B.pres, id);
    } else {
      auto it = exprs.find(name);
      if (it == exprs.end())
        throw ValidationError("no bracket expression for basis element " + name);
      subst[g] = parse_element(it->second, classical_B.pres);
    }
  }
  for (const Element& rel : sr.pres->relations()) {
    Element image(classical_B.pres);
    for (const auto& [w, coeff] : rel.terms()) {
      Element prod = Element::unit(classical_B.pres, coeff);
      for (int g : w) prod = prod * subst[g];
      image += prod;
    }
    ZeroTest z = classical_B.system->is_zero(image);
    if (z.certainty == Certainty::bound_limited) out.bound_limited = true;
    if (!z.zero && z.certainty == Certainty::certain) {
      out.matched = false;
      out.witness = Witness{"Sridharan relation " + rel.str(),
                            classical_B.system->normal_form(image).str(), image.degree()};
      return out;
    }
  }
  return out;
}

SridharanMatchResult mutually_presenting(const AlgebraHandle& X, const AlgebraHandle& Y) {
  SridharanMatchResult out;
  auto one_way = [&](const AlgebraHandle& from, const AlgebraHandle& to) -> bool {
    for (const Element& rel : from.pres->relations()) {
      Element image(to.pres);
      for (const auto& [w, coeff] : rel.terms()) {
        Word nw;
        for (int g : w) {
          int id = to.pres->gen_id(from.pres->gen_name(g));
          if (id < 0)
            throw ValidationError("generator " + from.pres->gen_name(g) +
                                  " missing from " + to.pres->display_name());
          nw.push_back(id);
        }
        image.add_term(nw, coeff);
      }
      ZeroTest z = to.system->is_zero(image);
      if (z.certainty == Certainty::bound_limited) out.bound_limited = true;
      if (!z.zero && z.certainty == Certainty::certain) {
        out.matched = false;
        out.witness = Witness{"relation " + rel.str() + " of " + from.pres->display_name(),
                              to.system->normal_form(image).str(), image.degree()};
        return false;
      }
    }
    return true;
  };
  if (!one_way(X, Y)) return out;
  one_way(Y, X);
  return out;
}

}  // namespace torsor
