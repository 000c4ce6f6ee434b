#include "fundseq/sequences.hpp"

#include <algorithm>

namespace fundseq {

SequenceReport circular_sequence(const Morphism& f, const Morphism& g) {
  if (f.target().gens() != g.source().gens() || !(f.ring() == g.ring()))
    throw Error(ErrorKind::DimensionMismatch, "circular_sequence: f and g are not composable");
  Morphism gf = compose(g, f);
  KernelData Kf = kernel(f), Kgf = kernel(gf), Kg = kernel(g);
  CokernelData Cf = cokernel(f), Cgf = cokernel(gf), Cg = cokernel(g);
  return SequenceBuilder("circular", 0)
      .node("0", FPModule::zero(f.ring()))
      .then(zero_in(Kf.module()), "ker f")
      .then(corestrict(Kf.inclusion, Kgf.sq), "ker gf")
      .then(corestrict(compose(f, Kgf.inclusion), Kg.sq), "ker g")
      .then(compose(Cf.projection, Kg.inclusion), "coker f")
      .then(from_cokernel(Cf, compose(Cgf.projection, g)), "coker gf")
      .then(from_cokernel(Cgf, Cg.projection), "coker g")
      .then(zero_out(Cg.module), "0")
      .build();
}

std::vector<bool> exactness_check(const SequenceReport& report) {
  SequenceReport copy = report;
  verify(copy);
  return copy.exact_at;
}

namespace {

// F applied along a resolution. shift_map[j] joins shift j and term j,
// edge[j] joins term j and shift j+1, diff[j] joins terms j and j+1; each is
// oriented the way F sends it.
struct Image {
  std::vector<Evaluated> terms, shifts;
  std::vector<Morphism> shift_map, edge, diff;
};

Image apply_along(const FunctorExpr& F, const Resolution& r) {
  Image im;
  for (int j = 0; j <= r.depth; ++j) {
    im.terms.push_back(evaluate(F, r.terms[j]));
    im.shifts.push_back(evaluate(F, r.shifts[j]));
  }
  const bool inj = r.kind == Resolution::Kind::Injective;
  auto Fmap = [&](const Morphism& m, const Evaluated& src, const Evaluated& tgt) { return evaluate_map(F, m, src, tgt); };
  for (int j = 0; j <= r.depth; ++j) {
    // injective: iota_j : Sigma^j -> I^j; projective: pi_j : P_j -> Omega^j
    im.shift_map.push_back(inj ? Fmap(r.monos[j], im.shifts[j], im.terms[j]) : Fmap(r.epis[j], im.terms[j], im.shifts[j]));
  }
  for (int j = 0; j < r.depth; ++j) {
    Evaluated next = im.shifts[j + 1];
    // injective: e_j : I^j -> Sigma^{j+1}; projective: m_j : Omega^{j+1} -> P_j
    im.edge.push_back(inj ? Fmap(r.epis[j], im.terms[j], next) : Fmap(r.monos[j], next, im.terms[j]));
    const Morphism& d = r.differentials[j];
    im.diff.push_back(inj ? Fmap(d, im.terms[j], im.terms[j + 1]) : Fmap(d, im.terms[j + 1], im.terms[j]));
  }
  return im;
}

// Right-type sequence: 0 -> Fbar(X_0) -> F(B) -> R^0 -> Fbar(X_1) -> S^1 -> R^1 -> ...
// with in[j] : F(X_j) -> F(T_j), edge[j] : F(T_j) -> F(X_{j+1}), diff[j] : F(T_j) -> F(T_{j+1}).
SequenceReport build_right(const std::string& display, const std::string& shift, const FunctorExpr& F,
                           const FPModule& B, const Image& im, int depth) {
  const bool he = F.half_exact();
  std::vector<KernelData> bar;
  for (int j = 0; j <= depth; ++j) bar.push_back(kernel(im.shift_map[j]));
  auto shifted = [&](int j) { return j == 0 ? std::string("B") : shift + "^" + std::to_string(j) + "B"; };
  SequenceBuilder sb(display, depth);
  sb.node("0", FPModule::zero(B.ring()), 0);
  sb.then(zero_in(bar[0].module()), "Fbar(B)", 0);
  sb.then(bar[0].inclusion, "F(B)", 0);
  Morphism into_F = im.shift_map[0];  // F(B) -> F(T_0) for row 0
  for (int i = 0; i < depth; ++i) {
    Morphism in = i > 0 ? im.diff[i - 1] : zero_in(im.terms[0].module());
    Subquotient R = homology_at(in, im.diff[i]);
    const std::string Ri = "R^" + std::to_string(i) + "F(B)";
    if (i == 0) {
      sb.then(corestrict(into_F, R), Ri, 0, he);
    } else {
      CokernelData S = cokernel(im.edge[i - 1]);
      sb.then(compose(S.projection, bar[i].inclusion), "S^" + std::to_string(i) + "F(B)", i);
      sb.then(encode_columns(S.module, R, im.shift_map[i].matrix() * S.lifts), Ri, i, he);
    }
    sb.then(corestrict(from_subquotient(R, im.edge[i]), bar[i + 1].sq), "Fbar(" + shifted(i + 1) + ")", i + 1);
  }
  return sb.build();
}

// Left-type sequence: Funder(X_depth) -> L_{depth-1} -> S_{depth-1} -> ... -> L_0 -> F(B) -> Funder(B) -> 0
// with out[j] : F(T_j) -> F(X_j), edge[j] : F(X_{j+1}) -> F(T_j), diff[j] : F(T_{j+1}) -> F(T_j).
SequenceReport build_left(const std::string& display, const std::string& shift, const FunctorExpr& F,
                          const FPModule&, const Image& im, int depth) {
  const bool he = F.half_exact();
  std::vector<CokernelData> under;
  for (int j = 0; j <= depth; ++j) under.push_back(cokernel(im.shift_map[j]));
  auto shifted = [&](int j) { return j == 0 ? std::string("B") : shift + "^" + std::to_string(j) + "B"; };
  SequenceBuilder sb(display, depth);
  sb.node("Funder(" + shifted(depth) + ")", under[depth].module, depth);
  for (int i = depth - 1; i >= 0; --i) {
    Morphism out = i > 0 ? im.diff[i - 1] : zero_out(im.terms[0].module());
    Subquotient L = homology_at(im.diff[i], out);
    const std::string Li = "L_" + std::to_string(i) + "F(B)";
    sb.then(encode_columns(under[i + 1].module, L, im.edge[i].matrix() * under[i + 1].lifts), Li, i, he);
    if (i > 0) {
      KernelData S = kernel(im.edge[i - 1]);
      sb.then(corestrict(from_subquotient(L, im.shift_map[i]), S.sq), "S_" + std::to_string(i) + "F(B)", i);
      sb.then(compose(under[i].projection, S.inclusion), "Funder(" + shifted(i) + ")", i);
    } else {
      sb.then(from_subquotient(L, im.shift_map[0]), "F(B)", 0);
      sb.then(under[0].projection, "Funder(B)", 0);
    }
  }
  sb.then(zero_out(under[0].module), "0", 0);
  return sb.build();
}

// Over Z, Sigma B is injective and Sigma^2 B = 0, so only rows 0 and 1 are
// nonzero. For F of FP shape with presentation f = m e : A ->> D >-> T and
// w = ker f, dimension shifting along 0 -> B -> I -> Sigma B -> 0 gives
//   Fbar(Sigma B) = coker Ext^1(m, B),  S^1F(B) = coker Ext^1(f, B),  R^1F(B) = Ext^1(w, B),
// with beta the connecting map (w, B) -> Ext^1(D, B) of 0 -> w -> A -> D -> 0.
SequenceReport right_fund_hereditary(const FunctorExpr& F, const FPModule& B, int depth) {
  const Morphism f = *fp_presentation(F);
  const bool he = F.half_exact();
  EpiMono em = epi_mono_factor(f);
  KernelData w = kernel(f);
  Stabilization sub = sub_stabilize(F, B);
  Evaluated R0 = evaluate(FunctorExpr::derived(F, 0, Side::Right), B);
  Morphism r = rho(F, B);

  ExtGroup eT = ext_group(proj_resolution(f.target(), 2), B, 1);
  ExtGroup eD = ext_group(proj_resolution(em.image, 2), B, 1);
  ExtGroup eA = ext_group(proj_resolution(f.source(), 2), B, 1);
  CokernelData bar1 = cokernel(ext_map_first(eT, eD, em.mono));

  // h : w -> B goes to h s|, where s : P_0 -> A lifts the cover of D and
  // s| : Omega^1 D -> w is its restriction, pulled back to P_1.
  const Resolution& rd = eD.resolution;
  Morphism s = *lift_through(em.epi, rd.epis[0]);
  Morphism restricted = factor_through_mono(w.inclusion, compose(s, rd.monos[0]));
  Morphism to_w = compose(restricted, rd.epis[1]);
  IntMat Bt(bar1.module.gens(), R0.module().gens());
  for (std::size_t k = 0; k < R0.module().gens(); ++k) {
    Morphism h = defect_hom(F, R0, IntMat::unit_column(R0.module().gens(), k));
    IntMat e = eD.group.encode(eD.cochains.encode(compose(h, to_w)));
    Bt.set_col(k, bar1.projection.apply(e));
  }
  Morphism beta0(R0.module(), bar1.module, bar1.module.reduce(Bt));

  SequenceBuilder sb("rfs-co-fun", depth);
  sb.node("0", FPModule::zero(B.ring()), 0)
      .then(zero_in(sub.module), "Fbar(B)", 0)
      .then(sub.map, "F(B)", 0)
      .then(r, "R^0F(B)", 0, he)
      .then(beta0, "Fbar(Sigma^1B)", 1);
  if (depth >= 2) {
    ExtGroup eW = ext_group(proj_resolution(w.module(), 2), B, 1);
    CokernelData S1 = cokernel(ext_map_first(eT, eA, f));
    sb.then(cokernel_map(bar1, S1, ext_map_first(eD, eA, em.epi)), "S^1F(B)", 1)
        .then(from_cokernel(S1, ext_map_first(eA, eW, w.inclusion)), "R^1F(B)", 1, he)
        .then(zero_out(eW.module()), "Fbar(Sigma^2B)", 2);
  }
  return sb.build();
}

void check_depth(int depth) {
  if (depth < 1) throw Error(ErrorKind::InvalidArgument, "fundamental sequences need depth >= 1");
}

}  // namespace

SequenceReport right_fund_cov(const FunctorExpr& F, const FPModule& B, int depth) {
  if (!F.covariant()) throw Error(ErrorKind::InvalidArgument, "right_fund_cov needs a covariant functor");
  check_depth(depth);
  if (!F.ring().quasi_frobenius()) {
    if (!fp_presentation(F))
      throw Error(ErrorKind::UnsupportedRing, "over " + F.ring().name() +
                                                  " the right fundamental sequence is available for FP functors only");
    return right_fund_hereditary(F, B, depth);
  }
  Resolution res = inj_resolution(B, depth);
  return build_right("rfs-co-fun", "Sigma", F, B, apply_along(F, res), depth);
}

SequenceReport left_fund_cov(const FunctorExpr& F, const FPModule& B, int depth) {
  if (!F.covariant()) throw Error(ErrorKind::InvalidArgument, "left_fund_cov needs a covariant functor");
  check_depth(depth);
  Resolution res = proj_resolution(B, depth);
  return build_left("lfs-co-fun", "Omega", F, B, apply_along(F, res), depth);
}

SequenceReport contra_fund(const FunctorExpr& F, const FPModule& B, int depth, Side side) {
  if (F.covariant()) throw Error(ErrorKind::InvalidArgument, "contra_fund needs a contravariant functor");
  check_depth(depth);
  if (side == Side::Right) {
    Resolution res = proj_resolution(B, depth);
    return build_right("rfs-contra-fun", "Omega", F, B, apply_along(F, res), depth);
  }
  if (!F.ring().quasi_frobenius())
    throw Error(ErrorKind::UnsupportedRing,
                "the left fundamental sequence of a contravariant functor needs injective resolutions; " +
                    F.ring().name() + " is not self-injective");
  Resolution res = inj_resolution(B, depth);
  return build_left("lfs-contra-fun", "Sigma", F, B, apply_along(F, res), depth);
}

// ------------------------------------------------------------ splitting

SplitResult splitting_test(const Morphism& i, const Morphism& p) {
  if (!is_mono(i) || !is_epi(p) || !is_zero(compose(p, i)) || !is_exact_at(i, p))
    throw Error(ErrorKind::NotExact, "splitting_test: not a short exact sequence");
  const FPModule& A = i.source();
  const FPModule& B = i.target();
  HomModule BA = hom_module(B, A), AA = hom_module(A, A);
  Morphism restrict = hom_contra_map(BA, AA, i);  // r |-> r i
  auto z = Preimager(restrict)(AA.encode(identity(A)));
  if (!z) return {false, std::nullopt};
  return {true, BA.decode(*z)};
}

SplitResult splitting_test(const SequenceReport& ses) {
  const auto& n = ses.nodes;
  if (n.size() == 5 && n.front().module.is_zero() && n.back().module.is_zero())
    return splitting_test(ses.maps[1], ses.maps[2]);
  if (n.size() == 3) return splitting_test(ses.maps[0], ses.maps[1]);
  throw Error(ErrorKind::NotExact, "splitting_test expects 0 -> A -> B -> C -> 0");
}

// ------------------------------------------------------------ hereditary decomposition

bool HereditaryDecomposition::holds() const {
  return std::all_of(samples.begin(), samples.end(), [](const Sample& s) {
    return s.ses.passes() && s.split && s.decomposes && s.retractions_compatible;
  });
}

namespace {

// Section s_X : (w, X) -> F(X), h |-> F(h)(u), and the retraction
// F(X) -> Fbar(X), x |-> k^{-1}(x - s rho x).
struct Splitting {
  Evaluated FX;
  Morphism k, rho, section;
  std::optional<Morphism> retraction;
};

Splitting natural_splitting(const FunctorExpr& F, const IntMat& u, const Evaluated& Fw, const FPModule& X) {
  Splitting s;
  s.k = sub_stabilize(F, X).map;
  s.FX = evaluate(F, X);
  Evaluated RX = evaluate(FunctorExpr::derived(F, 0, Side::Right), X);
  s.rho = rho(F, X);
  const FPModule& H = RX.module();
  const FPModule& FXm = s.FX.module();
  IntMat cols(FXm.gens(), H.gens());
  for (std::size_t c = 0; c < H.gens(); ++c) {
    Morphism h = defect_hom(F, RX, IntMat::unit_column(H.gens(), c));
    cols.set_col(c, evaluate_map(F, h, Fw, s.FX).matrix() * u);
  }
  s.section = Morphism(H, FXm, FXm.reduce(cols));
  IntMat rest = IntMat::identity(FXm.gens()) - s.section.matrix() * s.rho.matrix();
  Preimager pre(s.k);
  IntMat r(s.k.source().gens(), FXm.gens());
  for (std::size_t c = 0; c < FXm.gens(); ++c) {
    auto z = pre(FXm.reduce(rest.col(c)));
    if (!z) return s;
    r.set_col(c, *z);
  }
  s.retraction = Morphism(FXm, s.k.source(), s.k.source().reduce(r));
  return s;
}

}  // namespace

HereditaryDecomposition hereditary_decomposition(const Morphism& f, const std::vector<FPModule>& samples,
                                                 const std::vector<Morphism>& sample_maps) {
  if (!f.ring().hereditary())
    throw Error(ErrorKind::UnsupportedRing, "hereditary_decomposition works over Z only");
  FunctorExpr F = FunctorExpr::fp(f, true);
  HereditaryDecomposition out;
  out.defect = defect(F);
  const FPModule& w = out.defect;
  Evaluated Fw = evaluate(F, w);
  Evaluated Rw = evaluate(FunctorExpr::derived(F, 0, Side::Right), w);
  // Yoneda element: u in F(w) with rho(u) = id_w
  std::optional<IntMat> u;
  {
    // find the R^0 coordinates of id_w by testing the decoded generators
    const FPModule& H = Rw.module();
    HomModule ww = hom_module(w, w);
    IntMat named(ww.module.gens(), H.gens());
    for (std::size_t c = 0; c < H.gens(); ++c) named.set_col(c, ww.encode(defect_hom(F, Rw, IntMat::unit_column(H.gens(), c))));
    Morphism name_map(H, ww.module, ww.module.reduce(named));
    auto id = Preimager(name_map)(ww.encode(identity(w)));
    if (id) u = Preimager(rho(F, w))(H.reduce(*id));
  }

  std::vector<Splitting> splits;
  for (const FPModule& X : samples) {
    HereditaryDecomposition::Sample smp;
    smp.X = X;
    Splitting sp = u ? natural_splitting(F, *u, Fw, X)
                     : Splitting{evaluate(F, X), sub_stabilize(F, X).map, rho(F, X), Morphism(), std::nullopt};
    smp.ses = SequenceBuilder("hereditary", 0)
                  .node("0", FPModule::zero(X.ring()))
                  .then(zero_in(sp.k.source()), "Fbar(X)")
                  .then(sp.k, "F(X)")
                  .then(sp.rho, "(w(F), X)")
                  .then(zero_out(sp.rho.target()), "0")
                  .build();
    if (smp.ses.passes()) {
      SplitResult sr = splitting_test(sp.k, sp.rho);
      smp.split = sr.split && sp.retraction.has_value() && is_iso(compose(sp.rho, sp.section));
    }
    smp.decomposes = iso_test(sp.FX.module(), direct_sum(sp.k.source(), sp.rho.target()));
    out.samples.push_back(smp);
    splits.push_back(std::move(sp));
  }
  for (const Morphism& phi : sample_maps) {
    auto find = [&](const FPModule& M) -> int {
      for (std::size_t j = 0; j < samples.size(); ++j)
        if (samples[j].gens() == M.gens() && samples[j].relations() == M.relations()) return static_cast<int>(j);
      return -1;
    };
    int a = find(phi.source()), b = find(phi.target());
    if (a < 0 || b < 0)
      throw Error(ErrorKind::InvalidArgument, "hereditary_decomposition: sample map between unknown modules");
    const Splitting& sa = splits[a];
    const Splitting& sb = splits[b];
    if (!sa.retraction || !sb.retraction) {
      out.samples[a].retractions_compatible = false;
      continue;
    }
    FunctorExpr bar = FunctorExpr::sub_stab(F);
    Morphism Fbar_phi = evaluate_map(bar, phi, evaluate(bar, phi.source()), evaluate(bar, phi.target()));
    Morphism F_phi = evaluate_map(F, phi, sa.FX, sb.FX);
    bool ok = equal(compose(Fbar_phi, *sa.retraction), compose(*sb.retraction, F_phi));
    if (!ok) out.samples[a].retractions_compatible = false;
  }
  return out;
}

}  // namespace fundseq
