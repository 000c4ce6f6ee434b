#include "fundseq/resolve.hpp"

#include <algorithm>

namespace fundseq {

Morphism zero_in(const FPModule& B) { return zero_morphism(FPModule::zero(B.ring()), B); }
Morphism zero_out(const FPModule& B) { return zero_morphism(B, FPModule::zero(B.ring())); }

Morphism free_cover(const FPModule& M) {
  return Morphism(FPModule::free(M.ring(), M.gens()), M, IntMat::identity(M.gens()));
}

Morphism injective_container(const FPModule& M) {
  if (!M.ring().quasi_frobenius())
    throw Error(ErrorKind::UnsupportedRing, "injective containers need a self-injective ring; " + M.ring().name() +
                                                " has no nonzero finitely generated injectives");
  // M -> M** -> (R^k)* = R^k, one coordinate per generator of M*
  HomModule D = dual(M);
  const std::size_t k = D.module.gens();
  IntMat Phi(k, M.gens());
  for (std::size_t r = 0; r < k; ++r) {
    IntMat row = D.decode(IntMat::unit_column(k, r)).matrix();
    for (std::size_t j = 0; j < M.gens(); ++j) Phi(r, j) = row(0, j);
  }
  return Morphism(M, FPModule::free(M.ring(), k), Phi);
}

namespace {

void check_depth(int depth) {
  if (depth < 0) throw Error(ErrorKind::InvalidArgument, "negative resolution depth");
}

void finish_projective(Resolution& r) {
  for (int i = 0; i < r.depth; ++i) r.differentials.push_back(compose(r.monos[i], r.epis[i + 1]));
}

// Appends P_i ->> Omega^i and Omega^{i+1} >-> P_i for i = r.terms.size().
void projective_step(Resolution& r) {
  const FPModule& omega = r.shifts.back();
  Morphism cover = free_cover(omega);
  KernelData K = kernel(cover);
  r.terms.push_back(cover.source());
  r.epis.push_back(cover);
  r.monos.push_back(K.inclusion);
  r.shifts.push_back(K.module());
}

}  // namespace

Resolution proj_resolution(const FPModule& M, int depth) {
  check_depth(depth);
  Resolution r;
  r.kind = Resolution::Kind::Projective;
  r.base = M;
  r.depth = depth;
  r.shifts.push_back(M);
  for (int i = 0; i <= depth; ++i) projective_step(r);
  finish_projective(r);
  return r;
}

Resolution presentation_resolution(const FPModule& M, int depth) {
  check_depth(depth);
  Resolution r;
  r.kind = Resolution::Kind::Projective;
  r.base = M;
  r.depth = depth;
  r.shifts.push_back(M);
  projective_step(r);
  if (depth >= 1) {
    // P_1 = R^r mapping onto Omega^1 through the relation columns
    KernelData K0 = kernel(r.epis[0]);
    const IntMat& P = M.relations();
    FPModule P1 = FPModule::free(M.ring(), P.cols());
    IntMat E(K0.module().gens(), P.cols());
    for (std::size_t j = 0; j < P.cols(); ++j) E.set_col(j, K0.sq.encode(P.col(j)));
    Morphism pi1(P1, r.shifts[1], E);
    KernelData K1 = kernel(pi1);
    r.terms.push_back(P1);
    r.epis.push_back(pi1);
    r.monos.push_back(K1.inclusion);
    r.shifts.push_back(K1.module());
    for (int i = 2; i <= depth; ++i) projective_step(r);
  }
  finish_projective(r);
  return r;
}

Resolution inj_resolution(const FPModule& M, int depth) {
  check_depth(depth);
  Resolution r;
  r.kind = Resolution::Kind::Injective;
  r.base = M;
  r.depth = depth;
  r.shifts.push_back(M);
  for (int i = 0; i <= depth; ++i) {
    Morphism iota = injective_container(r.shifts.back());
    CokernelData C = cokernel(iota);
    r.terms.push_back(iota.target());
    r.monos.push_back(iota);
    r.epis.push_back(C.projection);
    r.shifts.push_back(C.module);
  }
  for (int i = 0; i < depth; ++i) r.differentials.push_back(compose(r.monos[i + 1], r.epis[i]));
  return r;
}

FPModule syzygy(const FPModule& M, int k) {
  if (k == 0) return M;
  return proj_resolution(M, k - 1).shifts[k];
}

FPModule cosyzygy(const FPModule& M, int k) {
  if (k == 0) return M;
  return inj_resolution(M, k - 1).shifts[k];
}

Subquotient homology_at(const Morphism& f, const Morphism& g) {
  if (f.target().gens() != g.source().gens()) throw Error(ErrorKind::DimensionMismatch, "homology_at: not composable");
  if (!is_zero(compose(g, f))) throw Error(ErrorKind::NotAComplex, "composite of consecutive maps is nonzero");
  Echelon e(IntMat::hconcat(g.matrix(), g.target().relation_lattice()));
  IntMat Z = e.kernel_basis().row_range(0, g.source().gens());
  return subquotient(g.source(), Z, f.matrix());
}

namespace {

void need_depth(const Resolution& res, int i) {
  if (i < 0) throw Error(ErrorKind::InvalidArgument, "negative homological degree");
  if (res.depth < i + 1) throw Error(ErrorKind::InvalidArgument, "resolution too short for degree " + std::to_string(i));
}

}  // namespace

ExtGroup ext_group(const Resolution& res, const FPModule& N, int i) {
  if (res.kind != Resolution::Kind::Projective) throw Error(ErrorKind::InvalidArgument, "Ext needs a projective resolution");
  need_depth(res, i);
  HomModule Hi = hom_module(res.terms[i], N);
  HomModule Hnext = hom_module(res.terms[i + 1], N);
  Morphism out = hom_contra_map(Hi, Hnext, res.differentials[i]);
  Morphism in = zero_in(Hi.module);
  if (i > 0) in = hom_contra_map(hom_module(res.terms[i - 1], N), Hi, res.differentials[i - 1]);
  return ExtGroup{res, i, Hi, homology_at(in, out)};
}

TorGroup tor_group(const Resolution& res, const FPModule& N, int i) {
  if (res.kind != Resolution::Kind::Projective) throw Error(ErrorKind::InvalidArgument, "Tor needs a projective resolution");
  need_depth(res, i);
  TensorModule Ti = tensor_module(res.terms[i], N);
  TensorModule Tnext = tensor_module(res.terms[i + 1], N);
  Morphism in = tensor_map(Tnext, Ti, res.differentials[i], identity(N));
  Morphism out = zero_out(Ti.module);
  if (i > 0) out = tensor_map(Ti, tensor_module(res.terms[i - 1], N), res.differentials[i - 1], identity(N));
  return TorGroup{res, i, Ti, homology_at(in, out)};
}

FPModule ext(const FPModule& M, const FPModule& N, int i) {
  return ext_group(proj_resolution(M, i + 1), N, i).module();
}

FPModule tor(const FPModule& M, const FPModule& N, int i) {
  return tor_group(proj_resolution(M, i + 1), N, i).module();
}

FPModule ext_tor_oracle_Z(const FPModule& A, const FPModule& B, int i, ExtOrTor which) {
  if (!A.ring().is_integers() || !B.ring().is_integers())
    throw Error(ErrorKind::UnsupportedRing, "the classification oracle is for Z only");
  const RingDesc Z = RingDesc::integers();
  if (i < 0) throw Error(ErrorKind::InvalidArgument, "negative degree");
  if (i >= 2) return FPModule::zero(Z);
  auto a = A.invariants(), b = B.invariants();
  std::vector<Int> orders;
  auto torsion_part = [&](const Int& d) {  // B[d]
    for (const Int& e : b.divisors) orders.push_back(gcd(d, e));
  };
  auto quotient_part = [&](const Int& d) {  // B/dB
    for (const Int& e : b.divisors) orders.push_back(gcd(d, e));
    for (std::size_t k = 0; k < b.free_rank; ++k) orders.push_back(d);
  };
  auto copy_of_B = [&]() {
    for (const Int& e : b.divisors) orders.push_back(e);
    for (std::size_t k = 0; k < b.free_rank; ++k) orders.push_back(0);
  };
  bool hom_like = (which == ExtOrTor::Ext) == (i == 0);  // Hom and Tor_1 use B[d]
  for (const Int& d : a.divisors) {
    if (hom_like)
      torsion_part(d);
    else
      quotient_part(d);
  }
  if (i == 0)
    for (std::size_t k = 0; k < a.free_rank; ++k) copy_of_B();
  std::vector<Int> kept;
  for (const Int& o : orders)
    if (o != 1) kept.push_back(o);
  // torsion first keeps cyclic_sum diagonal
  std::stable_partition(kept.begin(), kept.end(), [](const Int& o) { return o != 0; });
  return FPModule::cyclic_sum(Z, kept);
}

ChainLift lift_along_resolutions(const Resolution& from, const Resolution& to, const Morphism& phi) {
  if (from.kind != to.kind) throw Error(ErrorKind::InvalidArgument, "resolutions of different kinds");
  ChainLift out;
  out.shifts.push_back(phi);
  const int depth = std::min(from.depth, to.depth);
  for (int i = 0; i <= depth; ++i) {
    const Morphism& s = out.shifts.back();
    if (from.kind == Resolution::Kind::Projective) {
      Morphism target = compose(s, from.epis[i]);
      Morphism comp;
      if (to.epis[i].matrix() == IntMat::identity(to.terms[i].gens()))
        comp = Morphism(from.terms[i], to.terms[i], target.matrix());  // free source, identity cover
      else {
        auto h = lift_through(to.epis[i], target);
        if (!h) throw Error(ErrorKind::NotWellDefined, "no lift to the projective resolution");
        comp = *h;
      }
      out.components.push_back(comp);
      out.shifts.push_back(factor_through_mono(to.monos[i], compose(comp, from.monos[i])));
    } else {
      auto h = extend_along(from.monos[i], compose(to.monos[i], s));
      if (!h) throw Error(ErrorKind::NotWellDefined, "no extension to the injective resolution");
      out.components.push_back(*h);
      out.shifts.push_back(factor_through_epi(from.epis[i], compose(to.epis[i], *h)));
    }
  }
  return out;
}

Morphism ext_map_second(const ExtGroup& from, const ExtGroup& to, const Morphism& psi) {
  return induced_map(from.group, to.group, hom_cov_map(from.cochains, to.cochains, psi));
}

Morphism ext_map_first(const ExtGroup& from, const ExtGroup& to, const Morphism& j) {
  if (from.degree != to.degree) throw Error(ErrorKind::InvalidArgument, "Ext groups of different degrees");
  ChainLift lift = lift_along_resolutions(to.resolution, from.resolution, j);
  return induced_map(from.group, to.group,
                     hom_contra_map(from.cochains, to.cochains, lift.components[from.degree]));
}

Morphism tor_map_second(const TorGroup& from, const TorGroup& to, const Morphism& psi) {
  return induced_map(from.group, to.group,
                     tensor_map(from.chains, to.chains, identity(from.chains.left), psi));
}

}  // namespace fundseq
