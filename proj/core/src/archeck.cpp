#include "fundseq/archeck.hpp"

namespace fundseq {

namespace {

void need_finite_ring(const RingDesc& R, const std::string& what) {
  if (R.is_integers()) throw Error(ErrorKind::UnsupportedRing, what + " needs Z/n; Z has no injective cogenerator here");
}

}  // namespace

FPModule matlis_dual(const FPModule& M) {
  need_finite_ring(M.ring(), "matlis_dual");
  return dual(M).module;
}

Morphism matlis_dual_map(const Morphism& f) {
  need_finite_ring(f.ring(), "matlis_dual_map");
  return hom_contra_map(dual(f.target()), dual(f.source()), f);
}

FPModule stable_hom(const FPModule& A, const FPModule& B, StableClass mod) {
  HomModule AB = hom_module(A, B);
  if (mod == StableClass::Projectives) {
    Morphism cover = proj_resolution(B, 0).epis[0];
    HomModule AP = hom_module(A, cover.source());
    return cokernel(hom_cov_map(AP, AB, cover)).module;
  }
  if (!A.ring().quasi_frobenius())
    throw Error(ErrorKind::UnsupportedRing, "Hom modulo injectives needs injective containers; " + A.ring().name() +
                                                " is not self-injective");
  Morphism container = inj_resolution(A, 0).monos[0];
  HomModule IB = hom_module(container.target(), B);
  return cokernel(hom_contra_map(IB, AB, container)).module;
}

IsoCheck ar_formula_check(const FPModule& A, const FPModule& B) {
  need_finite_ring(A.ring(), "ar_formula_check");
  IsoCheck c;
  c.label = "D Ext^1(A,B) = (B, D Tr A) mod injectives";
  c.lhs = matlis_dual(ext(A, B, 1));
  c.rhs = stable_hom(B, matlis_dual(transpose(A)), StableClass::Injectives);
  c.holds = iso_test(c.lhs, c.rhs);
  return c;
}

IsoCheck stab_adjunction_check(const FPModule& A, const FPModule& B, Side side, std::size_t q) {
  IsoCheck c;
  if (side == Side::Right) {
    need_finite_ring(A.ring(), "the right stabilization adjunction");
    c.label = "D(Fbar(B)) = (B, D(A)) mod injectives for F = A (x) -";
    c.lhs = matlis_dual(sub_stabilize(FunctorExpr::tensor_left(A), B).module);
    c.rhs = stable_hom(B, matlis_dual(A), StableClass::Injectives);
  } else {
    FPModule Q = FPModule::free(A.ring(), q);
    c.label = "(Q, underline-(A,-)(B)) = (Q (x) A, B) mod projectives";
    c.lhs = hom_module(Q, quot_stabilize(FunctorExpr::hom_cov(A), B).module).module;
    c.rhs = stable_hom(tensor_module(Q, A).module, B, StableClass::Projectives);
  }
  c.holds = iso_test(c.lhs, c.rhs);
  return c;
}

SequenceReport bidual_check(const FPModule& A) { return bidual_sequence(A); }

}  // namespace fundseq
