#pragma once

// Character duality over Z/n, Hom modulo projectives or injectives, the
// Auslander-Reiten formula and the stabilization adjunctions.

#include <string>

#include "fundseq/funcalc.hpp"

namespace fundseq {

// D(M) = (M, Z/n). Z/n only (UnsupportedRing otherwise).
FPModule matlis_dual(const FPModule& M);
// D(f) : D(N) -> D(M) for f : M -> N.
Morphism matlis_dual_map(const Morphism& f);

// (A, B) modulo maps factoring through a projective (cover of B) or an
// injective (container of A; needs a quasi-Frobenius ring).
FPModule stable_hom(const FPModule& A, const FPModule& B, StableClass mod);

struct IsoCheck {
  std::string label;
  FPModule lhs;
  FPModule rhs;
  bool holds = false;
};

// D Ext^1(A, B) against (B, D Tr A) modulo injectives.
IsoCheck ar_formula_check(const FPModule& A, const FPModule& B);

// Right: D(Fbar(B)) for F = A (x) - against (B, D(A)) modulo injectives (Z/n only).
// Left: (Q, underline-(A, -)(B)) against (Q (x) A, B) modulo projectives, Q free of rank q.
IsoCheck stab_adjunction_check(const FPModule& A, const FPModule& B, Side side, std::size_t q = 1);

SequenceReport bidual_check(const FPModule& A);

}  // namespace fundseq
