#pragma once

// The circular (kernel-cokernel) sequence, the right and left fundamental
// sequences of covariant and contravariant functors, splitting tests and the
// hereditary decomposition of a half-exact fp functor over Z.

#include <optional>
#include <vector>

#include "fundseq/funcalc.hpp"

namespace fundseq {

// 0 -> ker f -> ker gf -> ker g -> coker f -> coker gf -> coker g -> 0
SequenceReport circular_sequence(const Morphism& f, const Morphism& g);

// Exactness verdict at every interior node (recomputes the report's verdicts).
std::vector<bool> exactness_check(const SequenceReport& report);

// Rows Fbar(Sigma^i B) -> S^iF(B) -> R^iF(B) --beta--> Fbar(Sigma^{i+1} B), i < depth.
// Over Z only functors of FP shape are accepted; Sigma B is injective there, so
// the sequence stops at Fbar(Sigma^2 B) = 0 and the row-1 terms are computed by
// dimension shifting (see fp_presentation for the shapes).
SequenceReport right_fund_cov(const FunctorExpr& F, const FPModule& B, int depth = kDefaultDepth);
// Rows underline-F(Omega^{i+1} B) --alpha--> L_iF(B) -> S_iF(B) -> underline-F(Omega^i B).
SequenceReport left_fund_cov(const FunctorExpr& F, const FPModule& B, int depth = kDefaultDepth);
// Contravariant F. Right: rows Fbar(Omega^i B) -> S^iF(B) -> R^iF(B) -> Fbar(Omega^{i+1} B),
// from a projective resolution. Left: rows underline-F(Sigma^{i+1} B) -> L_iF(B) -> S_iF(B)
// -> underline-F(Sigma^i B), from an injective resolution.
SequenceReport contra_fund(const FunctorExpr& F, const FPModule& B, int depth, Side side);

struct SplitResult {
  bool split = false;
  std::optional<Morphism> retraction;  // r : B -> A with r i = id
};
// For a verified short exact sequence 0 -> A -> B -> C -> 0 (5 nodes with
// zero ends, or the 3 inner nodes). Throws NotExact otherwise.
SplitResult splitting_test(const SequenceReport& ses);
SplitResult splitting_test(const Morphism& i, const Morphism& p);

struct HereditaryDecomposition {
  FPModule defect;  // w(F)
  struct Sample {
    FPModule X;
    SequenceReport ses;  // 0 -> Fbar(X) -> F(X) -> (w(F), X) -> 0
    bool split = false;
    bool decomposes = false;  // F(X) = Fbar(X) + (w(F), X) up to isomorphism
    bool retractions_compatible = true;  // checked on sampled maps between samples
  };
  std::vector<Sample> samples;
  bool holds() const;
};
// Caller asserts F = FP(f) over Z is half-exact.
HereditaryDecomposition hereditary_decomposition(const Morphism& f, const std::vector<FPModule>& samples,
                                                 const std::vector<Morphism>& sample_maps = {});

}  // namespace fundseq
