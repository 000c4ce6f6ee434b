#pragma once

// Bounded chain complexes C_lo <- ... <- C_hi with d_n : C_n -> C_{n-1}.

#include <vector>

#include "fundseq/resolve.hpp"

namespace fundseq {

bool is_projective(const FPModule& M);

class Complex {
 public:
  Complex() = default;
  // differentials[k] is d_{lo+k+1} : C_{lo+k+1} -> C_{lo+k}. Throws NotAComplex
  // when a composite d_{n} d_{n+1} is nonzero.
  Complex(RingDesc ring, int lo, std::vector<FPModule> terms, std::vector<Morphism> differentials);

  const RingDesc& ring() const { return ring_; }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(terms_.size()) - 1; }
  const FPModule& term(int n) const;     // zero module outside the support
  Morphism differential(int n) const;    // d_n : C_n -> C_{n-1}, zero outside the support

  bool is_projective() const;            // every C_n projective
  bool boundaries_projective() const;    // every B_n = im d_{n+1} projective

 private:
  RingDesc ring_;
  int lo_ = 0;
  std::vector<FPModule> terms_;
  std::vector<Morphism> diffs_;
  FPModule zero_;
};

// Sign of the cochain differential (C_m, X) -> (C_{m+1}, X): (-1)^(m+1),
// from D(f) = d'f - (-1)^t f d with f of degree t = -m.
int cochain_sign(int n);

// The cochain complex (C_., X) around degree n and H^n(C, X) inside (C_n, X).
struct CochainData {
  HomModule prev, mid, next;  // (C_{n-1}, X), (C_n, X), (C_{n+1}, X)
  Morphism in, out;
  Subquotient value;
};
CochainData cochain_data(const Complex& C, const FPModule& X, int n);

// C_. (x) X around degree n and H_n(C (x) X) inside C_n (x) X.
struct ChainTensorData {
  TensorModule prev, mid, next;  // C_{n+1}, C_n, C_{n-1} tensored with X
  Morphism in, out;
  Subquotient value;
};
ChainTensorData chain_tensor_data(const Complex& C, const FPModule& X, int n);

// H_n(C) = ker d_n / im d_{n+1} inside C_n.
Subquotient homology_data(const Complex& C, int n);

}  // namespace fundseq
