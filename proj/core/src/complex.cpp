#include "fundseq/complex.hpp"

namespace fundseq {

bool is_projective(const FPModule& M) {
  auto inv = M.invariants();
  if (M.ring().is_integers()) return inv.divisors.empty();
  return stable_invariants(M).empty();
}

Complex::Complex(RingDesc ring, int lo, std::vector<FPModule> terms, std::vector<Morphism> differentials)
    : ring_(std::move(ring)), lo_(lo), terms_(std::move(terms)), diffs_(std::move(differentials)),
      zero_(FPModule::zero(ring_)) {
  if (terms_.empty()) throw Error(ErrorKind::InvalidArgument, "complex needs at least one term");
  if (diffs_.size() + 1 != terms_.size())
    throw Error(ErrorKind::DimensionMismatch, "a complex with k terms needs k-1 differentials");
  for (std::size_t k = 0; k < diffs_.size(); ++k) {
    const Morphism& d = diffs_[k];
    if (d.source().gens() != terms_[k + 1].gens() || d.target().gens() != terms_[k].gens())
      throw Error(ErrorKind::DimensionMismatch, "differential " + std::to_string(lo_ + k + 1) + " has wrong shape");
    diffs_[k] = make_morphism(terms_[k + 1], terms_[k], d.matrix());
  }
  for (std::size_t k = 0; k + 1 < diffs_.size(); ++k)
    if (!is_zero(compose(diffs_[k], diffs_[k + 1])))
      throw Error(ErrorKind::NotAComplex, "d_" + std::to_string(lo_ + k + 1) + " d_" + std::to_string(lo_ + k + 2) +
                                              " is nonzero");
}

const FPModule& Complex::term(int n) const {
  if (n < lo_ || n > hi()) return zero_;
  return terms_[n - lo_];
}

Morphism Complex::differential(int n) const {
  if (n > lo_ && n <= hi()) return diffs_[n - lo_ - 1];
  return zero_morphism(term(n), term(n - 1));
}

bool Complex::is_projective() const {
  for (const auto& t : terms_)
    if (!fundseq::is_projective(t)) return false;
  return true;
}

bool Complex::boundaries_projective() const {
  for (const auto& d : diffs_)
    if (!fundseq::is_projective(epi_mono_factor(d).image)) return false;
  return true;
}

int cochain_sign(int n) { return n % 2 == 0 ? -1 : 1; }

CochainData cochain_data(const Complex& C, const FPModule& X, int n) {
  CochainData c;
  c.prev = hom_module(C.term(n - 1), X);
  c.mid = hom_module(C.term(n), X);
  c.next = hom_module(C.term(n + 1), X);
  c.in = scale(cochain_sign(n - 1), hom_contra_map(c.prev, c.mid, C.differential(n)));
  c.out = scale(cochain_sign(n), hom_contra_map(c.mid, c.next, C.differential(n + 1)));
  c.value = homology_at(c.in, c.out);
  return c;
}

ChainTensorData chain_tensor_data(const Complex& C, const FPModule& X, int n) {
  ChainTensorData c;
  c.prev = tensor_module(C.term(n + 1), X);
  c.mid = tensor_module(C.term(n), X);
  c.next = tensor_module(C.term(n - 1), X);
  c.in = tensor_map(c.prev, c.mid, C.differential(n + 1), identity(X));
  c.out = tensor_map(c.mid, c.next, C.differential(n), identity(X));
  c.value = homology_at(c.in, c.out);
  return c;
}

Subquotient homology_data(const Complex& C, int n) { return homology_at(C.differential(n + 1), C.differential(n)); }

}  // namespace fundseq
