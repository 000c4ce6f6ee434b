#include "fundseq/random.hpp"

#include <algorithm>
#include <limits>

#include "fundseq/resolve.hpp"

namespace fundseq {

std::uint64_t InstanceGenerator::below(std::uint64_t bound) {
  if (bound <= 1) return 0;
  // rejection sampling keeps the stream identical across standard libraries
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do x = rng_();
  while (x >= limit);
  return x % bound;
}

long InstanceGenerator::between(long lo, long hi) {
  return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

Int InstanceGenerator::entry() { return spec_.ring.reduce(Int(between(-spec_.max_entry, spec_.max_entry))); }

FPModule InstanceGenerator::module(std::size_t gens, std::size_t relations) {
  IntMat P(gens, relations);
  for (std::size_t i = 0; i < gens; ++i)
    for (std::size_t j = 0; j < relations; ++j) P(i, j) = entry();
  return FPModule(spec_.ring, gens, P);
}

FPModule InstanceGenerator::module() {
  std::size_t lo = std::min(spec_.min_gens, spec_.max_gens);
  std::size_t g = lo + below(spec_.max_gens - lo + 1);
  std::size_t r = below(spec_.max_relations + 1);
  return module(g, r);
}

FPModule InstanceGenerator::cyclic_module() {
  IntMat P(1, 1);
  P(0, 0) = entry();
  return FPModule(spec_.ring, 1, P);
}

Morphism InstanceGenerator::morphism(const FPModule& M, const FPModule& N) {
  HomModule H = hom_module(M, N);
  auto orders = H.module.generator_orders();
  IntMat y(orders.size(), 1);
  for (std::size_t k = 0; k < orders.size(); ++k) {
    if (orders[k] == 0)
      y(k, 0) = between(-spec_.max_entry, spec_.max_entry);
    else if (spec_.max_entry > 0)
      y(k, 0) = Int(static_cast<long>(below(orders[k].get_ui())));
  }
  return H.decode(y);
}

std::pair<Morphism, Morphism> InstanceGenerator::composable_pair() {
  FPModule X = module(), Y = module(), Z = module();
  Morphism f = morphism(X, Y);
  Morphism g = morphism(Y, Z);
  return {f, g};
}

Complex InstanceGenerator::free_complex(long entry_bound) {
  const RingDesc& R = spec_.ring;
  std::size_t len = 1 + below(spec_.max_length);
  std::vector<FPModule> terms;
  std::vector<Morphism> diffs;
  std::vector<std::size_t> ranks;
  for (std::size_t k = 0; k < len; ++k) ranks.push_back(below(spec_.max_gens + 1));
  for (std::size_t k = 0; k < len; ++k) terms.push_back(FPModule::free(R, ranks[k]));
  for (std::size_t k = 0; k + 1 < len; ++k) {
    // d_{k+1} : C_{k+1} -> C_k lands in the kernel of d_k
    IntMat basis = k == 0 ? IntMat::identity(ranks[0]) : kernel_basis(diffs.back().matrix(), R);
    IntMat coeff(basis.cols(), ranks[k + 1]);
    for (std::size_t i = 0; i < coeff.rows(); ++i)
      for (std::size_t j = 0; j < coeff.cols(); ++j) coeff(i, j) = between(-entry_bound, entry_bound);
    diffs.push_back(Morphism(terms[k + 1], terms[k], R.reduce(basis * coeff)));
  }
  return Complex(R, 0, terms, diffs);
}

Complex InstanceGenerator::complex() {
  std::size_t len = 1 + below(spec_.max_length);
  std::vector<FPModule> terms;
  std::vector<Morphism> diffs;
  terms.push_back(module());
  for (std::size_t k = 0; k + 1 < len; ++k) {
    FPModule next = module();
    if (k == 0) {
      diffs.push_back(morphism(next, terms[0]));
    } else {
      KernelData K = kernel(diffs.back());
      diffs.push_back(compose(K.inclusion, morphism(next, K.module())));
    }
    terms.push_back(next);
  }
  return Complex(spec_.ring, 0, terms, diffs);
}

}  // namespace fundseq
