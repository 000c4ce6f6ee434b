#pragma once

// Seeded generators for modules, morphisms and complexes. Streams depend only
// on the seed and the InstanceSpec.

#include <cstdint>
#include <random>
#include <utility>

#include "fundseq/complex.hpp"

namespace fundseq {

struct InstanceSpec {
  RingDesc ring;
  std::size_t max_gens = 4;
  std::size_t max_relations = 4;
  long max_entry = 8;
  std::size_t max_length = 5;  // terms of random complexes
  std::uint64_t seed = 0;
  std::size_t min_gens = 1;
};

class InstanceGenerator {
 public:
  explicit InstanceGenerator(InstanceSpec spec) : spec_(std::move(spec)), rng_(spec_.seed) {}

  const InstanceSpec& spec() const { return spec_; }
  std::uint64_t below(std::uint64_t bound);  // uniform in [0, bound)
  long between(long lo, long hi);            // uniform in [lo, hi]
  Int entry();                               // uniform in [-max_entry, max_entry], reduced mod n

  FPModule module();
  FPModule module(std::size_t gens, std::size_t relations);
  FPModule cyclic_module();                     // R/(d) for a random d
  Morphism morphism(const FPModule& M, const FPModule& N);  // random element of Hom(M, N)
  std::pair<Morphism, Morphism> composable_pair();
  Complex free_complex(long entry_bound);       // free terms, d d = 0 by construction
  Complex complex();                            // arbitrary terms, d d = 0 by construction

 private:
  InstanceSpec spec_;
  std::mt19937_64 rng_;
};

}  // namespace fundseq
