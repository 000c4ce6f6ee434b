#include <gtest/gtest.h>

#include "fundseq/fpmod.hpp"
#include "fundseq/random.hpp"

using namespace fundseq;

namespace {

const RingDesc Z = RingDesc::integers();

FPModule cyc(const RingDesc& R, long d) { return FPModule(R, 1, IntMat::from_rows({{d}})); }
FPModule zfree(std::size_t k) { return FPModule::free(Z, k); }

// Hom(M, N) straight from its definition: matrices G with G P_M in im P_N,
// modulo matrices whose columns lie in im P_N. Vectorised with Kronecker
// products; independent of the diagonal construction in hom_module.
InvariantDivisors hom_oracle(const FPModule& M, const FPModule& N) {
  const std::size_t gm = M.gens(), gn = N.gens();
  IntMat PM = M.relation_lattice(), PN = N.relation_lattice();
  // unknowns: vec(G) (gn*gm), vec(X) (rN * rM); constraint G PM - PN X = 0
  IntMat A = IntMat::kron(PM.transpose(), IntMat::identity(gn));
  IntMat B = IntMat::kron(IntMat::identity(PM.cols()), PN);
  IntMat sys = IntMat::hconcat(A, -B);
  IntMat K = Echelon(sys).kernel_basis().row_range(0, gn * gm);
  IntMat L = Echelon(K).lattice_basis();
  IntMat rel = IntMat::kron(IntMat::identity(gm), PN);
  auto Y = Echelon(L).solve_all(rel);
  EXPECT_TRUE(Y.has_value());
  return invariant_divisors(*Y);
}

InvariantDivisors tensor_oracle(const FPModule& M, const FPModule& N) {
  IntMat rel = IntMat::hconcat(IntMat::kron(M.relation_lattice(), IntMat::identity(N.gens())),
                               IntMat::kron(IntMat::identity(M.gens()), N.relation_lattice()));
  InvariantDivisors inv = invariant_divisors(rel);
  if (!M.ring().is_integers()) {
    // free summands show up as Z/n over Z
    InvariantDivisors out;
    for (auto& d : inv.divisors)
      if (d == M.ring().modulus())
        ++out.free_rank;
      else
        out.divisors.push_back(d);
    return out;
  }
  return inv;
}

InvariantDivisors as_ring_invariants(const InvariantDivisors& overZ, const RingDesc& R) {
  if (R.is_integers()) return overZ;
  InvariantDivisors out;
  out.free_rank = overZ.free_rank;
  for (auto& d : overZ.divisors)
    if (d == R.modulus())
      ++out.free_rank;
    else
      out.divisors.push_back(d);
  return out;
}

}  // namespace

TEST(FPModule, WorkedExamples) {
  FPModule z2 = cyc(Z, 2);
  EXPECT_EQ(z2.describe(), "Z/2");
  FPModule a = FPModule(Z, 2, IntMat::from_rows({{2, 0}, {0, 3}}));
  EXPECT_EQ(canonical_invariants(a).divisors, std::vector<Int>{6});
  EXPECT_TRUE(iso_test(a, cyc(Z, 6)));
  RingDesc R4 = RingDesc::mod(4);
  EXPECT_TRUE(stably_iso_test(direct_sum(cyc(R4, 2), FPModule::free(R4, 1)), cyc(R4, 2)));
  EXPECT_FALSE(stably_iso_test(cyc(R4, 2), FPModule::zero(R4)));
}

TEST(FPModule, StableInvariantsZmod12) {
  RingDesc R = RingDesc::mod(12);
  // Z/12 = Z/4 + Z/3 is projective; Z/6 = Z/2 + Z/3 keeps only Z/2
  EXPECT_TRUE(stable_invariants(cyc(R, 0)).empty());
  EXPECT_EQ(stable_invariants(cyc(R, 6)), std::vector<Int>{2});
  EXPECT_TRUE(stable_invariants(cyc(R, 4)).empty());
  EXPECT_TRUE(stable_invariants(cyc(R, 3)).empty());
}

TEST(Morphism, WellDefinedness) {
  RingDesc R = Z;
  FPModule z2 = cyc(R, 2), z4 = cyc(R, 4);
  EXPECT_THROW(make_morphism(z2, z4, IntMat::from_rows({{1}})), Error);
  Morphism f = make_morphism(z2, z4, IntMat::from_rows({{2}}));
  EXPECT_EQ(f.witness(), IntMat::from_rows({{1}}));
}

TEST(Morphism, KernelCokernelExamples) {
  Morphism two(zfree(1), zfree(1), IntMat::from_rows({{2}}));
  EXPECT_TRUE(kernel(two).module().is_zero());
  EXPECT_EQ(cokernel(two).module.describe(), "Z/2");
  RingDesc R4 = RingDesc::mod(4);
  Morphism two4(FPModule::free(R4, 1), FPModule::free(R4, 1), IntMat::from_rows({{2}}));
  KernelData K = kernel(two4);
  EXPECT_EQ(K.module().describe(), "Z/2");
  EXPECT_EQ(K.inclusion.apply(IntMat::from_rows({{1}})), IntMat::from_rows({{2}}));
  EXPECT_EQ(epi_mono_factor(two4).image.describe(), "Z/2");
  EpiMono em = epi_mono_factor(two);
  EXPECT_EQ(em.image.describe(), "Z");
  EXPECT_TRUE(equal(compose(em.mono, em.epi), two));
  EXPECT_TRUE(epi_mono_factor(zero_morphism(zfree(2), zfree(1))).image.is_zero());
}

TEST(Hom, WorkedExamples) {
  EXPECT_EQ(hom_module(cyc(Z, 2), cyc(Z, 4)).module.describe(), "Z/2");
  EXPECT_TRUE(hom_module(cyc(Z, 2), cyc(Z, 3)).module.is_zero());
  FPModule M(Z, 2, IntMat::from_rows({{2}, {4}}));
  EXPECT_TRUE(iso_test(hom_module(zfree(1), M).module, M));
  EXPECT_TRUE(dual(cyc(Z, 2)).module.is_zero());
  RingDesc R4 = RingDesc::mod(4);
  EXPECT_EQ(dual(cyc(R4, 2)).module.describe(), "Z/2");
}

TEST(Tensor, WorkedExamples) {
  EXPECT_TRUE(tensor_module(cyc(Z, 2), cyc(Z, 3)).module.is_zero());
  EXPECT_EQ(tensor_module(cyc(Z, 2), cyc(Z, 4)).module.describe(), "Z/2");
  FPModule M(Z, 2, IntMat::from_rows({{3, 1}, {0, 2}}));
  EXPECT_TRUE(iso_test(tensor_module(zfree(1), M).module, M));
}

TEST(Transpose, WorkedExamples) {
  EXPECT_EQ(transpose(cyc(Z, 2)).describe(), "Z/2");
  EXPECT_TRUE(transpose(zfree(3)).is_zero());
  EXPECT_EQ(transpose(cyc(RingDesc::mod(4), 2)).describe(), "Z/2");
}

TEST(Evaluation, FreeIsIso) {
  EXPECT_TRUE(is_iso(evaluation_map(zfree(2)).evaluation));
  EXPECT_TRUE(kernel(evaluation_map(direct_sum(zfree(1), cyc(Z, 3))).evaluation).module().describe() == "Z/3");
}

class RingParam : public ::testing::TestWithParam<long> {
 protected:
  RingDesc ring() const { return GetParam() == 0 ? RingDesc::integers() : RingDesc::mod(GetParam()); }
};

TEST_P(RingParam, HomMatchesDefinition) {
  InstanceGenerator gen({ring(), 3, 3, 6, 5, 100 + static_cast<std::uint64_t>(GetParam())});
  for (int t = 0; t < 60; ++t) {
    FPModule M = gen.module(), N = gen.module();
    HomModule H = hom_module(M, N);
    ASSERT_EQ(H.module.invariants(), as_ring_invariants(hom_oracle(M, N), ring()))
        << M.relations().to_string() << " / " << N.relations().to_string();
  }
}

TEST_P(RingParam, TensorMatchesDefinition) {
  InstanceGenerator gen({ring(), 3, 3, 6, 5, 200 + static_cast<std::uint64_t>(GetParam())});
  for (int t = 0; t < 60; ++t) {
    FPModule M = gen.module(), N = gen.module();
    ASSERT_EQ(tensor_module(M, N).module.invariants(), tensor_oracle(M, N));
  }
}

TEST_P(RingParam, HomEncodeDecodeRoundTrip) {
  InstanceGenerator gen({ring(), 3, 3, 6, 5, 300 + static_cast<std::uint64_t>(GetParam())});
  for (int t = 0; t < 60; ++t) {
    FPModule M = gen.module(), N = gen.module();
    HomModule H = hom_module(M, N);
    Morphism f = gen.morphism(M, N);
    ASSERT_TRUE(f.well_defined());
    ASSERT_TRUE(equal(H.decode(H.encode(f)), f));
    IntMat y(H.module.gens(), 1);
    for (std::size_t k = 0; k < y.rows(); ++k) y(k, 0) = gen.between(-5, 5);
    ASSERT_EQ(H.encode(H.decode(y)), H.module.reduce(y));
  }
}

TEST_P(RingParam, KernelCokernelUniversal) {
  InstanceGenerator gen({ring(), 3, 3, 6, 5, 400 + static_cast<std::uint64_t>(GetParam())});
  for (int t = 0; t < 60; ++t) {
    FPModule M = gen.module(), N = gen.module();
    Morphism f = gen.morphism(M, N);
    KernelData K = kernel(f);
    CokernelData C = cokernel(f);
    ASSERT_TRUE(K.inclusion.well_defined());
    ASSERT_TRUE(C.projection.well_defined());
    ASSERT_TRUE(is_zero(compose(f, K.inclusion)));
    ASSERT_TRUE(is_zero(compose(C.projection, f)));
    ASSERT_TRUE(is_mono(K.inclusion));
    ASSERT_TRUE(is_epi(C.projection));
    EpiMono em = epi_mono_factor(f);
    ASSERT_TRUE(equal(compose(em.mono, em.epi), f));
    ASSERT_TRUE(is_epi(em.epi));
    ASSERT_TRUE(is_mono(em.mono));
  }
}

TEST_P(RingParam, TensorMapFunctorial) {
  InstanceGenerator gen({ring(), 3, 3, 6, 5, 500 + static_cast<std::uint64_t>(GetParam())});
  for (int t = 0; t < 40; ++t) {
    FPModule A = gen.module(), X = gen.module(), Y = gen.module(), W = gen.module();
    Morphism f = gen.morphism(X, Y), g = gen.morphism(Y, W);
    TensorModule TX = tensor_module(A, X), TY = tensor_module(A, Y), TW = tensor_module(A, W);
    Morphism a = tensor_map(TX, TY, identity(A), f), b = tensor_map(TY, TW, identity(A), g);
    Morphism ab = tensor_map(TX, TW, identity(A), compose(g, f));
    ASSERT_TRUE(a.well_defined());
    ASSERT_TRUE(equal(compose(b, a), ab));
  }
}

TEST_P(RingParam, LiftAndExtend) {
  InstanceGenerator gen({ring(), 3, 3, 6, 5, 600 + static_cast<std::uint64_t>(GetParam())});
  for (int t = 0; t < 40; ++t) {
    FPModule A = gen.module(), B = gen.module(), C = gen.module();
    Morphism a = gen.morphism(A, B), h = gen.morphism(B, C);
    Morphism b = compose(h, a);
    auto e = extend_along(a, b);
    ASSERT_TRUE(e.has_value());
    ASSERT_TRUE(equal(compose(*e, a), b));
    Morphism p = gen.morphism(B, C), k = gen.morphism(A, B);
    auto l = lift_through(p, compose(p, k));
    ASSERT_TRUE(l.has_value());
    ASSERT_TRUE(equal(compose(p, *l), compose(p, k)));
  }
}

TEST_P(RingParam, TransposeTwiceIsStablyIdentity) {
  InstanceGenerator gen({ring(), 3, 3, 6, 5, 700 + static_cast<std::uint64_t>(GetParam())});
  for (int t = 0; t < 60; ++t) {
    FPModule M = gen.module();
    ASSERT_TRUE(stably_iso_test(transpose(transpose(M)), M));
  }
}

INSTANTIATE_TEST_SUITE_P(Rings, RingParam, ::testing::Values(0, 4, 6, 8, 12));

TEST(Evaluation, ReflexiveOverZmodN) {
  for (long n : {4, 6, 8, 9, 12}) {
    InstanceGenerator gen({RingDesc::mod(n), 3, 3, 8, 5, static_cast<std::uint64_t>(n)});
    for (int t = 0; t < 30; ++t) ASSERT_TRUE(is_iso(evaluation_map(gen.module()).evaluation));
  }
}
