#pragma once

// Projective and injective resolutions, syzygies and cosyzygies, Ext and Tor.

#include <vector>

#include "fundseq/fpmod.hpp"

namespace fundseq {

inline constexpr int kDefaultDepth = 4;

struct Resolution {
  enum class Kind { Projective, Injective };
  Kind kind = Kind::Projective;
  FPModule base;
  int depth = 0;

  // Projective: terms[i] = P_i, shifts[i] = Omega^i, epis[i] : P_i ->> Omega^i,
  //   monos[i] : Omega^{i+1} >-> P_i, differentials[i] = d_{i+1} : P_{i+1} -> P_i.
  // Injective:  terms[i] = I^i, shifts[i] = Sigma^i, monos[i] : Sigma^i >-> I^i,
  //   epis[i] : I^i ->> Sigma^{i+1}, differentials[i] = d^i : I^i -> I^{i+1}.
  std::vector<FPModule> terms;      // i = 0..depth
  std::vector<FPModule> shifts;     // i = 0..depth+1
  std::vector<Morphism> epis;       // i = 0..depth
  std::vector<Morphism> monos;      // i = 0..depth
  std::vector<Morphism> differentials;  // i = 0..depth-1

  const Morphism& augmentation() const { return kind == Kind::Projective ? epis[0] : monos[0]; }
};

// Free cover R^g ->> M with the identity generator matrix.
Morphism free_cover(const FPModule& M);
// Embedding of M into R^k built from the generators of M* (Z/n only).
Morphism injective_container(const FPModule& M);

Resolution proj_resolution(const FPModule& M, int depth = kDefaultDepth);
// As proj_resolution, but P_1 -> P_0 is the given presentation matrix.
Resolution presentation_resolution(const FPModule& M, int depth = kDefaultDepth);
Resolution inj_resolution(const FPModule& M, int depth = kDefaultDepth);
FPModule syzygy(const FPModule& M, int k);
FPModule cosyzygy(const FPModule& M, int k);

// ker g / im f for composable f : A -> B, g : B -> C with g f = 0.
Subquotient homology_at(const Morphism& f, const Morphism& g);

// Ext^i(M, N) realised as a subquotient of Hom(P_i, N).
struct ExtGroup {
  Resolution resolution;
  int degree = 0;
  HomModule cochains;  // Hom(P_i, N)
  Subquotient group;
  const FPModule& module() const { return group.module; }
};
// Tor_i(M, N) realised as a subquotient of P_i (x) N.
struct TorGroup {
  Resolution resolution;
  int degree = 0;
  TensorModule chains;  // P_i (x) N
  Subquotient group;
  const FPModule& module() const { return group.module; }
};

ExtGroup ext_group(const Resolution& res, const FPModule& N, int i);
TorGroup tor_group(const Resolution& res, const FPModule& N, int i);
FPModule ext(const FPModule& M, const FPModule& N, int i);
FPModule tor(const FPModule& M, const FPModule& N, int i);

enum class ExtOrTor { Ext, Tor };
// Ext/Tor over Z from the cyclic decompositions alone:
// Ext^1(Z/d, B) = B/dB and Tor_1(Z/d, B) = B[d].
FPModule ext_tor_oracle_Z(const FPModule& A, const FPModule& B, int i, ExtOrTor which);

// Chain map between resolutions lifting phi : from.base -> to.base.
struct ChainLift {
  std::vector<Morphism> components;  // P_i(from) -> P_i(to) or I^i(from) -> I^i(to)
  std::vector<Morphism> shifts;      // Omega^i phi or Sigma^i phi, shifts[0] = phi
};
ChainLift lift_along_resolutions(const Resolution& from, const Resolution& to, const Morphism& phi);

// Ext^i(M, psi) : Ext^i(M, N) -> Ext^i(M, N') for psi : N -> N'.
Morphism ext_map_second(const ExtGroup& from, const ExtGroup& to, const Morphism& psi);
// Ext^i(j, N) : Ext^i(M, N) -> Ext^i(M', N) for j : M' -> M.
Morphism ext_map_first(const ExtGroup& from, const ExtGroup& to, const Morphism& j);
Morphism tor_map_second(const TorGroup& from, const TorGroup& to, const Morphism& psi);

Morphism zero_in(const FPModule& B);   // 0 -> B
Morphism zero_out(const FPModule& B);  // B -> 0

}  // namespace fundseq
