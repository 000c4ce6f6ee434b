#pragma once

// Finitely presented modules over Z and Z/n, morphisms between them and the
// basic constructions (kernels, cokernels, Hom, tensor, duals, transpose).
//
// A module is coker(P : R^r -> R^g); P's columns are relations. Every Z/n
// module is also handled as a Z-module by appending n*I to the relations, so
// all lattice computations run over Z.

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fundseq/exactlin.hpp"

namespace fundseq {

class FPModule {
 public:
  FPModule() = default;
  FPModule(RingDesc ring, std::size_t gens, IntMat relations);

  static FPModule zero(const RingDesc& ring) { return FPModule(ring, 0, IntMat(0, 0)); }
  static FPModule free(const RingDesc& ring, std::size_t rank) { return FPModule(ring, rank, IntMat(rank, 0)); }
  // Direct sum of cyclic modules R/(d_i); d_i == 0 gives a free summand.
  static FPModule cyclic_sum(const RingDesc& ring, const std::vector<Int>& orders);

  const RingDesc& ring() const { return ring_; }
  std::size_t gens() const { return gens_; }
  const IntMat& relations() const { return rel_; }
  IntMat relation_lattice() const;  // relations, plus n*I over Z/n

  // Diagonal presentations diag(d_1..d_k) with 1 < d_i (< n) on distinct
  // generators; the remaining generators are free.
  bool is_diagonal() const { return diagonal_; }
  // Additive order of each generator of a diagonal presentation: d_i for
  // torsion generators, 0 (over Z) or n (over Z/n) for free ones.
  std::vector<Int> generator_orders() const;

  // Canonical representative of an element (column vector in generator coordinates).
  IntMat reduce(const IntMat& v) const;
  bool is_zero_element(const IntMat& v) const;
  bool contains_in_relations(const IntMat& cols) const;  // every column lies in the relation lattice

  InvariantDivisors invariants() const;
  bool is_zero() const;
  std::string describe() const;  // e.g. "Z/2 + Z"

 private:
  const Echelon& relation_echelon() const;

  RingDesc ring_;
  std::size_t gens_ = 0;
  IntMat rel_;
  bool diagonal_ = true;
  mutable std::shared_ptr<const Echelon> echelon_;
  mutable std::shared_ptr<const InvariantDivisors> invariants_;
};

class Morphism {
 public:
  Morphism() = default;
  // Unchecked construction; use make_morphism to validate user input.
  Morphism(FPModule source, FPModule target, IntMat matrix);

  const FPModule& source() const { return src_; }
  const FPModule& target() const { return tgt_; }
  const IntMat& matrix() const { return G_; }
  const RingDesc& ring() const { return src_.ring(); }

  // X with G * P_source = P_target * X (entries mod n over Z/n).
  IntMat witness() const;
  bool well_defined() const;
  IntMat apply(const IntMat& v) const;  // image of an element, reduced

 private:
  FPModule src_;
  FPModule tgt_;
  IntMat G_;
};

FPModule make_module(const RingDesc& ring, const IntMat& relations, std::optional<std::size_t> gens = {});
Morphism make_morphism(const FPModule& source, const FPModule& target, const IntMat& matrix);

Morphism identity(const FPModule& M);
Morphism zero_morphism(const FPModule& M, const FPModule& N);
Morphism compose(const Morphism& g, const Morphism& f);  // g after f
Morphism add(const Morphism& f, const Morphism& g);
Morphism subtract(const Morphism& f, const Morphism& g);
Morphism negate(const Morphism& f);
Morphism scale(const Int& c, const Morphism& f);
bool equal(const Morphism& f, const Morphism& g);
bool is_zero(const Morphism& f);
bool is_mono(const Morphism& f);
bool is_epi(const Morphism& f);
bool is_iso(const Morphism& f);

// Solver for f(z) = v modulo the target relations.
class Preimager {
 public:
  explicit Preimager(const Morphism& f);
  std::optional<IntMat> operator()(const IntMat& v) const;

 private:
  Morphism f_;
  Echelon ech_;
};

// ---------------------------------------------------------------- presentations

// A module together with mutually inverse isomorphisms to another presentation.
struct Presented {
  FPModule module;
  IntMat to_new;    // original coordinates -> module coordinates
  IntMat from_new;  // module coordinates -> original coordinates
};

// Diagonal presentation of coker(rel) where rel already contains n*I over Z/n.
Presented simplify_lattice(const RingDesc& ring, std::size_t gens, const IntMat& effective_relations);
Presented simplify(const FPModule& M);

// (span(sub) + Rel) / (span(denom) + Rel) inside an ambient module.
struct Subquotient {
  FPModule ambient;
  FPModule module;
  IntMat decode;     // ambient coordinates of each module generator
  IntMat basis;      // Z-basis of span(sub) + Rel
  IntMat to_module;  // basis coordinates -> module coordinates
  std::shared_ptr<const Echelon> basis_solver;

  bool contains(const IntMat& v) const;  // v lies in span(sub) + Rel
  IntMat encode(const IntMat& v) const;  // module coordinates of v
};

Subquotient subquotient(const FPModule& ambient, const IntMat& sub, const IntMat& denom);
// Map between subquotients induced by a map of their ambients that carries
// numerator into numerator and denominator into denominator.
Morphism induced_map(const Subquotient& from, const Subquotient& to, const Morphism& ambient_map);
// h : S -> sq.ambient with image in the numerator, viewed as S -> sq.module.
Morphism corestrict(const Morphism& h, const Subquotient& sq);
// The map sq.module -> sq.ambient (only meaningful when the denominator is zero).
Morphism inclusion(const Subquotient& sq);
// sq.module -> T induced by h : sq.ambient -> T, for h killing the denominator.
Morphism from_subquotient(const Subquotient& sq, const Morphism& h);
// The map source -> sq.module sending generator j to the class of cols[j].
Morphism encode_columns(const FPModule& source, const Subquotient& sq, const IntMat& cols);

struct KernelData {
  Subquotient sq;
  Morphism inclusion;
  const FPModule& module() const { return sq.module; }
};
struct CokernelData {
  FPModule module;
  Morphism projection;
  IntMat lifts;  // target coordinates of preimages of each cokernel generator
};
struct EpiMono {
  FPModule image;
  Morphism epi;
  Morphism mono;
};

KernelData kernel(const Morphism& f);
CokernelData cokernel(const Morphism& f);
// Map of cokernels induced by a map of targets that carries image into image.
Morphism cokernel_map(const CokernelData& from, const CokernelData& to, const Morphism& ambient_map);
// r : coker -> T with r . projection = h, for h killing the image.
Morphism from_cokernel(const CokernelData& c, const Morphism& h);
EpiMono epi_mono_factor(const Morphism& f);

// Universal-property factorisations. Throw NotWellDefined when impossible.
Morphism factor_through_mono(const Morphism& mono, const Morphism& h);  // h = mono . result
Morphism factor_through_epi(const Morphism& epi, const Morphism& h);    // h = result . epi

// ---------------------------------------------------------------- invariants

InvariantDivisors canonical_invariants(const FPModule& M);
bool iso_test(const FPModule& M, const FPModule& N);
enum class StableClass { Projectives, Injectives };
bool stably_iso_test(const FPModule& M, const FPModule& N, StableClass cls = StableClass::Projectives);
// Invariants with projective summands removed (prime-power factors of Z/n for Z/n).
std::vector<Int> stable_invariants(const FPModule& M);
std::string invariants_string(const FPModule& M);

// ---------------------------------------------------------------- Hom and tensor

struct HomModule {
  FPModule source;  // M
  FPModule target;  // N
  FPModule module;  // Hom(M, N)
  Presented src_simple;
  Presented tgt_simple;
  struct Slot {
    std::size_t row;  // generator of the simplified target
    std::size_t col;  // generator of the simplified source
    Int multiplier;   // entry of the basic map in that slot
    Int order;        // additive order of the basic map (0 = infinite)
  };
  std::vector<Slot> slots;  // one per generator of module

  Morphism decode(const IntMat& element) const;
  IntMat encode(const Morphism& f) const;
};

HomModule hom_module(const FPModule& M, const FPModule& N);
// Map between Hom modules sending decode(e_k) to fn(decode(e_k)).
Morphism hom_induced(const HomModule& from, const HomModule& to,
                     const std::function<Morphism(const Morphism&)>& fn);
Morphism hom_cov_map(const HomModule& from, const HomModule& to, const Morphism& phi);    // phi . -
Morphism hom_contra_map(const HomModule& from, const HomModule& to, const Morphism& phi);  // - . phi

struct TensorModule {
  FPModule left;
  FPModule right;
  FPModule module;
  Presented left_simple;
  Presented right_simple;
  std::vector<std::pair<std::size_t, std::size_t>> slots;  // (left gen, right gen) per module gen

  IntMat pure(const IntMat& x, const IntMat& y) const;  // coordinates of x (x) y
  // Left/right representatives of each module generator.
  IntMat left_rep(std::size_t k) const;
  IntMat right_rep(std::size_t k) const;
};

TensorModule tensor_module(const FPModule& M, const FPModule& N);
Morphism tensor_map(const TensorModule& from, const TensorModule& to, const Morphism& f, const Morphism& g);

FPModule ring_module(const RingDesc& ring);  // R as a module over itself
HomModule dual(const FPModule& M);           // Hom(M, R)
struct Bidual {
  HomModule first;   // M*
  HomModule second;  // M** = Hom(M*, R)
  Morphism evaluation;
};
Bidual evaluation_map(const FPModule& M);
FPModule transpose(const FPModule& M);

// ---------------------------------------------------------------- lifting problems

// h with p . h = b, where p : B -> C and b : A -> C.
std::optional<Morphism> lift_through(const Morphism& p, const Morphism& b);
// h with h . a = b, where a : A -> B and b : A -> C.
std::optional<Morphism> extend_along(const Morphism& a, const Morphism& b);

Morphism direct_sum(const Morphism& f, const Morphism& g);
FPModule direct_sum(const FPModule& M, const FPModule& N);

}  // namespace fundseq
