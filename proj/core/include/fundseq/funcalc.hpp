#pragma once

// Symbolic additive functors R-mod -> Ab and the constructions on them:
// stabilizations, satellites, derived functors, defects, the canonical
// transformations rho, lambda, beta, alpha and the Auslander sequences.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fundseq/complex.hpp"
#include "fundseq/report.hpp"
#include "fundseq/resolve.hpp"

namespace fundseq {

enum class Variance { Covariant, Contravariant };
enum class Side { Right, Left };

class FunctorExpr {
 public:
  enum class Kind {
    HomCov,          // (A, -)
    HomContra,       // (-, B)
    TensorLeft,      // A (x) -
    FP,              // coker((B, -) -> (A, -)) for f : A -> B
    FPContra,        // coker((-, A) -> (-, B)) for f : A -> B
    TC,              // ker(A (x) - -> B (x) -) for f : A -> B
    ShiftSigma,      // F . Sigma^k
    ShiftOmega,      // F . Omega^k
    Derived,         // R^i F or L_i F
    SubStab,         // sub-stabilization
    QuotStab,        // quot-stabilization
    Satellite,       // S^i F or S_i F
    ExtFixedFirst,   // Ext^i(A, -)
    TorFixedFirst,   // Tor_i(A, -)
    Cohomology,      // H^n(C, -)
    HomologyTensor,  // H_n(C (x) -)
  };

  FunctorExpr() = default;

  static FunctorExpr hom_cov(const FPModule& A);
  static FunctorExpr hom_contra(const FPModule& B);
  static FunctorExpr tensor_left(const FPModule& A);
  static FunctorExpr fp(const Morphism& f, bool half_exact = false);
  static FunctorExpr fp_contra(const Morphism& f, bool half_exact = false);
  static FunctorExpr tc(const Morphism& f, bool half_exact = false);
  static FunctorExpr shift_sigma(const FunctorExpr& F, int k);
  static FunctorExpr shift_omega(const FunctorExpr& F, int k);
  static FunctorExpr derived(const FunctorExpr& F, int i, Side side);
  static FunctorExpr sub_stab(const FunctorExpr& F);
  static FunctorExpr quot_stab(const FunctorExpr& F);
  static FunctorExpr satellite(const FunctorExpr& F, int i, Side side);
  static FunctorExpr ext_fixed_first(const FPModule& A, int i);
  static FunctorExpr tor_fixed_first(const FPModule& A, int i);
  static FunctorExpr cohomology(const Complex& C, int n);
  static FunctorExpr homology_tensor(const Complex& C, int n);

  Kind kind() const;
  Variance variance() const;
  bool covariant() const { return variance() == Variance::Covariant; }
  bool half_exact() const;  // declared by the constructor, never inferred
  const RingDesc& ring() const;
  std::string describe() const;

  // Constructor arguments; which ones are meaningful depends on kind().
  const FPModule& module() const;        // A or B
  const Morphism& morphism() const;      // f
  const FunctorExpr& inner() const;      // F
  int index() const;                     // k, i or n
  Side side() const;
  const Complex& complex() const;
  const Resolution& resolution() const;  // fixed resolution of A for Ext/Tor

  struct Node;

 private:
  explicit FunctorExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  const Node& node() const;
  std::shared_ptr<const Node> node_;
};

// F(X) together with the coordinates needed to evaluate F on morphisms.
// Evaluation is deterministic: equal (F, X) give identical coordinates.
class Evaluated {
 public:
  struct Payload {
    virtual ~Payload() = default;
  };

  Evaluated() = default;
  Evaluated(FPModule at, FPModule value, std::shared_ptr<const Payload> payload)
      : at_(std::move(at)), value_(std::move(value)), payload_(std::move(payload)) {}

  const FPModule& at() const { return at_; }
  const FPModule& module() const { return value_; }
  template <class T>
  const T& payload() const {
    return dynamic_cast<const T&>(*payload_);
  }

 private:
  FPModule at_;
  FPModule value_;
  std::shared_ptr<const Payload> payload_;
};

Evaluated evaluate(const FunctorExpr& F, const FPModule& X);
// F(phi) for phi : X -> Y between the given evaluations at X and Y. The
// result runs F(X) -> F(Y) for covariant F and F(Y) -> F(X) otherwise.
Morphism evaluate_map(const FunctorExpr& F, const Morphism& phi, const Evaluated& at_source,
                      const Evaluated& at_target);

FPModule eval_obj(const FunctorExpr& F, const FPModule& X);
Morphism eval_mor(const FunctorExpr& F, const Morphism& phi);

struct Stabilization {
  FPModule module;
  Morphism map;  // k : Fbar(X) -> F(X), or q : F(X) -> underline-F(X)
};
Stabilization sub_stabilize(const FunctorExpr& F, const FPModule& X);
Stabilization quot_stabilize(const FunctorExpr& F, const FPModule& X);

// Fbar(X) = coker((B, X) -> (Im f, X)) for F = FP(f), valid over any ring.
struct FPSubStab {
  EpiMono factor;  // f = m e
  HomModule from_target;  // (B, X)
  HomModule from_image;   // (Im f, X)
  CokernelData value;
  Morphism k;  // Fbar(X) -> F(X), induced by (e, X)
};
FPSubStab sub_stabilize_fp(const Morphism& f, const FPModule& X);

// Quot-stabilization of TC(f) with its tensor copresentation
// 0 -> K -> D (x) X -> B (x) X, D = Im f.
struct TCQuotStab {
  EpiMono factor;
  TensorModule image_tensor;   // D (x) X
  TensorModule target_tensor;  // B (x) X
  Morphism copresentation;     // m (x) X
  KernelData value;            // K
  Morphism q;                  // TC(f)(X) -> K, induced by e (x) X
};
TCQuotStab tc_quot_stabilize(const Morphism& f, const FPModule& X);

// w(F) = ker f for FP(f) (HomCov(A) counts as FP(A -> 0), A (x) - as FP(P^T)
// for A = coker P, H^n(C, -) as FP(C_n/B_n -> C_{n-1})); v(F) = F(R) for
// contravariant F. Throws WrongShape otherwise.
FPModule defect(const FunctorExpr& F);
// The presenting morphism of a covariant functor of FP shape, if any.
std::optional<Morphism> fp_presentation(const FunctorExpr& F);

FPModule satellite(const FunctorExpr& F, int i, Side side, const FPModule& X);

// Over Z, for F of FP shape: the map w(F) -> X named by an element of
// R^0F(X) = (w(F), X), in the coordinates of evaluate(derived(F, 0, Right), X).
Morphism defect_hom(const FunctorExpr& F, const Evaluated& R0X, const IntMat& element);

// Canonical transformations at X:
//   rho    : F -> R^0 F
//   lambda : L_0 F -> F
//   beta   : R^0 F -> Fbar . Sigma (covariant) or Fbar . Omega (contravariant)
//   alpha  : underline-F . Omega -> L_0 F (covariant) or underline-F . Sigma -> L_0 F
enum class NatName { Rho, Lambda, Beta, Alpha };
std::string nat_name(NatName n);
// Source and target functors of a canonical transformation.
std::pair<FunctorExpr, FunctorExpr> nat_functors(NatName n, const FunctorExpr& F);
Morphism nat_component(NatName n, const FunctorExpr& F, const FPModule& X);
Morphism rho(const FunctorExpr& F, const FPModule& X);
Morphism lambda(const FunctorExpr& F, const FPModule& X);
Morphism beta(const FunctorExpr& F, const FPModule& X);
Morphism alpha(const FunctorExpr& F, const FPModule& X);

struct NatTransSample {
  std::string name;
  std::vector<Morphism> components;  // at the sources and targets of the sampled morphisms
  std::vector<bool> naturality;      // one verdict per sampled morphism
  bool natural() const;
};
NatTransSample sample_nat_trans(NatName n, const FunctorExpr& F, const std::vector<Morphism>& phis);

// Largest submodule killed by every map A -> R: the kernel of A -> A**.
KernelData torsion_radical(const FPModule& A);

enum class FourTermSide { TensorSide, HomSide };
// Tensor side: 0 -> Ext^1(Tr A, X) -> A (x) X -> (A*, X) -> Ext^2(Tr A, X) -> 0
// Hom side:    0 -> Tor_2(Tr A, X) -> A* (x) X -> (A, X) -> Tor_1(Tr A, X) -> 0
SequenceReport auslander_four_term(const FPModule& A, const FPModule& X, FourTermSide which);
// 0 -> Ext^1(Tr A, R) -> A -> A** -> Ext^2(Tr A, R) -> 0 with the evaluation map.
SequenceReport bidual_sequence(const FPModule& A);

}  // namespace fundseq
