#include "fundseq/funcalc.hpp"

#include <algorithm>

namespace fundseq {

struct FunctorExpr::Node {
  Kind kind = Kind::HomCov;
  Variance variance = Variance::Covariant;
  bool half_exact = false;
  RingDesc ring;
  FPModule module;
  Morphism morphism;
  FunctorExpr inner;
  int index = 0;
  Side side = Side::Right;
  Complex complex;
  Resolution resolution;
};

namespace {

using Kind = FunctorExpr::Kind;
using Payload = Evaluated::Payload;

void need_qf(const RingDesc& ring, const std::string& what) {
  if (!ring.quasi_frobenius())
    throw Error(ErrorKind::UnsupportedRing,
                what + " needs injective resolutions, which exist for finitely generated modules only over a "
                       "self-injective ring; " + ring.name() + " is not one");
}

void need_nonnegative(int i, const char* what) {
  if (i < 0) throw Error(ErrorKind::InvalidArgument, std::string(what) + " index must be non-negative");
}

std::shared_ptr<FunctorExpr::Node> make_node(Kind kind, Variance v, bool half_exact, const RingDesc& ring) {
  auto n = std::make_shared<FunctorExpr::Node>();
  n->kind = kind;
  n->variance = v;
  n->half_exact = half_exact;
  n->ring = ring;
  return n;
}

// ------------------------------------------------------------ payloads

struct HomPayload : Payload {
  explicit HomPayload(HomModule v) : H(std::move(v)) {}
  HomModule H;
};
struct TensorPayload : Payload {
  explicit TensorPayload(TensorModule v) : T(std::move(v)) {}
  TensorModule T;
};
// FP:      ambient = (A, X), other = (B, X), value = coker(other -> ambient)
// FPContra: ambient = (X, B), other = (X, A)
struct FPPayload : Payload {
  HomModule ambient;
  HomModule other;
  CokernelData value;
};
struct TCPayload : Payload {
  TensorModule source;  // A (x) X
  TensorModule target;  // B (x) X
  KernelData value;
};
struct ShiftPayload : Payload {
  Resolution res;
  Evaluated inner;
};
struct DerivedPayload : Payload {
  Resolution res;
  std::vector<Evaluated> terms;  // F at the resolution terms 0..index+1
  Subquotient value;
};
// R^i of an FP functor over a hereditary ring: Ext^i(w(F), -).
struct DerivedFPPayload : Payload {
  Morphism presentation;
  KernelData w;
  ExtGroup ext;
};
struct StabPayload : Payload {
  Morphism resolving;  // container X -> I, or cover P -> X
  Evaluated base;      // F(X)
  Evaluated other;     // F(I) or F(P)
  std::optional<KernelData> kernel;
  std::optional<CokernelData> cokernel;
};
struct FPSubPayload : Payload {
  explicit FPSubPayload(FPSubStab v) : data(std::move(v)) {}
  FPSubStab data;
};
struct SatellitePayload : Payload {
  Resolution res;
  Evaluated shifted;  // F(Sigma^i X) or F(Omega^i X)
  Evaluated term;     // F(I^{i-1}) or F(P_{i-1})
  std::optional<KernelData> kernel;
  std::optional<CokernelData> cokernel;
};
struct ExtPayload : Payload {
  explicit ExtPayload(ExtGroup v) : ext(std::move(v)) {}
  ExtGroup ext;
};
struct TorPayload : Payload {
  explicit TorPayload(TorGroup v) : tor(std::move(v)) {}
  TorGroup tor;
};
struct CohomologyPayload : Payload {
  explicit CohomologyPayload(CochainData v) : data(std::move(v)) {}
  CochainData data;
};
struct HomologyPayload : Payload {
  explicit HomologyPayload(ChainTensorData v) : data(std::move(v)) {}
  ChainTensorData data;
};

template <class T>
Evaluated wrap(const FPModule& X, const FPModule& value, T payload) {
  return Evaluated(X, value, std::make_shared<const T>(std::move(payload)));
}

bool injective_side(const FunctorExpr& F, Side side) {
  // covariant right and contravariant left use injective resolutions
  return (side == Side::Right) == F.covariant();
}

bool use_fp_shortcut(const FunctorExpr& F) {
  return F.covariant() && !F.ring().quasi_frobenius() && fp_presentation(F).has_value();
}


}  // namespace

// ------------------------------------------------------------ FunctorExpr

const FunctorExpr::Node& FunctorExpr::node() const {
  if (!node_) throw Error(ErrorKind::InvalidArgument, "empty functor expression");
  return *node_;
}

FunctorExpr FunctorExpr::hom_cov(const FPModule& A) {
  auto n = make_node(Kind::HomCov, Variance::Covariant, true, A.ring());
  n->module = A;
  return FunctorExpr(n);
}

FunctorExpr FunctorExpr::hom_contra(const FPModule& B) {
  auto n = make_node(Kind::HomContra, Variance::Contravariant, true, B.ring());
  n->module = B;
  return FunctorExpr(n);
}

FunctorExpr FunctorExpr::tensor_left(const FPModule& A) {
  auto n = make_node(Kind::TensorLeft, Variance::Covariant, true, A.ring());
  n->module = A;
  return FunctorExpr(n);
}

FunctorExpr FunctorExpr::fp(const Morphism& f, bool half_exact) {
  auto n = make_node(Kind::FP, Variance::Covariant, half_exact, f.ring());
  n->morphism = f;
  return FunctorExpr(n);
}

FunctorExpr FunctorExpr::fp_contra(const Morphism& f, bool half_exact) {
  auto n = make_node(Kind::FPContra, Variance::Contravariant, half_exact, f.ring());
  n->morphism = f;
  return FunctorExpr(n);
}

FunctorExpr FunctorExpr::tc(const Morphism& f, bool half_exact) {
  auto n = make_node(Kind::TC, Variance::Covariant, half_exact, f.ring());
  n->morphism = f;
  return FunctorExpr(n);
}

FunctorExpr FunctorExpr::shift_sigma(const FunctorExpr& F, int k) {
  need_nonnegative(k, "shift");
  auto n = make_node(Kind::ShiftSigma, F.variance(), false, F.ring());
  n->inner = F;
  n->index = k;
  return FunctorExpr(n);
}

FunctorExpr FunctorExpr::shift_omega(const FunctorExpr& F, int k) {
  need_nonnegative(k, "shift");
  auto n = make_node(Kind::ShiftOmega, F.variance(), false, F.ring());
  n->inner = F;
  n->index = k;
  return FunctorExpr(n);
}

FunctorExpr FunctorExpr::derived(const FunctorExpr& F, int i, Side side) {
  need_nonnegative(i, "derived functor");
  auto n = make_node(Kind::Derived, F.variance(), true, F.ring());
  n->inner = F;
  n->index = i;
  n->side = side;
  return FunctorExpr(n);
}

FunctorExpr FunctorExpr::sub_stab(const FunctorExpr& F) {
  auto n = make_node(Kind::SubStab, F.variance(), false, F.ring());
  n->inner = F;
  return FunctorExpr(n);
}

FunctorExpr FunctorExpr::quot_stab(const FunctorExpr& F) {
  auto n = make_node(Kind::QuotStab, F.variance(), false, F.ring());
  n->inner = F;
  return FunctorExpr(n);
}

FunctorExpr FunctorExpr::satellite(const FunctorExpr& F, int i, Side side) {
  if (i < 1) throw Error(ErrorKind::InvalidArgument, "satellites are indexed from 1");
  auto n = make_node(Kind::Satellite, F.variance(), false, F.ring());
  n->inner = F;
  n->index = i;
  n->side = side;
  return FunctorExpr(n);
}

FunctorExpr FunctorExpr::ext_fixed_first(const FPModule& A, int i) {
  need_nonnegative(i, "Ext");
  auto n = make_node(Kind::ExtFixedFirst, Variance::Covariant, true, A.ring());
  n->module = A;
  n->index = i;
  n->resolution = proj_resolution(A, i + 1);
  return FunctorExpr(n);
}

FunctorExpr FunctorExpr::tor_fixed_first(const FPModule& A, int i) {
  need_nonnegative(i, "Tor");
  auto n = make_node(Kind::TorFixedFirst, Variance::Covariant, true, A.ring());
  n->module = A;
  n->index = i;
  n->resolution = proj_resolution(A, i + 1);
  return FunctorExpr(n);
}

FunctorExpr FunctorExpr::cohomology(const Complex& C, int n) {
  // complexes of projectives make H^n(C, -) a cohomological functor
  auto node = make_node(Kind::Cohomology, Variance::Covariant, C.is_projective(), C.ring());
  node->complex = C;
  node->index = n;
  return FunctorExpr(node);
}

FunctorExpr FunctorExpr::homology_tensor(const Complex& C, int n) {
  auto node = make_node(Kind::HomologyTensor, Variance::Covariant, C.is_projective(), C.ring());
  node->complex = C;
  node->index = n;
  return FunctorExpr(node);
}

FunctorExpr::Kind FunctorExpr::kind() const { return node().kind; }
Variance FunctorExpr::variance() const { return node().variance; }
bool FunctorExpr::half_exact() const { return node().half_exact; }
const RingDesc& FunctorExpr::ring() const { return node().ring; }
const FPModule& FunctorExpr::module() const { return node().module; }
const Morphism& FunctorExpr::morphism() const { return node().morphism; }
const FunctorExpr& FunctorExpr::inner() const { return node().inner; }
int FunctorExpr::index() const { return node().index; }
Side FunctorExpr::side() const { return node().side; }
const Complex& FunctorExpr::complex() const { return node().complex; }
const Resolution& FunctorExpr::resolution() const { return node().resolution; }

std::string FunctorExpr::describe() const {
  const Node& n = node();
  auto map_str = [](const Morphism& f) {
    return "[" + f.source().describe() + " -> " + f.target().describe() + "]";
  };
  const std::string i = std::to_string(n.index);
  switch (n.kind) {
    case Kind::HomCov: return "(" + n.module.describe() + ", -)";
    case Kind::HomContra: return "(-, " + n.module.describe() + ")";
    case Kind::TensorLeft: return n.module.describe() + " (x) -";
    case Kind::FP: return "FP" + map_str(n.morphism);
    case Kind::FPContra: return "FPcontra" + map_str(n.morphism);
    case Kind::TC: return "TC" + map_str(n.morphism);
    case Kind::ShiftSigma: return n.inner.describe() + " . Sigma^" + i;
    case Kind::ShiftOmega: return n.inner.describe() + " . Omega^" + i;
    case Kind::Derived:
      return (n.side == Side::Right ? "R^" + i : "L_" + i) + "(" + n.inner.describe() + ")";
    case Kind::SubStab: return "Fbar(" + n.inner.describe() + ")";
    case Kind::QuotStab: return "Funder(" + n.inner.describe() + ")";
    case Kind::Satellite:
      return (n.side == Side::Right ? "S^" + i : "S_" + i) + "(" + n.inner.describe() + ")";
    case Kind::ExtFixedFirst: return "Ext^" + i + "(" + n.module.describe() + ", -)";
    case Kind::TorFixedFirst: return "Tor_" + i + "(" + n.module.describe() + ", -)";
    case Kind::Cohomology: return "H^" + i + "(C, -)";
    case Kind::HomologyTensor: return "H_" + i + "(C (x) -)";
  }
  return "?";
}

std::optional<Morphism> fp_presentation(const FunctorExpr& F) {
  if (F.kind() == Kind::FP) return F.morphism();
  if (F.kind() == Kind::HomCov) return zero_morphism(F.module(), FPModule::zero(F.ring()));
  if (F.kind() == Kind::TensorLeft) {
    // A (x) - = coker((R^r, -) -> (R^g, -)) along P^T, for A = coker(P : R^r -> R^g)
    const FPModule& A = F.module();
    const IntMat& P = A.relations();
    return Morphism(FPModule::free(F.ring(), A.gens()), FPModule::free(F.ring(), P.cols()), P.transpose());
  }
  if (F.kind() == Kind::Cohomology) {
    // H^n(C, -) = coker((C_{n-1}, -) -> (C_n/B_n, -))
    const Complex& C = F.complex();
    return from_cokernel(cokernel(C.differential(F.index() + 1)), C.differential(F.index()));
  }
  return std::nullopt;
}

namespace {

// For F of FP shape with presentation f : A -> B, translate between maps
// A -> X and elements of F(X).
IntMat fp_element(const FunctorExpr& F, const Evaluated& FX, const Morphism& h) {
  switch (F.kind()) {
    case Kind::FP: {
      const auto& p = FX.payload<FPPayload>();
      return p.value.projection.apply(p.ambient.encode(h));
    }
    case Kind::HomCov: return FX.payload<HomPayload>().H.encode(h);
    case Kind::TensorLeft: {
      const TensorModule& T = FX.payload<TensorPayload>().T;
      IntMat v(T.module.gens(), 1);
      for (std::size_t j = 0; j < h.source().gens(); ++j)
        v = v + T.pure(IntMat::unit_column(h.source().gens(), j), h.matrix().col(j));
      return T.module.reduce(v);
    }
    case Kind::Cohomology: {
      const auto& p = FX.payload<CohomologyPayload>().data;
      Morphism pi = cokernel(F.complex().differential(F.index() + 1)).projection;
      return p.value.encode(p.mid.encode(compose(h, pi)));
    }
    default: throw Error(ErrorKind::WrongShape, F.describe() + " is not of FP shape");
  }
}

Morphism fp_class(const FunctorExpr& F, const Evaluated& FX, std::size_t k) {
  switch (F.kind()) {
    case Kind::FP: {
      const auto& p = FX.payload<FPPayload>();
      return p.ambient.decode(p.value.lifts.col(k));
    }
    case Kind::HomCov: return FX.payload<HomPayload>().H.decode(IntMat::unit_column(FX.module().gens(), k));
    case Kind::TensorLeft: {
      // a (x) y is the map e_j |-> a_j y
      const TensorModule& T = FX.payload<TensorPayload>().T;
      return Morphism(FPModule::free(F.ring(), T.left.gens()), FX.at(), T.right_rep(k) * T.left_rep(k).transpose());
    }
    case Kind::Cohomology: {
      const auto& p = FX.payload<CohomologyPayload>().data;
      Morphism cocycle = p.mid.decode(p.mid.module.reduce(p.value.decode.col(k)));
      return factor_through_epi(cokernel(F.complex().differential(F.index() + 1)).projection, cocycle);
    }
    default: throw Error(ErrorKind::WrongShape, F.describe() + " is not of FP shape");
  }
}

}  // namespace

// ------------------------------------------------------------ evaluation

namespace {

Evaluated evaluate_derived(const FunctorExpr& D, const FPModule& X) {
  const FunctorExpr& F = D.inner();
  const int i = D.index();
  if (injective_side(F, D.side()) && use_fp_shortcut(F)) {
    DerivedFPPayload p;
    p.presentation = *fp_presentation(F);
    p.w = kernel(p.presentation);
    p.ext = ext_group(proj_resolution(p.w.module(), i + 1), X, i);
    FPModule value = p.ext.module();
    return wrap(X, value, std::move(p));
  }
  const bool inj = injective_side(F, D.side());
  if (inj) need_qf(F.ring(), D.describe());
  DerivedPayload p;
  p.res = inj ? inj_resolution(X, i + 1) : proj_resolution(X, i + 1);
  for (int j = 0; j <= i + 1; ++j) {
    if (j < i - 1)
      p.terms.emplace_back();
    else
      p.terms.push_back(evaluate(F, p.res.terms[j]));
  }
  // The complex F(resolution) around position i, oriented so that homology_at applies.
  auto Fd = [&](int j) {  // F applied to the resolution differential between positions j and j+1
    const Morphism& d = p.res.differentials[j];
    if (inj)  // d^j : I^j -> I^{j+1}
      return evaluate_map(F, d, p.terms[j], p.terms[j + 1]);
    return evaluate_map(F, d, p.terms[j + 1], p.terms[j]);  // d_{j+1} : P_{j+1} -> P_j
  };
  const FPModule& mid = p.terms[i].module();
  Morphism in, out;
  // cochain direction (position j -> j+1) when F(d) increases the position
  const bool ascending = (inj == F.covariant());
  if (ascending) {
    in = i > 0 ? Fd(i - 1) : zero_in(mid);
    out = Fd(i);
  } else {
    in = Fd(i);
    out = i > 0 ? Fd(i - 1) : zero_out(mid);
  }
  p.value = homology_at(in, out);
  FPModule value = p.value.module;
  return wrap(X, value, std::move(p));
}

Evaluated evaluate_substab(const FunctorExpr& S, const FPModule& X) {
  const FunctorExpr& F = S.inner();
  if (F.covariant() && !F.ring().quasi_frobenius()) {
    if (auto f = fp_presentation(F)) {
      FPSubPayload p{sub_stabilize_fp(*f, X)};
      FPModule value = p.data.value.module;
      return wrap(X, value, std::move(p));
    }
    need_qf(F.ring(), "the sub-stabilization of a covariant functor");
  }
  StabPayload p;
  p.base = evaluate(F, X);
  Morphism Fmap;
  if (F.covariant()) {
    p.resolving = injective_container(X);
    p.other = evaluate(F, p.resolving.target());
    Fmap = evaluate_map(F, p.resolving, p.base, p.other);
  } else {
    p.resolving = free_cover(X);
    p.other = evaluate(F, p.resolving.source());
    Fmap = evaluate_map(F, p.resolving, p.other, p.base);
  }
  p.kernel = kernel(Fmap);
  FPModule value = p.kernel->module();
  return wrap(X, value, std::move(p));
}

Evaluated evaluate_quotstab(const FunctorExpr& Q, const FPModule& X) {
  const FunctorExpr& F = Q.inner();
  if (!F.covariant()) need_qf(F.ring(), "the quot-stabilization of a contravariant functor");
  StabPayload p;
  p.base = evaluate(F, X);
  Morphism Fmap;
  if (F.covariant()) {
    p.resolving = free_cover(X);
    p.other = evaluate(F, p.resolving.source());
    Fmap = evaluate_map(F, p.resolving, p.other, p.base);
  } else {
    p.resolving = injective_container(X);
    p.other = evaluate(F, p.resolving.target());
    Fmap = evaluate_map(F, p.resolving, p.base, p.other);
  }
  p.cokernel = cokernel(Fmap);
  FPModule value = p.cokernel->module;
  return wrap(X, value, std::move(p));
}

Evaluated evaluate_satellite(const FunctorExpr& S, const FPModule& X) {
  const FunctorExpr& F = S.inner();
  const int i = S.index();
  const bool inj = injective_side(F, S.side());
  if (inj) need_qf(F.ring(), S.describe());
  SatellitePayload p;
  p.res = inj ? inj_resolution(X, i - 1) : proj_resolution(X, i - 1);
  p.shifted = evaluate(F, p.res.shifts[i]);
  p.term = evaluate(F, p.res.terms[i - 1]);
  // covariant right: coker F(e : I^{i-1} -> Sigma^i); covariant left: ker F(m : Omega^i -> P_{i-1})
  // contravariant right: coker F(m); contravariant left: ker F(e)
  const Morphism& edge = inj ? p.res.epis[i - 1] : p.res.monos[i - 1];
  const Evaluated& at_src = inj ? p.term : p.shifted;
  const Evaluated& at_tgt = inj ? p.shifted : p.term;
  Morphism Fedge = evaluate_map(F, edge, at_src, at_tgt);
  const bool takes_cokernel = S.side() == Side::Right;
  FPModule value;
  if (takes_cokernel) {
    p.cokernel = cokernel(Fedge);
    value = p.cokernel->module;
  } else {
    p.kernel = kernel(Fedge);
    value = p.kernel->module();
  }
  return wrap(X, value, std::move(p));
}

}  // namespace

Evaluated evaluate(const FunctorExpr& F, const FPModule& X) {
  if (!(X.ring() == F.ring()))
    throw Error(ErrorKind::InvalidArgument, "functor over " + F.ring().name() + " evaluated at a module over " +
                                                X.ring().name());
  switch (F.kind()) {
    case Kind::HomCov: {
      HomPayload p{hom_module(F.module(), X)};
      FPModule v = p.H.module;
      return wrap(X, v, std::move(p));
    }
    case Kind::HomContra: {
      HomPayload p{hom_module(X, F.module())};
      FPModule v = p.H.module;
      return wrap(X, v, std::move(p));
    }
    case Kind::TensorLeft: {
      TensorPayload p{tensor_module(F.module(), X)};
      FPModule v = p.T.module;
      return wrap(X, v, std::move(p));
    }
    case Kind::FP: {
      const Morphism& f = F.morphism();
      FPPayload p;
      p.ambient = hom_module(f.source(), X);
      p.other = hom_module(f.target(), X);
      p.value = cokernel(hom_contra_map(p.other, p.ambient, f));
      FPModule v = p.value.module;
      return wrap(X, v, std::move(p));
    }
    case Kind::FPContra: {
      const Morphism& f = F.morphism();
      FPPayload p;
      p.ambient = hom_module(X, f.target());
      p.other = hom_module(X, f.source());
      p.value = cokernel(hom_cov_map(p.other, p.ambient, f));
      FPModule v = p.value.module;
      return wrap(X, v, std::move(p));
    }
    case Kind::TC: {
      const Morphism& f = F.morphism();
      TCPayload p;
      p.source = tensor_module(f.source(), X);
      p.target = tensor_module(f.target(), X);
      p.value = kernel(tensor_map(p.source, p.target, f, identity(X)));
      FPModule v = p.value.module();
      return wrap(X, v, std::move(p));
    }
    case Kind::ShiftSigma:
    case Kind::ShiftOmega: {
      const int k = F.index();
      ShiftPayload p;
      if (k == 0) {
        p.inner = evaluate(F.inner(), X);
      } else {
        if (F.kind() == Kind::ShiftSigma) {
          need_qf(F.ring(), "Sigma");
          p.res = inj_resolution(X, k - 1);
        } else {
          p.res = proj_resolution(X, k - 1);
        }
        p.inner = evaluate(F.inner(), p.res.shifts[k]);
      }
      FPModule v = p.inner.module();
      return wrap(X, v, std::move(p));
    }
    case Kind::Derived: return evaluate_derived(F, X);
    case Kind::SubStab: return evaluate_substab(F, X);
    case Kind::QuotStab: return evaluate_quotstab(F, X);
    case Kind::Satellite: return evaluate_satellite(F, X);
    case Kind::ExtFixedFirst: {
      ExtPayload p{ext_group(F.resolution(), X, F.index())};
      FPModule v = p.ext.module();
      return wrap(X, v, std::move(p));
    }
    case Kind::TorFixedFirst: {
      TorPayload p{tor_group(F.resolution(), X, F.index())};
      FPModule v = p.tor.module();
      return wrap(X, v, std::move(p));
    }
    case Kind::Cohomology: {
      CohomologyPayload p{cochain_data(F.complex(), X, F.index())};
      FPModule v = p.data.value.module;
      return wrap(X, v, std::move(p));
    }
    case Kind::HomologyTensor: {
      HomologyPayload p{chain_tensor_data(F.complex(), X, F.index())};
      FPModule v = p.data.value.module;
      return wrap(X, v, std::move(p));
    }
  }
  throw Error(ErrorKind::InvalidArgument, "unknown functor kind");
}

Morphism evaluate_map(const FunctorExpr& F, const Morphism& phi, const Evaluated& ex, const Evaluated& ey) {
  if (phi.source().gens() != ex.at().gens() || phi.target().gens() != ey.at().gens())
    throw Error(ErrorKind::DimensionMismatch, "evaluations do not match the morphism's endpoints");
  const bool cov = F.covariant();
  // "first" is the evaluation the result starts from.
  const Evaluated& first = cov ? ex : ey;
  const Evaluated& second = cov ? ey : ex;
  switch (F.kind()) {
    case Kind::HomCov:
      return hom_cov_map(ex.payload<HomPayload>().H, ey.payload<HomPayload>().H, phi);
    case Kind::HomContra:
      return hom_contra_map(ey.payload<HomPayload>().H, ex.payload<HomPayload>().H, phi);
    case Kind::TensorLeft:
      return tensor_map(ex.payload<TensorPayload>().T, ey.payload<TensorPayload>().T, identity(F.module()), phi);
    case Kind::FP: {
      const auto& px = ex.payload<FPPayload>();
      const auto& py = ey.payload<FPPayload>();
      return cokernel_map(px.value, py.value, hom_cov_map(px.ambient, py.ambient, phi));
    }
    case Kind::FPContra: {
      const auto& px = ex.payload<FPPayload>();
      const auto& py = ey.payload<FPPayload>();
      return cokernel_map(py.value, px.value, hom_contra_map(py.ambient, px.ambient, phi));
    }
    case Kind::TC: {
      const auto& px = ex.payload<TCPayload>();
      const auto& py = ey.payload<TCPayload>();
      Morphism m = tensor_map(px.source, py.source, identity(F.morphism().source()), phi);
      return induced_map(px.value.sq, py.value.sq, m);
    }
    case Kind::ShiftSigma:
    case Kind::ShiftOmega: {
      const auto& px = ex.payload<ShiftPayload>();
      const auto& py = ey.payload<ShiftPayload>();
      const int k = F.index();
      Morphism shifted = k == 0 ? phi : lift_along_resolutions(px.res, py.res, phi).shifts[k];
      return evaluate_map(F.inner(), shifted, px.inner, py.inner);
    }
    case Kind::Derived: {
      const FunctorExpr& G = F.inner();
      const int i = F.index();
      if (injective_side(G, F.side()) && use_fp_shortcut(G)) {
        const auto& px = ex.payload<DerivedFPPayload>();
        const auto& py = ey.payload<DerivedFPPayload>();
        return ext_map_second(px.ext, py.ext, phi);
      }
      const auto& px = ex.payload<DerivedPayload>();
      const auto& py = ey.payload<DerivedPayload>();
      Morphism comp = lift_along_resolutions(px.res, py.res, phi).components[i];
      Morphism m = evaluate_map(G, comp, px.terms[i], py.terms[i]);
      return cov ? induced_map(px.value, py.value, m) : induced_map(py.value, px.value, m);
    }
    case Kind::SubStab: {
      const FunctorExpr& G = F.inner();
      if (G.covariant() && !G.ring().quasi_frobenius()) {
        const auto& px = ex.payload<FPSubPayload>().data;
        const auto& py = ey.payload<FPSubPayload>().data;
        return cokernel_map(px.value, py.value, hom_cov_map(px.from_image, py.from_image, phi));
      }
      const auto& pf = first.payload<StabPayload>();
      const auto& ps = second.payload<StabPayload>();
      Morphism m = evaluate_map(G, phi, ex.payload<StabPayload>().base, ey.payload<StabPayload>().base);
      return induced_map(pf.kernel->sq, ps.kernel->sq, m);
    }
    case Kind::QuotStab: {
      const auto& pf = first.payload<StabPayload>();
      const auto& ps = second.payload<StabPayload>();
      Morphism m = evaluate_map(F.inner(), phi, ex.payload<StabPayload>().base, ey.payload<StabPayload>().base);
      return cokernel_map(*pf.cokernel, *ps.cokernel, m);
    }
    case Kind::Satellite: {
      const auto& px = ex.payload<SatellitePayload>();
      const auto& py = ey.payload<SatellitePayload>();
      const int i = F.index();
      Morphism shifted = lift_along_resolutions(px.res, py.res, phi).shifts[i];
      Morphism m = evaluate_map(F.inner(), shifted, px.shifted, py.shifted);
      const auto& pf = first.payload<SatellitePayload>();
      const auto& ps = second.payload<SatellitePayload>();
      if (pf.cokernel) return cokernel_map(*pf.cokernel, *ps.cokernel, m);
      return induced_map(pf.kernel->sq, ps.kernel->sq, m);
    }
    case Kind::ExtFixedFirst:
      return ext_map_second(ex.payload<ExtPayload>().ext, ey.payload<ExtPayload>().ext, phi);
    case Kind::TorFixedFirst:
      return tor_map_second(ex.payload<TorPayload>().tor, ey.payload<TorPayload>().tor, phi);
    case Kind::Cohomology: {
      const auto& px = ex.payload<CohomologyPayload>().data;
      const auto& py = ey.payload<CohomologyPayload>().data;
      return induced_map(px.value, py.value, hom_cov_map(px.mid, py.mid, phi));
    }
    case Kind::HomologyTensor: {
      const auto& px = ex.payload<HomologyPayload>().data;
      const auto& py = ey.payload<HomologyPayload>().data;
      const FPModule& Cn = F.complex().term(F.index());
      return induced_map(px.value, py.value, tensor_map(px.mid, py.mid, identity(Cn), phi));
    }
  }
  throw Error(ErrorKind::InvalidArgument, "unknown functor kind");
}

FPModule eval_obj(const FunctorExpr& F, const FPModule& X) { return evaluate(F, X).module(); }

Morphism eval_mor(const FunctorExpr& F, const Morphism& phi) {
  return evaluate_map(F, phi, evaluate(F, phi.source()), evaluate(F, phi.target()));
}

// ------------------------------------------------------------ stabilizations

FPSubStab sub_stabilize_fp(const Morphism& f, const FPModule& X) {
  FPSubStab s;
  s.factor = epi_mono_factor(f);
  s.from_target = hom_module(f.target(), X);
  s.from_image = hom_module(s.factor.image, X);
  s.value = cokernel(hom_contra_map(s.from_target, s.from_image, s.factor.mono));
  Evaluated FX = evaluate(FunctorExpr::fp(f), X);
  const auto& p = FX.payload<FPPayload>();
  IntMat K(FX.module().gens(), s.value.module.gens());
  for (std::size_t k = 0; k < s.value.module.gens(); ++k) {
    Morphism h = s.from_image.decode(s.value.lifts.col(k));
    K.set_col(k, p.value.projection.apply(p.ambient.encode(compose(h, s.factor.epi))));
  }
  s.k = Morphism(s.value.module, FX.module(), K);
  return s;
}

Stabilization sub_stabilize(const FunctorExpr& F, const FPModule& X) {
  Evaluated S = evaluate(FunctorExpr::sub_stab(F), X);
  if (F.covariant() && !F.ring().quasi_frobenius()) {
    const auto& d = S.payload<FPSubPayload>().data;
    if (F.kind() == Kind::FP) return {S.module(), d.k};
    Evaluated FX = evaluate(F, X);
    IntMat K(FX.module().gens(), S.module().gens());
    for (std::size_t k = 0; k < S.module().gens(); ++k) {
      Morphism h = d.from_image.decode(d.value.lifts.col(k));
      K.set_col(k, fp_element(F, FX, compose(h, d.factor.epi)));
    }
    return {S.module(), Morphism(S.module(), FX.module(), FX.module().reduce(K))};
  }
  const auto& p = S.payload<StabPayload>();
  return {S.module(), p.kernel->inclusion};
}

Stabilization quot_stabilize(const FunctorExpr& F, const FPModule& X) {
  Evaluated Q = evaluate(FunctorExpr::quot_stab(F), X);
  return {Q.module(), Q.payload<StabPayload>().cokernel->projection};
}

TCQuotStab tc_quot_stabilize(const Morphism& f, const FPModule& X) {
  TCQuotStab t;
  t.factor = epi_mono_factor(f);
  t.image_tensor = tensor_module(t.factor.image, X);
  t.target_tensor = tensor_module(f.target(), X);
  t.copresentation = tensor_map(t.image_tensor, t.target_tensor, t.factor.mono, identity(X));
  t.value = kernel(t.copresentation);
  Evaluated FX = evaluate(FunctorExpr::tc(f), X);
  const auto& p = FX.payload<TCPayload>();
  Morphism e = tensor_map(p.source, t.image_tensor, t.factor.epi, identity(X));
  t.q = corestrict(compose(e, p.value.inclusion), t.value.sq);
  return t;
}

FPModule defect(const FunctorExpr& F) {
  if (!F.covariant()) return eval_obj(F, ring_module(F.ring()));
  if (auto f = fp_presentation(F)) return kernel(*f).module();
  throw Error(ErrorKind::WrongShape, "defect is defined for FP functors and contravariant functors, not " + F.describe());
}

FPModule satellite(const FunctorExpr& F, int i, Side side, const FPModule& X) {
  return eval_obj(FunctorExpr::satellite(F, i, side), X);
}

// ------------------------------------------------------------ canonical transformations

std::string nat_name(NatName n) {
  switch (n) {
    case NatName::Rho: return "rho";
    case NatName::Lambda: return "lambda";
    case NatName::Beta: return "beta";
    case NatName::Alpha: return "alpha";
  }
  return "?";
}

std::pair<FunctorExpr, FunctorExpr> nat_functors(NatName n, const FunctorExpr& F) {
  switch (n) {
    case NatName::Rho: return {F, FunctorExpr::derived(F, 0, Side::Right)};
    case NatName::Lambda: return {FunctorExpr::derived(F, 0, Side::Left), F};
    case NatName::Beta: {
      FunctorExpr sub = FunctorExpr::sub_stab(F);
      return {FunctorExpr::derived(F, 0, Side::Right),
              F.covariant() ? FunctorExpr::shift_sigma(sub, 1) : FunctorExpr::shift_omega(sub, 1)};
    }
    case NatName::Alpha: {
      FunctorExpr quot = FunctorExpr::quot_stab(F);
      return {F.covariant() ? FunctorExpr::shift_omega(quot, 1) : FunctorExpr::shift_sigma(quot, 1),
              FunctorExpr::derived(F, 0, Side::Left)};
    }
  }
  throw Error(ErrorKind::InvalidArgument, "unknown transformation");
}

namespace {

Morphism rho_at(const FunctorExpr& F, const Evaluated& FX, const Evaluated& R0) {
  if (F.covariant() && use_fp_shortcut(F)) {
    // [h] in coker((B, X) -> (A, X)) goes to h restricted to w(F), pulled back to P_0
    const auto& p = R0.payload<DerivedFPPayload>();
    const ExtGroup& E = p.ext;
    Morphism to_w = compose(p.w.inclusion, E.resolution.epis[0]);  // P_0 -> w -> A
    IntMat C(R0.module().gens(), FX.module().gens());
    for (std::size_t k = 0; k < FX.module().gens(); ++k) {
      Morphism h = fp_class(F, FX, k);
      C.set_col(k, E.group.encode(E.cochains.encode(compose(h, to_w))));
    }
    return Morphism(FX.module(), R0.module(), C);
  }
  const auto& p = R0.payload<DerivedPayload>();
  const Morphism& aug = p.res.augmentation();
  // covariant: F(iota_0) : F(X) -> F(I^0); contravariant: F(pi_0) : F(X) -> F(P_0)
  Morphism Faug = F.covariant() ? evaluate_map(F, aug, FX, p.terms[0]) : evaluate_map(F, aug, p.terms[0], FX);
  return corestrict(Faug, p.value);
}

Morphism lambda_at(const FunctorExpr& F, const Evaluated& L0, const Evaluated& FX) {
  const auto& p = L0.payload<DerivedPayload>();
  const Morphism& aug = p.res.augmentation();
  // covariant: F(pi_0) : F(P_0) -> F(X); contravariant: F(iota_0) : F(I^0) -> F(X)
  Morphism Faug = F.covariant() ? evaluate_map(F, aug, p.terms[0], FX) : evaluate_map(F, aug, FX, p.terms[0]);
  return from_subquotient(p.value, Faug);
}

Morphism beta_at(const FunctorExpr& F, const Evaluated& R0, const Evaluated& target) {
  const auto& p = R0.payload<DerivedPayload>();
  const auto& stab = target.payload<ShiftPayload>().inner.payload<StabPayload>();
  // covariant: F(e_0) : F(I^0) -> F(Sigma X); contravariant: F(m_0) : F(P_0) -> F(Omega X)
  Morphism edge = F.covariant() ? evaluate_map(F, p.res.epis[0], p.terms[0], stab.base)
                                : evaluate_map(F, p.res.monos[0], stab.base, p.terms[0]);
  return corestrict(from_subquotient(p.value, edge), stab.kernel->sq);
}

Morphism alpha_at(const FunctorExpr& F, const Evaluated& source, const Evaluated& L0) {
  const auto& p = L0.payload<DerivedPayload>();
  const auto& stab = source.payload<ShiftPayload>().inner.payload<StabPayload>();
  // covariant: F(m_0) : F(Omega X) -> F(P_0); contravariant: F(e_0) : F(Sigma X) -> F(I^0)
  Morphism edge = F.covariant() ? evaluate_map(F, p.res.monos[0], stab.base, p.terms[0])
                                : evaluate_map(F, p.res.epis[0], p.terms[0], stab.base);
  return encode_columns(stab.cokernel->module, p.value, edge.matrix() * stab.cokernel->lifts);
}

Morphism component(NatName n, const FunctorExpr& F, const Evaluated& S, const Evaluated& T) {
  switch (n) {
    case NatName::Rho: return rho_at(F, S, T);
    case NatName::Lambda: return lambda_at(F, S, T);
    case NatName::Beta:
      if (F.covariant()) need_qf(F.ring(), "beta");
      return beta_at(F, S, T);
    case NatName::Alpha:
      if (!F.covariant()) need_qf(F.ring(), "alpha");
      return alpha_at(F, S, T);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown transformation");
}

}  // namespace

Morphism nat_component(NatName n, const FunctorExpr& F, const FPModule& X) {
  auto [S, T] = nat_functors(n, F);
  return component(n, F, evaluate(S, X), evaluate(T, X));
}

Morphism defect_hom(const FunctorExpr& F, const Evaluated& R0X, const IntMat& element) {
  if (!(F.covariant() && use_fp_shortcut(F)))
    throw Error(ErrorKind::WrongShape, "defect_hom needs a covariant FP functor over Z");
  const auto& p = R0X.payload<DerivedFPPayload>();
  const ExtGroup& E = p.ext;
  IntMat cochain = E.group.ambient.reduce(E.group.decode * element);
  return factor_through_epi(E.resolution.epis[0], E.cochains.decode(cochain));
}

Morphism rho(const FunctorExpr& F, const FPModule& X) { return nat_component(NatName::Rho, F, X); }
Morphism lambda(const FunctorExpr& F, const FPModule& X) { return nat_component(NatName::Lambda, F, X); }
Morphism beta(const FunctorExpr& F, const FPModule& X) { return nat_component(NatName::Beta, F, X); }
Morphism alpha(const FunctorExpr& F, const FPModule& X) { return nat_component(NatName::Alpha, F, X); }

bool NatTransSample::natural() const {
  return std::all_of(naturality.begin(), naturality.end(), [](bool b) { return b; });
}

NatTransSample sample_nat_trans(NatName n, const FunctorExpr& F, const std::vector<Morphism>& phis) {
  auto [S, T] = nat_functors(n, F);
  NatTransSample out;
  out.name = nat_name(n);
  for (const Morphism& phi : phis) {
    Evaluated SX = evaluate(S, phi.source()), SY = evaluate(S, phi.target());
    Evaluated TX = evaluate(T, phi.source()), TY = evaluate(T, phi.target());
    Morphism eX = component(n, F, SX, TX), eY = component(n, F, SY, TY);
    Morphism Sphi = evaluate_map(S, phi, SX, SY), Tphi = evaluate_map(T, phi, TX, TY);
    bool ok = F.covariant() ? equal(compose(eY, Sphi), compose(Tphi, eX)) : equal(compose(eX, Sphi), compose(Tphi, eY));
    out.components.push_back(eX);
    out.components.push_back(eY);
    out.naturality.push_back(ok);
  }
  return out;
}

KernelData torsion_radical(const FPModule& A) { return kernel(evaluation_map(A).evaluation); }

// ------------------------------------------------------------ Auslander sequences

namespace {

// Shared data for sequences built from the presentation resolution of Tr A:
// P_1 = R^g -> P_0 = R^r is the transposed presentation, and Omega^2 = ker
// of it is identified with A* = (A, R).
struct TransposeData {
  FPModule A;
  HomModule dual;  // A*
  Resolution res;  // of Tr A
  Morphism theta;  // Omega^2 -> A*

  explicit TransposeData(const FPModule& a) : A(a), dual(fundseq::dual(a)) {
    res = presentation_resolution(transpose(A), 3);
    const Morphism& m1 = res.monos[1];  // Omega^2 >-> P_1 = R^g
    const FPModule R = ring_module(A.ring());
    IntMat T(dual.module.gens(), m1.source().gens());
    for (std::size_t s = 0; s < m1.source().gens(); ++s)
      T.set_col(s, dual.encode(Morphism(A, R, m1.matrix().col(s).transpose())));
    theta = Morphism(m1.source(), dual.module, T);
  }
  Morphism theta_pi2() const { return compose(theta, res.epis[2]); }  // P_2 -> A*
};

}  // namespace

SequenceReport auslander_four_term(const FPModule& A, const FPModule& X, FourTermSide which) {
  TransposeData td(A);
  const std::size_t g = A.gens();
  const FPModule zero = FPModule::zero(A.ring());
  if (which == FourTermSide::TensorSide) {
    ExtGroup E1 = ext_group(td.res, X, 1), E2 = ext_group(td.res, X, 2);
    TensorModule AX = tensor_module(A, X);
    HomModule H = hom_module(td.dual.module, X);
    // Ext^1 -> A (x) X : z |-> sum_j a_j (x) z(e_j)
    IntMat M1(AX.module.gens(), E1.module().gens());
    for (std::size_t k = 0; k < E1.module().gens(); ++k) {
      Morphism z = E1.cochains.decode(E1.group.decode.col(k));
      IntMat v(AX.module.gens(), 1);
      for (std::size_t j = 0; j < g; ++j) v = v + AX.pure(IntMat::unit_column(g, j), z.matrix().col(j));
      M1.set_col(k, AX.module.reduce(v));
    }
    // A (x) X -> (A*, X) : a (x) x |-> (psi |-> psi(a) x)
    IntMat M2(H.module.gens(), AX.module.gens());
    for (std::size_t t = 0; t < AX.module.gens(); ++t) {
      IntMat a = AX.left_rep(t), x = AX.right_rep(t);
      IntMat G(X.gens(), td.dual.module.gens());
      for (std::size_t k = 0; k < td.dual.module.gens(); ++k) {
        Int c = (td.dual.decode(IntMat::unit_column(td.dual.module.gens(), k)).matrix() * a)(0, 0);
        G.set_col(k, c * x);
      }
      M2.set_col(t, H.encode(Morphism(td.dual.module, X, X.reduce(G))));
    }
    // (A*, X) -> Ext^2 : psi |-> psi theta pi_2
    Morphism tp = td.theta_pi2();
    IntMat M3(E2.module().gens(), H.module.gens());
    for (std::size_t u = 0; u < H.module.gens(); ++u) {
      Morphism psi = H.decode(IntMat::unit_column(H.module.gens(), u));
      M3.set_col(u, E2.group.encode(E2.cochains.encode(compose(psi, tp))));
    }
    return SequenceBuilder("four-term-tensor", 0)
        .node("0", zero)
        .then(zero_in(E1.module()), "Ext^1(TrA,X)")
        .then(Morphism(E1.module(), AX.module, M1), "A(x)X")
        .then(Morphism(AX.module, H.module, M2), "(A*,X)")
        .then(Morphism(H.module, E2.module(), M3), "Ext^2(TrA,X)")
        .then(zero_out(E2.module()), "0")
        .build();
  }
  TorGroup T2 = tor_group(td.res, X, 2), T1 = tor_group(td.res, X, 1);
  TensorModule DX = tensor_module(td.dual.module, X);
  HomModule H = hom_module(A, X);
  // Tor_2 -> A* (x) X through theta pi_2
  Morphism m1 = from_subquotient(T2.group, tensor_map(T2.chains, DX, td.theta_pi2(), identity(X)));
  // A* (x) X -> (A, X) : psi (x) x |-> (a |-> psi(a) x)
  IntMat M2(H.module.gens(), DX.module.gens());
  for (std::size_t t = 0; t < DX.module.gens(); ++t) {
    Morphism psi = td.dual.decode(DX.left_rep(t));
    IntMat x = DX.right_rep(t);
    IntMat G(X.gens(), g);
    for (std::size_t j = 0; j < g; ++j) G.set_col(j, psi.matrix()(0, j) * x);
    M2.set_col(t, H.encode(Morphism(A, X, X.reduce(G))));
  }
  // (A, X) -> Tor_1 : f |-> sum_j e_j (x) f(a_j)
  IntMat M3(T1.module().gens(), H.module.gens());
  for (std::size_t u = 0; u < H.module.gens(); ++u) {
    Morphism f = H.decode(IntMat::unit_column(H.module.gens(), u));
    IntMat v(T1.chains.module.gens(), 1);
    for (std::size_t j = 0; j < g; ++j) v = v + T1.chains.pure(IntMat::unit_column(g, j), f.matrix().col(j));
    M3.set_col(u, T1.group.encode(v));
  }
  return SequenceBuilder("four-term-hom", 0)
      .node("0", zero)
      .then(zero_in(T2.module()), "Tor_2(TrA,X)")
      .then(m1, "A*(x)X")
      .then(Morphism(DX.module, H.module, M2), "(A,X)")
      .then(Morphism(H.module, T1.module(), M3), "Tor_1(TrA,X)")
      .then(zero_out(T1.module()), "0")
      .build();
}

SequenceReport bidual_sequence(const FPModule& A) {
  TransposeData td(A);
  const std::size_t g = A.gens();
  const FPModule R = ring_module(A.ring());
  ExtGroup E1 = ext_group(td.res, R, 1), E2 = ext_group(td.res, R, 2);
  Bidual bd = evaluation_map(A);
  // Ext^1(Tr A, R) -> A : z |-> sum_j z(e_j) a_j
  IntMat M1(g, E1.module().gens());
  for (std::size_t k = 0; k < E1.module().gens(); ++k) {
    Morphism z = E1.cochains.decode(E1.group.decode.col(k));
    M1.set_col(k, A.reduce(z.matrix().transpose()));
  }
  // A** -> Ext^2(Tr A, R) : psi |-> psi theta pi_2
  Morphism tp = td.theta_pi2();
  const HomModule& H = bd.second;
  IntMat M3(E2.module().gens(), H.module.gens());
  for (std::size_t u = 0; u < H.module.gens(); ++u) {
    Morphism psi = H.decode(IntMat::unit_column(H.module.gens(), u));
    M3.set_col(u, E2.group.encode(E2.cochains.encode(compose(psi, tp))));
  }
  return SequenceBuilder("bidual", 0)
      .node("0", FPModule::zero(A.ring()))
      .then(zero_in(E1.module()), "Ext^1(TrA,R)")
      .then(Morphism(E1.module(), A, M1), "A")
      .then(bd.evaluation, "A**")
      .then(Morphism(H.module, E2.module(), M3), "Ext^2(TrA,R)")
      .then(zero_out(E2.module()), "0")
      .build();
}

}  // namespace fundseq
