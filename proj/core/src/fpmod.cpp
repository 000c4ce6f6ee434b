#include "fundseq/fpmod.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <sstream>

namespace fundseq {

namespace {

void check_same_ring(const RingDesc& a, const RingDesc& b, const char* what) {
  if (!(a == b)) throw Error(ErrorKind::DimensionMismatch, std::string(what) + ": modules over different rings");
}

Int free_order(const RingDesc& ring) { return ring.is_integers() ? Int(0) : ring.modulus(); }

}  // namespace

// ---------------------------------------------------------------- FPModule

FPModule::FPModule(RingDesc ring, std::size_t gens, IntMat relations)
    : ring_(std::move(ring)), gens_(gens), rel_(std::move(relations)) {
  if (rel_.rows() != gens_) {
    if (rel_.rows() == 0 && rel_.cols() == 0)
      rel_ = IntMat(gens_, 0);
    else
      throw Error(ErrorKind::DimensionMismatch, "relation matrix has " + std::to_string(rel_.rows()) +
                                                    " rows for " + std::to_string(gens_) + " generators");
  }
  rel_ = ring_.reduce(rel_);
  // diagonal: every relation is d*e_i with 1 < d (< n), on distinct generators
  std::vector<bool> used(gens_, false);
  diagonal_ = true;
  for (std::size_t j = 0; j < rel_.cols() && diagonal_; ++j) {
    std::size_t nz = 0, at = 0;
    for (std::size_t i = 0; i < gens_; ++i)
      if (rel_(i, j) != 0) {
        ++nz;
        at = i;
      }
    if (nz != 1 || used[at] || rel_(at, j) <= 1 ||
        (ring_.quasi_frobenius() && !mpz_divisible_p(ring_.modulus().get_mpz_t(), rel_(at, j).get_mpz_t()))) {
      diagonal_ = false;
      break;
    }
    used[at] = true;
  }
}

FPModule FPModule::cyclic_sum(const RingDesc& ring, const std::vector<Int>& orders) {
  std::vector<std::size_t> torsion;
  for (std::size_t i = 0; i < orders.size(); ++i)
    if (orders[i] != 0 && !(ring.quasi_frobenius() && orders[i] == ring.modulus())) torsion.push_back(i);
  IntMat rel(orders.size(), torsion.size());
  for (std::size_t k = 0; k < torsion.size(); ++k) rel(torsion[k], k) = orders[torsion[k]];
  return FPModule(ring, orders.size(), rel);
}

IntMat FPModule::relation_lattice() const { return IntMat::hconcat(rel_, ring_.padding(gens_)); }

std::vector<Int> FPModule::generator_orders() const {
  if (!diagonal_) throw Error(ErrorKind::InvalidArgument, "generator_orders on a non-diagonal presentation");
  std::vector<Int> out(gens_, free_order(ring_));
  for (std::size_t j = 0; j < rel_.cols(); ++j)
    for (std::size_t i = 0; i < gens_; ++i)
      if (rel_(i, j) != 0) out[i] = rel_(i, j);
  return out;
}

// The caches are published once with compare-exchange so that a module shared
// between threads stays safe to read; a race only duplicates work.
const Echelon& FPModule::relation_echelon() const {
  auto e = std::atomic_load(&echelon_);
  if (!e) {
    auto fresh = std::make_shared<const Echelon>(relation_lattice());
    if (std::atomic_compare_exchange_strong(&echelon_, &e, fresh)) e = fresh;
  }
  return *e;
}

IntMat FPModule::reduce(const IntMat& v) const {
  if (v.rows() != gens_) throw Error(ErrorKind::DimensionMismatch, "element has wrong length");
  if (diagonal_) {
    IntMat r = v;
    auto orders = generator_orders();
    for (std::size_t i = 0; i < gens_; ++i)
      if (orders[i] != 0)
        for (std::size_t j = 0; j < r.cols(); ++j) mpz_fdiv_r(r(i, j).get_mpz_t(), r(i, j).get_mpz_t(), orders[i].get_mpz_t());
    return r;
  }
  IntMat r(v.rows(), v.cols());
  for (std::size_t j = 0; j < v.cols(); ++j) r.set_col(j, relation_echelon().reduce(ring_.reduce(v.col(j))));
  return r;
}

bool FPModule::is_zero_element(const IntMat& v) const { return reduce(v).is_zero(); }

bool FPModule::contains_in_relations(const IntMat& cols) const {
  for (std::size_t j = 0; j < cols.cols(); ++j)
    if (!is_zero_element(cols.col(j))) return false;
  return true;
}

InvariantDivisors FPModule::invariants() const {
  if (auto cached = std::atomic_load(&invariants_)) return *cached;
  {
    if (diagonal_) {
      // sort the cyclic orders into an invariant factor chain
      std::map<Int, std::vector<unsigned>> primes;  // prime -> exponents
      InvariantDivisors inv;
      for (const Int& d : generator_orders()) {
        if (d == free_order(ring_)) {
          ++inv.free_rank;
          continue;
        }
        for (auto& [p, e] : factorize(d)) primes[p].push_back(e);
      }
      std::size_t len = 0;
      for (auto& [p, es] : primes) {
        std::sort(es.begin(), es.end(), std::greater<>());
        len = std::max(len, es.size());
      }
      std::vector<Int> divs(len, 1);
      for (auto& [p, es] : primes)
        for (std::size_t k = 0; k < es.size(); ++k) {
          Int pk;
          mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), es[k]);
          divs[k] *= pk;
        }
      std::reverse(divs.begin(), divs.end());
      inv.divisors = divs;
      std::atomic_store(&invariants_, std::make_shared<const InvariantDivisors>(inv));
    } else {
      std::atomic_store(&invariants_, std::make_shared<const InvariantDivisors>(invariant_divisors(rel_, ring_)));
    }
  }
  return *std::atomic_load(&invariants_);
}

bool FPModule::is_zero() const {
  auto inv = invariants();
  return inv.divisors.empty() && inv.free_rank == 0;
}

std::string FPModule::describe() const {
  auto inv = invariants();
  if (inv.divisors.empty() && inv.free_rank == 0) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Int& d : inv.divisors) {
    os << (first ? "" : " + ") << "Z/" << d.get_str();
    first = false;
  }
  for (std::size_t i = 0; i < inv.free_rank; ++i) {
    os << (first ? "" : " + ") << ring_.name();
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------- Morphism

Morphism::Morphism(FPModule source, FPModule target, IntMat matrix)
    : src_(std::move(source)), tgt_(std::move(target)), G_(std::move(matrix)) {
  check_same_ring(src_.ring(), tgt_.ring(), "morphism");
  if (G_.rows() != tgt_.gens() || G_.cols() != src_.gens()) {
    if (G_.empty() && (tgt_.gens() == 0 || src_.gens() == 0))
      G_ = IntMat(tgt_.gens(), src_.gens());
    else
      throw Error(ErrorKind::DimensionMismatch, "generator matrix is " + std::to_string(G_.rows()) + "x" +
                                                    std::to_string(G_.cols()) + ", expected " +
                                                    std::to_string(tgt_.gens()) + "x" + std::to_string(src_.gens()));
  }
  G_ = src_.ring().reduce(G_);
}

bool Morphism::well_defined() const { return tgt_.contains_in_relations(G_ * src_.relations()); }

IntMat Morphism::witness() const {
  auto X = solve(tgt_.relations(), G_ * src_.relations(), ring());
  if (!X) throw Error(ErrorKind::NotWellDefined, "relations are not mapped into the target relations");
  return *X;
}

IntMat Morphism::apply(const IntMat& v) const { return tgt_.reduce(G_ * v); }

FPModule make_module(const RingDesc& ring, const IntMat& relations, std::optional<std::size_t> gens) {
  std::size_t g = gens ? *gens : relations.rows();
  if (relations.cols() > 0 && relations.rows() != g)
    throw Error(ErrorKind::DimensionMismatch, "relation matrix rows must equal the generator count");
  return FPModule(ring, g, relations.cols() ? relations : IntMat(g, 0));
}

Morphism make_morphism(const FPModule& source, const FPModule& target, const IntMat& matrix) {
  Morphism f(source, target, matrix);
  if (!f.well_defined()) throw Error(ErrorKind::NotWellDefined, "generator matrix does not respect relations");
  return f;
}

Morphism identity(const FPModule& M) { return Morphism(M, M, IntMat::identity(M.gens())); }
Morphism zero_morphism(const FPModule& M, const FPModule& N) { return Morphism(M, N, IntMat(N.gens(), M.gens())); }

Morphism compose(const Morphism& g, const Morphism& f) {
  if (g.source().gens() != f.target().gens()) throw Error(ErrorKind::DimensionMismatch, "compose: not composable");
  return Morphism(f.source(), g.target(), g.matrix() * f.matrix());
}

Morphism add(const Morphism& f, const Morphism& g) { return Morphism(f.source(), f.target(), f.matrix() + g.matrix()); }
Morphism subtract(const Morphism& f, const Morphism& g) {
  return Morphism(f.source(), f.target(), f.matrix() - g.matrix());
}
Morphism negate(const Morphism& f) { return Morphism(f.source(), f.target(), -f.matrix()); }
Morphism scale(const Int& c, const Morphism& f) { return Morphism(f.source(), f.target(), c * f.matrix()); }

bool equal(const Morphism& f, const Morphism& g) {
  if (f.matrix().rows() != g.matrix().rows() || f.matrix().cols() != g.matrix().cols()) return false;
  return f.target().contains_in_relations(f.matrix() - g.matrix());
}

bool is_zero(const Morphism& f) { return f.target().contains_in_relations(f.matrix()); }
bool is_mono(const Morphism& f) { return kernel(f).module().is_zero(); }
bool is_epi(const Morphism& f) { return cokernel(f).module.is_zero(); }
bool is_iso(const Morphism& f) { return is_mono(f) && is_epi(f); }

Preimager::Preimager(const Morphism& f)
    : f_(f), ech_(IntMat::hconcat(f.matrix(), f.target().relation_lattice())) {}

std::optional<IntMat> Preimager::operator()(const IntMat& v) const {
  auto x = ech_.solve(f_.target().ring().reduce(v));
  if (!x) return std::nullopt;
  return f_.source().reduce(x->row_range(0, f_.source().gens()));
}

// ---------------------------------------------------------------- simplification

Presented simplify_lattice(const RingDesc& ring, std::size_t gens, const IntMat& rel) {
  SNFResult r = snf_integer(rel);
  std::vector<Int> d(gens, 0);
  for (std::size_t i = 0; i < std::min(gens, rel.cols()); ++i) d[i] = r.S(i, i);
  std::vector<std::size_t> kept;
  std::vector<Int> orders;
  for (std::size_t i = 0; i < gens; ++i) {
    if (d[i] == 1) continue;
    kept.push_back(i);
    orders.push_back(d[i]);
  }
  Presented p;
  p.module = FPModule::cyclic_sum(ring, orders);
  p.to_new = r.U.select_rows(kept);
  for (std::size_t k = 0; k < kept.size(); ++k)
    if (orders[k] != 0)
      for (std::size_t j = 0; j < p.to_new.cols(); ++j)
        mpz_fdiv_r(p.to_new(k, j).get_mpz_t(), p.to_new(k, j).get_mpz_t(), orders[k].get_mpz_t());
  p.from_new = ring.reduce(r.Uinv.select_cols(kept));
  return p;
}

Presented simplify(const FPModule& M) {
  if (M.is_diagonal()) return Presented{M, IntMat::identity(M.gens()), IntMat::identity(M.gens())};
  Presented p = simplify_lattice(M.ring(), M.gens(), M.relation_lattice());
  p.from_new = M.reduce(p.from_new);
  return p;
}

// ---------------------------------------------------------------- subquotients

bool Subquotient::contains(const IntMat& v) const { return basis_solver->contains(v); }

IntMat Subquotient::encode(const IntMat& v) const {
  auto y = basis_solver->solve(v);
  if (!y) throw Error(ErrorKind::NotWellDefined, "element outside the subquotient numerator");
  return module.reduce(to_module * *y);
}

Subquotient subquotient(const FPModule& ambient, const IntMat& sub, const IntMat& denom) {
  IntMat rel = ambient.relation_lattice();
  Subquotient sq;
  sq.ambient = ambient;
  sq.basis = Echelon(IntMat::hconcat(ambient.ring().reduce(sub), rel)).lattice_basis();
  sq.basis_solver = std::make_shared<const Echelon>(sq.basis);
  auto Y = sq.basis_solver->solve_all(IntMat::hconcat(ambient.ring().reduce(denom), rel));
  if (!Y) throw Error(ErrorKind::NotWellDefined, "denominator is not contained in the numerator");
  Presented p = simplify_lattice(ambient.ring(), sq.basis.cols(), *Y);
  sq.module = p.module;
  sq.to_module = p.to_new;
  sq.decode = ambient.reduce(sq.basis * p.from_new);
  return sq;
}

Morphism induced_map(const Subquotient& from, const Subquotient& to, const Morphism& ambient_map) {
  IntMat C(to.module.gens(), from.module.gens());
  for (std::size_t k = 0; k < from.module.gens(); ++k) C.set_col(k, to.encode(ambient_map.apply(from.decode.col(k))));
  return Morphism(from.module, to.module, C);
}

Morphism corestrict(const Morphism& h, const Subquotient& sq) {
  IntMat C(sq.module.gens(), h.source().gens());
  for (std::size_t j = 0; j < h.source().gens(); ++j) C.set_col(j, sq.encode(h.matrix().col(j)));
  return Morphism(h.source(), sq.module, C);
}

Morphism inclusion(const Subquotient& sq) { return Morphism(sq.module, sq.ambient, sq.decode); }

Morphism from_subquotient(const Subquotient& sq, const Morphism& h) {
  return Morphism(sq.module, h.target(), h.target().reduce(h.matrix() * sq.decode));
}

Morphism encode_columns(const FPModule& source, const Subquotient& sq, const IntMat& cols) {
  IntMat C(sq.module.gens(), source.gens());
  for (std::size_t j = 0; j < source.gens(); ++j) C.set_col(j, sq.encode(cols.col(j)));
  return Morphism(source, sq.module, C);
}

Morphism cokernel_map(const CokernelData& from, const CokernelData& to, const Morphism& ambient_map) {
  return Morphism(from.module, to.module, to.module.reduce(to.projection.matrix() * ambient_map.matrix() * from.lifts));
}

Morphism from_cokernel(const CokernelData& c, const Morphism& h) {
  return Morphism(c.module, h.target(), h.target().reduce(h.matrix() * c.lifts));
}

KernelData kernel(const Morphism& f) {
  Echelon e(IntMat::hconcat(f.matrix(), f.target().relation_lattice()));
  IntMat K = e.kernel_basis().row_range(0, f.source().gens());
  Subquotient sq = subquotient(f.source(), K, IntMat(f.source().gens(), 0));
  Morphism inc(sq.module, f.source(), sq.decode);
  return KernelData{std::move(sq), std::move(inc)};
}

CokernelData cokernel(const Morphism& f) {
  const FPModule& T = f.target();
  Presented p = simplify_lattice(T.ring(), T.gens(), IntMat::hconcat(T.relation_lattice(), f.matrix()));
  Morphism proj(T, p.module, p.to_new);
  return CokernelData{p.module, proj, T.reduce(p.from_new)};
}

EpiMono epi_mono_factor(const Morphism& f) {
  Subquotient sq = subquotient(f.target(), f.matrix(), IntMat(f.target().gens(), 0));
  IntMat E(sq.module.gens(), f.source().gens());
  for (std::size_t j = 0; j < f.source().gens(); ++j) E.set_col(j, sq.encode(f.matrix().col(j)));
  return EpiMono{sq.module, Morphism(f.source(), sq.module, E), Morphism(sq.module, f.target(), sq.decode)};
}

Morphism factor_through_mono(const Morphism& mono, const Morphism& h) {
  Preimager pre(mono);
  IntMat Z(mono.source().gens(), h.source().gens());
  for (std::size_t j = 0; j < h.source().gens(); ++j) {
    auto z = pre(h.matrix().col(j));
    if (!z) throw Error(ErrorKind::NotWellDefined, "map does not factor through the monomorphism");
    Z.set_col(j, *z);
  }
  return Morphism(h.source(), mono.source(), Z);
}

Morphism factor_through_epi(const Morphism& epi, const Morphism& h) {
  Preimager pre(epi);
  const FPModule& Q = epi.target();
  IntMat C(h.target().gens(), Q.gens());
  for (std::size_t j = 0; j < Q.gens(); ++j) {
    auto x = pre(IntMat::unit_column(Q.gens(), j));
    if (!x) throw Error(ErrorKind::NotWellDefined, "factor_through_epi: map is not surjective");
    C.set_col(j, h.apply(*x));
  }
  Morphism r(Q, h.target(), C);
  if (!r.well_defined() || !equal(compose(r, epi), h))
    throw Error(ErrorKind::NotWellDefined, "map does not vanish on the kernel of the epimorphism");
  return r;
}

// ---------------------------------------------------------------- invariants

InvariantDivisors canonical_invariants(const FPModule& M) { return M.invariants(); }

bool iso_test(const FPModule& M, const FPModule& N) {
  return M.ring() == N.ring() && M.invariants() == N.invariants();
}

std::vector<Int> stable_invariants(const FPModule& M) {
  auto inv = M.invariants();
  if (M.ring().is_integers()) return inv.divisors;
  const Int& n = M.ring().modulus();
  std::map<Int, unsigned> full;
  for (auto& [p, e] : factorize(n)) full[p] = e;
  std::vector<Int> out;
  for (const Int& d : inv.divisors)
    for (auto& [p, e] : factorize(d)) {
      if (full[p] == e) continue;  // p^e is a projective summand of Z/n
      Int pk;
      mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), e);
      out.push_back(pk);
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool stably_iso_test(const FPModule& M, const FPModule& N, StableClass cls) {
  if (!(M.ring() == N.ring())) return false;
  // Z has no nonzero finitely generated injectives.
  if (M.ring().is_integers() && cls == StableClass::Injectives) return iso_test(M, N);
  return stable_invariants(M) == stable_invariants(N);
}

std::string invariants_string(const FPModule& M) {
  auto inv = M.invariants();
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (const Int& d : inv.divisors) {
    os << (first ? "" : ", ") << d.get_str();
    first = false;
  }
  for (std::size_t i = 0; i < inv.free_rank; ++i) {
    os << (first ? "" : ", ") << free_order(M.ring()).get_str();
    first = false;
  }
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------- Hom

namespace {

// Torsion generators first so the resulting presentation is diagonal and
// described by generator_orders().
template <class Slot>
void order_slots(std::vector<Slot>& slots, const std::vector<Int>& orders_in, std::vector<Int>& orders_out,
                 const RingDesc& ring) {
  std::vector<std::size_t> idx(slots.size());
  for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    bool fa = orders_in[a] == free_order(ring), fb = orders_in[b] == free_order(ring);
    return !fa && fb;
  });
  std::vector<Slot> s;
  orders_out.clear();
  for (std::size_t k : idx) {
    s.push_back(slots[k]);
    orders_out.push_back(orders_in[k]);
  }
  slots = std::move(s);
}

}  // namespace

HomModule hom_module(const FPModule& M, const FPModule& N) {
  check_same_ring(M.ring(), N.ring(), "hom_module");
  const RingDesc& ring = M.ring();
  HomModule H;
  H.source = M;
  H.target = N;
  H.src_simple = simplify(M);
  H.tgt_simple = simplify(N);
  auto a = H.src_simple.module.generator_orders();
  auto b = H.tgt_simple.module.generator_orders();
  std::vector<Int> orders;
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a[j] == 0 && b[i] == 0) {
        H.slots.push_back({i, j, 1, 0});
      } else if (a[j] == 0) {
        H.slots.push_back({i, j, 1, b[i]});
      } else if (b[i] == 0) {
        continue;  // no maps from torsion into Z
      } else {
        Int g = gcd(a[j], b[i]);
        if (g == 1) continue;
        H.slots.push_back({i, j, b[i] / g, g});
      }
      orders.push_back(H.slots.back().order);
    }
  std::vector<Int> sorted;
  order_slots(H.slots, orders, sorted, ring);
  H.module = FPModule::cyclic_sum(ring, sorted);
  return H;
}

Morphism HomModule::decode(const IntMat& y) const {
  IntMat Gp(tgt_simple.module.gens(), src_simple.module.gens());
  for (std::size_t k = 0; k < slots.size(); ++k) Gp(slots[k].row, slots[k].col) += y(k, 0) * slots[k].multiplier;
  IntMat G = target.reduce(tgt_simple.from_new * Gp * src_simple.to_new);
  return Morphism(source, target, G);
}

IntMat HomModule::encode(const Morphism& f) const {
  IntMat Gp = tgt_simple.to_new * f.matrix() * src_simple.from_new;
  auto b = tgt_simple.module.generator_orders();
  IntMat y(slots.size(), 1);
  for (std::size_t k = 0; k < slots.size(); ++k) {
    Int e = Gp(slots[k].row, slots[k].col);
    const Int& bi = b[slots[k].row];
    if (bi != 0) mpz_fdiv_r(e.get_mpz_t(), e.get_mpz_t(), bi.get_mpz_t());
    if (!mpz_divisible_p(e.get_mpz_t(), slots[k].multiplier.get_mpz_t()))
      throw Error(ErrorKind::NotWellDefined, "encode: not a module homomorphism");
    y(k, 0) = e / slots[k].multiplier;
  }
  return module.reduce(y);
}

Morphism hom_induced(const HomModule& from, const HomModule& to, const std::function<Morphism(const Morphism&)>& fn) {
  IntMat C(to.module.gens(), from.module.gens());
  for (std::size_t k = 0; k < from.module.gens(); ++k)
    C.set_col(k, to.encode(fn(from.decode(IntMat::unit_column(from.module.gens(), k)))));
  return Morphism(from.module, to.module, C);
}

Morphism hom_cov_map(const HomModule& from, const HomModule& to, const Morphism& phi) {
  return hom_induced(from, to, [&](const Morphism& h) { return compose(phi, h); });
}

Morphism hom_contra_map(const HomModule& from, const HomModule& to, const Morphism& phi) {
  return hom_induced(from, to, [&](const Morphism& h) { return compose(h, phi); });
}

// ---------------------------------------------------------------- tensor

TensorModule tensor_module(const FPModule& M, const FPModule& N) {
  check_same_ring(M.ring(), N.ring(), "tensor_module");
  TensorModule T;
  T.left = M;
  T.right = N;
  T.left_simple = simplify(M);
  T.right_simple = simplify(N);
  auto a = T.left_simple.module.generator_orders();
  auto b = T.right_simple.module.generator_orders();
  std::vector<Int> orders;
  for (std::size_t j = 0; j < a.size(); ++j)
    for (std::size_t i = 0; i < b.size(); ++i) {
      Int g = gcd(a[j], b[i]);
      if (g == 1) continue;
      T.slots.emplace_back(j, i);
      orders.push_back(g);
    }
  std::vector<Int> sorted;
  order_slots(T.slots, orders, sorted, M.ring());
  T.module = FPModule::cyclic_sum(M.ring(), sorted);
  return T;
}

IntMat TensorModule::pure(const IntMat& x, const IntMat& y) const {
  IntMat xp = left_simple.to_new * x, yp = right_simple.to_new * y;
  IntMat out(slots.size(), 1);
  for (std::size_t k = 0; k < slots.size(); ++k) out(k, 0) = xp(slots[k].first, 0) * yp(slots[k].second, 0);
  return module.reduce(out);
}

IntMat TensorModule::left_rep(std::size_t k) const { return left_simple.from_new.col(slots[k].first); }
IntMat TensorModule::right_rep(std::size_t k) const { return right_simple.from_new.col(slots[k].second); }

Morphism tensor_map(const TensorModule& from, const TensorModule& to, const Morphism& f, const Morphism& g) {
  IntMat C(to.module.gens(), from.module.gens());
  for (std::size_t k = 0; k < from.slots.size(); ++k)
    C.set_col(k, to.pure(f.apply(from.left_rep(k)), g.apply(from.right_rep(k))));
  return Morphism(from.module, to.module, C);
}

// ---------------------------------------------------------------- duals

FPModule ring_module(const RingDesc& ring) { return FPModule::free(ring, 1); }

HomModule dual(const FPModule& M) { return hom_module(M, ring_module(M.ring())); }

Bidual evaluation_map(const FPModule& M) {
  Bidual b{dual(M), {}, {}};
  b.second = dual(b.first.module);
  const FPModule& Ms = b.first.module;
  std::vector<IntMat> functionals;
  for (std::size_t k = 0; k < Ms.gens(); ++k) functionals.push_back(b.first.decode(IntMat::unit_column(Ms.gens(), k)).matrix());
  IntMat C(b.second.module.gens(), M.gens());
  for (std::size_t i = 0; i < M.gens(); ++i) {
    IntMat row(1, Ms.gens());
    for (std::size_t k = 0; k < Ms.gens(); ++k) row(0, k) = functionals[k](0, i);
    C.set_col(i, b.second.encode(Morphism(Ms, ring_module(M.ring()), row)));
  }
  b.evaluation = Morphism(M, b.second.module, C);
  return b;
}

FPModule transpose(const FPModule& M) {
  return FPModule(M.ring(), M.relations().cols(), M.relations().transpose());
}

// ---------------------------------------------------------------- lifting

std::optional<Morphism> lift_through(const Morphism& p, const Morphism& b) {
  HomModule HAB = hom_module(b.source(), p.source());
  HomModule HAC = hom_module(b.source(), p.target());
  Morphism push = hom_cov_map(HAB, HAC, p);
  auto y = Preimager(push)(HAC.encode(b));
  if (!y) return std::nullopt;
  return HAB.decode(*y);
}

std::optional<Morphism> extend_along(const Morphism& a, const Morphism& b) {
  HomModule HBC = hom_module(a.target(), b.target());
  HomModule HAC = hom_module(a.source(), b.target());
  Morphism pull = hom_contra_map(HBC, HAC, a);
  auto y = Preimager(pull)(HAC.encode(b));
  if (!y) return std::nullopt;
  return HBC.decode(*y);
}

FPModule direct_sum(const FPModule& M, const FPModule& N) {
  check_same_ring(M.ring(), N.ring(), "direct_sum");
  return FPModule(M.ring(), M.gens() + N.gens(), IntMat::block_diag(M.relations(), N.relations()));
}

Morphism direct_sum(const Morphism& f, const Morphism& g) {
  return Morphism(direct_sum(f.source(), g.source()), direct_sum(f.target(), g.target()),
                  IntMat::block_diag(f.matrix(), g.matrix()));
}

}  // namespace fundseq
