#include "fundseq/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

#include "fundseq/archeck.hpp"
#include "fundseq/random.hpp"
#include "fundseq/sequences.hpp"
#include "fundseq/uct.hpp"
#include "json_doc.hpp"

namespace fundseq {

namespace {

using doc::Json;
using OJson = nlohmann::ordered_json;

struct Check {
  std::string property;
  bool holds = false;
  std::string node;
};

class Recorder {
 public:
  void input(const std::string& key, Json value) { inputs_[key] = std::move(value); }
  void check(const std::string& property, bool holds, std::string node = "") {
    checks_.push_back({property, holds, std::move(node)});
  }
  // everywhere: exactness at every node, not only where the theorem demands it.
  void sequence(const std::string& property, const SequenceReport& r, bool everywhere) {
    bool ok = r.passes() && (!everywhere || r.exact());
    std::string node;
    if (!ok) {
      node = r.first_failure();
      for (std::size_t k = 0; node.empty() && k < r.nodes.size(); ++k)
        if (!r.exact_at[k]) node = r.node_label(k);
    }
    check(property, ok, node);
  }

  const Json& inputs() const { return inputs_; }
  const std::vector<Check>& checks() const { return checks_; }

 private:
  Json inputs_ = Json::object();
  std::vector<Check> checks_;
};

struct Context {
  InstanceGenerator& gen;
  Recorder& rec;
  const RingDesc& ring;
  int depth;
};

struct SuiteDef {
  std::string name;
  std::string description;
  std::vector<std::pair<RingDesc, std::size_t>> rings;  // default rings and instance counts
  std::function<bool(const RingDesc&)> supports;
  int depth = kDefaultDepth;
  std::function<void(InstanceSpec&)> bounds;
  std::function<void(Context&)> instance;
  std::function<void(Recorder&)> fixed;  // worked instances, run once
};

const RingDesc Z = RingDesc::integers();
RingDesc zmod(long n) { return RingDesc::mod(n); }
bool any_ring(const RingDesc&) { return true; }
bool qf_only(const RingDesc& R) { return R.quasi_frobenius(); }
bool z_only(const RingDesc& R) { return R.is_integers(); }

std::string idx(const std::string& base, int i) { return base + "^" + std::to_string(i); }

Json module_list(const std::vector<FPModule>& Ms) {
  Json a = Json::array();
  for (const auto& M : Ms) a.push_back(doc::to_json(M));
  return a;
}

// ------------------------------------------------------------ suites

void circular(Context& c) {
  auto [f, g] = c.gen.composable_pair();
  c.rec.input("f", doc::to_json(f));
  c.rec.input("g", doc::to_json(g));
  c.rec.sequence("circular sequence exact", circular_sequence(f, g), true);
}

void right_fundamental(Context& c) {
  FPModule A = c.gen.module();
  std::vector<FPModule> Bs;
  for (int k = 0; k < 4; ++k) Bs.push_back(c.gen.module());
  c.rec.input("A", doc::to_json(A));
  c.rec.input("B", module_list(Bs));
  FunctorExpr H = FunctorExpr::hom_cov(A), T = FunctorExpr::tensor_left(A);
  for (const FPModule& B : Bs) {
    c.rec.sequence("(A,-) rows exact", right_fund_cov(H, B, c.depth), true);
    c.rec.check("(A,-) Fbar(B) = 0", sub_stabilize(H, B).module.is_zero(), "Fbar(B)");
    c.rec.check("(A,-) rho iso", is_iso(rho(H, B)), "R^0F(B)");
    SequenceReport r = right_fund_cov(T, B, c.depth);
    c.rec.sequence("A (x) - rows exact", r, true);
    for (int i = 1; i < c.depth; ++i)
      c.rec.check("A (x) - S^iF(B) = 0", satellite(T, i, Side::Right, B).is_zero(), idx("S", i) + "F(B)");
    // R^iF -> Fbar Sigma^{i+1} for i >= 1 (at i = 0 its kernel is the image of rho)
    for (int i = 1; i < c.depth; ++i) {
      const std::string Ri = idx("R", i) + "F(B)";
      FPModule R = eval_obj(FunctorExpr::derived(T, i, Side::Right), B);
      FPModule S = sub_stabilize(T, cosyzygy(B, i + 1)).module;
      c.rec.check("A (x) - R^iF(B) = Fbar(Sigma^{i+1}B)", iso_test(R, S), Ri);
      for (std::size_t k = 0; k + 1 < r.nodes.size(); ++k)
        if (r.nodes[k].label == Ri) c.rec.check("A (x) - R^iF -> Fbar Sigma^{i+1} iso", is_iso(r.maps[k]), r.node_label(k));
    }
  }
}

void left_fundamental(Context& c) {
  FPModule A = c.gen.module(), B = c.gen.module();
  c.rec.input("A", doc::to_json(A));
  c.rec.input("B", doc::to_json(B));
  FunctorExpr H = FunctorExpr::hom_cov(A), T = FunctorExpr::tensor_left(A);
  c.rec.sequence("(A,-) left sequence exact", left_fund_cov(H, B, c.depth), true);
  c.rec.sequence("A (x) - left sequence exact", left_fund_cov(T, B, c.depth), true);
  c.rec.check("A (x) - lambda iso", is_iso(lambda(T, B)), "L_0F(B)");
  for (int i = 0; i < c.depth; ++i)
    c.rec.check("L_i(A (x) -)(B) = Tor_i(A,B)", iso_test(eval_obj(FunctorExpr::derived(T, i, Side::Left), B), tor(A, B, i)),
                "L_" + std::to_string(i) + "F(B)");
}

void fp_identifications(Context& c) {
  FPModule A = c.gen.module();
  Morphism f = c.gen.morphism(A, c.gen.module());
  std::vector<FPModule> Xs;
  for (int k = 0; k < 5; ++k) Xs.push_back(c.gen.module());
  c.rec.input("f", doc::to_json(f));
  c.rec.input("X", module_list(Xs));
  FunctorExpr F = FunctorExpr::fp(f);
  FPModule w = defect(F);
  for (const FPModule& X : Xs) {
    c.rec.check("R^0F = (w(F),-)", iso_test(eval_obj(FunctorExpr::derived(F, 0, Side::Right), X), hom_module(w, X).module),
                "R^0F(X)");
    if (c.ring.quasi_frobenius()) {
      for (int i = 1; i <= 3; ++i)
        c.rec.check("R^iF = Ext^i(w(F),-)", iso_test(eval_obj(FunctorExpr::derived(F, i, Side::Right), X), ext(w, X, i)),
                    idx("R", i) + "F(X)");
      c.rec.check("sub_stabilize_fp = sub_stabilize",
                  iso_test(sub_stabilize_fp(f, X).value.module, sub_stabilize(F, X).module), "Fbar(X)");
    } else {
      // exact except possibly at R^0F and R^1F, since FP(f) need not be half-exact
      c.rec.sequence("fundamental sequence over Z", right_fund_cov(F, X, 2), false);
    }
  }
}

void auslander(Context& c) {
  FPModule A = c.gen.module(), X = c.gen.module();
  c.rec.input("A", doc::to_json(A));
  c.rec.input("X", doc::to_json(X));
  c.rec.sequence("tensor-side four-term exact", auslander_four_term(A, X, FourTermSide::TensorSide), true);
  c.rec.sequence("hom-side four-term exact", auslander_four_term(A, X, FourTermSide::HomSide), true);
  FPModule TrA = transpose(A);
  c.rec.check("Fbar(A (x) -)(X) = Ext^1(Tr A, X)",
              iso_test(sub_stabilize(FunctorExpr::tensor_left(A), X).module, ext(TrA, X, 1)), "Fbar(X)");
  c.rec.check("underline-(A,-)(X) = Tor_1(Tr A, X)",
              iso_test(quot_stabilize(FunctorExpr::hom_cov(A), X).module, tor(TrA, X, 1)), "Funder(X)");
}

void ext_tor_oracle(Context& c) {
  FPModule M = c.gen.module(), N = c.gen.module();
  c.rec.input("M", doc::to_json(M));
  c.rec.input("N", doc::to_json(N));
  for (int i = 0; i <= 3; ++i) {
    FPModule e = ext(M, N, i), t = tor(M, N, i);
    c.rec.check("Ext^i = oracle", iso_test(e, ext_tor_oracle_Z(M, N, i, ExtOrTor::Ext)), idx("Ext", i));
    c.rec.check("Tor_i = oracle", iso_test(t, ext_tor_oracle_Z(M, N, i, ExtOrTor::Tor)), "Tor_" + std::to_string(i));
    if (i >= 2) c.rec.check("Ext^i = Tor_i = 0 for i >= 2", e.is_zero() && t.is_zero(), idx("Ext", i));
  }
}

void uct_classical_instance(Context& c) {
  Complex C = c.gen.free_complex(4);
  FPModule B = c.gen.module();
  c.rec.input("C", doc::to_json(C));
  c.rec.input("B", doc::to_json(B));
  for (int n = C.lo(); n <= C.hi() + 1; ++n) {
    c.rec.sequence("cohomology sequence exact and split", uct_classical(C, B, n, UctWhich::Cohomology), true);
    c.rec.sequence("homology sequence exact and split", uct_classical(C, B, n, UctWhich::Homology), true);
  }
}

void uct_classical_fixed(Recorder& rec) {
  // C : Z --2--> Z in degrees 1, 0 and B = Z/2
  FPModule F = FPModule::free(Z, 1), B = FPModule(Z, 1, IntMat::from_rows({{2}}));
  Complex C(Z, 0, {F, F}, {make_morphism(F, F, IntMat::from_rows({{2}}))});
  rec.input("C", doc::to_json(C));
  rec.input("B", doc::to_json(B));
  rec.check("worked instance H^1(C,B) = Z/2", iso_test(cohomology(C, B, 1), B), "H^1(C,B)");
  rec.check("worked instance H_1(C (x) B) = Z/2", iso_test(homology_tensor(C, B, 1), B), "H_1(C(x)B)");
  rec.sequence("cohomology sequence exact and split", uct_classical(C, B, 1, UctWhich::Cohomology), true);
  rec.sequence("homology sequence exact and split", uct_classical(C, B, 1, UctWhich::Homology), true);
}

void uct_general_instance(Context& c) {
  Complex C = c.gen.complex();
  FPModule B = c.gen.module();
  int n = static_cast<int>(c.gen.between(C.lo(), C.hi()));
  c.rec.input("C", doc::to_json(C));
  c.rec.input("B", doc::to_json(B));
  c.rec.input("n", n);
  c.rec.sequence("H^n(C,-) fundamental sequence", uct_general(C, B, n, c.depth, UctWhich::Cohomology), false);
  c.rec.sequence("H_n(C (x) -) fundamental sequence", uct_general(C, B, n, c.depth, UctWhich::Homology), false);
  c.rec.check("coh_substab = sub_stabilize(H^n(C,-))",
              iso_test(coh_substab(C, n, B), sub_stabilize(FunctorExpr::cohomology(C, n), B).module), "D:Fsub-res");
  c.rec.check("homology_qstab = quot_stabilize(H_n(C (x) -))",
              iso_test(homology_qstab(C, n, B), quot_stabilize(FunctorExpr::homology_tensor(C, n), B).module),
              "D:q-stab-hom");
}

void uct_special_instance(Context& c) {
  Complex C = c.gen.free_complex(4);
  FPModule B = c.gen.module();
  int n = static_cast<int>(c.gen.between(C.lo(), C.hi()));
  c.rec.input("C", doc::to_json(C));
  c.rec.input("B", doc::to_json(B));
  c.rec.input("n", n);
  if (c.ring.quasi_frobenius()) {
    c.rec.sequence("projective-complex cohomology rows exact", uct_special(C, B, n, c.depth, UctWhich::Cohomology), true);
    c.rec.sequence("flat-complex homology rows exact", uct_special(C, B, n, c.depth, UctWhich::Homology), true);
    for (const Verdict& v : delta_functor_checks(C, B, n).verdicts)
      c.rec.check(v.label.substr(0, v.label.find_first_of("^_")), v.holds, v.label);
  } else {
    c.rec.sequence("pinched cohomology sequence", uct_special(C, B, n, c.depth, UctWhich::Cohomology), false);
    c.rec.check("Ext^1(C_n/B_n,B) = Ext^1(H_n,B)",
                iso_test(ext(chains_mod_boundaries(C, n), B, 1), ext(homology(C, n), B, 1)), "Ext^1(H_n,B)");
  }
}

void contravariant(Context& c) {
  FPModule Cm = c.gen.module(), B = c.gen.module();
  c.rec.input("C", doc::to_json(Cm));
  c.rec.input("B", doc::to_json(B));
  FunctorExpr F = FunctorExpr::hom_contra(Cm);
  for (int i = 1; i < c.depth; ++i) {
    FPModule E = ext(B, Cm, i);
    c.rec.check("S^i(-,C)(B) = Ext^i(B,C)", iso_test(satellite(F, i, Side::Right, B), E), idx("S", i) + "F(B)");
    c.rec.check("R^i(-,C)(B) = Ext^i(B,C)", iso_test(eval_obj(FunctorExpr::derived(F, i, Side::Right), B), E),
                idx("R", i) + "F(B)");
  }
  c.rec.sequence("contravariant right sequence exact", contra_fund(F, B, c.depth, Side::Right), true);
  if (c.ring.quasi_frobenius()) {
    c.rec.sequence("contravariant left sequence exact", contra_fund(F, B, c.depth, Side::Left), true);
    return;
  }
  // Over Z the first row 0 -> Fbar(B) -> F(B) -> R^0F(B) -> 0 splits, for
  // (-, C) and for the half-exact Ext^1(-, C).
  for (const FunctorExpr& G : {F, FunctorExpr::derived(F, 1, Side::Right)}) {
    SequenceReport r = contra_fund(G, B, 1, Side::Right);
    c.rec.sequence("contravariant first row exact", r, true);
    if (!r.exact()) continue;
    c.rec.check("contravariant first row split", splitting_test(r.maps[1], r.maps[2]).split,
                r.display + " row 0 " + G.describe());
  }
}

FPModule torsion_part(const FPModule& A) {
  return FPModule::cyclic_sum(A.ring(), A.invariants().divisors);
}

void ar_formula(Context& c) {
  FPModule A = c.gen.module(), B = c.gen.module();
  c.rec.input("A", doc::to_json(A));
  c.rec.input("B", doc::to_json(B));
  if (c.ring.quasi_frobenius()) {
    IsoCheck ar = ar_formula_check(A, B);
    c.rec.check("AR formula", ar.holds, ar.label);
    IsoCheck right = stab_adjunction_check(A, B, Side::Right);
    c.rec.check("right stabilization adjunction", right.holds, right.label);
  } else {
    c.rec.check("torsion radical = torsion submodule", iso_test(torsion_radical(A).module(), torsion_part(A)),
                "ker(A -> A**)");
  }
  IsoCheck left = stab_adjunction_check(A, B, Side::Left);
  c.rec.check("left stabilization adjunction", left.holds, left.label);
  c.rec.sequence("bidual sequence exact", bidual_check(A), true);
}

void hereditary(Context& c) {
  // F = Ext^1(D, -) + (E, -) as FP(P + (E -> 0)) with P a relation basis of D
  FPModule D = c.gen.module(), E = c.gen.module();
  IntMat P = Echelon(D.relation_lattice()).lattice_basis();
  Morphism fD(FPModule::free(Z, P.cols()), FPModule::free(Z, D.gens()), P);
  Morphism f = direct_sum(fD, zero_morphism(E, FPModule::zero(Z)));
  std::vector<FPModule> Xs;
  for (int k = 0; k < 4; ++k) Xs.push_back(c.gen.module());
  std::vector<Morphism> maps;
  for (std::size_t k = 0; k + 1 < Xs.size(); ++k) maps.push_back(c.gen.morphism(Xs[k], Xs[k + 1]));
  c.rec.input("D", doc::to_json(D));
  c.rec.input("E", doc::to_json(E));
  c.rec.input("X", module_list(Xs));
  HereditaryDecomposition hd = hereditary_decomposition(f, Xs, maps);
  for (const auto& s : hd.samples) {
    c.rec.sequence("0 -> Fbar -> F -> (w(F),-) -> 0 exact", s.ses, true);
    c.rec.check("split", s.split, s.ses.display);
    c.rec.check("F(X) = Fbar(X) + (w(F),X)", s.decomposes, s.ses.display);
    c.rec.check("retractions natural", s.retractions_compatible, s.ses.display);
  }
  c.rec.check("w(F) = E", iso_test(hd.defect, E), "w(F)");
  FunctorExpr F = FunctorExpr::fp(f, true), ExtD = FunctorExpr::ext_fixed_first(D, 1);
  for (const FPModule& X : Xs) {
    c.rec.check("Fbar(X) = Ext^1(D,X)", iso_test(sub_stabilize(F, X).module, ext(D, X, 1)), "Fbar(X)");
    c.rec.check("S_1 Ext^1(D,-)(X) = (D,X) mod projectives",
                iso_test(satellite(ExtD, 1, Side::Left, X), stable_hom(D, X, StableClass::Projectives)), "S_1F(X)");
  }
}

void small_modules(InstanceSpec& s) {
  s.max_gens = 3;
  s.max_relations = 3;
}

const std::vector<SuiteDef>& registry() {
  static const std::vector<SuiteDef> defs = [] {
    std::vector<SuiteDef> d;
    d.push_back({"circular-exactness", "six-term kernel-cokernel sequence of composable pairs is exact",
                 {{Z, 200}, {zmod(4), 200}, {zmod(12), 200}}, any_ring, kDefaultDepth, nullptr, circular, nullptr});
    d.push_back({"right-fundamental",
                 "right fundamental sequences of (A,-) and A (x) - are exact; Fbar, rho, S^i and R^i identifications",
                 {{zmod(4), 50}, {zmod(8), 50}}, qf_only, kDefaultDepth, small_modules, right_fundamental, nullptr});
    d.push_back({"left-fundamental", "left fundamental sequences of (A,-) and A (x) -; lambda iso; L_i = Tor_i",
                 {{Z, 50}, {zmod(4), 50}}, any_ring, kDefaultDepth, small_modules, left_fundamental, nullptr});
    d.push_back({"fp-identifications", "R^0F = (w(F),-), R^iF = Ext^i(w(F),-) and the two Fbar routes for F = FP(f)",
                 {{Z, 100}, {zmod(4), 100}}, any_ring, kDefaultDepth, small_modules, fp_identifications, nullptr});
    d.push_back({"auslander-four-term", "both four-term sequences exact; Fbar(A (x) -) = Ext^1(Tr A,-), "
                 "underline-(A,-) = Tor_1(Tr A,-)",
                 {{Z, 100}, {zmod(4), 100}}, any_ring, kDefaultDepth, nullptr, auslander, nullptr});
    d.push_back({"ext-tor-oracle", "resolution Ext/Tor over Z agree with the cyclic-decomposition formulas",
                 {{Z, 200}}, z_only, kDefaultDepth, nullptr, ext_tor_oracle, nullptr});
    d.push_back({"uct-classical", "classical cohomology and homology coefficient sequences of free complexes are split exact",
                 {{Z, 100}}, z_only, kDefaultDepth,
                 [](InstanceSpec& s) {
                   s.max_length = 5;
                   s.max_entry = 4;
                 },
                 uct_classical_instance, uct_classical_fixed});
    d.push_back({"uct-general", "fundamental sequences of H^n(C,-) and H_n(C (x) -) on arbitrary complexes; "
                 "stabilizations of (co)homology",
                 {{zmod(4), 100}, {Z, 100}}, any_ring, 3,
                 [](InstanceSpec& s) {
                   small_modules(s);
                   s.max_length = 4;
                 },
                 uct_general_instance, nullptr});
    d.push_back({"uct-special", "projective/flat complex sequences and delta-functor isomorphisms (Z/n); "
                 "pinched isomorphism (Z)",
                 {{zmod(4), 50}, {Z, 100}}, any_ring, 3,
                 [](InstanceSpec& s) {
                   small_modules(s);
                   s.max_length = 4;
                 },
                 uct_special_instance, nullptr});
    d.push_back({"contravariant", "contravariant fundamental sequences of (-,C); satellites and derived functors are Ext; "
                 "split first row over Z",
                 {{Z, 50}, {zmod(4), 50}}, any_ring, kDefaultDepth, small_modules, contravariant, nullptr});
    d.push_back({"ar-formula", "AR formula, both stabilization adjunctions, bidual sequence, torsion radical",
                 {{zmod(4), 100}, {zmod(8), 100}, {zmod(9), 100}, {zmod(12), 100}, {Z, 100}}, any_ring,
                 kDefaultDepth, nullptr, ar_formula, nullptr});
    d.push_back({"hereditary", "split decomposition of Ext^1(D,-) + (E,-) over Z and S_1 Ext^1(D,-) = stable (D,-)",
                 {{Z, 50}}, z_only, kDefaultDepth, small_modules, hereditary, nullptr});
    return d;
  }();
  return defs;
}

// ------------------------------------------------------------ running

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct Outcome {
  long index = 0;
  std::string ring;
  Json inputs;
  std::vector<Check> checks;
};

template <class Body>
void guarded(Recorder& rec, Body&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    rec.check("evaluation raised no error", false, e.what());
  }
}

}  // namespace

std::vector<SuiteInfo> suite_catalog() {
  std::vector<SuiteInfo> out;
  for (const auto& d : registry()) out.push_back({d.name, d.description});
  return out;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
  const auto& defs = registry();
  auto it = std::find_if(defs.begin(), defs.end(), [&](const SuiteDef& d) { return d.name == name; });
  if (it == defs.end()) throw Error(ErrorKind::UnknownSuite, "no suite named \"" + name + "\"");
  const SuiteDef& def = *it;
  const int depth = options.depth.value_or(def.depth);
  if (depth < 1) throw Error(ErrorKind::InvalidArgument, "suite depth must be at least 1");

  // (ring, count) plan
  std::vector<std::pair<RingDesc, std::size_t>> plan;
  if (options.rings.empty()) {
    plan = def.rings;
  } else {
    for (const RingDesc& R : options.rings) {
      if (!def.supports(R)) throw Error(ErrorKind::InvalidArgument, "suite " + name + " does not run over " + R.name());
      auto d = std::find_if(def.rings.begin(), def.rings.end(), [&](const auto& p) { return p.first == R; });
      plan.emplace_back(R, d != def.rings.end() ? d->second : def.rings.front().second);
    }
  }
  if (options.count)
    for (auto& p : plan) p.second = *options.count;

  struct Job {
    long index;
    RingDesc ring;
  };
  std::vector<Job> jobs;
  long next = 0;
  for (const auto& [R, n] : plan)
    for (std::size_t k = 0; k < n; ++k, ++next)
      if (!options.only || *options.only == static_cast<std::size_t>(next)) jobs.push_back({next, R});

  auto start = std::chrono::steady_clock::now();
  std::vector<Outcome> outcomes(jobs.size());
  auto run_job = [&](std::size_t j) {
    const Job& job = jobs[j];
    InstanceSpec spec;
    spec.ring = job.ring;
    if (def.bounds) def.bounds(spec);
    spec.seed = splitmix(options.seed ^ splitmix(static_cast<std::uint64_t>(job.index)));
    InstanceGenerator gen(spec);
    Recorder rec;
    Context ctx{gen, rec, job.ring, depth};
    guarded(rec, [&] { def.instance(ctx); });
    outcomes[j] = {job.index, job.ring.name(), rec.inputs(), rec.checks()};
  };
  const std::size_t workers = std::max<std::size_t>(1, std::min(options.workers, jobs.size()));
  if (workers == 1) {
    for (std::size_t j = 0; j < jobs.size(); ++j) run_job(j);
  } else {
    std::atomic<std::size_t> cursor{0};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t j; (j = cursor++) < jobs.size();) run_job(j);
      });
    for (auto& t : pool) t.join();
  }
  if (def.fixed && !options.only) {
    Recorder rec;
    guarded(rec, [&] { def.fixed(rec); });
    outcomes.push_back({-1, def.rings.front().first.name(), rec.inputs(), rec.checks()});
  }

  SuiteReport report;
  report.suite = name;
  report.seed = options.seed;
  report.count = outcomes.size();
  std::map<std::string, std::size_t> slot;
  for (const Outcome& o : outcomes) {
    const Check* first_bad = nullptr;
    for (const Check& c : o.checks) {
      auto [pos, fresh] = slot.try_emplace(c.property, report.properties.size());
      if (fresh) report.properties.push_back({c.property, 0, 0});
      PropertyTally& t = report.properties[pos->second];
      (c.holds ? t.passes : t.failures)++;
      if (!c.holds && !first_bad) first_bad = &c;
    }
    if (!first_bad) {
      ++report.passes;
      continue;
    }
    report.failures.push_back({o.index, o.ring, o.inputs.dump(), first_bad->property, first_bad->node});
  }
  if (report.count == 0) report.warnings.push_back("no instances were run; the suite passes vacuously");
  report.duration_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string SuiteReport::to_json(bool with_timing) const {
  OJson j;
  j["suite"] = suite;
  j["seed"] = seed;
  j["count"] = count;
  j["passes"] = passes;
  OJson props = OJson::array();
  for (const auto& p : properties) props.push_back({{"name", p.name}, {"passes", p.passes}, {"failures", p.failures}});
  j["properties"] = props;
  OJson fails = OJson::array();
  for (const auto& f : failures)
    fails.push_back({{"index", f.index},
                     {"ring", f.ring},
                     {"inputs", OJson::parse(f.inputs)},
                     {"verdict", f.verdict},
                     {"node", f.node}});
  j["failures"] = fails;
  j["warnings"] = warnings;
  if (with_timing) j["duration_ms"] = duration_ms;
  return j.dump(2);
}

std::string SuiteReport::summary() const {
  std::ostringstream os;
  os << suite << ": " << passes << "/" << count << " instances pass (seed " << seed << ", "
     << static_cast<long>(duration_ms) << " ms)\n";
  for (const auto& p : properties)
    os << "  " << (p.failures ? "FAIL " : "ok   ") << p.name << "  " << p.passes << "/" << (p.passes + p.failures)
       << '\n';
  for (const auto& w : warnings) os << "  warning: " << w << '\n';
  if (!failures.empty()) {
    const auto& f = failures.front();
    os << "  first failure: instance " << f.index << " over " << f.ring << ": " << f.verdict;
    if (!f.node.empty()) os << " at " << f.node;
    os << "\n  inputs: " << f.inputs << '\n';
  }
  return os.str();
}

}  // namespace fundseq
