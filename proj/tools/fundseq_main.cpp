// fundseq: command-line front end to the library.
//
// Inputs are JSON documents (see fundseq/io.hpp), given as a file path or
// inline when the argument starts with '{'. Exit codes: 0 every verdict holds,
// 1 a verdict failed, 2 usage or input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "fundseq/archeck.hpp"
#include "fundseq/io.hpp"
#include "fundseq/random.hpp"
#include "fundseq/suites.hpp"
#include "fundseq/uct.hpp"

namespace {

using namespace fundseq;
using Json = nlohmann::ordered_json;

constexpr int kPass = 0;
constexpr int kVerdictFailed = 1;
constexpr int kInputError = 2;

struct Globals {
  std::string ring;
  std::uint64_t seed = 1;
  std::optional<int> depth;
  std::optional<std::size_t> samples;
  std::string json_out;
};

// State of one invocation: parsed inputs, verdicts and the JSON report.
class Run {
 public:
  explicit Run(const Globals& g) : g_(g) {
    if (!g.ring.empty()) ring_ = parse_ring_name(g.ring);
  }

  const Globals& globals() const { return g_; }
  const std::optional<RingDesc>& ring() const { return ring_; }
  int depth(int fallback = kDefaultDepth) const {
    int d = g_.depth.value_or(fallback);
    if (d < 1) throw Error(ErrorKind::InvalidArgument, "--depth must be at least 1");
    return d;
  }

  FPModule module(const std::string& name, const std::string& arg) {
    FPModule M = parse_module(text(arg), ring_);
    adopt(M.ring());
    inputs_[name] = Json::parse(serialize(M));
    return M;
  }
  Morphism morphism(const std::string& name, const std::string& arg) {
    Morphism f = parse_morphism(text(arg), ring_);
    adopt(f.ring());
    inputs_[name] = Json::parse(serialize(f));
    return f;
  }
  Complex complex(const std::string& name, const std::string& arg) {
    Complex C = parse_complex(text(arg), ring_);
    adopt(C.ring());
    inputs_[name] = Json::parse(serialize(C));
    return C;
  }
  void param(const std::string& name, Json value) { params_[name] = std::move(value); }

  void show(const std::string& label, const FPModule& M) {
    std::cout << label << " = " << M.describe() << "  " << invariants_string(M) << '\n';
    result_[label] = module_json(M);
  }
  void verdict(const std::string& label, bool holds) {
    std::cout << label << ": " << (holds ? "true" : "false") << '\n';
    verdicts_.push_back({label, holds});
  }
  void sequence(const SequenceReport& r) {
    std::cout << r.to_string();
    Json nodes = Json::array();
    for (std::size_t k = 0; k < r.nodes.size(); ++k) {
      Json n = module_json(r.nodes[k].module);
      n["label"] = r.nodes[k].label;
      n["row"] = r.nodes[k].row;
      n["exact"] = static_cast<bool>(r.exact_at[k]);
      n["exactness_required"] = r.nodes[k].exactness_required;
      nodes.push_back(std::move(n));
    }
    result_["display"] = r.display;
    result_["depth"] = r.depth;
    result_["nodes"] = std::move(nodes);
    verdicts_.push_back({r.display + " is a complex", r.is_complex()});
    verdicts_.push_back({r.display + " exact where required", r.required_exactness()});
    for (const auto& v : r.extra) verdicts_.push_back({r.display + " " + v.label, v.holds});
    if (!r.passes()) failure_node_ = r.first_failure();
  }

  int finish(const std::string& command) {
    bool ok = true;
    for (const auto& v : verdicts_) ok = ok && v.holds;
    if (!ok) {
      std::cout << "FAIL";
      if (!failure_node_.empty()) std::cout << ": " << failure_node_;
      else
        for (const auto& v : verdicts_)
          if (!v.holds) {
            std::cout << ": " << v.label;
            break;
          }
      std::cout << "\ninputs: " << inputs_.dump() << '\n';
    }
    if (!g_.json_out.empty()) {
      Json out;
      out["command"] = command;
      if (ring_) out["ring"] = ring_->name();
      out["seed"] = g_.seed;
      out["inputs"] = inputs_;
      if (!params_.empty()) out["parameters"] = params_;
      out["result"] = result_;
      Json vs = Json::array();
      for (const auto& v : verdicts_) vs.push_back({{"label", v.label}, {"holds", v.holds}});
      out["verdicts"] = std::move(vs);
      out["passed"] = ok;
      write_json(g_.json_out, out);
    }
    return ok ? kPass : kVerdictFailed;
  }

  static Json module_json(const FPModule& M) {
    return Json{{"describe", M.describe()}, {"invariants", invariants_string(M)}, {"module", Json::parse(serialize(M))}};
  }
  static void write_json(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::InvalidArgument, path + ": cannot write");
    out << j.dump(2) << '\n';
  }

 private:
  static std::string text(const std::string& arg) {
    if (!arg.empty() && arg.front() == '{') return arg;
    return read_document(arg);
  }
  // The first document fixes the ring for the rest of the command.
  void adopt(const RingDesc& r) {
    if (!ring_) ring_ = r;
  }

  Globals g_;
  std::optional<RingDesc> ring_;
  Json inputs_ = Json::object();
  Json params_ = Json::object();
  Json result_ = Json::object();
  std::vector<Verdict> verdicts_;
  std::string failure_node_;
};

Side side_from(const std::string& s) { return s == "left" ? Side::Left : Side::Right; }
UctWhich which_from(const std::string& s) { return s == "homology" ? UctWhich::Homology : UctWhich::Cohomology; }

struct FunctorArgs {
  std::string kind = "hom-cov";
  std::string A, f, C;
  int n = 0;
  int degree = 1;
  bool half_exact = false;
};

void add_functor_options(CLI::App* app, FunctorArgs& a) {
  app->add_option("--functor", a.kind, "hom-cov, hom-contra, tensor, fp, fp-contra, tc, ext, tor, cohomology, homology")
      ->check(CLI::IsMember({"hom-cov", "hom-contra", "tensor", "fp", "fp-contra", "tc", "ext", "tor", "cohomology",
                             "homology"}))
      ->capture_default_str();
  app->add_option("--A", a.A, "module parameter (hom, tensor, ext, tor)");
  app->add_option("--f", a.f, "morphism parameter (fp, fp-contra, tc)");
  app->add_option("--C", a.C, "complex parameter (cohomology, homology)");
  app->add_option("--n", a.n, "degree of the (co)homology functor")->capture_default_str();
  app->add_option("--degree", a.degree, "degree of Ext^k(A, -) or Tor_k(A, -)")->capture_default_str();
  app->add_flag("--half-exact", a.half_exact, "declare an fp/tc functor half-exact");
}

FunctorExpr build_functor(Run& run, const FunctorArgs& a) {
  auto need = [&](const std::string& v, const char* flag) -> const std::string& {
    if (v.empty()) throw Error(ErrorKind::InvalidArgument, "--functor " + a.kind + " needs " + flag);
    return v;
  };
  run.param("functor", a.kind);
  if (a.kind == "hom-cov") return FunctorExpr::hom_cov(run.module("A", need(a.A, "--A")));
  if (a.kind == "hom-contra") return FunctorExpr::hom_contra(run.module("A", need(a.A, "--A")));
  if (a.kind == "tensor") return FunctorExpr::tensor_left(run.module("A", need(a.A, "--A")));
  if (a.kind == "fp") return FunctorExpr::fp(run.morphism("f", need(a.f, "--f")), a.half_exact);
  if (a.kind == "fp-contra") return FunctorExpr::fp_contra(run.morphism("f", need(a.f, "--f")), a.half_exact);
  if (a.kind == "tc") return FunctorExpr::tc(run.morphism("f", need(a.f, "--f")), a.half_exact);
  if (a.kind == "ext" || a.kind == "tor") {
    run.param("degree", a.degree);
    FPModule A = run.module("A", need(a.A, "--A"));
    return a.kind == "ext" ? FunctorExpr::ext_fixed_first(A, a.degree) : FunctorExpr::tor_fixed_first(A, a.degree);
  }
  run.param("n", a.n);
  Complex C = run.complex("C", need(a.C, "--C"));
  return a.kind == "cohomology" ? FunctorExpr::cohomology(C, a.n) : FunctorExpr::homology_tensor(C, a.n);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with finitely presented modules over Z and Z/n"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--ring", g.ring, "Z or Z/n; documents without a ring use it");
  app.add_option("--seed", g.seed, "seed for sampled inputs and suites")->capture_default_str();
  app.add_option("--depth", g.depth, "number of rows / resolution length");
  app.add_option("--samples", g.samples, "number of sampled coefficients or instances");
  app.add_option("--json-out", g.json_out, "write a machine-readable report to PATH");

  // The selected command's work, run after parsing succeeds.
  std::function<int()> pending;
  auto add = [&](CLI::App* parent, const std::string& name, const std::string& help, const std::string& command,
                 std::function<void(Run&)> body) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->callback([&pending, &g, command, body] {
      pending = [&g, command, body] {
        Run run(g);
        body(run);
        return run.finish(command);
      };
    });
    return sub;
  };

  // ------------------------------------------------------------------ module
  auto* module = app.add_subcommand("module", "presentations and basic constructions");
  module->require_subcommand(1);
  std::string M_arg, A_arg, B_arg;
  add(module, "show", "presentation of M", "module show", [&](Run& r) {
    FPModule M = r.module("M", M_arg);
    std::cout << "ring " << M.ring().name() << ", " << M.gens() << " generators, " << M.relations().cols()
              << " relations\n";
    for (std::size_t i = 0; i < M.gens(); ++i) {
      std::cout << "  [";
      for (std::size_t j = 0; j < M.relations().cols(); ++j) std::cout << (j ? " " : "") << M.relations()(i, j).get_str();
      std::cout << "]\n";
    }
    r.show("M", M);
  })->add_option("--M", M_arg)->required();
  add(module, "invariants", "invariant divisors of M", "module invariants", [&](Run& r) {
    FPModule M = r.module("M", M_arg);
    r.show("M", M);
    r.show("stable part", FPModule::cyclic_sum(M.ring(), stable_invariants(M)));
  })->add_option("--M", M_arg)->required();
  add(module, "dual", "M* = Hom(M, R)", "module dual", [&](Run& r) {
    r.show("M*", dual(r.module("M", M_arg)).module);
  })->add_option("--M", M_arg)->required();
  add(module, "transpose", "Auslander-Bridger transpose Tr M", "module transpose", [&](Run& r) {
    r.show("Tr M", transpose(r.module("M", M_arg)));
  })->add_option("--M", M_arg)->required();
  {
    auto* hom = add(module, "hom", "Hom(A, B)", "module hom", [&](Run& r) {
      FPModule A = r.module("A", A_arg), B = r.module("B", B_arg);
      r.show("Hom(A, B)", hom_module(A, B).module);
    });
    hom->add_option("--A", A_arg)->required();
    hom->add_option("--B", B_arg)->required();
    auto* ten = add(module, "tensor", "A (x) B", "module tensor", [&](Run& r) {
      FPModule A = r.module("A", A_arg), B = r.module("B", B_arg);
      r.show("A (x) B", tensor_module(A, B).module);
    });
    ten->add_option("--A", A_arg)->required();
    ten->add_option("--B", B_arg)->required();
  }

  // ----------------------------------------------------------------- resolve
  auto* resolve = app.add_subcommand("resolve", "resolutions, syzygies, Ext and Tor");
  resolve->require_subcommand(1);
  int k_arg = 1, i_arg = 0;
  auto print_resolution = [](Run& r, const Resolution& res, const char* term, const char* shift) {
    for (int i = 0; i <= res.depth; ++i) r.show(std::string(term) + std::to_string(i), res.terms[i]);
    for (int i = 0; i <= res.depth + 1; ++i) r.show(std::string(shift) + std::to_string(i), res.shifts[i]);
  };
  add(resolve, "proj", "projective resolution to --depth", "resolve proj", [&](Run& r) {
    print_resolution(r, proj_resolution(r.module("M", M_arg), r.depth()), "P_", "Omega^");
  })->add_option("--M", M_arg)->required();
  add(resolve, "inj", "injective resolution to --depth (Z/n)", "resolve inj", [&](Run& r) {
    print_resolution(r, inj_resolution(r.module("M", M_arg), r.depth()), "I^", "Sigma^");
  })->add_option("--M", M_arg)->required();
  {
    auto* syz = add(resolve, "syzygy", "Omega^k M", "resolve syzygy", [&](Run& r) {
      r.param("k", k_arg);
      r.show("Omega^" + std::to_string(k_arg) + " M", syzygy(r.module("M", M_arg), k_arg));
    });
    syz->add_option("--M", M_arg)->required();
    syz->add_option("--k", k_arg)->capture_default_str();
    auto* cosyz = add(resolve, "cosyzygy", "Sigma^k M (Z/n)", "resolve cosyzygy", [&](Run& r) {
      r.param("k", k_arg);
      r.show("Sigma^" + std::to_string(k_arg) + " M", cosyzygy(r.module("M", M_arg), k_arg));
    });
    cosyz->add_option("--M", M_arg)->required();
    cosyz->add_option("--k", k_arg)->capture_default_str();
  }
  auto ext_tor = [&](CLI::App* parent, const std::string& name, bool is_ext, const std::string& command) {
    auto* sub = add(parent, name, is_ext ? "Ext^i(A, B)" : "Tor_i(A, B)", command, [&, is_ext](Run& r) {
      FPModule A = r.module("A", A_arg), B = r.module("B", B_arg);
      r.param("i", i_arg);
      if (i_arg < 0) throw Error(ErrorKind::InvalidArgument, "--i must be nonnegative");
      const std::string label = (is_ext ? "Ext^" : "Tor_") + std::to_string(i_arg) + "(A, B)";
      FPModule value = is_ext ? ext(A, B, i_arg) : tor(A, B, i_arg);
      r.show(label, value);
      if (A.ring().is_integers()) {
        FPModule oracle = ext_tor_oracle_Z(A, B, i_arg, is_ext ? ExtOrTor::Ext : ExtOrTor::Tor);
        r.verdict(label + " agrees with the cyclic-decomposition formula", iso_test(value, oracle));
      }
    });
    sub->add_option("--A", A_arg)->required();
    sub->add_option("--B", B_arg)->required();
    sub->add_option("--i", i_arg)->required();
  };
  ext_tor(resolve, "ext", true, "resolve ext");
  ext_tor(resolve, "tor", false, "resolve tor");
  ext_tor(&app, "ext", true, "ext");
  ext_tor(&app, "tor", false, "tor");

  // ----------------------------------------------------------------- functor
  auto* functor = app.add_subcommand("functor", "evaluate functors and their stabilizations");
  functor->require_subcommand(1);
  FunctorArgs fa;
  std::string X_arg, side_arg = "right";
  auto functor_cmd = [&](const std::string& name, const std::string& help, std::function<void(Run&, const FunctorExpr&)> fn,
                         bool needs_X = true) {
    auto* sub = add(functor, name, help, "functor " + name, [&, fn](Run& r) {
      FunctorExpr F = build_functor(r, fa);
      std::cout << "F = " << F.describe() << '\n';
      fn(r, F);
    });
    add_functor_options(sub, fa);
    if (needs_X) sub->add_option("--X", X_arg)->required();
    return sub;
  };
  functor_cmd("eval", "F(X)", [&](Run& r, const FunctorExpr& F) { r.show("F(X)", eval_obj(F, r.module("X", X_arg))); });
  functor_cmd("substab", "sub-stabilization Fbar(X) -> F(X)", [&](Run& r, const FunctorExpr& F) {
    Stabilization s = sub_stabilize(F, r.module("X", X_arg));
    r.show("Fbar(X)", s.module);
    r.verdict("k : Fbar(X) -> F(X) is mono", is_mono(s.map));
  });
  functor_cmd("quotstab", "quot-stabilization F(X) -> underline-F(X)", [&](Run& r, const FunctorExpr& F) {
    Stabilization s = quot_stabilize(F, r.module("X", X_arg));
    r.show("underline-F(X)", s.module);
    r.verdict("q : F(X) -> underline-F(X) is epi", is_epi(s.map));
  });
  for (const char* what : {"satellite", "derived"}) {
    const bool sat = std::string(what) == "satellite";
    auto* sub = functor_cmd(what, sat ? "S^iF(X) / S_iF(X)" : "R^iF(X) / L_iF(X)", [&, sat](Run& r, const FunctorExpr& F) {
      r.param("i", i_arg);
      r.param("side", side_arg);
      const Side side = side_from(side_arg);
      FPModule X = r.module("X", X_arg);
      const std::string label = std::string(sat ? "S" : (side == Side::Right ? "R" : "L")) +
                                (side == Side::Right ? "^" : "_") + std::to_string(i_arg) + "F(X)";
      r.show(label, sat ? satellite(F, i_arg, side, X) : eval_obj(FunctorExpr::derived(F, i_arg, side), X));
    });
    sub->add_option("--i", i_arg)->required();
    sub->add_option("--side", side_arg)->check(CLI::IsMember({"right", "left"}))->capture_default_str();
  }
  functor_cmd("defect", "w(F) for covariant, v(F) = F(R) for contravariant F", [&](Run& r, const FunctorExpr& F) {
    r.show(F.covariant() ? "w(F)" : "v(F)", defect(F));
  }, false);
  std::string four_side = "tensor";
  {
    auto* four = add(functor, "fourterm", "Auslander four-term sequence of (A, X)", "functor fourterm", [&](Run& r) {
      r.param("side", four_side);
      FPModule A = r.module("A", A_arg), X = r.module("X", X_arg);
      r.sequence(auslander_four_term(A, X, four_side == "hom" ? FourTermSide::HomSide : FourTermSide::TensorSide));
    });
    four->add_option("--A", A_arg)->required();
    four->add_option("--X", X_arg)->required();
    four->add_option("--side", four_side)->check(CLI::IsMember({"tensor", "hom"}))->capture_default_str();
  }
  add(functor, "torsionradical", "kernel of A -> A**", "functor torsionradical", [&](Run& r) {
    FPModule A = r.module("A", A_arg);
    KernelData t = torsion_radical(A);
    r.show("t(A)", t.module());
    if (A.ring().is_integers()) {
      std::vector<Int> torsion = A.invariants().divisors;
      r.verdict("t(A) is the torsion submodule", iso_test(t.module(), FPModule::cyclic_sum(A.ring(), torsion)));
    }
  })->add_option("--A", A_arg)->required();

  // --------------------------------------------------------------------- seq
  auto* seq = app.add_subcommand("seq", "circular and fundamental sequences, splittings");
  seq->alias("check");
  seq->require_subcommand(1);
  std::string f_arg, g_arg;
  {
    auto* circ = add(seq, "circular", "kernel-cokernel sequence of g . f", "seq circular", [&](Run& r) {
      Morphism f = r.morphism("f", f_arg), gm = r.morphism("g", g_arg);
      r.sequence(circular_sequence(f, gm));
    });
    circ->add_option("--f", f_arg)->required();
    circ->add_option("--g", g_arg)->required();
  }
  auto fund_cmd = [&](const std::string& name, const std::string& help, std::function<SequenceReport(const FunctorExpr&, const FPModule&, int)> fn) {
    auto* sub = add(seq, name, help, "seq " + name, [&, fn](Run& r) {
      FunctorExpr F = build_functor(r, fa);
      r.sequence(fn(F, r.module("B", B_arg), r.depth()));
    });
    add_functor_options(sub, fa);
    sub->add_option("--B", B_arg)->required();
  };
  fund_cmd("right-cov", "right fundamental sequence of covariant F at B",
           [](const FunctorExpr& F, const FPModule& B, int d) { return right_fund_cov(F, B, d); });
  fund_cmd("left-cov", "left fundamental sequence of covariant F at B",
           [](const FunctorExpr& F, const FPModule& B, int d) { return left_fund_cov(F, B, d); });
  fund_cmd("contra-right", "right fundamental sequence of contravariant F at B",
           [](const FunctorExpr& F, const FPModule& B, int d) { return contra_fund(F, B, d, Side::Right); });
  fund_cmd("contra-left", "left fundamental sequence of contravariant F at B",
           [](const FunctorExpr& F, const FPModule& B, int d) { return contra_fund(F, B, d, Side::Left); });
  {
    auto* split = add(seq, "split", "does 0 -> A --f--> B --g--> C -> 0 split", "seq split", [&](Run& r) {
      Morphism i = r.morphism("f", f_arg), p = r.morphism("g", g_arg);
      SplitResult s = splitting_test(i, p);
      r.verdict("split", s.split);
    });
    split->add_option("--f", f_arg, "the mono")->required();
    split->add_option("--g", g_arg, "the epi")->required();
  }
  {
    auto* her = add(seq, "hereditary", "decomposition of a half-exact FP(f) over Z on sampled coefficients",
                    "seq hereditary", [&](Run& r) {
      Morphism f = r.morphism("f", f_arg);
      InstanceSpec spec;
      spec.ring = f.ring();
      spec.seed = r.globals().seed;
      spec.max_gens = 3;
      spec.max_relations = 3;
      InstanceGenerator gen(spec);
      const std::size_t n = r.globals().samples.value_or(4);
      std::vector<FPModule> Xs;
      for (std::size_t k = 0; k < n; ++k) Xs.push_back(gen.module());
      std::vector<Morphism> maps;
      for (std::size_t k = 0; k + 1 < n; ++k) maps.push_back(gen.morphism(Xs[k], Xs[k + 1]));
      HereditaryDecomposition d = hereditary_decomposition(f, Xs, maps);
      r.show("w(F)", d.defect);
      for (std::size_t k = 0; k < d.samples.size(); ++k) {
        const auto& s = d.samples[k];
        const std::string at = "X" + std::to_string(k) + " = " + s.X.describe();
        r.verdict(at + ": F(X) = Fbar(X) + (w(F), X)", s.decomposes && s.split);
        r.verdict(at + ": retraction compatible with sampled maps", s.retractions_compatible);
      }
    });
    her->add_option("--f", f_arg)->required();
  }

  // --------------------------------------------------------------------- uct
  auto* uct = app.add_subcommand("uct", "universal coefficient sequences");
  uct->require_subcommand(1);
  std::string C_arg, which_arg = "cohomology";
  int n_arg = 0;
  auto uct_cmd = [&](const std::string& name, const std::string& help, bool with_which,
                     std::function<void(Run&, const Complex&, const FPModule&)> fn) {
    auto* sub = add(uct, name, help, "uct " + name, [&, fn](Run& r) {
      Complex C = r.complex("C", C_arg);
      FPModule B = r.module("B", B_arg);
      r.param("n", n_arg);
      fn(r, C, B);
    });
    sub->add_option("--C", C_arg)->required();
    sub->add_option("--B", B_arg)->required();
    sub->add_option("--n", n_arg)->capture_default_str();
    if (with_which)
      sub->add_option("--which", which_arg)->check(CLI::IsMember({"cohomology", "homology"}))->capture_default_str();
  };
  uct_cmd("classical", "split short exact UCT sequence (projective complexes)", true,
          [&](Run& r, const Complex& C, const FPModule& B) {
            r.param("which", which_arg);
            r.sequence(uct_classical(C, B, n_arg, which_from(which_arg)));
          });
  uct_cmd("general", "fundamental sequence of H^n(C, -) or H_n(C (x) -) at B", true,
          [&](Run& r, const Complex& C, const FPModule& B) {
            r.param("which", which_arg);
            r.sequence(uct_general(C, B, n_arg, r.depth(3), which_from(which_arg)));
          });
  uct_cmd("projective", "cohomology of a projective complex", false, [&](Run& r, const Complex& C, const FPModule& B) {
    r.sequence(uct_special(C, B, n_arg, r.depth(3), UctWhich::Cohomology));
  });
  uct_cmd("flat", "homology of a flat complex", false, [&](Run& r, const Complex& C, const FPModule& B) {
    r.sequence(uct_special(C, B, n_arg, r.depth(3), UctWhich::Homology));
  });
  uct_cmd("delta-checks", "connecting-map isomorphisms of the (co)homology functors", false,
          [&](Run& r, const Complex& C, const FPModule& B) {
            for (const auto& v : delta_functor_checks(C, B, n_arg).verdicts) r.verdict(v.label, v.holds);
          });

  // ---------------------------------------------------------------------- ar
  auto* ar = app.add_subcommand("ar", "Auslander-Reiten formula, adjunctions, bidual");
  ar->require_subcommand(1);
  std::size_t q_arg = 1;
  auto iso = [](Run& r, const IsoCheck& c) {
    r.show(c.label + " lhs", c.lhs);
    r.show(c.label + " rhs", c.rhs);
    r.verdict(c.label, c.holds);
  };
  {
    auto* formula = add(ar, "formula", "D Ext^1(A, B) against stable (B, D Tr A)", "ar formula", [&](Run& r) {
      FPModule A = r.module("A", A_arg), B = r.module("B", B_arg);
      iso(r, ar_formula_check(A, B));
    });
    formula->add_option("--A", A_arg)->required();
    formula->add_option("--B", B_arg)->required();
    auto* adj = add(ar, "adjunction", "stabilization adjunction at (A, B)", "ar adjunction", [&](Run& r) {
      FPModule A = r.module("A", A_arg), B = r.module("B", B_arg);
      r.param("side", side_arg);
      r.param("q", q_arg);
      iso(r, stab_adjunction_check(A, B, side_from(side_arg), q_arg));
    });
    adj->add_option("--A", A_arg)->required();
    adj->add_option("--B", B_arg)->required();
    adj->add_option("--side", side_arg)->check(CLI::IsMember({"right", "left"}))->capture_default_str();
    adj->add_option("--q", q_arg, "rank of the free module Q (left side)")->capture_default_str();
  }
  add(ar, "bidual", "0 -> Ext^1(Tr A, R) -> A -> A** -> Ext^2(Tr A, R) -> 0", "ar bidual", [&](Run& r) {
    r.sequence(bidual_check(r.module("A", A_arg)));
  })->add_option("--A", A_arg)->required();

  // ------------------------------------------------------------------- suite
  auto* suite = app.add_subcommand("suite", "run a named property suite");
  std::string suite_name;
  std::optional<std::size_t> count_arg, only_arg;
  std::size_t workers = 1;
  bool list = false;
  suite->add_option("name", suite_name, "suite name (see --list)");
  suite->add_flag("--list", list, "list the registered suites");
  suite->add_option("--count", count_arg, "instances per ring");
  suite->add_option("--workers", workers, "parallel workers")->capture_default_str();
  suite->add_option("--only", only_arg, "replay a single instance index");
  suite->callback([&] {
    pending = [&]() -> int {
      if (list) {
        for (const auto& s : suite_catalog()) std::cout << s.name << "  " << s.description << '\n';
        return kPass;
      }
      if (suite_name.empty()) throw Error(ErrorKind::InvalidArgument, "suite: a suite name or --list is required");
      SuiteOptions o;
      o.seed = g.seed;
      o.count = count_arg ? count_arg : g.samples;
      if (!g.ring.empty()) o.rings = {parse_ring_name(g.ring)};
      o.depth = g.depth;
      o.workers = workers;
      o.only = only_arg;
      SuiteReport rep = run_suite(suite_name, o);
      std::cout << rep.summary();
      if (!g.json_out.empty()) {
        std::ofstream out(g.json_out);
        if (!out) throw Error(ErrorKind::InvalidArgument, g.json_out + ": cannot write");
        out << rep.to_json() << '\n';
      }
      return rep.passed() ? kPass : kVerdictFailed;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }
  if (!pending) return kInputError;
  try {
    return pending();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    if (!g.json_out.empty()) {
      try {
        Run::write_json(g.json_out, Json{{"error", {{"kind", error_kind_name(e.kind())}, {"message", e.what()}}},
                                         {"passed", false}});
      } catch (const Error&) {
      }
    }
    return kInputError;
  }
}
