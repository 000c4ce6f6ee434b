#include "fundseq/uct.hpp"

#include <functional>
#include <regex>
#include <sstream>

namespace fundseq {

FPModule homology(const Complex& C, int n) { return homology_data(C, n).module; }

FPModule boundaries(const Complex& C, int n) { return epi_mono_factor(C.differential(n + 1)).image; }

FPModule chains_mod_boundaries(const Complex& C, int n) { return cokernel(C.differential(n + 1)).module; }

FPModule cohomology(const Complex& C, const FPModule& B, int n) { return cochain_data(C, B, n).value.module; }

FPModule homology_tensor(const Complex& C, const FPModule& B, int n) {
  return chain_tensor_data(C, B, n).value.module;
}

namespace {

void need_projective(const Complex& C, bool boundaries_too) {
  if (!C.is_projective()) throw Error(ErrorKind::HypothesisViolated, "is_projective: some term is not projective");
  if (boundaries_too && !C.boundaries_projective())
    throw Error(ErrorKind::HypothesisViolated, "boundaries_projective: some boundary module is not projective");
}

// H_n -> C_n/B_n
Morphism cycles_into_quotient(const Complex& C, int n) {
  Subquotient H = homology_data(C, n);
  CokernelData Q = cokernel(C.differential(n + 1));
  return make_morphism(H.module, Q.module, Q.projection.matrix() * H.decode);
}

std::string deg(int n, int shift) {
  int k = n + shift;
  return std::to_string(k);
}

// Rename nodes whose label matches pattern; the callback receives the first
// captured index (0 when the pattern has none).
using Rule = std::pair<std::string, std::function<std::string(int)>>;
void relabel(SequenceReport& r, const std::vector<Rule>& rules) {
  for (auto& node : r.nodes)
    for (const auto& [pat, rename] : rules) {
      std::smatch m;
      if (std::regex_match(node.label, m, std::regex(pat))) {
        node.label = rename(m.size() > 1 ? std::stoi(m[1].str()) : 0);
        break;
      }
    }
}
Rule fixed(std::string pat, std::string name) {
  return {std::move(pat), [name](int) { return name; }};
}

std::vector<std::size_t> nodes_matching(const SequenceReport& r, const std::string& pat) {
  std::regex re(pat);
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < r.nodes.size(); ++k)
    if (std::regex_match(r.nodes[k].label, re)) out.push_back(k);
  return out;
}

int trailing_index(const std::string& label, const std::string& pat) {
  std::smatch m;
  std::regex_match(label, m, std::regex(pat));
  return std::stoi(m[1].str());
}

}  // namespace

// ------------------------------------------------------------ classical

SequenceReport uct_classical(const Complex& C, const FPModule& B, int n, UctWhich which) {
  need_projective(C, true);
  const std::string hn = "H_" + std::to_string(n), hn1 = "H_" + deg(n, -1);
  Subquotient H = homology_data(C, n);
  Subquotient Hprev = homology_data(C, n - 1);
  // 0 -> B_{n-1} -> Z_{n-1} -> H_{n-1} -> 0 is a projective resolution
  EpiMono bd = epi_mono_factor(C.differential(n));
  KernelData Z = kernel(C.differential(n - 1));
  Morphism b_to_z = factor_through_mono(Z.inclusion, bd.mono);

  if (which == UctWhich::Cohomology) {
    CochainData cd = cochain_data(C, B, n);
    HomModule HZ = hom_module(Z.module(), B), HB = hom_module(bd.image, B);
    CokernelData E = cokernel(hom_contra_map(HZ, HB, b_to_z));
    IntMat into(cd.value.module.gens(), E.module.gens());
    for (std::size_t k = 0; k < E.module.gens(); ++k)
      into.set_col(k, cd.value.encode(cd.mid.encode(compose(HB.decode(E.lifts.col(k)), bd.epi))));
    HomModule HH = hom_module(H.module, B);
    IntMat restrict(HH.module.gens(), cd.value.module.gens());
    for (std::size_t k = 0; k < cd.value.module.gens(); ++k) {
      Morphism cocycle = cd.mid.decode(cd.mid.module.reduce(cd.value.decode.col(k)));
      restrict.set_col(k, HH.encode(Morphism(H.module, B, B.reduce(cocycle.matrix() * H.decode))));
    }
    Morphism i(E.module, cd.value.module, cd.value.module.reduce(into));
    Morphism p(cd.value.module, HH.module, HH.module.reduce(restrict));
    SequenceBuilder sb("uct-classical-cohomology", 0);
    sb.node("0", FPModule::zero(B.ring()))
        .then(zero_in(E.module), "Ext^1(" + hn1 + "(C),B)")
        .then(i, "H^" + std::to_string(n) + "(C,B)")
        .then(p, "Hom(" + hn + "(C),B)")
        .then(zero_out(HH.module), "0");
    SequenceReport r = sb.build();
    r.extra.push_back({"Ext^1 node matches resolve", iso_test(E.module, ext(Hprev.module, B, 1))});
    r.extra.push_back({"split", r.exact() && splitting_test(i, p).split});
    return r;
  }

  ChainTensorData ct = chain_tensor_data(C, B, n);
  TensorModule HT = tensor_module(H.module, B);
  IntMat into(ct.value.module.gens(), HT.module.gens());
  for (std::size_t k = 0; k < HT.module.gens(); ++k)
    into.set_col(k, ct.value.encode(ct.mid.pure(H.decode * HT.left_rep(k), HT.right_rep(k))));
  TensorModule BT = tensor_module(bd.image, B), ZT = tensor_module(Z.module(), B);
  KernelData T = kernel(tensor_map(BT, ZT, b_to_z, identity(B)));
  Morphism d_tensor = tensor_map(ct.mid, BT, bd.epi, identity(B));
  IntMat conn(T.module().gens(), ct.value.module.gens());
  for (std::size_t k = 0; k < ct.value.module.gens(); ++k)
    conn.set_col(k, T.sq.encode(d_tensor.apply(ct.value.decode.col(k))));
  Morphism i(HT.module, ct.value.module, ct.value.module.reduce(into));
  Morphism p(ct.value.module, T.module(), T.module().reduce(conn));
  SequenceBuilder sb("uct-classical-homology", 0);
  sb.node("0", FPModule::zero(B.ring()))
      .then(zero_in(HT.module), hn + "(C)(x)B")
      .then(i, hn + "(C(x)B)")
      .then(p, "Tor_1(" + hn1 + "(C),B)")
      .then(zero_out(T.module()), "0");
  SequenceReport r = sb.build();
  r.extra.push_back({"Tor_1 node matches resolve", iso_test(T.module(), tor(Hprev.module, B, 1))});
  r.extra.push_back({"split", r.exact() && splitting_test(i, p).split});
  return r;
}

// ------------------------------------------------------------ defect and stabilizations

FPModule coh_defect(const Complex& C, int n) { return homology(C, n); }

CohSubStab coh_substab_data(const Complex& C, int n, const FPModule& X) {
  CohSubStab s;
  s.boundary = epi_mono_factor(C.differential(n));
  s.from_chains = hom_module(C.term(n - 1), X);
  s.from_boundaries = hom_module(s.boundary.image, X);
  s.value = cokernel(hom_contra_map(s.from_chains, s.from_boundaries, s.boundary.mono));
  CochainData cd = cochain_data(C, X, n);
  IntMat K(cd.value.module.gens(), s.value.module.gens());
  for (std::size_t k = 0; k < s.value.module.gens(); ++k) {
    Morphism g = s.from_boundaries.decode(s.value.lifts.col(k));
    K.set_col(k, cd.value.encode(cd.mid.encode(compose(g, s.boundary.epi))));
  }
  s.k = Morphism(s.value.module, cd.value.module, cd.value.module.reduce(K));
  return s;
}

FPModule coh_substab(const Complex& C, int n, const FPModule& X) { return coh_substab_data(C, n, X).value.module; }

HomCopresentation hom_copresentation(const Complex& C, int n) {
  HomCopresentation h;
  h.top = cokernel(C.differential(n + 1));
  h.bottom = cokernel(C.differential(n));
  h.dbar = from_cokernel(h.top, C.differential(n));
  return h;
}

SequenceReport hom_copresentation_sequence(const Complex& C, int n, const FPModule& X) {
  HomCopresentation h = hom_copresentation(C, n);
  ChainTensorData ct = chain_tensor_data(C, X, n);
  TensorModule QT = tensor_module(h.top.module, X);
  TensorModule CT = tensor_module(C.term(n - 1), X);
  TensorModule BT = tensor_module(h.bottom.module, X);
  const std::string N = std::to_string(n), N1 = deg(n, -1);
  return SequenceBuilder("hom-copresentation", 0)
      .node("0", FPModule::zero(X.ring()))
      .then(zero_in(ct.value.module), "H_" + N + "(C(x)X)")
      .then(from_subquotient(ct.value, tensor_map(ct.mid, QT, h.top.projection, identity(X))),
            "(C_" + N + "/B_" + N + ")(x)X")
      .then(tensor_map(QT, CT, h.dbar, identity(X)), "C_" + N1 + "(x)X")
      .then(tensor_map(CT, BT, h.bottom.projection, identity(X)), "(C_" + N1 + "/B_" + N1 + ")(x)X")
      .then(zero_out(BT.module), "0")
      .build();
}

HomologyQStab homology_qstab_data(const Complex& C, int n, const FPModule& X) {
  HomologyQStab s;
  s.boundary = epi_mono_factor(C.differential(n));
  s.boundaries = tensor_module(s.boundary.image, X);
  s.chains = tensor_module(C.term(n - 1), X);
  s.value = kernel(tensor_map(s.boundaries, s.chains, s.boundary.mono, identity(X)));
  ChainTensorData ct = chain_tensor_data(C, X, n);
  Morphism d = tensor_map(ct.mid, s.boundaries, s.boundary.epi, identity(X));
  IntMat Q(s.value.module().gens(), ct.value.module.gens());
  for (std::size_t k = 0; k < ct.value.module.gens(); ++k) Q.set_col(k, s.value.sq.encode(d.apply(ct.value.decode.col(k))));
  s.q = Morphism(ct.value.module, s.value.module(), s.value.module().reduce(Q));
  return s;
}

FPModule homology_qstab(const Complex& C, int n, const FPModule& X) {
  return homology_qstab_data(C, n, X).value.module();
}

// ------------------------------------------------------------ arbitrary complexes

SequenceReport uct_general(const Complex& C, const FPModule& B, int n, int depth, UctWhich which) {
  const std::string N = std::to_string(n);
  FPModule H = homology(C, n);
  if (which == UctWhich::Cohomology) {
    SequenceReport r = right_fund_cov(FunctorExpr::cohomology(C, n), B, depth);
    r.display = "uct-general-cohomology";
    for (std::size_t k : nodes_matching(r, R"(R\^(\d+)F\(B\))")) {
      int i = trailing_index(r.nodes[k].label, R"(R\^(\d+)F\(B\))");
      r.extra.push_back({"R^" + std::to_string(i) + " = Ext^" + std::to_string(i) + "(H_" + N + "(C),B)",
                         iso_test(r.nodes[k].module, ext(H, B, i))});
    }
    for (std::size_t k : nodes_matching(r, R"(Fbar\(B\))"))
      r.extra.push_back({"Fbar(B) = coh_substab", iso_test(r.nodes[k].module, coh_substab(C, n, B))});
    relabel(r, {fixed(R"(F\(B\))", "H^" + N + "(C,B)"),
                {R"(R\^(\d+)F\(B\))", [&](int i) { return "Ext^" + std::to_string(i) + "(H_" + N + "(C),B)"; }}});
    return r;
  }
  SequenceReport r = left_fund_cov(FunctorExpr::homology_tensor(C, n), B, depth);
  r.display = "uct-general-homology";
  for (std::size_t k : nodes_matching(r, R"(L_(\d+)F\(B\))")) {
    int i = trailing_index(r.nodes[k].label, R"(L_(\d+)F\(B\))");
    r.extra.push_back({"L_" + std::to_string(i) + " = Tor_" + std::to_string(i) + "(H_" + N + "(C),B)",
                       iso_test(r.nodes[k].module, tor(H, B, i))});
  }
  for (std::size_t k : nodes_matching(r, R"(Funder\(B\))"))
    r.extra.push_back({"Funder(B) = homology_qstab", iso_test(r.nodes[k].module, homology_qstab(C, n, B))});
  relabel(r, {fixed(R"(F\(B\))", "H_" + N + "(C(x)B)"),
              {R"(L_(\d+)F\(B\))", [&](int i) { return "Tor_" + std::to_string(i) + "(H_" + N + "(C),B)"; }}});
  return r;
}

// ------------------------------------------------------------ projective complexes

SequenceReport uct_special(const Complex& C, const FPModule& B, int n, int depth, UctWhich which) {
  need_projective(C, false);
  const std::string N = std::to_string(n), N1 = deg(n, -1);
  const std::string Qn = "C_" + N + "/B_" + N, Qn1 = "C_" + N1 + "/B_" + N1, Hn = "H_" + N + "(C)";
  FPModule H = homology(C, n), Q = chains_mod_boundaries(C, n), Q1 = chains_mod_boundaries(C, n - 1);
  auto check = [](SequenceReport& r, const std::string& pat, auto value_of, auto what) {
    for (std::size_t k : nodes_matching(r, pat)) {
      int i = trailing_index(r.nodes[k].label, pat);
      r.extra.push_back({r.nodes[k].label + " = " + what(i), iso_test(r.nodes[k].module, value_of(i))});
    }
  };
  auto ext_label = [&](int i, const std::string& M) { return "Ext^" + std::to_string(i) + "(" + M + ",B)"; };
  auto tor_label = [&](int i, const std::string& M) { return "Tor_" + std::to_string(i) + "(" + M + ",B)"; };

  if (which == UctWhich::Cohomology) {
    SequenceReport r = right_fund_cov(FunctorExpr::cohomology(C, n), B, depth);
    r.display = "uct-projective-cohomology";
    auto E1 = [&](int i) { return ext(Q1, B, i); };
    check(r, R"(Fbar\(Sigma\^(\d+)B\))", [&](int i) { return E1(i + 1); }, [&](int i) { return ext_label(i + 1, Qn1); });
    check(r, R"(S\^(\d+)F\(B\))", [&](int i) { return ext(Q, B, i); }, [&](int i) { return ext_label(i, Qn); });
    check(r, R"(R\^(\d+)F\(B\))", [&](int i) { return ext(H, B, i); }, [&](int i) { return ext_label(i, Hn); });
    for (std::size_t k : nodes_matching(r, R"(Fbar\(B\))"))
      r.extra.push_back({"Fbar(B) = " + ext_label(1, Qn1), iso_test(r.nodes[k].module, E1(1))});
    if (B.ring().hereditary()) {
      // Ext^2 vanishes, so row 1 pinches to Ext^1(C_n/B_n, B) --iso--> Ext^1(H_n, B)
      for (std::size_t k : nodes_matching(r, R"(S\^1F\(B\))"))
        r.extra.push_back({"pinched isomorphism " + ext_label(1, Qn) + " = " + ext_label(1, Hn), is_iso(r.maps[k])});
      // and directly: Ext^1 of the inclusion H_n -> C_n/B_n
      Morphism j = cycles_into_quotient(C, n);
      Morphism pinch = ext_map_first(ext_group(proj_resolution(j.target(), 2), B, 1),
                                     ext_group(proj_resolution(j.source(), 2), B, 1), j);
      r.extra.push_back({"Ext^1(H_" + N + " -> " + Qn + ", B) is an isomorphism", is_iso(pinch)});
    }
    relabel(r, {fixed(R"(Fbar\(B\))", ext_label(1, Qn1)),
                fixed(R"(F\(B\))", "H^" + N + "(C,B)"),
                {R"(Fbar\(Sigma\^(\d+)B\))", [&](int i) { return ext_label(i + 1, Qn1); }},
                {R"(S\^(\d+)F\(B\))", [&](int i) { return ext_label(i, Qn); }},
                {R"(R\^(\d+)F\(B\))", [&](int i) { return ext_label(i, Hn); }}});
    return r;
  }
  SequenceReport r = left_fund_cov(FunctorExpr::homology_tensor(C, n), B, depth);
  r.display = "uct-flat-homology";
  check(r, R"(Funder\(Omega\^(\d+)B\))", [&](int i) { return tor(Q1, B, i + 1); },
        [&](int i) { return tor_label(i + 1, Qn1); });
  check(r, R"(S_(\d+)F\(B\))", [&](int i) { return tor(Q, B, i); }, [&](int i) { return tor_label(i, Qn); });
  check(r, R"(L_(\d+)F\(B\))", [&](int i) { return tor(H, B, i); }, [&](int i) { return tor_label(i, Hn); });
  for (std::size_t k : nodes_matching(r, R"(Funder\(B\))"))
    r.extra.push_back({"Funder(B) = " + tor_label(1, Qn1), iso_test(r.nodes[k].module, tor(Q1, B, 1))});
  relabel(r, {fixed(R"(Funder\(B\))", tor_label(1, Qn1)),
              fixed(R"(F\(B\))", "H_" + N + "(C(x)B)"),
              {R"(Funder\(Omega\^(\d+)B\))", [&](int i) { return tor_label(i + 1, Qn1); }},
              {R"(S_(\d+)F\(B\))", [&](int i) { return tor_label(i, Qn); }},
              {R"(L_(\d+)F\(B\))", [&](int i) { return tor_label(i, Hn); }}});
  return r;
}

// ------------------------------------------------------------ delta-functor lemmas

bool DeltaChecks::holds() const {
  for (const auto& v : verdicts)
    if (!v.holds) return false;
  return true;
}

std::string DeltaChecks::to_string() const {
  std::ostringstream os;
  for (const auto& v : verdicts) os << v.label << ": " << (v.holds ? "true" : "false") << '\n';
  return os.str();
}

DeltaChecks delta_functor_checks(const Complex& C, const FPModule& B, int n) {
  need_projective(C, false);
  DeltaChecks d;
  FunctorExpr Hn = FunctorExpr::cohomology(C, n), Hn1 = FunctorExpr::cohomology(C, n + 1);
  FunctorExpr Tn = FunctorExpr::homology_tensor(C, n), Tn1 = FunctorExpr::homology_tensor(C, n + 1);
  FPModule Q1 = chains_mod_boundaries(C, n - 1);
  const std::string N = std::to_string(n);
  if (B.ring().quasi_frobenius()) {
    FPModule s1 = satellite(Hn, 1, Side::Right, B);
    d.verdicts.push_back({"theta^" + N + ": S^1H^" + N + "(C,-)(B) = Hbar^" + deg(n, 1) + "(C,-)(B)",
                          iso_test(s1, sub_stabilize(Hn1, B).module) && iso_test(s1, coh_substab(C, n + 1, B))});
  }
  FPModule bar = coh_substab(C, n, B);
  d.verdicts.push_back({"xi^" + N + ": Hbar^" + N + "(C,-)(B) = Ext^1(C_" + deg(n, -1) + "/B_" + deg(n, -1) + ",B)",
                        iso_test(bar, ext(Q1, B, 1)) && iso_test(bar, sub_stabilize(Hn, B).module)});
  FPModule s1 = satellite(Tn, 1, Side::Left, B);
  d.verdicts.push_back({"eta_" + deg(n, 1) + ": S_1H_" + N + "(C(x)-)(B) = underline-H_" + deg(n, 1) + "(C(x)-)(B)",
                        iso_test(s1, quot_stabilize(Tn1, B).module) && iso_test(s1, homology_qstab(C, n + 1, B))});
  FPModule under = homology_qstab(C, n, B);
  d.verdicts.push_back({"tau_" + deg(n, -1) + ": underline-H_" + N + "(C(x)-)(B) = Tor_1(C_" + deg(n, -1) + "/B_" +
                            deg(n, -1) + ",B)",
                        iso_test(under, tor(Q1, B, 1)) && iso_test(under, quot_stabilize(Tn, B).module)});
  return d;
}

}  // namespace fundseq
