#include "fundseq/report.hpp"

#include <sstream>

namespace fundseq {

bool is_exact_at(const Morphism& f, const Morphism& g) {
  if (f.target().gens() != g.source().gens()) throw Error(ErrorKind::DimensionMismatch, "is_exact_at: not composable");
  if (!is_zero(compose(g, f))) throw Error(ErrorKind::NotAComplex, "is_exact_at: g f is nonzero");
  const FPModule& M = g.source();
  IntMat Z = Echelon(IntMat::hconcat(g.matrix(), g.target().relation_lattice())).kernel_basis().row_range(0, M.gens());
  Echelon image(IntMat::hconcat(f.matrix(), M.relation_lattice()));
  for (std::size_t j = 0; j < Z.cols(); ++j)
    if (!image.contains(M.ring().reduce(Z.col(j)))) return false;
  return true;
}

bool SequenceReport::is_complex() const {
  for (bool b : composite_zero)
    if (!b) return false;
  return true;
}

bool SequenceReport::exact() const {
  for (bool b : exact_at)
    if (!b) return false;
  return true;
}

bool SequenceReport::required_exactness() const {
  for (std::size_t k = 0; k < nodes.size(); ++k)
    if (nodes[k].exactness_required && !exact_at[k]) return false;
  return true;
}

bool SequenceReport::extras_hold() const {
  for (const auto& v : extra)
    if (!v.holds) return false;
  return true;
}

std::string SequenceReport::node_label(std::size_t k) const {
  return display + " row " + std::to_string(nodes[k].row) + " exact_at " + nodes[k].label;
}

std::string SequenceReport::first_failure() const {
  for (std::size_t k = 0; k < composite_zero.size(); ++k)
    if (!composite_zero[k]) return display + " row " + std::to_string(nodes[k + 1].row) + " composite_zero at " + nodes[k + 1].label;
  for (std::size_t k = 0; k < nodes.size(); ++k)
    if (nodes[k].exactness_required && !exact_at[k]) return node_label(k);
  for (const auto& v : extra)
    if (!v.holds) return display + " " + v.label;
  return "";
}

std::string SequenceReport::to_string() const {
  std::ostringstream os;
  os << display << " (depth " << depth << ")\n";
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    os << "  [row " << nodes[k].row << "] " << nodes[k].label << " = " << nodes[k].module.describe();
    os << (exact_at[k] ? "  exact" : (nodes[k].exactness_required ? "  NOT EXACT" : "  not exact (allowed)"));
    os << '\n';
  }
  for (const auto& v : extra) os << "  " << v.label << ": " << (v.holds ? "true" : "false") << '\n';
  return os.str();
}

SequenceBuilder::SequenceBuilder(std::string display, int depth) {
  r_.display = std::move(display);
  r_.depth = depth;
}

SequenceBuilder& SequenceBuilder::node(std::string label, FPModule module, int row, bool exactness_required) {
  r_.nodes.push_back(SequenceNode{std::move(label), std::move(module), row, exactness_required});
  return *this;
}

SequenceBuilder& SequenceBuilder::then(const Morphism& map, std::string label, int row, bool exactness_required) {
  if (r_.nodes.empty()) throw Error(ErrorKind::InvalidArgument, "sequence has no starting node");
  if (map.source().gens() != r_.nodes.back().module.gens())
    throw Error(ErrorKind::DimensionMismatch, "map does not start at " + r_.nodes.back().label);
  r_.maps.push_back(map);
  return node(std::move(label), map.target(), row, exactness_required);
}

SequenceBuilder& SequenceBuilder::extra(std::string label, bool holds) {
  r_.extra.push_back(Verdict{std::move(label), holds});
  return *this;
}

SequenceReport SequenceBuilder::build() {
  verify(r_);
  return r_;
}

void verify(SequenceReport& r) {
  const std::size_t n = r.nodes.size();
  if (r.maps.size() + 1 != n && !(n == 0 && r.maps.empty()))
    throw Error(ErrorKind::DimensionMismatch, "a sequence with k nodes needs k-1 maps");
  r.composite_zero.assign(n >= 2 ? n - 2 : 0, true);
  r.exact_at.assign(n, true);
  for (std::size_t k = 0; k + 1 < n; ++k)
    if (r.maps[k].target().gens() != r.nodes[k + 1].module.gens())
      throw Error(ErrorKind::DimensionMismatch, "map endpoints do not match the node list");
  for (std::size_t k = 0; k + 2 < n; ++k) r.composite_zero[k] = is_zero(compose(r.maps[k + 1], r.maps[k]));
  for (std::size_t k = 1; k + 1 < n; ++k)
    r.exact_at[k] = r.composite_zero[k - 1] && is_exact_at(r.maps[k - 1], r.maps[k]);
}

}  // namespace fundseq
