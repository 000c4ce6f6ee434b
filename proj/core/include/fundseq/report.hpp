#pragma once

// Finite diagrams N_0 -> N_1 -> ... -> N_k of modules with per-node verdicts.

#include <string>
#include <vector>

#include "fundseq/fpmod.hpp"

namespace fundseq {

// ker g = im f inside the middle module. Throws NotAComplex when g f != 0.
bool is_exact_at(const Morphism& f, const Morphism& g);

struct SequenceNode {
  std::string label;
  FPModule module;
  int row = 0;
  bool exactness_required = true;  // the governing theorem guarantees exactness here
};

struct Verdict {
  std::string label;
  bool holds = false;
};

struct SequenceReport {
  std::string display;  // short name of the diagram, e.g. "rfs-co-fun"
  int depth = 0;
  std::vector<SequenceNode> nodes;
  std::vector<Morphism> maps;       // maps[k] : nodes[k] -> nodes[k+1]
  std::vector<bool> composite_zero;  // composite_zero[k] : maps[k+1] . maps[k] = 0
  std::vector<bool> exact_at;        // exact_at[k] for node k; end nodes are always true
  std::vector<Verdict> extra;        // additional checks (isomorphisms, splittings, ...)

  bool is_complex() const;
  bool exact() const;              // exact at every node
  bool required_exactness() const;  // exact wherever exactness_required
  bool extras_hold() const;
  bool passes() const { return is_complex() && required_exactness() && extras_hold(); }
  // Label of the first failing verdict, or "" when passes().
  std::string first_failure() const;
  std::string node_label(std::size_t k) const;  // "<display> row r exact_at <label>"
  std::string to_string() const;
};

// Incremental construction; verify() fills in the verdicts.
class SequenceBuilder {
 public:
  SequenceBuilder(std::string display, int depth);
  SequenceBuilder& node(std::string label, FPModule module, int row = 0, bool exactness_required = true);
  // Map from the last node to a new node.
  SequenceBuilder& then(const Morphism& map, std::string label, int row = 0, bool exactness_required = true);
  SequenceBuilder& extra(std::string label, bool holds);
  SequenceReport build();

 private:
  SequenceReport r_;
};

void verify(SequenceReport& report);

}  // namespace fundseq
