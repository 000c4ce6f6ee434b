#pragma once

// JSON documents for rings, matrices, modules, morphisms and complexes.
//
//   ring:     {"kind":"Z"} or {"kind":"ZmodN","n":4}
//   matrix:   row-major array of rows; entries are decimal strings (plain JSON
//             integers are accepted on input)
//   module:   {"ring":…, "gens":g, "relations":g x r matrix}, plus
//             "relation_count":r when g = 0
//   morphism: {"ring":…, "source":module, "target":module, "matrix":…}
//   complex:  {"ring":…, "support":[lo,hi], "terms":[C_lo..C_hi],
//              "differentials":[d_{lo+1}..d_hi]}
//
// Nested documents may omit "ring"; they inherit the enclosing one. Entries
// are reduced mod n over Z/n. Errors carry a JSON-pointer location.

#include <optional>
#include <string>
#include <variant>

#include "fundseq/complex.hpp"

namespace fundseq {

using ParsedInput = std::variant<FPModule, Morphism, Complex>;

// Kind is taken from an optional "type" field ("module", "morphism",
// "complex"), else from the keys present. A document without "ring" takes
// `ring`; one whose ring differs from `ring` is a SchemaError.
ParsedInput parse_input(const std::string& document, const std::optional<RingDesc>& ring = {});
FPModule parse_module(const std::string& document, const std::optional<RingDesc>& ring = {});
Morphism parse_morphism(const std::string& document, const std::optional<RingDesc>& ring = {});
Complex parse_complex(const std::string& document, const std::optional<RingDesc>& ring = {});
RingDesc parse_ring(const std::string& document);
// "Z", "Z/n" (as printed by RingDesc::name) or a ring document.
RingDesc parse_ring_name(const std::string& name);

std::string serialize(const RingDesc& ring);
std::string serialize(const IntMat& m);
std::string serialize(const FPModule& M);
std::string serialize(const Morphism& f);
std::string serialize(const Complex& C);

// Whole file as text; SchemaError when unreadable.
std::string read_document(const std::string& path);

}  // namespace fundseq
