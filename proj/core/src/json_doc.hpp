#pragma once

// nlohmann::json views of the io documents, shared by io.cpp and suites.cpp.

#include "fundseq/complex.hpp"
#include "json.hpp"

namespace fundseq::doc {

using Json = nlohmann::json;

Json to_json(const RingDesc& ring);
Json to_json(const IntMat& m);
Json to_json(const FPModule& M);
Json to_json(const Morphism& f);
Json to_json(const Complex& C);

// `where` is the JSON pointer of j inside the whole document.
RingDesc ring_from(const Json& j, const std::string& where);
FPModule module_from(const Json& j, const RingDesc* inherited, const std::string& where);
Morphism morphism_from(const Json& j, const RingDesc* inherited, const std::string& where);
Complex complex_from(const Json& j, const RingDesc* inherited, const std::string& where);

}  // namespace fundseq::doc
