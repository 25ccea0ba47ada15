#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "cubical/pocset.hpp"
#include "cubical/tiered.hpp"
#include "cubical/titscone.hpp"

namespace cubical {

// A parsed input document: one of the three supported kinds plus optional
// pinned expectations carried through verify runs.
struct Document {
  std::string kind;  // "finite" | "tiered" | "cone"
  std::string name;
  std::optional<FinitePocset> finite;
  std::optional<TieredPocset> tiered;
  std::optional<CubicalCone> cone;
  nlohmann::json expectations;  // free-form, checked by verify-all
  nlohmann::json raw;           // canonicalized source
};

Document parseDocument(const nlohmann::json& j);
Document loadDocument(const std::string& path);
nlohmann::json serializeDocument(const Document& d);

}  // namespace cubical
