#include <doctest.h>

#include <filesystem>

#include "cubical/document.hpp"

using namespace cubical;
using nlohmann::json;

TEST_CASE("fixtures round-trip byte-identically") {
  for (const auto& entry : std::filesystem::directory_iterator(FIXTURES)) {
    if (entry.path().extension() != ".json") continue;
    CAPTURE(entry.path().string());
    Document d = loadDocument(entry.path().string());
    json once = serializeDocument(d);
    Document d2 = parseDocument(once);
    json twice = serializeDocument(d2);
    CHECK(once.dump() == twice.dump());
    CHECK(d2.kind == d.kind);
    CHECK(d2.name == d.name);
    CHECK(d2.expectations == d.expectations);
  }
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(loadDocument(std::string(FIXTURES) + "/no-such-file.json"), DomainError);
  CHECK_THROWS_AS(parseDocument(json{{"kind", "nonsense"}}), DomainError);
  // A finite document whose relation table misses a pair.
  json j = {{"kind", "finite"},
            {"name", "broken"},
            {"hyperplanes", {"A", "B"}},
            {"relations", json::array()}};
  CHECK_THROWS_AS(parseDocument(j), DomainError);
  // Unknown hyperplane name in a relation.
  j["relations"] = {{{"a", "A"}, {"b", "C"}, {"rel", "transverse"}}};
  CHECK_THROWS_AS(parseDocument(j), DomainError);
  // Tiered document with an unparseable crossing rule.
  json t = {{"kind", "tiered"},
            {"name", "broken"},
            {"families", {"V", "H"}},
            {"rules",
             {{{"a", "V"}, {"b", "H"}, {"cross_iff", "i /= j"}, {"noncross", "a- in b-"}}}}};
  CHECK_THROWS_AS(parseDocument(t), DomainError);
  // Cone with a malformed constraint.
  json c = {{"kind", "cone"}, {"name", "broken"}, {"dimension", 3}, {"constraints", {"x >> y"}}};
  CHECK_THROWS_AS(parseDocument(c), DomainError);
}

TEST_CASE("intransitive finite tables are rejected at parse time") {
  json j = {{"kind", "finite"},
            {"name", "intransitive"},
            {"hyperplanes", {"A", "B", "C"}},
            {"relations",
             {{{"a", "A"}, {"b", "B"}, {"rel", "nested"}, {"stmt", "a+ in b+"}},
              {{"a", "B"}, {"b", "C"}, {"rel", "nested"}, {"stmt", "a+ in b+"}},
              {{"a", "A"}, {"b", "C"}, {"rel", "transverse"}}}}};
  CHECK_THROWS_AS(parseDocument(j), DomainError);
}
