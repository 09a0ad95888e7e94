// Copyright 2026 The gmtkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include "gmt/error.h"
#include "gmt/xml_io.h"
#include "support/fixtures.h"
#include "support/random_docs.h"

namespace gmt {
namespace {

using testing::ReadFixture;

std::string TextOf(const NodeItem &item) {
  return *std::get<Feature>(item.value).text();
}

const SegmentRef &SegOf(const NodeItem &item) {
  return std::get<SegmentRef>(item.value);
}

std::string ParseErrorCode(std::string_view text) {
  try {
    ParseGmt(text);
  } catch (const ParseError &e) {
    return e.code();
  }
  return "";
}

TEST_CASE("the four-word sentence") {
  ParsedDocument parsed = ParseGmt(ReadFixture("paul.xml"));
  CHECK(parsed.diagnostics.empty());
  const GmtDocument &doc = parsed.document;
  CHECK(doc.doc_type == "MSAnnot");
  REQUIRE(doc.roots.size() == 4);
  for (const auto &root : doc.roots) CHECK(root.type == "W-level");
  const StructNode &aime = doc.roots[1];
  REQUIRE(aime.items.size() == 5);
  CHECK(std::get<Feature>(aime.items[0].value).category == "lemma");
  CHECK(TextOf(aime.items[0]) == "aimer");
  CHECK(TextOf(aime.items[1]) == "VERB");
  CHECK(TextOf(aime.items[2]) == "present");
  CHECK(TextOf(aime.items[3]) == "3");
  CHECK(SegOf(aime.items[4]) == SegmentRef{IdTargets{{"w2"}}});
}

TEST_CASE("fusion of de and le") {
  ParsedDocument parsed = ParseGmt(ReadFixture("du.xml"));
  CHECK(parsed.diagnostics.empty());
  REQUIRE(parsed.document.roots.size() == 1);
  const StructNode &du = parsed.document.roots[0];
  CHECK(du.type == "W-level");
  REQUIRE(du.items.size() == 1);
  CHECK(SegOf(du.items[0]) == SegmentRef{IdTargets{{"w1"}}});
  REQUIRE(du.children.size() == 2);
  CHECK(TextOf(du.children[0].items[0]) == "de");
  CHECK(TextOf(du.children[0].items[1]) == "PREP");
  CHECK(TextOf(du.children[1].items[0]) == "le");
  CHECK(TextOf(du.children[1].items[1]) == "DET");
}

TEST_CASE("compound lemma is trimmed and round-trips") {
  GmtDocument doc = ParseGmt(ReadFixture("pomme.xml")).document;
  CHECK(TextOf(doc.roots[0].items[0]) == "pomme_de_terre");
  CHECK(ParseGmt(SerializeGmt(doc)).document == doc);
}

TEST_CASE("alternatives") {
  GmtDocument doc = ParseGmt(ReadFixture("bouche.xml")).document;
  REQUIRE(doc.roots[0].items.size() == 2);
  const auto &alts = std::get<AltSet>(doc.roots[0].items[1].value);
  REQUIRE(alts.alternatives.size() == 2);
  CHECK(alts.alternatives[0].features.size() == 4);
  CHECK(alts.alternatives[1].features.size() == 3);
}

TEST_CASE("an empty typed document") {
  ParsedDocument parsed = ParseGmt("<struct type=\"MSAnnot\"/>");
  CHECK(parsed.diagnostics.empty());
  CHECK(parsed.document.doc_type == "MSAnnot");
  CHECK(parsed.document.roots.empty());
  CHECK(SerializeGmt(parsed.document) ==
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        "<struct type=\"MSAnnot\"/>\n");
}

TEST_CASE("canonical serialization") {
  GmtDocument doc;
  doc.doc_type = "T";
  StructNode a;
  a.type = "W-level";
  a.id = "n1";
  a.ref = "x";
  a.items = {
      {Feature{"lemma", "a<b & \"c\""}},
      {Feature{"lex", TargetRef{"e1"}}},
      {Feature{"fs", Feature::Nested{{"g", "m"}}}},
      {Feature{"empty", ""}},
      {AltSet{{Alternative{{{"pos", "N"}}, {}}, Alternative{}}}},
      {Relation{"head", "n2"}},
      {SegmentRef{IdTargets{{"w1"}}}},
      {SegmentRef{IdTargets{{"w3.2", "w4"}}}},
      {SegmentRef{PositionalSpan{2300, 3200}}},
      {SegmentRef{LandmarkEndpoints{"0", "1"}}},
      {Bracket{{NodeItem{Feature{"k", "v"}}}}},
      {Bracket{}},
  };
  a.children.push_back(StructNode{});
  doc.roots = {a, StructNode{}};
  const char *expected =
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<struct type=\"T\">\n"
      "  <struct type=\"W-level\" id=\"n1\" ref=\"x\">\n"
      "    <feat type=\"lemma\">a&lt;b &amp; \"c\"</feat>\n"
      "    <feat type=\"lex\" target=\"#e1\"/>\n"
      "    <feat type=\"fs\">\n"
      "      <feat type=\"g\">m</feat>\n"
      "    </feat>\n"
      "    <feat type=\"empty\"/>\n"
      "    <alt>\n"
      "      <feat type=\"pos\">N</feat>\n"
      "    </alt>\n"
      "    <alt/>\n"
      "    <rel type=\"head\" target=\"#n2\"/>\n"
      "    <seg target=\"#w1\"/>\n"
      "    <seg targets=\"w3.2 w4\"/>\n"
      "    <seg startsAt=\"2300\" endsAt=\"3200\"/>\n"
      "    <startsAt target=\"#0\"/>\n"
      "    <endsAt target=\"#1\"/>\n"
      "    <brack>\n"
      "      <feat type=\"k\">v</feat>\n"
      "    </brack>\n"
      "    <brack/>\n"
      "    <struct/>\n"
      "  </struct>\n"
      "  <struct/>\n"
      "</struct>\n";
  CHECK(SerializeGmt(doc) == expected);
  CHECK(ParseGmt(expected).document == doc);
}

TEST_CASE("serialize refuses invalid documents") {
  GmtDocument doc;
  StructNode n;
  n.items.push_back({SegmentRef{PositionalSpan{9, 1}}});
  doc.roots = {n};
  try {
    SerializeGmt(doc);
    FAIL("expected an error");
  } catch (const Error &e) {
    CHECK(e.code() == "INVERTED_SPAN");
  }
}

TEST_CASE("position attribute spellings") {
  auto seg = [](const char *xml) {
    return SegOf(ParseGmt(xml).document.roots[0].items[0]);
  };
  SegmentRef span{PositionalSpan{2300, 3200}};
  CHECK(seg("<struct type='p'><seg startsAt='2300' endsAt='3200'/></struct>") ==
        span);
  CHECK(seg("<struct type='p'><seg startPosition='2300' "
            "endPosition='3200'/></struct>") == span);
  CHECK(seg("<struct type='p'><seg startsAt='2300' "
            "endPosition='3200'/></struct>") == span);
  CHECK(seg("<struct type='p'><seg startsAt='#a' endsAt='#b'/></struct>") ==
        SegmentRef{LandmarkEndpoints{"a", "b"}});
  CHECK(seg("<struct type='p'><seg targets='#a b'/></struct>") ==
        SegmentRef{IdTargets{{"a", "b"}}});
  CHECK(seg("<struct type='p'><seg/></struct>") == SegmentRef{IdTargets{}});

  CHECK(ParseErrorCode("<struct><seg startsAt='1' startPosition='1' "
                       "endsAt='2'/></struct>") == "DUPLICATE_ATTRIBUTE");
  CHECK(ParseErrorCode("<struct><seg target='#w1' startsAt='1' "
                       "endsAt='2'/></struct>") == "SEG_MODE_CONFLICT");
  CHECK(ParseErrorCode("<struct><seg startsAt='1'/></struct>") ==
        "INCOMPLETE_SPAN");
  CHECK(ParseErrorCode("<struct><seg startsAt='-1' endsAt='2'/></struct>") ==
        "BAD_OFFSET");
  CHECK(ParseErrorCode("<struct><seg startsAt='#a' endsAt='2'/></struct>") ==
        "BAD_OFFSET");
}

TEST_CASE("malformed input reports line and column") {
  try {
    ParseGmt("<struct>\n  <feat type='a'>x</fet>\n</struct>");
    FAIL("expected a parse error");
  } catch (const ParseError &e) {
    CHECK(e.code() == "XML_MALFORMED");
    CHECK(e.line() == 2);
    CHECK(e.column() > 0);
  }
  CHECK(ParseErrorCode("") == "XML_MALFORMED");
  CHECK(ParseErrorCode("<annotation/>") == "NOT_GMT");
  CHECK(ParseErrorCode("<!DOCTYPE struct [<!ENTITY x 'y'>]><struct/>") ==
        "XML_DOCTYPE");
  CHECK(ParseErrorCode("<struct id='a' ID='b'/>") == "DUPLICATE_ATTRIBUTE");
  CHECK(ParseErrorCode("<struct><feat type='a' target='#x'>t</feat></struct>") ==
        "MIXED_FEATURE");
  CHECK(ParseErrorCode("<struct><feat type='a'>t<feat type='b'>u</feat>"
                       "</feat></struct>") == "MIXED_FEATURE");
  CHECK(ParseErrorCode("<struct><rel type='head'/></struct>") ==
        "MISSING_ATTRIBUTE");
  CHECK(ParseErrorCode("<struct><startsAt target='#0'/></struct>") ==
        "UNPAIRED_LANDMARK");
  CHECK(ParseErrorCode("<struct><endsAt target='#0'/></struct>") ==
        "UNPAIRED_LANDMARK");
}

TEST_CASE("unknown elements warn and are skipped") {
  ParsedDocument parsed = ParseGmt(
      "<struct type='t'>\n"
      "  <struct>\n"
      "    <note kind='x'>n</note>\n"
      "    <feat type='a' lang='fr'>b</feat>\n"
      "  </struct>\n"
      "</struct>");
  REQUIRE(parsed.diagnostics.warnings.size() == 2);
  CHECK(parsed.diagnostics.warnings[0].line == 3);
  CHECK(parsed.diagnostics.warnings[0].column == 5);
  CHECK(parsed.diagnostics.warnings[1].line == 4);
  const StructNode &node = parsed.document.roots[0];
  REQUIRE(node.items.size() == 1);
  CHECK(std::get<Feature>(node.items[0].value) == Feature{"a", "b"});
}

TEST_CASE("landmark description and element-form anchors") {
  ParsedDocument lm = ParseGmt(ReadFixture("fig2b_landmarks.xml"));
  CHECK(lm.diagnostics.empty());
  CHECK(lm.document.doc_type == "landmarkDesc");
  REQUIRE(lm.document.roots.size() == 3);
  CHECK(lm.document.roots[1].id == "1");
  CHECK(std::get<Feature>(lm.document.roots[1].items[0].value) ==
        Feature{"position", "2360"});

  ParsedDocument ph = ParseGmt(ReadFixture("fig2b_phonetic.xml"));
  CHECK(ph.diagnostics.empty());
  const StructNode &phone = ph.document.roots[0];
  CHECK(SegOf(phone.items[0]) == SegmentRef{LandmarkEndpoints{"0", "1"}});
  CHECK(std::get<Feature>(phone.items[1].value) == Feature{"phone", "h#"});
}

TEST_CASE("segments used as containers") {
  ParsedDocument parsed = ParseGmt(ReadFixture("morph_layer.xml"));
  CHECK(parsed.diagnostics.warnings.size() == 4);
  const GmtDocument &doc = parsed.document;
  CHECK(doc.doc_type.empty());
  REQUIRE(doc.roots.size() == 2);
  const StructNode &w3 = doc.roots[0];
  CHECK(SegOf(w3.items[0]) == SegmentRef{IdTargets{{"w3"}}});
  REQUIRE(w3.children.size() == 2);
  const StructNode &le = w3.children[1];
  CHECK(SegOf(le.items[0]) == SegmentRef{IdTargets{{"w3.2"}}});
  CHECK(TextOf(le.items[3]) == "masculine");
}

TEST_CASE("round trip over random documents") {
  testing::Rng rng(2024);
  for (int i = 0; i < 500; ++i) {
    GmtDocument doc = testing::RandomDocument(rng);
    std::string once = SerializeGmt(doc);
    ParsedDocument back = ParseGmt(once);
    CHECK(back.diagnostics.empty());
    if (!(back.document == doc)) {
      FAIL_CHECK("round trip differs for\n" << once);
      continue;
    }
    CHECK(SerializeGmt(back.document) == once);
  }
}

TEST_CASE("items keep document order through a round trip") {
  testing::Rng rng(7);
  for (int i = 0; i < 100; ++i) {
    GmtDocument doc = testing::RandomDocument(rng);
    GmtDocument back = ParseGmt(SerializeGmt(doc)).document;
    REQUIRE(back.roots.size() == doc.roots.size());
    for (size_t r = 0; r < doc.roots.size(); ++r) {
      REQUIRE(back.roots[r].items.size() == doc.roots[r].items.size());
      for (size_t k = 0; k < doc.roots[r].items.size(); ++k) {
        CHECK(back.roots[r].items[k].value.index() ==
              doc.roots[r].items[k].value.index());
      }
    }
  }
}

}  // namespace
}  // namespace gmt
