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

// In-memory model of a stand-off annotation layer.
//
// A layer is a tree of structural nodes. Each node carries an ordered list of
// items: features (data category/value pairs), alternative sets, relations to
// other nodes, segment references into the primary data or another layer, and
// brackets grouping items into a unit. All types are plain values; equality is
// structural.

#ifndef GMT_MODEL_H_
#define GMT_MODEL_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

namespace gmt {

// Position in the primary data. Units (characters, samples, milliseconds) are
// opaque to the library.
using Offset = std::uint64_t;

// Value of a feature that lives in another object, addressed by identifier.
struct TargetRef {
  std::string id;

  bool operator==(const TargetRef &) const = default;
};

// A data category instance attached to a node. The value is a text string,
// a nested list of features, or a pointer to another object.
struct Feature {
  using Nested = std::vector<Feature>;

  std::string category;
  std::variant<std::string, Nested, TargetRef> value;

  const std::string *text() const { return std::get_if<std::string>(&value); }
  const Nested *nested() const { return std::get_if<Nested>(&value); }
  const TargetRef *target() const { return std::get_if<TargetRef>(&value); }

  bool operator==(const Feature &) const = default;
};

using FeatureBundle = std::vector<Feature>;

struct StructNode;

// One member of an alternative set. Normally a feature bundle; alternate
// subtrees are kept in `structures` and carried through untouched.
struct Alternative {
  FeatureBundle features;
  std::vector<StructNode> structures;

  bool operator==(const Alternative &) const;
};

// Mutually exclusive readings of the same node.
struct AltSet {
  std::vector<Alternative> alternatives;

  bool operator==(const AltSet &) const = default;
};

// Directed link from the enclosing node to another node.
struct Relation {
  std::optional<std::string> type;
  std::string target;

  bool operator==(const Relation &) const = default;
};

// Addressing by identifier (tokens of the primary data or nodes of another
// layer).
struct IdTargets {
  std::vector<std::string> ids;

  bool operator==(const IdTargets &) const = default;
};

// Addressing by explicit start and end offsets.
struct PositionalSpan {
  Offset start = 0;
  Offset end = 0;

  bool operator==(const PositionalSpan &) const = default;
};

// Addressing through two landmark nodes.
struct LandmarkEndpoints {
  std::string start;
  std::string end;

  bool operator==(const LandmarkEndpoints &) const = default;
};

struct SegmentRef {
  std::variant<IdTargets, PositionalSpan, LandmarkEndpoints> address;

  bool operator==(const SegmentRef &) const = default;
};

struct NodeItem;

// Items grouped together as a unit.
struct Bracket {
  std::vector<NodeItem> members;

  bool operator==(const Bracket &) const;
};

struct NodeItem {
  std::variant<Feature, AltSet, Relation, SegmentRef, Bracket> value;

  bool operator==(const NodeItem &) const = default;
};

struct StructNode {
  std::optional<std::string> id;
  std::optional<std::string> type;
  std::optional<std::string> ref;
  std::vector<NodeItem> items;
  std::vector<StructNode> children;

  bool operator==(const StructNode &) const = default;
};

inline bool Alternative::operator==(const Alternative &other) const {
  return features == other.features && structures == other.structures;
}

inline bool Bracket::operator==(const Bracket &other) const {
  return members == other.members;
}

// One annotation layer. The document type names the layer ("MSAnnot",
// "landmarkDesc", ...); an empty string means the layer is untyped.
struct GmtDocument {
  std::string doc_type;
  std::vector<StructNode> roots;

  bool operator==(const GmtDocument &) const = default;
};

// ---------------------------------------------------------------------------
// Validation

enum class Severity { kError, kWarning };

const char *SeverityName(Severity severity);

struct Finding {
  Severity severity = Severity::kError;
  std::string code;
  std::string path;
  std::string message;

  bool operator==(const Finding &) const = default;
};

struct ValidationReport {
  std::vector<Finding> findings;

  bool empty() const { return findings.empty(); }
  bool has_errors() const;
  const Finding *first_error() const;
  void Append(const ValidationReport &other);
};

// Checks every structural invariant of the model and reports one finding per
// violation, in document order. Never throws.
ValidationReport ValidateStructure(const GmtDocument &doc);

// True if `id` can be written in an identifier slot: non-empty, no
// whitespace, no control characters and no leading '#'.
bool IsValidIdentifier(std::string_view id);

// ---------------------------------------------------------------------------
// Traversal

// Node paths are written as child indices from the document roots, e.g.
// "/0/3" is the fourth child of the first root. Nodes nested in an alternative
// are addressed as "<owner>:<item>@<alternative>/<index>".
std::string ChildPath(std::string_view parent, size_t index);

// Visits every node in preorder, including subtrees held inside alternative
// sets. The callback receives the node and its path.
void ForEachNode(
    const GmtDocument &doc,
    const std::function<void(const StructNode &, const std::string &)> &visit);

// Visits `node` and its descendants in preorder; `path` is the path of
// `node` itself.
void ForEachNode(
    const StructNode &node, const std::string &path,
    const std::function<void(const StructNode &, const std::string &)> &visit);

// Visits every SegmentRef among a node's own items, including those inside
// brackets, in item order.
void ForEachSegment(const StructNode &node,
                    const std::function<void(const SegmentRef &)> &visit);

// Visits every feature attached to a node of the document: direct items,
// bracket members and alternative bundles. Nested features are not visited
// separately. Paths look like "/0/2:1" (item 1 of node /0/2) or
// "/0:3@1#0" (feature 0 of alternative 1 of item 3).
void ForEachFeature(
    const GmtDocument &doc,
    const std::function<void(const Feature &, const std::string &)> &visit);

// Returns the first SegmentRef among the node's own items, or null.
const SegmentRef *FirstSegment(const StructNode &node);

// Number of nodes in the document, alternative subtrees included.
size_t CountNodes(const GmtDocument &doc);

// Number of features (nested ones included) in the document.
size_t CountFeatures(const GmtDocument &doc);

// ---------------------------------------------------------------------------
// Lookup

// Identifier to node map over one document. The document must outlive the
// index. When an identifier is declared twice the first node wins.
class NodeIndex {
 public:
  explicit NodeIndex(const GmtDocument &doc);

  const StructNode *Find(std::string_view id) const;
  // Path of the node with this identifier, or empty.
  std::string PathOf(std::string_view id) const;

  size_t size() const { return nodes_.size(); }

 private:
  struct Entry {
    const StructNode *node;
    std::string path;
  };
  std::unordered_map<std::string, Entry> nodes_;
};

// Returns the node declaring `id`, or null.
const StructNode *FindNode(const GmtDocument &doc, std::string_view id);

// Every identifier the document points at: segment targets, relation and
// feature targets, node `ref` attributes and landmark endpoints.
std::set<std::string> CollectReferencedIds(const GmtDocument &doc);

// ---------------------------------------------------------------------------
// Alternatives

// The confidence feature of a bundle, if present and textual.
const Feature *FindConfidence(const FeatureBundle &bundle);

// Picks the alternative with the highest confidence. Bundles without a
// confidence feature (or with an unparsable one) count as zero; ties go to
// the earliest alternative. Throws gmt::Error on an empty set.
const Alternative &SelectPreferredAlternative(const AltSet &alts);

}  // namespace gmt

#endif  // GMT_MODEL_H_
