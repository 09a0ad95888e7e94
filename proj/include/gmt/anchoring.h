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

// Resolution of segment references to locations.
//
// Three anchoring mechanisms are supported:
//  * temporal: the segment carries explicit start/end offsets;
//  * event-based: the segment names two landmark nodes whose positions come
//    from a landmarkDesc layer;
//  * object-based: the segment names nodes of another annotation layer.
// Identifier targets may also name tokens of the primary data, listed in a
// sidecar token index so the primary data itself is never modified.

#ifndef GMT_ANCHORING_H_
#define GMT_ANCHORING_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "gmt/model.h"

namespace gmt {

// Half-open [start, end) interval of the primary data.
struct Span {
  Offset start = 0;
  Offset end = 0;

  bool Contains(const Span &other) const {
    return start <= other.start && other.end <= end;
  }
  bool operator==(const Span &) const = default;
};

// Token identifiers with their character spans. Immutable once built.
class TokenIndex {
 public:
  struct Entry {
    std::string id;
    Span span;
  };

  TokenIndex() = default;

  // Reads the sidecar format: one `id<TAB>start<TAB>end` per line; blank
  // lines and lines starting with '#' are ignored. Throws ParseError with the
  // line number on malformed lines, negative or inverted offsets and
  // duplicate identifiers.
  static TokenIndex Load(std::string_view text);

  // Splits `text` on whitespace and names the tokens w1, w2, ... Offsets
  // count Unicode code points of the UTF-8 input. The text is kept as the
  // source text of the index.
  static TokenIndex FromWhitespace(std::string_view text);

  // Builds an index from entries; enforces the same invariants as Load.
  static TokenIndex FromEntries(std::vector<Entry> entries);

  const std::vector<Entry> &entries() const { return entries_; }
  const std::optional<std::string> &source_text() const { return source_; }
  const Span *Find(std::string_view id) const;

  // Writes the sidecar format accepted by Load.
  std::string Serialize() const;

 private:
  std::vector<Entry> entries_;
  std::unordered_map<std::string, size_t> by_id_;
  std::optional<std::string> source_;
};

// Landmark identifier to position.
using LandmarkTable = std::map<std::string, Offset, std::less<>>;

// Collects every node of type "landmark" into a table. Each landmark needs an
// identifier and a textual "position" feature holding a non-negative
// integer. Throws gmt::Error (code BAD_LANDMARK) naming the node path
// otherwise.
LandmarkTable BuildLandmarkTable(const GmtDocument &doc);

// Outcome of resolving one segment. Offset-based resolutions fill `span`;
// object-based ones fill `target_nodes` with node identifiers (or paths, for
// nodes that have no identifier) in target order.
struct ResolvedSpan {
  std::string layer = "primary";
  std::optional<Span> span;
  std::vector<std::string> target_nodes;

  bool operator==(const ResolvedSpan &) const = default;
};

// Whatever context is available for resolution. Pointers may be null; layers
// are keyed by document identifier.
struct AnchorContext {
  const TokenIndex *tokens = nullptr;
  const LandmarkTable *landmarks = nullptr;
  const std::map<std::string, GmtDocument> *layers = nullptr;
};

// Resolves a segment. Identifier targets are looked up in the token index
// first; if not all of them are tokens, each layer (in key order) is tried
// and the first one containing all targets wins. Within a layer a target
// names the node declaring that identifier, or else the first node (in
// preorder) whose own segment addresses exactly that target.
//
// Throws gmt::Error with code UNRESOLVED_TARGET (message names the id) or
// INVERTED_SPAN.
ResolvedSpan ResolveSegment(const SegmentRef &seg, const AnchorContext &context);

enum class ResolveMode { kStrict, kLenient };

struct ExtentResult {
  std::optional<Span> extent;
  // Lenient mode only: one message per segment that could not be resolved.
  std::vector<std::string> warnings;
};

// Covering span of every offset-resolvable segment of `node` and its
// descendants. Object-based resolutions contribute nothing. In strict mode
// the first failure is thrown; in lenient mode it is recorded and skipped.
ExtentResult DerivedExtent(const StructNode &node, const TokenIndex &tokens,
                           const LandmarkTable *landmarks,
                           ResolveMode mode = ResolveMode::kStrict);

}  // namespace gmt

#endif  // GMT_ANCHORING_H_
