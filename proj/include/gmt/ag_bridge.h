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

// Conversion between annotation graphs and GMT landmark layers.
//
// An annotation graph is a set of timeline nodes and labeled arcs between
// them. In GMT the nodes become a landmarkDesc layer (one landmark per node)
// and the arcs are spread over one layer per arc type (the att_1 label),
// each arc a struct anchored on its two landmarks and carrying its att_2
// label as a payload feature.

#ifndef GMT_AG_BRIDGE_H_
#define GMT_AG_BRIDGE_H_

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gmt/model.h"

namespace gmt {

struct AgArc {
  std::string source;
  std::string target;
  // Label attributes in document order: att_1, att_2, ...
  std::vector<std::pair<std::string, std::string>> labels;

  const std::string *Label(std::string_view name) const;
  bool operator==(const AgArc &) const = default;
};

struct AnnotationGraph {
  std::map<std::string, Offset> nodes;
  std::vector<AgArc> arcs;

  bool operator==(const AnnotationGraph &) const = default;
};

// Reads the <annotation>/<arc> XML format. Throws ParseError on malformed
// XML, missing source/label/target, bad offsets, an id given two offsets,
// or an arc whose source lies after its target.
AnnotationGraph ParseAg(std::string_view text);

// Writes the <annotation>/<arc> format, one arc per line. Nodes not used by
// any arc cannot be represented and are dropped.
std::string SerializeAg(const AnnotationGraph &graph);

// Checks node references and arc direction. Throws gmt::Error.
void CheckGraph(const AnnotationGraph &graph);

// Maps arc types (att_1 values) to a GMT layer type and the data category of
// the payload feature.
class AgTypeMap {
 public:
  struct Entry {
    std::string arc_type;
    std::string doc_type;
    std::string payload;
  };

  // P -> phoneticAnnot/phone, W -> morphAnnot/source.
  static AgTypeMap Default();

  // One `att1<TAB>docType<TAB>payloadCat` per line; '#' comments. Throws
  // ParseError with the line number on malformed or conflicting lines.
  static AgTypeMap Load(std::string_view text);

  // Adds or replaces the entry for entry.arc_type. Throws gmt::Error if the
  // document type is already used by another arc type.
  void Set(Entry entry);

  const Entry *ForArcType(std::string_view arc_type) const;
  const Entry *ForDocType(std::string_view doc_type) const;

 private:
  std::vector<Entry> entries_;
};

constexpr char kLandmarkDocType[] = "landmarkDesc";
constexpr char kLandmarkNodeType[] = "landmark";

// Returns the landmarkDesc layer followed by one layer per arc type, in order
// of first appearance. Throws gmt::Error with code UNTYPED_ARC for an arc
// without att_1 and UNMAPPED_TYPE for an att_1 value absent from the map.
std::vector<GmtDocument> AgToGmt(const AnnotationGraph &graph,
                                 const AgTypeMap &types = AgTypeMap::Default());

// Inverse of AgToGmt. Every root struct of every layer becomes an arc.
// Throws gmt::Error with code UNRESOLVED_TARGET for a landmark reference
// missing from `landmarks`, UNMAPPED_TYPE for an unknown layer type and
// BAD_ARC for a struct without exactly one landmark anchor.
AnnotationGraph GmtToAg(const GmtDocument &landmarks,
                        const std::vector<GmtDocument> &layers,
                        const AgTypeMap &types = AgTypeMap::Default());

}  // namespace gmt

#endif  // GMT_AG_BRIDGE_H_
