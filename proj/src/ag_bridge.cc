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

#include "gmt/ag_bridge.h"

#include <algorithm>

#include "gmt/anchoring.h"
#include "gmt/decimal.h"
#include "gmt/error.h"
#include "xml_tree.h"

namespace gmt {

namespace {

constexpr char kTypeLabel[] = "att_1";
constexpr char kPayloadLabel[] = "att_2";

struct Endpoint {
  std::string id;
  Offset offset;
};

Endpoint ReadEndpoint(const xml::Element &el) {
  const std::string *id = el.Attribute("id");
  const std::string *offset = el.Attribute("offset");
  if (id == nullptr || offset == nullptr) {
    throw ParseError("BAD_ARC", "<" + el.name + "> needs id and offset",
                     el.line, el.column);
  }
  if (!IsValidIdentifier(*id)) {
    throw ParseError("BAD_ARC", "invalid node id '" + *id + "'", el.line,
                     el.column);
  }
  auto value = ParseOffset(*offset);
  if (!value) {
    throw ParseError("BAD_OFFSET",
                     "offset '" + *offset + "' is not a non-negative integer",
                     el.line, el.column);
  }
  return {*id, *value};
}

void AddNode(AnnotationGraph *graph, const Endpoint &node,
             const xml::Element &el) {
  auto [it, inserted] = graph->nodes.emplace(node.id, node.offset);
  if (!inserted && it->second != node.offset) {
    throw ParseError("CONFLICTING_OFFSET",
                     "node '" + node.id + "' has offsets " +
                         std::to_string(it->second) + " and " +
                         std::to_string(node.offset),
                     el.line, el.column);
  }
}

}  // namespace

const std::string *AgArc::Label(std::string_view name) const {
  for (const auto &[k, v] : labels) {
    if (k == name) return &v;
  }
  return nullptr;
}

AnnotationGraph ParseAg(std::string_view text) {
  xml::Element root = xml::Parse(text);
  if (root.name != "annotation") {
    throw ParseError("NOT_AG",
                     "document element is <" + root.name +
                         ">, expected <annotation>",
                     root.line, root.column);
  }
  AnnotationGraph graph;
  for (const auto &arc_el : root.children) {
    if (arc_el.name != "arc") {
      throw ParseError("BAD_ARC", "unexpected <" + arc_el.name + ">",
                       arc_el.line, arc_el.column);
    }
    const xml::Element *source = nullptr;
    const xml::Element *label = nullptr;
    const xml::Element *target = nullptr;
    for (const auto &part : arc_el.children) {
      const xml::Element **slot = part.name == "source"   ? &source
                                  : part.name == "label"  ? &label
                                  : part.name == "target" ? &target
                                                          : nullptr;
      if (slot == nullptr || *slot != nullptr) {
        throw ParseError("BAD_ARC", "unexpected <" + part.name + "> in <arc>",
                         part.line, part.column);
      }
      *slot = &part;
    }
    if (source == nullptr || label == nullptr || target == nullptr) {
      throw ParseError("BAD_ARC", "<arc> needs source, label and target",
                       arc_el.line, arc_el.column);
    }
    Endpoint from = ReadEndpoint(*source);
    Endpoint to = ReadEndpoint(*target);
    AddNode(&graph, from, *source);
    AddNode(&graph, to, *target);
    if (from.offset > to.offset) {
      throw ParseError("BAD_ARC",
                       "arc runs backwards from " + std::to_string(from.offset) +
                           " to " + std::to_string(to.offset),
                       arc_el.line, arc_el.column);
    }
    graph.arcs.push_back({from.id, to.id, label->attributes});
  }
  return graph;
}

std::string SerializeAg(const AnnotationGraph &graph) {
  CheckGraph(graph);
  std::string out = xml::kDeclaration;
  out += "<annotation>\n";
  for (const auto &arc : graph.arcs) {
    out += "<arc><source id=\"" + xml::EscapeAttribute(arc.source) +
           "\" offset=\"" + std::to_string(graph.nodes.at(arc.source)) +
           "\"/><label";
    for (const auto &[k, v] : arc.labels) {
      out += " " + k + "=\"" + xml::EscapeAttribute(v) + "\"";
    }
    out += "/><target id=\"" + xml::EscapeAttribute(arc.target) +
           "\" offset=\"" + std::to_string(graph.nodes.at(arc.target)) +
           "\"/></arc>\n";
  }
  out += "</annotation>\n";
  return out;
}

void CheckGraph(const AnnotationGraph &graph) {
  for (const auto &arc : graph.arcs) {
    auto source = graph.nodes.find(arc.source);
    auto target = graph.nodes.find(arc.target);
    if (source == graph.nodes.end() || target == graph.nodes.end()) {
      throw Error("UNRESOLVED_TARGET", "arc " + arc.source + "->" +
                                           arc.target +
                                           " references an unknown node");
    }
    if (source->second > target->second) {
      throw Error("INVERTED_SPAN",
                  "arc " + arc.source + "->" + arc.target + " runs backwards");
    }
  }
}

AgTypeMap AgTypeMap::Default() {
  AgTypeMap map;
  map.Set({"P", "phoneticAnnot", "phone"});
  map.Set({"W", "morphAnnot", "source"});
  return map;
}

AgTypeMap AgTypeMap::Load(std::string_view text) {
  AgTypeMap map = Default();
  int line_no = 0;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (xml::Trim(line).empty() || line.front() == '#') continue;

    std::vector<std::string> fields;
    size_t start = 0;
    while (true) {
      size_t tab = line.find('\t', start);
      fields.emplace_back(line.substr(start, tab - start));
      if (tab == std::string_view::npos) break;
      start = tab + 1;
    }
    if (fields.size() != 3 ||
        std::any_of(fields.begin(), fields.end(),
                    [](const std::string &f) { return f.empty(); })) {
      throw ParseError("BAD_MAP_LINE", "expected att1<TAB>docType<TAB>payload",
                       line_no, 1);
    }
    try {
      map.Set({fields[0], fields[1], fields[2]});
    } catch (const Error &e) {
      throw ParseError("BAD_MAP_LINE", e.what(), line_no, 1);
    }
  }
  return map;
}

void AgTypeMap::Set(Entry entry) {
  if (entry.doc_type == kLandmarkDocType) {
    throw Error("BAD_TYPE_MAP", "'" + entry.doc_type + "' is reserved");
  }
  for (const auto &e : entries_) {
    if (e.doc_type == entry.doc_type && e.arc_type != entry.arc_type) {
      throw Error("BAD_TYPE_MAP", "document type '" + entry.doc_type +
                                      "' already used for arc type '" +
                                      e.arc_type + "'");
    }
  }
  for (auto &e : entries_) {
    if (e.arc_type == entry.arc_type) {
      e = std::move(entry);
      return;
    }
  }
  entries_.push_back(std::move(entry));
}

const AgTypeMap::Entry *AgTypeMap::ForArcType(std::string_view arc_type) const {
  for (const auto &e : entries_) {
    if (e.arc_type == arc_type) return &e;
  }
  return nullptr;
}

const AgTypeMap::Entry *AgTypeMap::ForDocType(std::string_view doc_type) const {
  for (const auto &e : entries_) {
    if (e.doc_type == doc_type) return &e;
  }
  return nullptr;
}

std::vector<GmtDocument> AgToGmt(const AnnotationGraph &graph,
                                 const AgTypeMap &types) {
  CheckGraph(graph);

  GmtDocument landmarks;
  landmarks.doc_type = kLandmarkDocType;
  std::vector<std::pair<Offset, std::string>> order;
  for (const auto &[id, offset] : graph.nodes) order.emplace_back(offset, id);
  std::sort(order.begin(), order.end());
  for (const auto &[offset, id] : order) {
    StructNode node;
    node.type = kLandmarkNodeType;
    node.id = id;
    node.items.push_back({Feature{"position", std::to_string(offset)}});
    landmarks.roots.push_back(std::move(node));
  }

  std::vector<GmtDocument> docs;
  docs.push_back(std::move(landmarks));
  std::map<std::string, size_t> layer_of;
  for (const auto &arc : graph.arcs) {
    const std::string *arc_type = arc.Label(kTypeLabel);
    if (arc_type == nullptr) {
      throw Error("UNTYPED_ARC",
                  "arc " + arc.source + "->" + arc.target + " has no att_1");
    }
    const AgTypeMap::Entry *entry = types.ForArcType(*arc_type);
    if (entry == nullptr) {
      throw Error("UNMAPPED_TYPE",
                  "no layer mapping for arc type '" + *arc_type + "'");
    }
    auto [it, added] = layer_of.emplace(*arc_type, docs.size());
    if (added) {
      GmtDocument layer;
      layer.doc_type = entry->doc_type;
      docs.push_back(std::move(layer));
    }

    StructNode node;
    node.type = entry->payload;
    node.items.push_back({SegmentRef{LandmarkEndpoints{arc.source, arc.target}}});
    for (const auto &[name, value] : arc.labels) {
      if (name == kTypeLabel) continue;
      const std::string &category =
          name == kPayloadLabel ? entry->payload : name;
      node.items.push_back({Feature{category, value}});
    }
    docs[it->second].roots.push_back(std::move(node));
  }
  return docs;
}

AnnotationGraph GmtToAg(const GmtDocument &landmarks,
                        const std::vector<GmtDocument> &layers,
                        const AgTypeMap &types) {
  if (landmarks.doc_type != kLandmarkDocType) {
    throw Error("NOT_LANDMARK_DOC", "expected a landmarkDesc document, got '" +
                                        landmarks.doc_type + "'");
  }
  AnnotationGraph graph;
  for (const auto &[id, offset] : BuildLandmarkTable(landmarks)) {
    graph.nodes.emplace(id, offset);
  }

  for (const auto &layer : layers) {
    const AgTypeMap::Entry *entry = types.ForDocType(layer.doc_type);
    if (entry == nullptr) {
      throw Error("UNMAPPED_TYPE",
                  "no arc type mapped to layer '" + layer.doc_type + "'");
    }
    for (size_t i = 0; i < layer.roots.size(); ++i) {
      const StructNode &node = layer.roots[i];
      std::string where = layer.doc_type + ChildPath("", i);
      std::vector<const LandmarkEndpoints *> anchors;
      for (const auto &item : node.items) {
        const auto *seg = std::get_if<SegmentRef>(&item.value);
        if (seg == nullptr) continue;
        const auto *lm = std::get_if<LandmarkEndpoints>(&seg->address);
        if (lm == nullptr) {
          throw Error("BAD_ARC", where + ": segment is not landmark-anchored");
        }
        anchors.push_back(lm);
      }
      if (anchors.size() != 1) {
        throw Error("BAD_ARC", where + ": expected exactly one landmark anchor");
      }
      for (const std::string *id : {&anchors[0]->start, &anchors[0]->end}) {
        if (graph.nodes.count(*id) == 0) {
          throw Error("UNRESOLVED_TARGET",
                      where + ": unresolved target '" + *id + "'");
        }
      }

      AgArc arc;
      arc.source = anchors[0]->start;
      arc.target = anchors[0]->end;
      arc.labels.emplace_back(kTypeLabel, entry->arc_type);
      for (const auto &item : node.items) {
        const auto *f = std::get_if<Feature>(&item.value);
        if (f == nullptr) continue;
        if (f->text() == nullptr) {
          throw Error("BAD_ARC", where + ": label feature '" + f->category +
                                     "' is not plain text");
        }
        arc.labels.emplace_back(
            f->category == entry->payload ? kPayloadLabel : f->category,
            *f->text());
      }
      graph.arcs.push_back(std::move(arc));
    }
  }
  CheckGraph(graph);
  return graph;
}

}  // namespace gmt
