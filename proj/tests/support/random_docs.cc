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

#include "support/random_docs.h"

#include <algorithm>
#include <set>

namespace gmt::testing {

namespace {

const std::vector<std::string> kPlainWords = {
    "Paul", "aimer", "le", "croissant", "NOUN", "VERB", "3", "plural",
    "h#",   "sh",    "iy", "she",       "NP",   "w-1",  "x_y"};

const std::vector<std::string> kAwkwardWords = {
    "a&b",  "<tag>", "\"q\"", "it's", "]]>", "caf\xc3\xa9",
    "\xe4\xb8\xad\xe6\x96\x87", "\xf0\x9f\x98\x80", "&amp;", "x>y"};

const std::vector<std::string> kCategories = {
    "lemma", "pos", "tense", "person", "number", "gender", "phone", "synCat"};

const std::vector<std::string> kNodeTypes = {
    "W-level", "phone", "landmark", "NP", "MSAnnot", "seg"};

bool IsSpace(char c) { return c == ' ' || c == '\t' || c == '\n'; }

std::string TrimSpaces(std::string s) {
  while (!s.empty() && IsSpace(s.back())) s.pop_back();
  size_t i = 0;
  while (i < s.size() && IsSpace(s[i])) ++i;
  return s.substr(i);
}

// Attribute values: no tabs or newlines.
std::string RandomAttribute(Rng &rng, bool awkward) {
  std::string out;
  int words = static_cast<int>(rng.Uniform(1, 2));
  for (int i = 0; i < words; ++i) {
    if (i > 0) out += ' ';
    out += awkward && rng.Chance(0.3) ? rng.Pick(kAwkwardWords)
                                      : rng.Pick(kPlainWords);
  }
  return out;
}

class DocBuilder {
 public:
  DocBuilder(Rng &rng, const DocShape &shape) : rng_(rng), shape_(shape) {}

  GmtDocument Build() {
    GmtDocument doc;
    if (!rng_.Chance(0.15)) doc.doc_type = RandomAttribute(rng_, shape_.awkward_text);
    int roots = static_cast<int>(rng_.Uniform(0, shape_.max_roots));
    for (int i = 0; i < roots; ++i) doc.roots.push_back(Node(0));
    return doc;
  }

 private:
  std::string FreshId() {
    for (;;) {
      std::string id = RandomIdentifier(rng_);
      if (ids_.insert(id).second) return id;
    }
  }

  StructNode Node(int depth) {
    StructNode node;
    if (rng_.Chance(0.3)) node.id = FreshId();
    if (rng_.Chance(0.8)) {
      node.type = rng_.Chance(0.8) ? rng_.Pick(kNodeTypes)
                                   : RandomAttribute(rng_, shape_.awkward_text);
    }
    if (rng_.Chance(0.1)) node.ref = RandomIdentifier(rng_);
    node.items = Items(depth, shape_.max_items, /*in_bracket=*/false);
    if (depth < shape_.max_depth) {
      int children = static_cast<int>(rng_.Uniform(0, shape_.max_children));
      for (int i = 0; i < children; ++i) node.children.push_back(Node(depth + 1));
    }
    return node;
  }

  std::vector<NodeItem> Items(int depth, int max_items, bool in_bracket) {
    std::vector<NodeItem> items;
    int n = static_cast<int>(rng_.Uniform(0, max_items));
    for (int i = 0; i < n; ++i) {
      int kind = static_cast<int>(rng_.Uniform(0, 99));
      bool after_alt = !items.empty() &&
                       std::holds_alternative<AltSet>(items.back().value);
      if (kind < 45) {
        items.push_back({RandomFeature(depth)});
      } else if (kind < 58 && !after_alt) {
        items.push_back({Alts(depth, in_bracket)});
      } else if (kind < 68) {
        Relation rel;
        if (rng_.Chance(0.6)) rel.type = RandomAttribute(rng_, shape_.awkward_text);
        rel.target = RandomIdentifier(rng_);
        items.push_back({rel});
      } else if (kind < 90) {
        items.push_back({Segment()});
      } else if (depth < shape_.max_depth) {
        items.push_back({Bracket{Items(depth + 1, 3, true)}});
      }
    }
    return items;
  }

  Feature RandomFeature(int depth) {
    Feature f;
    f.category = rng_.Chance(0.85) ? rng_.Pick(kCategories)
                                   : RandomAttribute(rng_, shape_.awkward_text);
    int kind = static_cast<int>(rng_.Uniform(0, 99));
    if (kind < 70 || depth >= shape_.max_depth) {
      f.value = RandomText(rng_, shape_.awkward_text);
    } else if (kind < 85) {
      Feature::Nested nested;
      int n = static_cast<int>(rng_.Uniform(1, 3));
      for (int i = 0; i < n; ++i) nested.push_back(RandomFeature(depth + 1));
      f.value = std::move(nested);
    } else {
      f.value = TargetRef{RandomIdentifier(rng_)};
    }
    return f;
  }

  AltSet Alts(int depth, bool in_bracket) {
    AltSet alts;
    int n = static_cast<int>(rng_.Uniform(2, 3));
    for (int a = 0; a < n; ++a) {
      Alternative alt;
      int features = static_cast<int>(rng_.Uniform(0, 3));
      for (int i = 0; i < features; ++i) {
        alt.features.push_back(RandomFeature(depth + 1));
      }
      if (rng_.Chance(0.6)) {
        alt.features.push_back({"confidence", RandomConfidence(rng_)});
      }
      if (shape_.alt_structures && !in_bracket && depth < shape_.max_depth &&
          rng_.Chance(0.15)) {
        alt.structures.push_back(Node(shape_.max_depth));
      }
      alts.alternatives.push_back(std::move(alt));
    }
    return alts;
  }

  SegmentRef Segment() {
    int kind = static_cast<int>(rng_.Uniform(0, 2));
    if (kind == 0) {
      IdTargets ids;
      int n = static_cast<int>(rng_.Uniform(1, 3));
      std::set<std::string> seen;
      for (int i = 0; i < n; ++i) {
        std::string id = RandomIdentifier(rng_);
        if (seen.insert(id).second) ids.ids.push_back(id);
      }
      return {ids};
    }
    if (kind == 1) {
      PositionalSpan span;
      if (rng_.Chance(0.05)) {
        span.start = span.end = ~Offset{0};
      } else {
        span.start = static_cast<Offset>(rng_.Uniform(0, 1'000'000));
        span.end = span.start + static_cast<Offset>(rng_.Uniform(0, 5000));
      }
      return {span};
    }
    return {LandmarkEndpoints{RandomIdentifier(rng_), RandomIdentifier(rng_)}};
  }

  Rng &rng_;
  const DocShape &shape_;
  std::set<std::string> ids_;
};

}  // namespace

std::string RandomText(Rng &rng, bool awkward) {
  if (rng.Chance(0.05)) return "";
  std::string out;
  int words = static_cast<int>(rng.Uniform(1, 3));
  for (int i = 0; i < words; ++i) {
    if (i > 0) {
      out += awkward && rng.Chance(0.2) ? (rng.Chance(0.5) ? "\n  " : "\t")
                                        : " ";
    }
    out += awkward && rng.Chance(0.3) ? rng.Pick(kAwkwardWords)
                                      : rng.Pick(kPlainWords);
  }
  return TrimSpaces(out);
}

std::string RandomIdentifier(Rng &rng) {
  static const std::string kChars =
      "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789._-";
  std::string id;
  int n = static_cast<int>(rng.Uniform(1, 5));
  for (int i = 0; i < n; ++i) id += kChars[rng.Below(kChars.size())];
  if (rng.Chance(0.05)) id += "\xc3\xa9";
  return id;
}

std::string RandomConfidence(Rng &rng) {
  int k = static_cast<int>(rng.Uniform(0, 10000));
  std::string whole = std::to_string(k / 10000);
  std::string frac = std::to_string(k % 10000);
  frac.insert(0, 4 - frac.size(), '0');
  while (!frac.empty() && frac.back() == '0' && rng.Chance(0.8)) frac.pop_back();
  if (frac.empty()) return rng.Chance(0.5) ? whole : whole + ".0";
  if (whole == "0" && rng.Chance(0.2)) whole.clear();
  return whole + "." + frac;
}

GmtDocument RandomDocument(Rng &rng, const DocShape &shape) {
  return DocBuilder(rng, shape).Build();
}

AnnotationGraph RandomGraph(Rng &rng, int arcs,
                            const std::vector<std::string> &arc_types) {
  // A pool of nodes sorted by offset; arcs always go left to right.
  int pool = std::max(1, static_cast<int>(rng.Uniform(1, arcs + 1)));
  std::vector<Offset> offsets;
  for (int i = 0; i < pool; ++i) {
    offsets.push_back(static_cast<Offset>(rng.Uniform(0, 20000)));
  }
  std::sort(offsets.begin(), offsets.end());
  std::vector<std::string> ids;
  std::set<std::string> seen;
  while (static_cast<int>(ids.size()) < pool) {
    std::string id = rng.Chance(0.5) ? std::to_string(rng.Uniform(0, 999))
                                     : RandomIdentifier(rng);
    if (seen.insert(id).second) ids.push_back(id);
  }

  AnnotationGraph graph;
  for (int a = 0; a < arcs; ++a) {
    size_t i = rng.Below(ids.size());
    size_t j = rng.Below(ids.size());
    if (j < i) std::swap(i, j);
    AgArc arc;
    arc.source = ids[i];
    arc.target = ids[j];
    arc.labels.emplace_back("att_1", rng.Pick(arc_types));
    arc.labels.emplace_back("att_2", RandomAttribute(rng, true));
    if (rng.Chance(0.2)) arc.labels.emplace_back("att_3", RandomAttribute(rng, false));
    graph.nodes[ids[i]] = offsets[i];
    graph.nodes[ids[j]] = offsets[j];
    graph.arcs.push_back(std::move(arc));
  }
  return graph;
}

TokenIndex RandomTokens(Rng &rng, int n) {
  std::vector<TokenIndex::Entry> entries;
  Offset cursor = 0;
  for (int i = 1; i <= n; ++i) {
    cursor += static_cast<Offset>(rng.Uniform(i == 1 ? 0 : 1, 3));
    Offset length = static_cast<Offset>(rng.Uniform(1, 8));
    entries.push_back({"t" + std::to_string(i), {cursor, cursor + length}});
    cursor += length;
  }
  return TokenIndex::FromEntries(std::move(entries));
}

LandmarkTable RandomLandmarks(Rng &rng, int n) {
  std::vector<Offset> positions;
  for (int i = 0; i < n; ++i) {
    positions.push_back(static_cast<Offset>(rng.Uniform(0, 10000)));
  }
  std::sort(positions.begin(), positions.end());
  LandmarkTable table;
  for (int i = 0; i < n; ++i) table["l" + std::to_string(i + 1)] = positions[i];
  return table;
}

StructNode RandomAnchoredTree(Rng &rng, const TokenIndex &tokens,
                              const LandmarkTable &landmarks, int depth) {
  std::vector<std::string> token_ids;
  for (const auto &e : tokens.entries()) token_ids.push_back(e.id);
  std::vector<std::pair<std::string, Offset>> marks(landmarks.begin(),
                                                    landmarks.end());

  auto segment = [&]() -> SegmentRef {
    int kind = static_cast<int>(rng.Uniform(0, 2));
    if (kind == 0 && !token_ids.empty()) {
      IdTargets ids;
      std::set<std::string> seen;
      int n = static_cast<int>(rng.Uniform(1, 3));
      for (int i = 0; i < n; ++i) {
        const std::string &id = rng.Pick(token_ids);
        if (seen.insert(id).second) ids.ids.push_back(id);
      }
      return {ids};
    }
    if (kind == 1 && !marks.empty()) {
      size_t a = rng.Below(marks.size());
      size_t b = rng.Below(marks.size());
      if (marks[b].second < marks[a].second) std::swap(a, b);
      return {LandmarkEndpoints{marks[a].first, marks[b].first}};
    }
    Offset start = static_cast<Offset>(rng.Uniform(0, 20000));
    return {PositionalSpan{start, start + static_cast<Offset>(rng.Uniform(0, 500))}};
  };

  StructNode node;
  node.type = "W-level";
  int segs = static_cast<int>(rng.Uniform(0, 2));
  for (int i = 0; i < segs; ++i) node.items.push_back({segment()});
  if (rng.Chance(0.5)) node.items.push_back({Feature{"lemma", "x"}});
  if (rng.Chance(0.15)) {
    node.items.push_back({Bracket{{NodeItem{segment()}}}});
  }
  if (depth > 0) {
    int children = static_cast<int>(rng.Uniform(0, 3));
    for (int i = 0; i < children; ++i) {
      node.children.push_back(RandomAnchoredTree(rng, tokens, landmarks, depth - 1));
    }
  }
  return node;
}

GmtDocument RandomLayer(Rng &rng, const std::string &doc_type) {
  static const std::vector<std::string> kPool = {"w1", "w2", "w3", "w4", "w5"};
  static const std::vector<std::string> kLemmas = {"le", "chat", "de", "aimer"};
  static const std::vector<std::string> kPos = {"DET", "NOUN", "PREP", "VERB"};

  auto features = [&](StructNode *node) {
    if (rng.Chance(0.9)) node->items.push_back({Feature{"lemma", rng.Pick(kLemmas)}});
    if (rng.Chance(0.7)) node->items.push_back({Feature{"pos", rng.Pick(kPos)}});
    if (rng.Chance(0.2)) {
      node->items.push_back({Feature{"confidence", RandomConfidence(rng)}});
    }
  };
  auto anchor = [&](StructNode *node) {
    IdTargets ids{{rng.Pick(kPool)}};
    if (rng.Chance(0.2)) {
      std::string second = rng.Pick(kPool);
      if (second != ids.ids.front()) ids.ids.push_back(second);
    }
    node->items.push_back({SegmentRef{ids}});
  };

  GmtDocument doc;
  doc.doc_type = doc_type;
  int roots = static_cast<int>(rng.Uniform(0, 5));
  for (int r = 0; r < roots; ++r) {
    StructNode root;
    root.type = "W-level";
    if (!rng.Chance(0.1)) anchor(&root);
    features(&root);
    int children = static_cast<int>(rng.Uniform(0, 2));
    for (int c = 0; c < children; ++c) {
      StructNode child;
      child.type = "W-level";
      if (rng.Chance(0.5)) anchor(&child);
      features(&child);
      root.children.push_back(std::move(child));
    }
    doc.roots.push_back(std::move(root));
  }
  return doc;
}

RandomRegistry MakeRegistry(Rng &rng, int n) {
  RandomRegistry out;
  std::vector<std::string> lines;
  for (int i = 0; i < n; ++i) {
    std::string name = "c" + std::to_string(i);
    std::string line = name;
    std::optional<std::string> parent;
    if (i > 0 && rng.Chance(0.7)) {
      parent = "c" + std::to_string(rng.Below(static_cast<size_t>(i)));
      line += " parent=" + *parent;
    }
    if (!parent || rng.Chance(0.3)) line += " kind=open";
    if (rng.Chance(0.3)) {
      std::string alias = "A" + std::to_string(i);
      line += " alias=" + alias;
      out.aliases[alias] = name;
    }
    out.parents[name] = parent;
    lines.push_back(line);
  }
  std::shuffle(lines.begin(), lines.end(), rng.engine());
  for (const auto &l : lines) out.text += l + "\n";
  return out;
}

}  // namespace gmt::testing
