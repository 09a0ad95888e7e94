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

#include "gmt/model.h"

#include <algorithm>
#include <unordered_set>

#include "gmt/decimal.h"
#include "gmt/error.h"

namespace gmt {

namespace {

// Calls fn(item, item_path) for every item of the list, descending into
// brackets. Item paths are dotted positions: "2", "2.0", "2.0.1".
void ForEachItem(
    const std::vector<NodeItem> &items, const std::string &prefix,
    const std::function<void(const NodeItem &, const std::string &)> &fn) {
  for (size_t i = 0; i < items.size(); ++i) {
    std::string item_path =
        prefix.empty() ? std::to_string(i) : prefix + "." + std::to_string(i);
    fn(items[i], item_path);
    if (const auto *bracket = std::get_if<Bracket>(&items[i].value)) {
      ForEachItem(bracket->members, item_path, fn);
    }
  }
}

std::string AltPath(const std::string &node_path, const std::string &item_path,
                    size_t alternative) {
  return node_path + ":" + item_path + "@" + std::to_string(alternative);
}

bool IsControl(char c) {
  return static_cast<unsigned char>(c) < 0x20 || c == 0x7f;
}

// Attribute values may not carry any control character: XML normalizes tabs
// and newlines in attributes to spaces.
bool IsAttributeSafe(std::string_view s) {
  return std::none_of(s.begin(), s.end(), IsControl);
}

bool IsTextSafe(std::string_view s) {
  return std::none_of(s.begin(), s.end(), [](char c) {
    return IsControl(c) && c != '\t' && c != '\n';
  });
}

bool IsTrimmed(std::string_view s) {
  auto space = [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r';
  };
  return s.empty() || (!space(s.front()) && !space(s.back()));
}

class StructureValidator {
 public:
  ValidationReport Run(const GmtDocument &doc) {
    if (!IsAttributeSafe(doc.doc_type)) {
      Error("BAD_TEXT", "/", "document type contains control characters");
    }
    for (size_t i = 0; i < doc.roots.size(); ++i) {
      CheckNode(doc.roots[i], ChildPath("", i));
    }
    return std::move(report_);
  }

 private:
  void Error(const char *code, const std::string &path, std::string message) {
    report_.findings.push_back(
        {Severity::kError, code, path, std::move(message)});
  }

  void CheckIdentifier(const std::string &id, const std::string &path,
                       const char *what) {
    if (!IsValidIdentifier(id)) {
      Error("BAD_IDENTIFIER", path,
            std::string(what) + " '" + id + "' is not a valid identifier");
    }
  }

  void CheckNode(const StructNode &node, const std::string &path) {
    if (node.id) {
      if (node.id->empty()) {
        Error("EMPTY_ID", path, "node identifier is empty");
      } else if (!IsValidIdentifier(*node.id)) {
        CheckIdentifier(*node.id, path, "node id");
      } else if (!ids_.insert(*node.id).second) {
        Error("DUPLICATE_ID", path, "duplicate node id '" + *node.id + "'");
      }
    }
    if (node.type && !IsAttributeSafe(*node.type)) {
      Error("BAD_TEXT", path, "node type contains control characters");
    }
    if (node.ref) CheckIdentifier(*node.ref, path, "ref");

    CheckItems(node.items, path, "");
    for (size_t i = 0; i < node.children.size(); ++i) {
      CheckNode(node.children[i], ChildPath(path, i));
    }
  }

  void CheckItems(const std::vector<NodeItem> &items,
                  const std::string &node_path, const std::string &prefix) {
    for (size_t i = 0; i < items.size(); ++i) {
      std::string item_path =
          prefix.empty() ? std::to_string(i) : prefix + "." + std::to_string(i);
      std::string path = node_path + ":" + item_path;
      const auto &value = items[i].value;
      if (i > 0 && std::holds_alternative<AltSet>(value) &&
          std::holds_alternative<AltSet>(items[i - 1].value)) {
        Error("ADJACENT_ALT_SETS", path,
              "alternative set directly follows another alternative set");
      }
      if (const auto *feature = std::get_if<Feature>(&value)) {
        CheckFeature(*feature, path);
      } else if (const auto *alts = std::get_if<AltSet>(&value)) {
        CheckAltSet(*alts, node_path, item_path);
      } else if (const auto *rel = std::get_if<Relation>(&value)) {
        if (rel->type && !IsAttributeSafe(*rel->type)) {
          Error("BAD_TEXT", path, "relation type contains control characters");
        }
        CheckIdentifier(rel->target, path, "relation target");
      } else if (const auto *seg = std::get_if<SegmentRef>(&value)) {
        CheckSegment(*seg, path);
      } else if (const auto *bracket = std::get_if<Bracket>(&value)) {
        CheckItems(bracket->members, node_path, item_path);
      }
    }
  }

  void CheckFeature(const Feature &feature, const std::string &path) {
    if (feature.category.empty()) {
      Error("EMPTY_CATEGORY", path, "feature has no data category");
    } else if (!IsAttributeSafe(feature.category)) {
      Error("BAD_TEXT", path, "feature category contains control characters");
    }
    if (const auto *text = feature.text()) {
      if (!IsTextSafe(*text)) {
        Error("BAD_TEXT", path,
              "value of '" + feature.category +
                  "' contains control characters");
      } else if (!IsTrimmed(*text)) {
        Error("UNTRIMMED_VALUE", path,
              "value of '" + feature.category +
                  "' has leading or trailing whitespace");
      }
    } else if (const auto *nested = feature.nested()) {
      if (nested->empty()) {
        Error("EMPTY_NESTED", path,
              "feature '" + feature.category + "' has an empty nested value");
      }
      for (size_t i = 0; i < nested->size(); ++i) {
        CheckFeature((*nested)[i], path + "/" + std::to_string(i));
      }
    } else if (const auto *target = feature.target()) {
      CheckIdentifier(target->id, path, "feature target");
    }
  }

  void CheckAltSet(const AltSet &alts, const std::string &node_path,
                   const std::string &item_path) {
    std::string path = node_path + ":" + item_path;
    if (alts.alternatives.size() < 2) {
      Error("ALT_TOO_FEW", path,
            "alternative set has " + std::to_string(alts.alternatives.size()) +
                " alternative(s); at least 2 are required");
    }
    for (size_t a = 0; a < alts.alternatives.size(); ++a) {
      const Alternative &alt = alts.alternatives[a];
      std::string alt_path = AltPath(node_path, item_path, a);
      for (size_t f = 0; f < alt.features.size(); ++f) {
        CheckFeature(alt.features[f], alt_path + "#" + std::to_string(f));
      }
      if (const Feature *confidence = FindConfidence(alt.features)) {
        auto value = Decimal::Parse(*confidence->text());
        if (!value || *value < Decimal() || *Decimal::Parse("1") < *value) {
          Error("BAD_CONFIDENCE", alt_path,
                "confidence '" + *confidence->text() +
                    "' is not a decimal in [0,1]");
        }
      }
      for (size_t s = 0; s < alt.structures.size(); ++s) {
        CheckNode(alt.structures[s], ChildPath(alt_path, s));
      }
    }
  }

  void CheckSegment(const SegmentRef &seg, const std::string &path) {
    if (const auto *ids = std::get_if<IdTargets>(&seg.address)) {
      if (ids->ids.empty()) {
        Error("EMPTY_TARGETS", path, "segment has no targets");
      }
      std::unordered_set<std::string> seen;
      for (const auto &id : ids->ids) {
        CheckIdentifier(id, path, "segment target");
        if (!seen.insert(id).second) {
          Error("DUPLICATE_TARGET", path, "segment target '" + id +
                                              "' is listed more than once");
        }
      }
    } else if (const auto *span = std::get_if<PositionalSpan>(&seg.address)) {
      if (span->start > span->end) {
        Error("INVERTED_SPAN", path,
              "span start " + std::to_string(span->start) + " exceeds end " +
                  std::to_string(span->end));
      }
    } else if (const auto *lm = std::get_if<LandmarkEndpoints>(&seg.address)) {
      CheckIdentifier(lm->start, path, "start landmark");
      CheckIdentifier(lm->end, path, "end landmark");
    }
  }

  ValidationReport report_;
  std::unordered_set<std::string> ids_;
};

void CollectFeatureTargets(const Feature &feature, std::set<std::string> *out) {
  if (const auto *target = feature.target()) {
    out->insert(target->id);
  } else if (const auto *nested = feature.nested()) {
    for (const auto &f : *nested) CollectFeatureTargets(f, out);
  }
}

size_t CountFeatureTree(const Feature &feature) {
  size_t n = 1;
  if (const auto *nested = feature.nested()) {
    for (const auto &f : *nested) n += CountFeatureTree(f);
  }
  return n;
}

}  // namespace

const char *SeverityName(Severity severity) {
  return severity == Severity::kError ? "ERROR" : "WARNING";
}

bool ValidationReport::has_errors() const { return first_error() != nullptr; }

const Finding *ValidationReport::first_error() const {
  for (const auto &f : findings) {
    if (f.severity == Severity::kError) return &f;
  }
  return nullptr;
}

void ValidationReport::Append(const ValidationReport &other) {
  findings.insert(findings.end(), other.findings.begin(), other.findings.end());
}

ValidationReport ValidateStructure(const GmtDocument &doc) {
  return StructureValidator().Run(doc);
}

bool IsValidIdentifier(std::string_view id) {
  if (id.empty() || id.front() == '#') return false;
  return std::none_of(id.begin(), id.end(), [](char c) {
    return c == ' ' || IsControl(c);
  });
}

std::string ChildPath(std::string_view parent, size_t index) {
  std::string path(parent);
  path += '/';
  path += std::to_string(index);
  return path;
}

void ForEachNode(
    const StructNode &node, const std::string &path,
    const std::function<void(const StructNode &, const std::string &)> &visit) {
  visit(node, path);
  ForEachItem(node.items, "", [&](const NodeItem &item, const std::string &ip) {
    const auto *alts = std::get_if<AltSet>(&item.value);
    if (alts == nullptr) return;
    for (size_t a = 0; a < alts->alternatives.size(); ++a) {
      const auto &structures = alts->alternatives[a].structures;
      for (size_t s = 0; s < structures.size(); ++s) {
        ForEachNode(structures[s], ChildPath(AltPath(path, ip, a), s), visit);
      }
    }
  });
  for (size_t i = 0; i < node.children.size(); ++i) {
    ForEachNode(node.children[i], ChildPath(path, i), visit);
  }
}

void ForEachNode(
    const GmtDocument &doc,
    const std::function<void(const StructNode &, const std::string &)> &visit) {
  for (size_t i = 0; i < doc.roots.size(); ++i) {
    ForEachNode(doc.roots[i], ChildPath("", i), visit);
  }
}

void ForEachSegment(const StructNode &node,
                    const std::function<void(const SegmentRef &)> &visit) {
  ForEachItem(node.items, "", [&](const NodeItem &item, const std::string &) {
    if (const auto *seg = std::get_if<SegmentRef>(&item.value)) visit(*seg);
  });
}

const SegmentRef *FirstSegment(const StructNode &node) {
  const SegmentRef *first = nullptr;
  ForEachSegment(node, [&](const SegmentRef &seg) {
    if (first == nullptr) first = &seg;
  });
  return first;
}

size_t CountNodes(const GmtDocument &doc) {
  size_t n = 0;
  ForEachNode(doc, [&](const StructNode &, const std::string &) { ++n; });
  return n;
}

void ForEachFeature(
    const GmtDocument &doc,
    const std::function<void(const Feature &, const std::string &)> &visit) {
  ForEachNode(doc, [&](const StructNode &node, const std::string &path) {
    ForEachItem(node.items, "", [&](const NodeItem &item, const std::string &ip) {
      if (const auto *f = std::get_if<Feature>(&item.value)) {
        visit(*f, path + ":" + ip);
      } else if (const auto *alts = std::get_if<AltSet>(&item.value)) {
        for (size_t a = 0; a < alts->alternatives.size(); ++a) {
          const auto &features = alts->alternatives[a].features;
          for (size_t i = 0; i < features.size(); ++i) {
            visit(features[i], AltPath(path, ip, a) + "#" + std::to_string(i));
          }
        }
      }
    });
  });
}

size_t CountFeatures(const GmtDocument &doc) {
  size_t n = 0;
  ForEachFeature(doc, [&](const Feature &f, const std::string &) {
    n += CountFeatureTree(f);
  });
  return n;
}

NodeIndex::NodeIndex(const GmtDocument &doc) {
  ForEachNode(doc, [&](const StructNode &node, const std::string &path) {
    if (node.id && !node.id->empty()) {
      nodes_.try_emplace(*node.id, Entry{&node, path});
    }
  });
}

const StructNode *NodeIndex::Find(std::string_view id) const {
  auto it = nodes_.find(std::string(id));
  return it == nodes_.end() ? nullptr : it->second.node;
}

std::string NodeIndex::PathOf(std::string_view id) const {
  auto it = nodes_.find(std::string(id));
  return it == nodes_.end() ? std::string() : it->second.path;
}

const StructNode *FindNode(const GmtDocument &doc, std::string_view id) {
  return NodeIndex(doc).Find(id);
}

std::set<std::string> CollectReferencedIds(const GmtDocument &doc) {
  std::set<std::string> ids;
  ForEachNode(doc, [&](const StructNode &node, const std::string &) {
    if (node.ref) ids.insert(*node.ref);
    ForEachItem(node.items, "", [&](const NodeItem &item, const std::string &) {
      const auto &value = item.value;
      if (const auto *f = std::get_if<Feature>(&value)) {
        CollectFeatureTargets(*f, &ids);
      } else if (const auto *alts = std::get_if<AltSet>(&value)) {
        for (const auto &alt : alts->alternatives) {
          for (const auto &f : alt.features) CollectFeatureTargets(f, &ids);
        }
      } else if (const auto *rel = std::get_if<Relation>(&value)) {
        ids.insert(rel->target);
      } else if (const auto *seg = std::get_if<SegmentRef>(&value)) {
        if (const auto *t = std::get_if<IdTargets>(&seg->address)) {
          ids.insert(t->ids.begin(), t->ids.end());
        } else if (const auto *lm =
                       std::get_if<LandmarkEndpoints>(&seg->address)) {
          ids.insert(lm->start);
          ids.insert(lm->end);
        }
      }
    });
  });
  return ids;
}

const Feature *FindConfidence(const FeatureBundle &bundle) {
  for (const auto &f : bundle) {
    if (f.category == "confidence" && f.text() != nullptr) return &f;
  }
  return nullptr;
}

const Alternative &SelectPreferredAlternative(const AltSet &alts) {
  if (alts.alternatives.empty()) {
    throw Error("EMPTY_ALT_SET", "cannot select from an empty alternative set");
  }
  auto confidence_of = [](const Alternative &alt) {
    const Feature *f = FindConfidence(alt.features);
    if (f == nullptr) return Decimal();
    return Decimal::Parse(*f->text()).value_or(Decimal());
  };
  const Alternative *best = &alts.alternatives.front();
  Decimal best_confidence = confidence_of(*best);
  for (size_t i = 1; i < alts.alternatives.size(); ++i) {
    Decimal c = confidence_of(alts.alternatives[i]);
    if (c > best_confidence) {
      best = &alts.alternatives[i];
      best_confidence = c;
    }
  }
  return *best;
}

}  // namespace gmt
