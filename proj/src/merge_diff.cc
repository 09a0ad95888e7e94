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

#include "gmt/merge_diff.h"

#include <algorithm>
#include <iterator>
#include <list>
#include <map>
#include <unordered_map>

#include "gmt/error.h"

namespace gmt {

namespace {

struct KeyInfo {
  AnchorKey key;
  // False for structural keys with an empty fingerprint.
  bool anchored = true;
};

KeyInfo ComputeKey(const StructNode &node) {
  KeyInfo info;
  if (const SegmentRef *seg = FirstSegment(node)) {
    if (const auto *ids = std::get_if<IdTargets>(&seg->address)) {
      std::vector<std::string> sorted = ids->ids;
      std::sort(sorted.begin(), sorted.end());
      for (const auto &id : sorted) {
        if (!info.key.key.empty()) info.key.key += ' ';
        info.key.key += id;
      }
      info.key.mode = AddressMode::kIds;
    } else if (const auto *span = std::get_if<PositionalSpan>(&seg->address)) {
      info.key.key =
          std::to_string(span->start) + "-" + std::to_string(span->end);
      info.key.mode = AddressMode::kPositional;
    } else {
      const auto &lm = std::get<LandmarkEndpoints>(seg->address);
      info.key.key = lm.start + "-" + lm.end;
      info.key.mode = AddressMode::kLandmark;
    }
    return info;
  }
  std::string fingerprint;
  for (const auto &child : node.children) {
    KeyInfo child_key = ComputeKey(child);
    if (!child_key.anchored) continue;
    if (!fingerprint.empty()) fingerprint += ',';
    fingerprint += child_key.key.key;
  }
  info.key.key = "~" + node.type.value_or("") + "[" + fingerprint + "]";
  info.key.mode = AddressMode::kStructural;
  info.anchored = !fingerprint.empty();
  return info;
}

// ---------------------------------------------------------------------------
// Merge

struct Member {
  size_t doc;
  const StructNode *node;
};

struct Group {
  KeyInfo key;
  std::vector<Member> members;
};

template <typename T>
void AppendUnique(std::vector<T> *out, const T &value) {
  if (std::find(out->begin(), out->end(), value) == out->end()) {
    out->push_back(value);
  }
}

StructNode Fold(const std::vector<Member> &members, const Decimal &fill) {
  StructNode folded;
  const StructNode &first = *members.front().node;
  folded.type = first.type;
  for (const auto &m : members) {
    if (!folded.id && m.node->id) folded.id = m.node->id;
    if (!folded.ref && m.node->ref) folded.ref = m.node->ref;
  }

  std::vector<Alternative> bundles;
  std::vector<std::vector<NodeItem>> extras;
  bool anchored = false;
  for (const auto &m : members) {
    Alternative own;
    std::vector<NodeItem> rest;
    bool seen_segment = false;
    for (const auto &item : m.node->items) {
      if (const auto *f = std::get_if<Feature>(&item.value)) {
        own.features.push_back(*f);
      } else if (const auto *alts = std::get_if<AltSet>(&item.value)) {
        for (const auto &alt : alts->alternatives) AppendUnique(&bundles, alt);
      } else if (std::holds_alternative<SegmentRef>(item.value) &&
                 !seen_segment) {
        seen_segment = true;
        if (!anchored) {
          folded.items.push_back(item);
          anchored = true;
        }
      } else {
        rest.push_back(item);
      }
    }
    if (!own.features.empty()) AppendUnique(&bundles, own);
    if (!rest.empty()) AppendUnique(&extras, rest);
  }

  if (bundles.size() == 1 && bundles.front().structures.empty()) {
    for (auto &f : bundles.front().features) folded.items.push_back({f});
  } else if (bundles.size() > 1) {
    for (auto &alt : bundles) {
      if (FindConfidence(alt.features) == nullptr) {
        alt.features.push_back(Feature{"confidence", fill.ToString()});
      }
    }
    folded.items.push_back({AltSet{std::move(bundles)}});
  } else if (bundles.size() == 1) {
    // A lone alternate subtree cannot form a set; keep it as a child.
    for (auto &f : bundles.front().features) folded.items.push_back({f});
    for (auto &s : bundles.front().structures) folded.children.push_back(s);
  }

  if (extras.size() == 1) {
    for (auto &item : extras.front()) folded.items.push_back(item);
  } else {
    for (auto &group : extras) folded.items.push_back({Bracket{group}});
  }

  for (const auto &m : members) {
    for (const auto &child : m.node->children) {
      AppendUnique(&folded.children, child);
    }
  }
  return folded;
}

// ---------------------------------------------------------------------------
// Diff

std::string Escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      case '\\': out += "\\\\"; break;
      default: out += c;
    }
  }
  return out;
}

std::string RenderFeature(const Feature &f) {
  std::string out = f.category + "=";
  if (const auto *text = f.text()) {
    out += *text;
  } else if (const auto *target = f.target()) {
    out += "#" + target->id;
  } else {
    out += "[";
    const auto &nested = *f.nested();
    for (size_t i = 0; i < nested.size(); ++i) {
      if (i > 0) out += ",";
      out += RenderFeature(nested[i]);
    }
    out += "]";
  }
  return out;
}

std::string RenderNode(const StructNode &node);

std::string RenderItem(const NodeItem &item) {
  const auto &value = item.value;
  if (const auto *f = std::get_if<Feature>(&value)) return RenderFeature(*f);
  if (const auto *alts = std::get_if<AltSet>(&value)) {
    std::string out = "alt{";
    for (size_t a = 0; a < alts->alternatives.size(); ++a) {
      if (a > 0) out += "|";
      const auto &alt = alts->alternatives[a];
      for (size_t i = 0; i < alt.features.size(); ++i) {
        if (i > 0) out += ",";
        out += RenderFeature(alt.features[i]);
      }
      for (const auto &s : alt.structures) out += RenderNode(s);
    }
    return out + "}";
  }
  if (const auto *rel = std::get_if<Relation>(&value)) {
    return "rel:" + rel->type.value_or("") + "->#" + rel->target;
  }
  if (const auto *seg = std::get_if<SegmentRef>(&value)) {
    StructNode holder;
    holder.items.push_back({*seg});
    return "seg:" + ComputeKey(holder).key.key;
  }
  const auto &bracket = std::get<Bracket>(value);
  std::string out = "brack{";
  for (size_t i = 0; i < bracket.members.size(); ++i) {
    if (i > 0) out += ",";
    out += RenderItem(bracket.members[i]);
  }
  return out + "}";
}

bool IsKeyed(const StructNode &node) {
  return FirstSegment(node) != nullptr || ComputeKey(node).anchored;
}

// Content of a node as comparable strings. The anchoring segment is left out;
// unkeyed children are folded in, keyed ones get entries of their own.
std::vector<std::string> Content(const StructNode &node) {
  std::vector<std::string> out;
  if (node.type) out.push_back("@type=" + *node.type);
  if (node.id) out.push_back("@id=" + *node.id);
  if (node.ref) out.push_back("@ref=" + *node.ref);
  bool skipped_anchor = false;
  for (const auto &item : node.items) {
    if (std::holds_alternative<SegmentRef>(item.value) && !skipped_anchor) {
      skipped_anchor = true;
      continue;
    }
    out.push_back(RenderItem(item));
  }
  for (const auto &child : node.children) {
    if (!IsKeyed(child)) out.push_back(RenderNode(child));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string RenderNode(const StructNode &node) {
  std::string out = "struct{";
  auto content = Content(node);
  for (size_t i = 0; i < content.size(); ++i) {
    if (i > 0) out += ",";
    out += content[i];
  }
  return out + "}";
}

using ContentMap = std::map<std::string, std::vector<std::string>>;

void CollectKeyed(const StructNode &node, bool is_root, ContentMap *out) {
  if (is_root || IsKeyed(node)) {
    auto &bag = (*out)[ComputeKey(node).key.key];
    auto content = Content(node);
    bag.insert(bag.end(), content.begin(), content.end());
  }
  for (const auto &child : node.children) CollectKeyed(child, false, out);
}

ContentMap CollectDoc(const GmtDocument &doc) {
  ContentMap map;
  for (const auto &root : doc.roots) CollectKeyed(root, true, &map);
  for (auto &[key, bag] : map) std::sort(bag.begin(), bag.end());
  return map;
}

}  // namespace

AnchorKey AnchorKeyOf(const StructNode &node) { return ComputeKey(node).key; }

MergeResult Merge(const std::vector<GmtDocument> &docs,
                  const MergePolicy &policy) {
  MergeResult result;
  if (policy.alt_confidence_fill < Decimal() ||
      *Decimal::Parse("1") < policy.alt_confidence_fill) {
    throw Error("BAD_POLICY", "confidence fill must lie in [0,1]");
  }
  if (docs.empty()) return result;
  result.document.doc_type = docs.front().doc_type;
  for (const auto &doc : docs) {
    if (doc.doc_type != result.document.doc_type) {
      throw Error("MIXED_DOC_TYPES", "cannot merge '" + doc.doc_type +
                                         "' into '" +
                                         result.document.doc_type + "'");
    }
  }

  std::vector<Group> groups;
  std::unordered_map<std::string, size_t> group_of;
  for (size_t d = 0; d < docs.size(); ++d) {
    for (const auto &root : docs[d].roots) {
      KeyInfo key = ComputeKey(root);
      auto [it, added] = group_of.emplace(key.key.key, groups.size());
      if (added) {
        groups.push_back({key, {}});
      } else if (groups[it->second].key.key.mode != key.key.mode) {
        throw Error("MIXED_ADDRESSING", "anchor key '" + key.key.key +
                                            "' is reached by two addressing "
                                            "modes");
      }
      groups[it->second].members.push_back({d, &root});
    }
  }

  // Decide what each group contributes.
  std::vector<ParallelPolicy> mode(groups.size(), policy.on_parallel);
  std::vector<StructNode> folded(groups.size());
  for (size_t g = 0; g < groups.size(); ++g) {
    const Group &group = groups[g];
    if (group.members.size() == 1) {
      mode[g] = ParallelPolicy::kKeepAll;
    } else if (!group.key.anchored &&
               mode[g] == ParallelPolicy::kFoldToAlt) {
      // Identical copies are still recognisable; folding is not.
      result.warnings.push_back("unanchored nodes '" + group.key.key.key +
                                "' cannot be matched; all kept");
      mode[g] = ParallelPolicy::kKeepAll;
    } else if (mode[g] == ParallelPolicy::kFoldToAlt) {
      folded[g] = Fold(group.members, policy.alt_confidence_fill);
    }
  }

  // Roots of the first input mentioning a key keep their relative order;
  // parallel nodes from later inputs are placed after the last node of their
  // group.
  std::list<StructNode> out;
  std::vector<std::list<StructNode>::iterator> last(groups.size(), out.end());
  std::vector<std::vector<const StructNode *>> kept(groups.size());
  for (size_t d = 0; d < docs.size(); ++d) {
    for (const auto &root : docs[d].roots) {
      size_t g = group_of.at(ComputeKey(root).key.key);
      const Group &group = groups[g];
      bool first_doc = group.members.front().doc == d;
      if (mode[g] == ParallelPolicy::kFoldToAlt) {
        if (last[g] == out.end()) last[g] = out.insert(out.end(), folded[g]);
        continue;
      }
      if (mode[g] == ParallelPolicy::kDedupIdentical) {
        bool duplicate = false;
        for (const auto &m : group.members) {
          if (m.doc == d) continue;
          if (std::find(kept[g].begin(), kept[g].end(), m.node) !=
                  kept[g].end() &&
              *m.node == root) {
            duplicate = true;
            break;
          }
        }
        if (duplicate) continue;
        kept[g].push_back(&root);
      }
      auto where = first_doc || last[g] == out.end() ? out.end()
                                                      : std::next(last[g]);
      last[g] = out.insert(where, root);
    }
  }
  result.document.roots.assign(std::make_move_iterator(out.begin()),
                               std::make_move_iterator(out.end()));
  return result;
}

const char *DiffStatusName(DiffStatus status) {
  switch (status) {
    case DiffStatus::kOnlyLeft: return "onlyLeft";
    case DiffStatus::kOnlyRight: return "onlyRight";
    case DiffStatus::kBothEqual: return "bothEqual";
    case DiffStatus::kBothDiffer: return "bothDiffer";
  }
  return "?";
}

bool DiffReport::AllEqual() const {
  return std::all_of(entries.begin(), entries.end(), [](const DiffEntry &e) {
    return e.status == DiffStatus::kBothEqual;
  });
}

std::string DiffReport::Render() const {
  std::string out;
  for (const auto &e : entries) {
    out += DiffStatusName(e.status);
    out += '\t';
    out += Escape(e.anchor_key);
    out += '\t';
    std::string detail;
    for (const auto &r : e.removed) {
      if (!detail.empty()) detail += ' ';
      detail += "-" + Escape(r);
    }
    for (const auto &a : e.added) {
      if (!detail.empty()) detail += ' ';
      detail += "+" + Escape(a);
    }
    out += detail;
    out += '\n';
  }
  return out;
}

DiffReport Diff(const GmtDocument &left, const GmtDocument &right) {
  ContentMap l = CollectDoc(left);
  ContentMap r = CollectDoc(right);
  DiffReport report;
  auto li = l.begin();
  auto ri = r.begin();
  while (li != l.end() || ri != r.end()) {
    DiffEntry entry;
    if (ri == r.end() || (li != l.end() && li->first < ri->first)) {
      entry.anchor_key = li->first;
      entry.status = DiffStatus::kOnlyLeft;
      entry.removed = li->second;
      ++li;
    } else if (li == l.end() || ri->first < li->first) {
      entry.anchor_key = ri->first;
      entry.status = DiffStatus::kOnlyRight;
      entry.added = ri->second;
      ++ri;
    } else {
      entry.anchor_key = li->first;
      std::set_difference(li->second.begin(), li->second.end(),
                          ri->second.begin(), ri->second.end(),
                          std::back_inserter(entry.removed));
      std::set_difference(ri->second.begin(), ri->second.end(),
                          li->second.begin(), li->second.end(),
                          std::back_inserter(entry.added));
      entry.status = entry.removed.empty() && entry.added.empty()
                         ? DiffStatus::kBothEqual
                         : DiffStatus::kBothDiffer;
      ++li;
      ++ri;
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

}  // namespace gmt
