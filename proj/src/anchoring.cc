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

#include "gmt/anchoring.h"

#include <algorithm>

#include "gmt/decimal.h"
#include "gmt/error.h"

namespace gmt {

namespace {

bool IsUtf8Continuation(char c) {
  return (static_cast<unsigned char>(c) & 0xC0) == 0x80;
}

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> fields;
  size_t start = 0;
  while (true) {
    size_t tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return fields;
}

[[noreturn]] void Unresolved(const std::string &id, const std::string &why) {
  throw Error("UNRESOLVED_TARGET", "unresolved target '" + id + "': " + why);
}

// Finds the node a target identifier names inside one layer, returning its
// identifier or path. Empty if the layer has no such node.
class LayerLookup {
 public:
  explicit LayerLookup(const GmtDocument &doc) : index_(doc) {
    ForEachNode(doc, [&](const StructNode &node, const std::string &path) {
      const SegmentRef *seg = FirstSegment(node);
      if (seg == nullptr) return;
      const auto *ids = std::get_if<IdTargets>(&seg->address);
      if (ids == nullptr || ids->ids.size() != 1) return;
      by_segment_.try_emplace(ids->ids.front(),
                              node.id ? *node.id : path);
    });
  }

  std::optional<std::string> Lookup(const std::string &target) const {
    if (index_.Find(target) != nullptr) return target;
    auto it = by_segment_.find(target);
    if (it != by_segment_.end()) return it->second;
    return std::nullopt;
  }

 private:
  NodeIndex index_;
  std::unordered_map<std::string, std::string> by_segment_;
};

}  // namespace

TokenIndex TokenIndex::FromEntries(std::vector<Entry> entries) {
  TokenIndex index;
  for (size_t i = 0; i < entries.size(); ++i) {
    const Entry &e = entries[i];
    if (!IsValidIdentifier(e.id)) {
      throw Error("BAD_TOKEN", "invalid token id '" + e.id + "'");
    }
    if (e.span.start > e.span.end) {
      throw Error("BAD_TOKEN", "token '" + e.id + "' has start after end");
    }
    if (!index.by_id_.emplace(e.id, i).second) {
      throw Error("BAD_TOKEN", "duplicate token id '" + e.id + "'");
    }
  }
  index.entries_ = std::move(entries);
  return index;
}

TokenIndex TokenIndex::Load(std::string_view text) {
  TokenIndex index;
  int line_no = 0;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;

    auto fields = SplitTabs(line);
    if (fields.size() != 3) {
      throw ParseError("BAD_TOKEN_LINE",
                       "expected id<TAB>start<TAB>end, got " +
                           std::to_string(fields.size()) + " field(s)",
                       line_no, 1);
    }
    std::string id(fields[0]);
    auto start = ParseOffset(fields[1]);
    auto end = ParseOffset(fields[2]);
    if (!IsValidIdentifier(id)) {
      throw ParseError("BAD_TOKEN_LINE", "invalid token id '" + id + "'",
                       line_no, 1);
    }
    if (!start || !end) {
      throw ParseError("BAD_TOKEN_LINE",
                       "offsets must be non-negative integers", line_no, 1);
    }
    if (*start > *end) {
      throw ParseError("BAD_TOKEN_LINE", "token start exceeds end", line_no,
                       1);
    }
    if (!index.by_id_.emplace(id, index.entries_.size()).second) {
      throw ParseError("BAD_TOKEN_LINE", "duplicate token id '" + id + "'",
                       line_no, 1);
    }
    index.entries_.push_back({std::move(id), Span{*start, *end}});
  }
  return index;
}

TokenIndex TokenIndex::FromWhitespace(std::string_view text) {
  std::vector<Entry> entries;
  Offset position = 0;
  std::optional<Offset> token_start;
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (IsUtf8Continuation(c)) continue;
    if (IsSpace(c)) {
      if (token_start) {
        entries.push_back({"w" + std::to_string(entries.size() + 1),
                           Span{*token_start, position}});
        token_start.reset();
      }
    } else if (!token_start) {
      token_start = position;
    }
    ++position;
  }
  if (token_start) {
    entries.push_back({"w" + std::to_string(entries.size() + 1),
                       Span{*token_start, position}});
  }
  TokenIndex index = FromEntries(std::move(entries));
  index.source_ = std::string(text);
  return index;
}

const Span *TokenIndex::Find(std::string_view id) const {
  auto it = by_id_.find(std::string(id));
  return it == by_id_.end() ? nullptr : &entries_[it->second].span;
}

std::string TokenIndex::Serialize() const {
  std::string out;
  for (const auto &e : entries_) {
    out += e.id + "\t" + std::to_string(e.span.start) + "\t" +
           std::to_string(e.span.end) + "\n";
  }
  return out;
}

LandmarkTable BuildLandmarkTable(const GmtDocument &doc) {
  LandmarkTable table;
  ForEachNode(doc, [&](const StructNode &node, const std::string &path) {
    if (node.type != "landmark") return;
    if (!node.id || node.id->empty()) {
      throw Error("BAD_LANDMARK", "landmark at " + path + " has no id");
    }
    const Feature *position = nullptr;
    for (const auto &item : node.items) {
      const auto *f = std::get_if<Feature>(&item.value);
      if (f != nullptr && f->category == "position") {
        position = f;
        break;
      }
    }
    if (position == nullptr || position->text() == nullptr) {
      throw Error("BAD_LANDMARK",
                  "landmark '" + *node.id + "' at " + path +
                      " has no textual position");
    }
    auto value = ParseOffset(*position->text());
    if (!value) {
      throw Error("BAD_LANDMARK", "landmark '" + *node.id + "' at " + path +
                                      ": position '" + *position->text() +
                                      "' is not a non-negative integer");
    }
    if (!table.emplace(*node.id, *value).second) {
      throw Error("BAD_LANDMARK",
                  "landmark id '" + *node.id + "' declared twice");
    }
  });
  return table;
}

ResolvedSpan ResolveSegment(const SegmentRef &seg,
                            const AnchorContext &context) {
  ResolvedSpan result;
  if (const auto *span = std::get_if<PositionalSpan>(&seg.address)) {
    if (span->start > span->end) {
      throw Error("INVERTED_SPAN", "span " + std::to_string(span->start) +
                                       "-" + std::to_string(span->end) +
                                       " is inverted");
    }
    result.span = Span{span->start, span->end};
    return result;
  }

  if (const auto *lm = std::get_if<LandmarkEndpoints>(&seg.address)) {
    if (context.landmarks == nullptr) {
      Unresolved(lm->start, "no landmark table available");
    }
    auto start = context.landmarks->find(lm->start);
    if (start == context.landmarks->end()) {
      Unresolved(lm->start, "no such landmark");
    }
    auto end = context.landmarks->find(lm->end);
    if (end == context.landmarks->end()) Unresolved(lm->end, "no such landmark");
    if (start->second > end->second) {
      throw Error("INVERTED_SPAN", "landmark '" + lm->start + "' at " +
                                       std::to_string(start->second) +
                                       " lies after landmark '" + lm->end +
                                       "' at " + std::to_string(end->second));
    }
    result.span = Span{start->second, end->second};
    return result;
  }

  const auto &ids = std::get<IdTargets>(seg.address).ids;
  if (ids.empty()) throw Error("UNRESOLVED_TARGET", "segment has no targets");

  // Tokens of the primary data: covering span.
  std::optional<std::string> missing;
  if (context.tokens != nullptr) {
    Span cover;
    for (size_t i = 0; i < ids.size(); ++i) {
      const Span *s = context.tokens->Find(ids[i]);
      if (s == nullptr) {
        missing = ids[i];
        break;
      }
      cover = i == 0 ? *s
                     : Span{std::min(cover.start, s->start),
                            std::max(cover.end, s->end)};
    }
    if (!missing) {
      result.span = cover;
      return result;
    }
  }

  // Nodes of another layer: object-based anchoring.
  if (context.layers != nullptr) {
    for (const auto &[name, layer] : *context.layers) {
      LayerLookup lookup(layer);
      std::vector<std::string> nodes;
      for (const auto &id : ids) {
        auto node = lookup.Lookup(id);
        if (!node) {
          if (!missing) missing = id;
          break;
        }
        nodes.push_back(*node);
      }
      if (nodes.size() == ids.size()) {
        result.layer = name;
        result.target_nodes = std::move(nodes);
        return result;
      }
    }
  }

  if (context.tokens == nullptr && context.layers == nullptr) {
    Unresolved(ids.front(), "no token index or layer available");
  }
  Unresolved(missing.value_or(ids.front()), "not found in any context");
}

namespace {

void Extend(std::optional<Span> *extent, const Span &s) {
  if (!*extent) {
    *extent = s;
  } else {
    (*extent)->start = std::min((*extent)->start, s.start);
    (*extent)->end = std::max((*extent)->end, s.end);
  }
}

void CollectExtent(const StructNode &node, const AnchorContext &context,
                   ResolveMode mode, ExtentResult *result) {
  ForEachSegment(node, [&](const SegmentRef &seg) {
    try {
      ResolvedSpan r = ResolveSegment(seg, context);
      if (r.span) Extend(&result->extent, *r.span);
    } catch (const Error &e) {
      if (mode == ResolveMode::kStrict) throw;
      result->warnings.push_back(e.what());
    }
  });
  for (const auto &child : node.children) {
    CollectExtent(child, context, mode, result);
  }
}

}  // namespace

ExtentResult DerivedExtent(const StructNode &node, const TokenIndex &tokens,
                           const LandmarkTable *landmarks, ResolveMode mode) {
  AnchorContext context;
  context.tokens = &tokens;
  context.landmarks = landmarks;
  ExtentResult result;
  CollectExtent(node, context, mode, &result);
  return result;
}

}  // namespace gmt
