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

// Merging and comparing annotation layers.
//
// Nodes of different layers are matched through their anchor key, the
// canonical spelling of where they point in the data:
//   identifier targets   "w1" or "w3.2 w4" (sorted, space separated)
//   positional span      "2300-3200"
//   landmark endpoints   "0-3"
// A node without a segment is keyed by its type and the keys of its anchored
// descendants, e.g. "~W-level[w1,w2,w3]".

#ifndef GMT_MERGE_DIFF_H_
#define GMT_MERGE_DIFF_H_

#include <optional>
#include <string>
#include <vector>

#include "gmt/decimal.h"
#include "gmt/model.h"

namespace gmt {

enum class AddressMode { kIds, kPositional, kLandmark, kStructural };

struct AnchorKey {
  std::string key;
  AddressMode mode = AddressMode::kStructural;

  bool operator==(const AnchorKey &) const = default;
};

// Anchor key of a node. Nodes without a segment and without anchored
// descendants get a structural key with an empty fingerprint ("~type[]").
AnchorKey AnchorKeyOf(const StructNode &node);

// What to do with two or more nodes sharing an anchor key.
enum class ParallelPolicy {
  kKeepAll,         // keep every node, in input order
  kDedupIdentical,  // drop nodes equal to one kept from another input
  kFoldToAlt,       // fold the feature bundles into one alternative set
};

struct MergePolicy {
  ParallelPolicy on_parallel = ParallelPolicy::kKeepAll;
  // Confidence written into folded bundles that carry none. Must lie in
  // [0,1].
  Decimal alt_confidence_fill;
};

struct MergeResult {
  GmtDocument document;
  // Groups that could not be matched safely and were kept as they are.
  std::vector<std::string> warnings;
};

// Merges layers sharing one document type. Root nodes are grouped by anchor
// key. The first input mentioning a key fixes where its group goes: roots keep
// their order within that input and parallel nodes from later inputs follow
// the group's last node. Unanchored groups are never folded. Throws
// gmt::Error with code MIXED_DOC_TYPES, MIXED_ADDRESSING (one key reached by
// two addressing modes) or BAD_POLICY.
MergeResult Merge(const std::vector<GmtDocument> &docs,
                  const MergePolicy &policy);

enum class DiffStatus { kOnlyLeft, kOnlyRight, kBothEqual, kBothDiffer };

const char *DiffStatusName(DiffStatus status);

struct DiffEntry {
  std::string anchor_key;
  DiffStatus status = DiffStatus::kBothEqual;
  // Content present only on the left / only on the right, as
  // "category=value" strings (nested content is bracketed).
  std::vector<std::string> removed;
  std::vector<std::string> added;

  bool operator==(const DiffEntry &) const = default;
};

struct DiffReport {
  // Sorted by anchor key.
  std::vector<DiffEntry> entries;

  bool AllEqual() const;
  // One `STATUS<TAB>anchorKey<TAB>detail` line per entry.
  std::string Render() const;
};

// Compares two layers node by node. Every node that has a segment, and every
// unanchored node whose descendants are anchored, is keyed and compared by the
// multiset of its content (features, alternatives, relations and unkeyed
// descendants); root nodes are always keyed.
DiffReport Diff(const GmtDocument &left, const GmtDocument &right);

}  // namespace gmt

#endif  // GMT_MERGE_DIFF_H_
