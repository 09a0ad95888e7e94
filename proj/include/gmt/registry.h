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

// Data category registry.
//
// A registry is a forest of named data categories. Each category constrains
// the values features of that category may take, may refine a parent
// category (inheriting its value constraint when it declares none), and may
// list aliases under which annotation schemes refer to it.
//
// File format, one definition per line, '#' starts a comment line:
//
//   name [parent=<name>] [kind=<open|set:a,b,c|range:lo..hi|ref>] [alias=x,y]
//
// `kind` may only be omitted when a parent is given.

#ifndef GMT_REGISTRY_H_
#define GMT_REGISTRY_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gmt/decimal.h"
#include "gmt/model.h"

namespace gmt {

struct OpenText {
  bool operator==(const OpenText &) const = default;
};
struct ClosedSet {
  std::vector<std::string> values;
  bool operator==(const ClosedSet &) const = default;
};
struct DecimalRange {
  Decimal lo;
  Decimal hi;
  bool operator==(const DecimalRange &) const = default;
};
struct Reference {
  bool operator==(const Reference &) const = default;
};

using ValueKind = std::variant<OpenText, ClosedSet, DecimalRange, Reference>;

struct CategoryDef {
  std::string name;
  std::optional<std::string> parent;
  // Absent when inherited from the parent.
  std::optional<ValueKind> kind;
  std::vector<std::string> aliases;
  // Source line, 0 when built in memory.
  int line = 0;
};

class Registry {
 public:
  Registry() = default;

  // Parses the registry file format and checks all invariants. Throws
  // ParseError with the offending line for malformed lines, duplicate names
  // or aliases, unknown parents, missing kinds and inheritance cycles.
  static Registry Load(std::string_view text);

  // Same checks as Load over definitions built in memory.
  static Registry FromDefinitions(std::vector<CategoryDef> defs);

  // The registry shipped with the library (data/default.dcr).
  static const Registry &Default();
  static std::string_view DefaultText();

  // Looks up a canonical name or an alias. Null if unknown.
  const CategoryDef *Resolve(std::string_view name) const;

  // Value constraint of the category, following parent links when the
  // category declares none.
  const ValueKind &EffectiveKind(const CategoryDef &def) const;

  // True iff `ancestor` is reachable from `child` through zero or more parent
  // links. Both names may be aliases. Throws gmt::Error (UNKNOWN_CATEGORY)
  // when either name is not registered.
  bool IsSubcategory(std::string_view child, std::string_view ancestor) const;

  size_t size() const { return defs_.size(); }
  const std::map<std::string, CategoryDef, std::less<>> &categories() const {
    return defs_;
  }

 private:
  std::map<std::string, CategoryDef, std::less<>> defs_;
  std::map<std::string, std::string, std::less<>> aliases_;
};

// Checks the category and value of every feature in the document, nested
// features included. Node types are not checked. Findings use the codes
// UNKNOWN_CATEGORY, VALUE_NOT_IN_SET, VALUE_OUT_OF_RANGE and INVALID_VALUE.
// Features whose value is a target reference are not value-checked.
ValidationReport ValidateCategories(const GmtDocument &doc,
                                    const Registry &registry);

}  // namespace gmt

#endif  // GMT_REGISTRY_H_
