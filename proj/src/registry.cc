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

#include "gmt/registry.h"

#include <algorithm>
#include <set>

#include "default_registry.inc"
#include "gmt/error.h"
#include "xml_tree.h"

namespace gmt {

namespace {

bool IsCategoryName(std::string_view name) {
  return IsValidIdentifier(name) &&
         name.find_first_of("=,") == std::string_view::npos;
}

std::vector<std::string> SplitComma(std::string_view s) {
  std::vector<std::string> parts;
  size_t start = 0;
  while (true) {
    size_t comma = s.find(',', start);
    parts.emplace_back(s.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return parts;
}

[[noreturn]] void Fail(const char *code, const std::string &message, int line) {
  throw ParseError(code, message, line, line > 0 ? 1 : 0);
}

ValueKind ParseKind(std::string_view kind_text, int line) {
  if (kind_text == "open") return OpenText{};
  if (kind_text == "ref") return Reference{};
  if (kind_text.substr(0, 4) == "set:") {
    ClosedSet set;
    for (auto &v : SplitComma(kind_text.substr(4))) {
      if (v.empty()) Fail("BAD_KIND", "empty value in set", line);
      set.values.push_back(std::move(v));
    }
    return set;
  }
  if (kind_text.substr(0, 6) == "range:") {
    std::string_view body = kind_text.substr(6);
    size_t dots = body.find("..");
    if (dots == std::string_view::npos) {
      Fail("BAD_KIND", "range needs the form lo..hi", line);
    }
    auto lo = Decimal::Parse(body.substr(0, dots));
    auto hi = Decimal::Parse(body.substr(dots + 2));
    if (!lo || !hi) Fail("BAD_KIND", "range bounds must be decimals", line);
    return DecimalRange{*lo, *hi};
  }
  Fail("BAD_KIND", "unknown kind '" + std::string(kind_text) + "'", line);
}

CategoryDef ParseLine(std::string_view line, int line_no) {
  std::vector<std::string> tokens = xml::SplitWhitespace(line);
  CategoryDef def;
  def.line = line_no;
  def.name = tokens.front();
  std::set<std::string> seen;
  for (size_t i = 1; i < tokens.size(); ++i) {
    const std::string &token = tokens[i];
    size_t eq = token.find('=');
    if (eq == std::string::npos) {
      Fail("BAD_LINE", "expected key=value, got '" + token + "'", line_no);
    }
    std::string key = token.substr(0, eq);
    std::string value = token.substr(eq + 1);
    if (!seen.insert(key).second) {
      Fail("BAD_LINE", "'" + key + "' given twice", line_no);
    }
    if (key == "parent") {
      def.parent = value;
    } else if (key == "kind") {
      def.kind = ParseKind(value, line_no);
    } else if (key == "alias") {
      def.aliases = SplitComma(value);
    } else {
      Fail("BAD_LINE", "unknown key '" + key + "'", line_no);
    }
  }
  return def;
}

}  // namespace

Registry Registry::Load(std::string_view text) {
  std::vector<CategoryDef> defs;
  int line_no = 0;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view line = xml::Trim(text.substr(pos, nl - pos));
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    defs.push_back(ParseLine(line, line_no));
  }
  return FromDefinitions(std::move(defs));
}

Registry Registry::FromDefinitions(std::vector<CategoryDef> defs) {
  Registry r;
  for (const auto &def : defs) {
    if (!IsCategoryName(def.name)) {
      Fail("BAD_NAME", "invalid category name '" + def.name + "'", def.line);
    }
    if (r.defs_.count(def.name) != 0) {
      Fail("DUPLICATE_CATEGORY", "category '" + def.name + "' defined twice",
           def.line);
    }
    if (const auto *set = def.kind ? std::get_if<ClosedSet>(&*def.kind)
                                   : nullptr) {
      if (set->values.empty()) {
        Fail("BAD_KIND", "closed set of '" + def.name + "' is empty", def.line);
      }
    }
    if (const auto *range = def.kind ? std::get_if<DecimalRange>(&*def.kind)
                                     : nullptr) {
      if (range->hi < range->lo) {
        Fail("BAD_KIND", "range of '" + def.name + "' has lo > hi", def.line);
      }
    }
    r.defs_.emplace(def.name, def);
  }
  for (const auto &def : defs) {
    for (const auto &alias : def.aliases) {
      if (!IsCategoryName(alias)) {
        Fail("BAD_NAME", "invalid alias '" + alias + "'", def.line);
      }
      if (r.defs_.count(alias) != 0 ||
          !r.aliases_.emplace(alias, def.name).second) {
        Fail("DUPLICATE_ALIAS", "alias '" + alias + "' is already taken",
             def.line);
      }
    }
    if (def.parent && r.defs_.count(*def.parent) == 0) {
      Fail("UNKNOWN_PARENT",
           "parent '" + *def.parent + "' of '" + def.name + "' is not defined",
           def.line);
    }
  }
  for (const auto &def : defs) {
    std::set<std::string_view> visited{def.name};
    const CategoryDef *cur = &def;
    while (cur->parent) {
      if (*cur->parent == def.name) {
        Fail("INHERITANCE_CYCLE",
             "category '" + def.name + "' is its own ancestor", def.line);
      }
      if (!visited.insert(*cur->parent).second) break;
      cur = &r.defs_.at(*cur->parent);
    }
  }
  for (const auto &def : defs) {
    if (!def.kind && !def.parent) {
      Fail("MISSING_KIND", "category '" + def.name + "' needs a kind",
           def.line);
    }
  }
  return r;
}

const Registry &Registry::Default() {
  static const Registry registry = Load(kDefaultRegistryText);
  return registry;
}

std::string_view Registry::DefaultText() { return kDefaultRegistryText; }

const CategoryDef *Registry::Resolve(std::string_view name) const {
  if (auto it = defs_.find(name); it != defs_.end()) return &it->second;
  if (auto it = aliases_.find(name); it != aliases_.end()) {
    return &defs_.find(it->second)->second;
  }
  return nullptr;
}

const ValueKind &Registry::EffectiveKind(const CategoryDef &def) const {
  const CategoryDef *cur = &def;
  while (!cur->kind) cur = &defs_.find(*cur->parent)->second;
  return *cur->kind;
}

bool Registry::IsSubcategory(std::string_view child,
                             std::string_view ancestor) const {
  const CategoryDef *c = Resolve(child);
  const CategoryDef *a = Resolve(ancestor);
  if (c == nullptr || a == nullptr) {
    throw Error("UNKNOWN_CATEGORY",
                "unknown category '" +
                    std::string(c == nullptr ? child : ancestor) + "'");
  }
  for (const CategoryDef *cur = c;;) {
    if (cur == a) return true;
    if (!cur->parent) return false;
    cur = &defs_.find(*cur->parent)->second;
  }
}

namespace {

class CategoryChecker {
 public:
  explicit CategoryChecker(const Registry &registry) : registry_(registry) {}

  void Check(const Feature &feature, const std::string &path) {
    CheckValue(feature, path);
    if (const auto *nested = feature.nested()) {
      for (size_t i = 0; i < nested->size(); ++i) {
        Check((*nested)[i], path + "/" + std::to_string(i));
      }
    }
  }

  ValidationReport TakeReport() { return std::move(report_); }

 private:
  void CheckValue(const Feature &feature, const std::string &path) {
    const CategoryDef *def = registry_.Resolve(feature.category);
    if (def == nullptr) {
      Error("UNKNOWN_CATEGORY", path,
            "data category '" + feature.category + "' is not registered");
      return;
    }
    if (feature.target() != nullptr) return;
    const ValueKind &kind = registry_.EffectiveKind(*def);
    const std::string *text = feature.text();
    const std::string &name = feature.category;

    if (std::holds_alternative<OpenText>(kind)) return;
    if (std::holds_alternative<Reference>(kind)) {
      Error("INVALID_VALUE", path,
            "'" + name + "' expects a target reference, not inline content");
      return;
    }
    if (text == nullptr) {
      Error("INVALID_VALUE", path,
            "'" + name + "' expects a plain value, not nested features");
      return;
    }
    if (const auto *set = std::get_if<ClosedSet>(&kind)) {
      if (std::find(set->values.begin(), set->values.end(), *text) ==
          set->values.end()) {
        Error("VALUE_NOT_IN_SET", path,
              "'" + *text + "' is not a permitted value of '" + name + "'");
      }
      return;
    }
    const auto &range = std::get<DecimalRange>(kind);
    auto value = Decimal::Parse(*text);
    if (!value) {
      Error("INVALID_VALUE", path,
            "'" + *text + "' is not a decimal value of '" + name + "'");
    } else if (*value < range.lo || range.hi < *value) {
      Error("VALUE_OUT_OF_RANGE", path,
            "'" + *text + "' is outside " + range.lo.ToString() + ".." +
                range.hi.ToString() + " for '" + name + "'");
    }
  }

  void Error(const char *code, const std::string &path, std::string message) {
    report_.findings.push_back(
        {Severity::kError, code, path, std::move(message)});
  }

  const Registry &registry_;
  ValidationReport report_;
};

}  // namespace

ValidationReport ValidateCategories(const GmtDocument &doc,
                                    const Registry &registry) {
  CategoryChecker checker(registry);
  ForEachFeature(doc, [&](const Feature &f, const std::string &path) {
    checker.Check(f, path);
  });
  return checker.TakeReport();
}

}  // namespace gmt
