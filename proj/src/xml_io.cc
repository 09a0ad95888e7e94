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

#include "gmt/xml_io.h"

#include "gmt/decimal.h"
#include "gmt/error.h"
#include "xml_tree.h"

namespace gmt {

namespace {

std::string StripFragment(std::string_view id) {
  if (!id.empty() && id.front() == '#') id.remove_prefix(1);
  return std::string(id);
}

bool IsPureContainer(const StructNode &node) {
  return !node.id && !node.ref && node.items.empty();
}

class GmtReader {
 public:
  ParsedDocument Read(std::string_view text) {
    xml::Element root = xml::Parse(text);
    if (root.name != "struct") {
      throw ParseError("NOT_GMT",
                       "document element is <" + root.name +
                           ">, expected <struct>",
                       root.line, root.column);
    }
    StructNode node = ReadStruct(root);
    ParsedDocument result;
    result.document.doc_type = node.type.value_or("");
    if (IsPureContainer(node)) {
      result.document.roots = std::move(node.children);
    } else {
      result.document.roots.push_back(std::move(node));
    }
    result.diagnostics = std::move(diagnostics_);
    return result;
  }

 private:
  void Warn(const xml::Element &el, std::string message) {
    diagnostics_.warnings.push_back({el.line, el.column, std::move(message)});
  }

  [[noreturn]] void Fail(const xml::Element &el, const char *code,
                         const std::string &message) {
    throw ParseError(code, message, el.line, el.column);
  }

  void WarnText(const xml::Element &el) {
    if (el.HasNonSpaceText()) {
      Warn(el, "text content inside <" + el.name + "> ignored");
    }
  }

  StructNode ReadStruct(const xml::Element &el) {
    StructNode node;
    for (const auto &[key, value] : el.attributes) {
      if (key == "type") {
        node.type = value;
      } else if (key == "id" || key == "ID") {
        if (node.id) Fail(el, "DUPLICATE_ATTRIBUTE", "both id and ID given");
        node.id = value;
      } else if (key == "ref") {
        node.ref = StripFragment(value);
      } else {
        Warn(el, "unknown attribute '" + key + "' on <struct> ignored");
      }
    }
    WarnText(el);
    ReadContent(el.children, &node.items, &node.children);
    return node;
  }

  // Reads the children of a <struct>, <brack> or container <seg>. `nodes` is
  // null where nested structs are not allowed.
  void ReadContent(const std::vector<xml::Element> &children,
                   std::vector<NodeItem> *items,
                   std::vector<StructNode> *nodes) {
    for (size_t i = 0; i < children.size(); ++i) {
      const xml::Element &child = children[i];
      const std::string &name = child.name;
      if (name == "struct") {
        if (nodes == nullptr) {
          Warn(child, "<struct> inside <brack> skipped");
        } else {
          nodes->push_back(ReadStruct(child));
        }
      } else if (name == "feat") {
        items->push_back({ReadFeature(child)});
      } else if (name == "alt") {
        AltSet alts;
        while (i < children.size() && children[i].name == "alt") {
          alts.alternatives.push_back(ReadAlternative(children[i]));
          ++i;
        }
        --i;
        items->push_back({std::move(alts)});
      } else if (name == "rel") {
        items->push_back({ReadRelation(child)});
      } else if (name == "seg") {
        items->push_back({ReadSegment(child)});
        if (!child.children.empty()) {
          Warn(child,
               "<seg> has element content; children attached to the "
               "enclosing node");
          ReadContent(child.children, items, nodes);
        }
      } else if (name == "brack") {
        Bracket bracket;
        WarnText(child);
        ReadContent(child.children, &bracket.members, nullptr);
        items->push_back({std::move(bracket)});
      } else if (name == "startsAt") {
        if (i + 1 >= children.size() || children[i + 1].name != "endsAt") {
          Fail(child, "UNPAIRED_LANDMARK",
               "<startsAt> must be followed by <endsAt>");
        }
        LandmarkEndpoints lm;
        lm.start = LandmarkTarget(child);
        lm.end = LandmarkTarget(children[++i]);
        items->push_back({SegmentRef{lm}});
      } else if (name == "endsAt") {
        Fail(child, "UNPAIRED_LANDMARK", "<endsAt> without <startsAt>");
      } else if (child.children.empty() && child.attributes.empty() &&
                 child.HasNonSpaceText()) {
        // Bare leaf elements such as <position>2360</position>.
        items->push_back(
            {Feature{name, std::string(xml::Trim(child.text))}});
      } else {
        Warn(child, "unknown element <" + name + "> skipped");
      }
    }
  }

  std::string LandmarkTarget(const xml::Element &el) {
    const std::string *target = el.Attribute("target");
    if (target == nullptr) {
      Fail(el, "MISSING_ATTRIBUTE", "<" + el.name + "> requires target");
    }
    for (const auto &[key, value] : el.attributes) {
      if (key != "target") {
        Warn(el, "unknown attribute '" + key + "' on <" + el.name +
                     "> ignored");
      }
    }
    return StripFragment(*target);
  }

  Feature ReadFeature(const xml::Element &el) {
    Feature feature;
    const std::string *target = nullptr;
    for (const auto &[key, value] : el.attributes) {
      if (key == "type") {
        feature.category = value;
      } else if (key == "target") {
        target = &value;
      } else {
        Warn(el, "unknown attribute '" + key + "' on <feat> ignored");
      }
    }

    Feature::Nested nested;
    for (const auto &child : el.children) {
      if (child.name == "feat") {
        nested.push_back(ReadFeature(child));
      } else {
        Warn(child, "<" + child.name + "> inside <feat> skipped");
      }
    }

    if (target != nullptr) {
      if (!nested.empty() || el.HasNonSpaceText()) {
        Fail(el, "MIXED_FEATURE",
             "<feat> has a target and also content");
      }
      feature.value = TargetRef{StripFragment(*target)};
    } else if (!nested.empty()) {
      if (el.HasNonSpaceText()) {
        Fail(el, "MIXED_FEATURE", "<feat> mixes text and nested features");
      }
      feature.value = std::move(nested);
    } else {
      feature.value = std::string(xml::Trim(el.text));
    }
    return feature;
  }

  Alternative ReadAlternative(const xml::Element &el) {
    Alternative alt;
    for (const auto &[key, value] : el.attributes) {
      Warn(el, "unknown attribute '" + key + "' on <alt> ignored");
    }
    WarnText(el);
    for (const auto &child : el.children) {
      if (child.name == "feat") {
        alt.features.push_back(ReadFeature(child));
      } else if (child.name == "struct") {
        alt.structures.push_back(ReadStruct(child));
      } else {
        Warn(child, "<" + child.name + "> inside <alt> skipped");
      }
    }
    return alt;
  }

  Relation ReadRelation(const xml::Element &el) {
    Relation rel;
    bool has_target = false;
    for (const auto &[key, value] : el.attributes) {
      if (key == "type") {
        rel.type = value;
      } else if (key == "target") {
        rel.target = StripFragment(value);
        has_target = true;
      } else {
        Warn(el, "unknown attribute '" + key + "' on <rel> ignored");
      }
    }
    if (!has_target) Fail(el, "MISSING_ATTRIBUTE", "<rel> requires target");
    WarnText(el);
    return rel;
  }

  SegmentRef ReadSegment(const xml::Element &el) {
    std::vector<std::string> ids;
    const std::string *start = nullptr;
    const std::string *end = nullptr;
    auto set_once = [&](const std::string **slot, const std::string &value) {
      if (*slot != nullptr) {
        Fail(el, "DUPLICATE_ATTRIBUTE",
             "<seg> gives the same endpoint under two names");
      }
      *slot = &value;
    };
    for (const auto &[key, value] : el.attributes) {
      if (key == "target" || key == "targets") {
        for (auto &id : xml::SplitWhitespace(value)) {
          ids.push_back(StripFragment(id));
        }
      } else if (key == "startsAt" || key == "startPosition") {
        set_once(&start, value);
      } else if (key == "endsAt" || key == "endPosition") {
        set_once(&end, value);
      } else {
        Warn(el, "unknown attribute '" + key + "' on <seg> ignored");
      }
    }
    if (el.HasNonSpaceText()) WarnText(el);

    bool positional = start != nullptr || end != nullptr;
    if (positional && !ids.empty()) {
      Fail(el, "SEG_MODE_CONFLICT",
           "<seg> mixes target identifiers with start/end positions");
    }
    if (!positional) return SegmentRef{IdTargets{std::move(ids)}};
    if (start == nullptr || end == nullptr) {
      Fail(el, "INCOMPLETE_SPAN", "<seg> needs both a start and an end");
    }
    auto s = ParseOffset(xml::Trim(*start));
    auto e = ParseOffset(xml::Trim(*end));
    if (s && e) return SegmentRef{PositionalSpan{*s, *e}};
    if (!start->empty() && start->front() == '#' && !end->empty() &&
        end->front() == '#') {
      return SegmentRef{
          LandmarkEndpoints{StripFragment(*start), StripFragment(*end)}};
    }
    Fail(el, "BAD_OFFSET",
         "<seg> positions must be non-negative integers or #landmark refs");
  }

  ParseDiagnostics diagnostics_;
};

class GmtWriter {
 public:
  std::string Write(const GmtDocument &doc) {
    out_ = xml::kDeclaration;
    if (doc.roots.size() == 1 &&
        doc.roots[0].type.value_or("") == doc.doc_type &&
        !IsPureContainer(doc.roots[0])) {
      WriteStruct(doc.roots[0], 0);
      return std::move(out_);
    }
    out_ += "<struct";
    if (!doc.doc_type.empty()) Attr("type", doc.doc_type);
    if (doc.roots.empty()) {
      out_ += "/>\n";
      return std::move(out_);
    }
    out_ += ">\n";
    for (const auto &root : doc.roots) WriteStruct(root, 1);
    out_ += "</struct>\n";
    return std::move(out_);
  }

 private:
  void Indent(int depth) { out_.append(2 * depth, ' '); }

  void Attr(std::string_view key, std::string_view value) {
    out_ += ' ';
    out_ += key;
    out_ += "=\"";
    out_ += xml::EscapeAttribute(value);
    out_ += '"';
  }

  void WriteStruct(const StructNode &node, int depth) {
    Indent(depth);
    out_ += "<struct";
    if (node.type) Attr("type", *node.type);
    if (node.id) Attr("id", *node.id);
    if (node.ref) Attr("ref", *node.ref);
    if (node.items.empty() && node.children.empty()) {
      out_ += "/>\n";
      return;
    }
    out_ += ">\n";
    WriteItems(node.items, depth + 1);
    for (const auto &child : node.children) WriteStruct(child, depth + 1);
    Indent(depth);
    out_ += "</struct>\n";
  }

  void WriteItems(const std::vector<NodeItem> &items, int depth) {
    for (const auto &item : items) {
      std::visit([&](const auto &v) { WriteItem(v, depth); }, item.value);
    }
  }

  void WriteItem(const Feature &feature, int depth) {
    Indent(depth);
    out_ += "<feat";
    Attr("type", feature.category);
    if (const auto *target = feature.target()) {
      Attr("target", "#" + target->id);
      out_ += "/>\n";
    } else if (const auto *nested = feature.nested()) {
      out_ += ">\n";
      for (const auto &f : *nested) WriteItem(f, depth + 1);
      Indent(depth);
      out_ += "</feat>\n";
    } else if (feature.text()->empty()) {
      out_ += "/>\n";
    } else {
      out_ += '>';
      out_ += xml::EscapeText(*feature.text());
      out_ += "</feat>\n";
    }
  }

  void WriteItem(const AltSet &alts, int depth) {
    for (const auto &alt : alts.alternatives) {
      Indent(depth);
      if (alt.features.empty() && alt.structures.empty()) {
        out_ += "<alt/>\n";
        continue;
      }
      out_ += "<alt>\n";
      for (const auto &f : alt.features) WriteItem(f, depth + 1);
      for (const auto &s : alt.structures) WriteStruct(s, depth + 1);
      Indent(depth);
      out_ += "</alt>\n";
    }
  }

  void WriteItem(const Relation &rel, int depth) {
    Indent(depth);
    out_ += "<rel";
    if (rel.type) Attr("type", *rel.type);
    Attr("target", "#" + rel.target);
    out_ += "/>\n";
  }

  void WriteItem(const SegmentRef &seg, int depth) {
    Indent(depth);
    if (const auto *ids = std::get_if<IdTargets>(&seg.address)) {
      out_ += "<seg";
      if (ids->ids.size() == 1) {
        Attr("target", "#" + ids->ids.front());
      } else {
        std::string joined;
        for (const auto &id : ids->ids) {
          if (!joined.empty()) joined += ' ';
          joined += id;
        }
        Attr("targets", joined);
      }
      out_ += "/>\n";
    } else if (const auto *span = std::get_if<PositionalSpan>(&seg.address)) {
      out_ += "<seg";
      Attr("startsAt", std::to_string(span->start));
      Attr("endsAt", std::to_string(span->end));
      out_ += "/>\n";
    } else {
      const auto &lm = std::get<LandmarkEndpoints>(seg.address);
      out_ += "<startsAt";
      Attr("target", "#" + lm.start);
      out_ += "/>\n";
      Indent(depth);
      out_ += "<endsAt";
      Attr("target", "#" + lm.end);
      out_ += "/>\n";
    }
  }

  void WriteItem(const Bracket &bracket, int depth) {
    Indent(depth);
    if (bracket.members.empty()) {
      out_ += "<brack/>\n";
      return;
    }
    out_ += "<brack>\n";
    WriteItems(bracket.members, depth + 1);
    Indent(depth);
    out_ += "</brack>\n";
  }

  std::string out_;
};

}  // namespace

ParsedDocument ParseGmt(std::string_view text) {
  return GmtReader().Read(text);
}

std::string SerializeGmt(const GmtDocument &doc) {
  ValidationReport report = ValidateStructure(doc);
  if (const Finding *error = report.first_error()) {
    throw Error(error->code, "cannot serialize invalid document: " +
                                 error->path + ": " + error->message);
  }
  return GmtWriter().Write(doc);
}

}  // namespace gmt
