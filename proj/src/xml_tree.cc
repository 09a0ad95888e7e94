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

#include "xml_tree.h"

#include <expat.h>

#include <climits>
#include <memory>

#include "gmt/error.h"

namespace gmt {
namespace xml {

namespace {

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

struct ParserDeleter {
  void operator()(XML_ParserStruct *p) const { XML_ParserFree(p); }
};

struct BuildState {
  XML_Parser parser = nullptr;
  std::vector<Element> stack;
  Element root;
  bool has_root = false;
  bool doctype = false;
};

void OnStart(void *data, const XML_Char *name, const XML_Char **attrs) {
  auto *state = static_cast<BuildState *>(data);
  Element element;
  element.name = name;
  element.line = static_cast<int>(XML_GetCurrentLineNumber(state->parser));
  element.column =
      static_cast<int>(XML_GetCurrentColumnNumber(state->parser)) + 1;
  for (int i = 0; attrs[i] != nullptr; i += 2) {
    element.attributes.emplace_back(attrs[i], attrs[i + 1]);
  }
  state->stack.push_back(std::move(element));
}

void OnEnd(void *data, const XML_Char *) {
  auto *state = static_cast<BuildState *>(data);
  Element done = std::move(state->stack.back());
  state->stack.pop_back();
  if (state->stack.empty()) {
    state->root = std::move(done);
    state->has_root = true;
  } else {
    state->stack.back().children.push_back(std::move(done));
  }
}

void OnText(void *data, const XML_Char *s, int len) {
  auto *state = static_cast<BuildState *>(data);
  if (!state->stack.empty()) state->stack.back().text.append(s, len);
}

void OnDoctype(void *data, const XML_Char *, const XML_Char *,
               const XML_Char *, int) {
  auto *state = static_cast<BuildState *>(data);
  state->doctype = true;
  XML_StopParser(state->parser, XML_FALSE);
}

}  // namespace

const std::string *Element::Attribute(std::string_view key) const {
  for (const auto &[k, v] : attributes) {
    if (k == key) return &v;
  }
  return nullptr;
}

bool Element::HasNonSpaceText() const {
  for (char c : text) {
    if (!IsSpace(c)) return true;
  }
  return false;
}

Element Parse(std::string_view text) {
  if (text.size() > static_cast<size_t>(INT_MAX)) {
    throw ParseError("XML_TOO_LARGE", "input exceeds 2 GiB");
  }
  std::unique_ptr<XML_ParserStruct, ParserDeleter> parser(
      XML_ParserCreate("UTF-8"));
  if (!parser) throw ParseError("XML_INTERNAL", "cannot create XML parser");

  BuildState state;
  state.parser = parser.get();
  XML_SetUserData(parser.get(), &state);
  XML_SetElementHandler(parser.get(), OnStart, OnEnd);
  XML_SetCharacterDataHandler(parser.get(), OnText);
  XML_SetStartDoctypeDeclHandler(parser.get(), OnDoctype);

  if (XML_Parse(parser.get(), text.data(), static_cast<int>(text.size()),
                XML_TRUE) != XML_STATUS_OK) {
    int line = static_cast<int>(XML_GetCurrentLineNumber(parser.get()));
    int column = static_cast<int>(XML_GetCurrentColumnNumber(parser.get())) + 1;
    if (state.doctype) {
      throw ParseError("XML_DOCTYPE", "DOCTYPE declarations are not supported",
                       line, column);
    }
    throw ParseError("XML_MALFORMED",
                     XML_ErrorString(XML_GetErrorCode(parser.get())), line,
                     column);
  }
  if (!state.has_root) throw ParseError("XML_MALFORMED", "no root element");
  return std::move(state.root);
}

std::string EscapeText(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string EscapeAttribute(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && IsSpace(s.front())) s.remove_prefix(1);
  while (!s.empty() && IsSpace(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string> SplitWhitespace(std::string_view s) {
  std::vector<std::string> parts;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && IsSpace(s[i])) ++i;
    size_t start = i;
    while (i < s.size() && !IsSpace(s[i])) ++i;
    if (i > start) parts.emplace_back(s.substr(start, i - start));
  }
  return parts;
}

}  // namespace xml
}  // namespace gmt
