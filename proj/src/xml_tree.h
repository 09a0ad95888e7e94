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

// Minimal XML element tree built on expat, plus an escaping writer. Internal
// to the library.

#ifndef GMT_SRC_XML_TREE_H_
#define GMT_SRC_XML_TREE_H_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gmt {
namespace xml {

struct Element {
  std::string name;
  // Attributes in document order.
  std::vector<std::pair<std::string, std::string>> attributes;
  std::vector<Element> children;
  // Concatenated character data directly inside this element.
  std::string text;
  int line = 0;
  int column = 0;

  const std::string *Attribute(std::string_view key) const;
  bool HasNonSpaceText() const;
};

// Parses a complete document and returns its root element. Comments and
// processing instructions are dropped. Documents with a DOCTYPE are rejected,
// so only the five predefined entities (and character references) expand.
// Throws ParseError with the expat position on malformed input.
Element Parse(std::string_view text);

std::string EscapeText(std::string_view text);
std::string EscapeAttribute(std::string_view text);

std::string_view Trim(std::string_view s);
std::vector<std::string> SplitWhitespace(std::string_view s);

constexpr char kDeclaration[] = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";

}  // namespace xml
}  // namespace gmt

#endif  // GMT_SRC_XML_TREE_H_
