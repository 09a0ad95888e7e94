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

// Reading and writing annotation layers in GMT XML.
//
// The document element is always a <struct>. If it carries no id, no ref and
// no items it is a pure container: its type becomes the document type and its
// child structs become the document roots. Otherwise it is itself the single
// root node. The writer inverts this exactly, so parse(serialize(d)) == d for
// every document without structural errors. See docs/gmt-format.md for the
// full element grammar.

#ifndef GMT_XML_IO_H_
#define GMT_XML_IO_H_

#include <string>
#include <string_view>
#include <vector>

#include "gmt/model.h"

namespace gmt {

struct ParseWarning {
  int line = 0;
  int column = 0;
  std::string message;
};

struct ParseDiagnostics {
  std::vector<ParseWarning> warnings;

  bool empty() const { return warnings.empty(); }
};

struct ParsedDocument {
  GmtDocument document;
  ParseDiagnostics diagnostics;
};

// Parses GMT XML. Unknown elements and attributes are reported as warnings
// and skipped, except unknown leaf elements with text content, which become
// features named after the element. Throws ParseError on malformed XML and
// on contradictory addressing (e.g. a <seg> with both targets and offsets).
ParsedDocument ParseGmt(std::string_view text);

// Canonical serialization: UTF-8 with XML declaration, two-space indent,
// fixed attribute order. Throws gmt::Error carrying the first structural
// error if the document does not validate.
std::string SerializeGmt(const GmtDocument &doc);

}  // namespace gmt

#endif  // GMT_XML_IO_H_
