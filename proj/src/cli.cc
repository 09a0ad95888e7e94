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

#include "gmt/cli.h"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "gmt/ag_bridge.h"
#include "gmt/anchoring.h"
#include "gmt/error.h"
#include "gmt/merge_diff.h"
#include "gmt/registry.h"
#include "gmt/xml_io.h"

namespace gmt {

namespace {

namespace fs = std::filesystem;

class IoError : public Error {
 public:
  explicit IoError(const std::string &message) : Error("IO", message) {}
};

std::string ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::string data((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("error reading " + path);
  return data;
}

void WriteFile(const fs::path &path, const std::string &data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << data;
  out.flush();
  if (!out) throw IoError("error writing " + path.string());
}

ParseError InFile(const std::string &path, const ParseError &e) {
  return ParseError(e.code(), path + (e.line() > 0 ? ":" : ": ") + e.what());
}

// Parses a GMT file, forwarding warnings to `err`. ParseError messages get
// the file name prepended.
GmtDocument LoadGmt(const std::string &path, std::ostream &err) {
  std::string text = ReadFile(path);
  try {
    ParsedDocument parsed = ParseGmt(text);
    for (const auto &w : parsed.diagnostics.warnings) {
      err << path << ":" << w.line << ":" << w.column
          << ": warning: " << w.message << "\n";
    }
    return std::move(parsed.document);
  } catch (const ParseError &e) {
    throw InFile(path, e);
  }
}

template <typename Fn>
auto WithFileName(const std::string &path, Fn &&fn) {
  try {
    return fn(ReadFile(path));
  } catch (const ParseError &e) {
    throw InFile(path, e);
  }
}

void PrintFindings(const ValidationReport &report, std::ostream &out) {
  for (const auto &f : report.findings) {
    out << SeverityName(f.severity) << '\t' << f.code << '\t' << f.path << '\t'
        << f.message << '\n';
  }
}

// ---------------------------------------------------------------------------

struct ValidateArgs {
  std::string file;
  std::string registry;
  bool no_registry = false;
};

int CmdValidate(const ValidateArgs &args, std::ostream &out,
                std::ostream &err) {
  GmtDocument doc = LoadGmt(args.file, err);
  ValidationReport report = ValidateStructure(doc);
  if (!args.no_registry) {
    if (args.registry.empty()) {
      report.Append(ValidateCategories(doc, Registry::Default()));
    } else {
      Registry registry = WithFileName(
          args.registry, [](const std::string &t) { return Registry::Load(t); });
      report.Append(ValidateCategories(doc, registry));
    }
  }
  PrintFindings(report, out);
  return report.has_errors() ? kExitFindings : kExitOk;
}

struct ConvertArgs {
  std::string from;
  std::string to;
  std::vector<std::string> inputs;
  std::string output;
  std::string map;
};

bool IsSafeFileStem(const std::string &name) {
  return !name.empty() && name != "." && name != ".." &&
         name.find_first_of("/\\") == std::string::npos;
}

int CmdConvert(const ConvertArgs &args, std::ostream &out, std::ostream &err) {
  AgTypeMap types = AgTypeMap::Default();
  if (!args.map.empty()) {
    types = WithFileName(args.map,
                         [](const std::string &t) { return AgTypeMap::Load(t); });
  }

  if (args.from == "ag" && args.to == "gmt") {
    if (args.inputs.size() != 1) {
      err << "gmt convert: ag input takes exactly one file\n";
      return kExitFailure;
    }
    AnnotationGraph graph = WithFileName(
        args.inputs.front(), [](const std::string &t) { return ParseAg(t); });
    std::vector<GmtDocument> docs = AgToGmt(graph, types);
    // Render everything before touching the output directory.
    std::vector<std::pair<std::string, std::string>> files;
    for (size_t i = 0; i < docs.size(); ++i) {
      std::string stem = i == 0 ? "landmarks" : docs[i].doc_type;
      if (!IsSafeFileStem(stem)) {
        throw Error("BAD_DOC_TYPE",
                    "layer type '" + stem + "' is not usable as a file name");
      }
      files.emplace_back(stem + ".xml", SerializeGmt(docs[i]));
    }
    fs::path dir(args.output);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
    for (const auto &[name, text] : files) {
      WriteFile(dir / name, text);
      out << (dir / name).string() << '\n';
    }
    return kExitOk;
  }

  if (args.from == "gmt" && args.to == "ag") {
    GmtDocument landmarks = LoadGmt(args.inputs.front(), err);
    std::vector<GmtDocument> layers;
    for (size_t i = 1; i < args.inputs.size(); ++i) {
      layers.push_back(LoadGmt(args.inputs[i], err));
    }
    AnnotationGraph graph = GmtToAg(landmarks, layers, types);
    WriteFile(args.output, SerializeAg(graph));
    out << args.output << '\n';
    return kExitOk;
  }

  err << "gmt convert: unsupported direction " << args.from << " -> "
      << args.to << "\n";
  return kExitFailure;
}

struct ResolveArgs {
  std::string file;
  std::string tokens;
  std::string landmarks;
  std::vector<std::string> layers;
  bool lenient = false;
};

int CmdResolve(const ResolveArgs &args, std::ostream &out, std::ostream &err) {
  GmtDocument doc = LoadGmt(args.file, err);

  TokenIndex tokens;
  LandmarkTable landmarks;
  std::map<std::string, GmtDocument> layers;
  AnchorContext context;
  if (!args.tokens.empty()) {
    tokens = WithFileName(args.tokens,
                          [](const std::string &t) { return TokenIndex::Load(t); });
    context.tokens = &tokens;
  }
  if (!args.landmarks.empty()) {
    landmarks = BuildLandmarkTable(LoadGmt(args.landmarks, err));
    context.landmarks = &landmarks;
  }
  for (const auto &path : args.layers) {
    layers[fs::path(path).stem().string()] = LoadGmt(path, err);
  }
  if (!layers.empty()) context.layers = &layers;

  bool failed = false;
  ForEachNode(doc, [&](const StructNode &node, const std::string &path) {
    ForEachSegment(node, [&](const SegmentRef &seg) {
      try {
        ResolvedSpan r = ResolveSegment(seg, context);
        out << path << '\t';
        if (r.span) {
          out << r.span->start << '\t' << r.span->end;
        } else {
          out << "nodes:";
          for (size_t i = 0; i < r.target_nodes.size(); ++i) {
            out << (i > 0 ? "," : "") << r.target_nodes[i];
          }
        }
        out << '\n';
      } catch (const Error &e) {
        if (args.lenient) {
          err << "warning: " << path << ": " << e.code() << ": " << e.what()
              << "\n";
        } else {
          err << "error: " << path << ": " << e.code() << ": " << e.what()
              << "\n";
          failed = true;
        }
      }
    });
  });
  return failed ? kExitFindings : kExitOk;
}

struct MergeArgs {
  std::vector<std::string> files;
  std::string output;
  std::string policy = "keep-all";
  std::string fill = "0";
};

int CmdMerge(const MergeArgs &args, std::ostream &out, std::ostream &err) {
  MergePolicy policy;
  if (args.policy == "keep-all") {
    policy.on_parallel = ParallelPolicy::kKeepAll;
  } else if (args.policy == "dedup") {
    policy.on_parallel = ParallelPolicy::kDedupIdentical;
  } else {
    policy.on_parallel = ParallelPolicy::kFoldToAlt;
  }
  auto fill = Decimal::Parse(args.fill);
  if (!fill) {
    err << "gmt merge: --confidence-fill must be a decimal\n";
    return kExitFailure;
  }
  policy.alt_confidence_fill = *fill;

  std::vector<GmtDocument> docs;
  for (const auto &path : args.files) docs.push_back(LoadGmt(path, err));
  MergeResult merged = Merge(docs, policy);
  for (const auto &w : merged.warnings) err << "warning: " << w << "\n";

  ValidationReport report = ValidateStructure(merged.document);
  if (report.has_errors()) {
    PrintFindings(report, out);
    return kExitFindings;
  }
  WriteFile(args.output, SerializeGmt(merged.document));
  return kExitOk;
}

int CmdDiff(const std::string &left, const std::string &right,
            std::ostream &out, std::ostream &err) {
  DiffReport report = Diff(LoadGmt(left, err), LoadGmt(right, err));
  out << report.Render();
  return report.AllEqual() ? kExitOk : kExitFindings;
}

}  // namespace

int RunCli(int argc, const char *const *argv, std::ostream &out,
           std::ostream &err) {
  CLI::App app{"Stand-off annotation toolkit for GMT layers", "gmt"};
  app.require_subcommand(1);

  ValidateArgs validate;
  auto *validate_cmd =
      app.add_subcommand("validate", "Check structure and data categories");
  validate_cmd->add_option("file", validate.file, "GMT file")->required();
  validate_cmd->add_option("--registry", validate.registry,
                           "Registry file (default: built-in registry)");
  validate_cmd->add_flag("--no-registry", validate.no_registry,
                         "Skip data category checks");

  ConvertArgs convert;
  auto *convert_cmd =
      app.add_subcommand("convert", "Convert between AG XML and GMT layers");
  convert_cmd->add_option("--from", convert.from, "Input format")
      ->required()
      ->check(CLI::IsMember({"ag", "gmt"}));
  convert_cmd->add_option("--to", convert.to, "Output format")
      ->required()
      ->check(CLI::IsMember({"ag", "gmt"}));
  convert_cmd
      ->add_option("inputs", convert.inputs,
                   "AG file, or landmark file followed by layer files")
      ->required();
  convert_cmd->add_option("-o,--output", convert.output,
                          "Output directory (to gmt) or file (to ag)")
      ->required();
  convert_cmd->add_option("--map", convert.map,
                          "Arc type table: att1<TAB>docType<TAB>payload");

  ResolveArgs resolve;
  auto *resolve_cmd =
      app.add_subcommand("resolve", "Resolve segment references to spans");
  resolve_cmd->add_option("file", resolve.file, "GMT file")->required();
  resolve_cmd->add_option("--tokens", resolve.tokens, "Token index file");
  resolve_cmd->add_option("--landmarks", resolve.landmarks,
                          "landmarkDesc GMT file");
  resolve_cmd->add_option("--layer", resolve.layers,
                          "Annotation layer for object-based targets; its "
                          "file stem names it");
  resolve_cmd->add_flag("--lenient", resolve.lenient,
                        "Report unresolved targets as warnings");

  MergeArgs merge;
  auto *merge_cmd = app.add_subcommand("merge", "Merge annotation layers");
  merge_cmd->add_option("files", merge.files, "GMT files")->required();
  merge_cmd->add_option("-o,--output", merge.output, "Output file")
      ->required();
  merge_cmd->add_option("--policy", merge.policy, "Parallel node policy")
      ->check(CLI::IsMember({"keep-all", "dedup", "fold-alt"}));
  merge_cmd->add_option("--confidence-fill", merge.fill,
                        "Confidence for folded bundles without one");

  std::string diff_left, diff_right;
  auto *diff_cmd = app.add_subcommand("diff", "Compare two annotation layers");
  diff_cmd->add_option("left", diff_left, "GMT file")->required();
  diff_cmd->add_option("right", diff_right, "GMT file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitFailure;
  }

  try {
    if (*validate_cmd) return CmdValidate(validate, out, err);
    if (*convert_cmd) return CmdConvert(convert, out, err);
    if (*resolve_cmd) return CmdResolve(resolve, out, err);
    if (*merge_cmd) return CmdMerge(merge, out, err);
    if (*diff_cmd) return CmdDiff(diff_left, diff_right, out, err);
  } catch (const IoError &e) {
    err << "gmt: " << e.what() << "\n";
    return kExitFailure;
  } catch (const ParseError &e) {
    err << "gmt: " << e.what() << "\n";
    return kExitFailure;
  } catch (const Error &e) {
    err << "gmt: " << e.code() << ": " << e.what() << "\n";
    return kExitFindings;
  }
  return kExitFailure;
}

}  // namespace gmt
