// Copyright 2026 The evtrig Authors.
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

#include "evtrig/corpus/standoff.h"

#include <algorithm>
#include <filesystem>
#include <set>

#include "evtrig/corpus/text.h"
#include "evtrig/error.h"
#include "evtrig/util/strings.h"

namespace evtrig {

namespace {

void ParseTLines(std::string_view contents, std::string_view source,
                 const std::u32string &text,
                 std::vector<SpanAnnotation> *out) {
  std::vector<std::string> lines = Split(contents, '\n');
  for (size_t n = 0; n < lines.size(); ++n) {
    std::string_view line = lines[n];
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (Trim(line).empty()) continue;
    if (line[0] != 'T') continue;

    std::string where = std::string(source) + " line " + std::to_string(n + 1);
    std::vector<std::string> fields = Split(line, '\t');
    if (fields.size() != 3) {
      throw Error(ErrorCode::kMalformedLine,
                  where + ": expected 3 tab-separated fields");
    }
    std::string_view info = fields[1];
    if (info.find(';') != std::string_view::npos) {
      throw Error(ErrorCode::kMalformedLine,
                  where + ": discontinuous span not supported");
    }
    std::vector<std::string> parts = Split(info, ' ');
    if (parts.size() != 3 || parts[0].empty()) {
      throw Error(ErrorCode::kMalformedLine,
                  where + ": expected 'Type start end'");
    }
    long start = ParseLong(parts[1], where);
    long end = ParseLong(parts[2], where);
    if (start < 0 || end <= start || static_cast<size_t>(end) > text.size()) {
      throw Error(ErrorCode::kOffsetMismatch,
                  where + ": span " + parts[1] + "-" + parts[2] +
                      " out of range for text of length " +
                      std::to_string(text.size()));
    }
    SpanAnnotation ann;
    ann.ann_id = fields[0];
    ann.label = parts[0];
    ann.start = static_cast<size_t>(start);
    ann.end = static_cast<size_t>(end);
    ann.surface = fields[2];
    std::string actual = EncodeUtf8(
        std::u32string_view(text).substr(ann.start, ann.end - ann.start));
    if (actual != ann.surface) {
      throw Error(ErrorCode::kOffsetMismatch,
                  where + ": surface '" + ann.surface + "' but text has '" +
                      actual + "'");
    }
    out->push_back(std::move(ann));
  }
}

}  // namespace

AnnotatedDocument ParseStandoff(std::string_view text, std::string_view a1,
                                std::string_view a2, std::string doc_id) {
  AnnotatedDocument doc;
  doc.doc_id = std::move(doc_id);
  doc.text = DecodeUtf8(text);
  ParseTLines(a1, "a1", doc.text, &doc.entities);
  ParseTLines(a2, "a2", doc.text, &doc.triggers);

  std::set<std::string> ids;
  for (const auto *list : {&doc.entities, &doc.triggers}) {
    for (const SpanAnnotation &ann : *list) {
      if (!ids.insert(ann.ann_id).second) {
        throw Error(ErrorCode::kMalformedLine,
                    "duplicate annotation id " + ann.ann_id);
      }
    }
  }
  return doc;
}

AnnotatedDocument LoadStandoffDocument(const std::string &dir,
                                       const std::string &doc_id) {
  namespace fs = std::filesystem;
  fs::path base = fs::path(dir) / doc_id;
  std::string contents[3];
  const char *exts[3] = {".txt", ".a1", ".a2"};
  for (int i = 0; i < 3; ++i) {
    fs::path p = base;
    p += exts[i];
    if (!fs::exists(p)) {
      throw Error(ErrorCode::kIoError, "document " + doc_id + ": missing " +
                                           p.filename().string());
    }
    contents[i] = ReadFile(p.string());
  }
  try {
    return ParseStandoff(contents[0], contents[1], contents[2], doc_id);
  } catch (const Error &e) {
    throw Error(e.code(), (base.string() + ".") + e.what());
  }
}

std::vector<std::string> ListDocuments(const std::string &dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) {
    throw Error(ErrorCode::kIoError, "not a directory: " + dir);
  }
  std::vector<std::string> ids;
  for (const auto &entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt") {
      ids.push_back(entry.path().stem().string());
    }
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace evtrig
