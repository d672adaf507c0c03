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

#include "evtrig/corpus/dataset.h"

#include <sstream>

#include "evtrig/error.h"
#include "evtrig/util/strings.h"

namespace evtrig {

namespace {

constexpr char kNoGold[] = "_";

void FormatToken(std::ostream &out, const LabeledSentence &s, size_t i) {
  const LabeledToken &t = s.tokens[i];
  out << s.doc_id << '\t' << s.sent_idx << '\t' << i << '\t' << t.surface
      << '\t' << t.start << '\t' << t.end << '\t' << t.entity << '\t'
      << (s.has_gold ? t.label : std::string(kNoGold));
}

}  // namespace

std::string FormatPreparedDataset(std::span<const LabeledSentence> sentences) {
  std::ostringstream out;
  for (const LabeledSentence &s : sentences) {
    for (size_t i = 0; i < s.tokens.size(); ++i) {
      FormatToken(out, s, i);
      out << '\n';
    }
    out << '\n';
  }
  return out.str();
}

std::vector<LabeledSentence> ParsePreparedDataset(std::string_view contents) {
  std::vector<LabeledSentence> sentences;
  LabeledSentence current;
  bool open = false;
  std::vector<std::string> lines = Split(contents, '\n');
  for (size_t n = 0; n < lines.size(); ++n) {
    std::string_view line = lines[n];
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) {
      if (open) sentences.push_back(std::move(current));
      current = LabeledSentence();
      open = false;
      continue;
    }
    std::string where = "dataset line " + std::to_string(n + 1);
    std::vector<std::string> f = Split(line, '\t');
    if (f.size() != 7 && f.size() != 8 && f.size() != 9) {
      throw Error(ErrorCode::kMalformedLine, where + ": expected 8 fields");
    }
    bool has_gold = f.size() >= 8 && f[7] != kNoGold;
    int sent_idx = static_cast<int>(ParseLong(f[1], where));
    long tok_idx = ParseLong(f[2], where);
    if (!open) {
      current.doc_id = f[0];
      current.sent_idx = sent_idx;
      current.has_gold = has_gold;
      open = true;
    } else if (f[0] != current.doc_id || sent_idx != current.sent_idx) {
      throw Error(ErrorCode::kMalformedLine,
                  where + ": sentence changed without a blank line");
    }
    if (tok_idx != static_cast<long>(current.tokens.size())) {
      throw Error(ErrorCode::kMalformedLine, where + ": token index out of order");
    }
    LabeledToken t;
    t.surface = f[3];
    t.start = static_cast<size_t>(ParseLong(f[4], where));
    t.end = static_cast<size_t>(ParseLong(f[5], where));
    t.entity = f[6];
    t.label = has_gold ? f[7] : std::string(kNoneLabel);
    if (has_gold != current.has_gold) {
      throw Error(ErrorCode::kMalformedLine,
                  where + ": mixed gold and gold-free tokens");
    }
    current.tokens.push_back(std::move(t));
  }
  if (open) sentences.push_back(std::move(current));
  return sentences;
}

std::string FormatPredictions(
    std::span<const LabeledSentence> sentences,
    const std::vector<std::vector<std::string>> &pred) {
  if (pred.size() != sentences.size()) {
    throw Error(ErrorCode::kLengthMismatch, "prediction/sentence count differs");
  }
  std::ostringstream out;
  for (size_t s = 0; s < sentences.size(); ++s) {
    if (pred[s].size() != sentences[s].tokens.size()) {
      throw Error(ErrorCode::kLengthMismatch, "prediction/token count differs");
    }
    for (size_t i = 0; i < pred[s].size(); ++i) {
      FormatToken(out, sentences[s], i);
      out << '\t' << pred[s][i] << '\n';
    }
    out << '\n';
  }
  return out.str();
}

std::string FormatAnnotationRecords(std::span<const AnnotationRecord> records) {
  std::ostringstream out;
  for (const AnnotationRecord &r : records) {
    out << r.doc_id << '\t' << r.ann_id << '\t'
        << (r.kind == AnnotationKind::kEntity ? "entity" : "trigger") << '\t'
        << r.label << '\t' << r.start << '\t' << r.end << '\t'
        << r.aligned_tokens << '\n';
  }
  return out.str();
}

std::vector<AnnotationRecord> ParseAnnotationRecords(std::string_view contents) {
  std::vector<AnnotationRecord> records;
  std::vector<std::string> lines = Split(contents, '\n');
  for (size_t n = 0; n < lines.size(); ++n) {
    if (lines[n].empty()) continue;
    std::string where = "annotation line " + std::to_string(n + 1);
    std::vector<std::string> f = Split(lines[n], '\t');
    if (f.size() != 7 || (f[2] != "entity" && f[2] != "trigger")) {
      throw Error(ErrorCode::kMalformedLine, where + ": bad record");
    }
    AnnotationRecord r;
    r.doc_id = f[0];
    r.ann_id = f[1];
    r.kind = f[2] == "entity" ? AnnotationKind::kEntity : AnnotationKind::kTrigger;
    r.label = f[3];
    r.start = static_cast<size_t>(ParseLong(f[4], where));
    r.end = static_cast<size_t>(ParseLong(f[5], where));
    r.aligned_tokens = static_cast<int>(ParseLong(f[6], where));
    records.push_back(std::move(r));
  }
  return records;
}

CorpusStats CountAnnotations(std::span<const AnnotationRecord> records,
                             bool aligned_only) {
  CorpusStats stats;
  for (const AnnotationRecord &r : records) {
    if (aligned_only && r.aligned_tokens == 0) continue;
    auto &counts =
        r.kind == AnnotationKind::kEntity ? stats.entities : stats.triggers;
    ++counts[r.label];
  }
  return stats;
}

}  // namespace evtrig
