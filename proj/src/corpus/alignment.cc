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

#include "evtrig/corpus/alignment.h"

namespace evtrig {

namespace {

// Index of the winning annotation for [start, end), or -1.
int Resolve(const std::vector<SpanAnnotation> &anns, size_t start,
            size_t end) {
  int best = -1;
  for (size_t i = 0; i < anns.size(); ++i) {
    const SpanAnnotation &a = anns[i];
    if (!(a.start < end && start < a.end)) continue;
    if (best < 0) {
      best = static_cast<int>(i);
      continue;
    }
    const SpanAnnotation &b = anns[best];
    if (a.start < b.start ||
        (a.start == b.start && a.end - a.start > b.end - b.start)) {
      best = static_cast<int>(i);
    }
  }
  return best;
}

AnnotationRecord MakeRecord(const std::string &doc_id,
                            const SpanAnnotation &ann, AnnotationKind kind) {
  AnnotationRecord r;
  r.doc_id = doc_id;
  r.ann_id = ann.ann_id;
  r.kind = kind;
  r.label = ann.label;
  r.start = ann.start;
  r.end = ann.end;
  return r;
}

}  // namespace

AlignedDocument AlignLabels(const AnnotatedDocument &doc,
                            const std::vector<CharSpan> &sentences,
                            const std::vector<std::vector<TokenSpan>> &tokens) {
  AlignedDocument out;
  for (const SpanAnnotation &a : doc.entities) {
    out.annotations.push_back(
        MakeRecord(doc.doc_id, a, AnnotationKind::kEntity));
  }
  for (const SpanAnnotation &a : doc.triggers) {
    out.annotations.push_back(
        MakeRecord(doc.doc_id, a, AnnotationKind::kTrigger));
  }
  const size_t n_entities = doc.entities.size();

  for (size_t s = 0; s < sentences.size(); ++s) {
    LabeledSentence sentence;
    sentence.doc_id = doc.doc_id;
    sentence.sent_idx = static_cast<int>(s);
    for (const TokenSpan &tok : tokens[s]) {
      LabeledToken lt;
      lt.surface = tok.surface;
      lt.start = tok.start;
      lt.end = tok.end;
      int e = Resolve(doc.entities, tok.start, tok.end);
      if (e >= 0) {
        lt.entity = doc.entities[e].label;
        ++out.annotations[e].aligned_tokens;
      }
      int t = Resolve(doc.triggers, tok.start, tok.end);
      if (t >= 0) {
        lt.label = doc.triggers[t].label;
        ++out.annotations[n_entities + t].aligned_tokens;
      }
      sentence.tokens.push_back(std::move(lt));
    }
    if (!sentence.tokens.empty()) out.sentences.push_back(std::move(sentence));
  }
  // Renumber so sentence indices stay dense after dropping empty ones.
  for (size_t s = 0; s < out.sentences.size(); ++s) {
    out.sentences[s].sent_idx = static_cast<int>(s);
  }
  return out;
}

AlignedDocument PrepareDocument(const AnnotatedDocument &doc) {
  std::vector<CharSpan> protect;
  for (const auto *list : {&doc.entities, &doc.triggers}) {
    for (const SpanAnnotation &a : *list) protect.push_back({a.start, a.end});
  }
  std::vector<CharSpan> sentences = SplitSentences(doc.text, protect);
  std::vector<std::vector<TokenSpan>> tokens;
  tokens.reserve(sentences.size());
  std::u32string_view text(doc.text);
  for (const CharSpan &s : sentences) {
    tokens.push_back(Tokenize(text.substr(s.start, s.end - s.start), s.start));
  }
  return AlignLabels(doc, sentences, tokens);
}

}  // namespace evtrig
