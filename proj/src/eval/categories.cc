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

#include "evtrig/eval/categories.h"

#include <algorithm>

#include "evtrig/corpus/alignment.h"
#include "evtrig/error.h"
#include "evtrig/util/strings.h"

namespace evtrig {

CategoryMap::CategoryMap(std::vector<CategoryEntry> entries)
    : entries_(std::move(entries)) {}

CategoryMap CategoryMap::MleeTriggers() {
  return CategoryMap({
      {"Cell_proliferation", "Cell Proliferation", "CELLP", "Anatomical"},
      {"Development", "Development", "DEV", "Anatomical"},
      {"Blood_vessel_development", "Blood Vessel Development", "BVD",
       "Anatomical"},
      {"Death", "Death", "DTH", "Anatomical"},
      {"Breakdown", "Breakdown", "BRK", "Anatomical"},
      {"Remodeling", "Remodeling", "REMDL", "Anatomical"},
      {"Growth", "Growth", "GRO", "Anatomical"},
      {"Synthesis", "Synthesis", "SYN", "Molecular"},
      {"Gene_expression", "Gene Expression", "GENEXP", "Molecular"},
      {"Transcription", "Transcription", "TRANS", "Molecular"},
      {"Catabolism", "Catabolism", "CATA", "Molecular"},
      {"Phosphorylation", "Phosphorylation", "PHO", "Molecular"},
      {"Dephosphorylation", "Dephosphorylation", "DEPHO", "Molecular"},
      {"Localization", "Localization", "LOC", "General"},
      {"Binding", "Binding", "BIND", "General"},
      {"Regulation", "Regulation", "REG", "General"},
      {"Positive_regulation", "Positive Regulation", "PREG", "General"},
      {"Negative_regulation", "Negative Regulation", "NREG", "General"},
      {"Planned_process", "Planned Process", "PLP", "Planned"},
  });
}

CategoryMap CategoryMap::MleeEntities() {
  return CategoryMap({
      {"Drug_or_compound", "Drug or Compound", "", "Molecule"},
      {"Gene_or_gene_product", "Gene or Gene Product", "", "Molecule"},
      {"Organism_subdivision", "Organism Subdivision", "", "Anatomy"},
      {"Anatomical_system", "Anatomical System", "", "Anatomy"},
      {"Organ", "Organ", "", "Anatomy"},
      {"Multi-tissue_structure", "Multi-tissue Structure", "", "Anatomy"},
      {"Tissue", "Tissue", "", "Anatomy"},
      {"Cell", "Cell", "", "Anatomy"},
      {"Cellular_component", "Cellular Component", "", "Anatomy"},
      {"Developing_anatomical_structure", "Developing Anatomical Structure",
       "", "Anatomy"},
      {"Organism_substance", "Organism Substance", "", "Anatomy"},
      {"Immaterial_anatomical_entity", "Immaterial Anatomical Entity", "",
       "Anatomy"},
      {"Pathological_formation", "Pathological Formation", "", "Anatomy"},
      {"Organism", "Organism", "", "Organism"},
  });
}

CategoryMap CategoryMap::Parse(std::string_view text) {
  std::vector<CategoryEntry> entries;
  std::vector<std::string> lines = Split(text, '\n');
  for (size_t n = 0; n < lines.size(); ++n) {
    std::string_view line = Trim(lines[n]);
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> f = Split(line, '\t');
    if (f.size() != 2) {
      throw Error(ErrorCode::kMalformedLine,
                  "category map line " + std::to_string(n + 1) +
                      ": expected label<TAB>category");
    }
    entries.push_back({f[0], f[0], "", f[1]});
  }
  return CategoryMap(std::move(entries));
}

const CategoryEntry *CategoryMap::Find(std::string_view label) const {
  for (const CategoryEntry &e : entries_) {
    if (e.label == label) return &e;
  }
  return nullptr;
}

std::vector<std::string> CategoryMap::Categories() const {
  std::vector<std::string> out;
  for (const CategoryEntry &e : entries_) {
    if (std::find(out.begin(), out.end(), e.category) == out.end()) {
      out.push_back(e.category);
    }
  }
  return out;
}

std::vector<CategoryScore> CategoryRollup(EvalReport *report,
                                          const CategoryMap &map) {
  std::vector<std::string> order = map.Categories();
  std::vector<CategoryScore> scores;
  for (const std::string &c : order) scores.push_back({c, {}, {}});
  CategoryScore overall{"Overall", {}, {}};
  for (size_t l = 0; l < report->labels.size(); ++l) {
    const std::string &label = report->labels[l];
    if (label == kNoneLabel) continue;
    const CategoryEntry *entry = map.Find(label);
    if (entry == nullptr) {
      throw Error(ErrorCode::kUnmappedLabel, "no category for label " + label);
    }
    auto it = std::find(order.begin(), order.end(), entry->category);
    scores[it - order.begin()].counts += report->per_label[l];
    overall.counts += report->per_label[l];
  }
  scores.push_back(overall);
  for (CategoryScore &s : scores) s.prf = ComputePrf(s.counts);
  report->categories = scores;
  return scores;
}

}  // namespace evtrig
