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

#include "evtrig/eval/report.h"

#include <cstdio>
#include <map>
#include <sstream>

#include "evtrig/error.h"
#include "evtrig/util/strings.h"

namespace evtrig {

std::string Percent(double fraction) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", 100.0 * fraction);
  return buf;
}

namespace {

void Row(std::ostream &out, const std::string &name, const Prf &p,
         const Counts &c) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%-28s %9s %9s %9s %7ld %7ld %7ld\n",
                name.c_str(), Percent(p.precision).c_str(),
                Percent(p.recall).c_str(), Percent(p.f1).c_str(), c.tp, c.fp,
                c.fn);
  out << buf;
}

void Header(std::ostream &out, const char *first) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%-28s %9s %9s %9s %7s %7s %7s\n", first,
                "Precision", "Recall", "F1", "TP", "FP", "FN");
  out << buf;
}

void PutCounts(std::ostream &out, const std::string &prefix, const Counts &c,
               const Prf &p) {
  out << prefix << ".tp=" << c.tp << '\n'
      << prefix << ".fp=" << c.fp << '\n'
      << prefix << ".fn=" << c.fn << '\n'
      << prefix << ".precision=" << FormatExact(p.precision) << '\n'
      << prefix << ".recall=" << FormatExact(p.recall) << '\n'
      << prefix << ".f1=" << FormatExact(p.f1) << '\n';
}

}  // namespace

std::string RenderReport(const EvalReport &report) {
  std::ostringstream out;
  Header(out, "");
  Row(out, "Overall (micro)", report.micro_prf, report.micro);
  if (!report.categories.empty()) {
    out << '\n';
    Header(out, "Trigger Category");
    for (const CategoryScore &c : report.categories) {
      Row(out, c.name, c.prf, c.counts);
    }
  }
  out << '\n';
  Header(out, "Trigger Label");
  for (size_t l = 0; l < report.labels.size(); ++l) {
    if (report.labels[l] == "None") continue;
    Row(out, report.labels[l], report.per_label_prf[l], report.per_label[l]);
  }
  return out.str();
}

std::string FormatReportRecord(const EvalReport &report) {
  std::ostringstream out;
  out << "format=evtrig-report 1\n";
  out << "tokens=" << report.tokens << '\n';
  PutCounts(out, "micro", report.micro, report.micro_prf);
  out << "labels=" << report.labels.size() << '\n';
  for (size_t l = 0; l < report.labels.size(); ++l) {
    std::string prefix = "label." + std::to_string(l);
    out << prefix << ".name=" << report.labels[l] << '\n';
    PutCounts(out, prefix, report.per_label[l], report.per_label_prf[l]);
  }
  out << "categories=" << report.categories.size() << '\n';
  for (size_t c = 0; c < report.categories.size(); ++c) {
    std::string prefix = "category." + std::to_string(c);
    out << prefix << ".name=" << report.categories[c].name << '\n';
    PutCounts(out, prefix, report.categories[c].counts,
              report.categories[c].prf);
  }
  return out.str();
}

EvalReport ParseReportRecord(std::string_view text) {
  std::map<std::string, std::string> kv;
  for (const std::string &line : Split(text, '\n')) {
    if (line.empty()) continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::kMalformedLine, "report record: " + line);
    }
    kv[line.substr(0, eq)] = line.substr(eq + 1);
  }
  auto get = [&](const std::string &key) -> const std::string & {
    auto it = kv.find(key);
    if (it == kv.end()) {
      throw Error(ErrorCode::kMalformedLine, "report record lacks " + key);
    }
    return it->second;
  };
  auto counts = [&](const std::string &prefix, Counts *c, Prf *p) {
    c->tp = ParseLong(get(prefix + ".tp"), prefix);
    c->fp = ParseLong(get(prefix + ".fp"), prefix);
    c->fn = ParseLong(get(prefix + ".fn"), prefix);
    p->precision = ParseDouble(get(prefix + ".precision"), prefix);
    p->recall = ParseDouble(get(prefix + ".recall"), prefix);
    p->f1 = ParseDouble(get(prefix + ".f1"), prefix);
  };
  if (get("format") != "evtrig-report 1") {
    throw Error(ErrorCode::kMalformedLine, "report record: unknown format");
  }
  EvalReport report;
  report.tokens = ParseLong(get("tokens"), "tokens");
  counts("micro", &report.micro, &report.micro_prf);
  long n = ParseLong(get("labels"), "labels");
  for (long l = 0; l < n; ++l) {
    std::string prefix = "label." + std::to_string(l);
    report.labels.push_back(get(prefix + ".name"));
    report.per_label.emplace_back();
    report.per_label_prf.emplace_back();
    counts(prefix, &report.per_label.back(), &report.per_label_prf.back());
  }
  long nc = ParseLong(get("categories"), "categories");
  for (long c = 0; c < nc; ++c) {
    std::string prefix = "category." + std::to_string(c);
    CategoryScore s;
    s.name = get(prefix + ".name");
    counts(prefix, &s.counts, &s.prf);
    report.categories.push_back(s);
  }
  return report;
}

std::string FormatConfusionTsv(const EvalReport &report) {
  std::ostringstream out;
  out << "gold\\pred";
  for (const std::string &l : report.labels) out << '\t' << l;
  out << '\n';
  for (size_t i = 0; i < report.confusion.size(); ++i) {
    out << report.labels[i];
    for (long v : report.confusion[i]) out << '\t' << v;
    out << '\n';
  }
  return out.str();
}

ConfusionMatrix ParseConfusionTsv(std::string_view text) {
  ConfusionMatrix m;
  std::vector<std::string> lines = Split(text, '\n');
  for (size_t n = 1; n < lines.size(); ++n) {
    if (lines[n].empty()) continue;
    std::vector<std::string> f = Split(lines[n], '\t');
    std::vector<long> row;
    for (size_t j = 1; j < f.size(); ++j) {
      row.push_back(ParseLong(f[j], "confusion matrix"));
    }
    m.push_back(std::move(row));
  }
  return m;
}

}  // namespace evtrig
