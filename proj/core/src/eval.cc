#include "otkit/eval.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <thread>

#include "otkit/error.h"
#include "otkit/unicode.h"

namespace otkit {
namespace {

std::string Percent(double rate) {
  if (std::isnan(rate)) return "n/a";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f%%", rate * 100.0);
  return buf;
}

std::string Fraction(double rate) {
  if (std::isnan(rate)) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", rate);
  return buf;
}

std::string CsvField(const std::string &s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::size_t DisplayWidth(const std::string &s) { return Graphemes(s).size(); }

std::string Pad(const std::string &s, std::size_t width) {
  std::size_t w = DisplayWidth(s);
  return w >= width ? s : s + std::string(width - w, ' ');
}

ReportRow EvaluateDocument(const DocumentInput &doc) {
  ReportRow row;
  row.meta = doc.meta;
  if (doc.ref_lines.size() != doc.hyp_lines.size()) {
    row.error = LineCountMismatch(doc.ref_lines.size(), doc.hyp_lines.size())
                    .what();
    return row;
  }
  row.chars = CharErrors(doc.ref_lines, doc.hyp_lines);
  row.words = WordErrors(doc.ref_lines, doc.hyp_lines);
  if (row.chars.ref_length == 0)
    row.error = "EmptyReference: reference has no characters";
  return row;
}

}  // namespace

Alignment LevenshteinAlign(std::span<const std::string> ref,
                           std::span<const std::string> hyp) {
  const std::size_t n = ref.size(), m = hyp.size();
  std::vector<std::size_t> d((n + 1) * (m + 1));
  auto at = [&](std::size_t i, std::size_t j) -> std::size_t & {
    return d[i * (m + 1) + j];
  };
  for (std::size_t i = 0; i <= n; ++i) at(i, 0) = i;
  for (std::size_t j = 0; j <= m; ++j) at(0, j) = j;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      std::size_t diag = at(i - 1, j - 1) + (ref[i - 1] == hyp[j - 1] ? 0 : 1);
      at(i, j) = std::min({diag, at(i - 1, j) + 1, at(i, j - 1) + 1});
    }
  }

  Alignment a;
  std::size_t i = n, j = m;
  while (i > 0 || j > 0) {
    const std::size_t cur = at(i, j);
    if (i > 0 && j > 0 && ref[i - 1] == hyp[j - 1] && at(i - 1, j - 1) == cur) {
      a.ops.push_back({EditOp::kMatch, ref[i - 1], hyp[j - 1]});
      ++a.matches;
      --i, --j;
    } else if (i > 0 && j > 0 && at(i - 1, j - 1) + 1 == cur) {
      a.ops.push_back({EditOp::kSubstitute, ref[i - 1], hyp[j - 1]});
      ++a.substitutions;
      --i, --j;
    } else if (i > 0 && at(i - 1, j) + 1 == cur) {
      a.ops.push_back({EditOp::kDelete, ref[i - 1], {}});
      ++a.deletions;
      --i;
    } else {
      a.ops.push_back({EditOp::kInsert, {}, hyp[j - 1]});
      ++a.insertions;
      --j;
    }
  }
  std::reverse(a.ops.begin(), a.ops.end());
  return a;
}

Alignment LevenshteinAlign(const GraphemeLine &ref, const GraphemeLine &hyp) {
  return LevenshteinAlign(ref.graphemes(), hyp.graphemes());
}

std::size_t EditDistance(std::span<const std::string> ref,
                         std::span<const std::string> hyp) {
  if (ref.size() < hyp.size()) std::swap(ref, hyp);
  std::vector<std::size_t> prev(hyp.size() + 1), cur(hyp.size() + 1);
  for (std::size_t j = 0; j <= hyp.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= ref.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= hyp.size(); ++j) {
      cur[j] = std::min({prev[j - 1] + (ref[i - 1] == hyp[j - 1] ? 0 : 1),
                         prev[j] + 1, cur[j - 1] + 1});
    }
    std::swap(prev, cur);
  }
  return prev[hyp.size()];
}

std::vector<std::string> ReplayAlignment(std::span<const std::string> ref,
                                         const Alignment &alignment) {
  std::vector<std::string> out;
  std::size_t i = 0;
  for (const AlignedPair &p : alignment.ops) {
    switch (p.op) {
      case EditOp::kMatch:
        out.push_back(ref[i++]);
        break;
      case EditOp::kSubstitute:
        ++i;
        out.push_back(p.hyp);
        break;
      case EditOp::kDelete:
        ++i;
        break;
      case EditOp::kInsert:
        out.push_back(p.hyp);
        break;
    }
  }
  return out;
}

double ErrorCounts::Rate() const {
  if (ref_length == 0) return std::numeric_limits<double>::quiet_NaN();
  return static_cast<double>(edits) / static_cast<double>(ref_length);
}

ErrorCounts CharErrors(std::span<const std::string> ref_lines,
                       std::span<const std::string> hyp_lines) {
  if (ref_lines.size() != hyp_lines.size())
    throw LineCountMismatch(ref_lines.size(), hyp_lines.size());
  ErrorCounts counts;
  for (std::size_t i = 0; i < ref_lines.size(); ++i) {
    std::vector<std::string> r = Graphemes(ref_lines[i]);
    std::vector<std::string> h = Graphemes(hyp_lines[i]);
    counts.edits += EditDistance(r, h);
    counts.ref_length += r.size();
  }
  return counts;
}

ErrorCounts WordErrors(std::span<const std::string> ref_lines,
                       std::span<const std::string> hyp_lines) {
  if (ref_lines.size() != hyp_lines.size())
    throw LineCountMismatch(ref_lines.size(), hyp_lines.size());
  ErrorCounts counts;
  for (std::size_t i = 0; i < ref_lines.size(); ++i) {
    std::vector<std::string> r = SplitWhitespace(ref_lines[i]);
    std::vector<std::string> h = SplitWhitespace(hyp_lines[i]);
    counts.edits += EditDistance(r, h);
    counts.ref_length += r.size();
  }
  return counts;
}

double Cer(std::string_view ref, std::string_view hyp) {
  std::vector<std::string> r = Graphemes(ref);
  if (r.empty()) throw Error(ErrorCode::kEmptyReference, "empty reference");
  std::vector<std::string> h = Graphemes(hyp);
  return static_cast<double>(EditDistance(r, h)) /
         static_cast<double>(r.size());
}

double Wer(std::string_view ref, std::string_view hyp) {
  std::vector<std::string> r = SplitWhitespace(ref);
  if (r.empty()) throw Error(ErrorCode::kEmptyReference, "empty reference");
  std::vector<std::string> h = SplitWhitespace(hyp);
  return static_cast<double>(EditDistance(r, h)) /
         static_cast<double>(r.size());
}

EvalReport CorpusReport(std::span<const DocumentInput> documents, int jobs) {
  EvalReport report;
  report.rows.resize(documents.size());
  const std::size_t workers = std::min<std::size_t>(
      static_cast<std::size_t>(std::max(1, jobs)), documents.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < documents.size(); ++i)
      report.rows[i] = EvaluateDocument(documents[i]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < documents.size(); i = next++)
          report.rows[i] = EvaluateDocument(documents[i]);
      });
    }
    for (auto &t : pool) t.join();
  }
  for (const ReportRow &row : report.rows) {
    if (row.error) continue;
    report.total_chars.Add(row.chars);
    report.total_words.Add(row.words);
  }
  return report;
}

std::string EvalReport::RenderTable() const {
  const std::vector<std::string> header = {"Name", "Subject", "Date", "CER",
                                           "WER"};
  std::vector<std::vector<std::string>> cells;
  for (const ReportRow &row : rows) {
    if (row.error) {
      cells.push_back({row.meta.name, row.meta.subject, row.meta.date,
                       "excluded", *row.error});
    } else {
      cells.push_back({row.meta.name, row.meta.subject, row.meta.date,
                       Percent(row.cer()), Percent(row.wer())});
    }
  }
  cells.push_back({"Total", "", "", Percent(cer()), Percent(wer())});

  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    width[c] = DisplayWidth(header[c]);
    for (const auto &r : cells)
      if (c + 1 < header.size()) width[c] = std::max(width[c], DisplayWidth(r[c]));
  }
  std::ostringstream out;
  auto emit = [&](const std::vector<std::string> &r) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      line += c + 1 < r.size() ? Pad(r[c], width[c]) : r[c];
      if (c + 1 < r.size()) line += "  ";
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  };
  emit(header);
  std::size_t rule = 0;
  for (std::size_t c = 0; c + 1 < width.size(); ++c) rule += width[c] + 2;
  out << std::string(rule + width.back(), '-') << '\n';
  for (std::size_t i = 0; i + 1 < cells.size(); ++i) emit(cells[i]);
  out << std::string(rule + width.back(), '-') << '\n';
  emit(cells.back());
  return out.str();
}

std::string EvalReport::RenderCsv() const {
  std::ostringstream out;
  out << "name,subject,date,cer,wer\n";
  for (const ReportRow &row : rows) {
    out << CsvField(row.meta.name) << ',' << CsvField(row.meta.subject) << ','
        << CsvField(row.meta.date) << ',';
    if (row.error) {
      out << ",\n";
    } else {
      out << Fraction(row.cer()) << ',' << Fraction(row.wer()) << '\n';
    }
  }
  out << "TOTAL,,," << Fraction(cer()) << ',' << Fraction(wer()) << '\n';
  return out.str();
}

}  // namespace otkit
