// Copyright 2026 The Faclair Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gaelic/analysis.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "gaelic/text.hpp"

namespace gaelic {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::optional<std::uint64_t> parse_count(std::string_view s) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return value;
}

std::vector<std::string_view> split_fields(std::string_view line, char delimiter) {
  std::vector<std::string_view> fields;
  if (delimiter == ' ') {
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      if (i == line.size()) break;
      std::size_t end = i;
      while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
      fields.push_back(line.substr(i, end - i));
      i = end;
    }
    return fields;
  }
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == delimiter) {
      std::string_view f = trim(line.substr(start, i - start));
      if (f.size() >= 2 && f.front() == '"' && f.back() == '"') f = f.substr(1, f.size() - 2);
      fields.push_back(f);
      start = i + 1;
    }
  }
  return fields;
}

char detect_delimiter(std::string_view line) {
  if (line.find('\t') != std::string_view::npos) return '\t';
  if (line.find(',') != std::string_view::npos) return ',';
  return ' ';
}

std::string fold_or_raw(std::string_view s, FoldPolicy fold) {
  try {
    return fold_key(s, fold);
  } catch (const Error&) {
    return std::string(s);
  }
}

}  // namespace

FrequencyList parse_frequency_list(std::string_view text, const FrequencyListOptions& options) {
  FrequencyList list;
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);
  char delimiter = options.delimiter;
  bool first_record = true;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    const std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty()) continue;
    if (delimiter == 0) delimiter = detect_delimiter(line);

    const auto fields = split_fields(line, delimiter);
    const bool header_candidate = first_record;
    first_record = false;
    if (fields.size() != 2 && fields.size() != 3) {
      list.errors.push_back({line_no, ErrorKind::FormatError,
                             "expected 2 or 3 fields, got " + std::to_string(fields.size())});
      continue;
    }
    const auto count = parse_count(fields.back());
    if (!count) {
      if (header_candidate) continue;  // a header row
      list.errors.push_back({line_no, ErrorKind::FormatError,
                             "count is not a number: " + std::string(fields.back())});
      continue;
    }
    const std::string_view raw_lexeme = fields[fields.size() - 2];
    if (raw_lexeme.empty()) {
      list.errors.push_back({line_no, ErrorKind::FormatError, "empty lexeme"});
      continue;
    }
    std::string lexeme;
    try {
      lexeme = text::nfc(raw_lexeme);
    } catch (const Error& e) {
      list.errors.push_back({line_no, ErrorKind::FormatError, e.detail()});
      continue;
    }

    const std::size_t rank = list.rows.size() + 1;
    if (fields.size() == 3) {
      const auto file_rank = parse_count(fields[0]);
      if (!file_rank) {
        list.errors.push_back({line_no, ErrorKind::FormatError,
                               "rank is not a number: " + std::string(fields[0])});
        continue;
      }
      if (*file_rank != rank)
        list.warnings.push_back({line_no, ErrorKind::FormatError,
                                 "rank " + std::to_string(*file_rank) + " stored as " +
                                     std::to_string(rank)});
    }
    if (!list.rows.empty() && *count > list.rows.back().count)
      list.warnings.push_back({line_no, ErrorKind::FormatError,
                               "count " + std::to_string(*count) + " exceeds the previous row"});
    list.rows.push_back({rank, std::move(lexeme), *count});
    list.total_tokens += *count;
  }
  if (list.rows.empty()) throw Error(ErrorKind::FormatError, "no frequency rows found");
  return list;
}

FrequencyList load_frequency_list(const std::filesystem::path& path,
                                  const FrequencyListOptions& options) {
  return parse_frequency_list(read_file(path), options);
}

FrequencyList make_frequency_list(const std::vector<std::pair<std::string, std::uint64_t>>& counts) {
  FrequencyList list;
  for (const auto& [lexeme, count] : counts) {
    list.rows.push_back({list.rows.size() + 1, text::nfc(lexeme), count});
    list.total_tokens += count;
  }
  return list;
}

CoverageReport coverage(const FrequencyList& list, const std::set<std::string>& keys,
                        FoldPolicy fold, std::size_t unmatched_limit) {
  std::set<std::string> folded;
  for (const auto& k : keys) folded.insert(fold_or_raw(k, fold));

  CoverageReport report;
  report.total_types = list.rows.size();
  report.total_tokens = list.total_tokens;
  std::vector<FrequencyRow> unmatched;
  for (const auto& row : list.rows) {
    if (folded.contains(fold_or_raw(row.lexeme, fold))) {
      ++report.matched_types;
      report.matched_tokens += row.count;
    } else {
      unmatched.push_back(row);
    }
  }
  if (report.total_types > 0)
    report.type_coverage = static_cast<double>(report.matched_types) / report.total_types;
  if (report.total_tokens > 0)
    report.token_coverage = static_cast<double>(report.matched_tokens) / report.total_tokens;

  std::stable_sort(unmatched.begin(), unmatched.end(),
                   [](const FrequencyRow& a, const FrequencyRow& b) { return a.count > b.count; });
  if (unmatched.size() > unmatched_limit) unmatched.resize(unmatched_limit);
  report.unmatched_top = std::move(unmatched);
  return report;
}

std::vector<std::pair<std::size_t, double>> cumulative_coverage_curve(const FrequencyList& list,
                                                                      std::size_t k) {
  if (k == 0 || k > list.rows.size())
    throw Error(ErrorKind::RangeError, "k = " + std::to_string(k) + " outside 1.." +
                                           std::to_string(list.rows.size()));
  std::vector<std::pair<std::size_t, double>> curve;
  curve.reserve(k);
  std::uint64_t running = 0;
  for (std::size_t i = 0; i < k; ++i) {
    running += list.rows[i].count;
    const double share =
        list.total_tokens == 0 ? 0.0 : static_cast<double>(running) / list.total_tokens;
    curve.emplace_back(list.rows[i].rank, share);
  }
  return curve;
}

std::size_t EndingHistogram::total() const {
  std::size_t n = 0;
  for (const auto& [ending, count] : buckets) n += count;
  return n;
}

EndingHistogram ending_histogram(std::span<const Entry> entries, PrincipalPart field,
                                 std::size_t suffix_len, long min_growth) {
  std::map<std::string, std::size_t> counts;
  for (const Entry& e : entries) {
    const auto& part = e.part(field);
    if (!part || !part->is_present()) continue;
    const long growth = static_cast<long>(part->word().length()) - static_cast<long>(e.lemma.length());
    if (growth < min_growth) continue;
    ++counts[text::last_chars(part->word().str(), suffix_len)];
  }
  EndingHistogram h;
  h.buckets.assign(counts.begin(), counts.end());
  std::stable_sort(h.buckets.begin(), h.buckets.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  const std::string name(to_string(field));
  h.scope = "last " + std::to_string(suffix_len) + " characters of " + name + " where length(" +
            name + ") - length(lemma) >= " + std::to_string(min_growth);
  return h;
}

std::size_t count_suffix_pattern(std::span<const Entry> entries, PrincipalPart field,
                                 std::string_view pattern, long min_extra, Growth growth) {
  const std::string suffix = text::nfc(pattern);
  std::size_t n = 0;
  for (const Entry& e : entries) {
    const auto& part = e.part(field);
    if (!part || !part->is_present()) continue;
    const long extra = static_cast<long>(part->word().length()) - static_cast<long>(e.lemma.length());
    const bool length_ok = growth == Growth::AtLeast ? extra >= min_extra : extra == min_extra;
    if (length_ok && text::ends_with(part->word().str(), suffix)) ++n;
  }
  return n;
}

NearDuplicates find_near_duplicates(std::span<const Entry> entries) {
  std::map<std::string, std::vector<std::size_t>> by_case, by_accent;
  std::vector<std::string> lowered(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string& lemma = entries[i].lemma.str();
    lowered[i] = text::to_lower(lemma);
    by_case[lowered[i]].push_back(i);
    by_accent[normalize_accents(lemma, AccentMode::StripAll)].push_back(i);
  }

  NearDuplicates out;
  for (const auto& [key, group] : by_case)
    for (std::size_t a = 0; a < group.size(); ++a)
      for (std::size_t b = a + 1; b < group.size(); ++b)
        if (entries[group[a]].lemma != entries[group[b]].lemma)
          out.case_pairs.emplace_back(&entries[group[a]], &entries[group[b]]);
  for (const auto& [key, group] : by_accent)
    for (std::size_t a = 0; a < group.size(); ++a)
      for (std::size_t b = a + 1; b < group.size(); ++b)
        if (entries[group[a]].lemma != entries[group[b]].lemma &&
            lowered[group[a]] != lowered[group[b]])
          out.accent_pairs.emplace_back(&entries[group[a]], &entries[group[b]]);
  return out;
}

HapaxReport hapax_report(const FrequencyList& list) {
  HapaxReport report;
  for (const auto& row : list.rows)
    if (row.count == 1) report.lexemes.push_back(row.lexeme);
  report.count = report.lexemes.size();
  return report;
}

}  // namespace gaelic
