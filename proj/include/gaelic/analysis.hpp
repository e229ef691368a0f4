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

#pragma once

#include <cstdint>
#include <filesystem>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gaelic/lexicon.hpp"
#include "gaelic/svf.hpp"

namespace gaelic {

struct FrequencyRow {
  std::size_t rank;
  std::string lexeme;  // NFC; not required to be a valid Gaelic word
  std::uint64_t count;
};

/// Ranked lexeme counts from a corpus word list. Ranks run 1..n in file
/// order.
struct FrequencyList {
  std::vector<FrequencyRow> rows;
  std::uint64_t total_tokens = 0;
  std::vector<LineError> errors;    // rows that were skipped
  std::vector<LineError> warnings;  // loaded, but suspicious
};

struct FrequencyListOptions {
  /// '\t', ',' or ' ' (any whitespace); 0 picks one from the first line.
  char delimiter = 0;
};

/// Accepts "lexeme<d>count" or "rank<d>lexeme<d>count" rows with an
/// optional header line. Throws Error(FormatError) when no row parses.
FrequencyList parse_frequency_list(std::string_view text, const FrequencyListOptions& options = {});
FrequencyList load_frequency_list(const std::filesystem::path& path,
                                  const FrequencyListOptions& options = {});
FrequencyList make_frequency_list(const std::vector<std::pair<std::string, std::uint64_t>>& counts);

struct CoverageReport {
  std::size_t matched_types = 0;
  std::size_t total_types = 0;
  double type_coverage = 0.0;
  std::uint64_t matched_tokens = 0;
  std::uint64_t total_tokens = 0;
  double token_coverage = 0.0;
  std::vector<FrequencyRow> unmatched_top;  // by count, descending
};

/// Matches every list lexeme against `keys` (lemmas or all forms), both
/// sides folded under `fold`.
CoverageReport coverage(const FrequencyList& list, const std::set<std::string>& keys,
                        FoldPolicy fold, std::size_t unmatched_limit = 20);

/// (rank, share of all tokens covered by ranks 1..rank) for the first k
/// ranks. Throws Error(RangeError) unless 1 <= k <= rows.
std::vector<std::pair<std::size_t, double>> cumulative_coverage_curve(const FrequencyList& list,
                                                                      std::size_t k);

struct EndingHistogram {
  std::vector<std::pair<std::string, std::size_t>> buckets;  // count desc, then ending
  std::string scope;

  std::size_t total() const;
};

/// Buckets the last `suffix_len` characters of a principal part, for
/// entries where the part is present and at least `min_growth` characters
/// longer than the lemma.
EndingHistogram ending_histogram(std::span<const Entry> entries, PrincipalPart field,
                                 std::size_t suffix_len, long min_growth);

enum class Growth { AtLeast, Exactly };

/// Entries whose part ends with `pattern` and is `min_extra` (or, with
/// Growth::Exactly, exactly `min_extra`) characters longer than the lemma.
std::size_t count_suffix_pattern(std::span<const Entry> entries, PrincipalPart field,
                                 std::string_view pattern, long min_extra,
                                 Growth growth = Growth::AtLeast);

struct NearDuplicates {
  std::vector<std::pair<const Entry*, const Entry*>> case_pairs;
  std::vector<std::pair<const Entry*, const Entry*>> accent_pairs;
};

/// Lemma pairs that differ only by capitalisation, or only by accents.
NearDuplicates find_near_duplicates(std::span<const Entry> entries);

struct HapaxReport {
  std::size_t count = 0;
  std::vector<std::string> lexemes;
};

HapaxReport hapax_report(const FrequencyList& list);

}  // namespace gaelic
