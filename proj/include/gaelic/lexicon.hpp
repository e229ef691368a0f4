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

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "gaelic/rules.hpp"
#include "gaelic/svf.hpp"

namespace gaelic {

enum class FoldPolicy { Exact, FoldAccents, FoldAccentsAndCase };

/// "exact", "accents" or "accents-case".
std::optional<FoldPolicy> parse_fold_policy(std::string_view name);
std::string_view to_string(FoldPolicy policy);

/// Lookup key of a word under a policy. Accent folding strips both grave
/// and acute accents, so mòr, mór and mor share a key.
std::string fold_key(std::string_view word, FoldPolicy policy);

/// Searchable collection of entries keyed by folded lemma. Homographs are
/// kept: a key may lead to several entries.
class Vocabulary {
 public:
  explicit Vocabulary(std::vector<Entry> entries, FoldPolicy policy = FoldPolicy::Exact);

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  FoldPolicy fold_policy() const noexcept { return policy_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  /// Entries whose lemma equals `word` under the fold policy, in insertion
  /// order.
  std::vector<const Entry*> lookup(std::string_view word) const;

  std::set<std::string> lemma_set() const;

 private:
  std::vector<Entry> entries_;
  FoldPolicy policy_;
  std::map<std::string, std::vector<std::size_t>> lemma_index_;
};

struct FormAnalysis {
  std::size_t entry;  // index into AllFormsIndex::entries()
  FormCode code;
  bool lenited_allomorph = false;

  friend bool operator==(const FormAnalysis&, const FormAnalysis&) = default;
};

struct ExpansionStats {
  std::size_t entries = 0;
  std::size_t analyses = 0;        // (form, code) pairs produced
  std::size_t entry_forms = 0;     // sum of per-entry distinct forms
  std::size_t failed_cells = 0;    // forms that could not be derived
  std::size_t failed_entries = 0;  // entries with at least one failed cell
};

/// Every surface form derivable from a vocabulary, with its producers.
class AllFormsIndex {
 public:
  const std::map<std::string, std::vector<FormAnalysis>>& forms() const noexcept { return forms_; }
  std::size_t distinct_form_count() const noexcept { return forms_.size(); }
  const std::vector<Entry>& entries() const noexcept { return entries_; }
  FoldPolicy fold_policy() const noexcept { return policy_; }
  const std::map<PartOfSpeech, ExpansionStats>& stats() const noexcept { return stats_; }
  ExpansionStats totals() const;
  std::set<std::string> keys() const;

  /// Indexed surface forms equal to `word` under the fold policy.
  std::vector<std::string> folded_matches(std::string_view word) const;

 private:
  friend AllFormsIndex build_all_forms(const Vocabulary&, const RuleSet&, FoldPolicy);

  std::vector<Entry> entries_;
  FoldPolicy policy_ = FoldPolicy::FoldAccents;
  std::map<std::string, std::vector<FormAnalysis>> forms_;
  std::map<std::string, std::vector<std::string>> folded_;  // fold key -> surface forms
  std::map<PartOfSpeech, ExpansionStats> stats_;
};

/// `recognition_policy` is used by recognize() when an exact match fails.
AllFormsIndex build_all_forms(const Vocabulary& vocabulary, const RuleSet& rules,
                              FoldPolicy recognition_policy = FoldPolicy::FoldAccents);

struct Recognition {
  const Entry* entry;
  FormCode code;
  bool lenited_allomorph;
  std::string surface;  // the indexed form that matched

  friend bool operator==(const Recognition&, const Recognition&) = default;
};

/// All analyses of a word. Tries the word as written, then without a
/// prothetic prefix, then under the index's fold policy. A miss is an empty
/// list.
std::vector<Recognition> recognize(const AllFormsIndex& index, std::string_view word);

}  // namespace gaelic
