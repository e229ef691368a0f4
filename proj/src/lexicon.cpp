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

#include "gaelic/lexicon.hpp"

#include <algorithm>

#include "gaelic/text.hpp"

namespace gaelic {

std::optional<FoldPolicy> parse_fold_policy(std::string_view name) {
  if (name == "exact") return FoldPolicy::Exact;
  if (name == "accents") return FoldPolicy::FoldAccents;
  if (name == "accents-case") return FoldPolicy::FoldAccentsAndCase;
  return std::nullopt;
}

std::string_view to_string(FoldPolicy policy) {
  switch (policy) {
    case FoldPolicy::Exact: return "exact";
    case FoldPolicy::FoldAccents: return "accents";
    case FoldPolicy::FoldAccentsAndCase: return "accents-case";
  }
  return "exact";
}

std::string fold_key(std::string_view word, FoldPolicy policy) {
  std::string key = text::nfc(word);
  if (policy == FoldPolicy::Exact) return key;
  key = normalize_accents(key, AccentMode::StripAll);
  if (policy == FoldPolicy::FoldAccentsAndCase) key = text::to_lower(key);
  return key;
}

Vocabulary::Vocabulary(std::vector<Entry> entries, FoldPolicy policy)
    : entries_(std::move(entries)), policy_(policy) {
  for (std::size_t i = 0; i < entries_.size(); ++i)
    lemma_index_[fold_key(entries_[i].lemma.str(), policy_)].push_back(i);
}

std::vector<const Entry*> Vocabulary::lookup(std::string_view word) const {
  std::vector<const Entry*> out;
  const auto it = lemma_index_.find(fold_key(word, policy_));
  if (it == lemma_index_.end()) return out;
  for (std::size_t i : it->second) out.push_back(&entries_[i]);
  return out;
}

std::set<std::string> Vocabulary::lemma_set() const {
  std::set<std::string> out;
  for (const auto& e : entries_) out.insert(e.lemma.str());
  return out;
}

ExpansionStats AllFormsIndex::totals() const {
  ExpansionStats sum;
  for (const auto& [pos, s] : stats_) {
    sum.entries += s.entries;
    sum.analyses += s.analyses;
    sum.entry_forms += s.entry_forms;
    sum.failed_cells += s.failed_cells;
    sum.failed_entries += s.failed_entries;
  }
  return sum;
}

std::set<std::string> AllFormsIndex::keys() const {
  std::set<std::string> out;
  for (const auto& [form, analyses] : forms_) out.insert(form);
  return out;
}

std::vector<std::string> AllFormsIndex::folded_matches(std::string_view word) const {
  const auto it = folded_.find(fold_key(word, policy_));
  return it == folded_.end() ? std::vector<std::string>{} : it->second;
}

AllFormsIndex build_all_forms(const Vocabulary& vocabulary, const RuleSet& rules,
                              FoldPolicy recognition_policy) {
  AllFormsIndex index;
  index.entries_ = vocabulary.entries();
  index.policy_ = recognition_policy;
  for (std::size_t i = 0; i < index.entries_.size(); ++i) {
    const Entry& e = index.entries_[i];
    std::vector<std::pair<FormCode, Error>> failures;
    const auto analyses = surface_analyses(e, rules, &failures);

    ExpansionStats& s = index.stats_[e.pos];
    ++s.entries;
    s.analyses += analyses.size();
    s.failed_cells += failures.size();
    if (!failures.empty()) ++s.failed_entries;

    std::set<std::string> distinct;
    for (const auto& a : analyses) {
      distinct.insert(a.form.str());
      index.forms_[a.form.str()].push_back({i, a.code, a.lenited_allomorph});
    }
    s.entry_forms += distinct.size();
  }
  for (const auto& [form, analyses] : index.forms_)
    index.folded_[fold_key(form, recognition_policy)].push_back(form);
  return index;
}

namespace {

void collect(const AllFormsIndex& index, const std::string& surface, std::vector<Recognition>& out) {
  const auto it = index.forms().find(surface);
  if (it == index.forms().end()) return;
  for (const FormAnalysis& a : it->second) {
    Recognition r{&index.entries()[a.entry], a.code, a.lenited_allomorph, surface};
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(std::move(r));
  }
}

}  // namespace

std::vector<Recognition> recognize(const AllFormsIndex& index, std::string_view word) {
  std::vector<Recognition> out;
  std::string written;
  try {
    written = text::nfc(word);
  } catch (const Error&) {
    return out;
  }
  std::vector<std::string> candidates{written};
  if (const auto w = GaelicWord::try_from(written)) {
    const GaelicWord stripped = strip_prothesis(*w);
    if (stripped != *w) candidates.push_back(stripped.str());
  }

  for (const auto& c : candidates) {
    collect(index, c, out);
    if (!out.empty()) return out;
  }
  if (index.fold_policy() == FoldPolicy::Exact) return out;
  for (const auto& c : candidates) {
    for (const auto& surface : index.folded_matches(c)) collect(index, surface, out);
    if (!out.empty()) return out;
  }
  return out;
}

}  // namespace gaelic
