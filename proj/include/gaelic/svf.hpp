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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gaelic/error.hpp"
#include "gaelic/orthography.hpp"

namespace gaelic {

enum class PartOfSpeech { Noun, Verb, Adj };
enum class Gender { M, F };

/// Principal parts carried by an SVF record besides the lemma.
enum class PrincipalPart { NP, GS, VN, CP };

std::string_view to_string(PartOfSpeech pos);
std::string_view to_string(Gender gender);
std::string_view to_string(PrincipalPart part);
std::optional<PartOfSpeech> parse_pos(std::string_view token);
std::optional<PrincipalPart> parse_principal_part(std::string_view token);

/// A principal-part slot: a word, "?" (not found in the source) or "-"
/// (the form does not exist, e.g. the plural of a mass noun).
class PartValue {
 public:
  enum class State { Present, Unknown, NonExistent };

  static PartValue present(GaelicWord word) { return PartValue(State::Present, std::move(word)); }
  static PartValue unknown() { return PartValue(State::Unknown, std::nullopt); }
  static PartValue non_existent() { return PartValue(State::NonExistent, std::nullopt); }

  State state() const noexcept { return state_; }
  bool is_present() const noexcept { return state_ == State::Present; }
  /// Only valid when is_present().
  const GaelicWord& word() const { return *word_; }

  friend bool operator==(const PartValue&, const PartValue&) = default;

 private:
  PartValue(State state, std::optional<GaelicWord> word) : state_(state), word_(std::move(word)) {}
  State state_;
  std::optional<GaelicWord> word_;
};

/// One headword with its principal parts (one SVF line).
struct Entry {
  GaelicWord lemma;
  PartOfSpeech pos;
  bool irregular = false;
  std::optional<Gender> gender;
  std::optional<PartValue> np;  // nominative plural
  std::optional<PartValue> gs;  // genitive singular
  std::optional<PartValue> vn;  // verbal noun
  std::optional<PartValue> cp;  // comparative

  const std::optional<PartValue>& part(PrincipalPart which) const;

  friend bool operator==(const Entry&, const Entry&) = default;
};

struct Violation {
  std::string field;   // column name: GR, NP, GS, VN or CP
  std::string clause;  // the integrity clause that failed

  friend bool operator==(const Violation&, const Violation&) = default;
};

inline constexpr std::string_view kNounClause =
    "(GR IS NULL AND NP IS NULL AND GS IS NULL) OR POS = 'NOUN'";
inline constexpr std::string_view kVerbClause = "VN IS NULL OR POS = 'VERB'";
inline constexpr std::string_view kAdjClause = "CP IS NULL OR POS = 'ADJ'";
inline constexpr std::string_view kMandatoryForNoun = "mandatory-for-noun";
inline constexpr std::string_view kMandatoryForVerb = "mandatory-for-verb";
inline constexpr std::string_view kMandatoryForAdj = "mandatory-for-adj";

/// Violations of the three-clause integrity constraint only.
std::vector<Violation> constraint_violations(const Entry& entry);

/// Integrity constraint plus the fields each part of speech must carry.
/// Empty iff the entry is well formed.
std::vector<Violation> validate(const Entry& entry);

/// Parses one record. Throws Error(SyntaxError) for malformed tokens or
/// quoting and Error(ConstraintViolation) for fields illegal for the POS.
Entry parse_svf_line(std::string_view line);

/// Canonical one-line form; parse_svf_line(serialize_entry(e)) == e.
std::string serialize_entry(const Entry& entry);

struct LineError {
  std::size_t line;
  ErrorKind kind;
  std::string message;
};

struct VocabularyFile {
  std::vector<Entry> entries;
  std::vector<LineError> errors;
  std::size_t skipped_lines = 0;  // blanks and comments
  std::size_t total_lines = 0;
};

/// Parses every line; bad lines become positioned errors. Blank lines and
/// lines starting with '#' are skipped.
VocabularyFile parse_vocabulary(std::string_view text);

/// Throws Error(IoError) only when the file cannot be read.
VocabularyFile load_vocabulary_file(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);

}  // namespace gaelic
