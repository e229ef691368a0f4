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

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace gaelic {

/// A written word: NFC-composed UTF-8, non-empty, made only of Latin letters,
/// grave- or acute-accented vowels, apostrophe, hyphen and space.
///
/// Construction normalizes, so two words compare equal exactly when their
/// texts do.
class GaelicWord {
 public:
  /// Throws Error(InvalidWord).
  static GaelicWord from(std::string_view text);
  static std::optional<GaelicWord> try_from(std::string_view text);
  static GaelicWord from_chars(std::u32string_view chars);

  const std::string& str() const noexcept { return text_; }
  std::u32string chars() const;
  std::size_t length() const;

  /// True when only the 18 letters of the native alphabet are used.
  bool is_native_spelling() const;

  friend bool operator==(const GaelicWord&, const GaelicWord&) = default;
  friend auto operator<=>(const GaelicWord&, const GaelicWord&) = default;

 private:
  explicit GaelicWord(std::string text) : text_(std::move(text)) {}
  std::string text_;
};

enum class VowelClass { Broad, Slender };

enum class AccentMode { FoldAcuteToGrave, StripAll, None };

struct SuffixAlternation {
  GaelicWord broad;
  GaelicWord slender;

  friend bool operator==(const SuffixAlternation&, const SuffixAlternation&) = default;
};

// Letter classification. Accented vowels classify as their base vowel.
bool is_vowel(char32_t c);
std::optional<VowelClass> vowel_class(char32_t c);
char32_t base_letter(char32_t c);

GaelicWord normalize_accents(const GaelicWord& word, AccentMode mode);
std::string normalize_accents(std::string_view text, AccentMode mode);

/// Class of the rightmost vowel. Throws Error(NoVowel).
VowelClass last_vowel_class(const GaelicWord& word);

/// Initial lenition: inserts h after a lenitable initial consonant.
GaelicWord lenite(const GaelicWord& word);

/// The dh' / lenition mutation of past and conditional independent forms.
GaelicWord glottal_past_prefix(const GaelicWord& word);

/// Removes one leading t-, n-, h- or dh' prefix.
GaelicWord strip_prothesis(const GaelicWord& word);

/// Makes the final vowel group slender (fear -> fir, saoghal -> saoghail).
/// Throws Error(NotSlenderizable) for unattested vowel groups, vowel-final
/// words and vowel-less words.
GaelicWord slenderize(const GaelicWord& word);

/// Appends the alternant that agrees with the stem's last vowel.
GaelicWord attach_suffix(const GaelicWord& stem, const SuffixAlternation& alt);

/// Broad-to-broad, slender-to-slender: for every consonant run with vowels
/// on both sides, the last vowel before and the first vowel after share a
/// class. Apostrophes, hyphens and spaces separate independent segments.
bool satisfies_vowel_harmony(const GaelicWord& word);

}  // namespace gaelic
