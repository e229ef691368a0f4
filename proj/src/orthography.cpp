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

#include "gaelic/orthography.hpp"

#include <algorithm>

#include "gaelic/error.hpp"
#include "gaelic/text.hpp"

namespace gaelic {

namespace {

struct AccentedVowel {
  char32_t grave;
  char32_t acute;
  char32_t plain;
};

constexpr AccentedVowel kAccented[] = {
    {U'à', U'á', U'a'}, {U'è', U'é', U'e'}, {U'ì', U'í', U'i'}, {U'ò', U'ó', U'o'},
    {U'ù', U'ú', U'u'}, {U'À', U'Á', U'A'}, {U'È', U'É', U'E'}, {U'Ì', U'Í', U'I'},
    {U'Ò', U'Ó', U'O'}, {U'Ù', U'Ú', U'U'},
};

constexpr std::u32string_view kNativeLetters = U"abcdefghilmnoprstu";

char32_t ascii_lower(char32_t c) { return (c >= U'A' && c <= U'Z') ? c + 32 : c; }

bool is_ascii_letter(char32_t c) { return (c >= U'a' && c <= U'z') || (c >= U'A' && c <= U'Z'); }

bool is_accented_vowel(char32_t c) {
  return std::any_of(std::begin(kAccented), std::end(kAccented),
                     [c](const AccentedVowel& v) { return v.grave == c || v.acute == c; });
}

bool is_word_char(char32_t c) {
  return is_ascii_letter(c) || is_accented_vowel(c) || c == U'\'' || c == U'-' || c == U' ';
}

char32_t lower_base(char32_t c) { return ascii_lower(base_letter(c)); }

bool is_separator(char32_t c) { return c == U'\'' || c == U'-' || c == U' '; }

}  // namespace

GaelicWord GaelicWord::from(std::string_view text) {
  std::string composed = text::nfc(text);
  if (composed.empty()) throw Error(ErrorKind::InvalidWord, "empty word");
  for (char32_t c : text::to_u32(composed)) {
    if (!is_word_char(c))
      throw Error(ErrorKind::InvalidWord, "character not allowed in a word: \"" + composed + "\"");
  }
  return GaelicWord(std::move(composed));
}

std::optional<GaelicWord> GaelicWord::try_from(std::string_view text) {
  try {
    return from(text);
  } catch (const Error&) {
    return std::nullopt;
  }
}

GaelicWord GaelicWord::from_chars(std::u32string_view chars) { return from(text::to_utf8(chars)); }

std::u32string GaelicWord::chars() const { return text::to_u32(text_); }

std::size_t GaelicWord::length() const { return text::char_length(text_); }

bool GaelicWord::is_native_spelling() const {
  for (char32_t c : chars()) {
    if (is_separator(c)) continue;
    if (kNativeLetters.find(lower_base(c)) == std::u32string_view::npos) return false;
  }
  return true;
}

char32_t base_letter(char32_t c) {
  for (const auto& v : kAccented)
    if (v.grave == c || v.acute == c) return v.plain;
  return c;
}

std::optional<VowelClass> vowel_class(char32_t c) {
  switch (lower_base(c)) {
    case U'a':
    case U'o':
    case U'u':
      return VowelClass::Broad;
    case U'e':
    case U'i':
      return VowelClass::Slender;
    default:
      return std::nullopt;
  }
}

bool is_vowel(char32_t c) { return vowel_class(c).has_value(); }

std::string normalize_accents(std::string_view input, AccentMode mode) {
  if (mode == AccentMode::None) return std::string(input);
  std::u32string chars = text::to_u32(input);
  for (char32_t& c : chars) {
    for (const auto& v : kAccented) {
      if (mode == AccentMode::FoldAcuteToGrave && c == v.acute) c = v.grave;
      if (mode == AccentMode::StripAll && (c == v.acute || c == v.grave)) c = v.plain;
    }
  }
  return text::to_utf8(chars);
}

GaelicWord normalize_accents(const GaelicWord& word, AccentMode mode) {
  return GaelicWord::from(normalize_accents(word.str(), mode));
}

VowelClass last_vowel_class(const GaelicWord& word) {
  const std::u32string chars = word.chars();
  for (auto it = chars.rbegin(); it != chars.rend(); ++it)
    if (auto cls = vowel_class(*it)) return *cls;
  throw Error(ErrorKind::NoVowel, "no vowel in \"" + word.str() + "\"");
}

GaelicWord lenite(const GaelicWord& word) {
  std::u32string chars = word.chars();
  constexpr std::u32string_view kLenitable = U"bcdfgmpst";
  const char32_t first = ascii_lower(chars[0]);
  if (kLenitable.find(first) == std::u32string_view::npos) return word;
  if (chars.size() >= 2 && ascii_lower(chars[1]) == U'h') return word;
  if (first == U's') {
    // sg, sm, sp, st and a bare s do not lenite.
    if (chars.size() < 2) return word;
    const char32_t next = ascii_lower(chars[1]);
    if (!is_vowel(next) && next != U'l' && next != U'n' && next != U'r') return word;
  }
  chars.insert(chars.begin() + 1, U'h');
  return GaelicWord::from_chars(chars);
}

GaelicWord glottal_past_prefix(const GaelicWord& word) {
  const std::u32string chars = word.chars();
  if (is_vowel(chars[0])) return GaelicWord::from("dh'" + word.str());
  if (ascii_lower(chars[0]) == U'f' && chars.size() >= 2 && is_vowel(chars[1]))
    return GaelicWord::from("dh'" + lenite(word).str());
  return lenite(word);
}

GaelicWord strip_prothesis(const GaelicWord& word) {
  const std::u32string chars = word.chars();
  for (std::u32string_view prefix : {U"t-", U"n-", U"h-", U"dh'"}) {
    if (chars.size() <= prefix.size()) continue;
    bool match = true;
    for (std::size_t i = 0; i < prefix.size(); ++i)
      if (ascii_lower(chars[i]) != prefix[i]) match = false;
    if (match) return GaelicWord::from_chars(std::u32string_view(chars).substr(prefix.size()));
  }
  return word;
}

GaelicWord slenderize(const GaelicWord& word) {
  std::u32string chars = word.chars();
  std::size_t last = chars.size();
  for (std::size_t i = chars.size(); i-- > 0;) {
    if (is_vowel(chars[i])) {
      last = i;
      break;
    }
  }
  if (last == chars.size())
    throw Error(ErrorKind::NotSlenderizable, "no vowel in \"" + word.str() + "\"");
  if (last + 1 == chars.size())
    throw Error(ErrorKind::NotSlenderizable, "\"" + word.str() + "\" ends in a vowel");

  std::size_t first = last;
  while (first > 0 && is_vowel(chars[first - 1])) --first;
  std::u32string group;
  for (std::size_t i = first; i <= last; ++i) group.push_back(lower_base(chars[i]));

  if (group.back() == U'i') return word;
  if (group == U"ea") {
    chars.replace(first, 2, 1, chars[first] == U'E' ? U'I' : U'i');
    return GaelicWord::from_chars(chars);
  }
  const bool all_broad = std::all_of(group.begin(), group.end(), [](char32_t c) {
    return vowel_class(c) == VowelClass::Broad;
  });
  if (!all_broad)
    throw Error(ErrorKind::NotSlenderizable,
                "no slender form for the vowel group of \"" + word.str() + "\"");
  // follow the case of the consonant after the group: CAT -> CAIT, Ad -> Aid
  const bool upper = chars[last + 1] >= U'A' && chars[last + 1] <= U'Z';
  chars.insert(chars.begin() + static_cast<std::ptrdiff_t>(last) + 1, upper ? U'I' : U'i');
  return GaelicWord::from_chars(chars);
}

GaelicWord attach_suffix(const GaelicWord& stem, const SuffixAlternation& alt) {
  const auto& suffix = last_vowel_class(stem) == VowelClass::Broad ? alt.broad : alt.slender;
  const std::u32string head = stem.chars();
  std::u32string tail = suffix.chars();
  // bile + ean -> bilean: a vowel-final stem absorbs a repeated suffix vowel
  if (is_vowel(head.back()) && tail.size() > 1 &&
      lower_base(head.back()) == lower_base(tail.front()))
    tail.erase(0, 1);
  return GaelicWord::from_chars(head + tail);
}

bool satisfies_vowel_harmony(const GaelicWord& word) {
  std::optional<VowelClass> previous;  // last vowel before the current consonant run
  bool in_consonants = false;
  for (char32_t c : word.chars()) {
    if (is_separator(c)) {
      previous.reset();
      in_consonants = false;
      continue;
    }
    if (auto cls = vowel_class(c)) {
      if (in_consonants && previous && *previous != *cls) return false;
      // Only the first vowel after a consonant run is compared; the rest of
      // the group just updates the left-hand class for the next run.
      previous = cls;
      in_consonants = false;
    } else {
      in_consonants = previous.has_value();
    }
  }
  return true;
}

}  // namespace gaelic
