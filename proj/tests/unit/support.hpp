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

#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "gaelic/orthography.hpp"
#include "gaelic/rules.hpp"
#include "gaelic/svf.hpp"

namespace testing {

inline gaelic::GaelicWord W(std::string_view s) { return gaelic::GaelicWord::from(s); }

inline gaelic::Entry E(std::string_view svf_line) { return gaelic::parse_svf_line(svf_line); }

inline std::vector<std::string> strs(const std::vector<gaelic::GaelicWord>& words) {
  std::vector<std::string> out;
  for (const auto& w : words) out.push_back(w.str());
  return out;
}

inline std::string fixture(std::string_view rel) { return std::string(GAELIC_FIXTURE_DIR) + "/" + std::string(rel); }

// Minimal UTF-8 decoder, kept apart from the library so oracles stay
// independent of it. Input is assumed well formed.
inline std::u32string decode(std::string_view s) {
  std::u32string out;
  for (std::size_t i = 0; i < s.size();) {
    unsigned char c = s[i];
    int n = c < 0x80 ? 1 : c < 0xE0 ? 2 : c < 0xF0 ? 3 : 4;
    char32_t cp = n == 1 ? c : c & (0x7F >> n);
    for (int k = 1; k < n; ++k) cp = (cp << 6) | (s[i + k] & 0x3F);
    out.push_back(cp);
    i += n;
  }
  return out;
}

inline std::string encode(std::u32string_view s) {
  std::string out;
  for (char32_t c : s) {
    if (c < 0x80) {
      out += char(c);
    } else if (c < 0x800) {
      out += char(0xC0 | (c >> 6));
      out += char(0x80 | (c & 0x3F));
    } else {
      out += char(0xE0 | (c >> 12));
      out += char(0x80 | ((c >> 6) & 0x3F));
      out += char(0x80 | (c & 0x3F));
    }
  }
  return out;
}

// Random words over the native alphabet, alternating consonant clusters and
// vowel groups.
class WordGen {
 public:
  explicit WordGen(unsigned seed) : rng_(seed) {}

  std::u32string word(bool vowel_final = false) {
    static const std::u32string consonants = U"bcdfghlmnprst";
    static const std::vector<std::u32string> onsets = {U"bh", U"ch", U"sg", U"sm", U"sp", U"st",
                                                       U"sl", U"sn", U"sr", U"fr", U"gl", U"tr"};
    std::u32string w;
    if (pick(4) == 0) {
      w += onsets[pick(onsets.size())];
    } else if (pick(5) != 0) {
      w += consonants[pick(consonants.size())];
    }
    const std::size_t syllables = 1 + pick(3);
    for (std::size_t s = 0; s < syllables; ++s) {
      w += vowel_group();
      if (s + 1 < syllables || !vowel_final) {
        w += consonants[pick(consonants.size())];
        if (pick(3) == 0) w += consonants[pick(consonants.size())];
      }
    }
    if (pick(6) == 0) w[0] = char32_t(w[0] - 32);
    return w;
  }

  std::u32string vowel_group() {
    static const std::vector<std::u32string> groups = {U"a", U"o", U"u", U"e", U"i", U"à", U"ò",
                                                       U"ù", U"è", U"ì", U"ea", U"ai", U"oi",
                                                       U"ao", U"ua", U"io", U"ui", U"ei", U"eu"};
    return groups[pick(groups.size())];
  }

  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  std::mt19937& rng() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace testing

#define CHECK_ERROR_KIND(expr, expected)                   \
  do {                                                     \
    bool thrown_ = false;                                  \
    try {                                                  \
      (void)(expr);                                        \
    } catch (const gaelic::Error& e_) {                    \
      thrown_ = true;                                      \
      CHECK_MESSAGE(e_.kind() == (expected), std::string(e_.what())); \
    }                                                      \
    CHECK_MESSAGE(thrown_, "no gaelic::Error from " #expr); \
  } while (0)
