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

#include "gaelic/text.hpp"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include "gaelic/error.hpp"

namespace gaelic {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidWord: return "InvalidWord";
    case ErrorKind::NoVowel: return "NoVowel";
    case ErrorKind::NotSlenderizable: return "NotSlenderizable";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::ConstraintViolation: return "ConstraintViolation";
    case ErrorKind::UnknownFormCode: return "UnknownFormCode";
    case ErrorKind::TransformOnEmptySource: return "TransformOnEmptySource";
    case ErrorKind::InvalidFormForPos: return "InvalidFormForPos";
    case ErrorKind::NoRuleMatches: return "NoRuleMatches";
    case ErrorKind::MissingPrincipalPart: return "MissingPrincipalPart";
    case ErrorKind::IrregularUnsupported: return "IrregularUnsupported";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::FormatError: return "FormatError";
    case ErrorKind::RangeError: return "RangeError";
    case ErrorKind::LayoutMismatch: return "LayoutMismatch";
  }
  return "Unknown";
}

namespace {

std::string with_line(const std::string& message, std::optional<std::size_t> line) {
  if (!line) return message;
  return "line " + std::to_string(*line) + ": " + message;
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& message, std::optional<std::size_t> line)
    : std::runtime_error(with_line(message, line)), kind_(kind), line_(line), detail_(message) {}

namespace text {

std::u32string to_u32(std::string_view utf8) {
  std::u32string out;
  out.reserve(utf8.size());
  const auto* s = reinterpret_cast<const uint8_t*>(utf8.data());
  const auto length = static_cast<int32_t>(utf8.size());
  int32_t i = 0;
  while (i < length) {
    UChar32 c;
    U8_NEXT(s, i, length, c);
    if (c < 0) throw Error(ErrorKind::InvalidWord, "malformed UTF-8");
    out.push_back(static_cast<char32_t>(c));
  }
  return out;
}

std::string to_utf8(std::u32string_view chars) {
  std::string out;
  out.reserve(chars.size());
  for (char32_t c : chars) {
    uint8_t buf[U8_MAX_LENGTH];
    int32_t n = 0;
    UBool error = false;
    U8_APPEND(buf, n, U8_MAX_LENGTH, static_cast<UChar32>(c), error);
    if (error) throw Error(ErrorKind::InvalidWord, "code point out of range");
    out.append(reinterpret_cast<const char*>(buf), static_cast<std::size_t>(n));
  }
  return out;
}

std::string nfc(std::string_view utf8, bool fold_apostrophes) {
  // Validate first so malformed bytes are an error rather than U+FFFD.
  std::u32string chars = to_u32(utf8);
  if (fold_apostrophes) {
    for (char32_t& c : chars)
      if (c == U'’' || c == U'ʼ') c = U'\'';
  }
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* normalizer = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) throw Error(ErrorKind::InvalidWord, "NFC normalizer unavailable");
  icu::UnicodeString source = icu::UnicodeString::fromUTF32(
      reinterpret_cast<const UChar32*>(chars.data()), static_cast<int32_t>(chars.size()));
  icu::UnicodeString composed = normalizer->normalize(source, status);
  if (U_FAILURE(status)) throw Error(ErrorKind::InvalidWord, "NFC normalization failed");
  std::string out;
  composed.toUTF8String(out);
  return out;
}

std::string to_lower(std::string_view utf8) {
  std::u32string chars = to_u32(utf8);
  for (char32_t& c : chars) c = static_cast<char32_t>(u_tolower(static_cast<UChar32>(c)));
  return to_utf8(chars);
}

std::size_t char_length(std::string_view utf8) {
  std::size_t n = 0;
  for (unsigned char c : utf8)
    if ((c & 0xC0) != 0x80) ++n;
  return n;
}

std::string last_chars(std::string_view utf8, std::size_t n) {
  std::size_t pos = utf8.size();
  while (n > 0 && pos > 0) {
    --pos;
    if ((static_cast<unsigned char>(utf8[pos]) & 0xC0) != 0x80) --n;
  }
  return std::string(utf8.substr(pos));
}

bool ends_with(std::string_view utf8, std::string_view suffix) {
  return utf8.size() >= suffix.size() && utf8.substr(utf8.size() - suffix.size()) == suffix;
}

}  // namespace text
}  // namespace gaelic
