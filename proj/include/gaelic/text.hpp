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

#include <string>
#include <string_view>

// UTF-8 helpers shared by every module. All text handled by the library is
// UTF-8 in NFC; code-point strings are used wherever single letters matter.
namespace gaelic::text {

// Decodes UTF-8; throws Error(InvalidWord) on malformed input.
std::u32string to_u32(std::string_view utf8);
std::string to_utf8(std::u32string_view chars);

// Canonical composition (NFC). When fold_apostrophes is set, U+2019 and
// U+02BC are rewritten to the typewriter apostrophe.
std::string nfc(std::string_view utf8, bool fold_apostrophes = true);

std::string to_lower(std::string_view utf8);

// Length in code points, not bytes.
std::size_t char_length(std::string_view utf8);

// Last n code points (the whole string when shorter).
std::string last_chars(std::string_view utf8, std::size_t n);

bool ends_with(std::string_view utf8, std::string_view suffix);

}  // namespace gaelic::text
