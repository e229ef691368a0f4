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

#include "gaelic/svf.hpp"

#include <fstream>
#include <sstream>

namespace gaelic {

std::string_view to_string(PartOfSpeech pos) {
  switch (pos) {
    case PartOfSpeech::Noun: return "NOUN";
    case PartOfSpeech::Verb: return "VERB";
    case PartOfSpeech::Adj: return "ADJ";
  }
  return "?";
}

std::string_view to_string(Gender gender) { return gender == Gender::M ? "M" : "F"; }

std::string_view to_string(PrincipalPart part) {
  switch (part) {
    case PrincipalPart::NP: return "NP";
    case PrincipalPart::GS: return "GS";
    case PrincipalPart::VN: return "VN";
    case PrincipalPart::CP: return "CP";
  }
  return "?";
}

std::optional<PartOfSpeech> parse_pos(std::string_view token) {
  if (token == "NOUN") return PartOfSpeech::Noun;
  if (token == "VERB") return PartOfSpeech::Verb;
  if (token == "ADJ") return PartOfSpeech::Adj;
  return std::nullopt;
}

std::optional<PrincipalPart> parse_principal_part(std::string_view token) {
  if (token == "NP") return PrincipalPart::NP;
  if (token == "GS") return PrincipalPart::GS;
  if (token == "VN") return PrincipalPart::VN;
  if (token == "CP") return PrincipalPart::CP;
  return std::nullopt;
}

const std::optional<PartValue>& Entry::part(PrincipalPart which) const {
  switch (which) {
    case PrincipalPart::NP: return np;
    case PrincipalPart::GS: return gs;
    case PrincipalPart::VN: return vn;
    case PrincipalPart::CP: return cp;
  }
  return np;
}

std::vector<Violation> constraint_violations(const Entry& e) {
  std::vector<Violation> out;
  if (e.pos != PartOfSpeech::Noun) {
    if (e.gender) out.push_back({"GR", std::string(kNounClause)});
    if (e.np) out.push_back({"NP", std::string(kNounClause)});
    if (e.gs) out.push_back({"GS", std::string(kNounClause)});
  }
  if (e.vn && e.pos != PartOfSpeech::Verb) out.push_back({"VN", std::string(kVerbClause)});
  if (e.cp && e.pos != PartOfSpeech::Adj) out.push_back({"CP", std::string(kAdjClause)});
  return out;
}

std::vector<Violation> validate(const Entry& e) {
  std::vector<Violation> out = constraint_violations(e);
  switch (e.pos) {
    case PartOfSpeech::Noun:
      if (!e.gender) out.push_back({"GR", std::string(kMandatoryForNoun)});
      if (!e.np) out.push_back({"NP", std::string(kMandatoryForNoun)});
      if (!e.gs) out.push_back({"GS", std::string(kMandatoryForNoun)});
      break;
    case PartOfSpeech::Verb:
      if (!e.vn) out.push_back({"VN", std::string(kMandatoryForVerb)});
      break;
    case PartOfSpeech::Adj:
      if (!e.cp) out.push_back({"CP", std::string(kMandatoryForAdj)});
      break;
  }
  return out;
}

namespace {

struct Token {
  std::string text;
  bool quoted = false;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t') {
      ++i;
      continue;
    }
    if (line[i] == '"') {
      const std::size_t close = line.find('"', i + 1);
      if (close == std::string_view::npos) throw Error(ErrorKind::SyntaxError, "unterminated quote");
      if (close + 1 < line.size() && line[close + 1] != ' ' && line[close + 1] != '\t')
        throw Error(ErrorKind::SyntaxError, "missing space after quoted field");
      tokens.push_back({std::string(line.substr(i + 1, close - i - 1)), true});
      i = close + 1;
      continue;
    }
    std::size_t end = i;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
    std::string_view bare = line.substr(i, end - i);
    if (bare.find('"') != std::string_view::npos)
      throw Error(ErrorKind::SyntaxError, "stray quote in \"" + std::string(bare) + "\"");
    tokens.push_back({std::string(bare), false});
    i = end;
  }
  return tokens;
}

GaelicWord quoted_word(const Token& token) {
  try {
    return GaelicWord::from(token.text);
  } catch (const Error& e) {
    throw Error(ErrorKind::SyntaxError, e.what());
  }
}

// Markers may also appear quoted ("?"), as in some published files.
PartValue part_value(const Token& token) {
  if (token.text == "?") return PartValue::unknown();
  if (token.text == "-") return PartValue::non_existent();
  if (token.quoted) return PartValue::present(quoted_word(token));
  throw Error(ErrorKind::SyntaxError, "expected a quoted word, ? or -, got " + token.text);
}

std::string part_token(const PartValue& value) {
  switch (value.state()) {
    case PartValue::State::Present: return "\"" + value.word().str() + "\"";
    case PartValue::State::Unknown: return "?";
    case PartValue::State::NonExistent: return "-";
  }
  return "?";
}

}  // namespace

Entry parse_svf_line(std::string_view line) {
  while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
  const std::vector<Token> tokens = tokenize(line);
  if (tokens.empty()) throw Error(ErrorKind::SyntaxError, "empty record");

  std::size_t i = 0;
  const auto pos = tokens[i].quoted ? std::nullopt : parse_pos(tokens[i].text);
  if (!pos) throw Error(ErrorKind::SyntaxError, "expected NOUN, VERB or ADJ, got " + tokens[0].text);
  ++i;

  std::optional<Gender> gender;
  if (i < tokens.size() && !tokens[i].quoted) {
    if (tokens[i].text == "M") gender = Gender::M;
    if (tokens[i].text == "F") gender = Gender::F;
    if (gender) ++i;
  }
  if (i >= tokens.size() || !tokens[i].quoted)
    throw Error(ErrorKind::SyntaxError, "expected a quoted lemma");
  Entry entry{quoted_word(tokens[i++]), *pos};
  entry.gender = gender;

  std::vector<PartValue> values;
  while (i < tokens.size()) {
    if (!tokens[i].quoted && tokens[i].text == "IRREG") {
      if (i + 1 != tokens.size()) throw Error(ErrorKind::SyntaxError, "IRREG must be the last token");
      entry.irregular = true;
      break;
    }
    values.push_back(part_value(tokens[i++]));
  }

  const std::size_t expected = *pos == PartOfSpeech::Noun ? 2 : 1;
  if (values.size() != expected)
    throw Error(ErrorKind::SyntaxError, std::string(to_string(*pos)) + " takes " +
                                            std::to_string(expected) + " principal part(s), got " +
                                            std::to_string(values.size()));
  switch (*pos) {
    case PartOfSpeech::Noun:
      entry.np = values[0];
      entry.gs = values[1];
      break;
    case PartOfSpeech::Verb:
      entry.vn = values[0];
      break;
    case PartOfSpeech::Adj:
      entry.cp = values[0];
      break;
  }

  if (const auto violations = validate(entry); !violations.empty()) {
    std::string message;
    for (const auto& v : violations) {
      if (!message.empty()) message += "; ";
      message += v.field + " violates " + v.clause;
    }
    throw Error(ErrorKind::ConstraintViolation, message);
  }
  return entry;
}

std::string serialize_entry(const Entry& e) {
  std::string out(to_string(e.pos));
  if (e.gender) out += " " + std::string(to_string(*e.gender));
  out += " \"" + e.lemma.str() + "\"";
  for (const auto* part : {&e.np, &e.gs, &e.vn, &e.cp})
    if (*part) out += " " + part_token(**part);
  if (e.irregular) out += " IRREG";
  return out;
}

VocabularyFile parse_vocabulary(std::string_view text) {
  VocabularyFile result;
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    std::string_view trimmed = line;
    while (!trimmed.empty() && (trimmed.front() == ' ' || trimmed.front() == '\t'))
      trimmed.remove_prefix(1);
    while (!trimmed.empty() && (trimmed.back() == '\r' || trimmed.back() == ' ' ||
                                trimmed.back() == '\t'))
      trimmed.remove_suffix(1);
    if (trimmed.empty() || trimmed.front() == '#') {
      ++result.skipped_lines;
      continue;
    }
    try {
      result.entries.push_back(parse_svf_line(trimmed));
    } catch (const Error& e) {
      result.errors.push_back({line_no, e.kind(), e.detail()});
    }
  }
  result.total_lines = line_no;
  return result;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(ErrorKind::IoError, "cannot read " + path.string());
  return buffer.str();
}

VocabularyFile load_vocabulary_file(const std::filesystem::path& path) {
  return parse_vocabulary(read_file(path));
}

}  // namespace gaelic
