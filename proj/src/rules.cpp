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

#include "gaelic/rules.hpp"

#include <algorithm>
#include <array>

namespace gaelic {

namespace {

struct FormInfo {
  FormCode code;
  std::string_view name;
  PartOfSpeech pos;
};

constexpr std::array<FormInfo, 35> kForms = {{
    {FormCode::NS, "NS", PartOfSpeech::Noun},
    {FormCode::NP, "NP", PartOfSpeech::Noun},
    {FormCode::GS, "GS", PartOfSpeech::Noun},
    {FormCode::GP, "GP", PartOfSpeech::Noun},
    {FormCode::DS, "DS", PartOfSpeech::Noun},
    {FormCode::DP, "DP", PartOfSpeech::Noun},
    {FormCode::VS, "VS", PartOfSpeech::Noun},
    {FormCode::VP, "VP", PartOfSpeech::Noun},
    {FormCode::VN, "VN", PartOfSpeech::Verb},
    {FormCode::PASTP, "PASTP", PartOfSpeech::Verb},
    {FormCode::PAST_IND, "PAST_IND", PartOfSpeech::Verb},
    {FormCode::PAST_DEP, "PAST_DEP", PartOfSpeech::Verb},
    {FormCode::FUT_IND, "FUT_IND", PartOfSpeech::Verb},
    {FormCode::FUT_DEP, "FUT_DEP", PartOfSpeech::Verb},
    {FormCode::RELFUT, "RELFUT", PartOfSpeech::Verb},
    {FormCode::COND1S_IND, "COND1S_IND", PartOfSpeech::Verb},
    {FormCode::COND1P_IND, "COND1P_IND", PartOfSpeech::Verb},
    {FormCode::COND23_IND, "COND23_IND", PartOfSpeech::Verb},
    {FormCode::COND1S_DEP, "COND1S_DEP", PartOfSpeech::Verb},
    {FormCode::COND1P_DEP, "COND1P_DEP", PartOfSpeech::Verb},
    {FormCode::COND23_DEP, "COND23_DEP", PartOfSpeech::Verb},
    {FormCode::PAST_PASS, "PAST_PASS", PartOfSpeech::Verb},
    {FormCode::FUT_PASS, "FUT_PASS", PartOfSpeech::Verb},
    {FormCode::COND_PASS, "COND_PASS", PartOfSpeech::Verb},
    {FormCode::RELFUT_PASS, "RELFUT_PASS", PartOfSpeech::Verb},
    {FormCode::IMP_PASS, "IMP_PASS", PartOfSpeech::Verb},
    {FormCode::IMP1S, "IMP1S", PartOfSpeech::Verb},
    {FormCode::IMP2S, "IMP2S", PartOfSpeech::Verb},
    {FormCode::IMP3S, "IMP3S", PartOfSpeech::Verb},
    {FormCode::IMP1P, "IMP1P", PartOfSpeech::Verb},
    {FormCode::IMP2P, "IMP2P", PartOfSpeech::Verb},
    {FormCode::IMP3P, "IMP3P", PartOfSpeech::Verb},
    {FormCode::POS_ADJ, "POS_ADJ", PartOfSpeech::Adj},
    {FormCode::CP, "CP", PartOfSpeech::Adj},
    {FormCode::POS_LENITED, "POS_LENITED", PartOfSpeech::Adj},
}};

consteval bool forms_in_enum_order() {
  for (std::size_t i = 0; i < kForms.size(); ++i)
    if (static_cast<std::size_t>(kForms[i].code) != i) return false;
  return true;
}
static_assert(forms_in_enum_order());

template <std::size_t N>
consteval std::array<FormCode, N> codes_of(PartOfSpeech pos) {
  std::array<FormCode, N> out{};
  std::size_t i = 0;
  for (const auto& f : kForms)
    if (f.pos == pos) out[i++] = f.code;
  return out;
}

constexpr auto kNounForms = codes_of<8>(PartOfSpeech::Noun);
constexpr auto kVerbForms = codes_of<24>(PartOfSpeech::Verb);
constexpr auto kAdjForms = codes_of<3>(PartOfSpeech::Adj);

const FormInfo& info(FormCode code) { return kForms[static_cast<std::size_t>(code)]; }

}  // namespace

std::string_view to_string(FormCode code) { return info(code).name; }

std::optional<FormCode> parse_form_code(std::string_view token) {
  for (const auto& f : kForms)
    if (f.name == token) return f.code;
  return std::nullopt;
}

PartOfSpeech pos_of(FormCode code) { return info(code).pos; }

std::span<const FormCode> form_codes(PartOfSpeech pos) {
  switch (pos) {
    case PartOfSpeech::Noun: return kNounForms;
    case PartOfSpeech::Verb: return kVerbForms;
    case PartOfSpeech::Adj: return kAdjForms;
  }
  return {};
}

FormCode citation_form(PartOfSpeech pos) {
  switch (pos) {
    case PartOfSpeech::Noun: return FormCode::NS;
    case PartOfSpeech::Verb: return FormCode::IMP2S;
    case PartOfSpeech::Adj: return FormCode::POS_ADJ;
  }
  return FormCode::NS;
}

bool Matcher::matches(const Entry& e) const {
  if (e.pos != pos) return false;
  if (gender && e.gender != gender) return false;
  if (irregular && e.irregular != *irregular) return false;
  if (lemma_is && e.lemma != *lemma_is) return false;
  return true;
}

const Derivation* Rule::find(FormCode target) const {
  for (const auto& d : derivations)
    if (d.target == target) return &d;
  return nullptr;
}

// ---------------------------------------------------------------------------
// Rule file parsing

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

// Splits on `sep` outside double quotes.
std::vector<std::string_view> split_unquoted(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  bool quoted = false;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '"') quoted = !quoted;
    if (s[i] == sep && !quoted) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(s.substr(start));
  return parts;
}

std::string_view strip_comment(std::string_view line) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') quoted = !quoted;
    if (line[i] == '#' && !quoted) return line.substr(0, i);
  }
  return line;
}

std::string upper_ascii(std::string_view s) {
  std::string out(s);
  for (char& c : out)
    if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 32);
  return out;
}

class RuleParser {
 public:
  explicit RuleParser(std::size_t line) : line_(line) {}

  [[noreturn]] void fail(ErrorKind kind, const std::string& message) const {
    throw Error(kind, message, line_);
  }

  Matcher header(std::string_view text) {
    std::optional<PartOfSpeech> pos;
    Matcher m{PartOfSpeech::Noun};
    for (std::string_view raw : split_unquoted(text, '&')) {
      const std::string_view pred = trim(raw);
      if (pred.empty()) fail(ErrorKind::SyntaxError, "empty predicate in rule header");
      if (auto p = parse_pos(pred)) {
        if (pos) fail(ErrorKind::SyntaxError, "rule header names two parts of speech");
        pos = p;
      } else if (pred == "M" || pred == "F") {
        if (m.gender) fail(ErrorKind::SyntaxError, "rule header names two genders");
        m.gender = pred == "M" ? Gender::M : Gender::F;
      } else if (pred == "IRREG") {
        m.irregular = true;
      } else if (pred.starts_with("LEMMA")) {
        std::string_view rest = trim(pred.substr(5));
        if (!rest.starts_with('=')) fail(ErrorKind::SyntaxError, "expected LEMMA=\"word\"");
        rest = trim(rest.substr(1));
        if (rest.size() < 2 || rest.front() != '"' || rest.back() != '"')
          fail(ErrorKind::SyntaxError, "LEMMA= needs a quoted word");
        m.lemma_is = word(rest.substr(1, rest.size() - 2));
      } else {
        fail(ErrorKind::SyntaxError, "unknown predicate " + std::string(pred));
      }
    }
    if (!pos) fail(ErrorKind::SyntaxError, "rule header needs NOUN, VERB or ADJ");
    if (m.gender && *pos != PartOfSpeech::Noun)
      fail(ErrorKind::SyntaxError, "gender predicates apply to nouns only");
    m.pos = *pos;
    return m;
  }

  void body(std::string_view text, Rule& rule) {
    for (std::string_view raw : split_unquoted(text, ';')) {
      const std::string_view pair = trim(raw);
      if (pair.empty()) continue;
      const std::size_t colon = pair.find(':');
      if (colon == std::string_view::npos)
        fail(ErrorKind::SyntaxError, "expected TARGET: expression in \"" + std::string(pair) + "\"");
      const std::string_view target_name = trim(pair.substr(0, colon));
      const auto target = parse_form_code(target_name);
      if (!target) fail(ErrorKind::UnknownFormCode, "unknown form code " + std::string(target_name));
      if (pos_of(*target) != rule.matcher.pos)
        fail(ErrorKind::SyntaxError, std::string(target_name) + " is not a " +
                                         std::string(to_string(rule.matcher.pos)) + " form");
      if (rule.find(*target))
        fail(ErrorKind::SyntaxError, std::string(target_name) + " defined twice in one rule");

      Derivation d{*target, {}};
      for (std::string_view variant : split_unquoted(pair.substr(colon + 1), '|'))
        d.variants.push_back(expression(trim(variant), rule.matcher.pos));
      rule.derivations.push_back(std::move(d));
    }
  }

 private:
  GaelicWord word(std::string_view text) const {
    try {
      return GaelicWord::from(text);
    } catch (const Error& e) {
      fail(ErrorKind::SyntaxError, e.what());
    }
  }

  Expression expression(std::string_view text, PartOfSpeech pos) const {
    if (text.empty()) fail(ErrorKind::SyntaxError, "empty expression");
    std::vector<std::string_view> parts = split_unquoted(text, '/');
    const std::string_view source_text = trim(parts.back());
    parts.pop_back();

    Expression expr{{}, Source::Lemma, std::nullopt};
    for (std::string_view t : parts) {
      const std::string name = upper_ascii(trim(t));
      if (name == "H") expr.transforms.push_back(Transform::Lenite);
      else if (name == "DH") expr.transforms.push_back(Transform::GlottalPast);
      else if (name == "SL") expr.transforms.push_back(Transform::Slenderize);
      else fail(ErrorKind::SyntaxError, "unknown transform " + std::string(trim(t)));
    }
    if (source_text.empty()) {
      if (!expr.transforms.empty())
        fail(ErrorKind::TransformOnEmptySource, "transform applied to nothing in \"" +
                                                    std::string(text) + "\"");
      fail(ErrorKind::SyntaxError, "empty expression");
    }

    std::string_view name = source_text;
    if (const std::size_t plus = source_text.find('+'); plus != std::string_view::npos) {
      name = trim(source_text.substr(0, plus));
      expr.suffix = suffix(trim(source_text.substr(plus + 1)));
    }
    if (name.empty()) fail(ErrorKind::TransformOnEmptySource, "suffix attached to nothing");
    expr.source = source(name, pos);
    return expr;
  }

  SuffixAlternation suffix(std::string_view text) const {
    if (text.size() < 2 || text.front() != '"' || text.back() != '"')
      fail(ErrorKind::SyntaxError, "suffix must be a quoted \"broad|slender\" pair");
    const std::string_view body = text.substr(1, text.size() - 2);
    const std::size_t bar = body.find('|');
    if (bar == std::string_view::npos) {
      const GaelicWord w = word(body);
      return {w, w};
    }
    return {word(body.substr(0, bar)), word(body.substr(bar + 1))};
  }

  Source source(std::string_view name, PartOfSpeech pos) const {
    auto require = [&](PartOfSpeech owner, Source s) {
      if (pos != owner)
        fail(ErrorKind::SyntaxError, std::string(name) + " is not a principal part of " +
                                         std::string(to_string(pos)));
      return s;
    };
    if (name == "LEMMA" || name == "NS") return Source::Lemma;
    if (name == "NP") return require(PartOfSpeech::Noun, Source::NP);
    if (name == "GS") return require(PartOfSpeech::Noun, Source::GS);
    if (name == "VN") return require(PartOfSpeech::Verb, Source::VN);
    if (name == "CP") return require(PartOfSpeech::Adj, Source::CP);
    fail(ErrorKind::SyntaxError, std::string(name) + " is not a principal part");
  }

  std::size_t line_;
};

}  // namespace

RuleSet parse_rules(std::string_view text) {
  RuleSet set;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    const std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    const std::string_view line = trim(strip_comment(raw));
    if (line.empty()) continue;
    RuleParser parser(line_no);
    if (line.front() == '*') {
      set.rules.push_back(Rule{parser.header(line.substr(1)), {}, line_no});
    } else {
      if (set.rules.empty()) parser.fail(ErrorKind::SyntaxError, "form definitions before any rule header");
      parser.body(line, set.rules.back());
    }
  }
  return set;
}

const RuleSet& default_rules() {
  static const RuleSet rules = parse_rules(default_rules_text());
  return rules;
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

// Irregular entries are only served by rules written for them.
bool eligible(const Rule& rule, const Entry& e) {
  if (!rule.matcher.matches(e)) return false;
  if (e.irregular) return rule.matcher.lemma_is.has_value() || rule.matcher.irregular == true;
  return true;
}

bool has_irregular_rule(const Entry& e, const RuleSet& rules) {
  return std::any_of(rules.rules.begin(), rules.rules.end(),
                     [&](const Rule& r) { return eligible(r, e); });
}

std::optional<GaelicWord> resolve(const Entry& e, Source source) {
  std::optional<PrincipalPart> part;
  switch (source) {
    case Source::Lemma: return e.lemma;
    case Source::NP: part = PrincipalPart::NP; break;
    case Source::GS: part = PrincipalPart::GS; break;
    case Source::VN: part = PrincipalPart::VN; break;
    case Source::CP: part = PrincipalPart::CP; break;
  }
  const auto& value = e.part(*part);
  if (!value || value->state() == PartValue::State::Unknown)
    throw Error(ErrorKind::MissingPrincipalPart,
                std::string(to_string(*part)) + " of \"" + e.lemma.str() + "\" is not known");
  if (value->state() == PartValue::State::NonExistent) return std::nullopt;
  return value->word();
}

GaelicWord apply(Transform t, const GaelicWord& w) {
  switch (t) {
    case Transform::Lenite: return lenite(w);
    case Transform::GlottalPast: return glottal_past_prefix(w);
    case Transform::Slenderize: return slenderize(w);
  }
  return w;
}

}  // namespace

std::vector<GaelicWord> inflect(const Entry& e, FormCode form, const RuleSet& rules) {
  if (pos_of(form) != e.pos)
    throw Error(ErrorKind::InvalidFormForPos, std::string(to_string(form)) + " is not a " +
                                                  std::string(to_string(e.pos)) + " form");
  const Derivation* derivation = nullptr;
  for (const Rule& rule : rules.rules) {
    if (!eligible(rule, e)) continue;
    if ((derivation = rule.find(form))) break;
  }
  if (!derivation) {
    if (e.irregular)
      throw Error(ErrorKind::IrregularUnsupported,
                  "\"" + e.lemma.str() + "\" is irregular and no rule covers " +
                      std::string(to_string(form)));
    throw Error(ErrorKind::NoRuleMatches,
                "no rule defines " + std::string(to_string(form)) + " for \"" + e.lemma.str() + "\"");
  }

  std::vector<GaelicWord> out;
  for (const Expression& expr : derivation->variants) {
    std::optional<GaelicWord> w = resolve(e, expr.source);
    if (!w) continue;
    if (expr.suffix) w = attach_suffix(*w, *expr.suffix);
    for (auto t = expr.transforms.rbegin(); t != expr.transforms.rend(); ++t) w = apply(*t, *w);
    if (std::find(out.begin(), out.end(), *w) == out.end()) out.push_back(std::move(*w));
  }
  return out;
}

namespace {

Paradigm cells(const Entry& e, const RuleSet& rules) {
  Paradigm out;
  for (FormCode code : form_codes(e.pos)) {
    Cell cell;
    try {
      cell.forms = inflect(e, code, rules);
    } catch (const Error& err) {
      cell.error = err;
    }
    out.emplace(code, std::move(cell));
  }
  return out;
}

void require_pos(const Entry& e, PartOfSpeech pos, std::string_view what) {
  if (e.pos != pos)
    throw Error(ErrorKind::InvalidFormForPos, std::string(what) + " needs a " +
                                                  std::string(to_string(pos)) + ", \"" +
                                                  e.lemma.str() + "\" is a " +
                                                  std::string(to_string(e.pos)));
}

}  // namespace

Paradigm decline(const Entry& e, const RuleSet& rules) {
  require_pos(e, PartOfSpeech::Noun, "decline");
  return cells(e, rules);
}

Paradigm conjugate(const Entry& e, const RuleSet& rules) {
  require_pos(e, PartOfSpeech::Verb, "conjugate");
  if (e.irregular && !has_irregular_rule(e, rules))
    throw Error(ErrorKind::IrregularUnsupported,
                "\"" + e.lemma.str() + "\" is an irregular verb; add a LEMMA= rule for it");
  return cells(e, rules);
}

Paradigm paradigm(const Entry& e, const RuleSet& rules) {
  switch (e.pos) {
    case PartOfSpeech::Noun: return decline(e, rules);
    case PartOfSpeech::Verb: return conjugate(e, rules);
    case PartOfSpeech::Adj: return cells(e, rules);
  }
  return {};
}

std::vector<SurfaceAnalysis> surface_analyses(const Entry& e, const RuleSet& rules,
                                              std::vector<std::pair<FormCode, Error>>* failures) {
  std::vector<SurfaceAnalysis> out;
  out.push_back({e.lemma, citation_form(e.pos), false});
  for (FormCode code : form_codes(e.pos)) {
    try {
      for (GaelicWord& w : inflect(e, code, rules)) out.push_back({std::move(w), code, false});
    } catch (const Error& err) {
      // Best effort: a form that cannot be derived is simply not listed.
      if (failures) failures->emplace_back(code, err);
    }
  }
  if (e.pos == PartOfSpeech::Noun) {
    GaelicWord lenited = lenite(e.lemma);
    if (lenited != e.lemma) out.push_back({std::move(lenited), FormCode::NS, true});
  }
  // The lemma may also be produced by a rule; keep one record per pair.
  std::vector<SurfaceAnalysis> unique;
  for (auto& a : out) {
    const bool seen = std::any_of(unique.begin(), unique.end(), [&](const SurfaceAnalysis& u) {
      return u.form == a.form && u.code == a.code && u.lenited_allomorph == a.lenited_allomorph;
    });
    if (!seen) unique.push_back(std::move(a));
  }
  return unique;
}

std::set<GaelicWord> all_surface_forms(const Entry& e, const RuleSet& rules) {
  std::set<GaelicWord> out;
  for (auto& a : surface_analyses(e, rules)) out.insert(std::move(a.form));
  return out;
}

}  // namespace gaelic
