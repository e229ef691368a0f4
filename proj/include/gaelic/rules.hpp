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
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gaelic/error.hpp"
#include "gaelic/orthography.hpp"
#include "gaelic/svf.hpp"

namespace gaelic {

/// Grammatical forms. Noun codes are case + number (DP = dative plural).
enum class FormCode {
  // nouns
  NS, NP, GS, GP, DS, DP, VS, VP,
  // verbs
  VN, PASTP, PAST_IND, PAST_DEP, FUT_IND, FUT_DEP, RELFUT,
  COND1S_IND, COND1P_IND, COND23_IND, COND1S_DEP, COND1P_DEP, COND23_DEP,
  PAST_PASS, FUT_PASS, COND_PASS, RELFUT_PASS, IMP_PASS,
  IMP1S, IMP2S, IMP3S, IMP1P, IMP2P, IMP3P,
  // adjectives
  POS_ADJ, CP, POS_LENITED,
};

std::string_view to_string(FormCode code);
std::optional<FormCode> parse_form_code(std::string_view token);
PartOfSpeech pos_of(FormCode code);
/// Every form of a part of speech, in declaration order.
std::span<const FormCode> form_codes(PartOfSpeech pos);
/// The form a lemma stands for: NS, IMP2S or POS_ADJ.
FormCode citation_form(PartOfSpeech pos);

struct Matcher {
  PartOfSpeech pos;
  std::optional<Gender> gender;
  std::optional<bool> irregular;
  std::optional<GaelicWord> lemma_is;

  bool matches(const Entry& entry) const;
};

enum class Transform { Lenite, GlottalPast, Slenderize };

enum class Source { Lemma, NP, GS, VN, CP };

/// One way of producing a surface form: transforms (outermost first) over
/// a principal part, optionally with a harmony suffix attached first.
struct Expression {
  std::vector<Transform> transforms;
  Source source;
  std::optional<SuffixAlternation> suffix;
};

struct Derivation {
  FormCode target;
  std::vector<Expression> variants;
};

struct Rule {
  Matcher matcher;
  std::vector<Derivation> derivations;
  std::size_t line = 0;  // header line in the rule file

  const Derivation* find(FormCode target) const;
};

/// Ordered rules; the first eligible rule that defines a form wins.
struct RuleSet {
  std::vector<Rule> rules;
};

/// Throws Error(SyntaxError | UnknownFormCode | TransformOnEmptySource),
/// each carrying the offending line number.
RuleSet parse_rules(std::string_view text);

/// The rule file compiled into the library (data/rules.grl).
std::string_view default_rules_text();
const RuleSet& default_rules();

/// Surface variants of one form. Empty when the source part is marked
/// non-existent. Throws Error(InvalidFormForPos | NoRuleMatches |
/// MissingPrincipalPart | IrregularUnsupported), or a transform error.
std::vector<GaelicWord> inflect(const Entry& entry, FormCode form, const RuleSet& rules);

struct Cell {
  std::vector<GaelicWord> forms;
  std::optional<Error> error;
};

using Paradigm = std::map<FormCode, Cell>;

/// All eight noun cells; failures are recorded per cell.
Paradigm decline(const Entry& entry, const RuleSet& rules);

/// Every verb cell. Throws Error(IrregularUnsupported) for an irregular
/// verb that no LEMMA= or IRREG rule covers.
Paradigm conjugate(const Entry& entry, const RuleSet& rules);

/// decline, conjugate or the adjective forms, by part of speech.
Paradigm paradigm(const Entry& entry, const RuleSet& rules);

struct SurfaceAnalysis {
  GaelicWord form;
  FormCode code;
  bool lenited_allomorph = false;  // e.g. shaoghal, NS after mo
};

/// Every (surface form, grammatical form) pair an entry can produce: the
/// lemma, each derivable variant and, for nouns, the lenited lemma.
/// Derivation failures are skipped, and reported through `failures` when
/// it is given.
std::vector<SurfaceAnalysis> surface_analyses(const Entry& entry, const RuleSet& rules,
                                              std::vector<std::pair<FormCode, Error>>* failures = nullptr);

std::set<GaelicWord> all_surface_forms(const Entry& entry, const RuleSet& rules);

}  // namespace gaelic
