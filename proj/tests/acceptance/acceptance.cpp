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


// Acceptance checks. Prints one line per criterion:
//   PASS|FAIL|SKIP <n> <name> (<elapsed> ms) [detail]
// Exit status is non-zero if any criterion fails.
//
// The published-dataset criterion reads GAELIC_SVF (vocabulary) and
// GAELIC_FREQ (frequency list) and is skipped when either is unset.

#include <sqlite3.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "../../vendor/json.hpp"
#include "gaelic/analysis.hpp"
#include "gaelic/export.hpp"
#include "gaelic/lexicon.hpp"
#include "gaelic/orthography.hpp"
#include "gaelic/rules.hpp"
#include "gaelic/svf.hpp"

using namespace gaelic;

namespace {

constexpr double kRatioTolerance = 1e-12;   // oracle ratios
constexpr double kStopwordTarget = 0.35;
constexpr double kStopwordTolerance = 0.01;

const std::string kFixtures = GAELIC_FIXTURE_DIR;

enum class Outcome { Pass, Fail, Skip };

struct Result {
  Outcome outcome = Outcome::Pass;
  std::string detail;
};

// Collects mismatches instead of stopping at the first.
class Checker {
 public:
  template <class A, class B>
  void eq(const A& actual, const B& expected, const std::string& what) {
    if (!(actual == expected)) {
      std::ostringstream os;
      os << what << ": got " << actual << ", want " << expected;
      fail(os.str());
    }
  }
  void near(double actual, double expected, double tol, const std::string& what) {
    if (!(std::fabs(actual - expected) <= tol)) {
      std::ostringstream os;
      os << what << ": got " << actual << ", want " << expected << " +/- " << tol;
      fail(os.str());
    }
  }
  void ok(bool cond, const std::string& what) {
    if (!cond) fail(what);
  }
  void fail(const std::string& what) {
    ++failures_;
    if (first_.empty()) first_ = what;
  }
  Result result() const {
    if (failures_ == 0) return {};
    return {Outcome::Fail, std::to_string(failures_) + " mismatch(es), first: " + first_};
  }

 private:
  int failures_ = 0;
  std::string first_;
};

GaelicWord W(std::string_view s) { return GaelicWord::from(s); }

std::string join(const std::vector<GaelicWord>& words) {
  std::string out;
  for (const auto& w : words) out += (out.empty() ? "" : " ") + w.str();
  return out;
}

std::u32string decode(std::string_view s) {
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

std::string encode(std::u32string_view s) {
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

// 1 ---------------------------------------------------------------------
Result saoghal_paradigm() {
  Checker c;
  const Entry e = parse_svf_line(R"(NOUN M "saoghal" "saoghalan" "saoghail")");
  const Paradigm p = decline(e, default_rules());
  const std::map<FormCode, std::string> table = {
      {FormCode::NS, "saoghal"},   {FormCode::NP, "saoghalan"},  {FormCode::GS, "saoghail"},
      {FormCode::GP, "shaoghalan"}, {FormCode::DS, "saoghal"},   {FormCode::DP, "saoghalan"},
      {FormCode::VS, "shaoghail"}, {FormCode::VP, "shaoghalan"}};
  c.eq(p.size(), table.size(), "cell count");
  for (const auto& [code, want] : table) c.eq(join(p.at(code).forms), want, std::string(to_string(code)));

  std::set<std::string> forms;
  for (const auto& w : all_surface_forms(e, default_rules())) forms.insert(w.str());
  c.ok(forms == std::set<std::string>{"saoghal", "saoghalan", "saoghail", "shaoghalan", "shaoghail", "shaoghal"},
       "all_surface_forms differs from the six lexemes");
  return c.result();
}

// 2 ---------------------------------------------------------------------
Result ol_paradigm() {
  Checker c;
  const Paradigm p = conjugate(parse_svf_line(R"(VERB "òl" "òl")"), default_rules());
  const std::map<FormCode, std::string> table = {
      {FormCode::VN, "òl"},
      {FormCode::PASTP, "òlta"},
      {FormCode::PAST_IND, "dh'òl"},
      {FormCode::PAST_DEP, "dh'òl"},
      {FormCode::PAST_PASS, "dh'òladh"},
      {FormCode::FUT_IND, "òlaidh"},
      {FormCode::FUT_DEP, "òl"},
      {FormCode::FUT_PASS, "òlar òltar"},
      {FormCode::RELFUT, "dh'òlas"},
      {FormCode::RELFUT_PASS, "dh'òlar"},
      {FormCode::COND1S_IND, "dh'òlainn"},
      {FormCode::COND1P_IND, "dh'òlamaid"},
      {FormCode::COND23_IND, "dh'òladh"},
      {FormCode::COND1S_DEP, "òlainn"},
      {FormCode::COND1P_DEP, "òlamaid"},
      {FormCode::COND23_DEP, "òladh"},
      {FormCode::COND_PASS, "dh'òltadh"},
      {FormCode::IMP1S, "òlam"},
      {FormCode::IMP2S, "òl"},
      {FormCode::IMP3S, "òladh"},
      {FormCode::IMP1P, "òlamaid"},
      {FormCode::IMP2P, "òlaibh"},
      {FormCode::IMP3P, "òladh"},
      {FormCode::IMP_PASS, "òlar òltar"}};
  for (const auto& [code, want] : table) {
    const Cell& cell = p.at(code);
    c.ok(!cell.error, std::string(to_string(code)) + " failed");
    c.eq(join(cell.forms), want, std::string(to_string(code)));
  }
  return c.result();
}

// 3 ---------------------------------------------------------------------
Result orthography_suite() {
  Checker c;
  c.eq(lenite(W("cat")).str(), "chat", "lenite cat");
  c.eq(lenite(W("tuit")).str(), "thuit", "lenite tuit");
  c.eq(lenite(W("saoghal")).str(), "shaoghal", "lenite saoghal");
  c.eq(lenite(W("òl")).str(), "òl", "lenite òl");
  c.eq(glottal_past_prefix(W("òl")).str(), "dh'òl", "glottal òl");
  c.eq(strip_prothesis(W("n-iasg")).str(), "iasg", "strip n-iasg");
  c.eq(strip_prothesis(W("t-saoghail")).str(), "saoghail", "strip t-saoghail");
  c.eq(slenderize(W("fear")).str(), "fir", "slenderize fear");
  c.eq(slenderize(W("saoghal")).str(), "saoghail", "slenderize saoghal");

  std::mt19937 rng(1981);
  const auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  const std::u32string consonants = U"bcdfghlmnprst";
  const std::vector<std::u32string> vowels = {U"a", U"o", U"u", U"e", U"i", U"à", U"ò", U"ù",
                                              U"è", U"ì", U"ea", U"ai", U"oi", U"ao", U"ui"};
  const auto word = [&] {
    std::u32string w;
    if (pick(5)) w += consonants[pick(consonants.size())];
    if (pick(4) == 0) w += U'h';
    for (std::size_t s = 0, n = 1 + pick(3); s < n; ++s) {
      w += vowels[pick(vowels.size())];
      w += consonants[pick(consonants.size())];
    }
    return GaelicWord::from_chars(w);
  };

  for (int i = 0; i < 1000; ++i) {
    const GaelicWord w = word();
    const GaelicWord once = lenite(w);
    c.ok(lenite(once) == once, "lenite not idempotent on " + w.str());
  }

  const std::vector<SuffixAlternation> suffixes = {
      {W("an"), W("ean")}, {W("aidh"), W("idh")}, {W("adh"), W("eadh")}, {W("ta"), W("te")},
      {W("amaid"), W("eamaid")}, {W("aibh"), W("ibh")}, {W("ar"), W("ear")}, {W("ainn"), W("inn")}};
  const auto broad = [](char32_t ch) { return vowel_class(ch) == VowelClass::Broad; };
  int windows = 0;
  for (int i = 0; i < 1000; ++i) {
    const GaelicWord stem = word();
    const std::u32string s = stem.chars();
    const std::u32string out = attach_suffix(stem, suffixes[pick(suffixes.size())]).chars();
    // the window straddling the stem/suffix boundary
    char32_t before = 0, after = 0;
    for (std::size_t k = s.size(); k-- > 0;)
      if (is_vowel(s[k])) { before = s[k]; break; }
    for (std::size_t k = s.size(); k < out.size(); ++k)
      if (is_vowel(out[k])) { after = out[k]; break; }
    if (before && after) {
      ++windows;
      c.ok(broad(before) == broad(after), "harmony broken in " + GaelicWord::from_chars(out).str());
    }
  }
  c.eq(windows, 1000, "harmony windows checked");
  return c.result();
}

// 4 ---------------------------------------------------------------------
Result svf_round_trip() {
  Checker c;
  std::mt19937 rng(6515);
  const auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  const std::u32string letters = U"abcdefghilmnoprstuàèìòù";
  const auto word = [&] {
    std::u32string w;
    for (std::size_t i = 0, n = 1 + pick(10); i < n; ++i) w += letters[pick(letters.size())];
    if (pick(12) == 0) w = U"dh'" + w;
    if (pick(12) == 0) w += U"-" + std::u32string(1, letters[pick(letters.size())]);
    if (pick(20) == 0) w[0] = char32_t(w[0] - 32);
    return GaelicWord::from_chars(w);
  };
  const auto part = [&] {
    switch (pick(4)) {
      case 0: return PartValue::unknown();
      case 1: return PartValue::non_existent();
      default: return PartValue::present(word());
    }
  };

  constexpr int kEntries = 10000;
  for (int i = 0; i < kEntries; ++i) {
    Entry e{word(), PartOfSpeech::Noun};
    e.irregular = pick(10) == 0;
    switch (pick(3)) {
      case 0:
        e.gender = pick(2) ? Gender::M : Gender::F;
        e.np = part();
        e.gs = part();
        break;
      case 1:
        e.pos = PartOfSpeech::Verb;
        e.vn = part();
        break;
      default:
        e.pos = PartOfSpeech::Adj;
        e.cp = part();
    }
    const std::string line = serialize_entry(e);
    const Entry back = parse_svf_line(line);
    c.ok(back == e, "parse(serialize(e)) != e for " + line);
    c.eq(serialize_entry(back), line, "serialize(parse(line))");
  }

  // Integrity formula against the validator, over every presence pattern.
  for (PartOfSpeech pos : {PartOfSpeech::Noun, PartOfSpeech::Verb, PartOfSpeech::Adj}) {
    for (unsigned mask = 0; mask < 32; ++mask) {
      const bool gr = mask & 1, np = mask & 2, gs = mask & 4, vn = mask & 8, cp = mask & 16;
      Entry e{W("facal"), pos};
      if (gr) e.gender = Gender::M;
      if (np) e.np = PartValue::unknown();
      if (gs) e.gs = PartValue::unknown();
      if (vn) e.vn = PartValue::unknown();
      if (cp) e.cp = PartValue::unknown();
      const bool noun = pos == PartOfSpeech::Noun, verb = pos == PartOfSpeech::Verb,
                 adj = pos == PartOfSpeech::Adj;
      const bool formula = ((!gr && !np && !gs) || noun) && (!vn || verb) && (!cp || adj);
      c.ok(constraint_violations(e).empty() == formula,
           "validator disagrees with the formula for " + std::string(to_string(pos)) + " mask " +
               std::to_string(mask));
    }
  }
  return c.result();
}

// 5 ---------------------------------------------------------------------
void compare_report(Checker& c, const CoverageReport& r, const nlohmann::json& want, const std::string& what) {
  c.eq(r.matched_types, want["matched_types"].get<std::size_t>(), what + " matched types");
  c.eq(r.total_types, want["total_types"].get<std::size_t>(), what + " total types");
  c.eq(r.matched_tokens, want["matched_tokens"].get<std::uint64_t>(), what + " matched tokens");
  c.eq(r.total_tokens, want["total_tokens"].get<std::uint64_t>(), what + " total tokens");
  c.near(r.type_coverage, want["type_coverage"].get<double>(), kRatioTolerance, what + " type coverage");
  c.near(r.token_coverage, want["token_coverage"].get<double>(), kRatioTolerance, what + " token coverage");
  std::vector<std::string> unmatched;
  for (const auto& row : r.unmatched_top) unmatched.push_back(row.lexeme);
  c.ok(unmatched == want["unmatched"].get<std::vector<std::string>>(), what + " unmatched lexemes differ");
}

Result coverage_oracle() {
  Checker c;
  const std::string dir = kFixtures + "/coverage/";
  const auto oracle = nlohmann::json::parse(read_file(dir + "expected_coverage.json"));
  const auto file = load_vocabulary_file(dir + "vocab.svf");
  c.eq(file.entries.size(), 20u, "fixture entries");
  const auto list = load_frequency_list(dir + "freq.tsv");
  c.eq(list.rows.size(), 50u, "frequency rows");

  for (const char* name : {"exact", "accents", "accents-case"}) {
    const FoldPolicy policy = *parse_fold_policy(name);
    const Vocabulary vocab(file.entries, policy);
    const auto index = build_all_forms(vocab, default_rules(), policy);
    c.eq(index.distinct_form_count(), oracle["distinct_forms"].get<std::size_t>(), "distinct forms");
    const auto lemmas = coverage(list, vocab.lemma_set(), policy, list.rows.size());
    const auto all = coverage(list, index.keys(), policy, list.rows.size());
    compare_report(c, lemmas, oracle["lemmas"][name], std::string("lemmas/") + name);
    compare_report(c, all, oracle["allforms"][name], std::string("allforms/") + name);
    c.ok(all.token_coverage >= lemmas.token_coverage, std::string("monotonicity under ") + name);
  }
  return c.result();
}

// 6 ---------------------------------------------------------------------
Result stats_oracles() {
  Checker c;
  const auto entries = load_vocabulary_file(kFixtures + "/stats/vocab.svf").entries;
  c.eq(entries.size(), 12u, "fixture entries");

  // Brute force over code points.
  const auto length = [](const GaelicWord& w) { return static_cast<long>(decode(w.str()).size()); };
  const auto ends_with = [](const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  for (long extra : {0L, 1L, 2L, 3L, 6L}) {
    for (const char* pattern : {"an", "ean", "n", "ichean"}) {
      std::size_t at_least = 0, exactly = 0;
      for (const Entry& e : entries) {
        if (!e.np || !e.np->is_present()) continue;
        const long growth = length(e.np->word()) - length(e.lemma);
        if (!ends_with(e.np->word().str(), pattern)) continue;
        if (growth >= extra) ++at_least;
        if (growth == extra) ++exactly;
      }
      const std::string tag = std::string("NP/") + pattern + "/" + std::to_string(extra);
      c.eq(count_suffix_pattern(entries, PrincipalPart::NP, pattern, extra), at_least, tag + " at least");
      c.eq(count_suffix_pattern(entries, PrincipalPart::NP, pattern, extra, Growth::Exactly), exactly,
           tag + " exactly");
    }
  }

  for (PrincipalPart field : {PrincipalPart::NP, PrincipalPart::GS, PrincipalPart::VN, PrincipalPart::CP}) {
    for (std::size_t len : {1u, 2u, 3u}) {
      for (long growth : {-2L, 0L, 2L, 3L}) {
        std::map<std::string, std::size_t> want;
        for (const Entry& e : entries) {
          const auto& part = e.part(field);
          if (!part || !part->is_present()) continue;
          if (length(part->word()) - length(e.lemma) < growth) continue;
          const std::u32string chars = decode(part->word().str());
          const std::string key = encode(chars.substr(chars.size() > len ? chars.size() - len : 0));
          ++want[key];
        }
        const auto h = ending_histogram(entries, field, len, growth);
        std::map<std::string, std::size_t> got(h.buckets.begin(), h.buckets.end());
        const std::string tag = std::string(to_string(field)) + "/" + std::to_string(len) + "/" + std::to_string(growth);
        c.ok(got == want, "histogram " + tag + " differs");
        c.eq(got.size(), h.buckets.size(), "duplicate buckets in " + tag);
        for (std::size_t i = 1; i < h.buckets.size(); ++i)
          c.ok(h.buckets[i - 1].second >= h.buckets[i].second, "histogram " + tag + " not sorted");
      }
    }
  }

  const auto dups = find_near_duplicates(entries);
  c.eq(dups.case_pairs.size(), 1u, "case pairs");
  c.eq(dups.accent_pairs.size(), 1u, "accent pairs");
  if (dups.case_pairs.size() == 1) {
    std::set<std::string> pair{dups.case_pairs[0].first->lemma.str(), dups.case_pairs[0].second->lemma.str()};
    c.ok(pair == std::set<std::string>{"Dia", "dia"}, "case pair is not Dia/dia");
  }
  if (dups.accent_pairs.size() == 1) {
    std::set<std::string> pair{dups.accent_pairs[0].first->lemma.str(), dups.accent_pairs[0].second->lemma.str()};
    c.ok(pair == std::set<std::string>{"mòr", "mór"}, "accent pair is not mòr/mór");
  }
  return c.result();
}

// 7 ---------------------------------------------------------------------
Result published_dataset() {
  const char* svf = std::getenv("GAELIC_SVF");
  const char* freq = std::getenv("GAELIC_FREQ");
  if (!svf || !freq || !std::filesystem::exists(svf) || !std::filesystem::exists(freq))
    return {Outcome::Skip, "set GAELIC_SVF and GAELIC_FREQ to the published files"};

  Checker c;
  const auto file = load_vocabulary_file(svf);
  std::map<PartOfSpeech, std::size_t> by_pos;
  std::size_t irregular = 0;
  for (const Entry& e : file.entries) {
    ++by_pos[e.pos];
    irregular += e.irregular;
  }
  c.eq(by_pos[PartOfSpeech::Noun], 4956u, "nouns");
  c.eq(by_pos[PartOfSpeech::Adj], 1025u, "adjectives");
  c.eq(by_pos[PartOfSpeech::Verb], 534u, "verbs");
  c.eq(irregular, 24u, "irregular entries");

  c.eq(count_suffix_pattern(file.entries, PrincipalPart::NP, "an", 2), 2452u, "plural in -an");
  c.eq(count_suffix_pattern(file.entries, PrincipalPart::NP, "an", 2, Growth::Exactly), 1302u, "short -an");

  const auto h = ending_histogram(file.entries, PrincipalPart::VN, 3, 3);
  c.ok(!h.buckets.empty() && h.buckets[0] == std::pair<std::string, std::size_t>{"adh", 218}, "top VN bucket is not adh/218");

  const Vocabulary vocab(file.entries, FoldPolicy::Exact);
  const auto index = build_all_forms(vocab, default_rules());
  c.eq(index.distinct_form_count(), 33132u, "all-forms");
  c.eq(vocab.size(), 6515u, "lemmas");

  const auto list = load_frequency_list(freq);
  c.eq(coverage(list, vocab.lemma_set(), FoldPolicy::Exact).matched_types, 2044u, "lemma coverage types");
  c.eq(coverage(list, index.keys(), FoldPolicy::Exact).matched_types, 4371u, "all-forms coverage types");
  c.near(cumulative_coverage_curve(list, 15).back().second, kStopwordTarget, kStopwordTolerance, "first 15 coverage");
  return c.result();
}

// 8 ---------------------------------------------------------------------
bool sqlglot_parses(const std::string& ddl, std::string* note) {
  const auto path = std::filesystem::temp_directory_path() / "gaelic_acceptance_ddl.sql";
  std::ofstream(path) << ddl;
  const std::string cmd =
      "python3 -c \"import sys, sqlglot; sqlglot.parse(open(sys.argv[1]).read(), read='mysql', "
      "error_level=sqlglot.ErrorLevel.RAISE)\" " + path.string() + " 2>/dev/null";
  const int probe = std::system("python3 -c 'import sqlglot' 2>/dev/null");
  if (probe != 0) {
    *note = "sqlglot unavailable, MySQL dialect not checked";
    std::filesystem::remove(path);
    return true;
  }
  const int status = std::system(cmd.c_str());
  std::filesystem::remove(path);
  *note = "MySQL dialect checked with sqlglot";
  return status == 0;
}

Result ddl_export() {
  Checker c;
  const std::string portable = emit_ddl(SqlDialect::Portable);
  const std::string mysql = emit_ddl(SqlDialect::MySql);

  for (const std::string& ddl : {portable, mysql}) {
    std::string flat;
    for (char ch : ddl) {
      if (ch == '\n') ch = ' ';
      if (ch == ' ' && !flat.empty() && flat.back() == ' ') continue;
      flat += ch;
    }
    c.ok(flat.find("((GR IS NULL AND NP IS NULL AND GS IS NULL) OR POS = 'NOUN')") != std::string::npos,
         "noun conjunct missing");
    c.ok(flat.find("(VN IS NULL OR POS = 'VERB')") != std::string::npos, "verb conjunct missing");
    c.ok(flat.find("(CP IS NULL OR POS = 'ADJ')") != std::string::npos, "adjective conjunct missing");
  }

  sqlite3* db = nullptr;
  sqlite3_open(":memory:", &db);
  const auto exec = [&](const std::string& sql) {
    return sqlite3_exec(db, sql.c_str(), nullptr, nullptr, nullptr) == SQLITE_OK;
  };
  c.ok(exec(portable), std::string("SQLite rejected the schema: ") + sqlite3_errmsg(db));
  const auto entries = load_vocabulary_file(kFixtures + "/coverage/vocab.svf").entries;
  const InsertScript script = emit_inserts(entries);
  c.ok(exec(script.sql), std::string("SQLite rejected the inserts: ") + sqlite3_errmsg(db));
  c.ok(!exec("INSERT INTO Facal (Lemma, POS, GR) VALUES ('òl', 'VERB', 'M');"), "CHECK accepted a gendered verb");
  sqlite3_stmt* st = nullptr;
  sqlite3_prepare_v2(db, "SELECT COUNT(*) FROM Facal", -1, &st, nullptr);
  if (sqlite3_step(st) == SQLITE_ROW) c.eq(sqlite3_column_int(st, 0), static_cast<int>(entries.size()), "rows");
  sqlite3_finalize(st);
  sqlite3_close(db);

  std::string note;
  c.ok(sqlglot_parses(mysql, &note), "sqlglot rejected the MySQL dialect");
  c.ok(parse_inserts(script.sql) == entries, "insert round trip lost information");
  Result r = c.result();
  if (r.outcome == Outcome::Pass) r.detail = note;
  return r;
}

struct Criterion {
  int number;
  const char* name;
  double limit_ms;
  std::function<Result()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "paradigm saoghal", 1000, saoghal_paradigm},
      {2, "paradigm ol", 1000, ol_paradigm},
      {3, "orthography suite", 1000, orthography_suite},
      {4, "svf round trip", 5000, svf_round_trip},
      {5, "coverage oracle", 1000, coverage_oracle},
      {6, "stats oracles", 1000, stats_oracles},
      {7, "published dataset", 30000, published_dataset},
      {8, "ddl export", 1000, ddl_export},
  };

  int failed = 0;
  for (const auto& crit : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Result r;
    try {
      r = crit.run();
    } catch (const std::exception& e) {
      r = {Outcome::Fail, std::string("exception: ") + e.what()};
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (r.outcome != Outcome::Skip && ms > crit.limit_ms) {
      r.outcome = Outcome::Fail;
      r.detail = "over the " + std::to_string(static_cast<int>(crit.limit_ms)) + " ms limit";
    }
    const char* tag = r.outcome == Outcome::Pass ? "PASS" : r.outcome == Outcome::Fail ? "FAIL" : "SKIP";
    std::printf("%s %d %s (%.1f ms)%s%s\n", tag, crit.number, crit.name, ms, r.detail.empty() ? "" : " ",
                r.detail.c_str());
    failed += r.outcome == Outcome::Fail;
  }
  return failed == 0 ? 0 : 1;
}
