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

// faclair: command-line front end for the Gaelic morphology library.
//
// Exit status: 0 success, 1 domain error (not found, unsupported),
// 2 I/O or syntax error.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "gaelic/analysis.hpp"
#include "gaelic/export.hpp"
#include "gaelic/lexicon.hpp"
#include "gaelic/rules.hpp"
#include "gaelic/svf.hpp"
#include "gaelic/text.hpp"

namespace {

using namespace gaelic;

constexpr int kOk = 0;
constexpr int kDomainError = 1;
constexpr int kIoError = 2;

constexpr const char* kRulesEnv = "FACLAIR_RULES";

enum class OutputFormat { Table, Delimited };

struct CliConfig {
  std::string vocab_path;
  std::string rules_path;
  FoldPolicy fold = FoldPolicy::FoldAccents;
  OutputFormat output = OutputFormat::Table;
  AccentMode accent_mode = AccentMode::FoldAcuteToGrave;
};

// Thrown to unwind to main with a specific exit status.
struct Exit {
  int status;
};

int exit_status(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::IoError:
    case ErrorKind::SyntaxError:
    case ErrorKind::FormatError:
    case ErrorKind::RangeError:
    case ErrorKind::UnknownFormCode:
    case ErrorKind::TransformOnEmptySource:
      return kIoError;
    default:
      return kDomainError;
  }
}

RuleSet load_rules(const CliConfig& cfg) {
  std::string path = cfg.rules_path;
  if (path.empty())
    if (const char* env = std::getenv(kRulesEnv)) path = env;
  if (path.empty()) return default_rules();
  try {
    return parse_rules(read_file(path));
  } catch (const Error& e) {
    std::cerr << "faclair: " << path << ": " << e.what() << "\n";
    throw Exit{kIoError};
  }
}

VocabularyFile load_vocab_file(const CliConfig& cfg) {
  if (cfg.vocab_path.empty()) {
    std::cerr << "faclair: --vocab is required for this command\n";
    throw Exit{kIoError};
  }
  return load_vocabulary_file(cfg.vocab_path);
}

Vocabulary load_vocab(const CliConfig& cfg, FoldPolicy policy) {
  VocabularyFile file = load_vocab_file(cfg);
  for (const auto& err : file.errors)
    std::cerr << cfg.vocab_path << ":" << err.line << ": " << to_string(err.kind) << ": "
              << err.message << "\n";
  return Vocabulary(std::move(file.entries), policy);
}

std::string query_word(const CliConfig& cfg, std::string_view word) {
  return normalize_accents(text::nfc(word), cfg.accent_mode);
}

const Entry& find_entry(const Vocabulary& vocab, const CliConfig& cfg, std::string_view lemma) {
  const auto found = vocab.lookup(query_word(cfg, lemma));
  if (found.empty()) {
    std::cerr << "faclair: \"" << lemma << "\" not found\n";
    throw Exit{kDomainError};
  }
  return *found.front();
}

TableStyle style(const CliConfig& cfg) {
  return cfg.output == OutputFormat::Table ? TableStyle::Ascii : TableStyle::Delimited;
}

std::string percent(double ratio) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(2) << ratio * 100.0 << "%";
  return s.str();
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path, std::ios::binary);
  if (!file) {
    std::cerr << "faclair: cannot write " << path << "\n";
    throw Exit{kIoError};
  }
  return file;
}

void print_table(const CliConfig& cfg, std::vector<std::string> columns,
                 std::vector<std::vector<std::string>> rows) {
  std::cout << render_table({std::move(columns), std::move(rows), style(cfg)});
}

// --- commands --------------------------------------------------------------

int cmd_validate(const CliConfig& cfg) {
  const VocabularyFile file = load_vocab_file(cfg);
  std::size_t syntax = 0, violations = 0;
  for (const auto& err : file.errors) {
    std::cout << cfg.vocab_path << ":" << err.line << ": " << to_string(err.kind) << ": "
              << err.message << "\n";
    (err.kind == ErrorKind::ConstraintViolation ? violations : syntax)++;
  }

  std::map<PartOfSpeech, std::size_t> by_pos;
  std::size_t irregular = 0, nouns_incomplete = 0;
  std::map<PrincipalPart, std::pair<std::size_t, std::size_t>> missing;  // unknown, non-existent
  for (const Entry& e : file.entries) {
    ++by_pos[e.pos];
    if (e.irregular) ++irregular;
    bool incomplete = false;
    for (PrincipalPart p : {PrincipalPart::NP, PrincipalPart::GS, PrincipalPart::VN, PrincipalPart::CP}) {
      const auto& v = e.part(p);
      if (!v) continue;
      if (v->state() == PartValue::State::Unknown) {
        ++missing[p].first;
        incomplete = true;
      }
      if (v->state() == PartValue::State::NonExistent) ++missing[p].second;
    }
    if (e.pos == PartOfSpeech::Noun && incomplete) ++nouns_incomplete;
  }

  const double noun_share =
      by_pos[PartOfSpeech::Noun] ? static_cast<double>(nouns_incomplete) / by_pos[PartOfSpeech::Noun] : 0.0;
  if (cfg.output == OutputFormat::Delimited) {
    std::cout << "metric\tvalue\n"
              << "entries\t" << file.entries.size() << "\n"
              << "syntax_errors\t" << syntax << "\n"
              << "violations\t" << violations << "\n"
              << "NOUN\t" << by_pos[PartOfSpeech::Noun] << "\n"
              << "VERB\t" << by_pos[PartOfSpeech::Verb] << "\n"
              << "ADJ\t" << by_pos[PartOfSpeech::Adj] << "\n"
              << "IRREG\t" << irregular << "\n";
    for (const auto& [p, counts] : missing)
      std::cout << to_string(p) << "_unknown\t" << counts.first << "\n"
                << to_string(p) << "_nonexistent\t" << counts.second << "\n";
    std::cout << "nouns_with_unknown_part\t" << nouns_incomplete << "\n";
  } else {
    std::cout << file.entries.size() << " entries, " << syntax << " syntax errors, " << violations
              << " violations\n"
              << "NOUN " << by_pos[PartOfSpeech::Noun] << ", VERB " << by_pos[PartOfSpeech::Verb]
              << ", ADJ " << by_pos[PartOfSpeech::Adj] << ", IRREG " << irregular << "\n";
    for (const auto& [p, counts] : missing)
      std::cout << to_string(p) << ": " << counts.first << " unknown (?), " << counts.second
                << " non-existent (-)\n";
    std::cout << "nouns with an unknown principal part: " << nouns_incomplete << " ("
              << percent(noun_share) << ")\n";
  }
  return syntax == 0 ? kOk : kIoError;
}

int cmd_inflect(const CliConfig& cfg, const std::string& lemma, const std::string& form) {
  const auto code = parse_form_code(form);
  if (!code) {
    std::cerr << "faclair: unknown form code " << form << "\n";
    return kIoError;
  }
  const RuleSet rules = load_rules(cfg);
  const Vocabulary vocab = load_vocab(cfg, cfg.fold);
  const Entry& e = find_entry(vocab, cfg, lemma);
  const auto forms = inflect(e, *code, rules);
  std::string joined;
  for (const auto& w : forms) joined += (joined.empty() ? "" : " ") + w.str();
  if (cfg.output == OutputFormat::Delimited)
    std::cout << e.lemma.str() << "\t" << form << "\t" << joined << "\n";
  else
    std::cout << (forms.empty() ? "—" : joined) << "\n";
  return kOk;
}

int cmd_paradigm(const CliConfig& cfg, const std::string& lemma, std::optional<PartOfSpeech> want) {
  const RuleSet rules = load_rules(cfg);
  const Vocabulary vocab = load_vocab(cfg, cfg.fold);
  const Entry& e = find_entry(vocab, cfg, lemma);
  if (want && e.pos != *want) {
    std::cerr << "faclair: \"" << e.lemma.str() << "\" is a " << to_string(e.pos) << "\n";
    return kDomainError;
  }
  const Paradigm p = paradigm(e, rules);
  std::string title = e.lemma.str() + " (" + std::string(to_string(e.pos));
  if (e.gender) title += " " + std::string(to_string(*e.gender));
  title += ")";
  std::cout << render_paradigm(cfg.output == OutputFormat::Table ? title : "", successful_cells(p),
                               layout_for(e.pos), style(cfg));
  for (const auto& [code, cell] : p)
    if (cell.error) std::cerr << to_string(code) << ": " << cell.error->what() << "\n";
  return kOk;
}

int cmd_expand(const CliConfig& cfg, const std::string& out_path) {
  const RuleSet rules = load_rules(cfg);
  const Vocabulary vocab = load_vocab(cfg, FoldPolicy::Exact);
  const AllFormsIndex index = build_all_forms(vocab, rules, cfg.fold);
  std::ofstream file;
  std::ostream& out = open_output(out_path, file);
  for (const auto& [form, analyses] : index.forms()) {
    out << form;
    if (cfg.output == OutputFormat::Delimited) {
      std::string joined;
      for (const auto& a : analyses) {
        joined += joined.empty() ? "\t" : ",";
        joined += index.entries()[a.entry].lemma.str() + ":" + std::string(to_string(a.code));
        if (a.lenited_allomorph) joined += "+H";
      }
      out << joined;
    }
    out << "\n";
  }
  const ExpansionStats t = index.totals();
  std::cerr << index.distinct_form_count() << " distinct forms from " << vocab.size()
            << " lemmas (" << t.failed_cells << " cells could not be derived)\n";
  return kOk;
}

int cmd_recognize(const CliConfig& cfg, const std::vector<std::string>& words) {
  const RuleSet rules = load_rules(cfg);
  const Vocabulary vocab = load_vocab(cfg, FoldPolicy::Exact);
  const AllFormsIndex index = build_all_forms(vocab, rules, cfg.fold);
  bool all_found = true;
  std::vector<std::vector<std::string>> rows;
  for (const auto& w : words) {
    const auto hits = recognize(index, query_word(cfg, w));
    if (hits.empty()) {
      all_found = false;
      rows.push_back({w, "—", "—", "—"});
    }
    for (const auto& h : hits)
      rows.push_back({w, h.entry->lemma.str(),
                      std::string(to_string(h.code)) + (h.lenited_allomorph ? "+H" : ""), h.surface});
  }
  print_table(cfg, {"word", "lemma", "form", "matched"}, std::move(rows));
  return all_found ? kOk : kDomainError;
}

int cmd_coverage(const CliConfig& cfg, const std::string& freq_path, const std::string& mode,
                 std::size_t top) {
  const FrequencyList list = load_frequency_list(freq_path);
  for (const auto& w : list.warnings) std::cerr << freq_path << ":" << w.line << ": " << w.message << "\n";
  for (const auto& e : list.errors) std::cerr << freq_path << ":" << e.line << ": " << e.message << "\n";
  const Vocabulary vocab = load_vocab(cfg, FoldPolicy::Exact);
  std::set<std::string> keys;
  if (mode == "lemmas") {
    keys = vocab.lemma_set();
  } else {
    keys = build_all_forms(vocab, load_rules(cfg), cfg.fold).keys();
  }
  const CoverageReport r = coverage(list, keys, cfg.fold, top);
  if (cfg.output == OutputFormat::Delimited) {
    std::cout << "mode\tmatched_types\ttotal_types\ttype_coverage\tmatched_tokens\ttotal_tokens\ttoken_coverage\n"
              << mode << "\t" << r.matched_types << "\t" << r.total_types << "\t" << r.type_coverage
              << "\t" << r.matched_tokens << "\t" << r.total_tokens << "\t" << r.token_coverage << "\n";
    return kOk;
  }
  std::cout << "mode: " << mode << " (" << keys.size() << " keys, fold " << to_string(cfg.fold) << ")\n"
            << "types:  " << r.matched_types << " / " << r.total_types << " (" << percent(r.type_coverage) << ")\n"
            << "tokens: " << r.matched_tokens << " / " << r.total_tokens << " (" << percent(r.token_coverage) << ")\n";
  if (!r.unmatched_top.empty()) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& row : r.unmatched_top)
      rows.push_back({std::to_string(row.rank), row.lexeme, std::to_string(row.count)});
    std::cout << "most frequent unmatched:\n";
    print_table(cfg, {"rank", "lexeme", "count"}, std::move(rows));
  }
  return kOk;
}

int cmd_stats(const CliConfig& cfg, const std::string& which, const std::string& freq_path,
              std::size_t k) {
  if (which == "hapax" || which == "zipf") {
    if (freq_path.empty()) {
      std::cerr << "faclair: stats " << which << " needs --freq\n";
      return kIoError;
    }
    const FrequencyList list = load_frequency_list(freq_path);
    if (which == "hapax") {
      const HapaxReport h = hapax_report(list);
      std::cout << h.count << " hapax legomena\n";
      for (const auto& l : h.lexemes) std::cout << l << "\n";
      return kOk;
    }
    const auto curve = cumulative_coverage_curve(list, k);
    std::vector<std::vector<std::string>> rows;
    for (const auto& [rank, share] : curve) {
      std::ostringstream s;
      s << std::fixed << std::setprecision(4) << share;
      rows.push_back({std::to_string(rank), list.rows[rank - 1].lexeme,
                      std::to_string(list.rows[rank - 1].count), s.str()});
    }
    print_table(cfg, {"rank", "lexeme", "count", "cumulative"}, std::move(rows));
    return kOk;
  }

  const Vocabulary vocab = load_vocab(cfg, FoldPolicy::Exact);
  const auto& entries = vocab.entries();
  if (which == "plural-an") {
    std::size_t nouns = 0;
    for (const auto& e : entries) nouns += e.pos == PartOfSpeech::Noun;
    const auto at_least = count_suffix_pattern(entries, PrincipalPart::NP, "an", 2, Growth::AtLeast);
    const auto exactly = count_suffix_pattern(entries, PrincipalPart::NP, "an", 2, Growth::Exactly);
    print_table(cfg, {"pattern", "nouns", "of"},
                {{"NP in -an (growth >= 2)", std::to_string(at_least), std::to_string(nouns)},
                 {"NP in -an (growth = 2)", std::to_string(exactly), std::to_string(nouns)}});
    return kOk;
  }
  if (which == "vn-endings") {
    const EndingHistogram h = ending_histogram(entries, PrincipalPart::VN, 3, 3);
    std::vector<std::vector<std::string>> rows;
    for (const auto& [ending, count] : h.buckets) rows.push_back({ending, std::to_string(count)});
    print_table(cfg, {"Ending", "Freq"}, std::move(rows));
    return kOk;
  }
  if (which == "dedup") {
    const NearDuplicates d = find_near_duplicates(entries);
    std::vector<std::vector<std::string>> rows;
    for (const auto& [a, b] : d.case_pairs) rows.push_back({"case", a->lemma.str(), b->lemma.str()});
    for (const auto& [a, b] : d.accent_pairs) rows.push_back({"accent", a->lemma.str(), b->lemma.str()});
    print_table(cfg, {"kind", "first", "second"}, std::move(rows));
    std::cout << d.case_pairs.size() << " case pairs, " << d.accent_pairs.size() << " accent pairs\n";
    return kOk;
  }
  std::cerr << "faclair: unknown statistic " << which << "\n";
  return kIoError;
}

int cmd_export(const CliConfig& cfg, const std::string& kind, const std::string& out_path,
               bool portable) {
  std::ofstream file;
  if (kind == "ddl") {
    std::ostream& out = open_output(out_path, file);
    out << emit_ddl(portable ? SqlDialect::Portable : SqlDialect::MySql);
    return kOk;
  }
  const VocabularyFile vocab = load_vocab_file(cfg);
  const InsertScript script = emit_inserts(vocab.entries);
  for (const auto& w : script.warnings) std::cerr << "warning: " << w << "\n";
  std::ostream& out = open_output(out_path, file);
  out << script.sql;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rule-based Scottish Gaelic morphology: inflection, recognition and lexicon analysis"};
  app.require_subcommand(1);

  CliConfig cfg;
  std::string fold = "accents", format = "table", accent_mode = "fold";
  app.add_option("--vocab", cfg.vocab_path, "Vocabulary file (SVF)");
  app.add_option("--rules", cfg.rules_path,
                 std::string("Rule file (default: $") + kRulesEnv + ", else the built-in rules)");
  app.add_option("--fold", fold, "Lookup folding: exact, accents, accents-case")
      ->check(CLI::IsMember({"exact", "accents", "accents-case"}));
  app.add_option("--format", format, "Output: table or tsv")->check(CLI::IsMember({"table", "tsv"}));
  app.add_option("--accent-mode", accent_mode, "Normalize query words: fold, strip, none")
      ->check(CLI::IsMember({"fold", "strip", "none"}));

  auto* validate = app.add_subcommand("validate", "Check an SVF file and summarize its contents");

  std::string lemma, form;
  auto* inflect_cmd = app.add_subcommand("inflect", "Print the surface forms of one grammatical form");
  inflect_cmd->add_option("lemma", lemma)->required();
  inflect_cmd->add_option("form", form, "Form code, e.g. DP or FUT_PASS")->required();

  auto* decline_cmd = app.add_subcommand("decline", "Noun case table");
  decline_cmd->add_option("lemma", lemma)->required();
  auto* conjugate_cmd = app.add_subcommand("conjugate", "Verb conjugation table");
  conjugate_cmd->add_option("lemma", lemma)->required();
  auto* show_cmd = app.add_subcommand("paradigm", "All forms of any entry");
  show_cmd->add_option("lemma", lemma)->required();

  std::string out_path;
  auto* expand_cmd = app.add_subcommand("expand", "Write every distinct surface form, one per line");
  expand_cmd->add_option("-o,--output", out_path, "Output file (default stdout)");

  std::vector<std::string> words;
  auto* recognize_cmd = app.add_subcommand("recognize", "Analyse inflected words");
  recognize_cmd->add_option("words", words)->required();

  std::string freq_path, mode = "allforms";
  std::size_t top = 20, k = 15;
  auto* coverage_cmd = app.add_subcommand("coverage", "Match a frequency list against the vocabulary");
  coverage_cmd->add_option("--freq", freq_path, "Frequency list")->required();
  coverage_cmd->add_option("--mode", mode)->check(CLI::IsMember({"lemmas", "allforms"}));
  coverage_cmd->add_option("--top", top, "Unmatched lexemes to list");

  std::string which;
  auto* stats_cmd = app.add_subcommand("stats", "Pattern statistics");
  stats_cmd->add_option("which", which, "plural-an, vn-endings, dedup, hapax, zipf")
      ->required()
      ->check(CLI::IsMember({"plural-an", "vn-endings", "dedup", "hapax", "zipf"}));
  stats_cmd->add_option("--freq", freq_path, "Frequency list (hapax, zipf)");
  stats_cmd->add_option("-k", k, "Ranks in the zipf curve");

  std::string kind;
  bool portable = false;
  auto* export_cmd = app.add_subcommand("export", "SQL schema or data script");
  export_cmd->add_option("kind", kind)->required()->check(CLI::IsMember({"ddl", "inserts"}));
  export_cmd->add_option("-o,--output", out_path, "Output file (default stdout)");
  export_cmd->add_flag("--portable", portable, "Check-constrained text columns instead of ENUM");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kIoError;
  }

  cfg.fold = *parse_fold_policy(fold);
  cfg.output = format == "tsv" ? OutputFormat::Delimited : OutputFormat::Table;
  cfg.accent_mode = accent_mode == "fold"    ? AccentMode::FoldAcuteToGrave
                    : accent_mode == "strip" ? AccentMode::StripAll
                                             : AccentMode::None;

  try {
    if (*validate) return cmd_validate(cfg);
    if (*inflect_cmd) return cmd_inflect(cfg, lemma, form);
    if (*decline_cmd) return cmd_paradigm(cfg, lemma, PartOfSpeech::Noun);
    if (*conjugate_cmd) return cmd_paradigm(cfg, lemma, PartOfSpeech::Verb);
    if (*show_cmd) return cmd_paradigm(cfg, lemma, std::nullopt);
    if (*expand_cmd) return cmd_expand(cfg, out_path);
    if (*recognize_cmd) return cmd_recognize(cfg, words);
    if (*coverage_cmd) return cmd_coverage(cfg, freq_path, mode, top);
    if (*stats_cmd) return cmd_stats(cfg, which, freq_path, k);
    if (*export_cmd) return cmd_export(cfg, kind, out_path, portable);
  } catch (const Exit& e) {
    return e.status;
  } catch (const Error& e) {
    std::cerr << "faclair: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_status(e.kind());
  }
  return kOk;
}
