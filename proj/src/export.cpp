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

#include "gaelic/export.hpp"

#include <algorithm>
#include <optional>

#include "gaelic/text.hpp"

namespace gaelic {

namespace {

constexpr std::string_view kCheck =
    "    CHECK (\n"
    "      ((GR IS NULL AND\n"
    "        NP IS NULL AND\n"
    "        GS IS NULL)\n"
    "          OR POS = 'NOUN') AND\n"
    "      (VN IS NULL OR POS = 'VERB') AND\n"
    "      (CP IS NULL OR POS = 'ADJ')\n"
    "    )\n";

}  // namespace

std::string emit_ddl(SqlDialect dialect) {
  std::string out = "CREATE TABLE Facal(\n";
  if (dialect == SqlDialect::MySql) {
    out +=
        "    ID INT PRIMARY KEY AUTO_INCREMENT,\n"
        "    Lemma VARCHAR(35) NOT NULL,\n"
        "    IRREG BOOL DEFAULT FALSE,\n"
        "    POS ENUM ('NOUN', -- part of speech\n"
        "              'VERB',\n"
        "              'ADJ') NOT NULL,\n"
        "    GR ENUM ('M', 'F'), -- gender\n";
  } else {
    out +=
        "    ID INTEGER PRIMARY KEY,\n"
        "    Lemma VARCHAR(35) NOT NULL,\n"
        "    IRREG BOOLEAN DEFAULT FALSE,\n"
        "    POS VARCHAR(4) NOT NULL CHECK (POS IN ('NOUN', 'VERB', 'ADJ')), -- part of speech\n"
        "    GR CHAR(1) CHECK (GR IN ('M', 'F')), -- gender\n";
  }
  out +=
      "    NP VARCHAR(35), -- nom. pl.\n"
      "    GS VARCHAR(35), -- gen. sg.\n"
      "    CP VARCHAR(35), -- comparative\n"
      "    VN VARCHAR(35), -- verbal noun\n";
  out += kCheck;
  out += ");\n";
  return out;
}

namespace {

std::string quote(std::string_view s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') out += '\'';
    out += c;
  }
  return out + "'";
}

struct Column {
  std::string_view name;
  const std::optional<PartValue>* value;
};

}  // namespace

InsertScript emit_inserts(std::span<const Entry> entries) {
  InsertScript script;
  script.sql = "-- Facal data: " + std::to_string(entries.size()) + " entries\n";
  std::size_t n = 0;
  for (const Entry& e : entries) {
    ++n;
    auto check_width = [&](std::string_view column, const std::string& value) {
      const std::size_t len = text::char_length(value);
      if (len > kColumnWidth)
        script.warnings.push_back("entry " + std::to_string(n) + ": " + std::string(column) +
                                  " '" + value + "' has " + std::to_string(len) +
                                  " characters, the column holds " + std::to_string(kColumnWidth));
    };
    check_width("Lemma", e.lemma.str());

    std::string values = quote(e.lemma.str());
    values += e.irregular ? ", TRUE" : ", FALSE";
    values += ", " + quote(to_string(e.pos));
    values += e.gender ? ", " + quote(to_string(*e.gender)) : ", NULL";

    std::vector<std::string_view> missing;
    for (const Column& c : {Column{"NP", &e.np}, Column{"GS", &e.gs}, Column{"CP", &e.cp},
                            Column{"VN", &e.vn}}) {
      const auto& v = *c.value;
      if (v && v->is_present()) {
        values += ", " + quote(v->word().str());
        check_width(c.name, v->word().str());
      } else {
        values += ", NULL";
        if (v && v->state() == PartValue::State::NonExistent) missing.push_back(c.name);
      }
    }
    script.sql += "INSERT INTO Facal (Lemma, IRREG, POS, GR, NP, GS, CP, VN) VALUES (" + values + ");";
    if (!missing.empty()) {
      script.sql += " -- non-existent:";
      for (std::size_t i = 0; i < missing.size(); ++i)
        script.sql += (i ? "," : " ") + std::string(missing[i]);
    }
    script.sql += "\n";
  }
  return script;
}

namespace {

struct SqlValue {
  bool null = false;
  std::string text;  // unquoted string, or a bare keyword
  bool quoted = false;
};

std::vector<SqlValue> parse_values(std::string_view s, std::size_t line) {
  std::vector<SqlValue> values;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < s.size() && s[i] == ' ') ++i;
  };
  while (true) {
    skip_space();
    SqlValue v;
    if (i < s.size() && s[i] == '\'') {
      ++i;
      while (true) {
        if (i >= s.size()) throw Error(ErrorKind::SyntaxError, "unterminated string", line);
        if (s[i] == '\'') {
          if (i + 1 < s.size() && s[i + 1] == '\'') {
            v.text += '\'';
            i += 2;
            continue;
          }
          ++i;
          break;
        }
        v.text += s[i++];
      }
      v.quoted = true;
    } else {
      const std::size_t start = i;
      while (i < s.size() && s[i] != ',' && s[i] != ' ') ++i;
      v.text = std::string(s.substr(start, i - start));
      v.null = v.text == "NULL";
      if (v.text.empty()) throw Error(ErrorKind::SyntaxError, "empty value", line);
    }
    values.push_back(std::move(v));
    skip_space();
    if (i >= s.size()) break;
    if (s[i] != ',') throw Error(ErrorKind::SyntaxError, "expected ','", line);
    ++i;
  }
  return values;
}

}  // namespace

std::vector<Entry> parse_inserts(std::string_view sql) {
  constexpr std::string_view kPrefix =
      "INSERT INTO Facal (Lemma, IRREG, POS, GR, NP, GS, CP, VN) VALUES (";
  std::vector<Entry> out;
  std::size_t line_no = 0;
  while (!sql.empty()) {
    const std::size_t nl = sql.find('\n');
    std::string_view line = sql.substr(0, nl);
    sql = nl == std::string_view::npos ? std::string_view{} : sql.substr(nl + 1);
    ++line_no;
    if (line.empty() || line.starts_with("--")) continue;
    if (!line.starts_with(kPrefix)) throw Error(ErrorKind::SyntaxError, "not an INSERT", line_no);
    line.remove_prefix(kPrefix.size());

    std::string_view comment;
    if (const std::size_t c = line.rfind(");"); c != std::string_view::npos) {
      comment = line.substr(c + 2);
      line = line.substr(0, c);
    } else {
      throw Error(ErrorKind::SyntaxError, "missing ');'", line_no);
    }
    const auto v = parse_values(line, line_no);
    if (v.size() != 8) throw Error(ErrorKind::SyntaxError, "expected 8 values", line_no);

    std::vector<std::string> non_existent;
    if (const std::size_t m = comment.find("-- non-existent:"); m != std::string_view::npos) {
      std::string_view list = comment.substr(m + 16);
      while (!list.empty()) {
        while (!list.empty() && (list.front() == ' ' || list.front() == ',')) list.remove_prefix(1);
        const std::size_t end = std::min(list.find(','), list.size());
        if (end > 0) non_existent.emplace_back(list.substr(0, end));
        list.remove_prefix(end);
      }
    }

    const auto pos = parse_pos(v[2].text);
    if (!v[0].quoted || !pos) throw Error(ErrorKind::SyntaxError, "bad Lemma or POS", line_no);
    Entry e{GaelicWord::from(v[0].text), *pos};
    e.irregular = v[1].text == "TRUE";
    if (!v[3].null) e.gender = v[3].text == "M" ? Gender::M : Gender::F;

    auto part = [&](std::string_view name, const SqlValue& value) {
      if (!value.null) return PartValue::present(GaelicWord::from(value.text));
      const bool gone = std::find(non_existent.begin(), non_existent.end(), name) != non_existent.end();
      return gone ? PartValue::non_existent() : PartValue::unknown();
    };
    switch (*pos) {
      case PartOfSpeech::Noun:
        e.np = part("NP", v[4]);
        e.gs = part("GS", v[5]);
        break;
      case PartOfSpeech::Adj:
        e.cp = part("CP", v[6]);
        break;
      case PartOfSpeech::Verb:
        e.vn = part("VN", v[7]);
        break;
    }
    out.push_back(std::move(e));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Tables

namespace {

std::string pad(const std::string& s, std::size_t width) {
  const std::size_t len = text::char_length(s);
  return len >= width ? s : s + std::string(width - len, ' ');
}

}  // namespace

std::string render_table(const TableRenderSpec& spec) {
  for (const auto& row : spec.rows)
    if (row.size() != spec.columns.size())
      throw Error(ErrorKind::LayoutMismatch, "row has " + std::to_string(row.size()) +
                                                 " cells, table has " +
                                                 std::to_string(spec.columns.size()) + " columns");
  std::string out;
  if (spec.style == TableStyle::Delimited) {
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "\t" : "") + cells[i];
      out += "\n";
    };
    line(spec.columns);
    for (const auto& row : spec.rows) line(row);
    return out;
  }

  std::vector<std::size_t> widths(spec.columns.size());
  for (std::size_t c = 0; c < spec.columns.size(); ++c) {
    widths[c] = text::char_length(spec.columns[c]);
    for (const auto& row : spec.rows) widths[c] = std::max(widths[c], text::char_length(row[c]));
  }
  // The label column is flush against its right border; the others get a
  // space on each side:  |case | singular  | plural     |
  auto line = [&](const std::vector<std::string>& cells, bool header) {
    out += "|";
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c == 0)
        out += header ? pad(cells[c], widths[c]) + " " : " " + pad(cells[c], widths[c]);
      else
        out += " " + pad(cells[c], widths[c]) + " ";
      out += "|";
    }
    out += "\n";
  };
  std::size_t inner = widths[0] + 1;
  for (std::size_t c = 1; c < widths.size(); ++c) inner += widths[c] + 3;
  const std::string rule = "+" + std::string(inner, '-') + "+\n";

  line(spec.columns, true);
  out += rule;
  for (const auto& row : spec.rows) line(row, false);
  out += rule;
  return out;
}

ParadigmCells successful_cells(const Paradigm& paradigm) {
  ParadigmCells out;
  for (const auto& [code, cell] : paradigm)
    if (!cell.error) out.emplace(code, cell.forms);
  return out;
}

ParadigmLayout layout_for(PartOfSpeech pos) {
  switch (pos) {
    case PartOfSpeech::Noun: return ParadigmLayout::NounTable;
    case PartOfSpeech::Verb: return ParadigmLayout::VerbTable;
    case PartOfSpeech::Adj: return ParadigmLayout::AdjRow;
  }
  return ParadigmLayout::NounTable;
}

namespace {

using Slot = std::optional<FormCode>;  // nullopt: no such form in this position

struct LayoutRow {
  std::string_view label;
  std::vector<Slot> slots;
};

struct Layout {
  PartOfSpeech pos;
  std::vector<std::string> columns;
  std::vector<LayoutRow> rows;
};

const Layout& layout(ParadigmLayout which) {
  using F = FormCode;
  static const Layout noun{PartOfSpeech::Noun,
                           {"case", "singular", "plural"},
                           {{"nom.", {F::NS, F::NP}},
                            {"gen.", {F::GS, F::GP}},
                            {"dat.", {F::DS, F::DP}},
                            {"voc.", {F::VS, F::VP}}}};
  static const Layout verb{PartOfSpeech::Verb,
                           {"form", "active", "passive", "dependent"},
                           {{"stem", {F::IMP2S, {}, {}}},
                            {"verbal noun", {F::VN, {}, {}}},
                            {"past participle", {F::PASTP, {}, {}}},
                            {"past", {F::PAST_IND, F::PAST_PASS, F::PAST_DEP}},
                            {"future", {F::FUT_IND, F::FUT_PASS, F::FUT_DEP}},
                            {"conditional 1sg", {F::COND1S_IND, F::COND_PASS, F::COND1S_DEP}},
                            {"conditional 1pl", {F::COND1P_IND, F::COND_PASS, F::COND1P_DEP}},
                            {"conditional 2/3", {F::COND23_IND, F::COND_PASS, F::COND23_DEP}},
                            {"relative future", {F::RELFUT, F::RELFUT_PASS, {}}},
                            {"imperative 1sg", {F::IMP1S, F::IMP_PASS, {}}},
                            {"imperative 2sg", {F::IMP2S, F::IMP_PASS, {}}},
                            {"imperative 3sg", {F::IMP3S, F::IMP_PASS, {}}},
                            {"imperative 1pl", {F::IMP1P, F::IMP_PASS, {}}},
                            {"imperative 2pl", {F::IMP2P, F::IMP_PASS, {}}},
                            {"imperative 3pl", {F::IMP3P, F::IMP_PASS, {}}}}};
  static const Layout adj{PartOfSpeech::Adj,
                          {"form", "positive", "comparative", "lenited"},
                          {{"adj.", {F::POS_ADJ, F::CP, F::POS_LENITED}}}};
  switch (which) {
    case ParadigmLayout::NounTable: return noun;
    case ParadigmLayout::VerbTable: return verb;
    case ParadigmLayout::AdjRow: return adj;
  }
  return noun;
}

}  // namespace

std::string render_paradigm(std::string_view title, const ParadigmCells& cells,
                            ParadigmLayout which, TableStyle style) {
  const Layout& l = layout(which);
  for (const auto& [code, forms] : cells)
    if (pos_of(code) != l.pos)
      throw Error(ErrorKind::LayoutMismatch,
                  std::string(to_string(code)) + " does not belong in a " +
                      std::string(to_string(l.pos)) + " table");

  TableRenderSpec spec{l.columns, {}, style};
  for (const LayoutRow& row : l.rows) {
    std::vector<std::string> out{std::string(row.label)};
    for (const Slot& slot : row.slots) {
      if (!slot) {
        out.emplace_back();
        continue;
      }
      const auto it = cells.find(*slot);
      if (it == cells.end() || it->second.empty()) {
        out.emplace_back("—");
        continue;
      }
      std::string joined;
      for (const auto& w : it->second) joined += (joined.empty() ? "" : " ") + w.str();
      out.push_back(std::move(joined));
    }
    spec.rows.push_back(std::move(out));
  }
  std::string rendered = render_table(spec);
  if (title.empty()) return rendered;
  return std::string(title) + "\n" + rendered;
}

}  // namespace gaelic
