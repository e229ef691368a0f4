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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gaelic/rules.hpp"
#include "gaelic/svf.hpp"

namespace gaelic {

enum class SqlDialect {
  MySql,     // ENUM columns and AUTO_INCREMENT, as in the published schema
  Portable,  // check-constrained text columns; runs on SQLite
};

inline constexpr std::size_t kColumnWidth = 35;

/// CREATE TABLE Facal with the three-clause integrity CHECK.
std::string emit_ddl(SqlDialect dialect = SqlDialect::MySql);

struct InsertScript {
  std::string sql;
  std::vector<std::string> warnings;  // values too long for VARCHAR(35)
};

/// One INSERT per entry. "?" parts become NULL; "-" parts become NULL and
/// are listed in a trailing "-- non-existent:" comment.
InsertScript emit_inserts(std::span<const Entry> entries);

/// Reads back a script produced by emit_inserts. Throws Error(SyntaxError).
std::vector<Entry> parse_inserts(std::string_view sql);

enum class TableStyle { Ascii, Delimited };

/// Column 0 holds row labels. Every row has columns.size() cells.
struct TableRenderSpec {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  TableStyle style = TableStyle::Ascii;
};

/// Ascii style draws the bordered layout used for paradigm tables;
/// Delimited emits tab-separated lines with a header.
std::string render_table(const TableRenderSpec& spec);

enum class ParadigmLayout { NounTable, VerbTable, AdjRow };

using ParadigmCells = std::map<FormCode, std::vector<GaelicWord>>;

/// Cells that derived successfully; failed cells are left out.
ParadigmCells successful_cells(const Paradigm& paradigm);

ParadigmLayout layout_for(PartOfSpeech pos);

/// Variants share a cell separated by a space; absent or empty cells show
/// as "—". A non-empty title is printed on its own line first. Throws
/// Error(LayoutMismatch) when a cell does not belong to the layout.
std::string render_paradigm(std::string_view title, const ParadigmCells& cells,
                            ParadigmLayout layout, TableStyle style = TableStyle::Ascii);

}  // namespace gaelic
