#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string_view>

#include "symchar/recursion.hpp"

namespace symchar {

enum class OutputFormat { kPretty, kCsv, kJson };

/// "pretty" | "csv" | "json"; throws std::invalid_argument otherwise.
OutputFormat parse_format(std::string_view name);

/// Streams the table row by row. Labels use the partition text format.
///   csv:    header ",<beta>,...", then "<alpha>,<values>..." with RFC 4180
///           quoting of labels that contain commas.
///   json:   {"n": N, "order": [labels], "values": [[decimal strings]]}
///   pretty: right-aligned columns.
void write_table(std::ostream& out, const CharTable& table, OutputFormat format);

/// Reads the json schema above. Throws std::runtime_error when the document
/// is malformed or its order is not the reverse-lex order of partitions of n.
CharTable read_json_table(std::istream& in);

/// Completed tables on disk, one file per n and format version.
class TableCache {
 public:
  static constexpr int kFormatVersion = 1;

  explicit TableCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  std::filesystem::path file_for(int n) const;
  /// Empty on a miss or on an unreadable/mismatched file.
  std::optional<CharTable> load(int n) const;
  /// Writes atomically (temp file + rename). Throws std::runtime_error on
  /// I/O failure.
  void store(const CharTable& table) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace symchar
