#include "symchar/table_io.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace symchar {

OutputFormat parse_format(std::string_view name) {
  if (name == "pretty") return OutputFormat::kPretty;
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "json") return OutputFormat::kJson;
  throw std::invalid_argument("unknown format \"" + std::string(name) +
                              "\" (expected pretty, csv or json)");
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

void write_csv(std::ostream& out, const CharTable& t) {
  for (const auto& beta : t.order()) out << ',' << csv_field(to_string(beta));
  out << '\n';
  for (std::size_t r = 0; r < t.size(); ++r) {
    out << csv_field(to_string(t.order()[r]));
    for (const auto& v : t.row(r)) out << ',' << v;
    out << '\n';
  }
}

void write_json(std::ostream& out, const CharTable& t) {
  out << "{\"n\": " << t.n() << ", \"order\": [";
  for (std::size_t i = 0; i < t.size(); ++i)
    out << (i ? ", " : "") << nlohmann::json(to_string(t.order()[i])).dump();
  out << "], \"values\": [";
  for (std::size_t r = 0; r < t.size(); ++r) {
    out << (r ? ",\n  [" : "\n  [");
    const auto row = t.row(r);
    for (std::size_t c = 0; c < row.size(); ++c)
      out << (c ? ", \"" : "\"") << row[c] << '"';
    out << ']';
  }
  out << "\n]}\n";
}

void write_pretty(std::ostream& out, const CharTable& t) {
  const std::size_t size = t.size();
  auto label = [](const Partition& p) {
    const std::string s = to_string(p);
    return s.empty() ? std::string("()") : s;
  };
  std::size_t label_width = 0;
  for (const auto& p : t.order()) label_width = std::max(label_width, label(p).size());
  std::vector<std::size_t> width(size);
  for (std::size_t c = 0; c < size; ++c) {
    width[c] = label(t.order()[c]).size();
    for (std::size_t r = 0; r < size; ++r)
      width[c] = std::max(width[c], t(r, c).str().size());
  }
  auto pad = [&out](const std::string& s, std::size_t w) {
    out << std::string(w - s.size(), ' ') << s;
  };
  pad("", label_width);
  for (std::size_t c = 0; c < size; ++c) {
    out << "  ";
    pad(label(t.order()[c]), width[c]);
  }
  out << '\n';
  for (std::size_t r = 0; r < size; ++r) {
    pad(label(t.order()[r]), label_width);
    for (std::size_t c = 0; c < size; ++c) {
      out << "  ";
      pad(t(r, c).str(), width[c]);
    }
    out << '\n';
  }
}

}  // namespace

void write_table(std::ostream& out, const CharTable& table,
                 OutputFormat format) {
  switch (format) {
    case OutputFormat::kCsv:
      write_csv(out, table);
      break;
    case OutputFormat::kJson:
      write_json(out, table);
      break;
    case OutputFormat::kPretty:
      write_pretty(out, table);
      break;
  }
}

CharTable read_json_table(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("table json: ") + e.what());
  }
  try {
    const int n = doc.at("n").get<int>();
    if (n < 0) throw std::runtime_error("table json: negative n");
    PartitionIndex index(n);
    const auto& order = doc.at("order");
    if (order.size() != index.size())
      throw std::runtime_error("table json: order has " +
                               std::to_string(order.size()) + " labels, S_" +
                               std::to_string(n) + " has " +
                               std::to_string(index.size()) + " classes");
    for (std::size_t i = 0; i < index.size(); ++i)
      if (order[i].get<std::string>() != to_string(index[i]))
        throw std::runtime_error("table json: label " + std::to_string(i) +
                                 " is \"" + order[i].get<std::string>() +
                                 "\", expected \"" + to_string(index[i]) +
                                 "\"");
    const auto& rows = doc.at("values");
    if (rows.size() != index.size())
      throw std::runtime_error("table json: wrong number of rows");
    std::vector<BigInt> values;
    values.reserve(index.size() * index.size());
    for (const auto& row : rows) {
      if (row.size() != index.size())
        throw std::runtime_error("table json: ragged row");
      for (const auto& cell : row) values.emplace_back(cell.get<std::string>());
    }
    return CharTable(std::move(index), std::move(values));
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("table json: ") + e.what());
  } catch (const std::runtime_error&) {
    throw;
  } catch (const std::exception& e) {
    // cpp_int's string constructor rejects non-decimal cells.
    throw std::runtime_error(std::string("table json: bad value: ") + e.what());
  }
}

std::filesystem::path TableCache::file_for(int n) const {
  return dir_ / ("symchar-table-v" + std::to_string(kFormatVersion) + "-n" +
                 std::to_string(n) + ".json");
}

std::optional<CharTable> TableCache::load(int n) const {
  std::ifstream in(file_for(n));
  if (!in) return std::nullopt;
  try {
    CharTable t = read_json_table(in);
    if (t.n() != n) return std::nullopt;
    return t;
  } catch (const std::runtime_error&) {
    return std::nullopt;
  }
}

void TableCache::store(const CharTable& table) const {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec)
    throw std::runtime_error("cannot create cache directory " + dir_.string() +
                             ": " + ec.message());
  const auto target = file_for(table.n());
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    write_table(out, table, OutputFormat::kJson);
    if (!out) throw std::runtime_error("write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, target, ec);
  if (ec)
    throw std::runtime_error("cannot move cache file into place: " +
                             ec.message());
}

}  // namespace symchar
