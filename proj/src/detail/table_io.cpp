#include "detail/table_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "zetalaurent/errors.hpp"

namespace zl::detail {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

long long parse_int(std::string_view s, const char* what) {
  s = trim(s);
  long long out = 0;
  std::size_t used = 0;
  try {
    out = std::stoll(std::string(s), &used);
  } catch (const std::exception&) {
    throw FormatError(std::string("malformed ") + what + ": '" + std::string(s) + "'");
  }
  if (used != s.size()) throw FormatError(std::string("malformed ") + what + ": '" + std::string(s) + "'");
  return out;
}

void check_shape(const RawTable& t) {
  if (t.precision_bits < 1) throw FormatError("precision_bits must be positive");
  if (t.n_max < 0) throw FormatError("n_max must be nonnegative");
  if (t.values.size() != static_cast<std::size_t>(t.n_max) + 1) {
    throw TableError("table declares n_max=" + std::to_string(t.n_max) + " but has " +
                     std::to_string(t.values.size()) + " values");
  }
}

RawTable read_json(std::string_view text, const std::string& tag_key) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("invalid JSON table: ") + e.what());
  }
  if (!doc.is_object()) throw FormatError("table must be a JSON object");
  for (const char* key : {"precision_bits", "n_max", "values"}) {
    if (!doc.contains(key)) throw FormatError(std::string("table is missing '") + key + "'");
  }
  if (!doc.contains(tag_key) || !doc[tag_key].is_string()) {
    throw FormatError("table is missing string field '" + tag_key + "'");
  }
  if (!doc["precision_bits"].is_number_integer() || !doc["n_max"].is_number_integer()) {
    throw FormatError("precision_bits and n_max must be integers");
  }
  if (!doc["values"].is_array()) throw FormatError("values must be an array");

  RawTable t;
  t.tag_key = tag_key;
  t.tag_value = doc[tag_key].get<std::string>();
  t.precision_bits = doc["precision_bits"].get<long long>();
  t.n_max = static_cast<int>(doc["n_max"].get<long long>());
  for (const auto& v : doc["values"]) {
    if (!v.is_string()) throw FormatError("table values must be decimal strings");
    t.values.push_back(v.get<std::string>());
  }
  check_shape(t);
  return t;
}

RawTable read_csv(std::string_view text, const std::string& tag_key) {
  RawTable t;
  t.tag_key = tag_key;
  bool have_tag = false;
  bool have_prec = false;
  bool have_header = false;
  long long declared_n_max = -1;

  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const std::string_view view = trim(line);
    if (view.empty()) continue;
    if (view.front() == '#') {
      const std::string_view body = trim(view.substr(1));
      const auto eq = body.find('=');
      if (eq == std::string_view::npos) continue;
      const std::string_view key = trim(body.substr(0, eq));
      const std::string_view value = trim(body.substr(eq + 1));
      if (key == tag_key) {
        t.tag_value = std::string(value);
        have_tag = true;
      } else if (key == "precision_bits") {
        t.precision_bits = parse_int(value, "precision_bits");
        have_prec = true;
      } else if (key == "n_max") {
        declared_n_max = parse_int(value, "n_max");
      }
      continue;
    }
    if (!have_header) {
      if (view != "n,value") throw FormatError("expected CSV header 'n,value', got '" + std::string(view) + "'");
      have_header = true;
      continue;
    }
    const auto comma = view.find(',');
    if (comma == std::string_view::npos) throw FormatError("malformed CSV row: '" + std::string(view) + "'");
    const long long index = parse_int(view.substr(0, comma), "row index");
    if (index != static_cast<long long>(t.values.size())) {
      throw FormatError("CSV rows must be indexed 0, 1, 2, ...; got " + std::to_string(index));
    }
    t.values.emplace_back(trim(view.substr(comma + 1)));
  }
  if (!have_header) throw FormatError("CSV table has no 'n,value' header");
  if (!have_tag) throw FormatError("CSV table is missing '# " + tag_key + "=...'");
  if (!have_prec) throw FormatError("CSV table is missing '# precision_bits=...'");
  if (t.values.empty()) throw TableError("CSV table has no rows");
  t.n_max = declared_n_max >= 0 ? static_cast<int>(declared_n_max) : static_cast<int>(t.values.size()) - 1;
  check_shape(t);
  return t;
}

}  // namespace

std::string write_json(const RawTable& table) {
  ordered_json doc;
  doc[table.tag_key] = table.tag_value;
  doc["precision_bits"] = table.precision_bits;
  doc["n_max"] = table.n_max;
  doc["values"] = table.values;
  return doc.dump(2) + "\n";
}

std::string write_csv(const RawTable& table) {
  std::string out;
  out += "# " + table.tag_key + "=" + table.tag_value + "\n";
  out += "# precision_bits=" + std::to_string(table.precision_bits) + "\n";
  out += "# n_max=" + std::to_string(table.n_max) + "\n";
  out += "n,value\n";
  for (std::size_t i = 0; i < table.values.size(); ++i) {
    out += std::to_string(i) + "," + table.values[i] + "\n";
  }
  return out;
}

RawTable read_table(std::string_view text, const std::string& tag_key) {
  const std::string_view body = trim(text);
  if (!body.empty() && body.front() == '{') return read_json(body, tag_key);
  return read_csv(text, tag_key);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << contents;
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace zl::detail
