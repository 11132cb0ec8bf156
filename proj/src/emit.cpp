// SPDX-License-Identifier: Apache-2.0
#include "runpat/emit.hpp"

#include <json.hpp>

namespace runpat {

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.emplace_back(text.substr(start));
      return parts;
    }
    parts.emplace_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

bool is_integral(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

void write_csv(std::ostream& out, std::string_view key_cols, std::string_view value_prefix,
               const std::vector<ValueRecord>& records, int digits) {
  out << key_cols << ',' << value_prefix << "_decimal," << value_prefix << "_num,"
      << value_prefix << "_den\n";
  for (const ValueRecord& record : records) {
    out << record.key << ',' << decimal_string(record.value, digits) << ','
        << record.value.get_num().get_str() << ',' << record.value.get_den().get_str() << '\n';
  }
}

std::string render_json(const std::vector<MetaEntry>& meta, std::string_view key_cols,
                        std::string_view value_prefix, const std::vector<ValueRecord>& records,
                        int digits) {
  nlohmann::ordered_json root;
  nlohmann::ordered_json meta_json;
  for (const MetaEntry& entry : meta) {
    if (entry.numeric)
      meta_json[entry.key] = nlohmann::ordered_json::parse(entry.value);
    else
      meta_json[entry.key] = entry.value;
  }
  root["meta"] = std::move(meta_json);

  const auto key_names = split(key_cols, ',');
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  const std::string prefix(value_prefix);
  for (const ValueRecord& record : records) {
    nlohmann::ordered_json row;
    const auto key_values = split(record.key, ',');
    for (std::size_t i = 0; i < key_names.size() && i < key_values.size(); ++i) {
      if (is_integral(key_values[i]))
        row[key_names[i]] = std::stoll(key_values[i]);
      else
        row[key_names[i]] = key_values[i];
    }
    row[prefix + "_decimal"] = decimal_string(record.value, digits);
    row[prefix + "_num"] = record.value.get_num().get_str();
    row[prefix + "_den"] = record.value.get_den().get_str();
    rows.push_back(std::move(row));
  }
  root["records"] = std::move(rows);
  return root.dump(2) + "\n";
}

}  // namespace runpat
