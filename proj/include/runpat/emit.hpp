// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "runpat/rational.hpp"

namespace runpat {

// One output row: a pre-rendered key (single value or comma-joined composite)
// and the exact value it carries.
struct ValueRecord {
  std::string key;
  Rational value;
};

// One metadata entry for the JSON header; numeric entries are emitted as JSON
// numbers/booleans verbatim, the rest as strings.
struct MetaEntry {
  std::string key;
  std::string value;
  bool numeric = false;
};

// Header "<key_cols>,<prefix>_decimal,<prefix>_num,<prefix>_den", one row per
// record, decimals rendered with `digits` significant digits.
void write_csv(std::ostream& out, std::string_view key_cols, std::string_view value_prefix,
               const std::vector<ValueRecord>& records, int digits);

// {"meta": {…}, "records": [{…}, …]} mirroring the CSV schema. key_cols may
// be composite ("d,t"); the key string is split accordingly. Integral key
// fields are emitted as JSON numbers.
std::string render_json(const std::vector<MetaEntry>& meta, std::string_view key_cols,
                        std::string_view value_prefix, const std::vector<ValueRecord>& records,
                        int digits);

}  // namespace runpat
