#pragma once

#include "planar/recursion.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace planar {

struct OutputRecord {
  int d = 0, r = 0, s = 0, theta = 0;
  std::string count;  // decimal BigCount

  friend auto operator<=>(const OutputRecord&, const OutputRecord&) = default;
};

enum class OutputFormat { kCsv, kJson };

OutputRecord make_record(const CountKey& key, MemoTable& memo);

/// All on-shell keys with s, theta in [0, 3] and r >= 0 for 1 <= d <= max_d,
/// sorted by (d, r, s, theta).
std::vector<CountKey> on_shell_keys(int max_d);

std::vector<OutputRecord> table_records(int max_d, MemoTable& memo);

/// CSV: header "d,r,s,theta,count" then one line per record.
/// JSON: array of {"d","r","s","theta","count"} objects, count as a string.
void write_records(std::ostream& out, const std::vector<OutputRecord>& records, OutputFormat format);

std::vector<OutputRecord> parse_csv_records(std::istream& in);
std::vector<OutputRecord> parse_json_records(std::istream& in);

}  // namespace planar
