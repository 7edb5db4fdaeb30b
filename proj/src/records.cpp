#include "planar/records.hpp"

#include <json.hpp>

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace planar {

OutputRecord make_record(const CountKey& key, MemoTable& memo) {
  return {key.d, key.r, key.s, key.theta, to_decimal(n_planar(key, memo))};
}

std::vector<CountKey> on_shell_keys(int max_d) {
  std::vector<CountKey> keys;
  for (int d = 1; d <= max_d; ++d)
    for (int s = 0; s <= 3; ++s)
      for (int theta = 0; theta <= 3; ++theta)
        if (int r = 3 * d + 2 - 2 * s - theta; r >= 0) keys.push_back({d, r, s, theta});
  std::sort(keys.begin(), keys.end());
  return keys;
}

std::vector<OutputRecord> table_records(int max_d, MemoTable& memo) {
  std::vector<OutputRecord> records;
  for (const auto& key : on_shell_keys(max_d)) records.push_back(make_record(key, memo));
  return records;
}

void write_records(std::ostream& out, const std::vector<OutputRecord>& records, OutputFormat format) {
  if (format == OutputFormat::kCsv) {
    out << "d,r,s,theta,count\n";
    for (const auto& rec : records)
      out << rec.d << ',' << rec.r << ',' << rec.s << ',' << rec.theta << ',' << rec.count << '\n';
    return;
  }
  nlohmann::ordered_json array = nlohmann::ordered_json::array();
  for (const auto& rec : records) {
    array.push_back({{"d", rec.d}, {"r", rec.r}, {"s", rec.s}, {"theta", rec.theta}, {"count", rec.count}});
  }
  out << array.dump(2) << '\n';
}

std::vector<OutputRecord> parse_csv_records(std::istream& in) {
  std::vector<OutputRecord> records;
  std::string line;
  if (!std::getline(in, line) || line != "d,r,s,theta,count")
    throw std::invalid_argument("missing CSV header");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    OutputRecord rec;
    char c1, c2, c3, c4;
    if (!(fields >> rec.d >> c1 >> rec.r >> c2 >> rec.s >> c3 >> rec.theta >> c4 >> rec.count) ||
        c1 != ',' || c2 != ',' || c3 != ',' || c4 != ',')
      throw std::invalid_argument("malformed CSV row: " + line);
    parse_decimal(rec.count);
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<OutputRecord> parse_json_records(std::istream& in) {
  const auto doc = nlohmann::json::parse(in);
  std::vector<OutputRecord> records;
  for (const auto& obj : doc) {
    OutputRecord rec{obj.at("d").get<int>(), obj.at("r").get<int>(), obj.at("s").get<int>(),
                     obj.at("theta").get<int>(), obj.at("count").get<std::string>()};
    parse_decimal(rec.count);
    records.push_back(std::move(rec));
  }
  return records;
}

}  // namespace planar
