#include "cli/cache.hpp"

#include <ctime>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ptcount::cli {

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void append_cache_record(const std::string& path, const CacheRecord& record) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot open cache file: " + path);
  out << record.stat << ',' << record.p << ',' << record.q << ','
      << record.method << ',' << record.value << ',' << record.timestamp
      << '\n';
}

std::vector<CacheRecord> read_cache_records(const std::string& path) {
  std::vector<CacheRecord> records;
  std::ifstream in(path);
  if (!in) return records;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    CacheRecord rec;
    std::string p_text, q_text;
    if (!std::getline(fields, rec.stat, ',') ||
        !std::getline(fields, p_text, ',') ||
        !std::getline(fields, q_text, ',') ||
        !std::getline(fields, rec.method, ',') ||
        !std::getline(fields, rec.value, ',') ||
        !std::getline(fields, rec.timestamp))
      throw std::runtime_error("malformed cache line: " + line);
    rec.p = std::stoi(p_text);
    rec.q = std::stoi(q_text);
    records.push_back(std::move(rec));
  }
  return records;
}

}  // namespace ptcount::cli
