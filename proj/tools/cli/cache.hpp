#pragma once

#include <string>
#include <vector>

namespace ptcount::cli {

/// One line of the result cache: stat,p,q,method,value,timestamp with the
/// value as a decimal string of any length.
struct CacheRecord {
  std::string stat;
  int p = 0;
  int q = 0;
  std::string method;
  std::string value;
  std::string timestamp;
};

std::string utc_timestamp();

/// Appends one record, creating the file when missing.
void append_cache_record(const std::string& path, const CacheRecord& record);

/// Missing file yields an empty list; malformed lines throw.
std::vector<CacheRecord> read_cache_records(const std::string& path);

}  // namespace ptcount::cli
