#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ptcount/big_count.hpp"

namespace ptcount::cli {

/// Sequence names accepted by the bfile subcommand.
const std::vector<std::string>& bfile_statistics();

/// k-th term (1-based) of the named sequence; throws on an unknown name.
BigCount bfile_value(const std::string& stat, int k);

/// Writes `count` lines of the form "k value\n".
void write_bfile(std::ostream& out, const std::string& stat, int count);

}  // namespace ptcount::cli
