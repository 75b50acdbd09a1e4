#pragma once

#include <string>
#include <vector>

namespace ptcount::cli {

struct TableRow {
  std::string permutation;
  std::string profile;
  std::string note;  // set only on cells the reference table misprints
};

/// Every permutation of S_n in lexicographic order together with the profile
/// word of its partial transpose at shape (p, n/p). Throws when n > 8 or when
/// p does not divide n.
std::vector<TableRow> profile_table(int n, int p);

std::string render_table(const std::vector<TableRow>& rows);

}  // namespace ptcount::cli
