#include "cli/table.hpp"

#include <stdexcept>

#include "ptcount/enumeration.hpp"
#include "ptcount/partial_transpose.hpp"

namespace ptcount::cli {

std::vector<TableRow> profile_table(int n, int p) {
  if (n < 1 || n > 8)
    throw std::invalid_argument("table is limited to n <= 8");
  if (p < 1 || n % p != 0)
    throw std::invalid_argument("p must divide n");
  const BlockShape shape(p, n / p);
  std::vector<TableRow> rows;
  LexPermutationStream stream(n);
  Permutation pi = Permutation::identity(n);
  while (stream.next(pi)) {
    TableRow row;
    row.permutation = pi.to_string();
    row.profile =
        profile(inner_partial_transpose(BinaryMatrix::from_permutation(pi), shape))
            .to_string();
    if (n == 4 && p == 2) {
      // Two cells of the widely reproduced reference table for this shape are
      // misprints; flag the corrected values.
      if (row.permutation == "3124")
        row.note = "corrected cell: the reference table misprints this entry as a "
                   "second 3142; direct evaluation gives 3124 -> 2314";
      else if (row.permutation == "1342")
        row.note = "corrected cell: the reference table prints 1432 here; direct "
                   "evaluation gives 1342 -> 1423";
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string render_table(const std::vector<TableRow>& rows) {
  std::string out;
  for (const TableRow& row : rows) {
    out += row.permutation;
    out += ',';
    out += row.profile;
    if (!row.note.empty()) {
      out += "   # ";
      out += row.note;
    }
    out += '\n';
  }
  return out;
}

}  // namespace ptcount::cli
