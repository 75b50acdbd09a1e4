#include "cli/bfile.hpp"

#include <ostream>
#include <stdexcept>

#include "ptcount/combinatorics.hpp"
#include "ptcount/formulas.hpp"

namespace ptcount::cli {

const std::vector<std::string>& bfile_statistics() {
  static const std::vector<std::string> names = {
      "zt-diag-half", "zt-square", "z2", "ze2-corrected", "telephone"};
  return names;
}

BigCount bfile_value(const std::string& stat, int k) {
  if (k < 1) throw std::invalid_argument("sequence index must be >= 1");
  if (stat == "zt-diag-half") return zt_corollaries(k).rectangle / 2;
  if (stat == "zt-square") return zt_corollaries(k).square;
  if (stat == "z2") return z2_closed(k);
  if (stat == "ze2-corrected") return ze2_closed(k, Ze2Variant::corrected);
  if (stat == "telephone") return telephone(k);
  throw std::invalid_argument("unknown sequence: " + stat);
}

void write_bfile(std::ostream& out, const std::string& stat, int count) {
  for (int k = 1; k <= count; ++k)
    out << k << ' ' << to_decimal(bfile_value(stat, k)) << '\n';
}

}  // namespace ptcount::cli
