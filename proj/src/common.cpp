#include "invtopos/common.hpp"

#include <sstream>

namespace invtopos {

std::string format_witness(Witness const& w) {
  std::ostringstream out;
  out << w.code;
  if (!w.parts.empty()) {
    out << "(" << join_names(w.parts) << ")";
  }
  if (!w.detail.empty()) {
    out << ": " << w.detail;
  }
  return out.str();
}

ValidationError::ValidationError(Witness w)
    : std::runtime_error(format_witness(w)), witness_(std::move(w)) {}

std::string join_names(std::vector<std::string> const& names, char sep) {
  std::string out;
  for (size_t i = 0; i < names.size(); ++i) {
    if (i > 0) {
      out += sep;
    }
    out += names[i];
  }
  return out;
}

}  // namespace invtopos
