#include "supmech/laurent.hpp"

#include <sstream>

namespace supmech {

std::string Laurent::str(const std::vector<std::string>& param_names) const {
  require(static_cast<int>(param_names.size()) == np_, "parameter name count mismatch");
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : t_) {
    std::string mono;
    for (int k = 0; k < np_; ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += param_names[k];
      if (e[k] != 1) mono += "^" + std::to_string(e[k]);
    }
    std::string cs = c.str();
    if (!first) os << " + ";
    first = false;
    if (mono.empty()) {
      os << cs;
    } else if (cs == "1") {
      os << mono;
    } else {
      os << "(" << cs << ")*" << mono;
    }
  }
  return os.str();
}

}  // namespace supmech
