#include "matroidwb/subset.hpp"

namespace matroidwb {

std::string to_string(Subset s) {
  std::string out = "{";
  bool first = true;
  for (int e : elements_of(s)) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

}  // namespace matroidwb
