#include "flagcurv/hermitian_geometry.hpp"

#include <algorithm>

namespace flagcurv {

std::string GrayHervellaClass::label() const {
  if (kaehler()) return "Kähler";
  std::string out;
  const bool parts[3] = {w1, w2, w3};
  for (int i = 0; i < 3; ++i) {
    if (!parts[i]) continue;
    if (!out.empty()) out += "⊕";
    out += "W" + std::to_string(i + 1);
  }
  return out;
}

GrayHervellaClass GrayHervellaClass::parse(std::string_view text) {
  std::string s(text);
  if (s == "Kähler" || s == "Kahler" || s == "kahler" || s == "K") return {};
  GrayHervellaClass c;
  std::size_t i = 0;
  bool any = false;
  while (i < s.size()) {
    if (s[i] == 'W' || s[i] == 'w') {
      if (i + 1 >= s.size()) break;
      switch (s[i + 1]) {
        case '1': c.w1 = true; break;
        case '2': c.w2 = true; break;
        case '3': c.w3 = true; break;
        default: throw std::invalid_argument("unknown Gray-Hervella class '" + s + "'");
      }
      any = true;
      i += 2;
    } else if (s[i] == '+' || s[i] == ',' || s[i] == ' ') {
      ++i;
    } else if (s.compare(i, 3, "⊕") == 0) {
      i += 3;
    } else {
      throw std::invalid_argument("unknown Gray-Hervella class '" + s + "'");
    }
  }
  if (!any) throw std::invalid_argument("unknown Gray-Hervella class '" + s + "'");
  return c;
}

}  // namespace flagcurv
