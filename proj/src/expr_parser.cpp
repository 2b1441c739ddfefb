#include "expr_parser.hpp"

#include <cctype>

namespace chernratio::detail {

std::string normalize_expression(std::string_view text, const std::vector<std::string>& drop) {
  static const std::string kMinus = "\xE2\x88\x92";  // U+2212
  static const std::string kSigma = "\xCF\x83";      // U+03C3
  std::string out;
  for (std::size_t i = 0; i < text.size();) {
    if (text.substr(i, kMinus.size()) == kMinus) {
      out.push_back('-');
      i += kMinus.size();
      continue;
    }
    if (text.substr(i, kSigma.size()) == kSigma) {
      out.push_back('s');
      i += kSigma.size();
      continue;
    }
    if (text.substr(i, 6) == "\\sigma") {
      out.push_back('s');
      i += 6;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    bool dropped = false;
    for (const auto& d : drop) {
      if (!d.empty() && text.substr(i, d.size()) == d) {
        i += d.size();
        dropped = true;
        break;
      }
    }
    if (!dropped) out.push_back(text[i++]);
  }
  return out;
}

}  // namespace chernratio::detail
