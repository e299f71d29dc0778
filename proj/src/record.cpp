#include "starpoly/record.hpp"

namespace starpoly {

namespace {

std::string clean(std::string s) {
  for (char& c : s)
    if (c == '\t' || c == '\n' || c == '\r') c = ' ';
  return s;
}

}  // namespace

std::string OutputRecord::to_line() const {
  std::string line = "kind=" + clean(kind);
  for (const auto& [k, v] : params) line += '\t' + clean(k) + '=' + clean(v);
  line += "\tverdict=" + clean(verdict);
  line += "\tpayload=" + clean(payload);
  return line;
}

}  // namespace starpoly
