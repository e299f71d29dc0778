#pragma once

#include <string>
#include <utility>
#include <vector>

namespace starpoly {

/// One machine-readable result line:
///
///   kind=<kind> TAB <key>=<value> ... TAB verdict=<verdict> TAB payload=<text>
///
/// Field order is fixed. Tabs and newlines inside values are replaced by
/// spaces so a record is always exactly one line.
struct OutputRecord {
  std::string kind;
  std::vector<std::pair<std::string, std::string>> params;
  std::string verdict;
  std::string payload;

  std::string to_line() const;
};

}  // namespace starpoly
