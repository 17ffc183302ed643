#include "shatter/bitmask.hpp"

#include "shatter/errors.hpp"

namespace shatter {

Bitmask Bitmask::from_binary_string(const std::string& s) {
  Bitmask m(static_cast<int>(s.size()));
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[s.size() - 1 - i];
    if (c == '1')
      m.set(static_cast<int>(i));
    else if (c != '0')
      throw SyntaxError("invalid bitmask string: \"" + s + "\"");
  }
  return m;
}

}  // namespace shatter
