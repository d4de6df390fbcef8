#include "fluctab/base.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace fluctab {

bool is_weakly_decreasing(const Part& p) {
  for (size_t i = 1; i < p.size(); ++i)
    if (p[i - 1] < p[i]) return false;
  return true;
}

Part sort_weights(Part alpha) {
  std::sort(alpha.begin(), alpha.end(), std::greater<int>());
  return alpha;
}

Part add(const Part& a, const Part& b) {
  Part out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Part sub(const Part& a, const Part& b) {
  Part out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

std::string part_to_string(const Part& p) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) os << ',';
    os << p[i];
  }
  os << ')';
  return os.str();
}

}  // namespace fluctab
