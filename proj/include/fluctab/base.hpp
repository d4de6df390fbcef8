#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace fluctab {

// Error codes cover every failure mode the library reports. The CLI maps
// bad_input to exit 1 and everything else to exit 2.
enum class Errc {
  not_a_partition,
  bad_letter,
  index_out_of_range,
  invalid_step,
  malformed_marking,
  not_a_bijection,
  not_rectangular,
  inconsistent,
  bad_input,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg, int index = -1)
      : std::runtime_error(msg), code_(code), index_(index) {}

  Errc code() const { return code_; }
  // Step or prefix position the failure refers to, -1 if not applicable.
  int index() const { return index_; }

 private:
  Errc code_;
  int index_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg, int index = -1) {
  throw Error(code, msg, index);
}

inline void check(bool cond, Errc code, const std::string& msg, int index = -1) {
  if (!cond) fail(code, msg, index);
}

// A generalized partition: weakly decreasing integer tuple, one entry per row.
// Entries may be negative.
using Part = std::vector<int>;

bool is_weakly_decreasing(const Part& p);

// Weakly decreasing rearrangement of an arbitrary integer tuple.
Part sort_weights(Part alpha);

inline Part zero_part(int rows) { return Part(rows, 0); }

Part add(const Part& a, const Part& b);
Part sub(const Part& a, const Part& b);

std::string part_to_string(const Part& p);

}  // namespace fluctab
