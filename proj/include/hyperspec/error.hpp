#ifndef HYPERSPEC_ERROR_HPP
#define HYPERSPEC_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperspec {

enum class Errc {
  index_out_of_range,
  catalyst_vertex,
  empty_hyperedge,
  isolated_vertex,
  invalid_parameters,
  degenerate_size,
  validation_failure,
  non_symmetric_input,
  order_mismatch,
  vertex_set_mismatch,
  unbounded_test_function,
  empty_keep_set,
  row_difference_exceeds_c,
  generation_failure,
  empty_list,
  unsupported_family_operator,
  unknown_limit,
  parse_error,
};

std::string_view to_string(Errc code);

// Single exception type for the library; callers switch on code().
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace hyperspec

#endif
