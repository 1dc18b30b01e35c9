#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace treewalk {

/// Failure categories raised by the library. The CLI maps these onto exit codes.
enum class errc {
  division_by_zero,
  parse,
  invalid_degree,
  out_of_range,
  not_invertible,
  unsupported_radicand,
  not_divisible,
  degenerate_weights,
  invalid_path,
  decomposition_domain,
  validation,
  usage,
  feasibility,
};

std::string_view to_string(errc code) noexcept;

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace treewalk
