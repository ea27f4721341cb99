#pragma once

#include <stdexcept>
#include <string>

namespace mosaic {

enum class errc {
  ok = 0,
  invalid_params,
  index_range,
  dimension_mismatch,
  singular_bond,
  eigensolver_failure,
  rg_domain,
  io_failure,
  parse_failure,
  unknown_preset,
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace mosaic
