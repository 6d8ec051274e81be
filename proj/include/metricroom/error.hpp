/*
  Copyright 2026 the metricroom authors

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

  http://www.apache.org/licenses/LICENSE-2.0

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.
*/

#ifndef METRICROOM_ERROR_HPP
#define METRICROOM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace metricroom {

enum class errc {
  ok = 0,
  invalid_argument,
  parse_error,
  point_not_in_domain,
  puncture_value,
  degenerate_pair,
  duplicate_puncture,
  empty_set,
  branch_cut,
  non_convergence,
  newton_divergence,
  resolution_error,
  out_of_field,
  radius_out_of_field,
  negative_density,
  not_simply_connected,
  not_hyperbolic,
  insufficient_complement_samples,
  io_error,
};

const char* errc_name(errc code);

/// Exception carrying a machine-readable error code; the C API maps
/// these to status values at the boundary.
class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw Error(code, what); }

} // namespace metricroom

#endif
