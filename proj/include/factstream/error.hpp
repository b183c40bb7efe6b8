// Copyright 2026 The Factstream Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FACTSTREAM_ERROR_HPP_
#define FACTSTREAM_ERROR_HPP_

#include <stdexcept>

namespace factstream {

// Raised on any contract violation: malformed input files, invalid
// parameters, missing external scores.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace factstream

#endif  // FACTSTREAM_ERROR_HPP_
