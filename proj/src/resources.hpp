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

#ifndef FACTSTREAM_SRC_RESOURCES_HPP_
#define FACTSTREAM_SRC_RESOURCES_HPP_

#include <string_view>

// Data files under data/ compiled into the library (see cmake/embed.cmake).
namespace factstream::resources {

std::string_view WordlistTsv();
std::string_view StopwordsTxt();
std::string_view GazetteerTsv();

}  // namespace factstream::resources

#endif  // FACTSTREAM_SRC_RESOURCES_HPP_
