// Copyright 2026 The ordtop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ORDTOP_TESTS_TEST_UTIL_HPP
#define ORDTOP_TESTS_TEST_UTIL_HPP

#include <functional>

#include <gtest/gtest.h>

#include "ordtop/error.hpp"

namespace ordtop {

inline ErrorCode code_of(const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an ordtop::Error";
  return ErrorCode::ParseError;
}

}  // namespace ordtop

#endif  // ORDTOP_TESTS_TEST_UTIL_HPP
