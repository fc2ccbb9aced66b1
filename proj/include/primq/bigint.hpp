// Copyright 2026 The primq Authors
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

#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace primq {

/// Arbitrary precision unsigned integer used for group orders and exponents.
using BigUint = boost::multiprecision::cpp_int;

inline std::string to_string(const BigUint& v) { return v.str(); }

/// True when v fits in 64 bits.
inline bool fits_u64(const BigUint& v) {
  return v >= 0 && v <= BigUint(UINT64_MAX);
}

/// Narrowing conversion; throws UnsupportedSize when v does not fit.
std::uint64_t to_u64(const BigUint& v);

}  // namespace primq
