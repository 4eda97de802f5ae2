/*
 *   Copyright 2026 The twistlab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Internal: table form of a structure and the batched valuation sweep.

#ifndef TWISTLAB_SRC_KERNEL_HPP
#define TWISTLAB_SRC_KERNEL_HPP

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "twistlab/semantics.hpp"

namespace twistlab::detail {

using Code = std::uint16_t;

/// Every operation of a structure as a lookup table over value codes
/// 0..m−1 (element indices, or carrier positions for twist-structures).
struct ValueAlgebra {
	std::size_t m = 0;
	std::vector<Code> conj, disj, imp; // m×m
	std::vector<Code> snot, box, dia;  // m, empty when unavailable
	Code bot = 0;
	std::vector<std::uint8_t> designated;
};

ValueAlgebra compile_structure(const Structure &s);
Value decode(const Structure &s, Code c);
Code encode(const Structure &s, const Value &v);

inline constexpr std::uint64_t kNoRefuter = std::numeric_limits<std::uint64_t>::max();

/// For formulas over exactly `vars` (sorted), the least refuting valuation
/// index in mixed radix (first variable most significant), or kNoRefuter.
/// Formulas must be desugared and language-checked.
std::vector<std::uint64_t> sweep(const ValueAlgebra &alg, const std::vector<std::string> &vars,
                                 std::span<const Formula> fs, int jobs);

} // namespace twistlab::detail

#endif
