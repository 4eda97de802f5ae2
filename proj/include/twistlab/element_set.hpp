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

#ifndef TWISTLAB_ELEMENT_SET_HPP
#define TWISTLAB_ELEMENT_SET_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace twistlab {

/// Index of an element in a finite algebra (or of a world in a frame).
using Elem = std::uint16_t;

/// Upper bound on the carrier of any algebra or frame handled as a bitmask.
inline constexpr std::size_t kMaxElements = 64;

/// A subset of {0, ..., 63}, stored as a bitmask. Used for filters, ideals,
/// up-sets and world sets alike.
class ElementSet {
public:
	constexpr ElementSet() = default;
	constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}
	ElementSet(std::initializer_list<Elem> elems) {
		for (Elem e : elems)
			insert(e);
	}

	static ElementSet from(std::span<const Elem> elems) {
		ElementSet s;
		for (Elem e : elems)
			s.insert(e);
		return s;
	}
	static constexpr ElementSet full(std::size_t n) {
		return ElementSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
	}

	constexpr bool contains(std::size_t e) const { return (bits_ >> e) & 1u; }
	constexpr void insert(std::size_t e) { bits_ |= std::uint64_t{1} << e; }
	constexpr void erase(std::size_t e) { bits_ &= ~(std::uint64_t{1} << e); }
	constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
	constexpr bool empty() const { return bits_ == 0; }
	constexpr std::uint64_t bits() const { return bits_; }

	constexpr bool subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }
	constexpr ElementSet operator&(ElementSet o) const { return ElementSet(bits_ & o.bits_); }
	constexpr ElementSet operator|(ElementSet o) const { return ElementSet(bits_ | o.bits_); }
	constexpr ElementSet minus(ElementSet o) const { return ElementSet(bits_ & ~o.bits_); }
	constexpr ElementSet complement(std::size_t n) const { return ElementSet(~bits_ & full(n).bits_); }
	constexpr auto operator<=>(const ElementSet &) const = default;

	std::vector<Elem> elements() const {
		std::vector<Elem> out;
		out.reserve(size());
		for (std::uint64_t b = bits_; b != 0; b &= b - 1)
			out.push_back(static_cast<Elem>(std::countr_zero(b)));
		return out;
	}

	template <typename F> void for_each(F &&f) const {
		for (std::uint64_t b = bits_; b != 0; b &= b - 1)
			f(static_cast<Elem>(std::countr_zero(b)));
	}

private:
	std::uint64_t bits_ = 0;
};

/// Canonical order used for reproducible listings: popcount first, then mask value.
inline bool canonical_less(ElementSet a, ElementSet b) {
	if (a.size() != b.size())
		return a.size() < b.size();
	return a.bits() < b.bits();
}

} // namespace twistlab

#endif
