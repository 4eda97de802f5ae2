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

#ifndef TWISTLAB_ORDER_HPP
#define TWISTLAB_ORDER_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "twistlab/element_set.hpp"
#include "twistlab/heyting.hpp"

namespace twistlab {

using RelationPair = std::pair<std::size_t, std::size_t>;

/// A partial order on {0, ..., n−1}, stored as one up-set mask per element.
class FinitePoset {
public:
	FinitePoset() = default;

	/// Builds from explicit pairs (i ⩽ j). With closure, the reflexive
	/// transitive closure is taken first. Throws StructureError on failure.
	static FinitePoset from_relation(std::size_t n, std::span<const RelationPair> le, bool closure = false);
	/// ups[i] = {j | i ⩽ j}. Validated.
	static FinitePoset from_up_sets(std::vector<ElementSet> ups);
	static FinitePoset chain(std::size_t n);
	static FinitePoset antichain(std::size_t n);

	std::size_t size() const { return up_.size(); }
	bool leq(std::size_t x, std::size_t y) const { return up_[x].contains(y); }
	ElementSet up(std::size_t x) const { return up_[x]; }
	ElementSet down(std::size_t x) const { return down_[x]; }
	ElementSet worlds() const { return ElementSet::full(size()); }

	/// All pairs (i, j) with i ⩽ j, reflexive ones included, lexicographic.
	std::vector<RelationPair> pairs() const;
	/// Bit i·n+j is set iff i ⩽ j. Requires n ⩽ 8.
	std::uint64_t relation_bits() const;

	friend bool operator==(const FinitePoset &a, const FinitePoset &b) { return a.up_ == b.up_; }

private:
	std::vector<ElementSet> up_;
	std::vector<ElementSet> down_;
};

/// Checks reflexivity, antisymmetry and transitivity of the given pairs;
/// the report names the failing pair (or triple for transitivity).
std::optional<Violation> validate_poset(std::size_t n, std::span<const RelationPair> le, bool closure = false);

bool is_up_set(const FinitePoset &p, ElementSet s);

/// Every up-closed subset, sorted by (popcount, mask).
std::vector<ElementSet> up_sets(const FinitePoset &p);

/// Up-sets under ∩, ∪ and U→V = {x | ↑x ∩ U ⊆ V}; elements indexed in the
/// order of up_sets(p). Throws StructureError above 64 up-sets.
FiniteHeytingAlgebra heyting_from_poset(const FinitePoset &p);

/// Join-irreducibles of h, indexed in increasing element order, with
/// x ⩽ y iff j_y ⩽ j_x in h.
FinitePoset join_irreducible_poset(const FiniteHeytingAlgebra &h);
/// The join-irreducible elements themselves, in the same order.
std::vector<Elem> join_irreducibles(const FiniteHeytingAlgebra &h);

/// a ↦ {j | j ⩽ a} as an index into heyting_from_poset(join_irreducible_poset(h)).
std::vector<Elem> birkhoff_map(const FiniteHeytingAlgebra &h);

struct PosetEnumOptions {
	/// Only posets with exactly max_n elements.
	bool exact_size = false;
	/// Keep one representative (the first in enumeration order) per isomorphism class.
	bool up_to_iso = false;
};

/// Largest size accepted by the poset enumerator.
inline constexpr std::size_t kMaxEnumeratedPosetSize = 7;

/// Streams labeled posets of size 1..max_n (or exactly max_n), ordered by
/// size and then by relation_bits(). Throws ResourceError above 7.
void for_each_poset(std::size_t max_n, const PosetEnumOptions &opts, const std::function<void(const FinitePoset &)> &visit);
std::vector<FinitePoset> enumerate_posets(std::size_t max_n, const PosetEnumOptions &opts = {});

/// Least relation_bits() over all relabellings; equal iff isomorphic.
std::uint64_t canonical_form(const FinitePoset &p);

} // namespace twistlab

#endif
