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

#ifndef TWISTLAB_HEYTING_HPP
#define TWISTLAB_HEYTING_HPP

#include <optional>
#include <string>
#include <vector>

#include "twistlab/element_set.hpp"

namespace twistlab {

/// First law that failed during validation, with the offending elements.
struct Violation {
	std::string law;
	std::vector<std::size_t> witness;
	std::string message;
};

/// Raw operation tables of a finite Heyting algebra, row-major n×n.
struct HeytingTables {
	std::size_t size = 0;
	Elem bot = 0;
	std::vector<Elem> meet;
	std::vector<Elem> join;
	std::vector<Elem> imp;
};

/// Checks table shape, lattice laws, least element, residuation
/// (a∧b ⩽ c ⟺ a ⩽ b→c) and distributivity. Returns the first failure.
std::optional<Violation> validate_heyting(const HeytingTables &t);

/// A validated finite Heyting algebra. Elements are opaque indices; bot and
/// top are stored, not assumed to be 0 and n−1.
class FiniteHeytingAlgebra {
public:
	/// Throws StructureError naming the first violated law.
	explicit FiniteHeytingAlgebra(HeytingTables tables);

	std::size_t size() const { return t_.size; }
	Elem bot() const { return t_.bot; }
	Elem top() const { return top_; }
	Elem meet(Elem a, Elem b) const { return t_.meet[a * t_.size + b]; }
	Elem join(Elem a, Elem b) const { return t_.join[a * t_.size + b]; }
	Elem imp(Elem a, Elem b) const { return t_.imp[a * t_.size + b]; }
	Elem neg(Elem a) const { return neg_[a]; }
	bool leq(Elem a, Elem b) const { return up_[a].contains(b); }
	/// ↑a and ↓a.
	ElementSet up(Elem a) const { return up_[a]; }
	ElementSet down(Elem a) const { return down_[a]; }
	ElementSet all() const { return ElementSet::full(t_.size); }
	const HeytingTables &tables() const { return t_; }

	/// Optional display names (e.g. "bot", "heart", "1"); empty when unset.
	const std::vector<std::string> &labels() const { return labels_; }
	void set_labels(std::vector<std::string> labels);
	std::string label(Elem a) const;

private:
	HeytingTables t_;
	Elem top_ = 0;
	std::vector<Elem> neg_;
	std::vector<ElementSet> up_;
	std::vector<ElementSet> down_;
	std::vector<std::string> labels_;
};

/// The n-element chain 0 < 1 < ... < n−1 with the Gödel implication.
FiniteHeytingAlgebra chain_algebra(std::size_t n);

/// Index-range-checked negation ¬a = a → ⊥.
Elem neg(const FiniteHeytingAlgebra &h, std::size_t a);

bool is_filter(const FiniteHeytingAlgebra &h, ElementSet s);
bool is_ideal(const FiniteHeytingAlgebra &h, ElementSet s);

/// F_d(H). The three textbook characterisations of density are computed
/// separately and must agree.
ElementSet dense_filter(const FiniteHeytingAlgebra &h);

/// All filters (each is principal in a finite lattice), canonically ordered.
/// With require_dense only those containing F_d(H) are kept.
std::vector<ElementSet> filters(const FiniteHeytingAlgebra &h, bool require_dense = false);
std::vector<ElementSet> ideals(const FiniteHeytingAlgebra &h);

/// ¬¬a ∈ Δ for all a ∈ Δ. Throws StructureError if Δ is not an ideal.
bool is_closed_ideal(const FiniteHeytingAlgebra &h, ElementSet delta);

/// N(Δ) = {a | a ⩽ ¬¬b for some b ∈ Δ}, the least closed ideal above Δ.
ElementSet closure_N(const FiniteHeytingAlgebra &h, ElementSet delta);

/// Both a∨¬a = 1 for all a and F_d = {1} are computed and must agree.
bool is_boolean(const FiniteHeytingAlgebra &h);

/// The subalgebra on `carrier`, relabelled densely in increasing index
/// order. `embedding[i]` is the element of h behind new index i. Throws
/// StructureError if carrier is not closed under the operations.
FiniteHeytingAlgebra subalgebra(const FiniteHeytingAlgebra &h, ElementSet carrier, std::vector<Elem> *embedding = nullptr);

/// True iff `map` (indexed by elements of a) is a bijection onto b that
/// preserves ∧, ∨, → and ⊥.
bool is_isomorphism(const FiniteHeytingAlgebra &a, const FiniteHeytingAlgebra &b, const std::vector<Elem> &map);

} // namespace twistlab

#endif
