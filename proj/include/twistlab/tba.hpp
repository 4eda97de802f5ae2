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

#ifndef TWISTLAB_TBA_HPP
#define TWISTLAB_TBA_HPP

#include <optional>
#include <vector>

#include "twistlab/heyting.hpp"
#include "twistlab/order.hpp"

namespace twistlab {

/// Boolean algebra laws plus □1 = 1, □(a∧b) = □a∧□b, □a ⩽ a, □a ⩽ □□a.
std::optional<Violation> validate_tba(const HeytingTables &t, const std::vector<Elem> &box);

/// A topological Boolean algebra: a Boolean algebra with an interior operator.
/// Only □ is stored; ◇a = ¬□¬a is computed.
class FiniteTBA {
public:
	/// Throws StructureError naming the first violated law.
	FiniteTBA(FiniteHeytingAlgebra algebra, std::vector<Elem> box);

	const FiniteHeytingAlgebra &algebra() const { return h_; }
	std::size_t size() const { return h_.size(); }
	Elem bot() const { return h_.bot(); }
	Elem top() const { return h_.top(); }
	Elem meet(Elem a, Elem b) const { return h_.meet(a, b); }
	Elem join(Elem a, Elem b) const { return h_.join(a, b); }
	Elem imp(Elem a, Elem b) const { return h_.imp(a, b); }
	Elem neg(Elem a) const { return h_.neg(a); }
	bool leq(Elem a, Elem b) const { return h_.leq(a, b); }
	Elem box(Elem a) const { return box_[a]; }
	Elem dia(Elem a) const { return h_.neg(box_[h_.neg(a)]); }
	const std::vector<Elem> &box_table() const { return box_; }

private:
	FiniteHeytingAlgebra h_;
	std::vector<Elem> box_;
};

/// The powerset of the poset's points with □S = {x | ↑x ⊆ S}. Elements are
/// subsets ordered by (popcount, mask); requires at most 6 points.
FiniteTBA powerset_tba(const FinitePoset &p);
/// The subset of points behind each element of powerset_tba(p).
std::vector<ElementSet> powerset_elements(const FinitePoset &p);

/// Box equal to the identity on a Boolean algebra.
FiniteTBA discrete_tba(const FiniteHeytingAlgebra &boolean_algebra);

Elem diamond(const FiniteTBA &b, Elem a);

/// G(B) = {a | □a = a}.
ElementSet open_elements(const FiniteTBA &b);

/// G(B) with inherited ∧, ∨, ⊥ and a →_G b = □(a → b). `embedding[i]` is
/// the element of B behind index i (increasing order).
FiniteHeytingAlgebra open_algebra(const FiniteTBA &b, std::vector<Elem> *embedding = nullptr);

struct SOfResult {
	FiniteTBA tba;
	/// iso[a] is the open element of tba corresponding to a.
	std::vector<Elem> iso;
};

/// s(A) realised as the powerset TBA over the join-irreducibles of A.
/// Verifies that iso is a Heyting isomorphism A ≅ G(s(A)) and that the
/// open elements generate s(A); throws InvariantViolation otherwise.
SOfResult s_of(const FiniteHeytingAlgebra &a);

/// Closure of `gens` under ∧, ∨, ¬ and the constants.
ElementSet generated_boolean_subalgebra(const FiniteTBA &b, ElementSet gens);

bool is_open_filter(const FiniteTBA &b, ElementSet s);
bool is_closed_ideal(const FiniteTBA &b, ElementSet s);
/// Filter (ideal) of G(B), given as a set of open elements of B.
bool is_g_filter(const FiniteTBA &b, ElementSet s);
bool is_g_ideal(const FiniteTBA &b, ElementSet s);

/// F_□(B): the principal filters ↑a with a open. Canonically ordered.
std::vector<ElementSet> open_filters(const FiniteTBA &b);
/// I_◇(B): the principal ideals ↓a with ◇a = a. Canonically ordered.
std::vector<ElementSet> closed_ideals(const FiniteTBA &b);

/// δ(∇) = ∇ ∩ G(B). Throws StructureError unless ∇ is an open filter.
ElementSet delta_map(const FiniteTBA &b, ElementSet nabla);
/// ρ(∇′) = {x | □x ∈ ∇′}. Throws StructureError unless ∇′ is a filter of G(B).
ElementSet rho_map(const FiniteTBA &b, ElementSet g_filter);
/// σ(Δ) = {x | x ⩽ ◇y for some y ∈ Δ}; Δ an ideal of B or of G(B).
ElementSet sigma_map(const FiniteTBA &b, ElementSet delta);

struct GrzResult {
	bool holds = true;
	/// Least element a with □(□(a→□a)→a)→a ≠ 1.
	std::optional<Elem> witness;
};

GrzResult satisfies_grz(const FiniteTBA &b);

} // namespace twistlab

#endif
