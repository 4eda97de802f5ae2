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

#ifndef TWISTLAB_TWIST_HPP
#define TWISTLAB_TWIST_HPP

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "twistlab/heyting.hpp"
#include "twistlab/tba.hpp"

namespace twistlab {

using Pair = std::pair<Elem, Elem>;

enum class BaseKind : std::uint8_t { Heyting, Tba };
enum class TwistOp : std::uint8_t { And, Or, Imp, SNot, Bot, Box, Dia };

/// Tw(C, ∇, Δ): the pairs (a, b) over C with a∨b ∈ ∇ and a∧b ∈ Δ. The
/// carrier is sorted lexicographically and indexed densely.
class TwistStructure {
public:
	/// Heyting base: ∇ must be a filter containing F_d(C), Δ an ideal.
	static TwistStructure make(std::shared_ptr<const FiniteHeytingAlgebra> base, ElementSet nabla, ElementSet delta);
	/// TBA base: ∇ must be an open filter, Δ a closed ideal.
	static TwistStructure make(std::shared_ptr<const FiniteTBA> base, ElementSet nabla, ElementSet delta);

	BaseKind kind() const { return tba_ ? BaseKind::Tba : BaseKind::Heyting; }
	const FiniteHeytingAlgebra &base() const { return *lattice_; }
	/// Null for a Heyting base.
	const FiniteTBA *tba() const { return tba_.get(); }
	std::shared_ptr<const FiniteHeytingAlgebra> base_ptr() const { return lattice_; }
	std::shared_ptr<const FiniteTBA> tba_ptr() const { return tba_; }

	ElementSet nabla() const { return nabla_; }
	ElementSet delta() const { return delta_; }

	const std::vector<Pair> &carrier() const { return carrier_; }
	std::size_t size() const { return carrier_.size(); }
	bool contains(Pair p) const;
	/// Position of p in carrier(); -1 if absent.
	int index_of(Pair p) const;

	Pair bot() const { return {lattice_->bot(), lattice_->top()}; }
	Pair conj(Pair x, Pair y) const;
	Pair disj(Pair x, Pair y) const;
	Pair imp(Pair x, Pair y) const;
	Pair snot(Pair x) const { return {x.second, x.first}; }
	/// Throw LanguageError on a Heyting base.
	Pair box(Pair x) const;
	Pair dia(Pair x) const;

	std::string pair_label(Pair p) const;

private:
	TwistStructure() = default;
	void build();

	std::shared_ptr<const FiniteHeytingAlgebra> lattice_;
	std::shared_ptr<const FiniteTBA> tba_;
	ElementSet nabla_;
	ElementSet delta_;
	std::vector<Pair> carrier_;
	std::vector<int> index_;
};

TwistStructure full_twist(std::shared_ptr<const FiniteHeytingAlgebra> base);
TwistStructure full_twist(std::shared_ptr<const FiniteTBA> base);
TwistStructure tw(std::shared_ptr<const FiniteHeytingAlgebra> base, ElementSet nabla, ElementSet delta);
TwistStructure tw(std::shared_ptr<const FiniteTBA> base, ElementSet nabla, ElementSet delta);

/// Applies op to args (arity 0, 1 or 2 as appropriate). Throws
/// StructureError for non-member arguments and LanguageError for modal ops
/// over a Heyting base; the result is asserted to lie in the carrier.
Pair twist_apply(const TwistStructure &t, TwistOp op, std::span<const Pair> args);

/// ∇(T) = {a∨b} and Δ(T) = {a∧b} over the carrier.
ElementSet nabla_of(const TwistStructure &t);
ElementSet delta_of(const TwistStructure &t);

/// Closure of the carrier under every operation of the structure.
bool carrier_closed(const TwistStructure &t);

} // namespace twistlab

#endif
