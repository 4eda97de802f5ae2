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

#ifndef TWISTLAB_OPENPAIRS_HPP
#define TWISTLAB_OPENPAIRS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "twistlab/twist.hpp"

namespace twistlab {

/// G₂(T): carrier pairs whose components are both open. TBA base only.
std::vector<Pair> g2(const TwistStructure &t);

/// Γ(T) = π₁(G₂(T)).
ElementSet gamma(const TwistStructure &t);

/// Λ(B, ∇) = {a ∈ G(B) | a ∨ □¬a ∈ ∇}. Throws InvariantViolation if the
/// result is not a subalgebra of G(B).
ElementSet lambda_set(const FiniteTBA &b, ElementSet nabla);

/// ∇_G(T) = {a∨b | (a,b) ∈ G₂(T)}, cross-checked against ∇∩G(B), ∇∩Γ(T)
/// and ∇∩Λ(B,∇). A disagreement throws InvariantViolation.
ElementSet nabla_g(const TwistStructure &t);
/// Δ_G(T) = {a∧b | (a,b) ∈ G₂(T)}, cross-checked against Δ∩G(B) and Δ∩Γ(T).
ElementSet delta_g(const TwistStructure &t);

/// (Γ(T) ⊆ Λ(B,∇), G₂(T) closed under the boxed twist implication), each
/// computed on its own.
std::pair<bool, bool> gamma_imp_closure_equiv(const TwistStructure &t);

/// Pair-wise closure of G₂(T) under the boxed twist implication
/// (a,b) → (c,d) = (□(a→c), a∧d).
bool g2_closed_under_boxed_imp(const TwistStructure &t);

struct OpenPairsAlgebra {
	/// Heyting-base twist over the Γ subalgebra of G(B).
	TwistStructure structure;
	/// Element of B behind each element of the Γ subalgebra.
	std::vector<Elem> embedding;
};

/// The algebra of open pairs. Requires Γ(T) = Λ(B,∇); otherwise throws
/// StructureError naming a witness. The carrier is checked against g2(t).
OpenPairsAlgebra open_pairs_algebra(const TwistStructure &t);

/// (□a, □b) ∈ T for every (a, b) ∈ T.
bool box_pair_closed(const TwistStructure &t);

struct OpenPairsReport {
	std::vector<Pair> g2;
	ElementSet open;
	ElementSet gamma;
	ElementSet lambda;
	ElementSet nabla_g;
	ElementSet delta_g;
	bool gamma_eq_lambda = false;
	bool gamma_sub_lambda = false;
	bool lambda_sub_gamma = false;
	bool g2_imp_closed = false;
	bool box_pair_closed = false;
	std::optional<OpenPairsAlgebra> algebra;
};

OpenPairsReport open_pairs_report(const TwistStructure &t);

} // namespace twistlab

#endif
