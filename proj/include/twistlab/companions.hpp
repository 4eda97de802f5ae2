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

// Companion pipeline: A ↦ T = Tw(s(A), ρ(∇), σ(Δ)), form-(#) axioms and
// the Kleene counterexample.

#ifndef TWISTLAB_COMPANIONS_HPP
#define TWISTLAB_COMPANIONS_HPP

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "twistlab/formula.hpp"
#include "twistlab/heyting.hpp"
#include "twistlab/openpairs.hpp"
#include "twistlab/semantics.hpp"
#include "twistlab/tba.hpp"
#include "twistlab/twist.hpp"

namespace twistlab {

/// s(A) together with the identification ι: A → G(s(A)). Shared by every
/// instance over the same A.
struct CompanionBase {
	std::shared_ptr<const FiniteHeytingAlgebra> source;
	std::shared_ptr<const FiniteTBA> b;
	std::vector<Elem> iota;

	ElementSet lift(ElementSet s) const;
	/// Inverse of ι on open elements; throws std::out_of_range otherwise.
	Elem lower(Elem b_elem) const;
};

CompanionBase companion_base(std::shared_ptr<const FiniteHeytingAlgebra> a);

struct CompanionInstance {
	CompanionBase base;
	ElementSet nabla, delta;
	ElementSet nabla_hat, delta_hat;
	TwistStructure t;
	/// G₂(T) as a twist-structure over the open algebra of s(A).
	OpenPairsAlgebra open_pairs;
	/// Tw(A, ∇, N(Δ)); its carrier is G₂(T) under ι.
	TwistStructure closed_twist;
	std::optional<TwTopReport> twtop;

	/// Renders a pair of T in A's labels when both components are open,
	/// otherwise in s(A)'s labels.
	std::string pair_label(Pair p) const;
};

struct CompanionOptions {
	/// Corpus for the attached TwTop report; empty skips the report.
	std::span<const Formula> corpus;
	CheckOptions check;
};

/// Builds T and verifies Grz, open = Λ, and G₂(T) = ι(Tw(A, ∇, N(Δ))).
/// Throws StructureError on a failed precondition (∇ must contain F_d(A),
/// Δ must be an ideal) and InvariantViolation if a verified property fails.
CompanionInstance companion_structure(const CompanionBase &base, ElementSet nabla, ElementSet delta,
                                      const CompanionOptions &opts = {});
CompanionInstance companion_structure(std::shared_ptr<const FiniteHeytingAlgebra> a, ElementSet nabla,
                                      ElementSet delta, const CompanionOptions &opts = {});

struct SharpForm {
	/// ψ, with each block q ∨ ∼q replaced by q.
	Formula skeleton;
	std::vector<std::string> p_vars;
	std::vector<std::string> q_vars;
};

/// Matches φ = ψ(p₁..pₙ, q₁ ∨ ∼q₁, ..., qₘ ∨ ∼qₘ) with ψ free of ∼ and the
/// p's and q's disjoint. Either disjunct order is accepted.
std::optional<SharpForm> is_form_sharp(const Formula &phi);

/// Validity of φ in Tw(A, ∇, Δ₁) and Tw(A, ∇, Δ₂); they must agree.
/// Throws StructureError if φ is not of form (#), InvariantViolation if the
/// validities differ.
bool delta_independence_check(std::shared_ptr<const FiniteHeytingAlgebra> a, ElementSet nabla, ElementSet d1,
                              ElementSet d2, const Formula &phi, const CheckOptions &opts = {});

/// Tw(A, ∇, Δ) ⊨ χ, checked against a ≤ b for all a ∈ Δ, b ∈ ∇.
/// Throws InvariantViolation when the two disagree.
bool kleene_characterization(std::shared_ptr<const FiniteHeytingAlgebra> a, ElementSet nabla, ElementSet delta,
                             const CheckOptions &opts = {});

/// Validity of ¬¬(p ∧ ∼p) ↔ (p ∧ ∼p). When valid, Δ is checked to be
/// closed (InvariantViolation otherwise).
bool closed_ideal_axiom_check(std::shared_ptr<const FiniteHeytingAlgebra> a, ElementSet nabla, ElementSet delta,
                              const CheckOptions &opts = {});

struct KleeneScanReport {
	std::size_t max_poset = 0;
	std::size_t algebras = 0;
	std::size_t instances = 0;
	std::size_t chi_valid = 0;
	std::size_t chi_prime_valid = 0;
	/// One line per instance where T_B χ holds and T_B χ′ fails.
	std::vector<std::string> violations;
};

/// Every powerset TBA of a poset with at most max_poset points, every open
/// filter and closed ideal: T ⊨ T_B χ implies T ⊨ T_B χ′.
KleeneScanReport kleene_box_implication_scan(std::size_t max_poset, const CheckOptions &opts = {});

struct KleeneDemoReport {
	bool chi_valid = false;
	bool chi_prime_valid = true;
	Valuation witness;
	Value witness_value;
	/// π₁ of the value of χ′ under witness.
	Elem witness_pi1 = 0;
	ValidityResult least_refuter;
	bool pipeline_chi_valid = false;
	bool pipeline_chi_prime_valid = false;
	bool open_pairs_chi_prime_valid = true;
	KleeneScanReport scan;
	std::vector<std::string> transcript;
};

/// The finite witness for the Kleene logic over the three-element chain.
KleeneDemoReport kleene_demo(const CheckOptions &opts = {});

struct CompanionSweepReport {
	std::size_t max_poset = 0;
	std::size_t algebras = 0;
	std::size_t instances = 0;
	/// Instances sharing (A, ∇, N(Δ)) have the same T; each is evaluated once.
	std::size_t distinct = 0;
	std::size_t formulas = 0;
	std::size_t max_twist_size = 0;
	std::size_t mismatches = 0;
	std::vector<std::string> mismatch_lines;
};

/// For every A from posets of at most max_poset points (one-element A
/// skipped), ∇ ⊇ F_d(A), ideal Δ and φ in corpus:
/// T ⊨ T_B φ ⟺ Tw(A, ∇, N(Δ)) ⊨ φ. Parallel over distinct instances.
CompanionSweepReport companion_sweep(std::size_t max_poset, std::span<const Formula> corpus,
                                     const CheckOptions &opts = {});

} // namespace twistlab

#endif
