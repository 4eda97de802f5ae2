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

// Kripke frames (finite partial orders) and models for the modal language.

#ifndef TWISTLAB_KRIPKE_HPP
#define TWISTLAB_KRIPKE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "twistlab/element_set.hpp"
#include "twistlab/formula.hpp"
#include "twistlab/order.hpp"
#include "twistlab/semantics.hpp"

namespace twistlab {

struct KripkeModel {
	FinitePoset frame;
	/// Worlds where each variable holds; missing variables hold nowhere.
	std::map<std::string, ElementSet> valuation;
};

/// Worlds of M forcing φ. → is material at each world; □ quantifies over
/// all successors. Throws LanguageError on strong negation.
ElementSet truth_set(const KripkeModel &m, const Formula &phi);
bool forces(const KripkeModel &m, std::size_t world, const Formula &phi);

struct KripkeRefutation {
	KripkeModel model;
	std::size_t world = 0;
};

struct FrameValidity {
	bool valid = true;
	/// Least valuation (variables in name order, first most significant,
	/// subsets as bit masks) and least world in it.
	std::optional<KripkeRefutation> refutation;
};

/// Exhaustive over all 2^(|W|·k) valuations; ResourceError above the cap.
FrameValidity frame_valid(const FinitePoset &w, const Formula &phi, const CheckOptions &opts = {});

struct GrzSearchResult {
	std::size_t max_worlds = 0;
	std::size_t frames_checked = 0;
	/// First refutation in enumeration order (world count, then relation
	/// bits). Absence is evidence up to max_worlds only.
	std::optional<KripkeRefutation> refutation;
};

GrzSearchResult grz_refutation_search(const Formula &phi, std::size_t max_worlds, const CheckOptions &opts = {});

/// [□(p∨q) ∧ (□p ∨ □◇¬p) ∧ (□q ∨ □◇¬q)] → (□p ∨ □q).
Formula lemma_323_formula();

/// Number of (valuation, world) pairs on w where the world forces
/// □◇¬p ∧ □◇¬q ∧ □(p∨q) and has a maximal successor. Zero on every
/// finite frame.
std::size_t premise_worlds_with_maximal_successor(const FinitePoset &w);

} // namespace twistlab

#endif
