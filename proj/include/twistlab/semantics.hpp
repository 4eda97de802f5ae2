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

#ifndef TWISTLAB_SEMANTICS_HPP
#define TWISTLAB_SEMANTICS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "twistlab/formula.hpp"
#include "twistlab/twist.hpp"

namespace twistlab {

/// Non-owning view of something formulas can be evaluated in. The viewed
/// object must outlive the view.
class Structure {
public:
	enum class Kind : std::uint8_t { Heyting, Tba, HeytingTwist, TbaTwist };

	Structure(const FiniteHeytingAlgebra &h) : kind_(Kind::Heyting), heyting_(&h) {}
	Structure(const FiniteTBA &b) : kind_(Kind::Tba), heyting_(&b.algebra()), tba_(&b) {}
	Structure(const TwistStructure &t)
	    : kind_(t.kind() == BaseKind::Tba ? Kind::TbaTwist : Kind::HeytingTwist), heyting_(&t.base()), tba_(t.tba()),
	      twist_(&t) {}

	Kind kind() const { return kind_; }
	bool modal() const { return tba_ != nullptr; }
	bool is_twist() const { return twist_ != nullptr; }
	const FiniteHeytingAlgebra &lattice() const { return *heyting_; }
	const FiniteTBA *tba() const { return tba_; }
	const TwistStructure *twist() const { return twist_; }
	/// Number of values a variable ranges over: elements or carrier pairs.
	std::size_t value_count() const { return twist_ ? twist_->size() : heyting_->size(); }

private:
	Kind kind_;
	const FiniteHeytingAlgebra *heyting_ = nullptr;
	const FiniteTBA *tba_ = nullptr;
	const TwistStructure *twist_ = nullptr;
};

using Value = std::variant<Elem, Pair>;
using Valuation = std::map<std::string, Value>;

std::string value_label(const Structure &s, const Value &v);

/// Throws LanguageError if the formula uses connectives the structure
/// cannot interpret (∼ needs a twist, □/◇ need a TBA base).
void check_language(const Structure &s, const Formula &f);

/// Homomorphic extension of v, after desugaring. Throws LanguageError or
/// std::invalid_argument for an unbound variable or a non-member value.
Value evaluate(const Structure &s, const Formula &f, const Valuation &v);

/// 1 for algebras, first component 1 for twist-structures.
bool is_designated(const Structure &s, const Value &v);

struct CheckOptions {
	/// Upper bound on |S|^k; larger searches raise ResourceError.
	std::uint64_t valuation_cap = 10'000'000;
	/// OpenMP threads; 0 uses the runtime default, 1 forces serial.
	int jobs = 0;
};

struct ValidityResult {
	bool valid = true;
	/// Lexicographically least refuting valuation, variables in name order
	/// and values in index order.
	std::optional<Valuation> witness;
	std::optional<Value> value;
};

/// Exhaustive validity through the compiled kernel.
ValidityResult is_valid(const Structure &s, const Formula &f, const CheckOptions &opts = {});

/// Validity for many formulas at once; shares subterms and valuations
/// between formulas with the same variables.
std::vector<ValidityResult> is_valid_batch(const Structure &s, std::span<const Formula> fs, const CheckOptions &opts = {});

/// Recursive evaluation over all valuations, stopping at the first refuter.
/// Serial; kept as the oracle for the kernel.
ValidityResult is_valid_reference(const Structure &s, const Formula &f, const CheckOptions &opts = {});

struct AxiomCheck {
	bool holds = true;
	std::optional<Formula> failing;
	std::optional<ValidityResult> result;
};

AxiomCheck models_axioms(const Structure &s, AxiomSet set, const CheckOptions &opts = {});

/// Deterministic corpus: level 0 is the variables then ⊥; level d adds the
/// unary connectives on level d−1, then ∧, ∨, → over every pair of
/// earlier formulas with at least one at level d−1. Truncated at budget.
std::vector<Formula> enumerate_formulas(Language lang, std::size_t depth, std::size_t vars, std::size_t budget);

/// Names used by enumerate_formulas: p, q, r, s, t, ...
std::string corpus_variable(std::size_t i);

/// axioms(N4BOT) ∪ {χ, χ′, closed-ideal axiom} ∪ enumerate_formulas(Ls, 2, 2, 2000).
std::vector<Formula> default_twtop_corpus();

struct TwTopEntry {
	Formula formula;
	bool open_pairs_valid = false;
	bool translated_valid = false;
	bool agree() const { return open_pairs_valid == translated_valid; }
};

struct TwTopReport {
	bool grz = false;
	bool open_eq_lambda = false;
	bool gamma_eq_lambda = false;
	/// Hypotheses of the preservation theorem; when false, disagreements
	/// are observations rather than failures.
	bool hypotheses_hold() const { return grz && open_eq_lambda; }
	std::vector<TwTopEntry> entries;
	std::size_t mismatches = 0;
};

/// For each φ: validity of φ in the algebra of open pairs of t and of T_B φ
/// in t. Formulas must lie in Ls.
TwTopReport twtop_check(const TwistStructure &t, std::span<const Formula> formulas, const CheckOptions &opts = {});

/// π₁(v(ψ)) = ψ(π₁ v) for every valuation into t. ψ must be ∼-free.
bool pi1_commutes(const TwistStructure &t, const Formula &psi, const CheckOptions &opts = {});

} // namespace twistlab

#endif
