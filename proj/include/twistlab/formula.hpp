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

#ifndef TWISTLAB_FORMULA_HPP
#define TWISTLAB_FORMULA_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace twistlab {

/// Node kinds. The first eight are the core connectives; Neg, Iff and SIff
/// are parse-time sugar removed by desugar().
enum class Kind : std::uint8_t { Var, Bot, SNeg, And, Or, Imp, Box, Dia, Neg, Iff, SIff };

/// The four propositional languages, ordered so that Li is the smallest.
enum class Language : std::uint8_t { Li, Ls, Lbox, Lsbox };

std::string_view to_string(Kind k);
std::string_view to_string(Language l);
std::optional<Language> language_from_string(std::string_view s);

bool is_unary(Kind k);
bool is_binary(Kind k);

struct FormulaNode;

/// Immutable formula tree. Copies share structure; equality is structural.
class Formula {
public:
	static Formula var(std::string name);
	static Formula bot();
	static Formula sneg(Formula f);
	static Formula neg(Formula f);
	static Formula box(Formula f);
	static Formula dia(Formula f);
	static Formula conj(Formula a, Formula b);
	static Formula disj(Formula a, Formula b);
	static Formula imp(Formula a, Formula b);
	static Formula iff(Formula a, Formula b);
	static Formula siff(Formula a, Formula b);
	static Formula make(Kind k, Formula a);
	static Formula make(Kind k, Formula a, Formula b);

	Kind kind() const;
	/// Variable name; empty for every other kind.
	const std::string &name() const;
	/// Operand of a unary node, left operand of a binary node.
	const Formula &lhs() const;
	const Formula &rhs() const;

	std::size_t depth() const;
	std::size_t node_count() const;
	std::set<std::string> variables() const;

	/// Identity of the shared node; stable while any copy is alive.
	const void *id() const { return node_.get(); }

	friend bool operator==(const Formula &a, const Formula &b);

private:
	explicit Formula(std::shared_ptr<const FormulaNode> n) : node_(std::move(n)) {}
	std::shared_ptr<const FormulaNode> node_;
};

/// True for identifiers matching [a-z][a-zA-Z0-9_]* that are not reserved.
bool is_valid_variable_name(std::string_view name);
bool is_reserved_word(std::string_view name);

/// Parses the ASCII grammar. Sugar nodes (`!`, `<->`, `<=>`) are preserved.
/// Precedence, tightest first: unary `~ ! [] <>`, `&`, `|`, `->` (right
/// associative), `<->`, `<=>` (both left associative).
Formula parse(std::string_view text);

/// Fully parenthesised rendering accepted by parse(): every operand of a
/// binary connective is wrapped unless it is an atom.
std::string to_string(const Formula &f);

/// Removes Neg, Iff and SIff. Dia is rewritten to ¬□¬ only when the target
/// language is Lbox; without a target, formulas free of strong negation are
/// treated as Lbox and all others as Lsbox. Idempotent.
Formula desugar(const Formula &f, std::optional<Language> target = std::nullopt);

/// Smallest language whose connectives cover the formula. Sugar is
/// classified by what it abbreviates; a primitive Dia counts as modal.
Language language_of(const Formula &f);
bool contains(const Formula &f, Kind k);

/// Simultaneous substitution; variables absent from the map are unchanged.
Formula substitute(const Formula &f, const std::map<std::string, Formula> &sub);

/// Gödel–Tarski translation Int -> S4. Rejects inputs outside Li.
Formula godel_tarski(const Formula &f);

/// Translation N4⊥ -> BS4 pushing strong negation to the atoms. Double strong
/// negation is erased. Rejects modal inputs.
Formula belnap_translate(const Formula &f);

/// True iff every strong negation wraps a variable or ⊥.
bool is_tb_normal(const Formula &f);

enum class AxiomSet : std::uint8_t {
	Int,
	SNeg,
	S4Modal,
	BS4Interplay,
	N4Bot,
	S4,
	BS4,
	Grz,
	Kleene,
	KleenePrime,
	ClosedIdealAxiom,
};

/// Axiom schemes (with sugar preserved) for the named logic fragment.
std::vector<Formula> axioms(AxiomSet set);
std::string_view to_string(AxiomSet set);
/// Accepts the upper-case names used on the command line, e.g. "N4BOT".
AxiomSet axiom_set_from_string(std::string_view name);

/// The Kleene axiom (p ∧ ∼p) → (q ∨ ∼q) and its ¬¬-modified form.
Formula kleene_axiom();
Formula kleene_prime_axiom();

} // namespace twistlab

#endif
