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

#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "twistlab/errors.hpp"
#include "twistlab/formula.hpp"
#include "twistlab/semantics.hpp"

using namespace twistlab;

namespace {

Formula v(const char *n) { return Formula::var(n); }

// Random formula over p, q with every connective, sugar included.
Formula random_formula(std::mt19937 &rng, int depth) {
	std::uniform_int_distribution<int> pick(0, depth == 0 ? 2 : 12);
	switch (pick(rng)) {
	case 0: return v("p");
	case 1: return v("q");
	case 2: return Formula::bot();
	case 3: return Formula::sneg(random_formula(rng, depth - 1));
	case 4: return Formula::neg(random_formula(rng, depth - 1));
	case 5: return Formula::box(random_formula(rng, depth - 1));
	case 6: return Formula::dia(random_formula(rng, depth - 1));
	case 7: return Formula::conj(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
	case 8: return Formula::disj(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
	case 9: return Formula::imp(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
	case 10: return Formula::iff(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
	case 11: return Formula::siff(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
	default: return v("r");
	}
}

bool only_core(const Formula &f) {
	if (f.kind() == Kind::Neg || f.kind() == Kind::Iff || f.kind() == Kind::SIff)
		return false;
	if (f.kind() == Kind::Var || f.kind() == Kind::Bot)
		return true;
	if (!only_core(f.lhs()))
		return false;
	return !is_binary(f.kind()) || only_core(f.rhs());
}

} // namespace

TEST_CASE("parse: precedence and the Kleene axioms") {
	Formula chi = parse("p & ~p -> q | ~q");
	CHECK(chi == Formula::imp(Formula::conj(v("p"), Formula::sneg(v("p"))), Formula::disj(v("q"), Formula::sneg(v("q")))));
	CHECK(parse("bot") == Formula::bot());
	Formula chi_prime = desugar(parse("!!(p & ~p) -> (q | ~q)"));
	Formula pnp = Formula::conj(v("p"), Formula::sneg(v("p")));
	CHECK(chi_prime == Formula::imp(Formula::imp(Formula::imp(pnp, Formula::bot()), Formula::bot()),
	                                Formula::disj(v("q"), Formula::sneg(v("q")))));
	CHECK(kleene_axiom() == chi);
}

TEST_CASE("parse: associativity and sugar preservation") {
	CHECK(parse("p -> q -> r") == Formula::imp(v("p"), Formula::imp(v("q"), v("r"))));
	CHECK(parse("p <-> q <-> r") == Formula::iff(Formula::iff(v("p"), v("q")), v("r")));
	CHECK(parse("p <=> q").kind() == Kind::SIff);
	CHECK(parse("!p").kind() == Kind::Neg);
	CHECK(parse("[]<>~p") == Formula::box(Formula::dia(Formula::sneg(v("p")))));
	CHECK(parse("  p\n&\tq ") == Formula::conj(v("p"), v("q")));
	CHECK(parse("x_1Y") == v("x_1Y"));
}

TEST_CASE("parse: errors carry positions") {
	CHECK_THROWS_AS(parse("p &"), SyntaxError);
	CHECK_THROWS_AS(parse("(p"), SyntaxError);
	CHECK_THROWS_AS(parse("P"), SyntaxError);
	CHECK_THROWS_AS(parse("p $ q"), SyntaxError);
	try {
		parse("p &\n  & q");
		FAIL("expected a syntax error");
	} catch (const SyntaxError &e) {
		CHECK(e.line() == 2);
		CHECK(e.column() == 3);
	}
	CHECK_FALSE(is_valid_variable_name("bot"));
	CHECK(is_reserved_word("bot"));
}

TEST_CASE("desugar: abbreviations") {
	CHECK(desugar(parse("!p")) == Formula::imp(v("p"), Formula::bot()));
	CHECK(desugar(parse("p <-> q")) == Formula::conj(Formula::imp(v("p"), v("q")), Formula::imp(v("q"), v("p"))));
	Formula iff = Formula::conj(Formula::imp(v("p"), v("q")), Formula::imp(v("q"), v("p")));
	Formula siff = Formula::conj(Formula::imp(Formula::sneg(v("p")), Formula::sneg(v("q"))),
	                             Formula::imp(Formula::sneg(v("q")), Formula::sneg(v("p"))));
	CHECK(desugar(parse("p <=> q")) == Formula::conj(iff, siff));
	// ◇ is ¬□¬ in the pure modal language and primitive with strong negation.
	CHECK(desugar(parse("<>p")) ==
	      Formula::imp(Formula::box(Formula::imp(v("p"), Formula::bot())), Formula::bot()));
	CHECK(desugar(parse("<>~p")) == Formula::dia(Formula::sneg(v("p"))));
	CHECK(desugar(parse("<>p"), Language::Lsbox) == Formula::dia(v("p")));
}

TEST_CASE("desugar: idempotent and core-only on random formulas") {
	std::mt19937 rng(7);
	for (int i = 0; i < 500; ++i) {
		Formula f = random_formula(rng, 4);
		Formula d = desugar(f);
		CHECK(only_core(d));
		CHECK(desugar(d) == d);
	}
}

TEST_CASE("language_of") {
	CHECK(language_of(parse("p -> q")) == Language::Li);
	CHECK(language_of(parse("~p")) == Language::Ls);
	CHECK(language_of(parse("[]p")) == Language::Lbox);
	CHECK(language_of(parse("[]~p")) == Language::Lsbox);
	CHECK(language_of(parse("!p <-> q")) == Language::Li);
	CHECK(language_of(parse("p <=> q")) == Language::Ls);
}

TEST_CASE("substitute") {
	CHECK(substitute(parse("p -> q"), {{"p", Formula::bot()}}) == parse("bot -> q"));
	CHECK(substitute(v("p"), {{"p", parse("~p")}}) == parse("~p"));
	CHECK(substitute(parse("p & p"), {{"p", v("q")}}) == parse("q & q"));
	// Simultaneous, not sequential.
	CHECK(substitute(parse("p -> q"), {{"p", v("q")}, {"q", v("p")}}) == parse("q -> p"));
	std::mt19937 rng(11);
	std::map<std::string, Formula> sub{{"p", parse("~q & r")}, {"q", parse("[]p")}};
	for (int i = 0; i < 200; ++i) {
		Formula f = random_formula(rng, 3);
		Formula s = substitute(f, sub);
		if (is_binary(f.kind()))
			CHECK(s == Formula::make(f.kind(), substitute(f.lhs(), sub), substitute(f.rhs(), sub)));
		else if (is_unary(f.kind()))
			CHECK(s == Formula::make(f.kind(), substitute(f.lhs(), sub)));
	}
}

TEST_CASE("godel_tarski") {
	CHECK(godel_tarski(v("p")) == Formula::box(v("p")));
	CHECK(godel_tarski(Formula::bot()) == Formula::bot());
	CHECK(godel_tarski(parse("p -> q")) == Formula::box(Formula::imp(Formula::box(v("p")), Formula::box(v("q")))));
	CHECK_THROWS_AS(godel_tarski(parse("~p")), LanguageError);
	CHECK_THROWS_AS(godel_tarski(parse("[]p")), LanguageError);
}

TEST_CASE("belnap_translate: table clauses") {
	CHECK(belnap_translate(parse("~(p -> q)")) == Formula::conj(Formula::box(v("p")), Formula::box(Formula::sneg(v("q")))));
	CHECK(belnap_translate(kleene_axiom()) == parse("[](([]p & []~p) -> ([]q | []~q))"));
	CHECK(belnap_translate(parse("~~p")) == Formula::box(v("p")));
	CHECK(belnap_translate(parse("~bot")) == Formula::sneg(Formula::bot()));
	CHECK(to_string(belnap_translate(kleene_axiom())) == "[]((([]p) & ([]~p)) -> (([]q) | ([]~q)))");
	CHECK_THROWS_AS(belnap_translate(parse("[]p")), LanguageError);
}

TEST_CASE("belnap_translate agrees with the transcribed table and with godel_tarski on Li") {
	for (const Formula &f : enumerate_formulas(Language::Ls, 3, 2, 20000)) {
		Formula t = belnap_translate(f);
		CHECK(t == oracle::tb(f));
		CHECK(is_tb_normal(t));
	}
	for (const Formula &f : enumerate_formulas(Language::Li, 3, 2, 20000))
		CHECK(belnap_translate(f) == godel_tarski(f));
}

TEST_CASE("is_tb_normal") {
	CHECK(is_tb_normal(belnap_translate(kleene_axiom())));
	CHECK_FALSE(is_tb_normal(parse("~(p & q)")));
	CHECK(is_tb_normal(parse("[]~p")));
	CHECK(is_tb_normal(parse("~bot")));
}

TEST_CASE("printer round trip") {
	for (Language l : {Language::Li, Language::Ls, Language::Lbox, Language::Lsbox})
		for (const Formula &f : enumerate_formulas(l, 2, 2, 3000))
			CHECK(parse(to_string(f)) == f);
	std::mt19937 rng(3);
	for (int i = 0; i < 500; ++i) {
		Formula f = random_formula(rng, 5);
		CHECK(parse(to_string(f)) == f);
	}
}

TEST_CASE("axiom library") {
	auto sneg = axioms(AxiomSet::SNeg);
	CHECK(std::find(sneg.begin(), sneg.end(), parse("~~p <-> p")) != sneg.end());
	CHECK(axioms(AxiomSet::Kleene) == std::vector<Formula>{kleene_axiom()});
	CHECK(axioms(AxiomSet::Grz).size() == 1);
	CHECK(axioms(AxiomSet::Grz).front() == parse("[]([](p -> []p) -> p) -> p"));
	CHECK(axioms(AxiomSet::N4Bot).size() == axioms(AxiomSet::Int).size() + sneg.size());
	CHECK(axioms(AxiomSet::S4).size() == axioms(AxiomSet::Int).size() + 1 + axioms(AxiomSet::S4Modal).size());
	CHECK(axioms(AxiomSet::BS4).size() ==
	      axioms(AxiomSet::S4).size() + sneg.size() + axioms(AxiomSet::BS4Interplay).size());
	CHECK(axiom_set_from_string("N4BOT") == AxiomSet::N4Bot);
	CHECK_THROWS_AS(axiom_set_from_string("K45"), std::invalid_argument);
	CHECK(axioms(AxiomSet::ClosedIdealAxiom).front() == parse("!!(p & ~p) <-> (p & ~p)"));
}

TEST_CASE("formula enumeration corpus") {
	auto c = enumerate_formulas(Language::Ls, 2, 2, 2000);
	CHECK(c.size() == 2000);
	CHECK(c[0] == v("p"));
	CHECK(c[1] == v("q"));
	CHECK(c[2] == Formula::bot());
	CHECK(c[3] == parse("~p"));
	CHECK(default_twtop_corpus().size() == axioms(AxiomSet::N4Bot).size() + 3 + 2000);
	auto small = enumerate_formulas(Language::Li, 1, 1, 1000);
	// p, bot, then the 3 connectives over every ordered pair of the 2 atoms.
	CHECK(small.size() == 2 + 3 * 4);
}
