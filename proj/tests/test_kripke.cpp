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

#include "twistlab/errors.hpp"
#include "twistlab/kripke.hpp"
#include "twistlab/semantics.hpp"

using namespace twistlab;

namespace {

// Truth clauses world by world, straight from the definitions.
bool naive_forces(const KripkeModel &m, std::size_t x, const Formula &f) {
	switch (f.kind()) {
	case Kind::Var: {
		auto it = m.valuation.find(f.name());
		return it != m.valuation.end() && it->second.contains(static_cast<Elem>(x));
	}
	case Kind::Bot: return false;
	case Kind::And: return naive_forces(m, x, f.lhs()) && naive_forces(m, x, f.rhs());
	case Kind::Or: return naive_forces(m, x, f.lhs()) || naive_forces(m, x, f.rhs());
	case Kind::Imp: return !naive_forces(m, x, f.lhs()) || naive_forces(m, x, f.rhs());
	case Kind::Neg: return !naive_forces(m, x, f.lhs());
	case Kind::Iff: return naive_forces(m, x, f.lhs()) == naive_forces(m, x, f.rhs());
	case Kind::Box:
		for (std::size_t y = 0; y < m.frame.size(); ++y)
			if (m.frame.leq(x, y) && !naive_forces(m, y, f.lhs()))
				return false;
		return true;
	case Kind::Dia:
		for (std::size_t y = 0; y < m.frame.size(); ++y)
			if (m.frame.leq(x, y) && naive_forces(m, y, f.lhs()))
				return true;
		return false;
	default: throw std::logic_error("not a modal formula");
	}
}

KripkeModel model(const FinitePoset &w, std::map<std::string, ElementSet> v) { return KripkeModel{w, std::move(v)}; }

} // namespace

TEST_CASE("forces: truth clauses") {
	KripkeModel one = model(FinitePoset::chain(1), {{"p", ElementSet{0}}});
	CHECK(forces(one, 0, parse("[]p")));
	KripkeModel two = model(FinitePoset::chain(2), {{"p", ElementSet{1}}});
	CHECK(forces(two, 0, parse("<>p")));
	CHECK_FALSE(forces(two, 0, parse("[]p")));
	CHECK(forces(two, 1, parse("[]p")));
	CHECK_FALSE(forces(two, 0, parse("bot")));
	CHECK(forces(two, 0, parse("!p")));
	CHECK(truth_set(two, parse("q")) == ElementSet{});
	CHECK(truth_set(two, parse("<>p -> []p")) == ElementSet{1});
	CHECK_THROWS_AS(truth_set(two, parse("~p")), LanguageError);
	CHECK_THROWS_AS(forces(two, 2, parse("p")), std::out_of_range);
}

TEST_CASE("forces agrees with the naive clauses on every model over posets up to 3") {
	auto corpus = enumerate_formulas(Language::Lbox, 2, 2, 400);
	for (const FinitePoset &w : enumerate_posets(3)) {
		const std::uint64_t n = std::uint64_t{1} << w.size();
		for (std::uint64_t pm = 0; pm < n; ++pm)
			for (std::uint64_t qm = 0; qm < n; ++qm) {
				KripkeModel m = model(w, {{"p", ElementSet(pm)}, {"q", ElementSet(qm)}});
				for (const Formula &f : corpus) {
					ElementSet t = truth_set(m, f);
					for (std::size_t x = 0; x < w.size(); ++x)
						CHECK(t.contains(static_cast<Elem>(x)) == naive_forces(m, x, f));
				}
			}
	}
}

TEST_CASE("frame_valid") {
	for (const FinitePoset &w : enumerate_posets(3))
		CHECK(frame_valid(w, parse("[](p -> p)")).valid);
	FrameValidity r = frame_valid(FinitePoset::chain(2), parse("<>p -> []p"));
	REQUIRE_FALSE(r.valid);
	REQUIRE(r.refutation.has_value());
	// Least valuation by mask: p holds at the bottom world only.
	CHECK(r.refutation->model.valuation.at("p") == ElementSet{0});
	CHECK(r.refutation->world == 0);
	CHECK_FALSE(forces(r.refutation->model, r.refutation->world, parse("<>p -> []p")));
	CHECK(frame_valid(FinitePoset::chain(1), axioms(AxiomSet::Grz).front()).valid);
	CheckOptions tight;
	tight.valuation_cap = 1000;
	CHECK_THROWS_AS(frame_valid(FinitePoset::antichain(4), parse("p & q & r"), tight), ResourceError);
}

TEST_CASE("refutation search") {
	GrzSearchResult lemma = grz_refutation_search(lemma_323_formula(), 5);
	CHECK_FALSE(lemma.refutation.has_value());
	CHECK(lemma.frames_checked == 1 + 3 + 19 + 219 + 4231);
	CHECK_FALSE(grz_refutation_search(parse("[]p -> p"), 3).refutation.has_value());
	// □◇p → ◇□p holds on every finite partial order (every world sees a
	// maximal one); the converse fails on the three-world fork.
	CHECK_FALSE(grz_refutation_search(parse("[]<>p -> <>[]p"), 4).refutation.has_value());
	GrzSearchResult dot2 = grz_refutation_search(parse("<>[]p -> []<>p"), 4);
	REQUIRE(dot2.refutation.has_value());
	CHECK(dot2.refutation->model.frame.size() == 3);
	CHECK(dot2.frames_checked == 8);
	CHECK_FALSE(forces(dot2.refutation->model, dot2.refutation->world, parse("<>[]p -> []<>p")));
	CheckOptions serial;
	serial.jobs = 1;
	GrzSearchResult s = grz_refutation_search(parse("<>[]p -> []<>p"), 4, serial);
	CHECK(s.frames_checked == dot2.frames_checked);
	CHECK(s.refutation->model.frame == dot2.refutation->model.frame);
	CHECK(s.refutation->model.valuation == dot2.refutation->model.valuation);
	CHECK(s.refutation->world == dot2.refutation->world);
}

TEST_CASE("the lemma formula") {
	Formula f = lemma_323_formula();
	CHECK(f == parse("([](p | q) & ([]p | []<>!p) & ([]q | []<>!q)) -> ([]p | []q)"));
	CHECK(language_of(desugar(f)) == Language::Lbox);
	for (const FinitePoset &w : enumerate_posets(4)) {
		FiniteTBA b = s_of(heyting_from_poset(w)).tba;
		CHECK(is_valid(Structure(b), f).valid);
		CHECK(premise_worlds_with_maximal_successor(w) == 0);
	}
}

TEST_CASE("Grz is valid on every finite poset up to 5") {
	const Formula grz = axioms(AxiomSet::Grz).front();
	for (const FinitePoset &w : enumerate_posets(5))
		CHECK(frame_valid(w, grz).valid);
}

TEST_CASE("frame validity matches validity in the powerset algebra, posets up to 3") {
	auto corpus = enumerate_formulas(Language::Lbox, 2, 2, 1000);
	for (const FinitePoset &w : enumerate_posets(3)) {
		FiniteTBA b = powerset_tba(w);
		auto alg = is_valid_batch(Structure(b), corpus);
		for (std::size_t i = 0; i < corpus.size(); ++i)
			CHECK(frame_valid(w, corpus[i]).valid == alg[i].valid);
	}
}
