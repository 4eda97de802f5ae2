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

#include <algorithm>

#include "oracles.hpp"
#include "twistlab/errors.hpp"
#include "twistlab/heyting.hpp"
#include "twistlab/order.hpp"

using namespace twistlab;

namespace {

constexpr Elem kBot = 0, kHeart = 1, kTop = 2;

oracle::Algebra as_oracle(const FiniteHeytingAlgebra &h) {
	// Reads only the raw tables.
	auto t = std::make_shared<HeytingTables>(h.tables());
	oracle::Algebra a;
	a.n = t->size;
	a.bot = t->bot;
	a.meet = [t](std::size_t x, std::size_t y) { return std::size_t{t->meet[x * t->size + y]}; };
	a.join = [t](std::size_t x, std::size_t y) { return std::size_t{t->join[x * t->size + y]}; };
	a.imp = [t](std::size_t x, std::size_t y) { return std::size_t{t->imp[x * t->size + y]}; };
	a.leq = [t](std::size_t x, std::size_t y) { return t->meet[x * t->size + y] == x; };
	for (std::size_t x = 0; x < a.n; ++x) {
		bool top = true;
		for (std::size_t y = 0; y < a.n; ++y)
			top = top && a.leq(y, x);
		if (top)
			a.top = x;
	}
	return a;
}

std::vector<std::uint64_t> bits(const std::vector<ElementSet> &v) {
	std::vector<std::uint64_t> out;
	for (ElementSet s : v)
		out.push_back(s.bits());
	std::sort(out.begin(), out.end());
	return out;
}

// Algebras from posets whose up-set lattice has at most max_size elements.
std::vector<FiniteHeytingAlgebra> small_algebras(std::size_t max_poset, std::size_t max_size) {
	std::vector<FiniteHeytingAlgebra> out;
	for (const FinitePoset &p : enumerate_posets(max_poset)) {
		FiniteHeytingAlgebra h = heyting_from_poset(p);
		if (h.size() <= max_size)
			out.push_back(std::move(h));
	}
	return out;
}

} // namespace

TEST_CASE("validate_heyting") {
	FiniteHeytingAlgebra c = chain_algebra(3);
	CHECK_FALSE(validate_heyting(c.tables()).has_value());
	HeytingTables broken = c.tables();
	broken.imp[kHeart * 3 + kBot] = kHeart;
	auto v = validate_heyting(broken);
	REQUIRE(v.has_value());
	CHECK(v->law == "residuation");
	CHECK(v->witness.size() == 3);
	CHECK_THROWS_AS(FiniteHeytingAlgebra{broken}, StructureError);
	HeytingTables one{1, 0, {0}, {0}, {0}};
	CHECK_FALSE(validate_heyting(one).has_value());
	HeytingTables ragged = c.tables();
	ragged.meet.pop_back();
	CHECK(validate_heyting(ragged)->law == "shape");
}

TEST_CASE("negation on the three-element chain") {
	FiniteHeytingAlgebra c = chain_algebra(3);
	CHECK(c.label(kHeart) == "heart");
	CHECK(neg(c, kHeart) == kBot);
	CHECK(neg(c, kBot) == kTop);
	CHECK(neg(c, neg(c, kHeart)) == kTop);
	CHECK(c.imp(neg(c, neg(c, kHeart)), kHeart) == kHeart);
	CHECK_THROWS(neg(c, 3));
}

TEST_CASE("dense_filter") {
	CHECK(dense_filter(chain_algebra(3)) == ElementSet{kHeart, kTop});
	CHECK(dense_filter(chain_algebra(2)) == ElementSet{1});
	HeytingTables one{1, 0, {0}, {0}, {0}};
	CHECK(dense_filter(FiniteHeytingAlgebra(one)) == ElementSet{0});
	for (const FiniteHeytingAlgebra &h : small_algebras(4, 64))
		CHECK(dense_filter(h).bits() == oracle::dense(as_oracle(h)));
}

TEST_CASE("filters and ideals: examples") {
	FiniteHeytingAlgebra c = chain_algebra(3);
	CHECK(bits(filters(c, true)) == bits({ElementSet{kHeart, kTop}, ElementSet{kBot, kHeart, kTop}}));
	CHECK(bits(filters(chain_algebra(2), false)) == bits({ElementSet{1}, ElementSet{0, 1}}));
	CHECK(bits(ideals(c)) == bits({ElementSet{kBot}, ElementSet{kBot, kHeart}, ElementSet{kBot, kHeart, kTop}}));
	CHECK(bits(ideals(chain_algebra(2))) == bits({ElementSet{0}, ElementSet{0, 1}}));
}

TEST_CASE("filters and ideals against subset brute force, algebras up to 12 elements") {
	for (const FiniteHeytingAlgebra &h : small_algebras(4, 12)) {
		oracle::Algebra o = as_oracle(h);
		const oracle::Mask d = oracle::dense(o);
		auto f = oracle::all_subsets_where(o, [&](oracle::Mask s) { return oracle::is_filter(o, s); });
		auto fd = oracle::all_subsets_where(o, [&](oracle::Mask s) { return oracle::is_filter(o, s) && (d & ~s) == 0; });
		auto i = oracle::all_subsets_where(o, [&](oracle::Mask s) { return oracle::is_ideal(o, s); });
		CHECK(bits(filters(h)) == f);
		CHECK(bits(filters(h, true)) == fd);
		CHECK(bits(ideals(h)) == i);
		CHECK(std::find(f.begin(), f.end(), oracle::Mask{1} << h.top()) != f.end());
		CHECK(std::find(i.begin(), i.end(), oracle::Mask{1} << h.bot()) != i.end());
	}
}

TEST_CASE("closed ideals and N") {
	FiniteHeytingAlgebra c = chain_algebra(3);
	CHECK(is_closed_ideal(c, ElementSet{kBot}));
	CHECK_FALSE(is_closed_ideal(c, ElementSet{kBot, kHeart}));
	CHECK(is_closed_ideal(c, c.all()));
	CHECK(closure_N(c, ElementSet{kBot, kHeart}) == c.all());
	CHECK(closure_N(c, ElementSet{kBot}) == ElementSet{kBot});
	CHECK_THROWS_AS(is_closed_ideal(c, ElementSet{kHeart}), StructureError);
	CHECK_THROWS_AS(closure_N(c, ElementSet{kTop}), StructureError);
}

TEST_CASE("N is the least closed ideal above, algebras up to 12 elements") {
	for (const FiniteHeytingAlgebra &h : small_algebras(4, 12)) {
		oracle::Algebra o = as_oracle(h);
		std::vector<ElementSet> closed;
		for (ElementSet d : ideals(h))
			if (is_closed_ideal(h, d))
				closed.push_back(d);
		for (ElementSet d : ideals(h)) {
			ElementSet n = closure_N(h, d);
			CHECK(n.bits() == oracle::closed_hull(o, d.bits()));
			CHECK(is_closed_ideal(h, n));
			CHECK(d.subset_of(n));
			CHECK(closure_N(h, n) == n);
			for (ElementSet c : closed)
				if (d.subset_of(c))
					CHECK(n.subset_of(c));
		}
	}
}

TEST_CASE("is_boolean") {
	CHECK(is_boolean(chain_algebra(2)));
	CHECK_FALSE(is_boolean(chain_algebra(3)));
	CHECK(is_boolean(heyting_from_poset(FinitePoset::antichain(2))));
}

TEST_CASE("Heyting laws hold in every algebra from posets up to 5 points") {
	for (const FinitePoset &p : enumerate_posets(5)) {
		FiniteHeytingAlgebra h = heyting_from_poset(p);
		for (Elem a = 0; a < h.size(); ++a) {
			CHECK(h.leq(a, h.neg(h.neg(a))));
			for (Elem b = 0; b < h.size(); ++b) {
				CHECK((h.imp(a, b) == h.top()) == h.leq(a, b));
				CHECK(h.meet(a, h.imp(a, b)) == h.meet(a, b));
				if (h.leq(a, b))
					CHECK(h.leq(h.neg(b), h.neg(a)));
			}
		}
	}
}

TEST_CASE("subalgebra and isomorphism") {
	FiniteHeytingAlgebra c = chain_algebra(3);
	std::vector<Elem> emb;
	FiniteHeytingAlgebra two = subalgebra(c, ElementSet{kBot, kTop}, &emb);
	CHECK(two.size() == 2);
	CHECK(emb == std::vector<Elem>{kBot, kTop});
	CHECK(two.label(1) == "1");
	CHECK_THROWS_AS(subalgebra(c, ElementSet{kBot, kHeart}), StructureError);
	CHECK(is_isomorphism(c, c, {0, 1, 2}));
	CHECK_FALSE(is_isomorphism(c, c, {0, 2, 1}));
}
