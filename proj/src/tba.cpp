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

#include "twistlab/tba.hpp"

#include <algorithm>
#include <unordered_map>

#include "twistlab/errors.hpp"

namespace twistlab {

std::optional<Violation> validate_tba(const HeytingTables &t, const std::vector<Elem> &box) {
	if (auto v = validate_heyting(t))
		return v;
	const std::size_t n = t.size;
	if (box.size() != n)
		return Violation{"shape", {}, "box table must have " + std::to_string(n) + " entries"};
	for (std::size_t a = 0; a < n; ++a)
		if (box[a] >= n)
			return Violation{"range", {a}, "box entry out of range at " + std::to_string(a)};
	auto M = [&](std::size_t a, std::size_t b) -> std::size_t { return t.meet[a * n + b]; };
	auto J = [&](std::size_t a, std::size_t b) -> std::size_t { return t.join[a * n + b]; };
	auto leq = [&](std::size_t a, std::size_t b) { return M(a, b) == a; };
	std::size_t top = 0;
	for (std::size_t a = 0; a < n; ++a)
		if (J(a, top) == a)
			top = a;
	for (std::size_t a = 0; a < n; ++a) {
		std::size_t na = t.imp[a * n + t.bot];
		if (J(a, na) != top)
			return Violation{"boolean", {a}, "a ∨ ¬a ≠ 1 for a = " + std::to_string(a)};
	}
	if (box[top] != top)
		return Violation{"box top", {top}, "□1 ≠ 1"};
	for (std::size_t a = 0; a < n; ++a) {
		if (!leq(box[a], a))
			return Violation{"box deflationary", {a}, "□a ⩽̸ a for a = " + std::to_string(a)};
		if (!leq(box[a], box[box[a]]))
			return Violation{"box idempotent", {a}, "□a ⩽̸ □□a for a = " + std::to_string(a)};
		for (std::size_t b = 0; b < n; ++b)
			if (box[M(a, b)] != M(box[a], box[b]))
				return Violation{"box meet", {a, b}, "□(a∧b) ≠ □a∧□b at (" + std::to_string(a) + ", " + std::to_string(b) + ")"};
	}
	return std::nullopt;
}

FiniteTBA::FiniteTBA(FiniteHeytingAlgebra algebra, std::vector<Elem> box) : h_(std::move(algebra)), box_(std::move(box)) {
	if (auto v = validate_tba(h_.tables(), box_))
		throw StructureError("not a topological Boolean algebra: " + v->law + " violated: " + v->message);
}

std::vector<ElementSet> powerset_elements(const FinitePoset &p) {
	if (p.size() > 6)
		throw StructureError("powerset TBA needs at most 6 points");
	std::vector<ElementSet> subsets;
	for (std::uint64_t s = 0; s < (std::uint64_t{1} << p.size()); ++s)
		subsets.emplace_back(s);
	std::sort(subsets.begin(), subsets.end(), canonical_less);
	return subsets;
}

FiniteTBA powerset_tba(const FinitePoset &p) {
	std::vector<ElementSet> subsets = powerset_elements(p);
	const std::size_t m = subsets.size();
	std::unordered_map<std::uint64_t, Elem> index;
	for (std::size_t i = 0; i < m; ++i)
		index.emplace(subsets[i].bits(), static_cast<Elem>(i));
	const ElementSet all = p.worlds();
	HeytingTables t;
	t.size = m;
	t.bot = 0;
	t.meet.resize(m * m);
	t.join.resize(m * m);
	t.imp.resize(m * m);
	for (std::size_t i = 0; i < m; ++i)
		for (std::size_t j = 0; j < m; ++j) {
			ElementSet u = subsets[i], v = subsets[j];
			t.meet[i * m + j] = index.at((u & v).bits());
			t.join[i * m + j] = index.at((u | v).bits());
			t.imp[i * m + j] = index.at((u.complement(p.size()) | v).bits());
		}
	std::vector<Elem> box(m);
	for (std::size_t i = 0; i < m; ++i) {
		ElementSet inner;
		all.for_each([&](Elem x) {
			if (p.up(x).subset_of(subsets[i]))
				inner.insert(x);
		});
		box[i] = index.at(inner.bits());
	}
	return FiniteTBA(FiniteHeytingAlgebra(std::move(t)), std::move(box));
}

FiniteTBA discrete_tba(const FiniteHeytingAlgebra &boolean_algebra) {
	std::vector<Elem> box(boolean_algebra.size());
	for (std::size_t a = 0; a < box.size(); ++a)
		box[a] = static_cast<Elem>(a);
	return FiniteTBA(boolean_algebra, std::move(box));
}

Elem diamond(const FiniteTBA &b, Elem a) {
	if (a >= b.size())
		throw std::out_of_range("element index " + std::to_string(a) + " out of range");
	return b.dia(a);
}

ElementSet open_elements(const FiniteTBA &b) {
	ElementSet out;
	for (Elem a = 0; a < b.size(); ++a)
		if (b.box(a) == a)
			out.insert(a);
	return out;
}

FiniteHeytingAlgebra open_algebra(const FiniteTBA &b, std::vector<Elem> *embedding) {
	std::vector<Elem> emb = open_elements(b).elements();
	std::vector<Elem> index(b.size(), 0);
	for (std::size_t i = 0; i < emb.size(); ++i)
		index[emb[i]] = static_cast<Elem>(i);
	const std::size_t m = emb.size();
	HeytingTables t;
	t.size = m;
	t.bot = index[b.bot()];
	t.meet.resize(m * m);
	t.join.resize(m * m);
	t.imp.resize(m * m);
	for (std::size_t i = 0; i < m; ++i)
		for (std::size_t j = 0; j < m; ++j) {
			t.meet[i * m + j] = index[b.meet(emb[i], emb[j])];
			t.join[i * m + j] = index[b.join(emb[i], emb[j])];
			t.imp[i * m + j] = index[b.box(b.imp(emb[i], emb[j]))];
		}
	FiniteHeytingAlgebra g(std::move(t));
	if (embedding)
		*embedding = std::move(emb);
	return g;
}

ElementSet generated_boolean_subalgebra(const FiniteTBA &b, ElementSet gens) {
	ElementSet cur = gens | ElementSet{b.bot(), b.top()};
	for (;;) {
		ElementSet next = cur;
		cur.for_each([&](Elem x) {
			next.insert(b.neg(x));
			cur.for_each([&](Elem y) {
				next.insert(b.meet(x, y));
				next.insert(b.join(x, y));
			});
		});
		if (next == cur)
			return cur;
		cur = next;
	}
}

SOfResult s_of(const FiniteHeytingAlgebra &a) {
	if (a.size() == 1)
		throw StructureError("s(A) is undefined for the one-element algebra");
	FinitePoset p = join_irreducible_poset(a);
	FiniteTBA b = powerset_tba(p);
	std::vector<ElementSet> ups = up_sets(p);
	std::vector<ElementSet> subsets = powerset_elements(p);
	std::unordered_map<std::uint64_t, Elem> index;
	for (std::size_t i = 0; i < subsets.size(); ++i)
		index.emplace(subsets[i].bits(), static_cast<Elem>(i));
	std::vector<Elem> bmap = birkhoff_map(a);
	std::vector<Elem> iso(a.size());
	for (Elem x = 0; x < a.size(); ++x)
		iso[x] = index.at(ups[bmap[x]].bits());

	std::vector<Elem> emb;
	FiniteHeytingAlgebra g = open_algebra(b, &emb);
	std::vector<Elem> to_g(b.size(), 0);
	for (std::size_t i = 0; i < emb.size(); ++i)
		to_g[emb[i]] = static_cast<Elem>(i);
	std::vector<Elem> composed(a.size());
	for (Elem x = 0; x < a.size(); ++x) {
		if (b.box(iso[x]) != iso[x])
			throw InvariantViolation("s(A) image of an element is not open");
		composed[x] = to_g[iso[x]];
	}
	if (!is_isomorphism(a, g, composed))
		throw InvariantViolation("A is not isomorphic to G(s(A)) via the Birkhoff map");
	if (generated_boolean_subalgebra(b, open_elements(b)) != b.algebra().all())
		throw InvariantViolation("open elements do not generate s(A)");
	return SOfResult{std::move(b), std::move(iso)};
}

bool is_open_filter(const FiniteTBA &b, ElementSet s) {
	if (!is_filter(b.algebra(), s))
		return false;
	bool ok = true;
	s.for_each([&](Elem x) {
		if (!s.contains(b.box(x)))
			ok = false;
	});
	return ok;
}

bool is_closed_ideal(const FiniteTBA &b, ElementSet s) {
	if (!is_ideal(b.algebra(), s))
		return false;
	bool ok = true;
	s.for_each([&](Elem x) {
		if (!s.contains(b.dia(x)))
			ok = false;
	});
	return ok;
}

bool is_g_filter(const FiniteTBA &b, ElementSet s) {
	ElementSet g = open_elements(b);
	if (s.empty() || !s.subset_of(g))
		return false;
	bool ok = true;
	s.for_each([&](Elem x) {
		if (!(b.algebra().up(x) & g).subset_of(s))
			ok = false;
		s.for_each([&](Elem y) {
			if (!s.contains(b.meet(x, y)))
				ok = false;
		});
	});
	return ok;
}

bool is_g_ideal(const FiniteTBA &b, ElementSet s) {
	ElementSet g = open_elements(b);
	if (s.empty() || !s.subset_of(g))
		return false;
	bool ok = true;
	s.for_each([&](Elem x) {
		if (!(b.algebra().down(x) & g).subset_of(s))
			ok = false;
		s.for_each([&](Elem y) {
			if (!s.contains(b.join(x, y)))
				ok = false;
		});
	});
	return ok;
}

std::vector<ElementSet> open_filters(const FiniteTBA &b) {
	std::vector<ElementSet> out;
	open_elements(b).for_each([&](Elem a) { out.push_back(b.algebra().up(a)); });
	std::sort(out.begin(), out.end(), canonical_less);
	return out;
}

std::vector<ElementSet> closed_ideals(const FiniteTBA &b) {
	std::vector<ElementSet> out;
	for (Elem a = 0; a < b.size(); ++a)
		if (b.dia(a) == a)
			out.push_back(b.algebra().down(a));
	std::sort(out.begin(), out.end(), canonical_less);
	return out;
}

namespace {

ElementSet rho_unchecked(const FiniteTBA &b, ElementSet g_filter) {
	ElementSet out;
	for (Elem x = 0; x < b.size(); ++x)
		if (g_filter.contains(b.box(x)))
			out.insert(x);
	return out;
}

} // namespace

ElementSet delta_map(const FiniteTBA &b, ElementSet nabla) {
	if (!is_open_filter(b, nabla))
		throw StructureError("delta expects an open filter");
	ElementSet out = nabla & open_elements(b);
#ifndef NDEBUG
	if (rho_unchecked(b, out) != nabla)
		throw InvariantViolation("rho(delta(F)) differs from F");
#endif
	return out;
}

ElementSet rho_map(const FiniteTBA &b, ElementSet g_filter) {
	if (!is_g_filter(b, g_filter))
		throw StructureError("rho expects a filter of the open-element algebra");
	ElementSet out = rho_unchecked(b, g_filter);
#ifndef NDEBUG
	if ((out & open_elements(b)) != g_filter)
		throw InvariantViolation("delta(rho(F)) differs from F");
#endif
	return out;
}

ElementSet sigma_map(const FiniteTBA &b, ElementSet delta) {
	if (!is_ideal(b.algebra(), delta) && !is_g_ideal(b, delta))
		throw StructureError("sigma expects an ideal");
	ElementSet out;
	delta.for_each([&](Elem y) { out = out | b.algebra().down(b.dia(y)); });
	return out;
}

GrzResult satisfies_grz(const FiniteTBA &b) {
	GrzResult r;
	for (Elem a = 0; a < b.size(); ++a) {
		Elem inner = b.box(b.imp(b.box(b.imp(a, b.box(a))), a));
		if (b.imp(inner, a) != b.top()) {
			r.holds = false;
			r.witness = a;
			return r;
		}
	}
	return r;
}

} // namespace twistlab
