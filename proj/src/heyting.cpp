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

#include "twistlab/heyting.hpp"

#include <algorithm>

#include "twistlab/errors.hpp"

namespace twistlab {

namespace {

Violation violation(std::string law, std::vector<std::size_t> witness, std::string msg) {
	return Violation{std::move(law), std::move(witness), std::move(msg)};
}

std::string triple(std::size_t a, std::size_t b, std::size_t c) {
	return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
}

} // namespace

std::optional<Violation> validate_heyting(const HeytingTables &t) {
	const std::size_t n = t.size;
	if (n == 0)
		return violation("shape", {}, "algebra must have at least one element");
	if (n > kMaxElements)
		return violation("shape", {n}, "algebra has " + std::to_string(n) + " elements; at most 64 are supported");
	const std::size_t nn = n * n;
	if (t.meet.size() != nn || t.join.size() != nn || t.imp.size() != nn)
		return violation("shape", {}, "operation tables must be " + std::to_string(n) + "x" + std::to_string(n));
	if (t.bot >= n)
		return violation("range", {t.bot}, "bot index out of range");
	for (std::size_t i = 0; i < nn; ++i)
		if (t.meet[i] >= n || t.join[i] >= n || t.imp[i] >= n)
			return violation("range", {i / n, i % n}, "table entry out of range at row " + std::to_string(i / n) + ", column " + std::to_string(i % n));

	auto M = [&](std::size_t a, std::size_t b) -> std::size_t { return t.meet[a * n + b]; };
	auto J = [&](std::size_t a, std::size_t b) -> std::size_t { return t.join[a * n + b]; };
	auto I = [&](std::size_t a, std::size_t b) -> std::size_t { return t.imp[a * n + b]; };

	for (std::size_t a = 0; a < n; ++a) {
		if (M(a, a) != a)
			return violation("meet idempotence", {a}, "a ∧ a ≠ a for a = " + std::to_string(a));
		if (J(a, a) != a)
			return violation("join idempotence", {a}, "a ∨ a ≠ a for a = " + std::to_string(a));
		for (std::size_t b = 0; b < n; ++b) {
			if (M(a, b) != M(b, a))
				return violation("meet commutativity", {a, b}, "a ∧ b ≠ b ∧ a");
			if (J(a, b) != J(b, a))
				return violation("join commutativity", {a, b}, "a ∨ b ≠ b ∨ a");
			if (M(a, J(a, b)) != a)
				return violation("absorption", {a, b}, "a ∧ (a ∨ b) ≠ a");
			if (J(a, M(a, b)) != a)
				return violation("absorption", {a, b}, "a ∨ (a ∧ b) ≠ a");
		}
	}
	for (std::size_t a = 0; a < n; ++a)
		for (std::size_t b = 0; b < n; ++b)
			for (std::size_t c = 0; c < n; ++c) {
				if (M(a, M(b, c)) != M(M(a, b), c))
					return violation("meet associativity", {a, b, c}, "failing triple " + triple(a, b, c));
				if (J(a, J(b, c)) != J(J(a, b), c))
					return violation("join associativity", {a, b, c}, "failing triple " + triple(a, b, c));
			}
	for (std::size_t a = 0; a < n; ++a)
		if (M(t.bot, a) != t.bot)
			return violation("least element", {t.bot, a}, "bot is not below " + std::to_string(a));
	// a ∧ b ⩽ c ⟺ a ⩽ b → c, with x ⩽ y read as x ∧ y = x.
	for (std::size_t a = 0; a < n; ++a)
		for (std::size_t b = 0; b < n; ++b)
			for (std::size_t c = 0; c < n; ++c) {
				bool lhs = M(M(a, b), c) == M(a, b);
				bool rhs = M(a, I(b, c)) == a;
				if (lhs != rhs)
					return violation("residuation", {a, b, c}, "a ∧ b ⩽ c ⟺ a ⩽ b → c fails at (a, b, c) = " + triple(a, b, c));
			}
	for (std::size_t a = 0; a < n; ++a)
		for (std::size_t b = 0; b < n; ++b)
			for (std::size_t c = 0; c < n; ++c)
				if (M(a, J(b, c)) != J(M(a, b), M(a, c)))
					return violation("distributivity", {a, b, c}, "failing triple " + triple(a, b, c));
	return std::nullopt;
}

FiniteHeytingAlgebra::FiniteHeytingAlgebra(HeytingTables tables) : t_(std::move(tables)) {
	if (auto v = validate_heyting(t_))
		throw StructureError("not a Heyting algebra: " + v->law + " violated: " + v->message);
	const std::size_t n = t_.size;
	up_.assign(n, ElementSet{});
	down_.assign(n, ElementSet{});
	for (std::size_t a = 0; a < n; ++a)
		for (std::size_t b = 0; b < n; ++b)
			if (t_.meet[a * n + b] == a) {
				up_[a].insert(b);
				down_[b].insert(a);
			}
	for (std::size_t a = 0; a < n; ++a)
		if (down_[a].size() == n)
			top_ = static_cast<Elem>(a);
	neg_.resize(n);
	for (std::size_t a = 0; a < n; ++a)
		neg_[a] = t_.imp[a * n + t_.bot];
}

void FiniteHeytingAlgebra::set_labels(std::vector<std::string> labels) {
	if (!labels.empty() && labels.size() != size())
		throw StructureError("label count does not match algebra size");
	labels_ = std::move(labels);
}

std::string FiniteHeytingAlgebra::label(Elem a) const {
	return labels_.empty() ? std::to_string(a) : labels_[a];
}

FiniteHeytingAlgebra chain_algebra(std::size_t n) {
	HeytingTables t;
	t.size = n;
	t.bot = 0;
	t.meet.resize(n * n);
	t.join.resize(n * n);
	t.imp.resize(n * n);
	for (std::size_t a = 0; a < n; ++a)
		for (std::size_t b = 0; b < n; ++b) {
			t.meet[a * n + b] = static_cast<Elem>(std::min(a, b));
			t.join[a * n + b] = static_cast<Elem>(std::max(a, b));
			t.imp[a * n + b] = static_cast<Elem>(a <= b ? n - 1 : b);
		}
	FiniteHeytingAlgebra h(std::move(t));
	if (n == 3)
		h.set_labels({"bot", "heart", "1"});
	return h;
}

Elem neg(const FiniteHeytingAlgebra &h, std::size_t a) {
	if (a >= h.size())
		throw std::out_of_range("element index " + std::to_string(a) + " out of range");
	return h.neg(static_cast<Elem>(a));
}

bool is_filter(const FiniteHeytingAlgebra &h, ElementSet s) {
	if (s.empty() || !s.subset_of(h.all()))
		return false;
	bool ok = true;
	s.for_each([&](Elem a) {
		if (!h.up(a).subset_of(s))
			ok = false;
		s.for_each([&](Elem b) {
			if (!s.contains(h.meet(a, b)))
				ok = false;
		});
	});
	return ok;
}

bool is_ideal(const FiniteHeytingAlgebra &h, ElementSet s) {
	if (s.empty() || !s.subset_of(h.all()))
		return false;
	bool ok = true;
	s.for_each([&](Elem a) {
		if (!h.down(a).subset_of(s))
			ok = false;
		s.for_each([&](Elem b) {
			if (!s.contains(h.join(a, b)))
				ok = false;
		});
	});
	return ok;
}

ElementSet dense_filter(const FiniteHeytingAlgebra &h) {
	ElementSet by_neg, by_negneg, by_excluded;
	for (Elem a = 0; a < h.size(); ++a) {
		if (h.neg(a) == h.bot())
			by_neg.insert(a);
		if (h.neg(h.neg(a)) == h.top())
			by_negneg.insert(a);
	}
	for (Elem b = 0; b < h.size(); ++b)
		by_excluded.insert(h.join(b, h.neg(b)));
	// The third reading only says every b ∨ ¬b is dense; density of a means
	// a ⩾ b ∨ ¬b for some b, so close upwards.
	ElementSet up_closed;
	by_excluded.for_each([&](Elem a) { up_closed = up_closed | h.up(a); });
	if (by_neg != by_negneg || by_neg != up_closed)
		throw InvariantViolation("dense filter characterisations disagree");
	return by_neg;
}

std::vector<ElementSet> filters(const FiniteHeytingAlgebra &h, bool require_dense) {
	ElementSet fd = require_dense ? dense_filter(h) : ElementSet{};
	std::vector<ElementSet> out;
	for (Elem a = 0; a < h.size(); ++a)
		if (fd.subset_of(h.up(a)))
			out.push_back(h.up(a));
	std::sort(out.begin(), out.end(), canonical_less);
	return out;
}

std::vector<ElementSet> ideals(const FiniteHeytingAlgebra &h) {
	std::vector<ElementSet> out;
	for (Elem a = 0; a < h.size(); ++a)
		out.push_back(h.down(a));
	std::sort(out.begin(), out.end(), canonical_less);
	return out;
}

bool is_closed_ideal(const FiniteHeytingAlgebra &h, ElementSet delta) {
	if (!is_ideal(h, delta))
		throw StructureError("subset is not an ideal");
	bool ok = true;
	delta.for_each([&](Elem a) {
		if (!delta.contains(h.neg(h.neg(a))))
			ok = false;
	});
	return ok;
}

ElementSet closure_N(const FiniteHeytingAlgebra &h, ElementSet delta) {
	if (!is_ideal(h, delta))
		throw StructureError("subset is not an ideal");
	ElementSet out;
	delta.for_each([&](Elem b) { out = out | h.down(h.neg(h.neg(b))); });
	return out;
}

bool is_boolean(const FiniteHeytingAlgebra &h) {
	bool excluded_middle = true;
	for (Elem a = 0; a < h.size(); ++a)
		if (h.join(a, h.neg(a)) != h.top())
			excluded_middle = false;
	bool trivial_dense = dense_filter(h) == ElementSet{h.top()};
	if (excluded_middle != trivial_dense)
		throw InvariantViolation("Boolean characterisations disagree");
	return excluded_middle;
}

FiniteHeytingAlgebra subalgebra(const FiniteHeytingAlgebra &h, ElementSet carrier, std::vector<Elem> *embedding) {
	if (carrier.empty() || !carrier.subset_of(h.all()))
		throw StructureError("subalgebra carrier must be a nonempty subset of the algebra");
	std::vector<Elem> emb = carrier.elements();
	std::vector<Elem> index(h.size(), 0);
	for (std::size_t i = 0; i < emb.size(); ++i)
		index[emb[i]] = static_cast<Elem>(i);
	if (!carrier.contains(h.bot()) || !carrier.contains(h.top()))
		throw StructureError("subalgebra carrier must contain bot and top");
	const std::size_t m = emb.size();
	HeytingTables t;
	t.size = m;
	t.bot = index[h.bot()];
	t.meet.resize(m * m);
	t.join.resize(m * m);
	t.imp.resize(m * m);
	for (std::size_t i = 0; i < m; ++i)
		for (std::size_t j = 0; j < m; ++j) {
			Elem a = emb[i], b = emb[j];
			for (Elem r : {h.meet(a, b), h.join(a, b), h.imp(a, b)})
				if (!carrier.contains(r))
					throw StructureError("subset is not closed under the operations at (" + std::to_string(a) + ", " + std::to_string(b) + ")");
			t.meet[i * m + j] = index[h.meet(a, b)];
			t.join[i * m + j] = index[h.join(a, b)];
			t.imp[i * m + j] = index[h.imp(a, b)];
		}
	FiniteHeytingAlgebra sub(std::move(t));
	if (!h.labels().empty()) {
		std::vector<std::string> labels;
		for (Elem e : emb)
			labels.push_back(h.label(e));
		sub.set_labels(std::move(labels));
	}
	if (embedding)
		*embedding = std::move(emb);
	return sub;
}

bool is_isomorphism(const FiniteHeytingAlgebra &a, const FiniteHeytingAlgebra &b, const std::vector<Elem> &map) {
	if (a.size() != b.size() || map.size() != a.size())
		return false;
	ElementSet image;
	for (Elem x : map) {
		if (x >= b.size())
			return false;
		image.insert(x);
	}
	if (image.size() != a.size() || map[a.bot()] != b.bot())
		return false;
	for (Elem x = 0; x < a.size(); ++x)
		for (Elem y = 0; y < a.size(); ++y) {
			if (map[a.meet(x, y)] != b.meet(map[x], map[y]))
				return false;
			if (map[a.join(x, y)] != b.join(map[x], map[y]))
				return false;
			if (map[a.imp(x, y)] != b.imp(map[x], map[y]))
				return false;
		}
	return true;
}

} // namespace twistlab
