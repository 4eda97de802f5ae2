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

#include "twistlab/order.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

#include "twistlab/errors.hpp"

namespace twistlab {

namespace {

std::string pair_str(std::size_t i, std::size_t j) { return "(" + std::to_string(i) + ", " + std::to_string(j) + ")"; }

// Dense boolean matrix for validation, before anything is trusted.
using Matrix = std::vector<std::vector<bool>>;

std::optional<Violation> build_matrix(std::size_t n, std::span<const RelationPair> le, bool closure, Matrix &r) {
	if (n == 0)
		return Violation{"shape", {}, "poset must have at least one element"};
	if (n > kMaxElements)
		return Violation{"shape", {n}, "poset has " + std::to_string(n) + " elements; at most 64 are supported"};
	r.assign(n, std::vector<bool>(n, false));
	for (auto [i, j] : le) {
		if (i >= n || j >= n)
			return Violation{"range", {i, j}, "pair " + pair_str(i, j) + " out of range"};
		r[i][j] = true;
	}
	if (closure) {
		for (std::size_t i = 0; i < n; ++i)
			r[i][i] = true;
		for (std::size_t k = 0; k < n; ++k)
			for (std::size_t i = 0; i < n; ++i)
				if (r[i][k])
					for (std::size_t j = 0; j < n; ++j)
						if (r[k][j])
							r[i][j] = true;
	}
	for (std::size_t i = 0; i < n; ++i)
		if (!r[i][i])
			return Violation{"reflexivity", {i, i}, "missing pair " + pair_str(i, i)};
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = i + 1; j < n; ++j)
			if (r[i][j] && r[j][i])
				return Violation{"antisymmetry", {i, j}, "both " + pair_str(i, j) + " and " + pair_str(j, i)};
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			if (r[i][j])
				for (std::size_t k = 0; k < n; ++k)
					if (r[j][k] && !r[i][k])
						return Violation{"transitivity", {i, j, k}, pair_str(i, j) + " and " + pair_str(j, k) + " but not " + pair_str(i, k)};
	return std::nullopt;
}

} // namespace

std::optional<Violation> validate_poset(std::size_t n, std::span<const RelationPair> le, bool closure) {
	Matrix r;
	return build_matrix(n, le, closure, r);
}

FinitePoset FinitePoset::from_relation(std::size_t n, std::span<const RelationPair> le, bool closure) {
	Matrix r;
	if (auto v = build_matrix(n, le, closure, r))
		throw StructureError("not a partial order: " + v->law + " violated: " + v->message);
	std::vector<ElementSet> ups(n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			if (r[i][j])
				ups[i].insert(j);
	return from_up_sets(std::move(ups));
}

FinitePoset FinitePoset::from_up_sets(std::vector<ElementSet> ups) {
	const std::size_t n = ups.size();
	if (n == 0 || n > kMaxElements)
		throw StructureError("poset size must be between 1 and 64");
	for (std::size_t i = 0; i < n; ++i) {
		if (!ups[i].contains(i) || !ups[i].subset_of(ElementSet::full(n)))
			throw StructureError("not a partial order: reflexivity violated at " + std::to_string(i));
		ups[i].for_each([&](Elem j) {
			if (j != i && ups[j].contains(i))
				throw StructureError("not a partial order: antisymmetry violated at " + pair_str(i, j));
			if (!ups[j].subset_of(ups[i]))
				throw StructureError("not a partial order: transitivity violated below " + pair_str(i, j));
		});
	}
	FinitePoset p;
	p.up_ = std::move(ups);
	p.down_.assign(n, ElementSet{});
	for (std::size_t i = 0; i < n; ++i)
		p.up_[i].for_each([&](Elem j) { p.down_[j].insert(i); });
	return p;
}

FinitePoset FinitePoset::chain(std::size_t n) {
	std::vector<ElementSet> ups(n);
	for (std::size_t i = 0; i < n; ++i)
		ups[i] = ElementSet::full(n).minus(ElementSet::full(i));
	return from_up_sets(std::move(ups));
}

FinitePoset FinitePoset::antichain(std::size_t n) {
	std::vector<ElementSet> ups(n);
	for (std::size_t i = 0; i < n; ++i)
		ups[i] = ElementSet{static_cast<Elem>(i)};
	return from_up_sets(std::move(ups));
}

std::vector<RelationPair> FinitePoset::pairs() const {
	std::vector<RelationPair> out;
	for (std::size_t i = 0; i < size(); ++i)
		up_[i].for_each([&](Elem j) { out.emplace_back(i, j); });
	return out;
}

std::uint64_t FinitePoset::relation_bits() const {
	const std::size_t n = size();
	if (n > 8)
		throw std::length_error("relation_bits needs at most 8 elements");
	std::uint64_t bits = 0;
	for (std::size_t i = 0; i < n; ++i)
		up_[i].for_each([&](Elem j) { bits |= std::uint64_t{1} << (i * n + j); });
	return bits;
}

bool is_up_set(const FinitePoset &p, ElementSet s) {
	bool ok = s.subset_of(p.worlds());
	s.for_each([&](Elem x) {
		if (!p.up(x).subset_of(s))
			ok = false;
	});
	return ok;
}

std::vector<ElementSet> up_sets(const FinitePoset &p) {
	// Grow from ∅ by adding whole principal up-sets; the family is the
	// closure of {∅} under U ↦ U ∪ ↑x.
	std::set<std::uint64_t> seen{0};
	std::vector<ElementSet> frontier{ElementSet{}};
	while (!frontier.empty()) {
		std::vector<ElementSet> next;
		for (ElementSet u : frontier)
			for (std::size_t x = 0; x < p.size(); ++x) {
				ElementSet v = u | p.up(x);
				if (seen.insert(v.bits()).second)
					next.push_back(v);
			}
		frontier = std::move(next);
	}
	std::vector<ElementSet> out;
	out.reserve(seen.size());
	for (std::uint64_t b : seen)
		out.emplace_back(b);
	std::sort(out.begin(), out.end(), canonical_less);
	return out;
}

FiniteHeytingAlgebra heyting_from_poset(const FinitePoset &p) {
	std::vector<ElementSet> ups = up_sets(p);
	const std::size_t m = ups.size();
	if (m > kMaxElements)
		throw StructureError("poset has " + std::to_string(m) + " up-sets; at most 64 are supported");
	std::unordered_map<std::uint64_t, Elem> index;
	for (std::size_t i = 0; i < m; ++i)
		index.emplace(ups[i].bits(), static_cast<Elem>(i));
	HeytingTables t;
	t.size = m;
	t.bot = index.at(0);
	t.meet.resize(m * m);
	t.join.resize(m * m);
	t.imp.resize(m * m);
	for (std::size_t i = 0; i < m; ++i)
		for (std::size_t j = 0; j < m; ++j) {
			ElementSet u = ups[i], v = ups[j];
			ElementSet w;
			for (std::size_t x = 0; x < p.size(); ++x)
				if ((p.up(x) & u).subset_of(v))
					w.insert(x);
			t.meet[i * m + j] = index.at((u & v).bits());
			t.join[i * m + j] = index.at((u | v).bits());
			t.imp[i * m + j] = index.at(w.bits());
		}
	return FiniteHeytingAlgebra(std::move(t));
}

std::vector<Elem> join_irreducibles(const FiniteHeytingAlgebra &h) {
	std::vector<Elem> out;
	for (Elem a = 0; a < h.size(); ++a) {
		if (a == h.bot())
			continue;
		bool irreducible = true;
		for (Elem b = 0; b < h.size() && irreducible; ++b)
			for (Elem c = 0; c < h.size(); ++c)
				if (h.join(b, c) == a && b != a && c != a) {
					irreducible = false;
					break;
				}
		if (irreducible)
			out.push_back(a);
	}
	return out;
}

FinitePoset join_irreducible_poset(const FiniteHeytingAlgebra &h) {
	std::vector<Elem> js = join_irreducibles(h);
	if (js.empty())
		throw StructureError("the one-element algebra has no join-irreducibles");
	std::vector<ElementSet> ups(js.size());
	for (std::size_t x = 0; x < js.size(); ++x)
		for (std::size_t y = 0; y < js.size(); ++y)
			if (h.leq(js[y], js[x]))
				ups[x].insert(y);
	return FinitePoset::from_up_sets(std::move(ups));
}

std::vector<Elem> birkhoff_map(const FiniteHeytingAlgebra &h) {
	std::vector<Elem> js = join_irreducibles(h);
	FinitePoset p = join_irreducible_poset(h);
	std::vector<ElementSet> ups = up_sets(p);
	std::unordered_map<std::uint64_t, Elem> index;
	for (std::size_t i = 0; i < ups.size(); ++i)
		index.emplace(ups[i].bits(), static_cast<Elem>(i));
	std::vector<Elem> map(h.size());
	for (Elem a = 0; a < h.size(); ++a) {
		ElementSet below;
		for (std::size_t x = 0; x < js.size(); ++x)
			if (h.leq(js[x], a))
				below.insert(x);
		auto it = index.find(below.bits());
		if (it == index.end())
			throw InvariantViolation("join-irreducibles below an element do not form an up-set");
		map[a] = it->second;
	}
	return map;
}

std::uint64_t canonical_form(const FinitePoset &p) {
	const std::size_t n = p.size();
	std::vector<std::size_t> perm(n);
	std::iota(perm.begin(), perm.end(), 0);
	std::uint64_t best = ~std::uint64_t{0};
	do {
		std::uint64_t bits = 0;
		for (std::size_t i = 0; i < n; ++i)
			p.up(i).for_each([&](Elem j) { bits |= std::uint64_t{1} << (perm[i] * n + perm[j]); });
		best = std::min(best, bits);
	} while (std::next_permutation(perm.begin(), perm.end()));
	return best;
}

namespace {

FinitePoset from_bits(std::size_t n, std::uint64_t bits) {
	std::vector<ElementSet> ups(n);
	for (std::size_t i = 0; i < n; ++i)
		ups[i] = ElementSet((bits >> (i * n)) & ElementSet::full(n).bits());
	return FinitePoset::from_up_sets(std::move(ups));
}

// Posets on {0..k} from posets on {0..k−1}: pick a down-set D (elements
// below k) and an up-set U (elements above k) with D × U inside the order.
std::vector<std::uint64_t> extend(std::size_t k, const std::vector<std::uint64_t> &prev) {
	std::vector<std::uint64_t> out;
	const std::size_t n = k + 1;
	for (std::uint64_t bits : prev) {
		std::vector<ElementSet> up(k), down(k);
		for (std::size_t i = 0; i < k; ++i)
			up[i] = ElementSet((bits >> (i * k)) & ElementSet::full(k).bits());
		for (std::size_t i = 0; i < k; ++i)
			up[i].for_each([&](Elem j) { down[j].insert(i); });
		std::vector<ElementSet> downsets, upsets;
		for (std::uint64_t s = 0; s < (std::uint64_t{1} << k); ++s) {
			ElementSet S(s);
			bool is_down = true, is_up = true;
			S.for_each([&](Elem x) {
				if (!down[x].subset_of(S))
					is_down = false;
				if (!up[x].subset_of(S))
					is_up = false;
			});
			if (is_down)
				downsets.push_back(S);
			if (is_up)
				upsets.push_back(S);
		}
		for (ElementSet D : downsets)
			for (ElementSet U : upsets) {
				if (!(D & U).empty())
					continue;
				bool compatible = true;
				D.for_each([&](Elem d) {
					if (!U.subset_of(up[d]))
						compatible = false;
				});
				if (!compatible)
					continue;
				std::uint64_t nb = 0;
				for (std::size_t i = 0; i < k; ++i) {
					up[i].for_each([&](Elem j) { nb |= std::uint64_t{1} << (i * n + j); });
					if (D.contains(i))
						nb |= std::uint64_t{1} << (i * n + k);
				}
				nb |= std::uint64_t{1} << (k * n + k);
				U.for_each([&](Elem j) { nb |= std::uint64_t{1} << (k * n + j); });
				out.push_back(nb);
			}
	}
	std::sort(out.begin(), out.end());
	return out;
}

} // namespace

void for_each_poset(std::size_t max_n, const PosetEnumOptions &opts, const std::function<void(const FinitePoset &)> &visit) {
	if (max_n > kMaxEnumeratedPosetSize)
		throw ResourceError("poset enumeration is limited to " + std::to_string(kMaxEnumeratedPosetSize) + " elements");
	std::vector<std::uint64_t> level{1}; // the one-point poset
	for (std::size_t n = 1; n <= max_n; ++n) {
		if (n > 1)
			level = extend(n - 1, level);
		if (opts.exact_size && n != max_n)
			continue;
		std::set<std::uint64_t> classes;
		for (std::uint64_t bits : level) {
			FinitePoset p = from_bits(n, bits);
			if (opts.up_to_iso && !classes.insert(canonical_form(p)).second)
				continue;
			visit(p);
		}
	}
}

std::vector<FinitePoset> enumerate_posets(std::size_t max_n, const PosetEnumOptions &opts) {
	std::vector<FinitePoset> out;
	for_each_poset(max_n, opts, [&](const FinitePoset &p) { out.push_back(p); });
	return out;
}

} // namespace twistlab
