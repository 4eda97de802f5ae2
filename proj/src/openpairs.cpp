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

#include "twistlab/openpairs.hpp"

#include <algorithm>

#include "twistlab/errors.hpp"

namespace twistlab {

namespace {

const FiniteTBA &require_tba(const TwistStructure &t) {
	if (!t.tba())
		throw StructureError("open pairs need a twist-structure over a TBA");
	return *t.tba();
}

} // namespace

std::vector<Pair> g2(const TwistStructure &t) {
	const FiniteTBA &b = require_tba(t);
	std::vector<Pair> out;
	for (Pair p : t.carrier())
		if (b.box(p.first) == p.first && b.box(p.second) == p.second)
			out.push_back(p);
	return out;
}

ElementSet gamma(const TwistStructure &t) {
	ElementSet out;
	for (Pair p : g2(t))
		out.insert(p.first);
	return out;
}

ElementSet lambda_set(const FiniteTBA &b, ElementSet nabla) {
	ElementSet g = open_elements(b);
	ElementSet out;
	g.for_each([&](Elem a) {
		if (nabla.contains(b.join(a, b.box(b.neg(a)))))
			out.insert(a);
	});
	if (!out.contains(b.bot()))
		throw InvariantViolation("Lambda lacks bot");
	out.for_each([&](Elem x) {
		out.for_each([&](Elem y) {
			if (!out.contains(b.meet(x, y)) || !out.contains(b.join(x, y)) || !out.contains(b.box(b.imp(x, y))))
				throw InvariantViolation("Lambda is not a subalgebra of the open-element algebra");
		});
	});
	return out;
}

ElementSet nabla_g(const TwistStructure &t) {
	const FiniteTBA &b = require_tba(t);
	ElementSet def;
	for (Pair p : g2(t))
		def.insert(b.join(p.first, p.second));
	ElementSet n = t.nabla();
	if (def != (n & open_elements(b)) || def != (n & gamma(t)) || def != (n & lambda_set(b, n)))
		throw InvariantViolation("nabla_G characterisations disagree");
	return def;
}

ElementSet delta_g(const TwistStructure &t) {
	const FiniteTBA &b = require_tba(t);
	ElementSet def;
	for (Pair p : g2(t))
		def.insert(b.meet(p.first, p.second));
	ElementSet d = t.delta();
	if (def != (d & open_elements(b)) || def != (d & gamma(t)))
		throw InvariantViolation("delta_G characterisations disagree");
	return def;
}

bool g2_closed_under_boxed_imp(const TwistStructure &t) {
	const FiniteTBA &b = require_tba(t);
	std::vector<Pair> pairs = g2(t);
	for (Pair x : pairs)
		for (Pair y : pairs) {
			Pair r{b.box(b.imp(x.first, y.first)), b.meet(x.first, y.second)};
			if (!t.contains(r) || b.box(r.first) != r.first || b.box(r.second) != r.second)
				return false;
		}
	return true;
}

std::pair<bool, bool> gamma_imp_closure_equiv(const TwistStructure &t) {
	const FiniteTBA &b = require_tba(t);
	bool sub = gamma(t).subset_of(lambda_set(b, t.nabla()));
	return {sub, g2_closed_under_boxed_imp(t)};
}

OpenPairsAlgebra open_pairs_algebra(const TwistStructure &t) {
	const FiniteTBA &b = require_tba(t);
	ElementSet gam = gamma(t);
	ElementSet lam = lambda_set(b, t.nabla());
	if (gam != lam) {
		ElementSet diff = gam.minus(lam);
		if (!diff.empty())
			throw StructureError("Gamma differs from Lambda: " + b.algebra().label(diff.elements().front()) + " is in Gamma but not in Lambda");
		throw StructureError("Gamma differs from Lambda: " + b.algebra().label(lam.minus(gam).elements().front()) + " is in Lambda but not in Gamma");
	}
	std::vector<Elem> g_emb;
	FiniteHeytingAlgebra g = open_algebra(b, &g_emb);
	std::vector<Elem> to_g(b.size(), 0);
	for (std::size_t i = 0; i < g_emb.size(); ++i)
		to_g[g_emb[i]] = static_cast<Elem>(i);
	ElementSet gam_in_g;
	gam.for_each([&](Elem a) { gam_in_g.insert(to_g[a]); });
	std::vector<Elem> sub_emb;
	auto sub = std::make_shared<const FiniteHeytingAlgebra>(subalgebra(g, gam_in_g, &sub_emb));
	std::vector<Elem> embedding(sub_emb.size());
	std::vector<Elem> to_sub(b.size(), 0);
	for (std::size_t i = 0; i < sub_emb.size(); ++i) {
		embedding[i] = g_emb[sub_emb[i]];
		to_sub[embedding[i]] = static_cast<Elem>(i);
	}
	ElementSet nab, del;
	nabla_g(t).for_each([&](Elem a) { nab.insert(to_sub[a]); });
	delta_g(t).for_each([&](Elem a) { del.insert(to_sub[a]); });
	TwistStructure s = TwistStructure::make(sub, nab, del);
	std::vector<Pair> expected = g2(t);
	std::vector<Pair> got;
	for (Pair p : s.carrier())
		got.emplace_back(embedding[p.first], embedding[p.second]);
	std::sort(got.begin(), got.end());
	if (got != expected)
		throw InvariantViolation("open-pairs carrier differs from G2(T)");
	return OpenPairsAlgebra{std::move(s), std::move(embedding)};
}

bool box_pair_closed(const TwistStructure &t) {
	const FiniteTBA &b = require_tba(t);
	for (Pair p : t.carrier())
		if (!t.contains({b.box(p.first), b.box(p.second)}))
			return false;
	return true;
}

OpenPairsReport open_pairs_report(const TwistStructure &t) {
	const FiniteTBA &b = require_tba(t);
	OpenPairsReport r;
	r.g2 = g2(t);
	r.open = open_elements(b);
	r.gamma = gamma(t);
	r.lambda = lambda_set(b, t.nabla());
	r.nabla_g = nabla_g(t);
	r.delta_g = delta_g(t);
	r.gamma_sub_lambda = r.gamma.subset_of(r.lambda);
	r.lambda_sub_gamma = r.lambda.subset_of(r.gamma);
	r.gamma_eq_lambda = r.gamma == r.lambda;
	r.g2_imp_closed = g2_closed_under_boxed_imp(t);
	r.box_pair_closed = box_pair_closed(t);
	if (r.gamma_eq_lambda)
		r.algebra = open_pairs_algebra(t);
	return r;
}

} // namespace twistlab
