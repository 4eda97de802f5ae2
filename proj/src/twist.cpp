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

#include "twistlab/twist.hpp"

#include "twistlab/errors.hpp"

namespace twistlab {

namespace {

std::string set_str(ElementSet s) {
	std::string out = "{";
	bool first = true;
	s.for_each([&](Elem e) {
		out += (first ? "" : ", ") + std::to_string(e);
		first = false;
	});
	return out + "}";
}

} // namespace

TwistStructure TwistStructure::make(std::shared_ptr<const FiniteHeytingAlgebra> base, ElementSet nabla, ElementSet delta) {
	if (!base)
		throw StructureError("twist-structure needs a base algebra");
	if (!is_filter(*base, nabla))
		throw StructureError("nabla " + set_str(nabla) + " is not a filter");
	ElementSet fd = dense_filter(*base);
	if (!fd.subset_of(nabla)) {
		Elem missing = fd.minus(nabla).elements().front();
		throw StructureError("nabla lacks the dense element " + base->label(missing));
	}
	if (!is_ideal(*base, delta))
		throw StructureError("delta " + set_str(delta) + " is not an ideal");
	TwistStructure t;
	t.lattice_ = std::move(base);
	t.nabla_ = nabla;
	t.delta_ = delta;
	t.build();
	return t;
}

TwistStructure TwistStructure::make(std::shared_ptr<const FiniteTBA> base, ElementSet nabla, ElementSet delta) {
	if (!base)
		throw StructureError("twist-structure needs a base algebra");
	if (!is_open_filter(*base, nabla))
		throw StructureError("nabla " + set_str(nabla) + " is not an open filter");
	if (!is_closed_ideal(*base, delta))
		throw StructureError("delta " + set_str(delta) + " is not a closed ideal");
	TwistStructure t;
	t.lattice_ = std::shared_ptr<const FiniteHeytingAlgebra>(base, &base->algebra());
	t.tba_ = std::move(base);
	t.nabla_ = nabla;
	t.delta_ = delta;
	t.build();
	return t;
}

void TwistStructure::build() {
	const FiniteHeytingAlgebra &c = *lattice_;
	const std::size_t n = c.size();
	index_.assign(n * n, -1);
	for (Elem a = 0; a < n; ++a)
		for (Elem b = 0; b < n; ++b)
			if (nabla_.contains(c.join(a, b)) && delta_.contains(c.meet(a, b))) {
				index_[a * n + b] = static_cast<int>(carrier_.size());
				carrier_.emplace_back(a, b);
			}
	ElementSet firsts;
	for (Pair p : carrier_)
		firsts.insert(p.first);
	if (firsts != c.all())
		throw InvariantViolation("first projection of the twist carrier is not onto the base");
	if (!carrier_closed(*this))
		throw InvariantViolation("twist carrier is not closed under the operations");
}

bool TwistStructure::contains(Pair p) const {
	const std::size_t n = lattice_->size();
	return p.first < n && p.second < n && index_[p.first * n + p.second] >= 0;
}

int TwistStructure::index_of(Pair p) const {
	const std::size_t n = lattice_->size();
	if (p.first >= n || p.second >= n)
		return -1;
	return index_[p.first * n + p.second];
}

Pair TwistStructure::conj(Pair x, Pair y) const {
	return {lattice_->meet(x.first, y.first), lattice_->join(x.second, y.second)};
}

Pair TwistStructure::disj(Pair x, Pair y) const {
	return {lattice_->join(x.first, y.first), lattice_->meet(x.second, y.second)};
}

Pair TwistStructure::imp(Pair x, Pair y) const {
	return {lattice_->imp(x.first, y.first), lattice_->meet(x.first, y.second)};
}

Pair TwistStructure::box(Pair x) const {
	if (!tba_)
		throw LanguageError("box needs a twist-structure over a TBA");
	return {tba_->box(x.first), tba_->dia(x.second)};
}

Pair TwistStructure::dia(Pair x) const {
	if (!tba_)
		throw LanguageError("diamond needs a twist-structure over a TBA");
	return {tba_->dia(x.first), tba_->box(x.second)};
}

std::string TwistStructure::pair_label(Pair p) const {
	return "(" + lattice_->label(p.first) + "," + lattice_->label(p.second) + ")";
}

TwistStructure full_twist(std::shared_ptr<const FiniteHeytingAlgebra> base) {
	ElementSet all = base->all();
	return TwistStructure::make(std::move(base), all, all);
}

TwistStructure full_twist(std::shared_ptr<const FiniteTBA> base) {
	ElementSet all = base->algebra().all();
	return TwistStructure::make(std::move(base), all, all);
}

TwistStructure tw(std::shared_ptr<const FiniteHeytingAlgebra> base, ElementSet nabla, ElementSet delta) {
	return TwistStructure::make(std::move(base), nabla, delta);
}

TwistStructure tw(std::shared_ptr<const FiniteTBA> base, ElementSet nabla, ElementSet delta) {
	return TwistStructure::make(std::move(base), nabla, delta);
}

Pair twist_apply(const TwistStructure &t, TwistOp op, std::span<const Pair> args) {
	std::size_t arity = 2;
	if (op == TwistOp::Bot)
		arity = 0;
	else if (op == TwistOp::SNot || op == TwistOp::Box || op == TwistOp::Dia)
		arity = 1;
	if (args.size() != arity)
		throw std::invalid_argument("wrong number of arguments for twist operation");
	for (Pair p : args)
		if (!t.contains(p))
			throw StructureError("pair " + t.pair_label(p) + " is not in the twist carrier");
	Pair r;
	switch (op) {
	case TwistOp::And: r = t.conj(args[0], args[1]); break;
	case TwistOp::Or: r = t.disj(args[0], args[1]); break;
	case TwistOp::Imp: r = t.imp(args[0], args[1]); break;
	case TwistOp::SNot: r = t.snot(args[0]); break;
	case TwistOp::Bot: r = t.bot(); break;
	case TwistOp::Box: r = t.box(args[0]); break;
	case TwistOp::Dia: r = t.dia(args[0]); break;
	}
	if (!t.contains(r))
		throw InvariantViolation("twist operation left the carrier");
	return r;
}

ElementSet nabla_of(const TwistStructure &t) {
	ElementSet out;
	for (Pair p : t.carrier())
		out.insert(t.base().join(p.first, p.second));
	return out;
}

ElementSet delta_of(const TwistStructure &t) {
	ElementSet out;
	for (Pair p : t.carrier())
		out.insert(t.base().meet(p.first, p.second));
	return out;
}

bool carrier_closed(const TwistStructure &t) {
	if (!t.contains(t.bot()))
		return false;
	const bool modal = t.kind() == BaseKind::Tba;
	for (Pair x : t.carrier()) {
		if (!t.contains(t.snot(x)))
			return false;
		if (modal && (!t.contains(t.box(x)) || !t.contains(t.dia(x))))
			return false;
		for (Pair y : t.carrier())
			if (!t.contains(t.conj(x, y)) || !t.contains(t.disj(x, y)) || !t.contains(t.imp(x, y)))
				return false;
	}
	return true;
}

} // namespace twistlab
