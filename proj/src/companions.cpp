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

#include "twistlab/companions.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include <omp.h>

#include "twistlab/errors.hpp"
#include "twistlab/order.hpp"

namespace twistlab {

namespace {

std::string set_text(const FiniteHeytingAlgebra &h, ElementSet s) {
	std::string out = "{";
	bool first = true;
	s.for_each([&](Elem e) {
		if (!first)
			out += ",";
		first = false;
		out += h.label(e);
	});
	return out + "}";
}

std::string poset_text(const FinitePoset &p) {
	std::ostringstream os;
	os << "poset(" << p.size() << ")[";
	bool first = true;
	for (auto [i, j] : p.pairs()) {
		if (i == j)
			continue;
		if (!first)
			os << ",";
		first = false;
		os << i << "<" << j;
	}
	os << "]";
	return os.str();
}

int thread_count(const CheckOptions &opts) {
	return opts.jobs > 0 ? opts.jobs : omp_get_max_threads();
}

void require_twist_data(const FiniteHeytingAlgebra &a, ElementSet nabla, ElementSet delta) {
	if (!is_filter(a, nabla))
		throw StructureError("nabla " + set_text(a, nabla) + " is not a filter");
	if (!dense_filter(a).subset_of(nabla))
		throw StructureError("nabla " + set_text(a, nabla) + " does not contain the dense filter");
	if (!is_ideal(a, delta))
		throw StructureError("delta " + set_text(a, delta) + " is not an ideal");
}

bool valid(const TwistStructure &t, const Formula &f, const CheckOptions &opts) {
	return is_valid(Structure(t), f, opts).valid;
}

} // namespace

ElementSet CompanionBase::lift(ElementSet s) const {
	ElementSet out;
	s.for_each([&](Elem a) { out.insert(iota.at(a)); });
	return out;
}

Elem CompanionBase::lower(Elem b_elem) const {
	auto it = std::find(iota.begin(), iota.end(), b_elem);
	if (it == iota.end())
		throw std::out_of_range("element " + std::to_string(b_elem) + " of s(A) is not open");
	return static_cast<Elem>(it - iota.begin());
}

CompanionBase companion_base(std::shared_ptr<const FiniteHeytingAlgebra> a) {
	SOfResult s = s_of(*a);
	return CompanionBase{std::move(a), std::make_shared<const FiniteTBA>(std::move(s.tba)), std::move(s.iso)};
}

std::string CompanionInstance::pair_label(Pair p) const {
	const auto &it = base.iota;
	auto a = std::find(it.begin(), it.end(), p.first);
	auto b = std::find(it.begin(), it.end(), p.second);
	if (a == it.end() || b == it.end())
		return t.pair_label(p);
	const FiniteHeytingAlgebra &h = *base.source;
	return "(" + h.label(static_cast<Elem>(a - it.begin())) + "," + h.label(static_cast<Elem>(b - it.begin())) + ")";
}

CompanionInstance companion_structure(const CompanionBase &base, ElementSet nabla, ElementSet delta,
                                      const CompanionOptions &opts) {
	const FiniteHeytingAlgebra &a = *base.source;
	const FiniteTBA &b = *base.b;
	require_twist_data(a, nabla, delta);

	ElementSet nabla_hat = rho_map(b, base.lift(nabla));
	ElementSet delta_hat = sigma_map(b, base.lift(delta));
	TwistStructure t = tw(base.b, nabla_hat, delta_hat);

	GrzResult grz = satisfies_grz(b);
	if (!grz.holds)
		throw InvariantViolation("s(A) does not satisfy Grz");
	if (open_elements(b) != lambda_set(b, nabla_hat))
		throw InvariantViolation("open elements of s(A) differ from Lambda");

	OpenPairsAlgebra op = open_pairs_algebra(t);
	TwistStructure closed = tw(base.source, nabla, closure_N(a, delta));

	std::vector<Pair> lifted;
	lifted.reserve(closed.size());
	for (Pair p : closed.carrier())
		lifted.emplace_back(base.iota[p.first], base.iota[p.second]);
	std::sort(lifted.begin(), lifted.end());
	std::vector<Pair> opens = g2(t);
	std::sort(opens.begin(), opens.end());
	if (lifted != opens)
		throw InvariantViolation("open pairs of T differ from Tw(A, nabla, N(delta)) under iota");

	std::optional<TwTopReport> rep;
	if (!opts.corpus.empty())
		rep = twtop_check(t, opts.corpus, opts.check);
	return CompanionInstance{base, nabla, delta, nabla_hat, delta_hat, std::move(t), std::move(op), std::move(closed),
	                         std::move(rep)};
}

CompanionInstance companion_structure(std::shared_ptr<const FiniteHeytingAlgebra> a, ElementSet nabla,
                                      ElementSet delta, const CompanionOptions &opts) {
	require_twist_data(*a, nabla, delta);
	return companion_structure(companion_base(std::move(a)), nabla, delta, opts);
}

// Replaces each block q ∨ ∼q by q and records which variables occur where.
namespace {

struct SharpMatcher {
	std::set<std::string> p, q;
	bool ok = true;

	static const Formula *block_var(const Formula &f) {
		if (f.kind() != Kind::Or)
			return nullptr;
		const Formula &l = f.lhs(), &r = f.rhs();
		if (l.kind() == Kind::Var && r.kind() == Kind::SNeg && r.lhs().kind() == Kind::Var &&
		    r.lhs().name() == l.name())
			return &l;
		if (r.kind() == Kind::Var && l.kind() == Kind::SNeg && l.lhs().kind() == Kind::Var &&
		    l.lhs().name() == r.name())
			return &r;
		return nullptr;
	}

	Formula walk(const Formula &f) {
		if (const Formula *v = block_var(f)) {
			q.insert(v->name());
			return *v;
		}
		switch (f.kind()) {
		case Kind::Var:
			p.insert(f.name());
			return f;
		case Kind::Bot:
			return f;
		case Kind::SNeg:
		case Kind::SIff:
		case Kind::Box:
		case Kind::Dia:
			ok = false;
			return f;
		default:
			break;
		}
		if (is_unary(f.kind()))
			return Formula::make(f.kind(), walk(f.lhs()));
		Formula l = walk(f.lhs());
		return Formula::make(f.kind(), l, walk(f.rhs()));
	}
};

} // namespace

std::optional<SharpForm> is_form_sharp(const Formula &phi) {
	SharpMatcher m;
	Formula skel = m.walk(phi);
	if (!m.ok)
		return std::nullopt;
	for (const std::string &v : m.q)
		if (m.p.count(v))
			return std::nullopt;
	return SharpForm{skel, {m.p.begin(), m.p.end()}, {m.q.begin(), m.q.end()}};
}

bool delta_independence_check(std::shared_ptr<const FiniteHeytingAlgebra> a, ElementSet nabla, ElementSet d1,
                              ElementSet d2, const Formula &phi, const CheckOptions &opts) {
	if (!is_form_sharp(phi))
		throw StructureError("not of form (#): " + to_string(phi));
	require_twist_data(*a, nabla, d1);
	require_twist_data(*a, nabla, d2);
	bool v1 = valid(tw(a, nabla, d1), phi, opts);
	bool v2 = d1 == d2 ? v1 : valid(tw(a, nabla, d2), phi, opts);
	if (v1 != v2)
		throw InvariantViolation("validity of " + to_string(phi) + " depends on delta: " + set_text(*a, d1) +
		                         " vs " + set_text(*a, d2));
	return v1;
}

bool kleene_characterization(std::shared_ptr<const FiniteHeytingAlgebra> a, ElementSet nabla, ElementSet delta,
                             const CheckOptions &opts) {
	bool order = true;
	delta.for_each([&](Elem x) { nabla.for_each([&](Elem y) { order = order && a->leq(x, y); }); });
	bool v = valid(tw(a, nabla, delta), kleene_axiom(), opts);
	if (v != order)
		throw InvariantViolation("Kleene characterization fails for nabla " + set_text(*a, nabla) + ", delta " +
		                         set_text(*a, delta));
	return v;
}

bool closed_ideal_axiom_check(std::shared_ptr<const FiniteHeytingAlgebra> a, ElementSet nabla, ElementSet delta,
                              const CheckOptions &opts) {
	TwistStructure t = tw(a, nabla, delta);
	bool v = valid(t, axioms(AxiomSet::ClosedIdealAxiom).front(), opts);
	if (v && !is_closed_ideal(*a, delta_of(t)))
		throw InvariantViolation("closed-ideal axiom holds but delta " + set_text(*a, delta) + " is not closed");
	return v;
}

KleeneScanReport kleene_box_implication_scan(std::size_t max_poset, const CheckOptions &opts) {
	struct Task {
		std::size_t alg;
		ElementSet nabla, delta;
	};
	std::vector<FinitePoset> posets = enumerate_posets(max_poset);
	std::vector<std::shared_ptr<const FiniteTBA>> algebras;
	std::vector<Task> tasks;
	for (const FinitePoset &p : posets) {
		auto b = std::make_shared<const FiniteTBA>(powerset_tba(p));
		for (ElementSet f : open_filters(*b))
			for (ElementSet i : closed_ideals(*b))
				tasks.push_back({algebras.size(), f, i});
		algebras.push_back(std::move(b));
	}
	const Formula chi = belnap_translate(kleene_axiom());
	const Formula chi_prime = belnap_translate(kleene_prime_axiom());
	std::vector<signed char> r1(tasks.size()), r2(tasks.size());
	CheckOptions inner = opts;
	inner.jobs = 1;
	std::exception_ptr err;
#pragma omp parallel for schedule(dynamic) num_threads(thread_count(opts))
	for (std::size_t i = 0; i < tasks.size(); ++i) {
		try {
			TwistStructure t = tw(algebras[tasks[i].alg], tasks[i].nabla, tasks[i].delta);
			r1[i] = valid(t, chi, inner);
			r2[i] = valid(t, chi_prime, inner);
		} catch (...) {
#pragma omp critical
			if (!err)
				err = std::current_exception();
		}
	}
	if (err)
		std::rethrow_exception(err);

	KleeneScanReport rep;
	rep.max_poset = max_poset;
	rep.algebras = algebras.size();
	rep.instances = tasks.size();
	for (std::size_t i = 0; i < tasks.size(); ++i) {
		rep.chi_valid += r1[i];
		rep.chi_prime_valid += r2[i];
		if (r1[i] && !r2[i]) {
			const FiniteTBA &b = *algebras[tasks[i].alg];
			rep.violations.push_back(poset_text(posets[tasks[i].alg]) + " nabla " +
			                         set_text(b.algebra(), tasks[i].nabla) + " delta " +
			                         set_text(b.algebra(), tasks[i].delta));
		}
	}
	return rep;
}

KleeneDemoReport kleene_demo(const CheckOptions &opts) {
	KleeneDemoReport rep;
	auto a = std::make_shared<const FiniteHeytingAlgebra>(chain_algebra(3));
	const Elem bot = 0, heart = 1, top = 2;
	const ElementSet nabla{heart, top}, delta{bot, heart};
	TwistStructure t = tw(a, nabla, delta);
	Structure s(t);
	auto &tr = rep.transcript;

	rep.chi_valid = is_valid(s, kleene_axiom(), opts).valid;
	tr.push_back("[finite] Tw(3, {heart,1}, {bot,heart}) validates chi = " + to_string(kleene_axiom()) + ": " +
	             (rep.chi_valid ? "yes" : "no"));

	rep.least_refuter = is_valid(s, kleene_prime_axiom(), opts);
	rep.chi_prime_valid = rep.least_refuter.valid;
	rep.witness = {{"p", Pair{heart, top}}, {"q", Pair{heart, bot}}};
	rep.witness_value = evaluate(s, kleene_prime_axiom(), rep.witness);
	rep.witness_pi1 = std::get<Pair>(rep.witness_value).first;
	tr.push_back("[finite] chi' = " + to_string(kleene_prime_axiom()) + " under p=(heart,1), q=(heart,bot) takes " +
	             value_label(s, rep.witness_value) + ", first component " + a->label(rep.witness_pi1) +
	             (rep.witness_pi1 == top ? "" : " != 1"));
	if (!rep.chi_prime_valid) {
		std::string w;
		for (const auto &[k, v] : *rep.least_refuter.witness)
			w += (w.empty() ? "" : ", ") + k + "=" + value_label(s, v);
		tr.push_back("[finite] least refuting valuation of chi': " + w + " with value " +
		             value_label(s, *rep.least_refuter.value));
	}

	CompanionInstance ci = companion_structure(a, nabla, delta);
	rep.pipeline_chi_valid = valid(ci.t, belnap_translate(kleene_axiom()), opts);
	rep.pipeline_chi_prime_valid = valid(ci.t, belnap_translate(kleene_prime_axiom()), opts);
	rep.open_pairs_chi_prime_valid = is_valid(Structure(ci.open_pairs.structure), kleene_prime_axiom(), opts).valid;
	tr.push_back("[finite] pipeline T = Tw(s(3), rho(nabla), sigma(delta)) has " + std::to_string(ci.t.size()) +
	             " pairs; T validates T_B chi: " + (rep.pipeline_chi_valid ? "yes" : "no") +
	             ", T_B chi': " + (rep.pipeline_chi_prime_valid ? "yes" : "no"));
	tr.push_back("[finite] its open pairs form Tw(3, {heart,1}, N(delta)) with N(delta) = " +
	             set_text(*a, closure_N(*a, delta)) + "; chi' valid there: " +
	             (rep.open_pairs_chi_prime_valid ? "yes" : "no"));

	rep.scan = kleene_box_implication_scan(2, opts);
	tr.push_back("[finite] scan of powerset TBAs over posets <= 2: " + std::to_string(rep.scan.instances) +
	             " twist-structures, " + std::to_string(rep.scan.violations.size()) +
	             " where T_B chi holds and T_B chi' fails");
	tr.push_back("[logic] any companion M of NK-bot contains T_B chi, hence T_B chi'");
	tr.push_back("[logic] faithfulness would then put chi' into NK-bot");
	tr.push_back("[logic] the structure above models NK-bot and refutes chi', so NK-bot has no modal companion");
	return rep;
}

CompanionSweepReport companion_sweep(std::size_t max_poset, std::span<const Formula> corpus,
                                     const CheckOptions &opts) {
	struct Task {
		std::size_t alg;
		ElementSet nabla, closed;
		std::vector<ElementSet> deltas;
	};
	std::vector<FinitePoset> posets;
	std::vector<CompanionBase> bases;
	std::vector<Task> tasks;
	for (const FinitePoset &p : enumerate_posets(max_poset)) {
		auto a = std::make_shared<const FiniteHeytingAlgebra>(heyting_from_poset(p));
		if (a->size() == 1)
			continue;
		const std::size_t idx = bases.size();
		posets.push_back(p);
		bases.push_back(companion_base(a));
		std::vector<ElementSet> ids = ideals(*a);
		for (ElementSet f : filters(*a, true)) {
			std::map<ElementSet, std::size_t> by_closure;
			for (ElementSet d : ids) {
				ElementSet n = closure_N(*a, d);
				auto [it, fresh] = by_closure.emplace(n, tasks.size());
				if (fresh)
					tasks.push_back({idx, f, n, {}});
				tasks[it->second].deltas.push_back(d);
			}
		}
	}

	std::vector<Formula> translated;
	translated.reserve(corpus.size());
	for (const Formula &f : corpus)
		translated.push_back(belnap_translate(f));

	std::vector<std::vector<std::string>> lines(tasks.size());
	std::vector<std::size_t> miss(tasks.size(), 0), sizes(tasks.size(), 0);
	CheckOptions inner = opts;
	inner.jobs = 1;
	std::exception_ptr err;
#pragma omp parallel for schedule(dynamic) num_threads(thread_count(opts))
	for (std::size_t i = 0; i < tasks.size(); ++i) {
		try {
			const Task &task = tasks[i];
			const CompanionBase &cb = bases[task.alg];
			const FiniteHeytingAlgebra &a = *cb.source;
			const std::string where = poset_text(posets[task.alg]) + " nabla " + set_text(a, task.nabla);
			ElementSet sig = sigma_map(*cb.b, cb.lift(task.closed));
			for (ElementSet d : task.deltas)
				if (sigma_map(*cb.b, cb.lift(d)) != sig) {
					++miss[i];
					lines[i].push_back(where + " delta " + set_text(a, d) + ": sigma(delta) != sigma(N(delta))");
				}
			TwistStructure t = tw(cb.b, rho_map(*cb.b, cb.lift(task.nabla)), sig);
			TwistStructure r = tw(cb.source, task.nabla, task.closed);
			sizes[i] = t.size();
			std::vector<ValidityResult> lhs = is_valid_batch(Structure(t), translated, inner);
			std::vector<ValidityResult> rhs = is_valid_batch(Structure(r), corpus, inner);
			for (std::size_t k = 0; k < corpus.size(); ++k)
				if (lhs[k].valid != rhs[k].valid) {
					miss[i] += task.deltas.size();
					lines[i].push_back(where + " N(delta) " + set_text(a, task.closed) + ": " +
					                   to_string(corpus[k]) + (lhs[k].valid ? " (T valid)" : " (T refutes)"));
				}
		} catch (...) {
#pragma omp critical
			if (!err)
				err = std::current_exception();
		}
	}
	if (err)
		std::rethrow_exception(err);

	CompanionSweepReport rep;
	rep.max_poset = max_poset;
	rep.algebras = bases.size();
	rep.distinct = tasks.size();
	rep.formulas = corpus.size();
	for (std::size_t i = 0; i < tasks.size(); ++i) {
		rep.instances += tasks[i].deltas.size();
		rep.mismatches += miss[i];
		rep.max_twist_size = std::max(rep.max_twist_size, sizes[i]);
		for (std::string &l : lines[i])
			rep.mismatch_lines.push_back(std::move(l));
	}
	return rep;
}

} // namespace twistlab
