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

#include "twistlab/semantics.hpp"

#include <algorithm>

#include "kernel.hpp"
#include "twistlab/errors.hpp"
#include "twistlab/openpairs.hpp"

namespace twistlab {

std::string value_label(const Structure &s, const Value &v) {
	if (const Pair *p = std::get_if<Pair>(&v))
		return "(" + s.lattice().label(p->first) + "," + s.lattice().label(p->second) + ")";
	return s.lattice().label(std::get<Elem>(v));
}

void check_language(const Structure &s, const Formula &f) {
	if (!s.is_twist() && (contains(f, Kind::SNeg) || contains(f, Kind::SIff)))
		throw LanguageError("strong negation needs a twist-structure");
	if (!s.modal() && (contains(f, Kind::Box) || contains(f, Kind::Dia)))
		throw LanguageError("modal connectives need a TBA base");
}

namespace {

std::vector<std::string> sorted_vars(const Formula &f) {
	std::set<std::string> vs = f.variables();
	return {vs.begin(), vs.end()};
}

// Direct recursion over the base operations; no tables.
class RefEval {
public:
	RefEval(const Structure &s, const std::vector<std::string> &vars, const std::vector<Value> &vals)
	    : s_(s), vars_(vars), vals_(vals) {}

	Value operator()(const Formula &f) const {
		const FiniteHeytingAlgebra &h = s_.lattice();
		const TwistStructure *t = s_.twist();
		switch (f.kind()) {
		case Kind::Var: {
			auto it = std::lower_bound(vars_.begin(), vars_.end(), f.name());
			if (it == vars_.end() || *it != f.name())
				throw std::invalid_argument("unbound variable '" + f.name() + "'");
			return vals_[static_cast<std::size_t>(it - vars_.begin())];
		}
		case Kind::Bot:
			if (t)
				return t->bot();
			return h.bot();
		case Kind::SNeg: return t->snot(pair((*this)(f.lhs())));
		case Kind::Box:
			if (t)
				return t->box(pair((*this)(f.lhs())));
			return s_.tba()->box(elem((*this)(f.lhs())));
		case Kind::Dia:
			if (t)
				return t->dia(pair((*this)(f.lhs())));
			return s_.tba()->dia(elem((*this)(f.lhs())));
		case Kind::And:
		case Kind::Or:
		case Kind::Imp: {
			Value a = (*this)(f.lhs());
			Value b = (*this)(f.rhs());
			if (t) {
				if (f.kind() == Kind::And)
					return t->conj(pair(a), pair(b));
				if (f.kind() == Kind::Or)
					return t->disj(pair(a), pair(b));
				return t->imp(pair(a), pair(b));
			}
			if (f.kind() == Kind::And)
				return h.meet(elem(a), elem(b));
			if (f.kind() == Kind::Or)
				return h.join(elem(a), elem(b));
			return h.imp(elem(a), elem(b));
		}
		default: throw InvariantViolation("evaluator received an undesugared formula");
		}
	}

private:
	static Pair pair(const Value &v) { return std::get<Pair>(v); }
	static Elem elem(const Value &v) { return std::get<Elem>(v); }

	const Structure &s_;
	const std::vector<std::string> &vars_;
	const std::vector<Value> &vals_;
};

std::uint64_t valuation_count(const Structure &s, std::size_t k, const CheckOptions &opts) {
	const std::uint64_t m = s.value_count();
	std::uint64_t total = 1;
	for (std::size_t j = 0; j < k; ++j) {
		if (total > opts.valuation_cap / m + 1) {
			total = opts.valuation_cap + 1;
			break;
		}
		total *= m;
	}
	if (total > opts.valuation_cap)
		throw ResourceError(std::to_string(m) + "^" + std::to_string(k) + " valuations exceed the valuation cap of " +
		                    std::to_string(opts.valuation_cap));
	return total;
}

std::vector<Value> all_values(const Structure &s) {
	std::vector<Value> out;
	for (std::size_t c = 0; c < s.value_count(); ++c)
		out.push_back(detail::decode(s, static_cast<detail::Code>(c)));
	return out;
}

Valuation to_valuation(const std::vector<std::string> &vars, const std::vector<Value> &vals) {
	Valuation v;
	for (std::size_t j = 0; j < vars.size(); ++j)
		v.emplace(vars[j], vals[j]);
	return v;
}

} // namespace

Value evaluate(const Structure &s, const Formula &f, const Valuation &v) {
	Formula g = desugar(f);
	check_language(s, g);
	std::vector<std::string> vars;
	std::vector<Value> vals;
	for (const auto &[name, val] : v) {
		detail::encode(s, val); // membership check
		vars.push_back(name);
		vals.push_back(val);
	}
	return RefEval(s, vars, vals)(g);
}

bool is_designated(const Structure &s, const Value &v) {
	if (const Pair *p = std::get_if<Pair>(&v))
		return p->first == s.lattice().top();
	return std::get<Elem>(v) == s.lattice().top();
}

ValidityResult is_valid_reference(const Structure &s, const Formula &f, const CheckOptions &opts) {
	Formula g = desugar(f);
	check_language(s, g);
	std::vector<std::string> vars = sorted_vars(g);
	const std::size_t k = vars.size();
	valuation_count(s, k, opts);
	const std::vector<Value> values = all_values(s);
	std::vector<std::size_t> digits(k, 0);
	std::vector<Value> vals(k, values.front());
	RefEval eval(s, vars, vals);
	for (;;) {
		for (std::size_t j = 0; j < k; ++j)
			vals[j] = values[digits[j]];
		Value r = eval(g);
		if (!is_designated(s, r))
			return ValidityResult{false, to_valuation(vars, vals), r};
		std::size_t j = k;
		bool done = true;
		while (j-- > 0) {
			if (++digits[j] < values.size()) {
				done = false;
				break;
			}
			digits[j] = 0;
		}
		if (done)
			return ValidityResult{};
	}
}

std::vector<ValidityResult> is_valid_batch(const Structure &s, std::span<const Formula> fs, const CheckOptions &opts) {
	std::vector<Formula> core;
	core.reserve(fs.size());
	std::map<std::vector<std::string>, std::vector<std::size_t>> groups;
	for (std::size_t i = 0; i < fs.size(); ++i) {
		core.push_back(desugar(fs[i]));
		check_language(s, core.back());
		groups[sorted_vars(core.back())].push_back(i);
	}
	std::vector<ValidityResult> out(fs.size());
	if (fs.empty())
		return out;
	const detail::ValueAlgebra alg = detail::compile_structure(s);
	const std::vector<Value> values = all_values(s);
	for (const auto &[vars, members] : groups) {
		valuation_count(s, vars.size(), opts);
		std::vector<Formula> group;
		for (std::size_t i : members)
			group.push_back(core[i]);
		std::vector<std::uint64_t> fails = detail::sweep(alg, vars, group, opts.jobs);
		for (std::size_t g = 0; g < members.size(); ++g) {
			if (fails[g] == detail::kNoRefuter)
				continue;
			std::vector<Value> vals(vars.size(), values.front());
			std::uint64_t x = fails[g];
			for (std::size_t j = vars.size(); j-- > 0;) {
				vals[j] = values[x % values.size()];
				x /= values.size();
			}
			Value r = RefEval(s, vars, vals)(group[g]);
			if (is_designated(s, r))
				throw InvariantViolation("kernel witness does not refute " + to_string(fs[members[g]]));
			out[members[g]] = ValidityResult{false, to_valuation(vars, vals), r};
		}
	}
	return out;
}

ValidityResult is_valid(const Structure &s, const Formula &f, const CheckOptions &opts) {
	return is_valid_batch(s, std::span<const Formula>(&f, 1), opts).front();
}

AxiomCheck models_axioms(const Structure &s, AxiomSet set, const CheckOptions &opts) {
	std::vector<Formula> ax = axioms(set);
	std::vector<ValidityResult> rs = is_valid_batch(s, ax, opts);
	for (std::size_t i = 0; i < ax.size(); ++i)
		if (!rs[i].valid)
			return AxiomCheck{false, ax[i], rs[i]};
	return AxiomCheck{};
}

std::string corpus_variable(std::size_t i) {
	static const char *names[] = {"p", "q", "r", "s", "t", "u", "v", "w"};
	if (i < 8)
		return names[i];
	return "p" + std::to_string(i);
}

std::vector<Formula> enumerate_formulas(Language lang, std::size_t depth, std::size_t vars, std::size_t budget) {
	std::vector<Kind> unary;
	if (lang == Language::Ls || lang == Language::Lsbox)
		unary.push_back(Kind::SNeg);
	if (lang == Language::Lbox || lang == Language::Lsbox) {
		unary.push_back(Kind::Box);
		unary.push_back(Kind::Dia);
	}
	const Kind binary[] = {Kind::And, Kind::Or, Kind::Imp};

	std::vector<Formula> out;
	std::vector<std::size_t> level_start; // index of the first formula at each level
	auto full = [&] { return out.size() >= budget; };
	level_start.push_back(0);
	for (std::size_t i = 0; i < vars && !full(); ++i)
		out.push_back(Formula::var(corpus_variable(i)));
	if (!full())
		out.push_back(Formula::bot());
	for (std::size_t d = 1; d <= depth && !full(); ++d) {
		const std::size_t prev_begin = level_start.back();
		const std::size_t prev_end = out.size();
		level_start.push_back(prev_end);
		for (Kind k : unary)
			for (std::size_t i = prev_begin; i < prev_end && !full(); ++i)
				out.push_back(Formula::make(k, out[i]));
		for (std::size_t i = 0; i < prev_end && !full(); ++i)
			for (std::size_t j = 0; j < prev_end && !full(); ++j) {
				if (i < prev_begin && j < prev_begin)
					continue;
				for (Kind k : binary) {
					if (full())
						break;
					out.push_back(Formula::make(k, out[i], out[j]));
				}
			}
	}
	return out;
}

std::vector<Formula> default_twtop_corpus() {
	std::vector<Formula> out = axioms(AxiomSet::N4Bot);
	out.push_back(kleene_axiom());
	out.push_back(kleene_prime_axiom());
	for (const Formula &f : axioms(AxiomSet::ClosedIdealAxiom))
		out.push_back(f);
	for (Formula &f : enumerate_formulas(Language::Ls, 2, 2, 2000))
		out.push_back(std::move(f));
	return out;
}

TwTopReport twtop_check(const TwistStructure &t, std::span<const Formula> formulas, const CheckOptions &opts) {
	if (!t.tba())
		throw StructureError("the preservation check needs a twist-structure over a TBA");
	const FiniteTBA &b = *t.tba();
	TwTopReport rep;
	rep.grz = satisfies_grz(b).holds;
	ElementSet lam = lambda_set(b, t.nabla());
	rep.open_eq_lambda = open_elements(b) == lam;
	rep.gamma_eq_lambda = gamma(t) == lam;
	OpenPairsAlgebra opa = open_pairs_algebra(t);
	std::vector<Formula> translated;
	translated.reserve(formulas.size());
	for (const Formula &f : formulas)
		translated.push_back(belnap_translate(f));
	std::vector<ValidityResult> lhs = is_valid_batch(Structure(opa.structure), formulas, opts);
	std::vector<ValidityResult> rhs = is_valid_batch(Structure(t), translated, opts);
	for (std::size_t i = 0; i < formulas.size(); ++i) {
		TwTopEntry e{formulas[i], lhs[i].valid, rhs[i].valid};
		if (!e.agree())
			++rep.mismatches;
		rep.entries.push_back(std::move(e));
	}
	return rep;
}

bool pi1_commutes(const TwistStructure &t, const Formula &psi, const CheckOptions &opts) {
	Formula g = desugar(psi);
	if (contains(g, Kind::SNeg))
		throw LanguageError("pi1_commutes needs a formula without strong negation");
	Structure ts(t);
	check_language(ts, g);
	Structure base = t.tba() ? Structure(*t.tba()) : Structure(t.base());
	std::vector<std::string> vars = sorted_vars(g);
	const std::size_t k = vars.size();
	valuation_count(ts, k, opts);
	const auto &car = t.carrier();
	std::vector<std::size_t> digits(k, 0);
	std::vector<Value> pv(k), ev(k);
	RefEval on_pairs(ts, vars, pv);
	RefEval on_base(base, vars, ev);
	for (;;) {
		for (std::size_t j = 0; j < k; ++j) {
			pv[j] = car[digits[j]];
			ev[j] = car[digits[j]].first;
		}
		if (std::get<Pair>(on_pairs(g)).first != std::get<Elem>(on_base(g)))
			return false;
		std::size_t j = k;
		bool done = true;
		while (j-- > 0) {
			if (++digits[j] < car.size()) {
				done = false;
				break;
			}
			digits[j] = 0;
		}
		if (done)
			return true;
	}
}

} // namespace twistlab
