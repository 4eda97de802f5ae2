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

#include "twistlab/kripke.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <vector>

#include <omp.h>

#include "twistlab/errors.hpp"

namespace twistlab {

namespace {

// Post-order program over world sets; operands refer to earlier steps.
struct Program {
	struct Step {
		Kind op;
		std::size_t a = 0, b = 0;
	};
	std::vector<std::string> vars;
	std::vector<Step> steps;

	explicit Program(const Formula &phi) {
		Formula f = desugar(phi);
		if (contains(f, Kind::SNeg))
			throw LanguageError("Kripke semantics has no strong negation: " + to_string(phi));
		auto vs = f.variables();
		vars.assign(vs.begin(), vs.end());
		emit(f);
	}

	std::size_t emit(const Formula &f) {
		Step s{f.kind()};
		if (f.kind() == Kind::Var)
			s.a = static_cast<std::size_t>(std::lower_bound(vars.begin(), vars.end(), f.name()) - vars.begin());
		else if (is_unary(f.kind()))
			s.a = emit(f.lhs());
		else if (is_binary(f.kind())) {
			s.a = emit(f.lhs());
			s.b = emit(f.rhs());
		}
		steps.push_back(s);
		return steps.size() - 1;
	}

	ElementSet run(const FinitePoset &w, const std::vector<ElementSet> &val, std::vector<ElementSet> &scratch) const {
		const std::size_t n = w.size();
		scratch.resize(steps.size());
		for (std::size_t i = 0; i < steps.size(); ++i) {
			const Step &s = steps[i];
			ElementSet r;
			switch (s.op) {
			case Kind::Var: r = val[s.a]; break;
			case Kind::Bot: break;
			case Kind::And: r = scratch[s.a] & scratch[s.b]; break;
			case Kind::Or: r = scratch[s.a] | scratch[s.b]; break;
			case Kind::Imp: r = scratch[s.a].complement(n) | scratch[s.b]; break;
			case Kind::Box:
				for (std::size_t x = 0; x < n; ++x)
					if (w.up(x).subset_of(scratch[s.a]))
						r.insert(x);
				break;
			case Kind::Dia:
				for (std::size_t x = 0; x < n; ++x)
					if (!(w.up(x) & scratch[s.a]).empty())
						r.insert(x);
				break;
			default: throw InvariantViolation("unexpected connective in Kripke evaluation");
			}
			scratch[i] = r;
		}
		return scratch.back();
	}
};

std::uint64_t valuation_space(std::size_t worlds, std::size_t vars, const CheckOptions &opts) {
	const std::size_t bits = worlds * vars;
	if (bits >= 64 || (std::uint64_t{1} << bits) > opts.valuation_cap)
		throw ResourceError("2^" + std::to_string(bits) + " Kripke valuations exceed the valuation cap of " +
		                    std::to_string(opts.valuation_cap));
	return std::uint64_t{1} << bits;
}

std::vector<ElementSet> unpack(std::uint64_t index, std::size_t worlds, std::size_t vars) {
	std::vector<ElementSet> val(vars);
	const std::uint64_t mask = (std::uint64_t{1} << worlds) - 1;
	for (std::size_t j = vars; j-- > 0;) {
		val[j] = ElementSet(index & mask);
		index >>= worlds;
	}
	return val;
}

// Least refuting valuation index and its least refuted world.
std::optional<std::pair<std::uint64_t, std::size_t>> first_refuter(const Program &prog, const FinitePoset &w,
                                                                   const CheckOptions &opts) {
	const std::size_t n = w.size();
	const std::uint64_t total = valuation_space(n, prog.vars.size(), opts);
	std::vector<ElementSet> scratch;
	const ElementSet all = w.worlds();
	for (std::uint64_t v = 0; v < total; ++v) {
		ElementSet t = prog.run(w, unpack(v, n, prog.vars.size()), scratch);
		if (t != all)
			return std::make_pair(v, all.minus(t).elements().front());
	}
	return std::nullopt;
}

KripkeRefutation make_refutation(const Program &prog, const FinitePoset &w, std::uint64_t v, std::size_t world) {
	std::vector<ElementSet> val = unpack(v, w.size(), prog.vars.size());
	KripkeModel m{w, {}};
	for (std::size_t j = 0; j < prog.vars.size(); ++j)
		m.valuation[prog.vars[j]] = val[j];
	return KripkeRefutation{std::move(m), world};
}

} // namespace

ElementSet truth_set(const KripkeModel &m, const Formula &phi) {
	Program prog(phi);
	std::vector<ElementSet> val;
	for (const std::string &v : prog.vars) {
		auto it = m.valuation.find(v);
		val.push_back(it == m.valuation.end() ? ElementSet{} : it->second & m.frame.worlds());
	}
	std::vector<ElementSet> scratch;
	return prog.run(m.frame, val, scratch);
}

bool forces(const KripkeModel &m, std::size_t world, const Formula &phi) {
	if (world >= m.frame.size())
		throw std::out_of_range("world " + std::to_string(world) + " is not in the frame");
	return truth_set(m, phi).contains(world);
}

FrameValidity frame_valid(const FinitePoset &w, const Formula &phi, const CheckOptions &opts) {
	Program prog(phi);
	auto hit = first_refuter(prog, w, opts);
	if (!hit)
		return {};
	return FrameValidity{false, make_refutation(prog, w, hit->first, hit->second)};
}

GrzSearchResult grz_refutation_search(const Formula &phi, std::size_t max_worlds, const CheckOptions &opts) {
	Program prog(phi);
	std::vector<FinitePoset> frames = enumerate_posets(max_worlds);
	// enumerate_posets lists sizes in increasing order, relation bits within.
	std::stable_sort(frames.begin(), frames.end(), [](const FinitePoset &a, const FinitePoset &b) {
		if (a.size() != b.size())
			return a.size() < b.size();
		return a.relation_bits() < b.relation_bits();
	});
	valuation_space(max_worlds, prog.vars.size(), opts);

	const std::size_t none = std::numeric_limits<std::size_t>::max();
	std::size_t first = none;
	std::exception_ptr err;
	const int threads = opts.jobs > 0 ? opts.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
	for (std::size_t i = 0; i < frames.size(); ++i) {
		std::size_t seen;
#pragma omp atomic read
		seen = first;
		if (i > seen)
			continue;
		try {
			if (first_refuter(prog, frames[i], opts)) {
#pragma omp critical
				first = std::min(first, i);
			}
		} catch (...) {
#pragma omp critical
			if (!err)
				err = std::current_exception();
		}
	}
	if (err)
		std::rethrow_exception(err);

	GrzSearchResult res;
	res.max_worlds = max_worlds;
	res.frames_checked = first == none ? frames.size() : first + 1;
	if (first != none) {
		auto hit = first_refuter(prog, frames[first], opts);
		res.refutation = make_refutation(prog, frames[first], hit->first, hit->second);
	}
	return res;
}

Formula lemma_323_formula() {
	return parse("([](p | q) & ([]p | []<>!p) & ([]q | []<>!q)) -> ([]p | []q)");
}

std::size_t premise_worlds_with_maximal_successor(const FinitePoset &w) {
	static const Program premise(parse("[]<>!p & []<>!q & [](p | q)"));
	const std::size_t n = w.size();
	ElementSet maximal;
	for (std::size_t x = 0; x < n; ++x)
		if (w.up(x).size() == 1)
			maximal.insert(x);
	std::size_t count = 0;
	std::vector<ElementSet> scratch;
	const std::uint64_t total = std::uint64_t{1} << (2 * n);
	for (std::uint64_t v = 0; v < total; ++v) {
		ElementSet t = premise.run(w, unpack(v, n, premise.vars.size()), scratch);
		t.for_each([&](Elem x) {
			if (!(w.up(x) & maximal).empty())
				++count;
		});
	}
	return count;
}

} // namespace twistlab
