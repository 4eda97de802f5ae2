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

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria (capped at 1 for ctest).

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "oracles.hpp"
#include "twistlab/companions.hpp"
#include "twistlab/errors.hpp"
#include "twistlab/kripke.hpp"
#include "twistlab/order.hpp"
#include "twistlab/semantics.hpp"

using namespace twistlab;

namespace {

using HPtr = std::shared_ptr<const FiniteHeytingAlgebra>;

struct Outcome {
	bool pass = false;
	std::string detail;
};

struct Settings {
	std::string cli;
	int jobs = 0;
};

oracle::Relation relation_of(const FinitePoset &p) {
	oracle::Relation r(p.size(), std::vector<bool>(p.size(), false));
	for (auto [i, j] : p.pairs())
		r[i][j] = true;
	return r;
}

// Heyting algebras of every labeled poset with 1..4 points, with s(A).
struct SweepAlgebra {
	FinitePoset poset;
	HPtr a;
	CompanionBase base;
};

const std::vector<SweepAlgebra> &sweep_algebras() {
	static const std::vector<SweepAlgebra> algs = [] {
		std::vector<SweepAlgebra> out;
		for (const FinitePoset &p : enumerate_posets(4)) {
			auto a = std::make_shared<const FiniteHeytingAlgebra>(heyting_from_poset(p));
			out.push_back({p, a, companion_base(a)});
		}
		return out;
	}();
	return algs;
}

std::string fmt(const char *label, std::size_t n) { return std::string(label) + "=" + std::to_string(n); }

std::string join(std::initializer_list<std::string> parts) {
	std::string out;
	for (const std::string &s : parts)
		out += (out.empty() ? "" : " ") + s;
	return out;
}

Outcome criterion_1(const Settings &) {
	const auto start = std::chrono::steady_clock::now();
	auto a = std::make_shared<const FiniteHeytingAlgebra>(chain_algebra(3));
	const Elem bot = 0, heart = 1, top = 2;
	TwistStructure t = tw(a, ElementSet{heart, top}, ElementSet{bot, heart});
	Structure s(t);
	const bool chi = is_valid(s, kleene_axiom()).valid;
	const ValidityResult prime = is_valid(s, kleene_prime_axiom());
	Valuation quoted{{"p", Pair{heart, top}}, {"q", Pair{heart, bot}}};
	const Pair value = std::get<Pair>(evaluate(s, kleene_prime_axiom(), quoted));
	const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
	std::ostringstream d;
	d << "carrier=" << t.size() << " chi=" << (chi ? "valid" : "refuted")
	  << " chi'=" << (prime.valid ? "valid" : "refuted") << " v(p)=(heart,1) v(q)=(heart,bot) pi1="
	  << a->label(value.first) << " time=" << secs << "s";
	return {t.size() == 7 && chi && !prime.valid && value.first == heart && secs < 1.0, d.str()};
}

Outcome criterion_2(const Settings &st) {
	const auto start = std::chrono::steady_clock::now();
	std::vector<Formula> corpus = default_twtop_corpus();
	CheckOptions opts;
	opts.jobs = st.jobs;
	// The 3-variable axioms on the largest twists need 256^3 valuations.
	opts.valuation_cap = std::uint64_t{1} << 40;
	CompanionSweepReport r = companion_sweep(4, corpus, opts);
	const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
	std::ostringstream d;
	d << "algebras=" << r.algebras << " instances=" << r.instances << " distinct=" << r.distinct
	  << " formulas=" << r.formulas << " max_twist=" << r.max_twist_size << " mismatches=" << r.mismatches
	  << " time=" << secs << "s";
	for (const std::string &line : r.mismatch_lines)
		d << "\n    " << line;
	return {r.mismatches == 0 && r.algebras == 242 && r.instances > 0 && secs < 600.0, d.str()};
}

Outcome criterion_3(const Settings &) {
	std::size_t pairs = 0, mismatches = 0;
	for (const SweepAlgebra &sa : sweep_algebras()) {
		const FiniteTBA &b = *sa.base.b;
		const ElementSet opens = sa.base.lift(sa.a->all());
		oracle::Algebra o = oracle::upset_algebra(relation_of(sa.poset));
		for (ElementSet d : ideals(*sa.a)) {
			++pairs;
			const ElementSet n = closure_N(*sa.a, d);
			const bool ok = (sigma_map(b, sa.base.lift(d)) & opens) == sa.base.lift(n) &&
			                n.bits() == oracle::closed_hull(o, d.bits());
			mismatches += ok ? 0 : 1;
		}
	}
	return {mismatches == 0, join({fmt("algebras", sweep_algebras().size()), fmt("ideals", pairs),
	                               fmt("mismatches", mismatches)})};
}

Outcome criterion_4(const Settings &) {
	std::size_t filters_checked = 0, g_filters = 0, mismatches = 0;
	for (const SweepAlgebra &sa : sweep_algebras()) {
		const FiniteTBA &b = *sa.base.b;
		auto open = open_filters(b);
		for (ElementSet f : open) {
			++filters_checked;
			if (rho_map(b, delta_map(b, f)) != f)
				++mismatches;
		}
		std::set<std::uint64_t> images;
		for (ElementSet g : filters(*sa.a)) {
			++g_filters;
			ElementSet lifted = sa.base.lift(g);
			ElementSet r = rho_map(b, lifted);
			if (delta_map(b, r) != lifted || !is_open_filter(b, r))
				++mismatches;
			images.insert(r.bits());
		}
		if (images.size() != open.size())
			++mismatches;
	}
	return {mismatches == 0, join({fmt("open_filters", filters_checked), fmt("g_filters", g_filters),
	                               fmt("mismatches", mismatches)})};
}

// Lemma suites for one twist-structure over a TBA; returns violations.
std::size_t lemma_violations(const TwistStructure &t) {
	std::size_t bad = 0;
	auto expect = [&](bool ok) { bad += ok ? 0 : 1; };
	const FiniteTBA &b = *t.tba();
	const ElementSet open = open_elements(b);
	auto gimp = [&](Elem x, Elem y) { return b.box(b.imp(x, y)); };
	auto gneg = [&](Elem x) { return b.box(b.neg(x)); };
	std::vector<Pair> g;
	for (Pair x : t.carrier())
		if (b.box(x.first) == x.first && b.box(x.second) == x.second)
			g.push_back(x);
	std::set<Pair> gs(g.begin(), g.end());
	ElementSet gam, second, lam, ng, dg;
	for (Pair x : g) {
		gam.insert(x.first);
		second.insert(x.second);
		ng.insert(b.join(x.first, x.second));
		dg.insert(b.meet(x.first, x.second));
	}
	open.for_each([&](Elem a) {
		if (t.nabla().contains(b.join(a, gneg(a))))
			lam.insert(a);
	});
	expect(g2(t) == g);
	expect(gamma(t) == gam);
	for (Elem a = 0; a < b.size(); ++a)
		expect(b.meet(a, gneg(a)) == b.bot());
	expect(gam.subset_of(open));
	expect(gs.count(t.bot()) == 1);
	bool closed = true, imp_closed = true;
	for (Pair x : g) {
		closed = closed && gs.count(t.snot(x));
		for (Pair y : g) {
			closed = closed && gs.count(t.conj(x, y)) && gs.count(t.disj(x, y));
			imp_closed = imp_closed && gs.count({gimp(x.first, y.first), b.meet(x.first, y.second)});
		}
	}
	expect(closed);
	expect(second == gam);
	expect(lam.subset_of(gam));
	bool sub = lam.contains(b.bot()) && lam.contains(b.top());
	lam.for_each([&](Elem x) {
		lam.for_each([&](Elem y) {
			sub = sub && lam.contains(b.meet(x, y)) && lam.contains(b.join(x, y)) && lam.contains(gimp(x, y));
		});
	});
	expect(sub);
	expect(lambda_set(b, t.nabla()) == lam);
	expect(nabla_g(t) == ng);
	expect(delta_g(t) == dg);
	expect(ng == (t.nabla() & open) && ng == (t.nabla() & gam) && ng == (t.nabla() & lam));
	expect(dg == (t.delta() & open) && dg == (t.delta() & gam));
	dg.for_each([&](Elem a) { expect(dg.contains(gneg(gneg(a)))); });
	auto [lhs, rhs] = gamma_imp_closure_equiv(t);
	expect(lhs == gam.subset_of(lam));
	expect(rhs == imp_closed);
	expect(lhs == rhs);
	bool bpc = true;
	for (Pair x : t.carrier())
		bpc = bpc && t.contains({b.box(x.first), b.box(x.second)});
	expect(box_pair_closed(t) == bpc);
	if (satisfies_grz(b).holds && open == lam)
		expect(bpc);
	if (bpc)
		expect(gam == lam && lam == open);
	return bad;
}

Outcome criterion_5(const Settings &) {
	std::size_t pipeline = 0, extra = 0, violations = 0;
	for (const SweepAlgebra &sa : sweep_algebras())
		for (ElementSet n : filters(*sa.a, true))
			for (ElementSet d : ideals(*sa.a)) {
				++pipeline;
				violations += lemma_violations(companion_structure(sa.base, n, d).t);
			}
	// Twists over powerset TBAs that need not come from the pipeline.
	for (const FinitePoset &p : enumerate_posets(3)) {
		auto b = std::make_shared<const FiniteTBA>(powerset_tba(p));
		for (ElementSet n : open_filters(*b))
			for (ElementSet d : closed_ideals(*b)) {
				++extra;
				violations += lemma_violations(tw(b, n, d));
			}
	}
	return {violations == 0, join({fmt("pipeline_instances", pipeline), fmt("other_instances", extra),
	                               fmt("violations", violations)})};
}

Outcome criterion_6(const Settings &st) {
	const auto start = std::chrono::steady_clock::now();
	CheckOptions opts;
	opts.jobs = st.jobs;
	GrzSearchResult r = grz_refutation_search(lemma_323_formula(), 5, opts);
	std::size_t maximal = 0;
	for (const FinitePoset &w : enumerate_posets(5))
		maximal += premise_worlds_with_maximal_successor(w);
	int exit_code = -1;
	if (!st.cli.empty()) {
		const std::string cmd =
		    "'" + st.cli + "' grz-search '" + to_string(lemma_323_formula()) + "' --max-worlds 5 > /dev/null";
		const int status = std::system(cmd.c_str());
		exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
	}
	const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
	std::ostringstream d;
	d << "frames=" << r.frames_checked << " refutation=" << (r.refutation ? "found" : "none")
	  << " (bounded evidence up to 5 worlds) premise_worlds_with_maximal_successor=" << maximal
	  << " cli_exit=" << exit_code << " time=" << secs << "s";
	return {!r.refutation && r.frames_checked == 4473 && maximal == 0 && exit_code == 0 && secs < 300.0, d.str()};
}

Outcome criterion_7(const Settings &st) {
	const auto start = std::chrono::steady_clock::now();
	auto corpus = enumerate_formulas(Language::Lbox, 2, 2, 1'000'000);
	CheckOptions opts;
	opts.jobs = st.jobs;
	std::size_t frames = 0, mismatches = 0;
	for (const FinitePoset &p : enumerate_posets(4)) {
		++frames;
		FiniteTBA b = powerset_tba(p);
		auto alg = is_valid_batch(Structure(b), corpus, opts);
		for (std::size_t i = 0; i < corpus.size(); ++i)
			if (frame_valid(p, corpus[i], opts).valid != alg[i].valid)
				++mismatches;
	}
	const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
	std::ostringstream d;
	d << "frames=" << frames << " formulas=" << corpus.size() << " mismatches=" << mismatches << " time=" << secs
	  << "s";
	return {mismatches == 0, d.str()};
}

// Li formulas over p, q, r with each q (and r) replaced by its excluded
// middle block, alternating the disjunct order.
std::vector<Formula> sharp_corpus() {
	const Formula q = Formula::var("q"), r = Formula::var("r");
	const Formula blocks[2][2] = {{Formula::disj(q, Formula::sneg(q)), Formula::disj(Formula::sneg(q), q)},
	                              {Formula::disj(r, Formula::sneg(r)), Formula::disj(Formula::sneg(r), r)}};
	std::vector<Formula> out;
	std::size_t i = 0;
	for (const Formula &f : enumerate_formulas(Language::Li, 2, 2, 400))
		if (f.variables().count("q"))
			out.push_back(substitute(f, {{"q", blocks[0][i++ % 2]}}));
	// Two blocks and one plain variable.
	for (const Formula &f : enumerate_formulas(Language::Li, 1, 3, 200)) {
		const auto vars = f.variables();
		if (vars.count("q") && vars.count("r"))
			out.push_back(substitute(f, {{"q", blocks[0][i % 2]}, {"r", blocks[1][i++ % 2]}}));
	}
	out.push_back(parse("!!(q | ~q)"));
	out.push_back(parse("p | !p -> (q | ~q)"));
	return out;
}

Outcome criterion_8(const Settings &st) {
	const std::vector<Formula> corpus = sharp_corpus();
	std::size_t not_sharp = 0;
	for (const Formula &f : corpus)
		not_sharp += is_form_sharp(f) ? 0 : 1;
	CheckOptions opts;
	opts.jobs = st.jobs;
	std::size_t pairs = 0, mismatches = 0;
	for (const SweepAlgebra &sa : sweep_algebras()) {
		auto ids = ideals(*sa.a);
		for (ElementSet n : filters(*sa.a, true)) {
			std::vector<std::vector<ValidityResult>> results;
			for (ElementSet d : ids)
				results.push_back(is_valid_batch(Structure(tw(sa.a, n, d)), corpus, opts));
			for (std::size_t i = 0; i < ids.size(); ++i)
				for (std::size_t j = i + 1; j < ids.size(); ++j) {
					++pairs;
					for (std::size_t k = 0; k < corpus.size(); ++k)
						if (results[i][k].valid != results[j][k].valid)
							++mismatches;
				}
		}
	}
	return {corpus.size() >= 50 && not_sharp == 0 && mismatches == 0,
	        join({fmt("formulas", corpus.size()), fmt("not_of_form", not_sharp), fmt("ideal_pairs", pairs),
	              fmt("mismatches", mismatches)})};
}

Outcome criterion_9(const Settings &st) {
	CheckOptions opts;
	opts.jobs = st.jobs;
	KleeneScanReport r = kleene_box_implication_scan(3, opts);
	std::ostringstream d;
	d << "algebras=" << r.algebras << " instances=" << r.instances << " chi_valid=" << r.chi_valid
	  << " chi'_valid=" << r.chi_prime_valid << " violations=" << r.violations.size();
	for (const std::string &line : r.violations)
		d << "\n    " << line;
	return {r.violations.empty() && r.instances > 0, d.str()};
}

Outcome criterion_10(const Settings &) {
	std::size_t instances = 0, models = 0, mismatches = 0;
	const Formula chi = kleene_axiom();
	for (const SweepAlgebra &sa : sweep_algebras())
		for (ElementSet n : filters(*sa.a, true))
			for (ElementSet d : ideals(*sa.a)) {
				++instances;
				bool order = true;
				d.for_each([&](Elem x) { n.for_each([&](Elem y) { order = order && sa.a->leq(x, y); }); });
				const bool valid = is_valid(Structure(tw(sa.a, n, d)), chi).valid;
				models += valid ? 1 : 0;
				mismatches += valid == order ? 0 : 1;
			}
	return {mismatches == 0,
	        join({fmt("instances", instances), fmt("models", models), fmt("mismatches", mismatches)})};
}

Outcome criterion_11(const Settings &st) {
	CheckOptions opts;
	opts.jobs = st.jobs;
	opts.valuation_cap = std::uint64_t{1} << 40;
	std::size_t heyting = 0, modal = 0, grz = 0, violations = 0;
	for (const SweepAlgebra &sa : sweep_algebras()) {
		++grz;
		violations += satisfies_grz(*sa.base.b).holds ? 0 : 1;
		std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
		for (ElementSet n : filters(*sa.a, true))
			for (ElementSet d : ideals(*sa.a)) {
				++heyting;
				violations += models_axioms(Structure(tw(sa.a, n, d)), AxiomSet::N4Bot, opts).holds ? 0 : 1;
				// T depends on Δ only through σ(Δ).
				CompanionInstance ci = companion_structure(sa.base, n, d);
				if (!seen.insert({ci.nabla_hat.bits(), ci.delta_hat.bits()}).second)
					continue;
				++modal;
				violations += models_axioms(Structure(ci.t), AxiomSet::BS4, opts).holds ? 0 : 1;
			}
	}
	for (const FinitePoset &p : enumerate_posets(3)) {
		auto b = std::make_shared<const FiniteTBA>(powerset_tba(p));
		for (ElementSet n : open_filters(*b))
			for (ElementSet d : closed_ideals(*b)) {
				++modal;
				violations += models_axioms(Structure(tw(b, n, d)), AxiomSet::BS4, opts).holds ? 0 : 1;
			}
	}
	return {violations == 0, join({fmt("heyting_twists", heyting), fmt("tba_twists", modal), fmt("grz_bases", grz),
	                               fmt("violations", violations)})};
}

} // namespace

int main(int argc, char **argv) {
	CLI::App app{"twistlab acceptance suite"};
	Settings st;
	std::vector<int> only;
	app.add_option("--cli", st.cli, "Path to the twistlab binary");
	app.add_option("--jobs", st.jobs, "OpenMP threads (0 = runtime default)")->check(CLI::NonNegativeNumber);
	app.add_option("--only", only, "Run only these criteria")->check(CLI::Range(1, 11));
	CLI11_PARSE(app, argc, argv);

	const std::vector<std::pair<const char *, std::function<Outcome(const Settings &)>>> criteria{
	    {"Kleene structure reproduction", criterion_1},
	    {"companion equivalence sweep", criterion_2},
	    {"sigma meets the opens in N", criterion_3},
	    {"delta/rho bijection", criterion_4},
	    {"open-pairs property suites", criterion_5},
	    {"lemma formula on frames up to 5 worlds", criterion_6},
	    {"frame/algebra bridge", criterion_7},
	    {"delta independence for form-(#)", criterion_8},
	    {"box implication scan", criterion_9},
	    {"Kleene characterization", criterion_10},
	    {"axiom soundness", criterion_11},
	};
	int failed = 0;
	for (std::size_t i = 0; i < criteria.size(); ++i) {
		const int id = static_cast<int>(i) + 1;
		if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end())
			continue;
		const auto start = std::chrono::steady_clock::now();
		Outcome o;
		try {
			o = criteria[i].second(st);
		} catch (const std::exception &e) {
			o = {false, std::string("exception: ") + e.what()};
		}
		const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
		failed += o.pass ? 0 : 1;
		std::cout << (o.pass ? "PASS" : "FAIL") << " [" << id << "] " << criteria[i].first << ": " << o.detail
		          << " (" << secs << "s)" << std::endl;
	}
	std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
	return failed == 0 ? 0 : 1;
}
