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

// Validity checking throughput: recursive reference evaluator, compiled
// kernel on one thread, compiled kernel on all threads, batched kernel.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "twistlab/companions.hpp"
#include "twistlab/order.hpp"
#include "twistlab/semantics.hpp"

using namespace twistlab;

namespace {

double seconds(const std::function<void()> &f) {
	const auto start = std::chrono::steady_clock::now();
	f();
	return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct Row {
	std::string name;
	double secs;
	std::size_t valid;
};

} // namespace

int main(int argc, char **argv) {
	CLI::App app{"twistlab validity benchmark"};
	std::size_t formulas = 200;
	std::size_t vars = 2;
	int jobs = 0;
	bool sweep = false;
	app.add_option("--formulas", formulas, "Corpus size")->check(CLI::PositiveNumber);
	app.add_option("--vars", vars, "Variables in the corpus")->check(CLI::Range(1, 3));
	app.add_option("--jobs", jobs, "Threads for the parallel runs (0 = runtime default)")
	    ->check(CLI::NonNegativeNumber);
	app.add_flag("--sweep", sweep, "Also time the companion sweep over posets up to 3");
	CLI11_PARSE(app, argc, argv);

	// Full twist over the 16-element Boolean algebra: 256 pairs.
	auto a = std::make_shared<const FiniteHeytingAlgebra>(heyting_from_poset(FinitePoset::antichain(4)));
	TwistStructure t = full_twist(a);
	Structure s(t);
	auto corpus = enumerate_formulas(Language::Ls, 2, vars, formulas);
	CheckOptions serial, parallel;
	serial.jobs = 1;
	serial.valuation_cap = parallel.valuation_cap = std::uint64_t{1} << 40;
	parallel.jobs = jobs;
	const int threads = jobs > 0 ? jobs : omp_get_max_threads();

	std::printf("structure: full twist over 2^4, %zu pairs; %zu formulas over %zu variables; %d threads\n",
	            t.size(), corpus.size(), vars, threads);
	std::vector<Row> rows;
	std::vector<bool> ref(corpus.size());
	auto run = [&](const std::string &name, const std::function<bool(std::size_t)> &check) {
		std::size_t valid = 0;
		std::size_t disagree = 0;
		double secs = seconds([&] {
			for (std::size_t i = 0; i < corpus.size(); ++i) {
				bool v = check(i);
				valid += v;
				if (rows.empty())
					ref[i] = v;
				else if (ref[i] != v)
					++disagree;
			}
		});
		rows.push_back({name, secs, valid});
		if (disagree)
			std::printf("  %s disagrees with the reference on %zu formulas\n", name.c_str(), disagree);
		return disagree == 0;
	};
	bool ok = true;
	ok &= run("reference", [&](std::size_t i) { return is_valid_reference(s, corpus[i], serial).valid; });
	ok &= run("kernel, jobs=1", [&](std::size_t i) { return is_valid(s, corpus[i], serial).valid; });
	ok &= run("kernel, jobs=" + std::to_string(threads),
	          [&](std::size_t i) { return is_valid(s, corpus[i], parallel).valid; });
	std::vector<ValidityResult> batch;
	double bsecs = seconds([&] { batch = is_valid_batch(s, corpus, parallel); });
	std::size_t bvalid = 0;
	for (std::size_t i = 0; i < corpus.size(); ++i) {
		bvalid += batch[i].valid;
		ok &= batch[i].valid == ref[i];
	}
	rows.push_back({"batch, jobs=" + std::to_string(threads), bsecs, bvalid});

	std::printf("%-24s %10s %8s %8s\n", "mode", "seconds", "speedup", "valid");
	for (const Row &r : rows)
		std::printf("%-24s %10.4f %8.2f %8zu\n", r.name.c_str(), r.secs, rows[0].secs / r.secs, r.valid);

	if (sweep) {
		auto sc = default_twtop_corpus();
		CheckOptions so;
		so.valuation_cap = std::uint64_t{1} << 40;
		for (int j : {1, threads}) {
			so.jobs = j;
			CompanionSweepReport rep;
			double secs = seconds([&] { rep = companion_sweep(3, sc, so); });
			std::printf("companion sweep, posets <= 3, %d threads: %.3fs, %zu instances, %zu mismatches\n", j, secs,
			            rep.instances, rep.mismatches);
		}
	}
	return ok ? 0 : 1;
}
