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

// twistlab command-line tool.
//
// Exit codes: 0 ok / valid, 1 violation / refuted / refutation found,
// 2 usage, I/O or parse error.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "twistlab/companions.hpp"
#include "twistlab/errors.hpp"
#include "twistlab/formula.hpp"
#include "twistlab/io.hpp"
#include "twistlab/kripke.hpp"
#include "twistlab/order.hpp"
#include "twistlab/semantics.hpp"
#include "twistlab/version.hpp"

using namespace twistlab;

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kError = 2;

struct RunConfig {
	std::string format = "text";
	int jobs = 0;
	std::uint64_t valuation_cap = CheckOptions{}.valuation_cap;
	std::string command;
	Json extra = Json::object();

	CheckOptions check() const {
		CheckOptions o;
		o.jobs = jobs;
		o.valuation_cap = valuation_cap;
		return o;
	}
};

std::string scalar_text(const Json &v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

// Prints the report with the version and config echo in either format.
void emit(const RunConfig &cfg, const Json &result, const std::vector<std::string> &lines) {
	Json config{{"command", cfg.command}, {"format", cfg.format}, {"jobs", cfg.jobs}, {"valuation_cap", cfg.valuation_cap}};
	for (auto it = cfg.extra.begin(); it != cfg.extra.end(); ++it)
		config[it.key()] = it.value();
	if (cfg.format == "json") {
		Json doc{{"tool", "twistlab"}, {"version", kVersion}, {"config", config}, {"result", result}};
		std::cout << doc.dump(2) << "\n";
		return;
	}
	std::cout << "# twistlab " << kVersion;
	for (auto it = config.begin(); it != config.end(); ++it)
		std::cout << " " << it.key() << "=" << scalar_text(it.value());
	std::cout << "\n";
	for (const std::string &l : lines)
		std::cout << l << "\n";
}

std::string set_text(const FiniteHeytingAlgebra &h, ElementSet s) {
	std::string out = "{";
	bool first = true;
	s.for_each([&](Elem e) {
		out += (first ? "" : ",") + h.label(e);
		first = false;
	});
	return out + "}";
}

std::string poset_line(const FinitePoset &p) {
	std::string out = "size " + std::to_string(p.size()) + ":";
	for (auto [i, j] : p.pairs())
		if (i != j)
			out += " " + std::to_string(i) + "<" + std::to_string(j);
	return out;
}

ElementSet resolve_elements(const FiniteHeytingAlgebra &h, const std::vector<std::string> &items, const char *what) {
	ElementSet out;
	for (const std::string &s : items) {
		bool found = false;
		for (Elem e = 0; e < h.size(); ++e)
			if (h.label(e) == s) {
				out.insert(e);
				found = true;
				break;
			}
		if (found)
			continue;
		if (!s.empty() && s.find_first_not_of("0123456789") == std::string::npos && std::stoul(s) < h.size()) {
			out.insert(std::stoul(s));
			continue;
		}
		throw InputError(std::string("unknown element \"") + s + "\" in " + what);
	}
	return out;
}

int cmd_validate(const RunConfig &cfg, const std::string &path) {
	Document d = load_document(path);
	std::optional<Violation> v;
	std::string summary;
	if (d.type == "poset") {
		std::size_t n = 0;
		bool closure = false;
		auto pairs = poset_relation_from_json(d.json, n, closure);
		v = validate_poset(n, pairs, closure);
		summary = "poset with " + std::to_string(n) + " elements";
	} else if (d.type == "heyting" || d.type == "tba") {
		HeytingTables t = heyting_tables_from_json(d.json);
		labels_from_json(d.json, t.size);
		if (d.type == "heyting")
			v = validate_heyting(t);
		else
			v = validate_tba(t, box_from_json(d.json, t.size));
		summary = (d.type == "heyting" ? "Heyting algebra with " : "topological Boolean algebra with ") +
		          std::to_string(t.size) + " elements";
	} else {
		try {
			TwistStructure t = twist_from_json(d.json, d.dir);
			summary = "twist-structure with " + std::to_string(t.size()) + " pairs";
		} catch (const StructureError &e) {
			v = Violation{"twist", {}, e.what()};
		}
	}
	Json result{{"type", d.type}, {"valid", !v}};
	std::vector<std::string> lines;
	if (v) {
		result["violation"] = to_json(*v);
		lines.push_back("violation: " + v->law + ": " + v->message);
	} else {
		result["summary"] = summary;
		lines.push_back("ok: " + summary);
	}
	emit(cfg, result, lines);
	return v ? kFail : kOk;
}

int cmd_check(const RunConfig &cfg, const std::string &path, const std::vector<std::string> &texts, bool reference) {
	Document d = load_document(path);
	LoadedStructure ls = load_structure(d);
	Structure s = ls.view();
	std::vector<Formula> fs;
	for (const std::string &t : texts)
		fs.push_back(parse(t));
	if (fs.empty())
		fs = d.formulas;
	if (fs.empty())
		throw InputError("no formula given and the file has no \"formulas\"");
	Json results = Json::array();
	std::vector<std::string> lines;
	bool all = true;
	for (const Formula &f : fs) {
		ValidityResult r = reference ? is_valid_reference(s, f, cfg.check()) : is_valid(s, f, cfg.check());
		Json j = witness_to_json(s, r);
		j["formula"] = to_string(f);
		results.push_back(j);
		all = all && r.valid;
		lines.push_back(std::string(r.valid ? "valid: " : "refuted: ") + to_string(f));
		if (r.witness)
			for (const auto &[k, v] : *r.witness)
				lines.push_back("  " + k + " = " + value_label(s, v));
		if (r.value)
			lines.push_back("  value = " + value_label(s, *r.value));
	}
	emit(cfg, Json{{"checks", results}, {"all_valid", all}}, lines);
	return all ? kOk : kFail;
}

int cmd_translate(const RunConfig &cfg, bool gt, const std::string &text) {
	Formula f = parse(text);
	Formula g = gt ? godel_tarski(f) : belnap_translate(f);
	std::string out = to_string(g);
	emit(cfg, Json{{"translation", gt ? "gt" : "tb"}, {"input", to_string(f)}, {"output", out}}, {out});
	return kOk;
}

int cmd_companion(const RunConfig &cfg, const std::string &path, const std::vector<std::string> &nabla_in,
                  const std::vector<std::string> &delta_in, const std::string &corpus_arg) {
	Document d = load_document(path);
	std::shared_ptr<const FiniteHeytingAlgebra> a;
	if (d.type == "poset")
		a = std::make_shared<const FiniteHeytingAlgebra>(heyting_from_poset(poset_from_json(d.json)));
	else if (d.type == "heyting")
		a = std::make_shared<const FiniteHeytingAlgebra>(heyting_from_json(d.json));
	else
		throw InputError("companion needs a heyting or poset document");
	ElementSet nabla = resolve_elements(*a, nabla_in, "--nabla");
	ElementSet delta = resolve_elements(*a, delta_in, "--delta");
	std::vector<Formula> corpus;
	if (corpus_arg == "default")
		corpus = default_twtop_corpus();
	else if (corpus_arg == "file")
		corpus = d.formulas;
	else
		corpus = load_document(corpus_arg).formulas;
	CompanionOptions opts{corpus, cfg.check()};
	CompanionInstance ci = companion_structure(a, nabla, delta, opts);
	Json result = to_json(ci);
	std::vector<std::string> lines;
	lines.push_back("A: " + std::to_string(a->size()) + " elements, nabla " + set_text(*a, nabla) + ", delta " +
	                set_text(*a, delta) + ", N(delta) " + set_text(*a, closure_N(*a, delta)));
	lines.push_back("s(A): " + std::to_string(ci.base.b->size()) + " elements; T: " + std::to_string(ci.t.size()) +
	                " pairs; open pairs: " + std::to_string(ci.closed_twist.size()));
	std::string op = "open pairs in A's labels:";
	for (const Pair &p : g2(ci.t))
		op += " " + ci.pair_label(p);
	lines.push_back(op);
	std::size_t mism = 0;
	if (ci.twtop) {
		mism = ci.twtop->mismatches;
		lines.push_back("TwTop: " + std::to_string(ci.twtop->entries.size()) + " formulas, " + std::to_string(mism) +
		                " mismatches");
		for (const TwTopEntry &e : ci.twtop->entries)
			if (!e.agree())
				lines.push_back("  mismatch: " + to_string(e.formula));
	}
	emit(cfg, result, lines);
	return mism ? kFail : kOk;
}

int cmd_grz_search(const RunConfig &cfg, const std::string &text, std::size_t max_worlds) {
	Formula f = parse(text);
	GrzSearchResult r = grz_refutation_search(f, max_worlds, cfg.check());
	Json result{{"formula", to_string(f)}, {"max_worlds", max_worlds}, {"frames_checked", r.frames_checked}};
	std::vector<std::string> lines;
	if (r.refutation) {
		result["refutation"] = to_json(*r.refutation);
		lines.push_back("refuted on frame " + poset_line(r.refutation->model.frame) + " at world " +
		                std::to_string(r.refutation->world));
		for (const auto &[k, v] : r.refutation->model.valuation)
			lines.push_back("  " + k + " = " + to_json(v).dump());
	} else {
		result["refutation"] = nullptr;
		result["note"] = "bounded evidence only: no refuting frame with at most " + std::to_string(max_worlds) + " worlds";
		lines.push_back("no refutation on " + std::to_string(r.frames_checked) + " frames with at most " +
		                std::to_string(max_worlds) + " worlds (bounded evidence, not a proof)");
	}
	emit(cfg, result, lines);
	return r.refutation ? kFail : kOk;
}

int cmd_kleene_demo(const RunConfig &cfg) {
	KleeneDemoReport r = kleene_demo(cfg.check());
	const bool as_expected = r.chi_valid && !r.chi_prime_valid && r.witness_pi1 == 1 && r.scan.violations.empty();
	Json result = to_json(r);
	result["as_expected"] = as_expected;
	emit(cfg, result, r.transcript);
	return as_expected ? kOk : kFail;
}

int cmd_enumerate(const RunConfig &cfg, const std::string &type, std::size_t max_size, bool cumulative) {
	PosetEnumOptions po;
	po.exact_size = !cumulative;
	std::vector<FinitePoset> ps = enumerate_posets(max_size, po);
	Json items = Json::array();
	std::vector<std::string> lines;
	const std::string noun = type == "poset" ? "posets" : type == "heyting" ? "Heyting algebras" : "TBAs";
	lines.push_back(std::to_string(ps.size()) + " " + noun);
	for (const FinitePoset &p : ps) {
		if (type == "poset") {
			items.push_back(to_json(p));
			lines.push_back(poset_line(p));
		} else if (type == "heyting") {
			FiniteHeytingAlgebra h = heyting_from_poset(p);
			items.push_back(to_json(h));
			lines.push_back(poset_line(p) + " -> " + std::to_string(h.size()) + " elements");
		} else {
			FiniteTBA b = powerset_tba(p);
			items.push_back(to_json(b));
			lines.push_back(poset_line(p) + " -> " + std::to_string(b.size()) + " elements");
		}
	}
	emit(cfg, Json{{"type", type}, {"count", ps.size()}, {"items", items}}, lines);
	return kOk;
}

} // namespace

int main(int argc, char **argv) {
	CLI::App app{"Finite twist-structures, topological Boolean algebras and modal companions"};
	app.set_version_flag("--version", std::string("twistlab ") + std::string(kVersion));
	app.require_subcommand(1);
	app.fallthrough();

	RunConfig cfg;
	if (const char *env = std::getenv("TWISTLAB_VALUATION_CAP")) {
		try {
			cfg.valuation_cap = std::stoull(env);
		} catch (const std::exception &) {
			std::cerr << "error: TWISTLAB_VALUATION_CAP is not a number: " << env << "\n";
			return kError;
		}
		if (cfg.valuation_cap == 0) {
			std::cerr << "error: TWISTLAB_VALUATION_CAP must be positive\n";
			return kError;
		}
	}
	app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));
	app.add_option("--jobs", cfg.jobs, "OpenMP threads, 0 for the runtime default, 1 for serial")
	    ->check(CLI::NonNegativeNumber);
	app.add_option("--valuation-cap", cfg.valuation_cap, "Largest exhaustive search allowed")->check(CLI::PositiveNumber);

	std::string path, text, type = "poset", corpus = "default";
	std::vector<std::string> texts, nabla, delta;
	bool gt = false, tb = false, reference = false, cumulative = false;
	std::size_t max_worlds = 5, max_size = 0;

	auto *validate = app.add_subcommand("validate", "Check a structure file against its laws");
	validate->add_option("path", path, "JSON document")->required();

	auto *check = app.add_subcommand("check", "Exhaustive validity of formulas in a structure");
	check->add_option("path", path, "JSON document")->required();
	check->add_option("formulas", texts, "Formulas; defaults to the file's \"formulas\"");
	check->add_flag("--reference", reference, "Use the serial recursive evaluator");

	auto *translate = app.add_subcommand("translate", "Print the translation of a formula");
	auto *gt_flag = translate->add_flag("--gt", gt, "Goedel-Tarski translation");
	auto *tb_flag = translate->add_flag("--tb", tb, "Translation with strong negation");
	gt_flag->excludes(tb_flag);
	translate->add_option("formula", text)->required();

	auto *companion = app.add_subcommand("companion", "Build the companion structure and compare validities");
	companion->add_option("path", path, "Heyting or poset document")->required();
	companion->add_option("--nabla", nabla, "Filter elements (indices or labels)")->delimiter(',')->required();
	companion->add_option("--delta", delta, "Ideal elements (indices or labels)")->delimiter(',')->required();
	companion->add_option("--corpus", corpus, "\"default\", \"file\" for the input's formulas, or a JSON path");

	auto *grz = app.add_subcommand("grz-search", "Look for a finite partial-order countermodel");
	grz->add_option("formula", text)->required();
	grz->add_option("--max-worlds", max_worlds, "Largest frame size")->check(CLI::Range(0, 7));

	auto *kleene = app.add_subcommand("kleene-demo", "Finite witness that the Kleene logic has no modal companion");

	auto *enumerate = app.add_subcommand("enumerate", "List labeled posets or their algebras");
	enumerate->add_option("--type", type)->check(CLI::IsMember({"poset", "heyting", "tba"}));
	enumerate->add_option("--max-size", max_size, "Number of points")->required()->check(CLI::Range(0, 7));
	enumerate->add_flag("--cumulative", cumulative, "All sizes from 1 to --max-size");

	try {
		app.parse(argc, argv);
	} catch (const CLI::Success &e) {
		return app.exit(e);
	} catch (const CLI::ParseError &e) {
		app.exit(e);
		return kError;
	}

	try {
		if (validate->parsed()) {
			cfg.command = "validate";
			cfg.extra = {{"inputs", {path}}};
			return cmd_validate(cfg, path);
		}
		if (check->parsed()) {
			cfg.command = "check";
			cfg.extra = {{"inputs", {path}}, {"reference", reference}};
			return cmd_check(cfg, path, texts, reference);
		}
		if (translate->parsed()) {
			if (!gt && !tb)
				throw InputError("translate needs --gt or --tb");
			cfg.command = "translate";
			return cmd_translate(cfg, gt, text);
		}
		if (companion->parsed()) {
			cfg.command = "companion";
			cfg.extra = {{"inputs", {path}}, {"corpus", corpus}};
			return cmd_companion(cfg, path, nabla, delta, corpus);
		}
		if (grz->parsed()) {
			cfg.command = "grz-search";
			cfg.extra = {{"max_worlds", max_worlds}};
			return cmd_grz_search(cfg, text, max_worlds);
		}
		if (kleene->parsed()) {
			cfg.command = "kleene-demo";
			return cmd_kleene_demo(cfg);
		}
		if (enumerate->parsed()) {
			cfg.command = "enumerate";
			cfg.extra = {{"type", type}, {"max_size", max_size}, {"cumulative", cumulative}};
			return cmd_enumerate(cfg, type, max_size, cumulative);
		}
	} catch (const std::exception &e) {
		std::cerr << "error: " << e.what() << "\n";
		return kError;
	}
	return kError;
}
