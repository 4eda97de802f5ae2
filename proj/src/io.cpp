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

#include "twistlab/io.hpp"

#include <fstream>
#include <sstream>

#include "twistlab/errors.hpp"

namespace twistlab {

namespace {

const Json &field(const Json &j, const char *key) {
	if (!j.is_object() || !j.contains(key))
		throw InputError(std::string("missing field \"") + key + "\"");
	return j.at(key);
}

std::size_t index_value(const Json &j, const char *what, std::size_t bound) {
	if (!j.is_number_integer() || j.get<long long>() < 0)
		throw InputError(std::string(what) + " must be a non-negative integer");
	auto v = j.get<unsigned long long>();
	if (bound && v >= bound)
		throw InputError(std::string(what) + " " + std::to_string(v) + " is out of range");
	return static_cast<std::size_t>(v);
}

std::vector<Elem> square_table(const Json &j, const char *name, std::size_t n) {
	const Json &rows = field(j, name);
	if (!rows.is_array() || rows.size() != n)
		throw InputError(std::string("table \"") + name + "\" must have " + std::to_string(n) + " rows");
	std::vector<Elem> out;
	out.reserve(n * n);
	for (const Json &row : rows) {
		if (!row.is_array() || row.size() != n)
			throw InputError(std::string("table \"") + name + "\" must have " + std::to_string(n) + " columns");
		for (const Json &x : row)
			out.push_back(static_cast<Elem>(index_value(x, "table entry", 0)));
	}
	return out;
}

Json table_json(const std::vector<Elem> &t, std::size_t n) {
	Json rows = Json::array();
	for (std::size_t i = 0; i < n; ++i)
		rows.push_back(std::vector<Elem>(t.begin() + static_cast<long>(i * n), t.begin() + static_cast<long>((i + 1) * n)));
	return rows;
}

void expect_type(const Json &j, const char *type) {
	const Json &t = field(j, "type");
	if (!t.is_string() || t.get<std::string>() != type)
		throw InputError(std::string("expected a document of type \"") + type + "\"");
}

Json labelled_set(const FiniteHeytingAlgebra &h, ElementSet s) {
	Json out = Json::array();
	s.for_each([&](Elem e) { out.push_back(h.label(e)); });
	return out;
}

} // namespace

Json read_json_file(const std::filesystem::path &path) {
	std::ifstream in(path);
	if (!in)
		throw InputError("cannot open " + path.string());
	try {
		return Json::parse(in);
	} catch (const Json::parse_error &e) {
		throw InputError(path.string() + ": " + e.what());
	}
}

Json to_json(ElementSet s) { return s.elements(); }

ElementSet element_set_from_json(const Json &j, std::size_t size) {
	if (!j.is_array())
		throw InputError("a subset must be an array of element indices");
	ElementSet out;
	for (const Json &x : j)
		out.insert(index_value(x, "element", size));
	return out;
}

Json to_json(const Violation &v) { return Json{{"law", v.law}, {"witness", v.witness}, {"message", v.message}}; }

Json to_json(const FinitePoset &p) {
	Json le = Json::array();
	for (auto [i, j] : p.pairs())
		le.push_back({i, j});
	return Json{{"type", "poset"}, {"size", p.size()}, {"le", le}};
}

std::vector<RelationPair> poset_relation_from_json(const Json &j, std::size_t &size, bool &closure) {
	expect_type(j, "poset");
	size = index_value(field(j, "size"), "size", 65);
	closure = j.contains("closure") && j.at("closure").is_boolean() && j.at("closure").get<bool>();
	const Json &le = field(j, "le");
	if (!le.is_array())
		throw InputError("\"le\" must be an array of pairs");
	std::vector<RelationPair> pairs;
	for (const Json &p : le) {
		if (!p.is_array() || p.size() != 2)
			throw InputError("\"le\" entries must be [i, j] pairs");
		pairs.emplace_back(index_value(p[0], "world", size), index_value(p[1], "world", size));
	}
	return pairs;
}

FinitePoset poset_from_json(const Json &j) {
	std::size_t n = 0;
	bool closure = false;
	std::vector<RelationPair> pairs = poset_relation_from_json(j, n, closure);
	return FinitePoset::from_relation(n, pairs, closure);
}

Json to_json(const FiniteHeytingAlgebra &h) {
	const HeytingTables &t = h.tables();
	Json j{{"type", "heyting"},
	       {"size", t.size},
	       {"bot", t.bot},
	       {"meet", table_json(t.meet, t.size)},
	       {"join", table_json(t.join, t.size)},
	       {"imp", table_json(t.imp, t.size)}};
	if (!h.labels().empty())
		j["labels"] = h.labels();
	return j;
}

HeytingTables heyting_tables_from_json(const Json &j) {
	HeytingTables t;
	t.size = index_value(field(j, "size"), "size", 65);
	if (t.size == 0)
		throw InputError("an algebra needs at least one element");
	t.bot = static_cast<Elem>(index_value(field(j, "bot"), "bot", 0));
	t.meet = square_table(j, "meet", t.size);
	t.join = square_table(j, "join", t.size);
	t.imp = square_table(j, "imp", t.size);
	return t;
}

std::vector<std::string> labels_from_json(const Json &j, std::size_t size) {
	if (!j.contains("labels"))
		return {};
	const Json &l = j.at("labels");
	if (!l.is_array() || l.size() != size)
		throw InputError("\"labels\" must list one string per element");
	std::vector<std::string> out;
	for (const Json &x : l) {
		if (!x.is_string())
			throw InputError("\"labels\" must list one string per element");
		out.push_back(x.get<std::string>());
	}
	return out;
}

FiniteHeytingAlgebra heyting_from_json(const Json &j) {
	expect_type(j, "heyting");
	HeytingTables t = heyting_tables_from_json(j);
	FiniteHeytingAlgebra h(t);
	h.set_labels(labels_from_json(j, t.size));
	return h;
}

Json to_json(const FiniteTBA &b) {
	Json j = to_json(b.algebra());
	j["type"] = "tba";
	j["box"] = b.box_table();
	return j;
}

std::vector<Elem> box_from_json(const Json &j, std::size_t size) {
	const Json &b = field(j, "box");
	if (!b.is_array() || b.size() != size)
		throw InputError("\"box\" must have one entry per element");
	std::vector<Elem> out;
	for (const Json &x : b)
		out.push_back(static_cast<Elem>(index_value(x, "box entry", 0)));
	return out;
}

FiniteTBA tba_from_json(const Json &j) {
	expect_type(j, "tba");
	HeytingTables t = heyting_tables_from_json(j);
	std::vector<Elem> box = box_from_json(j, t.size);
	FiniteHeytingAlgebra h(t);
	h.set_labels(labels_from_json(j, t.size));
	return FiniteTBA(std::move(h), std::move(box));
}

Json to_json(const TwistStructure &t, const std::optional<std::string> &base_ref) {
	Json base;
	if (base_ref)
		base = *base_ref;
	else if (t.tba())
		base = to_json(*t.tba());
	else
		base = to_json(t.base());
	return Json{{"type", "twist"}, {"base", base}, {"nabla", to_json(t.nabla())}, {"delta", to_json(t.delta())}};
}

TwistStructure twist_from_json(const Json &j, const std::filesystem::path &dir) {
	expect_type(j, "twist");
	Json base = field(j, "base");
	if (base.is_string())
		base = read_json_file(dir / base.get<std::string>());
	if (!base.is_object())
		throw InputError("\"base\" must be a path or an inline algebra");
	const std::string type = field(base, "type").is_string() ? base.at("type").get<std::string>() : "";
	if (type == "tba") {
		auto b = std::make_shared<const FiniteTBA>(tba_from_json(base));
		return tw(b, element_set_from_json(field(j, "nabla"), b->size()),
		          element_set_from_json(field(j, "delta"), b->size()));
	}
	if (type == "heyting") {
		auto h = std::make_shared<const FiniteHeytingAlgebra>(heyting_from_json(base));
		return tw(h, element_set_from_json(field(j, "nabla"), h->size()),
		          element_set_from_json(field(j, "delta"), h->size()));
	}
	throw InputError("twist base must be of type \"heyting\" or \"tba\"");
}

Document load_document(const std::filesystem::path &path) {
	Document d;
	d.json = read_json_file(path);
	d.dir = path.parent_path();
	const Json &t = field(d.json, "type");
	if (!t.is_string())
		throw InputError("\"type\" must be a string");
	d.type = t.get<std::string>();
	if (d.type != "poset" && d.type != "heyting" && d.type != "tba" && d.type != "twist")
		throw InputError("unknown document type \"" + d.type + "\"");
	if (d.json.contains("formulas")) {
		const Json &fs = d.json.at("formulas");
		if (!fs.is_array())
			throw InputError("\"formulas\" must be an array of strings");
		for (const Json &f : fs) {
			if (!f.is_string())
				throw InputError("\"formulas\" must be an array of strings");
			d.formulas.push_back(parse(f.get<std::string>()));
		}
	}
	return d;
}

Structure LoadedStructure::view() const {
	if (twist)
		return Structure(*twist);
	if (tba)
		return Structure(*tba);
	return Structure(*heyting);
}

LoadedStructure load_structure(const Document &doc) {
	LoadedStructure out;
	if (doc.type == "poset")
		out.heyting = std::make_shared<const FiniteHeytingAlgebra>(heyting_from_poset(poset_from_json(doc.json)));
	else if (doc.type == "heyting")
		out.heyting = std::make_shared<const FiniteHeytingAlgebra>(heyting_from_json(doc.json));
	else if (doc.type == "tba")
		out.tba = std::make_shared<const FiniteTBA>(tba_from_json(doc.json));
	else
		out.twist = std::make_shared<const TwistStructure>(twist_from_json(doc.json, doc.dir));
	return out;
}

Json value_to_json(const Value &v) {
	if (const Pair *p = std::get_if<Pair>(&v))
		return Json::array({p->first, p->second});
	return std::get<Elem>(v);
}

Json witness_to_json(const Structure &s, const ValidityResult &r) {
	Json j{{"valid", r.valid}};
	if (r.witness) {
		Json val = Json::object(), lab = Json::object();
		for (const auto &[k, v] : *r.witness) {
			val[k] = value_to_json(v);
			lab[k] = value_label(s, v);
		}
		j["valuation"] = val;
		j["valuation_labels"] = lab;
	}
	if (r.value) {
		j["value"] = value_to_json(*r.value);
		j["value_label"] = value_label(s, *r.value);
	}
	return j;
}

Json to_json(const KripkeRefutation &r) {
	Json val = Json::object();
	for (const auto &[k, v] : r.model.valuation)
		val[k] = to_json(v);
	return Json{{"frame", to_json(r.model.frame)}, {"valuation", val}, {"world", r.world}};
}

Json to_json(const OpenPairsReport &r) {
	Json g2 = Json::array();
	for (Pair p : r.g2)
		g2.push_back({p.first, p.second});
	Json j{{"g2", g2},
	       {"open", to_json(r.open)},
	       {"gamma", to_json(r.gamma)},
	       {"lambda", to_json(r.lambda)},
	       {"nabla_g", to_json(r.nabla_g)},
	       {"delta_g", to_json(r.delta_g)},
	       {"gamma_eq_lambda", r.gamma_eq_lambda},
	       {"gamma_sub_lambda", r.gamma_sub_lambda},
	       {"lambda_sub_gamma", r.lambda_sub_gamma},
	       {"g2_imp_closed", r.g2_imp_closed},
	       {"box_pair_closed", r.box_pair_closed}};
	if (r.algebra)
		j["algebra"] = Json{{"size", r.algebra->structure.size()}, {"embedding", r.algebra->embedding}};
	return j;
}

Json to_json(const TwTopReport &r, bool with_entries) {
	Json j{{"grz", r.grz},
	       {"open_eq_lambda", r.open_eq_lambda},
	       {"gamma_eq_lambda", r.gamma_eq_lambda},
	       {"hypotheses_hold", r.hypotheses_hold()},
	       {"formulas", r.entries.size()},
	       {"mismatches", r.mismatches}};
	Json bad = Json::array();
	for (const TwTopEntry &e : r.entries)
		if (!e.agree())
			bad.push_back(to_string(e.formula));
	j["mismatching"] = bad;
	if (with_entries) {
		Json es = Json::array();
		for (const TwTopEntry &e : r.entries)
			es.push_back({{"formula", to_string(e.formula)},
			              {"open_pairs_valid", e.open_pairs_valid},
			              {"translated_valid", e.translated_valid}});
		j["entries"] = es;
	}
	return j;
}

Json to_json(const CompanionInstance &c) {
	const FiniteHeytingAlgebra &a = *c.base.source;
	Json iota = Json::array();
	for (std::size_t i = 0; i < c.base.iota.size(); ++i)
		iota.push_back({{"a", a.label(static_cast<Elem>(i))}, {"b", c.base.iota[i]}});
	Json open = Json::array();
	for (const Pair &p : g2(c.t))
		open.push_back(c.pair_label(p));
	Json closed = Json::array();
	for (const Pair &p : c.closed_twist.carrier())
		closed.push_back(c.closed_twist.pair_label(p));
	Json j{{"source", {{"size", a.size()}, {"nabla", labelled_set(a, c.nabla)}, {"delta", labelled_set(a, c.delta)}}},
	       {"closure_N", labelled_set(a, closure_N(a, c.delta))},
	       {"s_of_A_size", c.base.b->size()},
	       {"iota", iota},
	       {"nabla_hat", to_json(c.nabla_hat)},
	       {"delta_hat", to_json(c.delta_hat)},
	       {"twist_size", c.t.size()},
	       {"open_pairs", open},
	       {"closed_twist", closed}};
	if (c.twtop)
		j["twtop"] = to_json(*c.twtop, false);
	return j;
}

Json to_json(const KleeneScanReport &r) {
	return Json{{"max_poset", r.max_poset},
	            {"algebras", r.algebras},
	            {"instances", r.instances},
	            {"chi_valid", r.chi_valid},
	            {"chi_prime_valid", r.chi_prime_valid},
	            {"violations", r.violations}};
}

Json to_json(const KleeneDemoReport &r) {
	Json w = Json::object();
	for (const auto &[k, v] : r.witness)
		w[k] = value_to_json(v);
	Json least = Json::object();
	if (r.least_refuter.witness)
		for (const auto &[k, v] : *r.least_refuter.witness)
			least[k] = value_to_json(v);
	return Json{{"chi_valid", r.chi_valid},
	            {"chi_prime_valid", r.chi_prime_valid},
	            {"exhibited_witness", {{"valuation", w}, {"value", value_to_json(r.witness_value)}, {"pi1", r.witness_pi1}}},
	            {"least_witness", {{"valuation", least},
	                               {"value", r.least_refuter.value ? value_to_json(*r.least_refuter.value) : Json()}}},
	            {"pipeline", {{"tb_chi_valid", r.pipeline_chi_valid},
	                          {"tb_chi_prime_valid", r.pipeline_chi_prime_valid},
	                          {"open_pairs_chi_prime_valid", r.open_pairs_chi_prime_valid}}},
	            {"scan", to_json(r.scan)},
	            {"transcript", r.transcript}};
}

Json to_json(const CompanionSweepReport &r) {
	return Json{{"max_poset", r.max_poset},   {"algebras", r.algebras},
	            {"instances", r.instances},   {"distinct", r.distinct},
	            {"formulas", r.formulas},     {"max_twist_size", r.max_twist_size},
	            {"mismatches", r.mismatches}, {"mismatch_lines", r.mismatch_lines}};
}

} // namespace twistlab
