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

#include "twistlab/formula.hpp"

#include <algorithm>
#include <array>

#include "twistlab/errors.hpp"

namespace twistlab {

struct FormulaNode {
	Kind kind;
	std::string name;
	std::optional<Formula> a;
	std::optional<Formula> b;
	std::size_t depth = 0;
	std::size_t count = 1;
};

namespace {

const std::array<std::string_view, 1> kReserved = {"bot"};

} // namespace

std::string_view to_string(Kind k) {
	switch (k) {
	case Kind::Var: return "var";
	case Kind::Bot: return "bot";
	case Kind::SNeg: return "sneg";
	case Kind::And: return "and";
	case Kind::Or: return "or";
	case Kind::Imp: return "imp";
	case Kind::Box: return "box";
	case Kind::Dia: return "dia";
	case Kind::Neg: return "neg";
	case Kind::Iff: return "iff";
	case Kind::SIff: return "siff";
	}
	return "?";
}

std::string_view to_string(Language l) {
	switch (l) {
	case Language::Li: return "Li";
	case Language::Ls: return "Ls";
	case Language::Lbox: return "Lbox";
	case Language::Lsbox: return "Lsbox";
	}
	return "?";
}

std::optional<Language> language_from_string(std::string_view s) {
	for (Language l : {Language::Li, Language::Ls, Language::Lbox, Language::Lsbox})
		if (to_string(l) == s)
			return l;
	return std::nullopt;
}

bool is_unary(Kind k) { return k == Kind::SNeg || k == Kind::Neg || k == Kind::Box || k == Kind::Dia; }
bool is_binary(Kind k) {
	return k == Kind::And || k == Kind::Or || k == Kind::Imp || k == Kind::Iff || k == Kind::SIff;
}

bool is_reserved_word(std::string_view name) {
	return std::find(kReserved.begin(), kReserved.end(), name) != kReserved.end();
}

bool is_valid_variable_name(std::string_view name) {
	if (name.empty() || !(name[0] >= 'a' && name[0] <= 'z'))
		return false;
	for (char c : name) {
		bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
		if (!ok)
			return false;
	}
	return !is_reserved_word(name);
}

Formula Formula::var(std::string name) {
	if (is_reserved_word(name))
		throw LanguageError("reserved word '" + name + "' cannot be used as a variable");
	if (!is_valid_variable_name(name))
		throw LanguageError("invalid variable name '" + name + "'");
	auto n = std::make_shared<FormulaNode>();
	n->kind = Kind::Var;
	n->name = std::move(name);
	return Formula(std::move(n));
}

Formula Formula::bot() {
	static const Formula f = [] {
		auto n = std::make_shared<FormulaNode>();
		n->kind = Kind::Bot;
		return Formula(std::move(n));
	}();
	return f;
}

Formula Formula::make(Kind k, Formula a) {
	if (!is_unary(k))
		throw std::invalid_argument("make: kind is not unary");
	auto n = std::make_shared<FormulaNode>();
	n->kind = k;
	n->depth = a.depth() + 1;
	n->count = a.node_count() + 1;
	n->a = std::move(a);
	return Formula(std::move(n));
}

Formula Formula::make(Kind k, Formula a, Formula b) {
	if (!is_binary(k))
		throw std::invalid_argument("make: kind is not binary");
	auto n = std::make_shared<FormulaNode>();
	n->kind = k;
	n->depth = std::max(a.depth(), b.depth()) + 1;
	n->count = a.node_count() + b.node_count() + 1;
	n->a = std::move(a);
	n->b = std::move(b);
	return Formula(std::move(n));
}

Formula Formula::sneg(Formula f) { return make(Kind::SNeg, std::move(f)); }
Formula Formula::neg(Formula f) { return make(Kind::Neg, std::move(f)); }
Formula Formula::box(Formula f) { return make(Kind::Box, std::move(f)); }
Formula Formula::dia(Formula f) { return make(Kind::Dia, std::move(f)); }
Formula Formula::conj(Formula a, Formula b) { return make(Kind::And, std::move(a), std::move(b)); }
Formula Formula::disj(Formula a, Formula b) { return make(Kind::Or, std::move(a), std::move(b)); }
Formula Formula::imp(Formula a, Formula b) { return make(Kind::Imp, std::move(a), std::move(b)); }
Formula Formula::iff(Formula a, Formula b) { return make(Kind::Iff, std::move(a), std::move(b)); }
Formula Formula::siff(Formula a, Formula b) { return make(Kind::SIff, std::move(a), std::move(b)); }

Kind Formula::kind() const { return node_->kind; }
const std::string &Formula::name() const { return node_->name; }
const Formula &Formula::lhs() const {
	if (!node_->a)
		throw std::logic_error("lhs() on an atom");
	return *node_->a;
}
const Formula &Formula::rhs() const {
	if (!node_->b)
		throw std::logic_error("rhs() on a non-binary node");
	return *node_->b;
}
std::size_t Formula::depth() const { return node_->depth; }
std::size_t Formula::node_count() const { return node_->count; }

namespace {
void collect_vars(const Formula &f, std::set<std::string> &out) {
	if (f.kind() == Kind::Var) {
		out.insert(f.name());
		return;
	}
	if (f.kind() == Kind::Bot)
		return;
	collect_vars(f.lhs(), out);
	if (is_binary(f.kind()))
		collect_vars(f.rhs(), out);
}
} // namespace

std::set<std::string> Formula::variables() const {
	std::set<std::string> out;
	collect_vars(*this, out);
	return out;
}

bool operator==(const Formula &a, const Formula &b) {
	if (a.node_ == b.node_)
		return true;
	if (a.kind() != b.kind() || a.node_count() != b.node_count())
		return false;
	switch (a.kind()) {
	case Kind::Var: return a.name() == b.name();
	case Kind::Bot: return true;
	default: break;
	}
	if (!(a.lhs() == b.lhs()))
		return false;
	return !is_binary(a.kind()) || a.rhs() == b.rhs();
}

// ---------------------------------------------------------------------------
// Printing

namespace {

std::string_view symbol(Kind k) {
	switch (k) {
	case Kind::SNeg: return "~";
	case Kind::Neg: return "!";
	case Kind::Box: return "[]";
	case Kind::Dia: return "<>";
	case Kind::And: return "&";
	case Kind::Or: return "|";
	case Kind::Imp: return "->";
	case Kind::Iff: return "<->";
	case Kind::SIff: return "<=>";
	default: return "";
	}
}

bool is_atom(const Formula &f) { return f.kind() == Kind::Var || f.kind() == Kind::Bot; }

void print(const Formula &f, std::string &out) {
	switch (f.kind()) {
	case Kind::Var: out += f.name(); return;
	case Kind::Bot: out += "bot"; return;
	default: break;
	}
	if (is_unary(f.kind())) {
		out += symbol(f.kind());
		if (is_binary(f.lhs().kind())) {
			out += '(';
			print(f.lhs(), out);
			out += ')';
		} else {
			print(f.lhs(), out);
		}
		return;
	}
	auto operand = [&](const Formula &g) {
		if (is_atom(g)) {
			print(g, out);
		} else {
			out += '(';
			print(g, out);
			out += ')';
		}
	};
	operand(f.lhs());
	out += ' ';
	out += symbol(f.kind());
	out += ' ';
	operand(f.rhs());
}

} // namespace

std::string to_string(const Formula &f) {
	std::string out;
	print(f, out);
	return out;
}

// ---------------------------------------------------------------------------
// Structural transformations

bool contains(const Formula &f, Kind k) {
	if (f.kind() == k)
		return true;
	if (is_atom(f))
		return false;
	if (contains(f.lhs(), k))
		return true;
	return is_binary(f.kind()) && contains(f.rhs(), k);
}

namespace {

Formula desugar_rec(const Formula &f, Language target) {
	switch (f.kind()) {
	case Kind::Var:
	case Kind::Bot: return f;
	case Kind::Neg: return Formula::imp(desugar_rec(f.lhs(), target), Formula::bot());
	case Kind::Dia: {
		Formula a = desugar_rec(f.lhs(), target);
		if (target == Language::Lbox)
			return Formula::imp(Formula::box(Formula::imp(a, Formula::bot())), Formula::bot());
		return Formula::dia(a);
	}
	case Kind::SNeg:
	case Kind::Box: return Formula::make(f.kind(), desugar_rec(f.lhs(), target));
	case Kind::Iff: {
		Formula a = desugar_rec(f.lhs(), target);
		Formula b = desugar_rec(f.rhs(), target);
		return Formula::conj(Formula::imp(a, b), Formula::imp(b, a));
	}
	case Kind::SIff: {
		Formula a = desugar_rec(f.lhs(), target);
		Formula b = desugar_rec(f.rhs(), target);
		Formula na = Formula::sneg(a);
		Formula nb = Formula::sneg(b);
		return Formula::conj(Formula::conj(Formula::imp(a, b), Formula::imp(b, a)),
		                     Formula::conj(Formula::imp(na, nb), Formula::imp(nb, na)));
	}
	default: return Formula::make(f.kind(), desugar_rec(f.lhs(), target), desugar_rec(f.rhs(), target));
	}
}

} // namespace

Formula desugar(const Formula &f, std::optional<Language> target) {
	bool strong = contains(f, Kind::SNeg) || contains(f, Kind::SIff);
	Language t = target.value_or(strong ? Language::Lsbox : Language::Lbox);
	return desugar_rec(f, t);
}

Language language_of(const Formula &f) {
	bool strong = contains(f, Kind::SNeg) || contains(f, Kind::SIff);
	bool modal = contains(f, Kind::Box) || contains(f, Kind::Dia);
	if (strong && modal)
		return Language::Lsbox;
	if (strong)
		return Language::Ls;
	if (modal)
		return Language::Lbox;
	return Language::Li;
}

Formula substitute(const Formula &f, const std::map<std::string, Formula> &sub) {
	switch (f.kind()) {
	case Kind::Var: {
		auto it = sub.find(f.name());
		return it == sub.end() ? f : it->second;
	}
	case Kind::Bot: return f;
	default: break;
	}
	if (is_unary(f.kind()))
		return Formula::make(f.kind(), substitute(f.lhs(), sub));
	return Formula::make(f.kind(), substitute(f.lhs(), sub), substitute(f.rhs(), sub));
}

// ---------------------------------------------------------------------------
// Translations

namespace {

Formula gt(const Formula &f) {
	switch (f.kind()) {
	case Kind::Var: return Formula::box(f);
	case Kind::Bot: return f;
	case Kind::And:
	case Kind::Or: return Formula::make(f.kind(), gt(f.lhs()), gt(f.rhs()));
	case Kind::Imp: return Formula::box(Formula::imp(gt(f.lhs()), gt(f.rhs())));
	default: throw LanguageError("godel_tarski: connective '" + std::string(to_string(f.kind())) + "' is outside Li");
	}
}

Formula tb(const Formula &f);

// T_B applied to ∼g.
Formula tb_neg(const Formula &g) {
	switch (g.kind()) {
	case Kind::Var: return Formula::box(Formula::sneg(g));
	case Kind::Bot: return Formula::sneg(g);
	case Kind::And: return Formula::disj(tb_neg(g.lhs()), tb_neg(g.rhs()));
	case Kind::Or: return Formula::conj(tb_neg(g.lhs()), tb_neg(g.rhs()));
	case Kind::Imp: return Formula::conj(tb(g.lhs()), tb_neg(g.rhs()));
	case Kind::SNeg: return tb(g.lhs());
	default: throw LanguageError("belnap_translate: connective '" + std::string(to_string(g.kind())) + "' is outside Ls");
	}
}

Formula tb(const Formula &f) {
	switch (f.kind()) {
	case Kind::Var: return Formula::box(f);
	case Kind::Bot: return f;
	case Kind::And:
	case Kind::Or: return Formula::make(f.kind(), tb(f.lhs()), tb(f.rhs()));
	case Kind::Imp: return Formula::box(Formula::imp(tb(f.lhs()), tb(f.rhs())));
	case Kind::SNeg: return tb_neg(f.lhs());
	default: throw LanguageError("belnap_translate: connective '" + std::string(to_string(f.kind())) + "' is outside Ls");
	}
}

} // namespace

Formula godel_tarski(const Formula &f) {
	if (language_of(f) != Language::Li)
		throw LanguageError("godel_tarski: input must be an Li formula, got " + std::string(to_string(language_of(f))));
	return gt(desugar(f, Language::Li));
}

Formula belnap_translate(const Formula &f) {
	Language l = language_of(f);
	if (l != Language::Li && l != Language::Ls)
		throw LanguageError("belnap_translate: modal input rejected");
	return tb(desugar(f, Language::Ls));
}

bool is_tb_normal(const Formula &f) {
	if (f.kind() == Kind::SNeg)
		return is_atom(f.lhs());
	if (is_atom(f))
		return true;
	if (!is_tb_normal(f.lhs()))
		return false;
	return !is_binary(f.kind()) || is_tb_normal(f.rhs());
}

// ---------------------------------------------------------------------------
// Axiom library

namespace {

std::vector<Formula> parse_all(std::initializer_list<std::string_view> texts) {
	std::vector<Formula> out;
	for (auto t : texts)
		out.push_back(parse(t));
	return out;
}

void append(std::vector<Formula> &dst, const std::vector<Formula> &src) { dst.insert(dst.end(), src.begin(), src.end()); }

} // namespace

Formula kleene_axiom() { return parse("(p & ~p) -> (q | ~q)"); }
Formula kleene_prime_axiom() { return parse("!!(p & ~p) -> (q | ~q)"); }

std::vector<Formula> axioms(AxiomSet set) {
	switch (set) {
	case AxiomSet::Int:
		return parse_all({
		    "p -> (q -> p)",
		    "(p -> (q -> r)) -> ((p -> q) -> (p -> r))",
		    "(p & q) -> p",
		    "(p & q) -> q",
		    "p -> (q -> (p & q))",
		    "p -> (p | q)",
		    "q -> (p | q)",
		    "(p -> r) -> ((q -> r) -> ((p | q) -> r))",
		    "bot -> p",
		});
	case AxiomSet::SNeg:
		return parse_all({
		    "~(p | q) <-> (~p & ~q)",
		    "~(p & q) <-> (~p | ~q)",
		    "~(p -> q) <-> (p & ~q)",
		    "~~p <-> p",
		    "~bot",
		});
	case AxiomSet::S4Modal:
		return parse_all({
		    "[](p -> p)",
		    "([]p & []q) -> [](p & q)",
		    "[]p -> p",
		    "[]p -> [][]p",
		});
	case AxiomSet::BS4Interplay:
		return parse_all({
		    "![]p <-> <>!p",
		    "!<>p <-> []!p",
		    "[]p <=> ~<>~p",
		    "<>p <=> ~[]~p",
		});
	case AxiomSet::N4Bot: {
		auto out = axioms(AxiomSet::Int);
		append(out, axioms(AxiomSet::SNeg));
		return out;
	}
	case AxiomSet::S4: {
		auto out = axioms(AxiomSet::Int);
		out.push_back(parse("p | !p"));
		append(out, axioms(AxiomSet::S4Modal));
		return out;
	}
	case AxiomSet::BS4: {
		auto out = axioms(AxiomSet::S4);
		append(out, axioms(AxiomSet::SNeg));
		append(out, axioms(AxiomSet::BS4Interplay));
		return out;
	}
	case AxiomSet::Grz: return parse_all({"[]([](p -> []p) -> p) -> p"});
	case AxiomSet::Kleene: return {kleene_axiom()};
	case AxiomSet::KleenePrime: return {kleene_prime_axiom()};
	case AxiomSet::ClosedIdealAxiom: return parse_all({"!!(p & ~p) <-> (p & ~p)"});
	}
	throw std::invalid_argument("unknown axiom set");
}

namespace {
const std::array<std::pair<AxiomSet, std::string_view>, 11> kAxiomNames = {{
    {AxiomSet::Int, "INT"},
    {AxiomSet::SNeg, "SNEG"},
    {AxiomSet::S4Modal, "S4MODAL"},
    {AxiomSet::BS4Interplay, "BS4INTERPLAY"},
    {AxiomSet::N4Bot, "N4BOT"},
    {AxiomSet::S4, "S4"},
    {AxiomSet::BS4, "BS4"},
    {AxiomSet::Grz, "GRZ"},
    {AxiomSet::Kleene, "KLEENE"},
    {AxiomSet::KleenePrime, "KLEENE_PRIME"},
    {AxiomSet::ClosedIdealAxiom, "CLOSED_IDEAL_AXIOM"},
}};
} // namespace

std::string_view to_string(AxiomSet set) {
	for (auto &[s, n] : kAxiomNames)
		if (s == set)
			return n;
	return "?";
}

AxiomSet axiom_set_from_string(std::string_view name) {
	for (auto &[s, n] : kAxiomNames)
		if (n == name)
			return s;
	throw std::invalid_argument("unknown axiom set '" + std::string(name) + "'");
}

} // namespace twistlab
