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

#include <algorithm>
#include <unordered_map>

#include <omp.h>

#include "kernel.hpp"
#include "twistlab/errors.hpp"

namespace twistlab::detail {

ValueAlgebra compile_structure(const Structure &s) {
	ValueAlgebra a;
	const FiniteHeytingAlgebra &h = s.lattice();
	a.m = s.value_count();
	const std::size_t m = a.m;
	a.conj.resize(m * m);
	a.disj.resize(m * m);
	a.imp.resize(m * m);
	a.designated.resize(m);
	if (const TwistStructure *t = s.twist()) {
		const auto &car = t->carrier();
		auto code = [&](Pair p) {
			int i = t->index_of(p);
			if (i < 0)
				throw InvariantViolation("twist operation left the carrier");
			return static_cast<Code>(i);
		};
		for (std::size_t i = 0; i < m; ++i) {
			for (std::size_t j = 0; j < m; ++j) {
				a.conj[i * m + j] = code(t->conj(car[i], car[j]));
				a.disj[i * m + j] = code(t->disj(car[i], car[j]));
				a.imp[i * m + j] = code(t->imp(car[i], car[j]));
			}
			a.designated[i] = car[i].first == h.top();
		}
		a.snot.resize(m);
		for (std::size_t i = 0; i < m; ++i)
			a.snot[i] = code(t->snot(car[i]));
		if (s.modal()) {
			a.box.resize(m);
			a.dia.resize(m);
			for (std::size_t i = 0; i < m; ++i) {
				a.box[i] = code(t->box(car[i]));
				a.dia[i] = code(t->dia(car[i]));
			}
		}
		a.bot = code(t->bot());
		return a;
	}
	for (std::size_t i = 0; i < m; ++i) {
		for (std::size_t j = 0; j < m; ++j) {
			a.conj[i * m + j] = h.meet(static_cast<Elem>(i), static_cast<Elem>(j));
			a.disj[i * m + j] = h.join(static_cast<Elem>(i), static_cast<Elem>(j));
			a.imp[i * m + j] = h.imp(static_cast<Elem>(i), static_cast<Elem>(j));
		}
		a.designated[i] = i == h.top();
	}
	if (const FiniteTBA *b = s.tba()) {
		a.box.resize(m);
		a.dia.resize(m);
		for (std::size_t i = 0; i < m; ++i) {
			a.box[i] = b->box(static_cast<Elem>(i));
			a.dia[i] = b->dia(static_cast<Elem>(i));
		}
	}
	a.bot = h.bot();
	return a;
}

Value decode(const Structure &s, Code c) {
	if (const TwistStructure *t = s.twist())
		return t->carrier().at(c);
	return static_cast<Elem>(c);
}

Code encode(const Structure &s, const Value &v) {
	if (const TwistStructure *t = s.twist()) {
		const Pair *p = std::get_if<Pair>(&v);
		int i = p ? t->index_of(*p) : -1;
		if (i < 0)
			throw std::invalid_argument("value is not a pair of the twist carrier");
		return static_cast<Code>(i);
	}
	const Elem *e = std::get_if<Elem>(&v);
	if (!e || *e >= s.value_count())
		throw std::invalid_argument("value is not an element of the algebra");
	return *e;
}

namespace {

enum class Op : std::uint8_t { Var, Bot, SNeg, And, Or, Imp, Box, Dia };

struct Node {
	Op op;
	std::uint32_t a;
	std::uint32_t b;
};

// Hash-consed term graph; children always precede parents.
class Dag {
public:
	explicit Dag(const std::vector<std::string> &vars) : vars_(vars) {}

	std::uint32_t add(const Formula &f) {
		auto hit = by_ptr_.find(f.id());
		if (hit != by_ptr_.end())
			return hit->second;
		Node n{Op::Bot, 0, 0};
		switch (f.kind()) {
		case Kind::Var: {
			auto it = std::lower_bound(vars_.begin(), vars_.end(), f.name());
			n = {Op::Var, static_cast<std::uint32_t>(it - vars_.begin()), 0};
			break;
		}
		case Kind::Bot: break;
		case Kind::SNeg: n = {Op::SNeg, add(f.lhs()), 0}; break;
		case Kind::Box: n = {Op::Box, add(f.lhs()), 0}; break;
		case Kind::Dia: n = {Op::Dia, add(f.lhs()), 0}; break;
		case Kind::And: n = {Op::And, add(f.lhs()), add(f.rhs())}; break;
		case Kind::Or: n = {Op::Or, add(f.lhs()), add(f.rhs())}; break;
		case Kind::Imp: n = {Op::Imp, add(f.lhs()), add(f.rhs())}; break;
		default: throw InvariantViolation("kernel received an undesugared formula");
		}
		std::uint64_t key = (std::uint64_t{static_cast<std::uint8_t>(n.op)} << 56) ^ (std::uint64_t{n.a} << 28) ^ n.b;
		auto [it, fresh] = by_key_.emplace(key, static_cast<std::uint32_t>(nodes_.size()));
		if (fresh)
			nodes_.push_back(n);
		by_ptr_.emplace(f.id(), it->second);
		keep_.push_back(f);
		return it->second;
	}

	const std::vector<Node> &nodes() const { return nodes_; }

private:
	const std::vector<std::string> &vars_;
	std::vector<Node> nodes_;
	std::unordered_map<std::uint64_t, std::uint32_t> by_key_;
	std::unordered_map<const void *, std::uint32_t> by_ptr_;
	std::vector<Formula> keep_; // pins the ids used in by_ptr_
};

constexpr std::size_t kMaxChunk = 4096;
constexpr std::size_t kFirstChunk = 64;

struct Plan {
	std::vector<std::uint32_t> order; // needed nodes, ascending
	std::vector<std::int32_t> slot;   // node -> row in the chunk buffer
	std::vector<std::size_t> roots;   // formula positions still live
};

void eval_chunk(const ValueAlgebra &alg, const std::vector<Node> &nodes, const Plan &plan, std::size_t k, std::uint64_t start,
                std::size_t len, std::vector<Code> &buf, const std::vector<std::uint32_t> &root_nodes, std::uint64_t *first_fail) {
	const std::size_t m = alg.m;
	buf.resize(plan.order.size() * len);
	// Decode the first index of the chunk into mixed-radix digits.
	std::vector<std::size_t> digits(k, 0);
	{
		std::uint64_t x = start;
		for (std::size_t j = k; j-- > 0;) {
			digits[j] = x % m;
			x /= m;
		}
	}
	std::vector<Code *> var_rows(k, nullptr);
	for (std::uint32_t id : plan.order)
		if (nodes[id].op == Op::Var)
			var_rows[nodes[id].a] = buf.data() + plan.slot[id] * len;
	for (std::size_t i = 0; i < len; ++i) {
		for (std::size_t j = 0; j < k; ++j)
			if (var_rows[j])
				var_rows[j][i] = static_cast<Code>(digits[j]);
		for (std::size_t j = k; j-- > 0;) {
			if (++digits[j] < m)
				break;
			digits[j] = 0;
		}
	}
	for (std::uint32_t id : plan.order) {
		const Node &n = nodes[id];
		Code *out = buf.data() + plan.slot[id] * len;
		const Code *x = n.op >= Op::SNeg ? buf.data() + plan.slot[n.a] * len : nullptr;
		const Code *y = (n.op == Op::And || n.op == Op::Or || n.op == Op::Imp) ? buf.data() + plan.slot[n.b] * len : nullptr;
		switch (n.op) {
		case Op::Var: break;
		case Op::Bot: std::fill(out, out + len, alg.bot); break;
		case Op::SNeg:
			for (std::size_t i = 0; i < len; ++i)
				out[i] = alg.snot[x[i]];
			break;
		case Op::Box:
			for (std::size_t i = 0; i < len; ++i)
				out[i] = alg.box[x[i]];
			break;
		case Op::Dia:
			for (std::size_t i = 0; i < len; ++i)
				out[i] = alg.dia[x[i]];
			break;
		case Op::And:
			for (std::size_t i = 0; i < len; ++i)
				out[i] = alg.conj[x[i] * m + y[i]];
			break;
		case Op::Or:
			for (std::size_t i = 0; i < len; ++i)
				out[i] = alg.disj[x[i] * m + y[i]];
			break;
		case Op::Imp:
			for (std::size_t i = 0; i < len; ++i)
				out[i] = alg.imp[x[i] * m + y[i]];
			break;
		}
	}
	for (std::size_t r = 0; r < plan.roots.size(); ++r) {
		const Code *row = buf.data() + plan.slot[root_nodes[plan.roots[r]]] * len;
		first_fail[r] = kNoRefuter;
		for (std::size_t i = 0; i < len; ++i)
			if (!alg.designated[row[i]]) {
				first_fail[r] = start + i;
				break;
			}
	}
}

Plan make_plan(const std::vector<Node> &nodes, const std::vector<std::uint32_t> &root_nodes, const std::vector<std::size_t> &live) {
	Plan p;
	p.roots = live;
	std::vector<std::uint8_t> need(nodes.size(), 0);
	for (std::size_t r : live)
		need[root_nodes[r]] = 1;
	for (std::size_t id = nodes.size(); id-- > 0;) {
		if (!need[id])
			continue;
		const Node &n = nodes[id];
		if (n.op >= Op::SNeg)
			need[n.a] = 1;
		if (n.op == Op::And || n.op == Op::Or || n.op == Op::Imp)
			need[n.b] = 1;
	}
	p.slot.assign(nodes.size(), -1);
	for (std::uint32_t id = 0; id < nodes.size(); ++id)
		if (need[id]) {
			p.slot[id] = static_cast<std::int32_t>(p.order.size());
			p.order.push_back(id);
		}
	return p;
}

} // namespace

std::vector<std::uint64_t> sweep(const ValueAlgebra &alg, const std::vector<std::string> &vars, std::span<const Formula> fs,
                                 int jobs) {
	const std::size_t k = vars.size();
	std::uint64_t total = 1;
	for (std::size_t j = 0; j < k; ++j)
		total *= alg.m;

	Dag dag(vars);
	std::vector<std::uint32_t> root_nodes;
	root_nodes.reserve(fs.size());
	for (const Formula &f : fs)
		root_nodes.push_back(dag.add(f));
	const std::vector<Node> &nodes = dag.nodes();

	std::vector<std::uint64_t> result(fs.size(), kNoRefuter);
	std::vector<std::size_t> live(fs.size());
	for (std::size_t i = 0; i < fs.size(); ++i)
		live[i] = i;

	const int threads = jobs > 0 ? jobs : omp_get_max_threads();
	std::vector<std::vector<Code>> buffers(static_cast<std::size_t>(threads));
	std::uint64_t pos = 0;
	std::size_t chunk = kFirstChunk;
	while (pos < total && !live.empty()) {
		Plan plan = make_plan(nodes, root_nodes, live);
		// Waves of chunks; each chunk reports its least failing index per
		// live root and the wave keeps the minimum, so the outcome does not
		// depend on how chunks are spread over threads.
		const std::uint64_t remaining = total - pos;
		std::size_t wave = static_cast<std::size_t>(threads);
		if (std::uint64_t(wave) * chunk > remaining)
			wave = static_cast<std::size_t>((remaining + chunk - 1) / chunk);
		std::vector<std::uint64_t> fails(wave * plan.roots.size(), kNoRefuter);
#pragma omp parallel for schedule(static, 1) num_threads(threads) if (wave > 1)
		for (std::size_t c = 0; c < wave; ++c) {
			std::uint64_t start = pos + std::uint64_t(c) * chunk;
			std::size_t len = static_cast<std::size_t>(std::min<std::uint64_t>(chunk, total - start));
			auto &buf = buffers[static_cast<std::size_t>(omp_get_thread_num())];
			eval_chunk(alg, nodes, plan, k, start, len, buf, root_nodes, fails.data() + c * plan.roots.size());
		}
		std::vector<std::size_t> still;
		for (std::size_t r = 0; r < plan.roots.size(); ++r) {
			std::uint64_t best = kNoRefuter;
			for (std::size_t c = 0; c < wave; ++c)
				best = std::min(best, fails[c * plan.roots.size() + r]);
			if (best == kNoRefuter)
				still.push_back(plan.roots[r]);
			else
				result[plan.roots[r]] = best;
		}
		live = std::move(still);
		pos += std::uint64_t(wave) * chunk;
		chunk = std::min(kMaxChunk, chunk * 4);
	}
	return result;
}

} // namespace twistlab::detail
