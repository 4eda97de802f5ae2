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

#include <string>
#include <vector>

#include "twistlab/errors.hpp"
#include "twistlab/formula.hpp"

namespace twistlab {

namespace {

enum class Tok { Ident, Bot, LParen, RParen, SNeg, Neg, Box, Dia, And, Or, Imp, Iff, SIff, End };

struct Token {
	Tok kind;
	std::string text;
	std::size_t line;
	std::size_t column;
};

std::string describe(const Token &t) {
	switch (t.kind) {
	case Tok::End: return "end of input";
	case Tok::Ident: return "identifier '" + t.text + "'";
	default: return "'" + t.text + "'";
	}
}

class Lexer {
public:
	explicit Lexer(std::string_view src) : src_(src) {}

	std::vector<Token> run() {
		std::vector<Token> out;
		for (;;) {
			skip_space();
			std::size_t line = line_, col = col_;
			if (pos_ >= src_.size()) {
				out.push_back({Tok::End, "", line, col});
				return out;
			}
			char c = src_[pos_];
			auto emit = [&](Tok k, std::size_t len) {
				out.push_back({k, std::string(src_.substr(pos_, len)), line, col});
				advance(len);
			};
			if (c >= 'a' && c <= 'z') {
				std::size_t end = pos_;
				while (end < src_.size() && is_ident_char(src_[end]))
					++end;
				std::string word(src_.substr(pos_, end - pos_));
				emit(word == "bot" ? Tok::Bot : Tok::Ident, end - pos_);
				continue;
			}
			if ((c >= 'A' && c <= 'Z') || c == '_' || (c >= '0' && c <= '9'))
				throw SyntaxError("identifiers must start with a lowercase letter", line, col);
			switch (c) {
			case '(': emit(Tok::LParen, 1); continue;
			case ')': emit(Tok::RParen, 1); continue;
			case '~': emit(Tok::SNeg, 1); continue;
			case '!': emit(Tok::Neg, 1); continue;
			case '&': emit(Tok::And, 1); continue;
			case '|': emit(Tok::Or, 1); continue;
			default: break;
			}
			if (starts_with("[]")) {
				emit(Tok::Box, 2);
				continue;
			}
			if (starts_with("<>")) {
				emit(Tok::Dia, 2);
				continue;
			}
			if (starts_with("->")) {
				emit(Tok::Imp, 2);
				continue;
			}
			if (starts_with("<->")) {
				emit(Tok::Iff, 3);
				continue;
			}
			if (starts_with("<=>")) {
				emit(Tok::SIff, 3);
				continue;
			}
			throw SyntaxError(std::string("unexpected character '") + c + "'", line, col);
		}
	}

private:
	static bool is_ident_char(char c) {
		return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
	}
	bool starts_with(std::string_view s) const { return src_.substr(pos_, s.size()) == s; }
	void advance(std::size_t n) {
		for (std::size_t i = 0; i < n; ++i) {
			if (src_[pos_] == '\n') {
				++line_;
				col_ = 1;
			} else {
				++col_;
			}
			++pos_;
		}
	}
	void skip_space() {
		while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t' || src_[pos_] == '\n' || src_[pos_] == '\r'))
			advance(1);
	}

	std::string_view src_;
	std::size_t pos_ = 0;
	std::size_t line_ = 1;
	std::size_t col_ = 1;
};

class Parser {
public:
	explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

	Formula run() {
		Formula f = strong_equiv();
		if (peek().kind != Tok::End)
			fail("unexpected " + describe(peek()) + " after complete formula");
		return f;
	}

private:
	const Token &peek() const { return toks_[pos_]; }
	const Token &next() { return toks_[pos_++]; }
	bool accept(Tok k) {
		if (peek().kind != k)
			return false;
		++pos_;
		return true;
	}
	[[noreturn]] void fail(const std::string &msg) const { throw SyntaxError(msg, peek().line, peek().column); }

	Formula strong_equiv() {
		Formula f = equiv();
		while (accept(Tok::SIff))
			f = Formula::siff(f, equiv());
		return f;
	}
	Formula equiv() {
		Formula f = implication();
		while (accept(Tok::Iff))
			f = Formula::iff(f, implication());
		return f;
	}
	Formula implication() {
		Formula f = disjunction();
		if (accept(Tok::Imp))
			return Formula::imp(f, implication());
		return f;
	}
	Formula disjunction() {
		Formula f = conjunction();
		while (accept(Tok::Or))
			f = Formula::disj(f, conjunction());
		return f;
	}
	Formula conjunction() {
		Formula f = unary();
		while (accept(Tok::And))
			f = Formula::conj(f, unary());
		return f;
	}
	Formula unary() {
		switch (peek().kind) {
		case Tok::SNeg: next(); return Formula::sneg(unary());
		case Tok::Neg: next(); return Formula::neg(unary());
		case Tok::Box: next(); return Formula::box(unary());
		case Tok::Dia: next(); return Formula::dia(unary());
		default: return atom();
		}
	}
	Formula atom() {
		const Token &t = peek();
		switch (t.kind) {
		case Tok::Ident: next(); return Formula::var(t.text);
		case Tok::Bot: next(); return Formula::bot();
		case Tok::LParen: {
			next();
			Formula f = strong_equiv();
			if (!accept(Tok::RParen))
				fail("expected ')' but found " + describe(peek()));
			return f;
		}
		default: fail("expected a formula but found " + describe(t));
		}
	}

	std::vector<Token> toks_;
	std::size_t pos_ = 0;
};

} // namespace

Formula parse(std::string_view text) { return Parser(Lexer(text).run()).run(); }

} // namespace twistlab
