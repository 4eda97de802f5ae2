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

#ifndef TWISTLAB_ERRORS_HPP
#define TWISTLAB_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace twistlab {

/// Malformed formula text. Carries a 1-based line/column.
class SyntaxError : public std::runtime_error {
public:
	SyntaxError(const std::string &msg, std::size_t line, std::size_t column)
	    : std::runtime_error(msg + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
	      line_(line), column_(column) {}

	std::size_t line() const noexcept { return line_; }
	std::size_t column() const noexcept { return column_; }

private:
	std::size_t line_;
	std::size_t column_;
};

/// A formula uses a connective the target structure or translation cannot interpret.
class LanguageError : public std::invalid_argument {
public:
	using std::invalid_argument::invalid_argument;
};

/// An input structure or subset fails the laws required by an operation.
class StructureError : public std::invalid_argument {
public:
	using std::invalid_argument::invalid_argument;
};

/// An exhaustive search would exceed the configured budget.
class ResourceError : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

/// Unreadable file, malformed JSON, or a document of the wrong shape.
class InputError : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

/// A property that must hold by construction did not. Always a bug.
class InvariantViolation : public std::logic_error {
public:
	using std::logic_error::logic_error;
};

} // namespace twistlab

#endif
