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

// JSON documents for structures, witnesses and reports.
//
// Shape problems raise InputError; well-formed documents whose tables break
// the algebraic laws raise StructureError.

#ifndef TWISTLAB_IO_HPP
#define TWISTLAB_IO_HPP

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "twistlab/companions.hpp"
#include "twistlab/heyting.hpp"
#include "twistlab/kripke.hpp"
#include "twistlab/openpairs.hpp"
#include "twistlab/order.hpp"
#include "twistlab/semantics.hpp"
#include "twistlab/tba.hpp"
#include "twistlab/twist.hpp"

namespace twistlab {

using Json = nlohmann::json;

Json read_json_file(const std::filesystem::path &path);

Json to_json(ElementSet s);
ElementSet element_set_from_json(const Json &j, std::size_t size);
Json to_json(const Violation &v);

Json to_json(const FinitePoset &p);
/// {"type":"poset","size":n,"le":[[i,j],...],"closure":bool?}
FinitePoset poset_from_json(const Json &j);
std::vector<RelationPair> poset_relation_from_json(const Json &j, std::size_t &size, bool &closure);

Json to_json(const FiniteHeytingAlgebra &h);
/// Shape checks only; see validate_heyting for the laws.
HeytingTables heyting_tables_from_json(const Json &j);
std::vector<std::string> labels_from_json(const Json &j, std::size_t size);
FiniteHeytingAlgebra heyting_from_json(const Json &j);

Json to_json(const FiniteTBA &b);
std::vector<Elem> box_from_json(const Json &j, std::size_t size);
FiniteTBA tba_from_json(const Json &j);

/// Inline base unless base_ref is given, in which case "base" holds it.
Json to_json(const TwistStructure &t, const std::optional<std::string> &base_ref = std::nullopt);
/// "base" is a path (relative to dir) or an inline heyting/tba document.
TwistStructure twist_from_json(const Json &j, const std::filesystem::path &dir);

/// A structure document of any type with an optional "formulas" array.
struct Document {
	std::string type;
	Json json;
	std::filesystem::path dir;
	std::vector<Formula> formulas;
};

Document load_document(const std::filesystem::path &path);

/// Owns whatever a Structure view points into.
struct LoadedStructure {
	std::shared_ptr<const FiniteHeytingAlgebra> heyting;
	std::shared_ptr<const FiniteTBA> tba;
	std::shared_ptr<const TwistStructure> twist;
	Structure view() const;
};

/// Heyting, tba or twist documents; a poset yields its up-set algebra.
LoadedStructure load_structure(const Document &doc);

Json value_to_json(const Value &v);
/// {"valuation": {"p": [i,j] | i}, "value": ...} plus label renderings.
Json witness_to_json(const Structure &s, const ValidityResult &r);

/// {"frame": poset, "valuation": {"p": [worlds]}, "world": i}
Json to_json(const KripkeRefutation &r);

Json to_json(const OpenPairsReport &r);
Json to_json(const TwTopReport &r, bool with_entries);
Json to_json(const CompanionInstance &c);
Json to_json(const KleeneScanReport &r);
Json to_json(const KleeneDemoReport &r);
Json to_json(const CompanionSweepReport &r);

} // namespace twistlab

#endif
