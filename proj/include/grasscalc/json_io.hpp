#pragma once

#include "grasscalc/graded_ring.hpp"
#include "grasscalc/grassmann.hpp"
#include "grasscalc/partition.hpp"

#include <json.hpp>

namespace grasscalc {

// Schemas (all emitted deterministically: object keys sorted, terms in
// canonical order, rationals in canonical "p/q" form):
//   Partition      [3,1]                  empty partition is []
//   GradedRing     {"truncation": 2, "generators": [{"name": "c1", "degree": 1}, ...]}
//   GradedElement  [{"monomial": {"c1": 2}, "coeff": "1/4"}, ...]
//   FiberedClass   [{"mu": [1], "coeff": <GradedElement>}, ...]
//   GrassSetup     {"n": 2, "r": 2, "d": 1}
// Readers throw std::invalid_argument on schema violations.

nlohmann::json partition_to_json(const Partition& lam);
Partition partition_from_json(const nlohmann::json& j);

nlohmann::json ring_to_json(const RingPtr& ring);
RingPtr ring_from_json(const nlohmann::json& j);

nlohmann::json element_to_json(const GradedElement& e);
GradedElement element_from_json(const RingPtr& ring, const nlohmann::json& j);

nlohmann::json fibered_to_json(const FiberedClass& F);
FiberedClass fibered_from_json(const RingPtr& ring, unsigned quot_rank,
                               const nlohmann::json& j);

nlohmann::json setup_to_json(const GrassSetup& setup);
GrassSetup setup_from_json(const nlohmann::json& j);

// Rational from a JSON string ("p/q") or integer.
Rational rational_from_json(const nlohmann::json& j);

// Nonnegative integer regardless of the JSON number's signedness;
// throws std::invalid_argument naming `what` otherwise.
unsigned json_to_unsigned(const nlohmann::json& j, const char* what);

// Canonical dump used by every CLI/report surface: 2-space indent plus
// trailing newline, so identical inputs yield byte-identical files.
std::string dump_stable(const nlohmann::json& j);

}  // namespace grasscalc
