#pragma once

#include "schurweyl/spectral.hpp"
#include "schurweyl/tensor_state.hpp"

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <string>

namespace schurweyl {

/// {"d": d, "n": N, "amplitudes": [[re, im], ...]} in flat-index order.
nlohmann::json state_to_json(const TensorState &psi);
/// Throws ParseError on a malformed document or an amplitude count other than d^N.
TensorState state_from_json(const nlohmann::json &j);

void write_state(std::ostream &out, const TensorState &psi);
TensorState read_state(std::istream &in);

/// Summary of a maximization run. The maximizer itself is included only when
/// include_state is set.
nlohmann::json report_to_json(const MaximizationReport &report, bool include_state = false);

/// Exact value as "p/q" plus its double.
nlohmann::json rational_to_json(const Rational &r);

} // namespace schurweyl
