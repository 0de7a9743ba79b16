#pragma once

#include <json.hpp>

#include "curvature2.hpp"
#include "invariants.hpp"
#include "moduli.hpp"
#include "reduction.hpp"

namespace connmod {

using Json = nlohmann::ordered_json;

// Rationals are strings "p/q"; integers are accepted on input.
Json to_json(const Rat &x);
Rat rat_from_json(const Json &j);

// [{"idx": [e_1, ..., e_n], "c": "p/q"}, ...] in graded-lex order.
Json to_json(const TruncatedSeries &s);
TruncatedSeries series_from_json(const Json &j, int n, int order);

// {"n", "signature": ["contra", "cov", ...], "entries": [...]}, row-major.
Json to_json(const DenseTensor &t);
DenseTensor tensor_from_json(const Json &j);

// {"n", "r", "symmetric", "gamma": {"k,i,j": series}}; absent keys are zero.
Json to_json(const ConnectionJet &jet);
ConnectionJet jet_from_json(const Json &j);

// {"n", "order", "symmetric", "tensors": [tensor, ...]}
Json to_json(const NormalTensorTuple &t);
NormalTensorTuple tuple_from_json(const Json &j);

// {"n", "order", "components": [series, ...]}
Json to_json(const DiffeoJet &tau);
DiffeoJet diffeo_from_json(const Json &j);

Json to_json(const RatMatrix &m);
Json to_json(const DegreeProfile &p);
Json to_json(const ScalarInvariantResult &r);
Json to_json(const NaturalTensorReport &r);
Json to_json(const PairIsotropy &p);
Json to_json(const ModuliReport &r);

// Parses text, mapping syntax errors to ParseError.
Json parse_json(const std::string &text);

} // namespace connmod
