#pragma once

// JSON encodings of the library's value types (double precision).
//
//   bicomplex  {"z1": [re, im], "z2": [re, im]}   (input may use {"h1", "h2"})
//   ket        {"coeffs": [<bicomplex>, ...]}
//   space      {"dim": N, "w1": [...], "w2": [...]}  (weights default to ones)
//   system     {"space": <space>, "kets": [<ket>, ...]}
//   sequence   {"values": [<bicomplex>, ...], "tail": "zero"}
//
// Decoders throw ParseError on malformed or non-finite input.

#include "json.hpp"

#include "bihilbert/l2.hpp"

namespace bihilbert::io {

using Json = nlohmann::json;

Json to_json(const Bicomplexd& w);
Json to_json(const IdempotentPair<double>& p);
Json to_json(const Ketd& psi);
Json to_json(const ScalarProductSpec<double>& spec);
Json to_json(const OrthonormalSystem<double>& sys);
Json to_json(const BicomplexSequence<double>& s);

Bicomplexd bicomplex_from_json(const Json& j);
Ketd ket_from_json(const Json& j);
ScalarProductSpec<double> space_from_json(const Json& j);
/// Member kets must match the space dimension; orthonormality is not checked here.
OrthonormalSystem<double> system_from_json(const Json& j);
BicomplexSequence<double> sequence_from_json(const Json& j);

}  // namespace bihilbert::io
