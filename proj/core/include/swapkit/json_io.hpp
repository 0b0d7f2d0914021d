#pragma once

#include <string>

#include <json.hpp>

#include "swapkit/chain.hpp"
#include "swapkit/measurement.hpp"
#include "swapkit/noise.hpp"
#include "swapkit/pc_class.hpp"
#include "swapkit/states.hpp"
#include "swapkit/swap.hpp"

namespace swapkit {

using Json = nlohmann::json;

// Matrix exchange format: {"dim": d, "entries": [[[re,im], ...], ...]} row-major.
Json to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

// {"dim": d, "exponents": [[int,...], ...]}
Json to_json(const ExponentMatrix& m);
ExponentMatrix exponent_matrix_from_json(const Json& j);

// Spectra serialize as plain arrays of Schmidt coefficients.
Json to_json(const DiagonalSpectrum& s);
DiagonalSpectrum spectrum_from_json(const Json& j);

// The matrix format plus {"role": "state"}.
Json to_json(const BipartiteState& s);
BipartiteState state_from_json(const Json& j);

// {"dim": d, "operators": [matrix, ...]} with d² stored operators E_i*.
Json to_json(const MeasurementBasis& b);
MeasurementBasis basis_from_json(const Json& j);

Json to_json(const SwapOutcome& o);
Json to_json(const SwapReport& r);
Json to_json(const PCVerdict& v);
Json to_json(const CensusReport& r, bool include_representatives);
Json to_json(const ChainResult& r);
Json to_json(const MixedOutcome& o);
Json to_json(const MixedLuReport& r);
Json to_json(const OrderIndependenceReport& r);

Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace swapkit
