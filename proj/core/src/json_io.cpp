#include "swapkit/json_io.hpp"

#include <fstream>

namespace swapkit {

Json to_json(const ComplexMatrix& m) {
    Json entries = Json::array();
    for (int j = 0; j < m.dim(); ++j) {
        Json row = Json::array();
        for (int k = 0; k < m.dim(); ++k)
            row.push_back({m(j, k).real(), m(j, k).imag()});
        entries.push_back(std::move(row));
    }
    return Json{{"dim", m.dim()}, {"entries", std::move(entries)}};
}

ComplexMatrix matrix_from_json(const Json& j) {
    const int d = j.at("dim").get<int>();
    const auto& entries = j.at("entries");
    if (!entries.is_array() || static_cast<int>(entries.size()) != d)
        throw StructureError("matrix JSON: entries must be a d×d array");
    ComplexMatrix m(d);
    for (int r = 0; r < d; ++r) {
        const auto& row = entries.at(static_cast<std::size_t>(r));
        if (!row.is_array() || static_cast<int>(row.size()) != d)
            throw StructureError("matrix JSON: entries must be a d×d array");
        for (int c = 0; c < d; ++c) {
            const auto& pair = row.at(static_cast<std::size_t>(c));
            if (!pair.is_array() || pair.size() != 2)
                throw StructureError("matrix JSON: each entry must be [re, im]");
            m(r, c) = Cx(pair.at(0).get<double>(), pair.at(1).get<double>());
        }
    }
    return m;
}

Json to_json(const ExponentMatrix& m) {
    Json exps = Json::array();
    for (int j = 0; j < m.dim(); ++j) {
        Json row = Json::array();
        for (int k = 0; k < m.dim(); ++k) row.push_back(m.at(j, k));
        exps.push_back(std::move(row));
    }
    return Json{{"dim", m.dim()}, {"exponents", std::move(exps)}};
}

ExponentMatrix exponent_matrix_from_json(const Json& j) {
    const int d = j.at("dim").get<int>();
    const auto& rows = j.at("exponents");
    std::vector<int> exps;
    exps.reserve(static_cast<std::size_t>(d) * static_cast<std::size_t>(d));
    if (!rows.is_array() || static_cast<int>(rows.size()) != d)
        throw StructureError("exponent matrix JSON: exponents must be a d×d array");
    for (const auto& row : rows) {
        if (!row.is_array() || static_cast<int>(row.size()) != d)
            throw StructureError("exponent matrix JSON: exponents must be a d×d array");
        for (const auto& e : row) exps.push_back(e.get<int>());
    }
    return ExponentMatrix(d, std::move(exps));
}

Json to_json(const DiagonalSpectrum& s) { return Json(s.values()); }

DiagonalSpectrum spectrum_from_json(const Json& j) {
    return DiagonalSpectrum::from_schmidt(j.get<std::vector<double>>());
}

Json to_json(const BipartiteState& s) {
    Json j = to_json(s.coeff());
    j["role"] = "state";
    return j;
}

BipartiteState state_from_json(const Json& j) {
    if (j.value("role", "") != "state")
        throw StructureError("state JSON must carry role=state");
    return BipartiteState(matrix_from_json(j));
}

Json to_json(const MeasurementBasis& b) {
    Json ops = Json::array();
    for (const auto& op : b.operators()) ops.push_back(to_json(op));
    return Json{{"dim", b.dim()}, {"operators", std::move(ops)}};
}

MeasurementBasis basis_from_json(const Json& j) {
    const int d = j.at("dim").get<int>();
    std::vector<ComplexMatrix> ops;
    for (const auto& op : j.at("operators")) ops.push_back(matrix_from_json(op));
    return MeasurementBasis(d, std::move(ops));
}

Json to_json(const SwapOutcome& o) {
    Json j{{"index", o.index},
           {"probability", o.probability},
           {"raw_coeff", to_json(o.raw_coeff)}};
    if (o.output) j["output"] = to_json(*o.output);
    if (o.schmidt) j["schmidt"] = to_json(*o.schmidt);
    return j;
}

Json to_json(const SwapReport& r) {
    Json outcomes = Json::array();
    for (const auto& o : r.outcomes) outcomes.push_back(to_json(o));
    Json j{{"dim", r.dim},
           {"outcomes", std::move(outcomes)},
           {"uniform_probs", r.uniform_probs},
           {"lu_deterministic", r.lu_deterministic},
           {"g_factorization_residual", r.g_factorization_residual},
           {"has_negligible_outcomes", r.has_negligible_outcomes},
           {"degeneracy_warning", r.degeneracy_warning}};
    if (r.common_schmidt) j["common_schmidt"] = to_json(*r.common_schmidt);
    return j;
}

namespace {

const char* branch_name(PCVerdict::Branch b) {
    switch (b) {
        case PCVerdict::Branch::direct: return "direct";
        case PCVerdict::Branch::conjugate: return "conjugate";
        case PCVerdict::Branch::none: return "none";
    }
    return "none";
}

}  // namespace

Json to_json(const PCVerdict& v) {
    Json j{{"equivalent", v.equivalent}, {"branch", branch_name(v.branch)}};
    if (v.witness) {
        j["witness"] = Json{{"left_phases", v.witness->first.phases()},
                            {"right_phases", v.witness->second.phases()}};
    }
    return j;
}

Json to_json(const CensusReport& r, bool include_representatives) {
    Json j{{"dim", r.dim},
           {"orbit_size", r.orbit_size},
           {"class_count", r.class_count},
           {"class_size", r.class_size},
           {"totient", r.totient},
           {"epsilon", r.epsilon}};
    if (include_representatives) {
        Json reps = Json::array();
        for (const auto& rep : r.representatives) reps.push_back(to_json(rep));
        j["representatives"] = std::move(reps);
    }
    return j;
}

Json to_json(const ChainResult& r) {
    return Json{{"final", to_json(r.final)},
                {"per_node_g", r.per_node_g},
                {"order", r.order.str()},
                {"final_g_concurrence", r.final.g_concurrence()}};
}

Json to_json(const MixedOutcome& o) {
    return Json{{"index", o.index}, {"spectrum", o.spectrum}};
}

Json to_json(const MixedLuReport& r) {
    Json j{{"spectra_equal", r.spectra_equal},
           {"diagonal_witnesses_valid", r.diagonal_witnesses_valid},
           {"diagonal_orbit_basis", r.diagonal_orbit_basis}};
    if (r.witness_failure) {
        j["witness_failure"] = Json{
            {"outcome_index", r.witness_failure->outcome_index},
            {"branch", branch_name(r.witness_failure->branch)},
            {"reconstruction_residual", r.witness_failure->reconstruction_residual}};
    }
    return j;
}

Json to_json(const OrderIndependenceReport& r) {
    Json j{{"holds", r.holds}, {"max_discrepancy", r.max_discrepancy}};
    if (r.witness) {
        Json links = Json::array();
        for (const auto& l : r.witness->links) links.push_back(to_json(l));
        j["witness"] = Json{{"links", std::move(links)},
                            {"order_a", r.witness->order_a.str()},
                            {"order_b", r.witness->order_b.str()},
                            {"final_a", to_json(r.witness->final_a)},
                            {"final_b", to_json(r.witness->final_b)},
                            {"discrepancy", r.witness->discrepancy}};
    }
    return j;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open file: " + path);
    Json j;
    in >> j;
    return j;
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write file: " + path);
    out << j.dump(2) << "\n";
}

}  // namespace swapkit
