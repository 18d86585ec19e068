#include "ncwitt/json_io.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "ncwitt/error.hpp"

namespace ncwitt {

json terms_to_json(const FreePoly& f) {
    json arr = json::array();
    for (const auto& [word, coeff] : f.terms()) {
        arr.push_back({{"word", word.to_string(f.generator_set())},
                       {"coeff", coeff.get_str()}});
    }
    return arr;
}

json terms_to_json(const NecklacePoly& f) {
    return terms_to_json(f.representative());
}

json ghost_to_json(const GhostVector& g) {
    json arr = json::array();
    for (const NecklacePoly& coord : g.coords()) {
        arr.push_back({{"text", format(coord)}, {"terms", terms_to_json(coord)}});
    }
    return arr;
}

json modulus_to_json(const CoefficientRing& ring) {
    return ring.is_integers() ? json("int") : json(ring.modulus().get_str());
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) {
            row.push_back(m.at(i, j).get_str());
        }
        rows.push_back(std::move(row));
    }
    return {{"dimension", m.dim()},
            {"modulus", modulus_to_json(m.ring())},
            {"entries", std::move(rows)}};
}

mpz_class mpz_from_json(const nlohmann::json& v) {
    if (v.is_string()) {
        try {
            return mpz_class(v.get<std::string>());
        } catch (const std::invalid_argument&) {
            throw DomainError("not a decimal integer: \"" + v.get<std::string>() + "\"");
        }
    }
    if (v.is_number_integer()) {
        return mpz_class(std::to_string(v.get<long long>()));
    }
    if (v.is_number_unsigned()) {
        return mpz_class(std::to_string(v.get<unsigned long long>()));
    }
    throw DomainError("expected an integer or a decimal string, got: " + v.dump());
}

MatrixAssignment assignment_from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) {
        throw DomainError("assignment must be a JSON object");
    }
    if (!doc.contains("dimension") || !doc.contains("modulus") || !doc.contains("assign")) {
        throw DomainError("assignment needs \"dimension\", \"modulus\" and \"assign\"");
    }
    const mpz_class dim_z = mpz_from_json(doc.at("dimension"));
    if (dim_z < 1 || !dim_z.fits_ulong_p()) {
        throw DomainError("dimension must be a positive integer");
    }
    const std::size_t dim = static_cast<std::size_t>(dim_z.get_ui());

    const nlohmann::json& mod = doc.at("modulus");
    const CoefficientRing ring = (mod.is_string() && mod.get<std::string>() == "int")
                                     ? CoefficientRing::integers()
                                     : CoefficientRing::modular(mpz_from_json(mod));

    const nlohmann::json& assign = doc.at("assign");
    if (!assign.is_object() || assign.empty()) {
        throw DomainError("\"assign\" must map generator names to matrices");
    }
    std::vector<std::string> names;
    for (auto it = assign.begin(); it != assign.end(); ++it) {
        names.push_back(it.key());
    }
    std::sort(names.begin(), names.end());

    std::vector<Matrix> matrices;
    matrices.reserve(names.size());
    for (const std::string& name : names) {
        const nlohmann::json& rows = assign.at(name);
        if (!rows.is_array() || rows.size() != dim) {
            throw DomainError("matrix for " + name + " must have " + std::to_string(dim) +
                              " rows");
        }
        std::vector<std::vector<mpz_class>> entries(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            if (!rows[i].is_array() || rows[i].size() != dim) {
                throw DomainError("matrix for " + name + " must be " + std::to_string(dim) +
                                  "x" + std::to_string(dim));
            }
            for (std::size_t j = 0; j < dim; ++j) {
                entries[i].push_back(mpz_from_json(rows[i][j]));
            }
        }
        matrices.push_back(Matrix::from_rows(ring, entries));
    }
    return MatrixAssignment(make_generators(names), std::move(matrices));
}

} // namespace ncwitt
