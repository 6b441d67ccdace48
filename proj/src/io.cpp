#include "hopfint/io.hpp"

#include <cstdint>
#include <cstdio>
#include <map>
#include <tuple>

namespace hopfint {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

int require_int(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw SchemaError(std::string("missing or non-integer field '") + key + "'");
    return j[key].get<int>();
}

const json& require_array(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array())
        throw SchemaError(std::string("missing or non-array field '") + key + "'");
    return j[key];
}

CycScalar scalar_from_json_string(int conductor, const json& j) {
    if (!j.is_string()) throw SchemaError("scalar entries must be strings");
    try {
        return parse_scalar(conductor, j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw SchemaError(e.what());
    }
}

Vec vec_from_json(const json& j, int dim, int conductor, const char* what) {
    if (!j.is_array() || static_cast<int>(j.size()) != dim)
        throw SchemaError(std::string(what) + ": expected an array of length " + std::to_string(dim));
    Vec v = zero_vec(dim, conductor);
    for (int i = 0; i < dim; ++i) v[i] = scalar_from_json_string(conductor, j[i]);
    return v;
}

ordered_json vec_to_json(const Vec& v) {
    ordered_json out = ordered_json::array();
    for (const auto& c : v) out.push_back(scalar_to_string(c));
    return out;
}

}  // namespace

nlohmann::ordered_json cyc_to_json(const CycScalar& a) {
    ordered_json j;
    j["conductor"] = a.conductor();
    ordered_json coeffs = ordered_json::array();
    for (const auto& c : a.coeffs()) coeffs.push_back(rational_to_string(c));
    j["coeffs"] = std::move(coeffs);
    return j;
}

CycScalar cyc_from_json(const nlohmann::json& j) {
    const int conductor = require_int(j, "conductor");
    if (conductor < 1) throw SchemaError("conductor must be positive");
    const json& coeffs = require_array(j, "coeffs");
    std::vector<Rational> c;
    for (const auto& entry : coeffs) {
        if (!entry.is_string()) throw SchemaError("coeffs entries must be strings");
        try {
            c.push_back(parse_rational(entry.get<std::string>()));
        } catch (const std::invalid_argument& e) {
            throw SchemaError(e.what());
        }
    }
    if (static_cast<int>(c.size()) != euler_phi(conductor))
        throw SchemaError("coeffs length must be deg Phi_n");
    return CycScalar::from_coeffs(conductor, std::move(c));
}

nlohmann::ordered_json hopf_to_json(const HopfAlgebra& h, const std::vector<std::string>& labels) {
    const int n = h.dim();
    ordered_json j;
    j["dim"] = n;
    j["conductor"] = h.conductor();
    j["basis"] = labels.empty() ? default_basis_labels(n) : labels;
    j["unit"] = vec_to_json(h.unit());
    j["counit"] = vec_to_json(h.counit().coeffs);
    ordered_json mult = ordered_json::array();
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            for (const auto& term : h.algebra().basis_product(i, k))
                mult.push_back(ordered_json::array(
                    {i, k, term.index, scalar_to_string(term.coeff)}));
    j["mult"] = std::move(mult);
    ordered_json delta = ordered_json::array();
    for (int i = 0; i < n; ++i)
        for (const auto& term : h.delta_basis(i))
            delta.push_back(ordered_json::array(
                {i, term.first, term.second, scalar_to_string(term.coeff)}));
    j["delta"] = std::move(delta);
    ordered_json antipode = ordered_json::array();
    for (int r = 0; r < n; ++r) {
        ordered_json row = ordered_json::array();
        for (int c = 0; c < n; ++c) row.push_back(scalar_to_string(h.antipode_matrix().at(r, c)));
        antipode.push_back(std::move(row));
    }
    j["antipode"] = std::move(antipode);
    return j;
}

LoadedHopf hopf_from_json(const nlohmann::json& j) {
    const int dim = require_int(j, "dim");
    const int conductor = require_int(j, "conductor");
    if (dim < 1 || conductor < 1) throw SchemaError("dim and conductor must be positive");

    std::vector<std::string> labels = default_basis_labels(dim);
    if (j.contains("basis")) {
        const json& b = require_array(j, "basis");
        if (static_cast<int>(b.size()) != dim) throw SchemaError("basis labels must match dim");
        labels.clear();
        for (const auto& entry : b) {
            if (!entry.is_string()) throw SchemaError("basis labels must be strings");
            labels.push_back(entry.get<std::string>());
        }
    }

    const Vec unit = vec_from_json(require_array(j, "unit"), dim, conductor, "unit");
    Functional counit;
    counit.coeffs = vec_from_json(require_array(j, "counit"), dim, conductor, "counit");

    // Accumulate triples densely: canonical ordering on re-export.
    std::vector<Vec> products(static_cast<std::size_t>(dim) * dim, zero_vec(dim, conductor));
    for (const auto& triple : require_array(j, "mult")) {
        if (!triple.is_array() || triple.size() != 4) throw SchemaError("mult triples must be [i,j,k,scalar]");
        const int a = triple[0].get<int>(), b = triple[1].get<int>(), c = triple[2].get<int>();
        if (a < 0 || a >= dim || b < 0 || b >= dim || c < 0 || c >= dim)
            throw SchemaError("mult index out of range");
        products[static_cast<std::size_t>(a) * dim + b][c] += scalar_from_json_string(conductor, triple[3]);
    }
    std::vector<SparseVec> sparse_products;
    sparse_products.reserve(products.size());
    for (const auto& p : products) sparse_products.push_back(to_sparse(p));

    std::vector<std::map<std::pair<int, int>, CycScalar>> delta_acc(dim);
    for (const auto& triple : require_array(j, "delta")) {
        if (!triple.is_array() || triple.size() != 4) throw SchemaError("delta triples must be [i,j,k,scalar]");
        const int a = triple[0].get<int>(), b = triple[1].get<int>(), c = triple[2].get<int>();
        if (a < 0 || a >= dim || b < 0 || b >= dim || c < 0 || c >= dim)
            throw SchemaError("delta index out of range");
        const CycScalar s = scalar_from_json_string(conductor, triple[3]);
        auto key = std::make_pair(b, c);
        auto it = delta_acc[a].find(key);
        if (it == delta_acc[a].end())
            delta_acc[a].emplace(key, s);
        else
            it->second += s;
    }
    std::vector<SparseTensor> delta(dim);
    for (int i = 0; i < dim; ++i)
        for (const auto& [key, coeff] : delta_acc[i])
            if (!coeff.is_zero()) delta[i].push_back({key.first, key.second, coeff});

    const json& anti = require_array(j, "antipode");
    if (static_cast<int>(anti.size()) != dim) throw SchemaError("antipode must be a dim x dim matrix");
    Matrix antipode(dim, dim, conductor);
    for (int r = 0; r < dim; ++r) {
        if (!anti[r].is_array() || static_cast<int>(anti[r].size()) != dim)
            throw SchemaError("antipode must be a dim x dim matrix");
        for (int c = 0; c < dim; ++c) antipode.at(r, c) = scalar_from_json_string(conductor, anti[r][c]);
    }

    try {
        auto algebra = FinDimAlgebra::from_sparse(dim, conductor, std::move(sparse_products), unit);
        auto hopf = std::make_shared<HopfAlgebra>(HopfAlgebra::assemble(
            std::move(algebra), std::move(delta), std::move(counit), std::move(antipode)));
        return {std::move(hopf), std::move(labels)};
    } catch (const std::invalid_argument& e) {
        throw SchemaError(e.what());
    }
}

nlohmann::ordered_json subspace_to_json(const Subspace& s) {
    ordered_json j;
    j["ambient_dim"] = s.ambient_dim();
    ordered_json basis = ordered_json::array();
    for (int i = 0; i < s.dim(); ++i) basis.push_back(vec_to_json(s.basis_vector(i)));
    j["basis"] = std::move(basis);
    return j;
}

Subspace subspace_from_json(const nlohmann::json& j, int conductor) {
    const int ambient = require_int(j, "ambient_dim");
    if (ambient < 1) throw SchemaError("ambient_dim must be positive");
    std::vector<Vec> rows;
    for (const auto& row : require_array(j, "basis"))
        rows.push_back(vec_from_json(row, ambient, conductor, "subspace basis row"));
    return Subspace::from_spanning(rows, ambient, conductor);
}

nlohmann::ordered_json functional_to_json(const Functional& f) {
    ordered_json j;
    j["coeffs"] = vec_to_json(f.coeffs);
    return j;
}

Functional functional_from_json(const nlohmann::json& j, int conductor) {
    const json& coeffs = require_array(j, "coeffs");
    Functional f;
    f.coeffs = vec_from_json(coeffs, static_cast<int>(coeffs.size()), conductor, "coeffs");
    return f;
}

std::vector<std::string> default_basis_labels(int dim) {
    std::vector<std::string> labels;
    labels.reserve(dim);
    for (int i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i));
    return labels;
}

std::string digest_hex(const std::string& canonical) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : canonical) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

}  // namespace hopfint
