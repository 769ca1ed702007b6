#include "qfid/states.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qfid {

BlochVector::BlochVector(int dim, std::vector<double> coords)
    : dim_(dim), coords_(std::move(coords)) {
    if (dim_ < 2) throw InvalidDimError(dim_, "Bloch vector needs system dimension >= 2");
    const size_t expected = static_cast<size_t>(dim_) * dim_ - 1;
    if (coords_.size() != expected)
        throw InvalidDimError(dim_, "Bloch vector for dimension " + std::to_string(dim_) +
                                        " needs " + std::to_string(expected) + " coordinates, got " +
                                        std::to_string(coords_.size()));
    const double n = norm();
    if (!(n <= 1.0 + tolerances::kBlochNormSlack)) throw NormExceededError(n);
}

double BlochVector::norm() const {
    double s = 0.0;
    for (double c : coords_) s += c * c;
    return std::sqrt(s);
}

double BlochVector::dot(const BlochVector& other) const {
    if (dim_ != other.dim_) throw DimMismatchError(dim_, other.dim_);
    double s = 0.0;
    for (size_t i = 0; i < coords_.size(); ++i) s += coords_[i] * other.coords_[i];
    return s;
}

BlochVector BlochVector::scaled(double factor) const {
    std::vector<double> c(coords_);
    for (double& x : c) x *= factor;
    return {dim_, std::move(c)};
}

DensityMatrix DensityMatrix::from_matrix(ComplexMatrix m) {
    const double asym = max_asymmetry(m);
    if (asym > tolerances::kHermiticity) throw NotHermitianError(asym);
    const Complex tr = trace(m);
    if (std::abs(tr - Complex{1.0, 0.0}) > tolerances::kUnitTrace) throw TraceError(tr.real());
    EigenDecomposition d = hermitian_eig(m);
    if (d.eigenvalues.front() < tolerances::kEigNegativeWindow)
        throw NotPsdError(d.eigenvalues.front());
    return DensityMatrix(std::move(m));
}

GeneratorBasis GeneratorBasis::make(int dim) {
    if (dim < 2) throw InvalidDimError(dim, "SU(N) generator basis needs N >= 2");
    std::vector<ComplexMatrix> gens;
    gens.reserve(static_cast<size_t>(dim) * dim - 1);
    for (int j = 0; j < dim; ++j) {
        for (int k = j + 1; k < dim; ++k) {
            ComplexMatrix g(dim);
            g.at(j, k) = 1.0;
            g.at(k, j) = 1.0;
            gens.push_back(std::move(g));
        }
    }
    for (int j = 0; j < dim; ++j) {
        for (int k = j + 1; k < dim; ++k) {
            ComplexMatrix g(dim);
            g.at(j, k) = Complex(0.0, -1.0);
            g.at(k, j) = Complex(0.0, 1.0);
            gens.push_back(std::move(g));
        }
    }
    for (int l = 1; l < dim; ++l) {
        ComplexMatrix g(dim);
        const double scale = std::sqrt(2.0 / (static_cast<double>(l) * (l + 1)));
        for (int i = 0; i < l; ++i) g.at(i, i) = scale;
        g.at(l, l) = -scale * l;
        gens.push_back(std::move(g));
    }
    return GeneratorBasis(dim, std::move(gens));
}

GeneratorBasis generator_basis(int dim) { return GeneratorBasis::make(dim); }

DensityMatrix qubit_from_bloch(const BlochVector& n) {
    if (n.dim() != 2) throw DimMismatchError(n.dim(), 2);
    const auto& c = n.coords();
    ComplexMatrix m(2);
    m.at(0, 0) = 0.5 * (1.0 + c[2]);
    m.at(1, 1) = 0.5 * (1.0 - c[2]);
    m.at(0, 1) = 0.5 * Complex(c[0], -c[1]);
    m.at(1, 0) = 0.5 * Complex(c[0], c[1]);
    return DensityMatrix::from_matrix(std::move(m));
}

DensityMatrix qunit_from_bloch(const BlochVector& m, const GeneratorBasis& basis) {
    if (m.dim() != basis.dim()) throw DimMismatchError(m.dim(), basis.dim());
    const int n = m.dim();
    const double prefactor = std::sqrt(n * (n - 1.0) / 2.0);
    ComplexMatrix rho(n);
    for (int i = 0; i < n; ++i) rho.at(i, i) = 1.0 / n;
    const auto& coords = m.coords();
    for (size_t a = 0; a < coords.size(); ++a) {
        if (coords[a] == 0.0) continue;
        const ComplexMatrix& g = basis.generators()[a];
        const double w = prefactor * coords[a] / n;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) rho.at(i, j) += w * g.at(i, j);
    }
    return DensityMatrix::from_matrix(std::move(rho));
}

namespace {

double real_trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    // Tr(ab) for Hermitian a, b is real
    Complex t{};
    const int n = a.dim();
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) t += a.at(i, k) * b.at(k, i);
    return t.real();
}

}  // namespace

BlochVector bloch_from_density(const DensityMatrix& rho, const GeneratorBasis& basis) {
    if (rho.dim() != basis.dim()) throw DimMismatchError(rho.dim(), basis.dim());
    const int n = rho.dim();
    const double scale = std::sqrt(n / (2.0 * (n - 1)));
    std::vector<double> coords;
    coords.reserve(basis.generators().size());
    for (const auto& g : basis.generators())
        coords.push_back(scale * real_trace_product(rho.matrix(), g));
    // round-off can push a pure state's norm a hair past 1
    double norm2 = 0.0;
    for (double c : coords) norm2 += c * c;
    if (norm2 > 1.0 && norm2 <= 1.0 + 1e-10) {
        const double shrink = 1.0 / std::sqrt(norm2);
        for (double& c : coords) c *= shrink;
    }
    return {n, std::move(coords)};
}

BlochVector bloch_from_density(const DensityMatrix& rho) {
    return bloch_from_density(rho, generator_basis(rho.dim()));
}

double purity(const DensityMatrix& rho) {
    const double f = frobenius_norm(rho.matrix());
    return f * f;
}

namespace {

using nlohmann::json;

DensityMatrix state_from_parsed(const json& doc) {
    if (!doc.is_object()) throw ParseError("state document must be a JSON object");
    if (!doc.contains("dim") || !doc["dim"].is_number_integer())
        throw ParseError("state document needs an integer \"dim\"");
    const int dim = doc["dim"].get<int>();
    if (dim < 1) throw InvalidDimError(dim, "state dimension must be >= 1");

    const bool has_matrix = doc.contains("matrix");
    const bool has_bloch = doc.contains("bloch");
    if (has_matrix == has_bloch)
        throw ParseError("state document needs exactly one of \"matrix\" or \"bloch\"");

    if (has_matrix) {
        const json& rows = doc["matrix"];
        if (!rows.is_array() || rows.size() != static_cast<size_t>(dim))
            throw ParseError("\"matrix\" must be an array of " + std::to_string(dim) + " rows");
        ComplexMatrix m(dim);
        for (int i = 0; i < dim; ++i) {
            const json& row = rows[i];
            if (!row.is_array() || row.size() != static_cast<size_t>(dim))
                throw ParseError("matrix row " + std::to_string(i) + " must have " +
                                 std::to_string(dim) + " entries");
            for (int j = 0; j < dim; ++j) {
                const json& e = row[j];
                if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
                    throw ParseError("matrix entry (" + std::to_string(i) + "," +
                                     std::to_string(j) + ") must be a [re, im] pair");
                m.at(i, j) = Complex(e[0].get<double>(), e[1].get<double>());
            }
        }
        return DensityMatrix::from_matrix(std::move(m));
    }

    const json& arr = doc["bloch"];
    if (!arr.is_array()) throw ParseError("\"bloch\" must be a real array");
    std::vector<double> coords;
    coords.reserve(arr.size());
    for (const json& e : arr) {
        if (!e.is_number()) throw ParseError("\"bloch\" entries must be numbers");
        coords.push_back(e.get<double>());
    }
    BlochVector b(dim, std::move(coords));
    if (dim == 2) return qubit_from_bloch(b);
    return qunit_from_bloch(b, generator_basis(dim));
}

}  // namespace

DensityMatrix parse_state_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("state document is not valid JSON: ") + e.what());
    }
    return state_from_parsed(doc);
}

DensityMatrix load_state_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open state file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_state_json(buf.str());
    } catch (const Error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::string state_to_json(const DensityMatrix& rho) {
    nlohmann::json rows = nlohmann::json::array();
    const int n = rho.dim();
    for (int i = 0; i < n; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < n; ++j) {
            const Complex& e = rho.matrix().at(i, j);
            row.push_back({e.real(), e.imag()});
        }
        rows.push_back(std::move(row));
    }
    nlohmann::json doc;
    doc["dim"] = n;
    doc["matrix"] = std::move(rows);
    return doc.dump();
}

}  // namespace qfid
