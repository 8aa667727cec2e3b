#include "pmonoid/json_io.hpp"

#include <string>

#include "pmonoid/errors.hpp"

namespace pmonoid::io {

namespace {

const json& field(const json& j, const char* name) {
    if (!j.is_object()) throw FormatError(std::string("expected an object with field '") + name + "'");
    auto it = j.find(name);
    if (it == j.end()) throw FormatError(std::string("missing field '") + name + "'");
    return *it;
}

std::size_t count_field(const json& j, const char* name) {
    const json& v = field(j, name);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
        throw FormatError(std::string("field '") + name + "' must be a non-negative integer");
    }
    return v.get<std::size_t>();
}

const json& array_field(const json& j, const char* name) {
    const json& v = field(j, name);
    if (!v.is_array()) throw FormatError(std::string("field '") + name + "' must be an array");
    return v;
}

void check_header(const json& j, const char* kind) {
    if (!j.is_object()) throw FormatError(std::string("expected a ") + kind + " object");
    if (auto f = j.find("format"); f != j.end() && *f != kFormatVersion) {
        throw FormatError("unsupported format version " + f->dump());
    }
    if (auto k = j.find("kind"); k != j.end() && *k != kind) {
        throw FormatError(std::string("expected kind '") + kind + "', found " + k->dump());
    }
}

json header(const char* kind) { return json{{"format", kFormatVersion}, {"kind", kind}}; }

json vector_json(std::span<const Scalar> v) {
    json out = json::array();
    for (const auto& s : v) out.push_back(to_json(s));
    return out;
}

Vector vector_from_json(const json& j) {
    if (!j.is_array()) throw FormatError("expected a list of scalars");
    Vector v;
    v.reserve(j.size());
    for (const auto& s : j) v.push_back(scalar_from_json(s));
    return v;
}

std::vector<Matrix> matrices_from_json(const json& list) {
    std::vector<Matrix> out;
    out.reserve(list.size());
    for (const auto& m : list) out.push_back(matrix_from_json(m));
    return out;
}

}  // namespace

json to_json(const Scalar& s) { return s.to_string(); }

json to_json(const Matrix& m) {
    json entries = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) entries.push_back(vector_json(m.row(r)));
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

json to_json(const Subspace& s) {
    json basis = json::array();
    for (std::size_t r = 0; r < s.dim(); ++r) basis.push_back(vector_json(s.basis_vector(r)));
    return json{{"ambient_dim", s.ambient_dim()}, {"basis", basis}};
}

json to_json(const RawSeq& a) {
    json j = header("raw");
    j["n"] = a.n();
    j["terms"] = json::array();
    for (const auto& t : a.terms()) j["terms"].push_back(to_json(t));
    return j;
}

namespace {

json sequence_json(const MSeq& a, const char* kind) {
    json j = header(kind);
    j["n"] = a.n();
    j["terms"] = json::array();
    for (std::size_t i = 0; i < a.length(); ++i) j["terms"].push_back(to_json(a.zero_extension(i)));
    j["chain"] = json::array();
    for (const auto& v : a.chain()) j["chain"].push_back(to_json(v));
    j["chain_dims"] = a.chain_dims();
    return j;
}

}  // namespace

json to_json(const MSeq& a) { return sequence_json(a, "mseq"); }

json to_json(const PMSeq& a) { return sequence_json(a.seq(), "pmseq"); }

json to_json(const EpsFamily& f) {
    json j = header("family");
    j["n"] = f.n();
    j["coeffs"] = json::array();
    for (const auto& c : f.coeffs()) j["coeffs"].push_back(to_json(c));
    return j;
}

json to_json(const ProjPoint& x) { return vector_json(x.coords()); }

json to_json(const LinearRelation& p) { return to_json(p.subspace()); }

json to_json(const Hinge& h) {
    json j = header("hinge");
    j["n"] = h.n();
    j["relations"] = json::array();
    for (const auto& p : h.relations()) j["relations"].push_back(to_json(p));
    return j;
}

json to_json(const WedgeMap& w) {
    json j = header("wedge");
    j["n"] = w.n;
    j["k"] = w.k;
    j["matrix"] = to_json(w.matrix);
    return j;
}

json to_json(const LambdaVector& l) {
    json j = header("lambda");
    j["components"] = json::array();
    for (const auto& w : l.components) j["components"].push_back(to_json(w));
    return j;
}

Scalar scalar_from_json(const json& j) {
    if (j.is_string()) return Scalar::parse(j.get<std::string>());
    if (j.is_number_integer()) return Scalar(j.get<long>());
    throw FormatError("scalars must be strings such as \"1/2+3/4i\" or integers");
}

Matrix matrix_from_json(const json& j) {
    const std::size_t rows = count_field(j, "rows");
    const std::size_t cols = count_field(j, "cols");
    const json& entries = array_field(j, "entries");
    if (entries.size() != rows) throw FormatError("matrix 'entries' must have 'rows' rows");
    std::vector<Scalar> data;
    data.reserve(rows * cols);
    for (const auto& row : entries) {
        if (!row.is_array() || row.size() != cols) throw FormatError("matrix rows must have 'cols' entries");
        for (const auto& s : row) data.push_back(scalar_from_json(s));
    }
    return Matrix(rows, cols, std::move(data));
}

Subspace subspace_from_json(const json& j) {
    const std::size_t ambient = count_field(j, "ambient_dim");
    std::vector<Vector> vectors;
    for (const auto& v : array_field(j, "basis")) {
        vectors.push_back(vector_from_json(v));
        if (vectors.back().size() != ambient) throw FormatError("basis vector length differs from 'ambient_dim'");
    }
    return Subspace::span(ambient, vectors);
}

RawSeq raw_from_json(const json& j) {
    check_header(j, "raw");
    RawSeq a = RawSeq::make(matrices_from_json(array_field(j, "terms")));
    if (auto n = j.find("n"); n != j.end() && *n != a.n()) throw FormatError("'n' disagrees with the term size");
    return a;
}

namespace {

MSeq chained_from_json(const json& j) {
    const std::size_t n = count_field(j, "n");
    std::vector<Matrix> terms = matrices_from_json(array_field(j, "terms"));
    std::vector<Subspace> chain;
    for (const auto& v : array_field(j, "chain")) chain.push_back(subspace_from_json(v));
    if (chain.size() != terms.size() + 1) throw FormatError("'chain' must have one more entry than 'terms'");
    std::vector<Matrix> maps;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (terms[i].rows() != n || terms[i].cols() != n) throw FormatError("sequence terms must be n x n");
        maps.push_back(restrict(terms[i], chain[i]));
    }
    return MSeq::make(n, std::move(chain), std::move(maps));
}

}  // namespace

MSeq mseq_from_json(const json& j) {
    check_header(j, "mseq");
    return chained_from_json(j);
}

PMSeq pmseq_from_json(const json& j) {
    check_header(j, "pmseq");
    return projectivize(chained_from_json(j));
}

MSeq sequence_from_json(const json& j) {
    if (!j.is_object()) throw FormatError("expected a sequence object");
    const auto kind = j.find("kind");
    if (kind == j.end() || *kind == "raw") return pi(raw_from_json(j));
    if (*kind == "mseq") return mseq_from_json(j);
    if (*kind == "pmseq") return pmseq_from_json(j).seq();
    throw FormatError("expected a sequence, found kind " + kind->dump());
}

EpsFamily family_from_json(const json& j) {
    check_header(j, "family");
    EpsFamily f = EpsFamily::make(matrices_from_json(array_field(j, "coeffs")));
    if (auto n = j.find("n"); n != j.end() && *n != f.n()) throw FormatError("'n' disagrees with the coefficient size");
    return f;
}

ProjPoint point_from_json(const json& j) { return ProjPoint(vector_from_json(j)); }

std::vector<ProjPoint> points_from_json(const json& j) {
    const json& list = j.is_object() ? array_field(j, "points") : j;
    if (!list.is_array()) throw FormatError("expected a list of points");
    std::vector<ProjPoint> out;
    for (const auto& p : list) out.push_back(point_from_json(p));
    return out;
}

LinearRelation relation_from_json(const json& j) { return LinearRelation(subspace_from_json(j)); }

Hinge hinge_from_json(const json& j) {
    check_header(j, "hinge");
    std::vector<LinearRelation> relations;
    for (const auto& p : array_field(j, "relations")) relations.push_back(relation_from_json(p));
    return Hinge::make(std::move(relations));
}

WedgeMap wedge_from_json(const json& j) {
    check_header(j, "wedge");
    WedgeMap w{count_field(j, "n"), count_field(j, "k"), matrix_from_json(field(j, "matrix"))};
    const std::size_t size = binomial(w.n, w.k);
    if (w.matrix.rows() != size || w.matrix.cols() != size) throw FormatError("wedge matrix must be C(n,k) square");
    return w;
}

LambdaVector lambda_from_json(const json& j) {
    check_header(j, "lambda");
    LambdaVector l;
    for (const auto& w : array_field(j, "components")) l.components.push_back(wedge_from_json(w));
    return l;
}

}  // namespace pmonoid::io
