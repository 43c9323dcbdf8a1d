#include "leonard/io.hpp"

#include <fstream>

#include <json.hpp>

namespace leonard {

using nlohmann::json;

namespace {

json field_to_json(const Field& f) {
    if (f.is_rationals()) return json{{"kind", "rationals"}};
    return json{{"kind", "prime"}, {"p", f.modulus()}};
}

Field field_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw std::invalid_argument("field descriptor must be an object with a kind");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "rationals") return Field::rationals();
    if (kind == "prime") return Field::prime(j.at("p").get<std::uint32_t>());
    throw std::invalid_argument("unknown field kind: " + kind);
}

json scalars_to_json(const std::vector<Scalar>& v) {
    json arr = json::array();
    for (const Scalar& s : v) arr.push_back(s.str());
    return arr;
}

std::vector<Scalar> scalars_from_json(const Field& f, const json& j, size_t expect,
                                      const std::string& name) {
    if (!j.is_array() || j.size() != expect)
        throw std::invalid_argument(name + " must be an array of " + std::to_string(expect) +
                                    " scalars");
    std::vector<Scalar> out;
    for (const auto& e : j) out.push_back(Scalar::parse(f, e.get<std::string>()));
    return out;
}

json matrix_to_json(const ExactMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.dim(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

ExactMatrix matrix_from_json(const Field& f, const json& j, int n, const std::string& name) {
    if (!j.is_array() || static_cast<int>(j.size()) != n)
        throw std::invalid_argument(name + " must be a " + std::to_string(n) + "x" +
                                    std::to_string(n) + " matrix");
    ExactMatrix m(f, n);
    for (int i = 0; i < n; ++i) {
        const auto& row = j.at(i);
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw std::invalid_argument(name + " row " + std::to_string(i) + " has wrong length");
        for (int k = 0; k < n; ++k) m.at(i, k) = Scalar::parse(f, row.at(k).get<std::string>());
    }
    return m;
}

std::string primary_type_name(PrimaryType t) {
    switch (t) {
        case PrimaryType::I: return "I";
        case PrimaryType::II: return "II";
        case PrimaryType::IIIPlus: return "III+";
    }
    return "?";
}

} // namespace

std::string Document::kind() const {
    switch (payload.index()) {
        case 0: return "parameter_array";
        case 1: return "tdd";
        case 2: return "matrix_pair";
        case 3: return "primary_data";
    }
    return "?";
}

Document make_document(ParameterArray p) {
    Field f = p.field();
    int d = p.d();
    return Document{f, d, std::move(p)};
}

Document make_document(TddSequence t) {
    Field f = t.field();
    int d = t.d();
    return Document{f, d, std::move(t)};
}

Document make_document(MatrixPair m) {
    Field f = m.field();
    int d = m.dim() - 1;
    return Document{f, d, std::move(m)};
}

Document make_document(PrimaryData pd) {
    Field f = pd.field();
    int d = pd.d;
    return Document{f, d, std::move(pd)};
}

namespace {
json document_to_json(const Document& doc);
}

std::string render_document(const Document& doc) { return document_to_json(doc).dump(2) + "\n"; }

std::string render_document_compact(const Document& doc) { return document_to_json(doc).dump(); }

namespace {

json document_to_json(const Document& doc) {
    json j;
    j["field"] = field_to_json(doc.field);
    j["d"] = doc.d;
    j["kind"] = doc.kind();
    json payload;
    if (const auto* p = std::get_if<ParameterArray>(&doc.payload)) {
        payload["theta"] = scalars_to_json(p->theta);
        payload["theta_star"] = scalars_to_json(p->theta_star);
        payload["phi1"] = scalars_to_json(p->phi1);
        payload["phi2"] = scalars_to_json(p->phi2);
    } else if (const auto* t = std::get_if<TddSequence>(&doc.payload)) {
        payload["a"] = scalars_to_json(t->a);
        payload["x"] = scalars_to_json(t->x);
        payload["theta_star"] = scalars_to_json(t->theta_star);
    } else if (const auto* m = std::get_if<MatrixPair>(&doc.payload)) {
        payload["a"] = matrix_to_json(m->a);
        payload["a_star"] = matrix_to_json(m->astar);
    } else if (const auto* pd = std::get_if<PrimaryData>(&doc.payload)) {
        payload["type"] = primary_type_name(pd->type);
        if (pd->q) payload["q"] = pd->q->str();
        bool iii = pd->type == PrimaryType::IIIPlus;
        payload["delta"] = pd->delta.str();
        payload[iii ? "s" : "mu"] = pd->mu.str();
        payload["h"] = pd->h.str();
        payload["delta_star"] = pd->delta_star.str();
        payload[iii ? "s_star" : "mu_star"] = pd->mu_star.str();
        payload["h_star"] = pd->h_star.str();
        payload["tau"] = pd->tau.str();
    }
    j["payload"] = std::move(payload);
    return j;
}

} // namespace

Document parse_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("not valid JSON: ") + e.what());
    }
    try {
        Field f = field_from_json(j.at("field"));
        int d = j.at("d").get<int>();
        if (d < 1) throw std::invalid_argument("diameter must be >= 1");
        std::string kind = j.at("kind").get<std::string>();
        const json& payload = j.at("payload");
        size_t n = static_cast<size_t>(d) + 1;
        if (kind == "parameter_array") {
            return Document{f, d,
                            ParameterArray(scalars_from_json(f, payload.at("theta"), n, "theta"),
                                           scalars_from_json(f, payload.at("theta_star"), n,
                                                             "theta_star"),
                                           scalars_from_json(f, payload.at("phi1"), n - 1, "phi1"),
                                           scalars_from_json(f, payload.at("phi2"), n - 1,
                                                             "phi2"))};
        }
        if (kind == "tdd") {
            return Document{f, d,
                            TddSequence(scalars_from_json(f, payload.at("a"), n, "a"),
                                        scalars_from_json(f, payload.at("x"), n - 1, "x"),
                                        scalars_from_json(f, payload.at("theta_star"), n,
                                                          "theta_star"))};
        }
        if (kind == "matrix_pair") {
            return Document{f, d,
                            MatrixPair(matrix_from_json(f, payload.at("a"), d + 1, "a"),
                                       matrix_from_json(f, payload.at("a_star"), d + 1,
                                                        "a_star"))};
        }
        if (kind == "primary_data") {
            std::string type = payload.at("type").get<std::string>();
            auto scalar_at = [&](const char* key) {
                return Scalar::parse(f, payload.at(key).get<std::string>());
            };
            if (type == "I") {
                return Document{f, d,
                                make_primary_i(d, scalar_at("q"), scalar_at("delta"),
                                               scalar_at("mu"), scalar_at("h"),
                                               scalar_at("delta_star"), scalar_at("mu_star"),
                                               scalar_at("h_star"), scalar_at("tau"))};
            }
            if (type == "II") {
                return Document{f, d,
                                make_primary_ii(d, scalar_at("delta"), scalar_at("mu"),
                                                scalar_at("h"), scalar_at("delta_star"),
                                                scalar_at("mu_star"), scalar_at("h_star"),
                                                scalar_at("tau"))};
            }
            if (type == "III+") {
                return Document{f, d,
                                make_primary_iiiplus(d, scalar_at("delta"), scalar_at("s"),
                                                     scalar_at("h"), scalar_at("delta_star"),
                                                     scalar_at("s_star"), scalar_at("h_star"),
                                                     scalar_at("tau"))};
            }
            throw std::invalid_argument("unknown primary data type: " + type);
        }
        throw std::invalid_argument("unknown document kind: " + kind);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed document: ") + e.what());
    }
}

Document parse_document_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_document(text);
}

} // namespace leonard
