#include "framefit/json_io.hpp"

#include <map>
#include <string>
#include <vector>

namespace framefit {

namespace {

Vec parse_vec(const Json& j, const char* what) {
    if (!j.is_array()) throw InvalidInput(std::string(what) + ": expected an array");
    Vec v(static_cast<long>(j.size()));
    long i = 0;
    for (const auto& x : j) {
        if (!x.is_number()) throw InvalidInput(std::string(what) + ": expected numbers");
        v[i++] = x.get<double>();
    }
    return v;
}

Json vec_to_json(const Vec& v) {
    Json out = Json::array();
    for (long i = 0; i < v.size(); ++i) out.push_back(v[i]);
    return out;
}

}  // namespace

SequenceModel parse_sequence(const Json& j) {
    if (!j.is_object() || !j.contains("tail"))
        throw InvalidInput("sequence spec: expected an object with a 'tail' field");
    const Vec head = j.contains("head") && !j["head"].empty() ? parse_vec(j["head"], "sequence head") : Vec();
    const Json& tail = j["tail"];
    const std::string kind = tail.value("kind", "");
    if (kind == "none") {
        if (head.size() < 1) throw InvalidInput("sequence spec: finite sequence needs a head");
        return SequenceModel::finite(head);
    }
    if (kind == "constant") {
        if (!tail.contains("constant") || !tail["constant"].is_number())
            throw InvalidInput("sequence spec: constant tail needs a numeric 'constant'");
        return SequenceModel::constant_tail(head, tail["constant"].get<double>());
    }
    if (kind == "generator") {
        if (!tail.contains("generator") || !tail["generator"].is_object())
            throw InvalidInput("sequence spec: generator tail needs a 'generator' object");
        const Json& g = tail["generator"];
        const std::string name = g.value("name", "");
        if (name.empty()) throw InvalidInput("sequence spec: generator needs a 'name'");
        std::map<std::string, double> params;
        if (g.contains("params")) {
            for (auto it = g["params"].begin(); it != g["params"].end(); ++it) {
                if (!it.value().is_number())
                    throw InvalidInput("sequence spec: generator params must be numeric");
                params[it.key()] = it.value().get<double>();
            }
        }
        return SequenceModel::generator_tail(head, name, params);
    }
    throw InvalidInput("sequence spec: unknown tail kind '" + kind + "'");
}

Json sequence_to_json(const SequenceModel& m) {
    Json j;
    j["head"] = vec_to_json(m.head());
    Json tail;
    switch (m.tail_kind()) {
        case TailKind::None:
            tail["kind"] = "none";
            break;
        case TailKind::Constant:
            tail["kind"] = "constant";
            tail["constant"] = m.tail_constant();
            break;
        case TailKind::Generator: {
            tail["kind"] = "generator";
            Json g;
            g["name"] = m.generator_name();
            Json p = Json::object();
            for (const auto& [k, v] : m.generator_params()) p[k] = v;
            g["params"] = p;
            tail["generator"] = g;
            Json meta;
            meta["limsup"] = m.meta().limsup;
            meta["liminf"] = m.meta().liminf;
            meta["bound"] = m.meta().bound;
            tail["meta"] = meta;
            break;
        }
    }
    j["tail"] = tail;
    return j;
}

OperatorModel parse_operator(const Json& j) {
    if (!j.is_object()) throw InvalidInput("operator spec: expected an object");
    const std::string kind = j.value("kind", "");
    if (kind == "matrix") {
        if (!j.contains("data") || !j["data"].is_array() || j["data"].empty())
            throw InvalidInput("operator spec: matrix needs non-empty 'data' rows");
        const long n = static_cast<long>(j["data"].size());
        Mat m(n, n);
        long r = 0;
        for (const auto& row : j["data"]) {
            const Vec v = parse_vec(row, "operator row");
            if (v.size() != n) throw InvalidInput("operator spec: matrix must be square");
            m.row(r++) = v.transpose();
        }
        return FiniteHermitian(std::move(m));
    }
    if (kind == "diagonal") {
        if (!j.contains("sequence"))
            throw InvalidInput("operator spec: diagonal needs a 'sequence'");
        SequenceModel d = parse_sequence(j["sequence"]);
        if (d.is_finite()) return FiniteHermitian(Mat(d.head().asDiagonal()));
        return DiagonalOperator(std::move(d));
    }
    throw InvalidInput("operator spec: unknown kind '" + kind + "'");
}

Json operator_to_json(const OperatorModel& s) {
    Json j;
    if (const auto* f = std::get_if<FiniteHermitian>(&s)) {
        j["kind"] = "matrix";
        Json rows = Json::array();
        for (long r = 0; r < f->dim(); ++r) rows.push_back(vec_to_json(f->matrix().row(r)));
        j["data"] = rows;
        return j;
    }
    j["kind"] = "diagonal";
    j["sequence"] = sequence_to_json(std::get<DiagonalOperator>(s).diag());
    return j;
}

Frame parse_frame(const Json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("vectors"))
        throw InvalidInput("frame file: expected 'dim' and 'vectors'");
    const long n = j["dim"].get<long>();
    if (n < 1) throw InvalidInput("frame file: dimension must be positive");
    if (!j["vectors"].is_array() || j["vectors"].empty())
        throw InvalidInput("frame file: need at least one vector");
    const long m = static_cast<long>(j["vectors"].size());
    Mat t(n, m);
    long k = 0;
    for (const auto& row : j["vectors"]) {
        const Vec v = parse_vec(row, "frame vector");
        if (v.size() != n) throw InvalidInput("frame file: vector length mismatch");
        t.col(k++) = v;
    }
    return Frame(std::move(t));
}

Json frame_to_json(const Frame& f) {
    Json j;
    j["dim"] = f.dim();
    Json rows = Json::array();
    for (long k = 0; k < f.count(); ++k) rows.push_back(vec_to_json(f.vector(k)));
    j["vectors"] = rows;
    return j;
}

Json evidence_to_json(const EvidenceList& ev) {
    Json arr = Json::array();
    for (const Evidence& e : ev) {
        Json item;
        item["condition"] = e.condition;
        item["paper_tag"] = e.tag;
        item["pass"] = e.pass;
        item["witness_k"] = e.witness_k;
        item["lhs"] = e.lhs;
        item["rhs"] = e.rhs;
        arr.push_back(item);
    }
    return arr;
}

Json verdict_to_json(const AdmissibilityVerdict& v) {
    Json j;
    j["status"] = to_string(v.status);
    j["evidence"] = evidence_to_json(v.evidence);
    return j;
}

Json verify_report_to_json(const VerifyReport& r) {
    Json j;
    j["max_norm_dev"] = r.max_norm_dev;
    j["operator_dev"] = r.operator_dev;
    j["pass"] = r.pass;
    return j;
}

}  // namespace framefit
