#include "hmg/model_io.hpp"

#include <json.hpp>

namespace hmg {

using nlohmann::json;

ParsedModel parse_model(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw model_error(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
        throw model_error("model must be an object with a \"vertices\" array");

    std::vector<std::string> vertices;
    for (const auto& v : j["vertices"]) {
        if (v.is_string()) vertices.push_back(v.get<std::string>());
        else if (v.is_number_integer()) vertices.push_back(std::to_string(v.get<long long>()));
        else throw model_error("vertex labels must be strings");
    }

    std::vector<std::vector<std::string>> facets;
    if (j.contains("facets")) {
        if (!j["facets"].is_array()) throw model_error("\"facets\" must be an array");
        for (const auto& f : j["facets"]) {
            if (!f.is_array()) throw model_error("each facet must be an array of labels");
            std::vector<std::string> labels;
            for (const auto& v : f) {
                if (v.is_string()) labels.push_back(v.get<std::string>());
                else if (v.is_number_integer()) labels.push_back(std::to_string(v.get<long long>()));
                else throw model_error("facet entries must be vertex labels");
            }
            facets.push_back(std::move(labels));
        }
    }

    SimplicialComplex complex = [&] {
        try {
            return SimplicialComplex::from_labels(vertices, facets);
        } catch (const std::invalid_argument& e) {
            throw model_error(e.what());
        }
    }();

    std::vector<std::string> warnings;
    if (complex.facets().size() < facets.size() ||
        (facets.empty() && complex.facets() != std::vector<Face>{0}))
        warnings.push_back("non-maximal or duplicate facets were dropped");
    else {
        // Count distinct input facets to detect normalization.
        std::vector<Face> raw;
        for (const auto& f : facets) {
            Face m = 0;
            for (const auto& lab : f) m |= Face(1) << complex.index_of(lab);
            raw.push_back(m);
        }
        std::sort(raw.begin(), raw.end());
        raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
        if (raw.size() != complex.facets().size() ||
            !std::equal(raw.begin(), raw.end(), complex.facets().begin()))
            warnings.push_back("non-maximal facets were dropped");
    }

    std::vector<Int> weights(vertices.size(), 2);
    if (j.contains("weights")) {
        if (!j["weights"].is_object()) throw model_error("\"weights\" must be an object");
        for (const auto& [key, val] : j["weights"].items()) {
            if (!val.is_number_integer()) throw model_error("weights must be integers");
            std::size_t idx;
            try {
                idx = complex.index_of(key);
            } catch (const std::invalid_argument&) {
                throw model_error("weight for unknown vertex: " + key);
            }
            weights[idx] = val.get<Int>();
        }
    }
    try {
        return ParsedModel{HMPair(std::move(complex), std::move(weights)), std::move(warnings)};
    } catch (const std::invalid_argument& e) {
        throw model_error(e.what());
    }
}

std::string model_to_json(const HMPair& pair) {
    json j;
    j["vertices"] = pair.complex().ground();
    json facets = json::array();
    for (Face f : pair.complex().facets()) facets.push_back(pair.complex().face_labels(f));
    j["facets"] = facets;
    json weights = json::object();
    for (std::size_t i = 0; i < pair.vertex_count(); ++i)
        weights[pair.complex().label(i)] = pair.weight(i);
    j["weights"] = weights;
    return j.dump();
}

std::string matrix_to_json(const DesignMatrix& dm) {
    json j;
    j["ground"] = dm.ground;
    json rows = json::array();
    for (const auto& rl : dm.row_labels) {
        json r;
        json face = json::array();
        for (std::size_t i = 0; i < dm.ground.size(); ++i)
            if (rl.face & (Face(1) << i)) face.push_back(dm.ground[i]);
        r["face"] = face;
        r["index"] = rl.index;
        rows.push_back(r);
    }
    j["rows"] = rows;
    json cols = json::array();
    for (const auto& t : dm.col_labels) cols.push_back(t);
    j["cols"] = cols;
    json entries = json::array();
    for (std::size_t r = 0; r < dm.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < dm.cols(); ++c) row.push_back(dm.matrix.at(r, c));
        entries.push_back(row);
    }
    j["entries"] = entries;
    return j.dump();
}

DesignMatrix matrix_from_json(const std::string& text) {
    json j = json::parse(text);
    DesignMatrix dm;
    dm.ground = j["ground"].get<std::vector<std::string>>();
    for (const auto& r : j["rows"]) {
        RowLabel rl;
        for (const auto& lab : r["face"]) {
            std::size_t i = 0;
            while (i < dm.ground.size() && dm.ground[i] != lab.get<std::string>()) ++i;
            if (i == dm.ground.size()) throw model_error("row face references unknown vertex");
            rl.face |= Face(1) << i;
        }
        rl.index = r["index"].get<StateTuple>();
        dm.row_labels.push_back(std::move(rl));
    }
    for (const auto& c : j["cols"]) dm.col_labels.push_back(c.get<StateTuple>());
    dm.matrix = IntMatrix(dm.row_labels.size(), dm.col_labels.size());
    const auto& entries = j["entries"];
    for (std::size_t r = 0; r < dm.rows(); ++r)
        for (std::size_t c = 0; c < dm.cols(); ++c)
            dm.matrix.at(r, c) = entries[r][c].get<Int>();
    return dm;
}

namespace {

json certificate_to_json_obj(const NuclearCertificate& cert) {
    json j;
    json nucleus;
    nucleus["type"] = to_string(cert.nucleus.kind);
    nucleus["m"] = cert.nucleus.m();
    if (cert.nucleus.kind != NucleusKind::Simplex) nucleus["n"] = cert.nucleus.n();
    nucleus["left"] = cert.nucleus.left;
    if (cert.nucleus.kind != NucleusKind::Simplex) nucleus["right"] = cert.nucleus.right;
    j["nucleus"] = nucleus;
    json steps = json::array();
    for (const auto& s : cert.steps) {
        json step;
        step["op"] = to_string(s.op);
        step["vertex"] = s.vertex;
        step["weight"] = s.weight;
        steps.push_back(step);
    }
    j["steps"] = steps;
    j["weight_case"] = to_string(cert.weight_case);
    return j;
}

json witness_to_json_obj(const MinorWitness& w) {
    json j;
    j["forbidden_id"] = w.forbidden_id;
    json steps = json::array();
    for (const auto& s : w.steps) {
        json step;
        step["op"] = s.op == ReductionStep::Delete ? "delete" : "link";
        step["vertex"] = s.vertex;
        steps.push_back(step);
    }
    j["reduction_steps"] = steps;
    j["weight_reduction"] = w.weight_reduction;
    j["isomorphism"] = w.isomorphism;
    return j;
}

}  // namespace

std::string verdict_to_json(const Verdict& v) {
    json j;
    j["outcome"] = v.unimodular ? "unimodular" : "not_unimodular";
    if (v.unimodular) j["certificate"] = certificate_to_json_obj(*v.certificate);
    else j["witness"] = witness_to_json_obj(*v.witness);
    return j.dump();
}

std::string vector_to_json(const SignedVector& v,
                           const std::vector<StateTuple>& col_labels) {
    json line = json::array();
    for (const auto& [c, val] : v.entries) {
        json e;
        e["col"] = col_labels[c];
        e["val"] = val;
        line.push_back(e);
    }
    return line.dump();
}

std::string basis_to_json_lines(const GraverBasis& basis,
                                const std::vector<StateTuple>& col_labels) {
    std::string out;
    for (const auto& v : basis) {
        out += vector_to_json(v, col_labels);
        out += '\n';
    }
    return out;
}

}  // namespace hmg
