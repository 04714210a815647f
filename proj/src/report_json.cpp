#include "totdom/report_json.hpp"

namespace totdom {

Json vertex_json(const Graph& g, Vertex v) {
    if (g.has_labels()) return g.name(v);
    return v;
}

Json vertex_set_json(const Graph& g, const VertexSet& s) {
    Json arr = Json::array();
    for (Vertex v : s) arr.push_back(vertex_json(g, v));
    return arr;
}

namespace {

Json classes_json(const Graph& g, const std::vector<VertexSet>& classes) {
    Json arr = Json::array();
    for (const auto& c : classes) arr.push_back(vertex_set_json(g, c));
    return arr;
}

template <typename T>
Json optional_json(const std::optional<T>& value) {
    return value ? Json(*value) : Json(nullptr);
}

}  // namespace

Json report_json(const Graph& g, const ClassificationReport& r) {
    Json j;
    j["schemaVersion"] = kSchemaVersion;
    j["method"] = std::string(to_string(r.method));
    j["eligible"] = r.eligible;
    j["verdict"] = std::string(to_string(r.verdict));
    j["sSet"] = r.s_set ? vertex_set_json(g, r.s_set->representatives) : Json(nullptr);
    j["sSetClasses"] = r.s_set ? classes_json(g, r.s_set->classes) : Json(nullptr);
    j["packingOk"] = r.packing_ok;
    j["packingViolation"] = r.packing_violation
                                ? Json::array({vertex_json(g, r.packing_violation->first),
                                               vertex_json(g, r.packing_violation->second)})
                                : Json(nullptr);
    j["dominatingOk"] = r.dominating_ok;
    j["uncoveredVertex"] = r.uncovered_vertex ? vertex_json(g, *r.uncovered_vertex) : Json(nullptr);
    j["impliedGamma"] = optional_json(r.implied_gamma);
    j["impliedGammaT"] = optional_json(r.implied_gamma_t);
    j["gammaSetCount"] = optional_json(r.gamma_set_count);
    j["witnessPattern"] = r.witness_pattern.empty() ? Json(nullptr) : Json(r.witness_pattern);
    if (r.ineligibility_witness) {
        Json emb = Json::array();
        for (Vertex v : *r.ineligibility_witness) emb.push_back(vertex_json(g, v));
        j["witnessEmbedding"] = emb;
    } else {
        j["witnessEmbedding"] = nullptr;
    }
    j["notes"] = r.notes;
    j["elapsedMicros"] = r.elapsed.count();
    return j;
}

Json certificate_json(const Graph& g, const DominationCertificate& c) {
    Json j;
    j["schemaVersion"] = kSchemaVersion;
    j["kind"] = c.kind == DominationKind::gamma ? "gamma" : "gamma_total";
    j["value"] = c.value;
    j["witness"] = vertex_set_json(g, c.witness);
    return j;
}

Json sg_set_json(const Graph& g, const SGSet& sg) {
    Json j;
    j["schemaVersion"] = kSchemaVersion;
    j["special"] = vertex_set_json(g, sg.special);
    j["classes"] = classes_json(g, sg.classes);
    j["representatives"] = vertex_set_json(g, sg.representatives);
    return j;
}

Json partition_json(const Graph& g, const NeighborhoodPartition& p) {
    Json j;
    j["vertex"] = vertex_json(g, p.vertex);
    j["T"] = vertex_set_json(g, p.twins);
    j["D"] = vertex_set_json(g, p.dominated);
    j["M"] = vertex_set_json(g, p.mixed);
    return j;
}

Json freeness_json(const Graph& g, const FreenessResult& f) {
    Json j;
    j["schemaVersion"] = kSchemaVersion;
    j["free"] = f.free;
    j["pattern"] = f.free ? Json(nullptr) : Json(f.pattern);
    if (f.free) {
        j["witnessEmbedding"] = nullptr;
    } else {
        Json emb = Json::array();
        for (Vertex v : f.witness) emb.push_back(vertex_json(g, v));
        j["witnessEmbedding"] = emb;
    }
    return j;
}

Json stats_json(const BasicStats& s) {
    Json j;
    j["minDegree"] = s.min_degree;
    j["maxDegree"] = s.max_degree;
    j["edgeCount"] = s.edge_count;
    j["componentCount"] = s.component_count;
    j["isolatedVertexCount"] = s.isolated_vertex_count;
    return j;
}

}  // namespace totdom
