#pragma once

#include <json.hpp>

#include "totdom/characterize.hpp"
#include "totdom/domination.hpp"
#include "totdom/forbidden.hpp"
#include "totdom/graph.hpp"
#include "totdom/structure.hpp"

namespace totdom {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Vertices render as their label when the graph is labelled, else as integers.
Json vertex_json(const Graph& g, Vertex v);
Json vertex_set_json(const Graph& g, const VertexSet& s);

/// Report object with the fixed field set
///   schemaVersion, method, eligible, verdict, sSet, sSetClasses,
///   packingViolation, uncoveredVertex, impliedGamma, impliedGammaT,
///   gammaSetCount, witnessPattern, witnessEmbedding, notes, elapsedMicros.
/// elapsedMicros is the only non-deterministic field; it is always last.
Json report_json(const Graph& g, const ClassificationReport& r);

Json certificate_json(const Graph& g, const DominationCertificate& c);
Json sg_set_json(const Graph& g, const SGSet& sg);
Json partition_json(const Graph& g, const NeighborhoodPartition& p);
Json freeness_json(const Graph& g, const FreenessResult& f);
Json stats_json(const BasicStats& s);

}  // namespace totdom
