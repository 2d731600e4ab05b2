#pragma once

#include <dindex/automorphism.hpp>

#include <json.hpp>

namespace dindex {

/// {"graph6", "labels": [...by canonical edge order], "distinguishing",
///  "witness"?, "method", "seed"?, "root"?}
nlohmann::json certificate_to_json(const Graph& g, const Certificate& cert);

struct ParsedCertificate {
    Graph graph;
    Certificate certificate;
};

/// Inverse of certificate_to_json. Throws Error on a schema violation.
ParsedCertificate certificate_from_json(const nlohmann::json& j);

}  // namespace dindex
