#include <dindex/certificate_json.hpp>

namespace dindex {

nlohmann::json certificate_to_json(const Graph& g, const Certificate& cert)
{
    nlohmann::json j;
    j["graph6"] = write_graph6(g);
    j["labels"] = cert.labeling.labels;
    j["distinguishing"] = cert.distinguishing;
    if (cert.witness)
        j["witness"] = cert.witness->images;
    j["method"] = std::string(method_name(cert.method));
    if (cert.seed)
        j["seed"] = *cert.seed;
    if (cert.root)
        j["root"] = *cert.root;
    return j;
}

ParsedCertificate certificate_from_json(const nlohmann::json& j)
{
    try {
        ParsedCertificate out;
        out.graph = parse_graph6(j.at("graph6").get<std::string>());
        auto& c = out.certificate;
        c.labeling.labels = j.at("labels").get<std::vector<int>>();
        if (static_cast<int>(c.labeling.labels.size()) != out.graph.size())
            throw Error("certificate label count does not match edge count");
        c.distinguishing = j.at("distinguishing").get<bool>();
        if (j.contains("witness"))
            c.witness = Permutation{j.at("witness").get<std::vector<Vertex>>()};
        auto method = parse_method(j.at("method").get<std::string>());
        if (! method)
            throw Error("unknown certificate method " + j.at("method").dump());
        c.method = *method;
        if (j.contains("seed"))
            c.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("root"))
            c.root = j.at("root").get<Vertex>();
        return out;
    }
    catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed certificate JSON: ") + e.what());
    }
}

}  // namespace dindex
