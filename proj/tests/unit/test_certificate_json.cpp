#include <dindex/certificate_json.hpp>
#include <dindex/families.hpp>

#include <doctest.h>

using namespace dindex;

TEST_CASE("certificate JSON round trip")
{
    Graph c5 = gen_cycle(5);
    auto cert = is_distinguishing(c5, EdgeLabeling{{1, 1, 2, 1, 1}}, Method::theorem_2_3);
    cert.seed = 42;
    cert.root = 3;
    auto j = certificate_to_json(c5, cert);
    CHECK(j.at("graph6") == write_graph6(c5));
    CHECK(j.at("method") == "theorem-2.3");
    CHECK(j.contains("witness") == ! cert.distinguishing);

    auto back = certificate_from_json(nlohmann::json::parse(j.dump()));
    CHECK(back.graph == c5);
    CHECK(back.certificate.labeling == cert.labeling);
    CHECK(back.certificate.distinguishing == cert.distinguishing);
    CHECK(back.certificate.witness == cert.witness);
    CHECK(back.certificate.method == Method::theorem_2_3);
    CHECK(back.certificate.seed == 42U);
    CHECK(back.certificate.root == 3);
    CHECK(verify_certificate(back.graph, back.certificate));
}

TEST_CASE("method names round trip")
{
    for (auto m : {Method::exact_search, Method::theorem_2_3, Method::theorem_3_2, Method::family_formula,
                   Method::repair})
        CHECK(parse_method(method_name(m)) == m);
    CHECK_FALSE(parse_method("guess"));
}

TEST_CASE("certificate JSON schema errors")
{
    using nlohmann::json;
    CHECK_THROWS_AS(certificate_from_json(json::object()), Error);
    CHECK_THROWS_AS(certificate_from_json(json{{"graph6", "Bw"}, {"labels", {1, 2}}, {"distinguishing", true},
                                               {"method", "exact-search"}}),
                    Error);
    CHECK_THROWS_AS(certificate_from_json(json{{"graph6", "Bw"}, {"labels", {1, 2, 3}}, {"distinguishing", true},
                                               {"method", "oracle"}}),
                    Error);
    CHECK_THROWS_AS(certificate_from_json(json{{"graph6", "Bw"}, {"labels", "123"}, {"distinguishing", true},
                                               {"method", "exact-search"}}),
                    Error);
}
