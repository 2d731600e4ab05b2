#pragma once

#include <dindex/graph.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace dindex::testing {

inline std::string data_path(const std::string& name) { return std::string(DINDEX_TEST_DATA) + "/" + name; }

inline std::vector<Graph> read_corpus(const std::string& name)
{
    std::ifstream in(data_path(name));
    if (! in)
        throw Error("missing corpus file " + name);
    std::stringstream ss;
    ss << in.rdbuf();
    std::vector<Graph> out;
    for (const auto& line : split_graph6_lines(ss.str()))
        out.push_back(parse_graph6(line.text));
    return out;
}

}  // namespace dindex::testing
