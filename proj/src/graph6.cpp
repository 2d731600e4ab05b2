#include <dindex/graph.hpp>

#include <string>

namespace dindex {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int decode_char(char c)
{
    int v = static_cast<unsigned char>(c);
    if (v < 63 || v > 126)
        throw Error(std::string("graph6 character outside 63..126: code ") + std::to_string(v));
    return v - 63;
}

}  // namespace

Graph parse_graph6(std::string_view line)
{
    if (line.starts_with(kHeader))
        line.remove_prefix(kHeader.size());
    while (! line.empty() && (line.back() == '\n' || line.back() == '\r'))
        line.remove_suffix(1);
    if (line.empty())
        throw Error("empty graph6 line");

    std::size_t pos = 0;
    long n = 0;
    if (line[0] != '~') {
        n = decode_char(line[0]);
        pos = 1;
    }
    else if (line.size() >= 2 && line[1] == '~') {
        // 8-byte form covers n >= 258048, far beyond the vertex cap.
        throw Error("graph6 vertex count beyond 258047 is not supported");
    }
    else {
        if (line.size() < 4)
            throw Error("truncated graph6 size field");
        for (std::size_t i = 1; i <= 3; ++i)
            n = (n << 6) | decode_char(line[i]);
        pos = 4;
    }

    std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t need = (bits + 5) / 6;
    if (line.size() - pos != need)
        throw Error("graph6 body has " + std::to_string(line.size() - pos) + " bytes, expected " +
                    std::to_string(need) + " for n=" + std::to_string(n));

    std::vector<std::pair<int, int>> pairs;
    std::size_t k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            int byte = decode_char(line[pos + k / 6]);
            if ((byte >> (5 - k % 6)) & 1)
                pairs.emplace_back(i, j);
        }
    for (std::size_t b = pos; b < line.size(); ++b)
        decode_char(line[b]);
    return build_graph(static_cast<int>(n), pairs);
}

std::string write_graph6(const Graph& g)
{
    int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    }
    else {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
    int acc = 0, filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = filled = 0;
            }
        }
    if (filled > 0)
        out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
    return out;
}

std::vector<Graph6Line> split_graph6_lines(std::string_view text)
{
    std::vector<Graph6Line> out;
    std::size_t line_no = 0;
    while (! text.empty()) {
        auto eol = text.find('\n');
        auto line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;
        while (! line.empty() && (line.back() == '\r' || line.back() == ' '))
            line.remove_suffix(1);
        if (line.starts_with(kHeader))
            line.remove_prefix(kHeader.size());
        if (line.empty())
            continue;
        out.push_back({line_no, std::string(line)});
    }
    return out;
}

}  // namespace dindex
