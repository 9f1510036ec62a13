#include "twloop/common.hpp"

#include <sstream>

namespace twl {

std::vector<int> node_list(NodeSet s)
{
    std::vector<int> out;
    for (int i = 0; i < 32; ++i)
        if (has_node(s, i)) out.push_back(i);
    return out;
}

NodeSet node_set(const std::vector<int>& nodes)
{
    NodeSet s = 0;
    for (int i : nodes) {
        if (i < 0 || i >= 32) throw DomainError("node index out of range: " + std::to_string(i));
        s |= node_bit(i);
    }
    return s;
}

std::string to_string(const Vec& v, char sep)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

std::string to_string(const Rational& r)
{
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Vec parse_csv_ints(const std::string& s)
{
    Vec out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t b = item.find_first_not_of(" \t");
        std::size_t e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw DomainError("empty entry in integer list '" + s + "'");
        item = item.substr(b, e - b + 1);
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(item, &used);
        } catch (const std::exception&) {
            throw DomainError("not an integer: '" + item + "'");
        }
        if (used != item.size()) throw DomainError("not an integer: '" + item + "'");
        out.push_back(v);
    }
    return out;
}

}  // namespace twl
