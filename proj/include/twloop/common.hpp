#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace twl {

using i64 = std::int64_t;
using Vec = std::vector<i64>;
using IMat = std::vector<Vec>;
using Rational = boost::rational<i64>;

// Node sets are bitmasks over the affine node indices 0..l (l <= 30).
using NodeSet = std::uint32_t;

inline bool has_node(NodeSet s, int i) { return (s >> i) & 1u; }
inline NodeSet node_bit(int i) { return NodeSet(1) << i; }
inline NodeSet all_nodes(int count) { return count >= 32 ? ~NodeSet(0) : (node_bit(count) - 1); }
inline int node_count(NodeSet s) { return __builtin_popcount(s); }
std::vector<int> node_list(NodeSet s);
NodeSet node_set(const std::vector<int>& nodes);

// Bad input to an operation (unknown name, malformed vector, violated precondition).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A configurable enumeration limit was hit.
class CapExceeded : public std::runtime_error {
public:
    CapExceeded(const std::string& what_cap, std::size_t limit)
        : std::runtime_error("cap exceeded: " + what_cap + " > " + std::to_string(limit)),
          cap_name(what_cap), cap(limit) {}
    std::string cap_name;
    std::size_t cap;
};

// The working precision (or lattice box) is too small to certify an answer.
class PrecisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string to_string(const Vec& v, char sep = ',');
std::string to_string(const Rational& r);
Vec parse_csv_ints(const std::string& s);

}  // namespace twl
