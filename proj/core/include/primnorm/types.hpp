#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace primnorm {

/// A point of the permuted set. Internally 0-based; 1-based only in I/O.
using Point = std::uint32_t;

/// Exact group orders and order bounds.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace primnorm
