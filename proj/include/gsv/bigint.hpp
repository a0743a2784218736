#ifndef GSV_BIGINT_HPP
#define GSV_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace gsv {

// All linear algebra in this project is exact; no floating point anywhere.
using Int = boost::multiprecision::cpp_int;

}  // namespace gsv

#endif
