#ifndef SYMTREE_BIG_INT_H_
#define SYMTREE_BIG_INT_H_

#include <boost/multiprecision/cpp_int.hpp>

namespace symtree {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace symtree

#endif  // SYMTREE_BIG_INT_H_
