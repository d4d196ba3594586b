#ifndef MAXBETTI_BIGINT_HPP
#define MAXBETTI_BIGINT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>

namespace maxbetti {

using Int = mpz_class;
using Rat = mpq_class;

inline bool fits_int64(const Int& v) { return v.fits_slong_p(); }

inline int64_t to_int64(const Int& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("value does not fit in 64 bits");
  return static_cast<int64_t>(v.get_si());
}

}  // namespace maxbetti

#endif
