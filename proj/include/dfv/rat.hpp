#ifndef DFV_RAT_HPP
#define DFV_RAT_HPP

/* Exact rational scalars and small vector helpers used throughout.
   All arithmetic in the library is exact; GMP does the heavy lifting. */

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace dfv {

using Rat = mpq_class;
using Int = mpz_class;

using VecI = std::vector<int>;  // integer coordinate vectors (root coords)
using VecQ = std::vector<Rat>;  // rational coordinate vectors (weights)

// Build an error with a formatted message; every throw in the library goes
// through here so failures always carry context.
template <class... Parts>
[[noreturn]] inline void fail(const Parts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  throw std::runtime_error(os.str());
}

inline VecQ to_vecq(const VecI& v) {
  VecQ out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  return out;
}

inline VecQ vq_zero(size_t n) { return VecQ(n, Rat(0)); }

inline VecQ vq_add(const VecQ& a, const VecQ& b) {
  if (a.size() != b.size()) fail("vq_add: size mismatch ", a.size(), " vs ", b.size());
  VecQ out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline VecQ vq_sub(const VecQ& a, const VecQ& b) {
  if (a.size() != b.size()) fail("vq_sub: size mismatch ", a.size(), " vs ", b.size());
  VecQ out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline VecQ vq_scale(const Rat& c, const VecQ& a) {
  VecQ out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
  return out;
}

inline Rat vq_dot(const VecQ& a, const VecQ& b) {
  if (a.size() != b.size()) fail("vq_dot: size mismatch ", a.size(), " vs ", b.size());
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool vq_is_zero(const VecQ& a) {
  for (const Rat& x : a)
    if (x != 0) return false;
  return true;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline std::string vq_str(const VecQ& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

inline std::string vi_str(const VecI& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

struct VecIHash {
  size_t operator()(const VecI& v) const {
    size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

struct VecQHash {
  size_t operator()(const VecQ& v) const {
    std::hash<std::string> hs;
    size_t h = 14695981039346656037ull;
    for (const Rat& x : v) h = h * 1099511628211ull ^ hs(x.get_str());
    return h;
  }
};

}  // namespace dfv

#endif
