#pragma once

#include "gzkit/types.hpp"

#include <cmath>
#include <cstdio>
#include <string>

// Minimal check harness shared by the test executables: every CHECK prints
// its own failure line and the process exit code is the failure count.

namespace testkit {

inline int failures = 0;

inline void report(bool ok, const char* file, int line, const std::string& what) {
  if (!ok) {
    ++failures;
    std::printf("FAIL %s:%d  %s\n", file, line, what.c_str());
  }
}

inline double dist(const gzkit::CMatrix& a, const gzkit::CMatrix& b) {
  return (a - b).norm();
}

inline int summary(const char* name) {
  if (failures == 0) {
    std::printf("%s: ALL CHECKS PASSED\n", name);
    return 0;
  }
  std::printf("%s: %d CHECKS FAILED\n", name, failures);
  return 1;
}

}  // namespace testkit

#define CHECK(cond) testkit::report((cond), __FILE__, __LINE__, #cond)
#define CHECK_MSG(cond, msg) testkit::report((cond), __FILE__, __LINE__, std::string(#cond) + "  [" + (msg) + "]")
#define CHECK_NEAR(a, b, tol)                                                     \
  do {                                                                            \
    const double check_near_err_ = std::abs((a) - (b));                           \
    testkit::report(check_near_err_ <= (tol), __FILE__, __LINE__,                 \
                    std::string(#a " vs " #b ", |diff| = ") +                     \
                        std::to_string(check_near_err_));                         \
  } while (0)
#define CHECK_MATRIX_NEAR(a, b, tol)                                              \
  do {                                                                            \
    const double check_mat_err_ = testkit::dist((a), (b));                        \
    testkit::report(check_mat_err_ <= (tol), __FILE__, __LINE__,                  \
                    std::string(#a " vs " #b ", frobenius diff = ") +             \
                        std::to_string(check_mat_err_));                          \
  } while (0)
#define CHECK_THROWS(expr, extype)                                                \
  do {                                                                            \
    bool check_threw_ = false;                                                    \
    try {                                                                         \
      (void)(expr);                                                               \
    } catch (const extype&) {                                                     \
      check_threw_ = true;                                                        \
    } catch (...) {                                                               \
    }                                                                             \
    testkit::report(check_threw_, __FILE__, __LINE__,                             \
                    #expr " should throw " #extype);                              \
  } while (0)
