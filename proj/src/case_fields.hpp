#pragma once

#include "smhd/types.hpp"

namespace smhd::cases {

// Raw closed-form pieces of a manufactured solution at one space-time point.
// Parameter-dependent combinations (E, f, gB) are formed in verification.cpp.
struct CaseSample {
  Vec3 u = Vec3::Zero();
  Vec3 curl_u = Vec3::Zero();
  Vec3 curlcurl_u = Vec3::Zero();
  Vec3 dt_u = Vec3::Zero();
  Vec3 A = Vec3::Zero();
  Vec3 dt_A = Vec3::Zero();
  Vec3 B = Vec3::Zero();
  Vec3 curl_B = Vec3::Zero();
  Vec3 curlcurl_B = Vec3::Zero();
  Vec3 dt_B = Vec3::Zero();
  Vec3 curl_uxB = Vec3::Zero();
  Vec3 grad_P = Vec3::Zero();
  double P = 0.0;
};

CaseSample decay_trig(const Vec3& p, double t);
CaseSample static_b(const Vec3& p, double t);
CaseSample helical(const Vec3& p, double t);

}  // namespace smhd::cases
