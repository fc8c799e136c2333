// Generated by tools/gen_cases.py. Do not edit by hand.

#include "case_fields.hpp"

#include <cmath>

namespace smhd::cases {

using std::sin;
using std::cos;
using std::exp;
using std::pow;

#ifndef M_PI
#define M_PI 3.14159265358979323846
#endif

CaseSample decay_trig(const Vec3& p, double t) {
  const double x = p.x();
  const double y = p.y();
  const double z = p.z();
  (void)x; (void)y; (void)z; (void)t;
  const double c0 = M_PI*y;
  const double c1 = sin(c0);
  const double c2 = M_PI*z;
  const double c3 = sin(c2);
  const double c4 = exp(-t);
  const double c5 = c3*c4;
  const double c6 = c1*c5;
  const double c7 = M_PI*x;
  const double c8 = sin(c7);
  const double c9 = c5*c8;
  const double c10 = c4*c8;
  const double c11 = c1*c10;
  const double c12 = cos(c0);
  const double c13 = cos(c2);
  const double c14 = -c13;
  const double c15 = M_PI*c10;
  const double c16 = cos(c7);
  const double c17 = M_PI*c1*c4;
  const double c18 = M_PI*M_PI;
  const double c19 = 2*c18;
  const double c20 = c3*c3*c3;
  const double c21 = c8*c8*c8;
  const double c22 = c1*c1*c1;
  const double c23 = exp(-1.0/2.0*t);
  const double c24 = c22*c23;
  const double c25 = c20*c21*c24;
  const double c26 = (1.0/2.0)*c25;
  const double c27 = -c26;
  const double c28 = (1.0/4.0)*c25;
  const double c29 = c1*c13;
  const double c30 = c12*c3;
  const double c31 = c3*c3;
  const double c32 = c1*c1;
  const double c33 = c21*c32;
  const double c34 = c31*c33;
  const double c35 = 3*c23;
  const double c36 = M_PI*c35;
  const double c37 = c8*c8;
  const double c38 = c13*c8;
  const double c39 = c16*c3;
  const double c40 = c38 + c39;
  const double c41 = M_PI*c24*c31*c37*c40;
  const double c42 = c12*c8;
  const double c43 = c20*c37;
  const double c44 = c32*c43;
  const double c45 = c13*c13;
  const double c46 = c32*c8;
  const double c47 = c12*c12;
  const double c48 = c31*c8;
  const double c49 = (3.0/2.0)*c13;
  const double c50 = c32*c39;
  const double c51 = c3*c37;
  const double c52 = c18*c35;
  const double c53 = c1*c52;
  const double c54 = 2*c1;
  const double c55 = c37*c54;
  const double c56 = c16*c16;
  const double c57 = c31*c54;
  const double c58 = c30*c37;
  const double c59 = c3*c32;
  const double c60 = c59*c8;
  const double c61 = 3*c12;
  const double c62 = c29*c37;
  const double c63 = c12*c12*c12;
  const double c64 = c13*c13*c13;
  const double c65 = 2*c22;
  const double c66 = (13.0/2.0)*c12;
  const double c67 = c13*c31;
  const double c68 = c22*c37;
  const double c69 = c20*c32;
  const double c70 = 6*c47;
  const double c71 = 3*c45;
  const double c72 = M_PI*M_PI*M_PI*c35;
  const double c73 = c16*c16*c16;
  const double c74 = 3*c16;
  const double c75 = 3*c13;
  const double c76 = c31*c32;
  const double c77 = c1*c16;
  const double c78 = 2*c29 + c30;
  const double c79 = (3.0/4.0)*M_PI*c23;
  const double c80 = c42 - 2*c77;
  const double c81 = 2*c76;
  const double c82 = c12*c40;
  const double c83 = 4*c1;
  const double c84 = (1.0/2.0)*c37;
  const double c85 = c32*c84;
  const double c86 = 2*c3;
  const double c87 = 6*c12;
  const double c88 = c31*c84;
  const double c89 = 3*c18*exp(-3.0/2.0*t);
  const double c90 = c1*c89;
  const double c91 = 2*c37;
  const double c92 = c78*c91;
  const double c93 = 2*c8;
  const double c94 = (1.0/2.0)*c76;
  CaseSample s;
  s.u = Vec3(c6, c9, c11);
  s.curl_u = Vec3(c15*(c12 + c14), c17*(-c14 - c16), M_PI*c5*(-c12 + c16));
  s.curlcurl_u = Vec3(c19*c6, c19*c9, c11*c19);
  s.dt_u = Vec3(-c6, -c9, -c11);
  s.A = Vec3(c26, c25, c27);
  s.dt_A = Vec3(-c28, c27, c28);
  s.B = Vec3(-c34*c36*(c29 + (1.0/2.0)*c30), (3.0/2.0)*c41, c36*c44*(c1*c16 - 1.0/2.0*c42));
  s.curl_B = Vec3(c51*c53*(3*c1*c12*c16*c31 + c31*c32*c8 - c45*c46 - c47*c48 - c49*c50), c52*c60*(2*c1*c31*c37 + (3.0/2.0)*c12*c16*c31*c8 - c45*c55 - c49*c58 - c56*c57), c48*c53*((3.0/2.0)*c16*c32*c38 - c37*c59 + c47*c51 + c56*c59 + c61*c62));
  s.curlcurl_B = Vec3(c72*c8*(6*c22*c56*c67 + c31*c62*c70 + c32*c58*c71 + c37*c64*c65 + c43*c63 - c44*c66 + c56*c61*c69 - 13*c67*c68), c1*c72*((13.0/2.0)*c13*c21*c31*c32 + (13.0/2.0)*c16*c20*c32*c37 - c21*c31*c47*c75 - c33*c64 - c37*c50*c71 - 3*c38*c56*c76 - c43*c47*c74 - c69*c73), c3*c72*(3*c12*c21*c32*c45 + 3*c12*c31*c32*c56*c8 + 13*c16*c22*c31*c37 - 6*c16*c45*c68 + c21*c31*c63 - c31*c37*c70*c77 - c31*c65*c73 - c34*c66));
  s.dt_B = Vec3(c34*c78*c79, -3.0/4.0*c41, c44*c79*c80);
  s.curl_uxB = Vec3(c51*c90*(-c13*c80*c81 + c81*c82 + c85*(c30*c75 + c45*c83 - c57) + c88*(c29*c87 + c47*c86 - c59)), -c60*c89*(c16*c31*c92 + c67*c80*c91 + c85*(c39*c75 + c45*c93 - c48) + c94*(c38*c74 - c51 + c56*c86)), c48*c90*(-c16*c32*c92 + c32*c82*c91 - c88*(c46 - c47*c93 + c77*c87) + c94*(c42*c74 + c55 - c56*c83)));
  s.grad_P = Vec3(c17*c39, c15*c30, c15*c29);
  s.P = c6*c8;
  return s;
}

CaseSample static_b(const Vec3& p, double t) {
  const double x = p.x();
  const double y = p.y();
  const double z = p.z();
  (void)x; (void)y; (void)z; (void)t;
  const double c0 = M_PI*x;
  const double c1 = sin(c0);
  const double c2 = c1*c1*c1;
  const double c3 = M_PI*y;
  const double c4 = sin(c3);
  const double c5 = c4*c4*c4;
  const double c6 = M_PI*z;
  const double c7 = sin(c6);
  const double c8 = c7*c7*c7;
  const double c9 = c2*c5*c8;
  const double c10 = (1.0/2.0)*c9;
  const double c11 = cos(c6);
  const double c12 = c11*c4;
  const double c13 = cos(c3);
  const double c14 = (1.0/2.0)*c13;
  const double c15 = c7*c7;
  const double c16 = c4*c4;
  const double c17 = c16*c2;
  const double c18 = c15*c17;
  const double c19 = 3*M_PI;
  const double c20 = c1*c11;
  const double c21 = cos(c0);
  const double c22 = c21*c7;
  const double c23 = c1*c1;
  const double c24 = c15*c23;
  const double c25 = c23*c8;
  const double c26 = c16*c25;
  const double c27 = c11*c11;
  const double c28 = c16*c27;
  const double c29 = c13*c13;
  const double c30 = c1*c15;
  const double c31 = (3.0/2.0)*c11;
  const double c32 = c23*c7;
  const double c33 = 3*M_PI*M_PI;
  const double c34 = c33*c4;
  const double c35 = 2*c4;
  const double c36 = c21*c21;
  const double c37 = c15*c36;
  const double c38 = c16*c7;
  const double c39 = c16*c20;
  const double c40 = 3*c13;
  const double c41 = c12*c23;
  const double c42 = c13*c13*c13;
  const double c43 = c11*c11*c11;
  const double c44 = 2*c5;
  const double c45 = (13.0/2.0)*c13;
  const double c46 = c11*c5;
  const double c47 = c16*c8;
  const double c48 = 3*M_PI*M_PI*M_PI;
  const double c49 = c21*c21*c21;
  const double c50 = 3*c29;
  const double c51 = 6*c23;
  CaseSample s;
  s.u = Vec3(0, 0, 0);
  s.curl_u = Vec3(0, 0, 0);
  s.curlcurl_u = Vec3(0, 0, 0);
  s.dt_u = Vec3(0, 0, 0);
  s.A = Vec3(c10, c9, -c10);
  s.dt_A = Vec3(0, 0, 0);
  s.B = Vec3(-c18*c19*(c12 + c14*c7), (3.0/2.0)*M_PI*c24*c5*(c20 + c22), c19*c26*(-c1*c14 + c21*c4));
  s.curl_B = Vec3(c32*c34*(c1*c15*c16 - c1*c28 + 3*c13*c15*c21*c4 - c16*c22*c31 - c29*c30), c1*c33*c38*((3.0/2.0)*c1*c13*c15*c21 - c13*c31*c32 + 2*c15*c23*c4 - c23*c27*c35 - c35*c37), c30*c34*((3.0/2.0)*c21*c39 - c23*c38 + c29*c32 + c36*c38 + c40*c41));
  s.curlcurl_B = Vec3(c1*c48*(6*c15*c29*c41 + c23*c43*c44 - 13*c24*c46 + c25*c42 - c26*c45 + c28*c32*c40 + c36*c40*c47 + 6*c37*c46), c4*c48*((13.0/2.0)*c11*c15*c16*c2 - c11*c15*c2*c50 + (13.0/2.0)*c16*c21*c23*c8 - c17*c43 - c21*c25*c50 - 3*c22*c23*c28 - 3*c37*c39 - c47*c49), c48*c7*(3*c1*c13*c15*c16*c36 + 3*c13*c16*c2*c27 + c15*c2*c42 + 13*c15*c21*c23*c5 - c15*c21*c29*c4*c51 - c15*c44*c49 - c18*c45 - c21*c27*c5*c51));
  s.dt_B = Vec3(0, 0, 0);
  s.curl_uxB = Vec3(0, 0, 0);
  s.grad_P = Vec3(0, 0, 0);
  s.P = 0;
  return s;
}

CaseSample helical(const Vec3& p, double t) {
  const double x = p.x();
  const double y = p.y();
  const double z = p.z();
  (void)x; (void)y; (void)z; (void)t;
  const double c0 = M_PI*y;
  const double c1 = sin(c0);
  const double c2 = M_PI*z;
  const double c3 = cos(c2);
  const double c4 = c1*c3;
  const double c5 = cos(c0);
  const double c6 = sin(c2);
  const double c7 = 2*c6;
  const double c8 = c5*c7;
  const double c9 = c4 + c8;
  const double c10 = 2*c9;
  const double c11 = M_PI*x;
  const double c12 = sin(c11);
  const double c13 = c12*c12;
  const double c14 = c1*c6;
  const double c15 = c13*c14;
  const double c16 = c12*c3;
  const double c17 = cos(c11);
  const double c18 = c17*c7;
  const double c19 = -c18;
  const double c20 = c16 + c19;
  const double c21 = c12*c6;
  const double c22 = c1*c1;
  const double c23 = 2*c22;
  const double c24 = c12*c5;
  const double c25 = c1*c17;
  const double c26 = c24 + c25;
  const double c27 = c1*c12;
  const double c28 = c6*c6;
  const double c29 = 2*c28;
  const double c30 = c3*c3;
  const double c31 = c12*c30;
  const double c32 = c22*c31;
  const double c33 = c5*c5;
  const double c34 = c12*c28;
  const double c35 = c33*c34;
  const double c36 = c28*c5;
  const double c37 = 2*c25;
  const double c38 = c36*c37;
  const double c39 = M_PI*M_PI;
  const double c40 = 2*c39;
  const double c41 = c1*c30;
  const double c42 = c13*c41;
  const double c43 = c17*c17;
  const double c44 = c1*c28;
  const double c45 = c43*c44;
  const double c46 = c13*c44;
  const double c47 = c17*c28;
  const double c48 = 2*c24;
  const double c49 = c47*c48;
  const double c50 = c13*c6;
  const double c51 = c3*c50;
  const double c52 = c33*c6;
  const double c53 = c13*c52;
  const double c54 = c22*c6;
  const double c55 = c43*c54;
  const double c56 = c13*c5;
  const double c57 = 4*c6;
  const double c58 = c43*c5;
  const double c59 = c44*c58;
  const double c60 = c41*c56;
  const double c61 = c3*c43;
  const double c62 = c54*c61;
  const double c63 = c13*c3;
  const double c64 = c52*c63;
  const double c65 = 4*c54*c63;
  const double c66 = c62 + c64 - c65;
  const double c67 = 4*M_PI*M_PI*M_PI;
  const double c68 = c17*c22;
  const double c69 = c34*c68;
  const double c70 = c17*c33;
  const double c71 = c34*c70;
  const double c72 = c31*c68;
  const double c73 = -c62 - c64 + c65;
  const double c74 = 4*c69;
  const double c75 = c71 + c72 - c74;
  const double c76 = 4*c44*c56;
  const double c77 = c59 + c60 - c76;
  const double c78 = 2*c4;
  const double c79 = 2*c16;
  const double c80 = c21*c22;
  const double c81 = c27*c28;
  const double c82 = -c31 + c34;
  const double c83 = c18*c3 + c82;
  const double c84 = c22*c83;
  const double c85 = c12*c22;
  const double c86 = c12*c33;
  const double c87 = c37*c5;
  const double c88 = c85 - c86 + c87;
  const double c89 = -c16*c54 + c24*c44 + c28*c88;
  const double c90 = c84 + c89;
  const double c91 = 2*M_PI;
  const double c92 = c4*c50;
  const double c93 = c25*c34;
  const double c94 = c1*c13;
  const double c95 = c1*c43;
  const double c96 = c17*c48;
  const double c97 = c94 - c95 + c96;
  const double c98 = c3*c8 - c41 + c44;
  const double c99 = c13*c98;
  const double c100 = c28*c97 + c92 - c93 + c99;
  const double c101 = c5*c78;
  const double c102 = c101 - c52 + c54;
  const double c103 = c102*c13;
  const double c104 = c17*c79;
  const double c105 = c43*c6;
  const double c106 = -c105 + c50;
  const double c107 = c104 + c106;
  const double c108 = c107*c22 - c14*c56 + c21*c68;
  const double c109 = c103 + c108;
  const double c110 = c30*c5;
  const double c111 = c4*c7;
  const double c112 = c110 + c111 - c36;
  const double c113 = 2*c5;
  const double c114 = c113*c14;
  const double c115 = c114 - c22*c3 + c3*c33;
  const double c116 = c13*c30;
  const double c117 = c13*c28;
  const double c118 = c117*c23;
  const double c119 = -c116*c22 + c118 + c25*c28*c48;
  const double c120 = c104*c54 - c117*c33;
  const double c121 = 2*c17;
  const double c122 = c121*c21;
  const double c123 = c122 + c61 - c63;
  const double c124 = 2*c54;
  const double c125 = c17*c30;
  const double c126 = c16*c7;
  const double c127 = c125 + c126 - c47;
  const double c128 = c28*c43;
  const double c129 = c101*c50 - c128*c22;
  const double c130 = c1*c48;
  const double c131 = c130 - c68 + c70;
  const double c132 = 2*c34;
  const double c133 = c12*c37;
  const double c134 = c133 - c56 + c58;
  const double c135 = 2*c44;
  const double c136 = c16*c17;
  const double c137 = c22*(-c116 + c117 - c128 + c136*c57 + c30*c43);
  const double c138 = c24*c25;
  const double c139 = c28*(c13*c22 - c13*c33 + 4*c138 - c22*c43 + c33*c43);
  const double c140 = c3*c54;
  const double c141 = c22*c34;
  const double c142 = -c32;
  const double c143 = -c35;
  const double c144 = c141 + c142 + c143 + c31*c33;
  const double c145 = c4*c5;
  const double c146 = c13*(c145*c57 + c22*c28 - c22*c30 - c28*c33 + c30*c33);
  const double c147 = c105*c3;
  const double c148 = -c42;
  const double c149 = -c45;
  const double c150 = c148 + c149 + c41*c43 + c46;
  const double c151 = c13*c54 - c53;
  const double c152 = c151 + c43*c52 - c55;
  const double c153 = -c83;
  const double c154 = c153*c22 - c89;
  const double c155 = 2*c154;
  const double c156 = c26*c3;
  const double c157 = c3*c57;
  const double c158 = -c102*c13 - c108;
  const double c159 = -c97;
  const double c160 = c159*c28 - c92 + c93 - c99;
  const double c161 = 2*c160;
  const double c162 = c3*c7;
  const double c163 = c111*c24 + c141;
  const double c164 = c1*c113;
  const double c165 = -c1*c43*c5 - c12*c17*c22 + c17*c86 + c5*c94;
  const double c166 = -c1*c28*c5 + c140 - c3*c33*c6 + c41*c5;
  const double c167 = c145*c50;
  const double c168 = c13*c166 - c167;
  const double c169 = c136*c54 + c22*(-c147 + c17*c31 - c17*c34 + c51);
  const double c170 = -c168 - c169;
  const double c171 = 2*c13;
  const double c172 = c17*c21*c78 + c46;
  const double c173 = c12*c121;
  const double c174 = c12*c9;
  const double c175 = 2*c20;
  const double c176 = -c1*c12*c17*c28*c5 + c165*c28;
  const double c177 = c169 + c176;
  const double c178 = -c109;
  const double c179 = 2*c26;
  CaseSample s;
  s.u = Vec3(M_PI*c10*c15, M_PI*c20*c21*c23, -M_PI*c26*c27*c29);
  s.curl_u = Vec3(c12*c40*(2*c12*c22*c28 + 4*c17*c22*c3*c6 - c32 - c35 - c38), c1*c40*(c42 + c45 - 2*c46 + c49 + 4*c5*c51), c39*c57*(c12*c17*c22*c3 + 2*c13*c22*c6 - c4*c56 - c53 - c55));
  s.curlcurl_u = Vec3(c67*(8*c1*c13*c28*c5 - 2*c59 - 2*c60 - c66), c67*(-8*c69 + 2*c71 + 2*c72 + c73), c67*(c75 + c77));
  s.dt_u = Vec3(0, 0, 0);
  s.A = Vec3(c15*(c14 - c78 + c8), c80*(c19 + c21 + c79), c81*(c27 + c37 - c48));
  s.dt_A = Vec3(0, 0, 0);
  s.B = Vec3(c12*c90*c91, c1*c100*c91, M_PI*c109*c7);
  s.curl_B = Vec3(c40*(c107*c114 - c111*c97 - 2*c112*c94 + 2*c115*c50 + c119 + c120), c40*(-c102*c122 + c119 - c123*c124 + c126*c88 + 2*c127*c85 + c129), c40*(c118 + c120 + c129 - c130*c83 - c131*c132 + c133*c98 + c134*c135));
  s.curlcurl_B = Vec3(c67*(2*c12*c84 + c12*(-c110*c37 + c144 + c38) + c12*(c121*c140 - c121*c3*c52 + c144) + c132*c88 + c137 + c139 - c59 - c60 + c66 + c76), c67*(2*c1*c99 + c1*(-c113*c147 + c113*c51 + c150) + c1*(-c125*c48 + c150 + c49) + c135*c97 + c139 + c146 + c73 + c75), c67*(c103*c7 + c107*c124 + c137 + c146 + c6*(c152 + c56*c78 - c58*c78) + c6*(c152 + c68*c79 - c70*c79) - c71 - c72 + c74 + c77));
  s.dt_B = Vec3(0, 0, 0);
  s.curl_uxB = Vec3(c15*c67*(c1*c20*(-c131*c29 + c143 + c153*c164 + c163) - c10*c170 - c10*(c138*c28 - c165*c28 + c168) + 2*c154*c20*c5 - c155*c156 - c158*(c157*c5 + c41 - c44) - c161*(c145 + c52 - c54) + c26*c6*(c127*c23 + c142 + c162*c88 + c163)), c67*c80*(-c155*(c106 + c136) - c156*c161 + c158*(c157*c17 + c82) + 2*c160*c17*c9 - c170*c175 - c174*(c134*c29 + c149 + c172 + c173*c98) - 2*c177*c20 - c26*c6*(-c112*c171 + c148 + c159*c162 + c172)), c67*c81*(-c1*c20*(c107*c164 + c115*c171 + c138*c7 + c151) + c10*c17*c178 - c100*(-c85 + c86 + c87) + c174*(2*c1*c12*c17*c5*c6 - c102*c173 - c123*c23 + c13*c22*c6 - c55) + c175*c178*c5 + c177*c179 + c179*(c13*c166 - c167 - c176) - c90*(-c94 + c95 + c96)));
  s.grad_P = Vec3(0, 0, 0);
  s.P = 0;
  return s;
}

}  // namespace smhd::cases
