#include "catalog_data.hpp"

// Generated operator data tables; regenerate rather than editing by hand.
// Expressions use the operator expression language (t, u, a, b, w, Dt, Du).

namespace ttw::detail {

// Reference form of the 3rd-order integral commutator at k=1.
const char* const kI12ReferenceK1 =
    "32*u*(t-u)*Dt^2*Du+32*u*(t-u)*Dt*Du^2-8*(2*a*u-2*b*(t-u)-t+2*u)*Dt^2+16*(t-u)*(1+2*b-2*w*u)*Dt*Du"
    "+8*(1+2*a-2*w*(t-u))*u*Du^2+8*(2*u*(a+1)-2*b*(t-u)-t)*w*Dt+4*(1+2*a-2*w*(t-u))*(2*b+1)*Du";

// The 4th-order second integral at k=2 (corrected coefficients).
const char* const kI2ReferenceK2 =
    "16*((t^2-u)*Dt^4-8*(t^2-u)*u*Dt^2*Du^2+16*(t^2-u)*u^2*Du^4-2*(w*(t^2-u)-(2*a+1)*t)*Dt^3-4*((2*b+1)"
    "*t^2-2*(a+b+1)*u)*Dt^2*Du+8*u*(w*(t^2-u)-(2*a+1)*t)*Dt*Du^2+16*u*((2*b+3)*t^2-2*(a+b+2)*u)*Du^3+(w^2"
    "*(t^2-u)-3*(2*a+1)*w*t+(2*a+1)*(2*a+2*b+1))*Dt^2+4*(w*(2*b+1)*t^2-(2*a+1)*(2*b+1)*t-2*w*(a+b+1)*u)"
    "*Dt*Du+4*((2*b+1)*(2*b+3)*t^2+w*(2*a+1)*t*u-2*(2*a^2+6*a*b+2*b^2+8*a+7*b+5)*u)*Du^2+w*(2*a+1)*(w"
    "*t-2*a-2*b-1)*Dt+2*(2*a+1)*(2*b+1)*(w*t-2*a-2*b-1)*Du)";

// Reference form of the 5th-order integral commutator at k=2.
const char* const kI12ReferenceK2 =
    "512*u*(t^2-u)*Dt^4*Du+2048*t*u*(t^2-u)*Dt^3*Du^2-8192*t*u^2*(t^2-u)*Dt*Du^4-8192*u^3*(t^2-u)*Du^5"
    "+128*((2*b+1)*t^2-2*u*(a+b+1))*Dt^4+1024*(t^2-u)*((2*b+1)*t-w*u)*Dt^3*Du+3072*u*(-w*t^3+2*(a+1)*t^2"
    "+w*t*u-u)*Dt^2*Du^2+8192*t*u*(-(2*b+3)*t^2+2*(a+b+2)*u)*Dt*Du^3-2048*u^2*(-2*w*t^3+(4*a+10*b+29)"
    "*t^2+2*w*t*u-(10*(a+b)+32)*u)*Du^4-256*w*((2*b+1)*t^2-2*(a+b+1)*u)*Dt^3+(-1536*w*(2*b+1)*t^3+512"
    "*(w^2*u+6*(2*b+1)*(a+1))*t^2+1536*w*(2*b+1)*u*t-512*w^2*u^2-1536*(2*b+1)*u)*Dt^2*Du+1024*((w^2*u"
    "-2*(2*b+3)*(2*b+1))*t^3-6*u*w*(a+1)*t^2-(w^2*u^2-(8*a^2+24*a*b+8*b^2+40*a+28*b+24)*u)*t+3*w*u^2)"
    "*Dt*Du^2+2048*u*(2*w*(2*b+3)*t^3-2*(3+2*b)*(7+2*a+2*b)*t^2-4*w*(a+b+2)*u*t+(57+8*a^2+20*a*b+8*b^2"
    "+46*(a+b))*u)*Du^3+128*w^2*((2*b+1)*t^2-2*(a+b+1)*u)*Dt^2+512*(2*b+1)*(w^2*t^3-6*w*(a+1)*t^2+(8*a^2"
    "+8*a*(b+2)+4*b-u*w^2+6)*t+3*w*u)*Dt*Du+(1024*w*(2*b+3)*(2*b+1)*t^3+(1024*w^2*(a+1)*u-512*(2*b+3)"
    "*(2*b+1)*(4*a+2*b+9))*t^2-2048*w*(2*a^2+6*a*b+2*b^2+10*a+7*b+6)*u*t-512*w^2*u^2+512*(a^2*(48*b+68)"
    "+8*a^3+4*a*(12*b^2+42*b+35)+8*b^3+68*b^2+134*b+75)*u)*Du^2+256*(2*b+1)*(2*w^2*(a+1)*t^2-w^2*u-2*w"
    "*(4*a^2+4*a*b+8*a+2*b+3)*t+(2*a+1)*(4*a^2+8*a*(b+1)+4*b^2+8*b+3))*Du";

// [I1, I12] closure at k=1.
const GenTermEntry kClosureK1DoubleI1[] = {
    {1, 1, 0, 0,
     "8"},
    {1, 0, 0, 0,
     "16*a^2 + 16*a*b - 8*a + 8*b - 8"},
    {0, 1, 1, 0,
     "16"},
    {0, 1, 0, 0,
     "-16*a*w + 16*b*w"},
    {0, 0, 1, 0,
     "16*a^2 + 32*a*b + 16*b^2 - 16"},
    {0, 0, 0, 1,
     "-8"},
};
const std::size_t kClosureK1DoubleI1Size = sizeof(kClosureK1DoubleI1) / sizeof(kClosureK1DoubleI1[0]);

// [I2, I12] closure at k=1.
const GenTermEntry kClosureK1DoubleI2[] = {
    {1, 0, 1, 0,
     "-8"},
    {1, 0, 0, 0,
     "16*a*w + 8*w"},
    {0, 1, 0, 0,
     "-16*w^2"},
    {0, 0, 2, 0,
     "-8"},
    {0, 0, 1, 0,
     "16*a*w - 16*b*w"},
};
const std::size_t kClosureK1DoubleI2Size = sizeof(kClosureK1DoubleI2) / sizeof(kClosureK1DoubleI2[0]);

// Syzygy I12^2 = R at k=1.
const GenTermEntry kSyzygyK1[] = {
    {2, 0, 0, 0,
     "16*a^2 - 16*a - 12"},
    {1, 1, 1, 0,
     "16"},
    {1, 1, 0, 0,
     "-32*a*w - 16*w"},
    {1, 0, 1, 0,
     "32*a^2 + 32*a*b - 16*a + 16*b - 144"},
    {1, 0, 0, 1,
     "-8"},
    {1, 0, 0, 0,
     "-128*a*b*w + 192*a*w - 64*b*w + 96*w"},
    {0, 2, 0, 0,
     "16*w^2"},
    {0, 1, 2, 0,
     "16"},
    {0, 1, 1, 0,
     "-32*a*w + 32*b*w"},
    {0, 1, 0, 0,
     "-128*w^2"},
    {0, 0, 2, 0,
     "16*a^2 + 32*a*b + 16*b^2 - 144"},
    {0, 0, 1, 1,
     "-16"},
    {0, 0, 1, 0,
     "256*a*w - 256*b*w"},
    {0, 0, 0, 1,
     "16*a*w - 16*b*w"},
};
const std::size_t kSyzygyK1Size = sizeof(kSyzygyK1) / sizeof(kSyzygyK1[0]);

// [I1, I12] at k=1 with w=a=b=0.
const GenTermEntry kFreeDoubleI1K1[] = {
    {1, 1, 0, 0,
     "8"},
    {1, 0, 0, 0,
     "-8"},
    {0, 1, 1, 0,
     "16"},
    {0, 0, 1, 0,
     "-16"},
    {0, 0, 0, 1,
     "-8"},
};
const std::size_t kFreeDoubleI1K1Size = sizeof(kFreeDoubleI1K1) / sizeof(kFreeDoubleI1K1[0]);

// [I2, I12] at k=1 with w=a=b=0.
const GenTermEntry kFreeDoubleI2K1[] = {
    {1, 0, 1, 0,
     "-8"},
    {0, 0, 2, 0,
     "-8"},
};
const std::size_t kFreeDoubleI2K1Size = sizeof(kFreeDoubleI2K1) / sizeof(kFreeDoubleI2K1[0]);

// Syzygy at k=1 with w=a=b=0.
const GenTermEntry kFreeSyzygyK1[] = {
    {2, 0, 0, 0,
     "-12"},
    {1, 1, 1, 0,
     "16"},
    {1, 0, 1, 0,
     "-144"},
    {1, 0, 0, 1,
     "-8"},
    {0, 1, 2, 0,
     "16"},
    {0, 0, 2, 0,
     "-144"},
    {0, 0, 1, 1,
     "-16"},
};
const std::size_t kFreeSyzygyK1Size = sizeof(kFreeSyzygyK1) / sizeof(kFreeSyzygyK1[0]);

// [I1, I12] closure at k=2.
const GenTermEntry kClosureK2DoubleI1[] = {
    {2, 1, 0, 0,
     "-32"},
    {2, 0, 0, 0,
     "-256*a^2 - 256*a*b + 128*a - 128*b + 128"},
    {1, 1, 0, 0,
     "-256*a*w - 256*b*w - 128*w"},
    {1, 0, 0, 0,
     "-2048*a^3*w - 4096*a^2*b*w - 2048*a*b^2*w - 1024*a*b*w + 1536*a*w - 1024*b^2*w + 512*b*w + 512*w"},
    {0, 2, 0, 0,
     "128*w^2"},
    {0, 1, 1, 0,
     "64"},
    {0, 1, 0, 0,
     "1024*a^2*w^2 + 1024*a*b*w^2 - 512*w^2"},
    {0, 0, 1, 0,
     "256*a^2 + 512*a*b + 256*b^2 - 256"},
    {0, 0, 0, 1,
     "-32"},
};
const std::size_t kClosureK2DoubleI1Size = sizeof(kClosureK2DoubleI1) / sizeof(kClosureK2DoubleI1[0]);

// [I2, I12] closure at k=2.
const GenTermEntry kClosureK2DoubleI2[] = {
    {2, 0, 1, 0,
     "32"},
    {2, 0, 0, 0,
     "1024*a^2*w^2 - 512*a*w^2 - 512*w^2"},
    {1, 0, 1, 0,
     "256*a*w + 256*b*w + 128*w"},
    {1, 0, 0, 0,
     "8192*a^3*w^3 + 8192*a^2*b*w^3 - 4096*a*b*w^3 - 6144*a*w^3 - 4096*b*w^3 - 2048*w^3"},
    {0, 1, 1, 0,
     "-256*w^2"},
    {0, 1, 0, 0,
     "-4096*a^2*w^4 + 4096*w^4"},
    {0, 0, 2, 0,
     "-32"},
    {0, 0, 1, 0,
     "-1024*a^2*w^2 - 1024*a*b*w^2 + 512*w^2"},
    {0, 0, 0, 1,
     "128*w^2"},
};
const std::size_t kClosureK2DoubleI2Size = sizeof(kClosureK2DoubleI2) / sizeof(kClosureK2DoubleI2[0]);

// Syzygy I12^2 = R at k=2.
const GenTermEntry kSyzygyK2[] = {
    {4, 0, 0, 0,
     "256*a^2 - 256*a - 192"},
    {3, 0, 0, 0,
     "4096*a^3*w + 4096*a^2*b*w - 2048*a^2*w - 4096*a*b*w - 5120*a*w - 3072*b*w - 1536*w"},
    {2, 1, 1, 0,
     "-64"},
    {2, 1, 0, 0,
     "-2048*a^2*w^2 + 1024*a*w^2 + 1024*w^2"},
    {2, 0, 1, 0,
     "-512*a^2 - 512*a*b + 256*a - 256*b + 2304"},
    {2, 0, 0, 1,
     "32"},
    {2, 0, 0, 0,
     "16384*a^4*w^2 + 32768*a^3*b*w^2 + 16384*a^2*b^2*w^2 - 16384*a^2*b*w^2 + 8192*a^2*w^2 - 16384*a*b^2"
     "*w^2 - 57344*a*b*w^2 - 24576*a*w^2 - 12288*b^2*w^2 - 20480*b*w^2 - 15360*w^2"},
    {1, 1, 1, 0,
     "-512*a*w - 512*b*w - 256*w"},
    {1, 1, 0, 0,
     "-16384*a^3*w^3 - 16384*a^2*b*w^3 + 8192*a*b*w^3 + 12288*a*w^3 + 8192*b*w^3 + 4096*w^3"},
    {1, 0, 1, 0,
     "-4096*a^3*w - 8192*a^2*b*w - 4096*a*b^2*w - 2048*a*b*w + 19456*a*w - 2048*b^2*w + 17408*b*w + 9216"
     "*w"},
    {1, 0, 0, 1,
     "256*a*w + 256*b*w + 128*w"},
    {1, 0, 0, 0,
     "262144*a^3*w^3 + 131072*a^2*b*w^3 + 65536*a^2*w^3 - 131072*a*b^2*w^3 - 196608*a*b*w^3 - 131072*a"
     "*w^3 - 65536*b^2*w^3 - 131072*b*w^3 - 49152*w^3"},
    {0, 2, 1, 0,
     "256*w^2"},
    {0, 2, 0, 0,
     "4096*a^2*w^4 - 4096*w^4"},
    {0, 1, 2, 0,
     "64"},
    {0, 1, 1, 0,
     "2048*a^2*w^2 + 2048*a*b*w^2 - 9216*w^2"},
    {0, 1, 0, 1,
     "-256*w^2"},
    {0, 1, 0, 0,
     "-131072*a^2*w^4 + 131072*w^4"},
    {0, 0, 2, 0,
     "256*a^2 + 512*a*b + 256*b^2 - 2304"},
    {0, 0, 1, 1,
     "-64"},
    {0, 0, 1, 0,
     "-32768*a^2*w^2 + 32768*b^2*w^2"},
    {0, 0, 0, 1,
     "-1024*a^2*w^2 - 1024*a*b*w^2 + 4608*w^2"},
};
const std::size_t kSyzygyK2Size = sizeof(kSyzygyK2) / sizeof(kSyzygyK2[0]);

// [I1, I12] closure at k=3.
const GenTermEntry kClosureK3DoubleI1[] = {
    {3, 1, 0, 0,
     "72"},
    {3, 0, 0, 0,
     "1296*a^2 + 1296*a*b - 648*a + 648*b - 648"},
    {2, 1, 0, 0,
     "1296*a*w + 1296*b*w + 432*w"},
    {2, 0, 0, 0,
     "23328*a^3*w + 46656*a^2*b*w - 3888*a^2*w + 23328*a*b^2*w + 7776*a*b*w - 15552*a*w + 11664*b^2*w "
     "- 7776*b*w - 3888*w"},
    {1, 2, 0, 0,
     "-432*w^2"},
    {1, 1, 0, 0,
     "-2736*a^2*w^2 - 7776*a*b*w^2 + 4032*a*w^2 + 11664*b^2*w^2 - 10368*b*w^2 + 3312*w^2"},
    {1, 0, 0, 0,
     "80352*a^4*w^2 + 160704*a^3*b*w^2 + 12960*a^3*w^2 + 150336*a^2*b^2*w^2 - 44064*a^2*b*w^2 - 64800*a^2"
     "*w^2 + 139968*a*b^3*w^2 - 127008*a*b^2*w^2 - 10368*a*b*w^2 - 33696*a*w^2 + 69984*b^4*w^2 - 69984"
     "*b^3*w^2 - 95904*b^2*w^2 + 90720*b*w^2 + 5184*w^2"},
    {0, 2, 0, 0,
     "-5184*a*w^3 - 5184*b*w^3 - 1728*w^3"},
    {0, 1, 1, 0,
     "144"},
    {0, 1, 0, 0,
     "-62208*a^3*w^3 - 155520*a^2*b*w^3 - 15552*a^2*w^3 - 124416*a*b^2*w^3 - 31104*a*b*w^3 + 48384*a*w^3 "
     "- 31104*b^3*w^3 - 15552*b^2*w^3 + 44928*b*w^3 + 15552*w^3"},
    {0, 0, 1, 0,
     "1296*a^2 + 2592*a*b + 1296*b^2 - 1296"},
    {0, 0, 0, 1,
     "-72"},
};
const std::size_t kClosureK3DoubleI1Size = sizeof(kClosureK3DoubleI1) / sizeof(kClosureK3DoubleI1[0]);

// [I2, I12] closure at k=3.
const GenTermEntry kClosureK3DoubleI2[] = {
    {4, 0, 0, 0,
     "7200*a^2*w^2 + 3888*a*b*w^2 - 5256*a*w^2 - 3888*b^2*w^2 + 5832*b*w^2 - 3744*w^2"},
    {3, 1, 0, 0,
     "2592*a*w^3 + 2592*b*w^3 + 864*w^3"},
    {3, 0, 1, 0,
     "-72"},
    {3, 0, 0, 0,
     "191808*a^3*w^3 + 277344*a^2*b*w^3 - 74736*a^2*w^3 + 15552*a*b^2*w^3 + 2592*a*b*w^3 - 151200*a*w^3 "
     "- 69984*b^3*w^3 + 89424*b^2*w^3 - 67392*b*w^3 - 34992*w^3"},
    {2, 2, 0, 0,
     "648*w^4"},
    {2, 1, 0, 0,
     "10800*a^2*w^4 + 69984*a*b*w^4 + 55296*a*w^4 + 97200*b^2*w^4 - 31104*b*w^4 + 70416*w^4"},
    {2, 0, 1, 0,
     "-1296*a*w - 1296*b*w - 432*w"},
    {2, 0, 0, 0,
     "1566144*a^4*w^4 + 3281472*a^3*b*w^4 - 40032*a^3*w^4 + 2146176*a^2*b^2*w^4 - 562464*a^2*b*w^4 - 1389312"
     "*a^2*w^4 + 979776*a*b^3*w^4 - 1143072*a*b^2*w^4 - 1435968*a*b*w^4 - 541152*a*w^4 - 419904*b^4*w^4 "
     "+ 1049760*b^3*w^4 - 1244160*b^2*w^4 - 121824*b*w^4 - 13824*w^4"},
    {1, 2, 0, 0,
     "-15552*a*w^5 - 15552*b*w^5 - 5184*w^5"},
    {1, 1, 1, 0,
     "864*w^2"},
    {1, 1, 0, 0,
     "-476928*a^3*w^5 - 663552*a^2*b*w^5 + 286848*a^2*w^5 + 559872*a*b^2*w^5 - 269568*a*b*w^5 + 1092096"
     "*a*w^5 + 746496*b^3*w^5 - 404352*b^2*w^5 + 725760*b*w^5 + 314496*w^5"},
    {1, 0, 1, 0,
     "2736*a^2*w^2 + 7776*a*b*w^2 - 4032*a*w^2 - 11664*b^2*w^2 + 10368*b*w^2 - 3312*w^2"},
    {1, 0, 0, 1,
     "-432*w^2"},
    {1, 0, 0, 0,
     "3856896*a^5*w^5 + 9642240*a^4*b*w^5 + 1586304*a^4*w^5 + 11073024*a^3*b^2*w^5 + 124416*a^3*b*w^5 "
     "- 2097792*a^3*w^5 + 10326528*a^2*b^3*w^5 - 5349888*a^2*b^2*w^5 + 542592*a^2*b*w^5 - 266112*a^2*w^5 "
     "+ 6718464*a*b^4*w^5 - 4727808*a*b^3*w^5 - 1648512*a*b^2*w^5 + 6518016*a*b*w^5 + 1005696*a*w^5 + 1679616"
     "*b^5*w^5 - 839808*b^4*w^5 - 3888000*b^3*w^5 + 3763584*b^2*w^5 + 2484864*b*w^5 + 283392*w^5"},
    {0, 3, 0, 0,
     "-4608*w^6"},
    {0, 2, 0, 0,
     "-248832*a^2*w^6 - 622080*a*b*w^6 - 186624*a*w^6 - 248832*b^2*w^6 - 186624*b*w^6 - 252288*w^6"},
    {0, 1, 1, 0,
     "10368*a*w^3 + 10368*b*w^3 + 3456*w^3"},
    {0, 1, 0, 0,
     "-2985984*a^4*w^6 - 8957952*a^3*b*w^6 - 1492992*a^3*w^6 - 9704448*a^2*b^2*w^6 - 3732480*a^2*b*w^6 "
     "+ 1472256*a^2*w^6 - 4478976*a*b^3*w^6 - 2985984*a*b^2*w^6 + 622080*a*b*w^6 + 1161216*a*w^6 - 746496"
     "*b^4*w^6 - 746496*b^3*w^6 + 1223424*b^2*w^6 + 1078272*b*w^6 - 624384*w^6"},
    {0, 0, 2, 0,
     "-72"},
    {0, 0, 1, 0,
     "62208*a^3*w^3 + 155520*a^2*b*w^3 + 15552*a^2*w^3 + 124416*a*b^2*w^3 + 31104*a*b*w^3 - 48384*a*w^3 "
     "+ 31104*b^3*w^3 + 15552*b^2*w^3 - 44928*b*w^3 - 15552*w^3"},
    {0, 0, 0, 1,
     "-5184*a*w^3 - 5184*b*w^3 - 1728*w^3"},
};
const std::size_t kClosureK3DoubleI2Size = sizeof(kClosureK3DoubleI2) / sizeof(kClosureK3DoubleI2[0]);

// Syzygy I12^2 = R at k=3.
const GenTermEntry kSyzygyK3[] = {
    {6, 0, 0, 0,
     "1296*a^2 - 1296*a - 972"},
    {5, 0, 0, 0,
     "46656*a^3*w + 46656*a^2*b*w - 31104*a^2*w - 46656*a*b*w - 50544*a*w - 34992*b*w - 11664*w"},
    {4, 1, 0, 0,
     "7776*a^2*b^2*w^2 - 7776*a^2*b*w^2 - 14400*a^2*w^2 - 7776*a*b*w^2 + 10512*a*w^2 - 11664*b*w^2 + 7488"
     "*w^2"},
    {4, 0, 0, 0,
     "580608*a^4*w^2 + 500256*a^3*b*w^2 - 97200*a^3*w^2 + 559872*a^2*b^2*w^2 - 873504*a^2*b*w^2 - 273456"
     "*a^2*w^2 + 69984*a*b^3*w^2 - 454896*a*b^2*w^2 - 346032*a*b*w^2 - 320112*a*w^2 + 69984*b^3*w^2 - 1154736"
     "*b^2*w^2 + 557280*b*w^2 - 213840*w^2"},
    {3, 2, 0, 0,
     "-2592*a*w^3 - 2592*b*w^3 - 864*w^3"},
    {3, 1, 1, 0,
     "144"},
    {3, 1, 0, 0,
     "139968*a^3*b^2*w^3 - 171072*a^3*b*w^3 - 383616*a^3*w^3 + 139968*a^2*b^3*w^3 + 15552*a^2*b^2*w^3 "
     "- 611712*a^2*b*w^3 + 149472*a^2*w^3 + 139968*a*b^3*w^3 + 15552*a*b^2*w^3 - 5184*a*b*w^3 + 489024"
     "*a*w^3 + 139968*b^3*w^3 - 178848*b^2*w^3 + 321408*b*w^3 + 132192*w^3"},
    {3, 0, 1, 0,
     "2592*a^2 + 2592*a*b - 1296*a + 1296*b - 11664"},
    {3, 0, 0, 1,
     "-72"},
    {3, 0, 0, 0,
     "2892672*a^5*w^3 + 5785344*a^4*b*w^3 - 15552*a^4*w^3 + 5412096*a^3*b^2*w^3 - 5101056*a^3*b*w^3 + 7138368"
     "*a^3*w^3 + 5038848*a^2*b^3*w^3 - 12503808*a^2*b^2*w^3 + 7822656*a^2*b*w^3 - 6236352*a^2*w^3 + 2519424"
     "*a*b^4*w^3 - 4898880*a*b^3*w^3 - 5645376*a*b^2*w^3 - 3794688*a*b*w^3 - 7667136*a*w^3 + 2519424*b^4"
     "*w^3 - 4105728*b^3*w^3 + 2597184*b^2*w^3 - 3343680*b*w^3 - 1586304*w^3"},
    {2, 3, 0, 0,
     "-432*w^4"},
    {2, 2, 0, 0,
     "-10800*a^2*w^4 - 69984*a*b*w^4 - 55296*a*w^4 - 97200*b^2*w^4 + 31104*b*w^4 - 39312*w^4"},
    {2, 1, 1, 0,
     "2592*a*w + 2592*b*w + 864*w"},
    {2, 1, 0, 0,
     "-3132288*a^4*w^4 - 6562944*a^3*b*w^4 + 80064*a^3*w^4 - 4292352*a^2*b^2*w^4 + 1124928*a^2*w^4 - 1959552"
     "*a*b^3*w^4 + 2286144*a*b^2*w^4 + 7350912*a*b*w^4 + 5063616*a*w^4 + 839808*b^4*w^4 - 2099520*b^3*w^4 "
     "+ 9206784*b^2*w^4 - 1995840*b*w^4 + 5377536*w^4"},
    {2, 0, 1, 0,
     "46656*a^3*w + 93312*a^2*b*w - 7776*a^2*w + 46656*a*b^2*w + 15552*a*b*w - 217728*a*w + 23328*b^2*w "
     "- 202176*b*w - 69984*w"},
    {2, 0, 0, 1,
     "-1296*a*w - 1296*b*w - 432*w"},
    {2, 0, 0, 0,
     "4981824*a^6*w^4 + 9963648*a^5*b*w^4 + 1607040*a^5*w^4 + 13659840*a^4*b^2*w^4 - 5463936*a^4*b*w^4 "
     "+ 66956544*a^4*w^4 + 8678016*a^3*b^3*w^4 - 7174656*a^3*b^2*w^4 + 45816192*a^3*b*w^4 - 8512128*a^3"
     "*w^4 + 12457152*a^2*b^4*w^4 - 13436928*a^2*b^3*w^4 - 20300544*a^2*b^2*w^4 - 54836352*a^2*b*w^4 - 62047296"
     "*a^2*w^4 + 7558272*a*b^5*w^4 - 13716864*a*b^4*w^4 + 18475776*a*b^3*w^4 - 155323008*a*b^2*w^4 - 46583424"
     "*a*b*w^4 - 12254976*a*w^4 + 3779136*b^6*w^4 - 7558272*b^5*w^4 - 93498624*b^4*w^4 + 160403328*b^3"
     "*w^4 - 100118592*b^2*w^4 - 20051712*b*w^4 + 1804032*w^4"},
    {1, 3, 0, 0,
     "10368*a*w^5 + 10368*b*w^5 + 3456*w^5"},
    {1, 2, 1, 0,
     "-864*w^2"},
    {1, 2, 0, 0,
     "476928*a^3*w^5 + 663552*a^2*b*w^5 - 286848*a^2*w^5 - 559872*a*b^2*w^5 + 269568*a*b*w^5 - 1838592"
     "*a*w^5 - 746496*b^3*w^5 + 404352*b^2*w^5 - 1472256*b*w^5 - 563328*w^5"},
    {1, 1, 1, 0,
     "-5472*a^2*w^2 - 15552*a*b*w^2 + 8064*a*w^2 + 23328*b^2*w^2 - 20736*b*w^2 + 68832*w^2"},
    {1, 1, 0, 1,
     "864*w^2"},
    {1, 1, 0, 0,
     "-7713792*a^5*w^5 - 19284480*a^4*b*w^5 - 3172608*a^4*w^5 - 22146048*a^3*b^2*w^5 - 248832*a^3*b*w^5 "
     "- 23424768*a^3*w^5 - 20653056*a^2*b^3*w^5 + 10699776*a^2*b^2*w^5 - 28705536*a^2*b*w^5 + 23424768"
     "*a^2*w^5 - 13436928*a*b^4*w^5 + 9455616*a*b^3*w^5 + 63763200*a*b^2*w^5 - 27965952*a*b*w^5 + 69901056"
     "*a*w^5 - 3359232*b^5*w^5 + 1679616*b^4*w^5 + 68242176*b^3*w^5 - 34401024*b^2*w^5 + 40566528*b*w^5 "
     "+ 19837440*w^5"},
    {1, 0, 1, 0,
     "160704*a^4*w^2 + 321408*a^3*b*w^2 + 25920*a^3*w^2 + 300672*a^2*b^2*w^2 - 88128*a^2*b*w^2 - 295488"
     "*a^2*w^2 + 279936*a*b^3*w^2 - 254016*a*b^2*w^2 - 20736*a*b*w^2 - 648000*a*w^2 + 139968*b^4*w^2 - 139968"
     "*b^3*w^2 - 2431296*b^2*w^2 + 1674432*b*w^2 + 93312*w^2"},
    {1, 0, 0, 1,
     "2736*a^2*w^2 + 7776*a*b*w^2 - 4032*a*w^2 - 11664*b^2*w^2 + 10368*b*w^2 - 34416*w^2"},
    {1, 0, 0, 0,
     "-217976832*a^6*b*w^5 - 217976832*a^5*b^2*w^5 - 72658944*a^5*b*w^5 + 138848256*a^5*w^5 - 120932352"
     "*a^4*b^4*w^5 - 23887872*a^4*b^2*w^5 + 138848256*a^4*b*w^5 + 46282752*a^4*w^5 - 120932352*a^3*b^5"
     "*w^5 - 40310784*a^3*b^4*w^5 - 23887872*a^3*b^3*w^5 - 25878528*a^3*b^2*w^5 + 310542336*a^3*b*w^5 "
     "- 52254720*a^3*w^5 - 17915904*a^2*b^3*w^5 + 98537472*a^2*b^2*w^5 + 361801728*a^2*b*w^5 + 140838912"
     "*a^2*w^5 - 120932352*a*b^4*w^5 - 44789760*a*b^3*w^5 + 241864704*a*b^2*w^5 + 414056448*a*b*w^5 + 124416000"
     "*a*w^5 - 120932352*b^5*w^5 + 120932352*b^4*w^5 + 53747712*b^3*w^5 + 152285184*b^2*w^5 + 122425344"
     "*b*w^5 + 23887872*w^5"},
    {0, 4, 0, 0,
     "2304*w^6"},
    {0, 3, 0, 0,
     "165888*a^2*w^6 + 414720*a*b*w^6 + 41472*a*w^6 + 165888*b^2*w^6 + 124416*b*w^6 + 57600*w^6"},
    {0, 2, 1, 0,
     "-10368*a*w^3 - 10368*b*w^3 - 3456*w^3"},
    {0, 2, 0, 0,
     "2985984*a^4*w^6 + 8957952*a^3*b*w^6 + 1492992*a^3*w^6 + 9704448*a^2*b^2*w^6 + 3732480*a^2*b*w^6 "
     "- 10430208*a^2*w^6 + 4478976*a*b^3*w^6 + 2985984*a*b^2*w^6 - 24509952*a*b*w^6 - 10119168*a*w^6 + 746496"
     "*b^4*w^6 + 746496*b^3*w^6 - 10181376*b^2*w^6 - 10036224*b*w^6 - 18452736*w^6"},
    {0, 1, 2, 0,
     "144"},
    {0, 1, 1, 0,
     "-124416*a^3*w^3 - 311040*a^2*b*w^3 - 31104*a^2*w^3 - 248832*a*b^2*w^3 - 62208*a*b*w^3 + 843264*a"
     "*w^3 - 62208*b^3*w^3 - 31104*b^2*w^3 + 836352*b*w^3 + 279936*w^3"},
    {0, 1, 0, 1,
     "10368*a*w^3 + 10368*b*w^3 + 3456*w^3"},
    {0, 1, 0, 0,
     "-107495424*a^4*w^6 - 161243136*a^3*b*w^6 - 26873856*a^3*w^6 + 53747712*a^2*b^2*w^6 - 26873856*a^2"
     "*b*w^6 + 35831808*a^2*w^6 + 161243136*a*b^3*w^6 + 26873856*a*b^2*w^6 - 149299200*a*b*w^6 + 2985984"
     "*a*w^6 + 53747712*b^4*w^6 + 26873856*b^3*w^6 + 17915904*b^2*w^6 - 2985984*b*w^6 - 82280448*w^6"},
    {0, 0, 2, 0,
     "1296*a^2 + 2592*a*b + 1296*b^2 - 11664"},
    {0, 0, 1, 1,
     "-144"},
    {0, 0, 1, 0,
     "2239488*a^3*w^3 + 2239488*a^2*b*w^3 - 2239488*a*b^2*w^3 - 248832*a*w^3 - 2239488*b^3*w^3 + 248832"
     "*b*w^3"},
    {0, 0, 0, 1,
     "62208*a^3*w^3 + 155520*a^2*b*w^3 + 15552*a^2*w^3 + 124416*a*b^2*w^3 + 31104*a*b*w^3 - 421632*a*w^3 "
     "+ 31104*b^3*w^3 + 15552*b^2*w^3 - 418176*b*w^3 - 139968*w^3"},
};
const std::size_t kSyzygyK3Size = sizeof(kSyzygyK3) / sizeof(kSyzygyK3[0]);

// Syzygy at k=3 specialized to w=0.
const GenTermEntry kSyzygyOmega0K3[] = {
    {6, 0, 0, 0,
     "1296*a^2 - 1296*a - 972"},
    {3, 1, 1, 0,
     "144"},
    {3, 0, 1, 0,
     "2592*a^2 + 2592*a*b - 1296*a + 1296*b - 11664"},
    {3, 0, 0, 1,
     "-72"},
    {0, 1, 2, 0,
     "144"},
    {0, 0, 2, 0,
     "1296*a^2 + 2592*a*b + 1296*b^2 - 11664"},
    {0, 0, 1, 1,
     "-144"},
};
const std::size_t kSyzygyOmega0K3Size = sizeof(kSyzygyOmega0K3) / sizeof(kSyzygyOmega0K3[0]);

// Syzygy at k=4 specialized to w=0.
const GenTermEntry kSyzygyOmega0K4[] = {
    {8, 0, 0, 0,
     "4096*a^2 - 4096*a - 3072"},
    {4, 1, 1, 0,
     "-256"},
    {4, 0, 1, 0,
     "-8192*a^2 - 8192*a*b + 4096*a - 4096*b + 36864"},
    {4, 0, 0, 1,
     "128"},
    {0, 1, 2, 0,
     "256"},
    {0, 0, 2, 0,
     "4096*a^2 + 8192*a*b + 4096*b^2 - 36864"},
    {0, 0, 1, 1,
     "-256"},
};
const std::size_t kSyzygyOmega0K4Size = sizeof(kSyzygyOmega0K4) / sizeof(kSyzygyOmega0K4[0]);

// [I1, I12] closure at k=4.
const GenTermEntry kClosureK4DoubleI1[] = {
    {4, 1, 0, 0,
     "-128"},
    {4, 0, 0, 0,
     "-2048*(2*a+1)*(a+b-1)"},
    {0, 1, 1, 0,
     "256"},
    {0, 0, 1, 0,
     "4096*((a+b)^2-1)"},
    {0, 0, 0, 1,
     "-128"},
    {3, 1, 0, 0,
     "-1024*w*(4*(a+b)+1)"},
    {3, 0, 0, 0,
     "-16384*w*(2*a+1)*(4*(a+b)+1)*(a+b-1)"},
    {2, 2, 0, 0,
     "1024*w^2"},
    {2, 1, 0, 0,
     "-2048*w^2*(32*a^2+4*b+16*b^2-4*a*(3-4*b)-9)"},
    {2, 0, 0, 0,
     "-32768*w^2*(1+2*a)*(-1+a+b)*(-17-12*b+16*b^2+32*a^2+4*a*(1+12*b))"},
    {1, 2, 0, 0,
     "4096*w^3*(1+4*(a+b))"},
    {1, 1, 0, 0,
     "8192*w^3*(37+57*b+19*b^2-8*b^3-928*a^5+4*a^3*(215+117*b+35*b^2)+2*a^2*(79-13*b+29*b^2+6*b^3)-a*(52"
     "+104*b-56*b^2))"},
    {1, 0, 0, 0,
     "131072*w^3*(a+b-1)*(45+132*b+96*b^2-5*b^3-8*b^4-928*a^6-928*a^5*(1+b)+4*a^4*(199+117*b+35*b^2)+2"
     "*a^3*(477+555*b+333*b^2+76*b^3)+2*a^2*(67-58*b-52*b^2+35*b^3+6*b^4)+a*(27-51*b-125*b^2-16*b^3))"},
    {0, 3, 0, 0,
     "-2048*w^4"},
    {0, 2, 0, 0,
     "8192*w^4*(178+161*b+31*b^2+80*a^2+8*a*(14+3*b))"},
    {0, 1, 0, 0,
     "131072*w^4*(-174-161*b+140*b^2+161*b^3+31*b^4+88*a^4+16*a^3*(7+13*b)+a^2*(89+385*b+183*b^2)+2*a*("
     "-56+158*b+217*b^2+47*b^3))"},
};
const std::size_t kClosureK4DoubleI1Size = sizeof(kClosureK4DoubleI1) / sizeof(kClosureK4DoubleI1[0]);

// [I2, I12] closure at k=4.
const GenTermEntry kClosureK4DoubleI2[] = {
    {4, 0, 1, 0,
     "128"},
    {0, 0, 2, 0,
     "-128"},
    {5, 0, 0, 0,
     "4096*w^3*(27+13*b+3*b^2-8*b^3-928*a^5+4*a^3*(231+117*b+35*b^2)+2*a^2*(47-13*b+29*b^2+6*b^3)-8*a*(14"
     "+27*b+b^2))"},
    {4, 1, 0, 0,
     "8192*w^4*(167+161*b+31*b^2+104*a^2+8*a*(11+4*b))"},
    {4, 0, 0, 0,
     "-32768*w^4*(175-61*b-315*b^2-66*b^3+32*b^4+3712*a^6+928*a^5*(1+4*b)-16*a^4*(253+117*b+35*b^2)-4*a^3"
     "*(425+1199*b+561*b^2+152*b^3)-2*a^2*(-183+281*b+87*b^2+122*b^3+24*b^4)+a*(470+378*b+214*b^2-60*b^3))"},
    {3, 1, 0, 0,
     "131072*w^5*(70+408*b+336*b^2+66*b^3+464*a^5-2*a^3*(127+117*b+35*b^2)+a^2*(181+285*b-29*b^2-6*b^3)"
     "+2*a*(217+311*b+65*b^2))"},
    {3, 0, 1, 0,
     "1024*w*(1+4*a+4*b)"},
    {3, 0, 0, 0,
     "-65536*w^5*(1051+29696*a^7+3481*b-537*b^2-4700*b^3-1008*b^4+128*b^5-3712*a^6*(3-4*b)-32*a^5*(1361"
     "+352*b-324*b^2)+16*a^4*(17-1609*b-479*b^2-164*b^3)+4*a^3*(2905-5237*b-7459*b^2-2208*b^3-608*b^4)"
     "+2*a^2*(3071-4841*b-13087*b^2-2670*b^3-488*b^4-96*b^5)+4*a*(1103+1427*b-2019*b^2-2120*b^3-432*b^4))"},
    {2, 2, 0, 0,
     "-98304*w^6*(179+161*b+31*b^2+88*a^2+8*a*(13+4*b))"},
    {2, 1, 1, 0,
     "-2048*w^2"},
    {2, 1, 0, 0,
     "131072*w^6*(-1605-1023*b+2927*b^2+2692*b^3+560*b^4+7424*a^6+1856*a^5*(1+4*b)-32*a^4*(143+117*b+35"
     "*b^2)-8*a^3*(17+679*b+561*b^2+152*b^3)+a^2*(3548+7492*b+3324*b^2-488*b^3-96*b^4)+4*a*(-677+491*b"
     "+1365*b^2+284*b^3))"},
    {2, 0, 1, 0,
     "2048*w^2*(-9+4*b+16*b^2+32*a^2-4*a*(3-4*b))"},
    {2, 0, 0, 1,
     "1024*w^2"},
    {2, 0, 0, 0,
     "-131072*w^6*(-13619-14278*b+27055*b^2+20702*b^3-14471*b^4-4272*b^5+64*b^6+861184*a^10-7424*a^8*(215"
     "+117*b+35*b^2)-3712*a^7*(79-13*b+29*b^2+6*b^3)+16*a^6*(49185+62374*b+22243*b^2+8190*b^3+1225*b^4)"
     "+16*a^5*(10165-9252*b+5275*b^2+5156*b^3+1717*b^4+210*b^5)+4*a^4*(-11991-108734*b-42025*b^2+6018*b^3"
     "+4605*b^4+348*b^5+36*b^6)-8*a^3*(-14829-10678*b+25617*b^2+13450*b^3-229*b^4+112*b^5)-4*a^2*(-12103"
     "-47682*b+5187*b^2+53180*b^3+9227*b^4+118*b^5+48*b^6)-16*a*(1974-1223*b-4798*b^2+2025*b^3+2847*b^4"
     "+552*b^5))"},
    {1, 2, 0, 0,
     "-196608*w^7*(331+1741*b+1347*b^2+256*b^3+928*a^5-4*a^3*(55+117*b+35*b^2)+2*a^2*(457+493*b-29*b^2"
     "-6*b^3)+8*a*(219+300*b+64*b^2))"},
    {1, 1, 1, 0,
     "-8192*w^3*(1+4*a+4*b)"},
    {1, 1, 0, 0,
     "524288*w^7*(-5660-15395*b-13434*b^2-3658*b^3+699*b^4+248*b^5+74240*a^7+7424*a^6*(14+3*b)+32*a^5*(2068"
     "+3499*b+549*b^2)-32*a^4*(3405+2266*b+986*b^2+135*b^3)-4*a^3*(34702+49869*b+33584*b^2+9946*b^3+1157"
     "*b^4)-2*a^2*(10270+7293*b+7366*b^2+5750*b^3+1865*b^4+186*b^5)+4*a*(579+3791*b+1279*b^2-1370*b^3-386"
     "*b^4))"},
    {1, 0, 1, 0,
     "8192*w^3*(-37-57*b-19*b^2+8*b^3+928*a^5-4*a^3*(215+117*b+35*b^2)-2*a^2*(79-13*b+29*b^2+6*b^3)+4*a"
     "*(13+26*b-19*b^2))"},
    {1, 0, 0, 1,
     "4096*w^3*(1+4*a+4*b)"},
    {1, 0, 0, 0,
     "4194304*w^7*(4932+16665*b+11175*b^2-14314*b^3-17698*b^4-2758*b^5+1195*b^6+248*b^7+81664*a^9+14848"
     "*a^8*(7+13*b)+64*a^7*(-732+4939*b+2461*b^2)-16*a^6*(12937+1873*b-17789*b^2-3566*b^3)-4*a^5*(34391"
     "+118156*b+58145*b^2+886*b^3-163*b^4)-2*a^4*(-41701+71982*b+181625*b^2+148168*b^3+59993*b^4+7678*b^5)"
     "-4*a^3*(-25072-31047*b-7060*b^2+18362*b^3+30122*b^4+11927*b^5+1367*b^6)-a^2*(-13177+22918*b+43651"
     "*b^2-34790*b^3-34703*b^4+3260*b^5+3730*b^6+372*b^7)+2*a*(1455-7845*b-27962*b^2-17466*b^3+6066*b^4"
     "+4099*b^5+500*b^6))"},
    {0, 3, 0, 0,
     "262144*w^8*(185+161*b+31*b^2+80*a^2+16*a*(7+2*b))"},
    {0, 2, 1, 0,
     "6144*w^4"},
    {0, 2, 0, 0,
     "-131072*w^8*(71225+151340*b+106903*b^2+29946*b^3+2883*b^4+19008*a^4+384*a^3*(140+29*b)+16*a^2*(7055"
     "+5838*b+1026*b^2)+16*a*(6580+8093*b+2751*b^2+279*b^3))"},
    {0, 1, 1, 0,
     "-16384*w^4*(146+161*b+31*b^2+80*a^2+8*a*(14+3*b))"},
    {0, 1, 0, 1,
     "-6144*w^4"},
    {0, 1, 0, 0,
     "-4194304*w^8*(-19215-45724*b-16620*b^2+34776*b^3+33578*b^4+9982*b^5+961*b^6+7744*a^6+1408*a^5*(14"
     "+15*b)+16*a^4*(1895+4683*b+1593*b^2)+32*a^3*(399+3587*b+3374*b^2+643*b^3)-a^2*(17727-74802*b-155743"
     "*b^2-79982*b^3-11409*b^4)-2*a*(15904+3733*b-52668*b^2-56213*b^3-18606*b^4-1953*b^5))"},
    {0, 0, 1, 0,
     "-131072*w^4*(-110-161*b+76*b^2+161*b^3+31*b^4+88*a^4+16*a^3*(7+13*b)+a^2*(25+385*b+183*b^2)-2*a*(56"
     "-94*b-217*b^2-47*b^3))"},
    {0, 0, 0, 1,
     "8192*w^4*(146+80*a^2+161*b+31*b^2+8*a*(14+3*b))"},
};
const std::size_t kClosureK4DoubleI2Size = sizeof(kClosureK4DoubleI2) / sizeof(kClosureK4DoubleI2[0]);

}  // namespace ttw::detail
