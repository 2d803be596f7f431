#include "catalog_data.hpp"

// Generated operator data tables; regenerate rather than editing by hand.
// Expressions use the operator expression language (t, u, a, b, w, Dt, Du).

namespace ttw::detail {

// Coefficients of the order-6 second integral at k=3, keyed by (dt, du).
const CoeffEntry kI2TableK3[] = {
    {0, 1,
     "-1296*(2*a+1)*(2*b+1)*(a+b+2)*(3*a+3*b+1)*(3*a+3*b+2)+1296*w*t*(2*a+1)*(2*b+1)*(3*a+3*b+2)*(3*a+3"
     "*b+5)-36*w^2*t^2*(2*b+1)*(185*a^2+a*(216*b+355)-27*(b-5)*b+136)+24*w^3*(9*b*(u*(12*a+b+11)-2*(2*b"
     "+1)*t^3)+(a*(41*a+67)+28)*u)"},
    {0, 2,
     "648*(9*(2*b+1)*(2*b+3)*t^3*(a+b+4)*(4*a+2*b+7)-2*u*(36*a^4+18*a^3*(18*b+25)+a^2*(18*b*(32*b+109)"
     "+1619)+a*(6*b*(54*b^2+327*b+613)+2213)+(3*b*(b+9)+32)*(6*b*(2*b+7)+31)))+324*w*(4*t*u*(36*a^3+6*a^2"
     "*(36*b+53)+a*(72*b*(3*b+11)+685)+9*b*(4*b^2+34*b+69)+362)-9*(4*b*(b+2)+3)*t^4*(6*a+4*b+17))+w^2*(2916"
     "*(4*b*(b+2)+3)*t^5-72*t^2*u*(185*a^2+a*(594*b+922)+27*b*(5*b+24)+541))+648*w^3*u*(2*u*(a+b+1)-(2"
     "*b+1)*t^3)"},
    {0, 3,
     "-1296*u*(2*u*(108*a^3+36*a^2*(13*b+30)+a*(36*b*(13*b+69)+3194)+54*b*(2*b*(b+10)+59)+2893)-9*(2*b"
     "+3)*t^3*(8*a^2+4*a*(6*b+19)+4*b*(3*b+22)+151))+3888*w*t*u*(2*u*(24*a^2+2*a*(30*b+71)+6*b*(4*b+23)"
     "+173)-3*(2*b+3)*t^3*(6*a+8*b+27))-1944*w^2*t^2*u*(u*(14*a+12*b+25)-6*(2*b+3)*t^3)+432*w^3*u^2*(u"
     "-t^3)"},
    {0, 4,
     "23328*u^2*(t^3*(4*a^2+a*(30*b+83)+b*(26*b+179)+288)-2*u*(13*a^2+a*(30*b+97)+b*(13*b+97)+169))-11664"
     "*w*t*u^2*(t^3*(6*a+20*b+57)-4*u*(5*a+5*b+16))+11664*w^2*t^2*u^2*(t^3-u)"},
    {0, 5,
     "46656*u^3*(t^3*(6*a+12*b+47)-2*u*(6*a+6*b+25))-93312*w*t*u^3*(t^3-u)"},
    {0, 6,
     "186624*(t^3-u)*u^4"},
    {1, 0,
     "8*w^2*(3*a+3*b+1)*(a*(31*a+41)+27*(b-1)*b+8)-8*w^3*t*(a*(31*a+41)+27*(b-1)*b+8)"},
    {1, 1,
     "-2592*(2*a+1)*(2*b+1)*t*(3*a+3*b+2)*(3*a+3*b+5)+7776*w*t^2*(2*a+1)*(2*b+1)*(2*a+2*b+3)+24*w^2*(2"
     "*u*(58*a^2+a*(54*b+131)+27*b*(2*b+5)+107)-27*t^3*(2*b+1)*(9*a+b+9))+216*w^3*t*((2*b+1)*t^3-2*u*(a"
     "+b+1))"},
    {1, 2,
     "-648*(4*t*u*(36*a^3+6*a^2*(36*b+53)+a*(72*b*(3*b+11)+685)+9*b*(4*b^2+34*b+69)+362)-9*(4*b*(b+2)+3)"
     "*t^4*(6*a+4*b+17))+3888*w*(t^2*u*(48*a*b+16*a*(a+5)+12*b^2+48*b+45)-3*(4*b*(b+2)+3)*t^5)-3888*w^2"
     "*u*(t^3*(3*a+b+4)-u*(a+b+3))+432*w^3*t*u*(t^3-u)"},
    {1, 3,
     "-7776*t*u*(2*u*(24*a^2+2*a*(30*b+71)+6*b*(4*b+23)+173)-3*(2*b+3)*t^3*(6*a+8*b+27))+15552*w*t^2*u"
     "*(u*(8*a+6*b+13)-3*(2*b+3)*t^3)-2592*w^2*u^2*(t^3-u)"},
    {1, 4,
     "23328*t*u^2*(t^3*(6*a+20*b+57)-4*u*(5*a+5*b+16))-46656*w*t^2*u^2*(t^3-u)"},
    {1, 5,
     "186624*t*(t^3-u)*u^3"},
    {2, 0,
     "-144*w*(2*a+1)*(3*a+3*b+1)*(3*a+3*b+2)+8*w^2*t*(247*a^2+a*(216*b+293)+27*b*(b+3)+80)-144*w^3*(2*a"
     "+1)*t^2"},
    {2, 1,
     "-7776*t^2*(2*a+1)*(2*b+1)*(2*a+2*b+3)-1296*w*(2*u*(4*a^2+a*(6*b+9)+b*(2*b+11)+7)-(2*b+1)*t^3*(12"
     "*a+2*b+13))+1944*w^2*(2*t*u*(a+b+1)-(2*b+1)*t^4)"},
    {2, 2,
     "-3888*(t^2*u*(48*a*b+16*a*(a+5)+12*b^2+48*b+45)-3*(4*b*(b+2)+3)*t^5)+2592*w*u*(t^3*(12*a+6*b+19)"
     "-2*u*(3*a+3*b+8))-3888*w^2*t*u*(t^3-u)"},
    {2, 3,
     "-15552*t^2*u*(u*(8*a+6*b+13)-3*(2*b+3)*t^3)+10368*w*u^2*(t^3-u)"},
    {2, 4,
     "46656*t^2*(t^3-u)*u^2"},
    {3, 0,
     "96*(2*a+1)*(3*a+3*b+1)*(3*a+3*b+2)-576*w*t*(2*a+1)*(3*a+3*b+2)+576*w^2*t^2*(2*a+1)+64*w^3*(u-t^3)"},
    {3, 1,
     "864*(2*u*(4*a^2+a*(6*b+9)+b*(2*b+11)+7)-(2*b+1)*t^3*(12*a+2*b+13))-3456*w*(2*t*u*(a+b+1)-(2*b+1)"
     "*t^4)"},
    {3, 2,
     "-1728*u*(t^3*(12*a+6*b+19)-2*u*(3*a+3*b+8))+6912*w*t*u*(t^3-u)"},
    {3, 3,
     "-6912*(t^3-u)*u^2"},
    {4, 0,
     "288*(2*a+1)*t*(3*a+3*b+2)-720*w*t^2*(2*a+1)+192*w^2*(t^3-u)"},
    {4, 1,
     "1728*(2*t*u*(a+b+1)-(2*b+1)*t^4)"},
    {4, 2,
     "-3456*t*(t^3-u)*u"},
    {5, 0,
     "288*(2*a+1)*t^2-192*w*(t^3-u)"},
    {6, 0,
     "64*(t^3-u)"},
};
const std::size_t kI2TableK3Size = sizeof(kI2TableK3) / sizeof(kI2TableK3[0]);

// Reference coefficients of the integral commutator [I1, I2] at k=3.
const CoeffEntry kI12TableK3[] = {
    {0, 1,
     "5184*(1+2*a)*(1+2*b)*(1+3*a+3*b)*(2+3*a+3*b)*(4+3*a+3*b)*(5+3*a+3*b)-15552*w*t*(1+2*a)*(1+2*b)*(2"
     "+3*a+3*b)*(4+3*a+3*b)*(5+3*a+3*b)+15552*w^2*t^2*(1+2*a)*(1+2*b)*(4+3*a+3*b)*(5+3*a+3*b)+1728*w^3"
     "*(1+2*b)*(-(22+9*b+9*a*(5+2*a+2*b))*t^3+4*u)"},
    {0, 2,
     "-23328*(2*b+3)*(2*b+1)*(72*a^3+162*a^2*b+108*a*b^2+18*b^3+513*a^2+720*a*b+207*b^2+1195*a+755*b+900)"
     "*t^3+(1679616*a^5+20155392*a^4*b+52068096*a^3*b^2+52068096*a^2*b^3+20155392*a*b^4+1679616*b^5+27713664"
     "*a^4+174680064*a^3*b+293932800*a^2*b^2+174680064*a*b^3+27713664*b^4+144773568*a^3+549094464*a^2*b"
     "+549094464*a*b^2+144773568*b^3+338909184*a^2+741270528*a*b+338909184*b^2+363953088*a+363123648*b"
     "+143182080)*u+w*(46656*(2*b+3)*(2*b+1)*(27*a^2+36*a*b+9*b^2+138*a+78*b+170)*t^4+(-1679616*a^4-15116544"
     "*a^3*b-26873856*a^2*b^2-15116544*a*b^3-1679616*b^4-22114944*a^3-98257536*a^2*b-98257536*a*b^2-22114944"
     "*b^3-86173632*a^2-198474624*a*b-86173632*b^2-127666368*a-125178048*b-60030720)*u*t)+w^2*(-69984*(2"
     "*b+3)*(2*b+1)*(4*a+2*b+11)*t^5+(559872*a^3+3359232*a^2*b+3359232*a*b^2+559872*b^3+5318784*a^2+13436928"
     "*a*b+5318784*b^2+12581568*a+11337408*b+6920640)*u*t^2)+w^3*(15552*(2*b+3)*(2*b+1)*t^6+(-62208*a^2"
     "-186624*a*b-62208*b^2-342144*a-217728*b-216000)*u*t^3+13824*u^2)"},
    {0, 3,
     "104976*(2*b+5)*(2*b+3)*(2*b+1)*(6*a+4*b+25)*t^6-46656*(2*b+3)*(144*a^3+648*a^2*b+684*a*b^2+180*b^3"
     "+1836*a^2+4500*a*b+2052*b^2+7115*a+7295*b+8275)*u*t^3+(13436928*a^4+83980800*a^3*b+141087744*a^2"
     "*b^2+83980800*a*b^3+13436928*b^4+193155840*a^3+733992192*a^2*b+733992192*a*b^2+193155840*b^3+954488448"
     "*a^2+2101946112*a*b+954488448*b^2+1975601664*a+1975601664*b+1459866240)*u^2-w*(209952*(2*b+5)*(2"
     "*b+3)*(2*b+1)*t^7-23328*(2*b+3)*(216*a^2+576*a*b+252*b^2+1824*a+1860*b+3325)*u*t^4+(10077696*a^3"
     "+43670016*a^2*b+43670016*a*b^2+10077696*b^3+105255936*a^2+242984448*a*b+105255936*b^2+326032128*a"
     "+326032128*b+307463040)*t*u^2)+w^2*(-1119744*(2*b+3)*(a+b+4)*u*t^5+(2239488*a^2+5598720*a*b+2239488"
     "*b^2+13996800*a+13996800*b+18195840)*t^2*u^2)+w^3*((124416*b+186624)*t^6*u-124416*(a+b+2)*t^3*u^2)"},
    {0, 4,
     "209952*(2*b+5)*(2*b+3)*(18*a+20*b+103)*t^6*u+(-6718464*a^3-75582720*a^2*b-141087744*a*b^2-58786560"
     "*b^3-199034496*a^2-900274176*a*b-654210432*b^2-1375418880*a-2301447168*b-2585675520)*t^3*u^2+(41990400"
     "*a^3+159563520*a^2*b+159563520*a*b^2+41990400*b^3+517321728*a^2+1142138880*a*b+517321728*b^2+2022630912"
     "*a+2022630912*b+2538086400)*u^3-w*(1259712*(2*b+5)*(2*b+3)*u*t^7-(5038848*a^2+33592320*a*b+26873856"
     "*b^2+92938752*a+180278784*b+288567360)*t^4*u^2+(21835008*a^2+50388480*a*b+21835008*b^2+168521472"
     "*a+168521472*b+303264000)*t*u^3)-279936*w^2*t^2*u^2*(4*a*t^3+10*b*t^3+31*t^3-10*a*u-10*b*u-34*u)"
     "+62208*w^3*u^2*t^3*(t^3-u)"},
    {0, 5,
     "1259712*(2*b+5)*(12*b+6*a+53)*u^2*t^6+(-30233088*a^2-131010048*a*b-94058496*b^2-482049792*a-787739904"
     "*b-1593768960)*u^3*t^3+(63825408*a^2+141087744*a*b+63825408*b^2+591224832*a+591224832*b+1325030400)"
     "*u^4+279936*w*t*u^2*(-18*b*t^6-45*t^6+48*a*t^3*u+90*b*t^3*u+341*t^3*u-72*a*u^2-72*b*u^2-308*u^2)"
     "-1119744*w^2*t^2*u^3*(t^3-u)"},
    {0, 6,
     "839808*u^3*(6*a*t^6+28*b*t^6+109*t^6-52*a*t^3*u-84*b*t^3*u-392*t^3*u+56*a*u^2+56*b*u^2+288*u^2)-1679616"
     "*w*t*u^3*(t^3-4*u)*(t^3-u)"},
    {0, 7,
     "6718464*(t^3-2*u)*(t^3-u)*u^4"},
    {1, 1,
     "31104*(1+2*a)*(1+2*b)*(2+3*a+3*b)*(4+3*a+3*b)*(5+3*a+3*b)*t-77760*w*(1+2*a)*(1+2*b)*(4+3*a+3*b)*(5"
     "+3*a+3*b)*t^2+20736*w^2*(1+2*b)*((22+9*b+9*a*(5+2*a+2*b))*t^3-4*u)+5184*w^3*(1+2*b)*t*(-(7+6*a)*t^3"
     "+4*u)"},
    {1, 2,
     "-93312*(2*b+3)*(2*b+1)*(27*a^2+36*a*b+9*b^2+138*a+78*b+170)*t^4+(3359232*a^4+30233088*a^3*b+53747712"
     "*a^2*b^2+30233088*a*b^3+3359232*b^4+44229888*a^3+196515072*a^2*b+196515072*a*b^2+44229888*b^3+172347264"
     "*a^2+396949248*a*b+172347264*b^2+255332736*a+250356096*b+120061440)*u*t+w*(349920*(2*b+3)*(2*b+1)"
     "*(4*a+2*b+11)*t^5-(2799360*a^3+16796160*a^2*b+16796160*a*b^2+2799360*b^3+26593920*a^2+67184640*a"
     "*b+26593920*b^2+62907840*a+56687040*b+34603200)*u*t^2)-w^2*(186624*(2*b+3)*(2*b+1)*t^6-(746496*a^2"
     "+2239488*a*b+746496*b^2+4105728*a+2612736*b+2592000)*u*t^3+165888*u^2)-10368*w^3*t*u*(6*a*t^3+7*t^3"
     "-4*u)"},
    {1, 3,
     "419904*(2*b+5)*(2*b+3)*(2*b+1)*t^7-46656*(2*b+3)*(216*a^2+576*a*b+252*b^2+1824*a+1860*b+3325)*u*t^4"
     "+(20155392*a^3+87340032*a^2*b+87340032*a*b^2+20155392*b^3+210511872*a^2+485968896*a*b+210511872*b^2"
     "+652064256*a+652064256*b+614926080)*u^2*t+w*(5598720*(2*b+3)*(a+b+4)*u*t^5-(11197440*a^2+27993600"
     "*a*b+11197440*b^2+69984000*a+69984000*b+90979200)*u^2*t^2)+746496*w^2*u*t^3*(-2*b*t^3-3*t^3+2*a*u"
     "+2*b*u+4*u)"},
    {1, 4,
     "2519424*(2*b+5)*(2*b+3)*u*t^7+(-10077696*a^2-67184640*a*b-53747712*b^2-185877504*a-360557568*b-577134720)"
     "*u^2*t^4+(43670016*a^2+100776960*a*b+43670016*b^2+337042944*a+337042944*b+606528000)*u^3*t+1399680"
     "*w*t^2*u^2*(4*a*t^3+10*b*t^3+31*t^3-10*a*u-10*b*u-34*u)-746496*w^2*u^2*t^3*(t^3-u)"},
    {1, 5,
     "-559872*t*u^2*(-18*b*t^6-45*t^6+48*a*t^3*u+90*b*t^3*u+341*t^3*u-72*a*u^2-72*b*u^2-308*u^2)+5598720"
     "*w*t^2*u^3*(t^3-u)"},
    {1, 6,
     "3359232*t*(t^3-4*u)*(t^3-u)*u^3"},
    {2, 1,
     "77760*(2*b+1)*(2*a+1)*(3*a+3*b+5)*(3*a+3*b+4)*t^2-51840*w*(2*b+1)*(18*a^2*t^3+18*a*b*t^3+45*a*t^3"
     "+9*b*t^3+22*t^3-4*u)+31104*w^2*t*(2*b+1)*(6*a*t^3+7*t^3-4*u)-10368*w^3*t^2*(t^3-u)*(2*b+1)"},
    {2, 2,
     "-349920*(2*b+3)*(2*b+1)*(4*a+2*b+11)*t^5+(2799360*a^3+16796160*a^2*b+16796160*a*b^2+2799360*b^3+26593920"
     "*a^2+67184640*a*b+26593920*b^2+62907840*a+56687040*b+34603200)*u*t^2+w*(466560*(2*b+3)*(2*b+1)*t^6"
     "-(1866240*a^2+5598720*a*b+1866240*b^2+10264320*a+6531840*b+6480000)*u*t^3+414720*u^2)+62208*w^2*t"
     "*u*(6*a*t^3+7*t^3-4*u)-20736*w^3*t^2*u*(t^3-u)"},
    {2, 3,
     "-5598720*(2*b+3)*(a+b+4)*u*t^5+(11197440*a^2+27993600*a*b+11197440*b^2+69984000*a+69984000*b+90979200)"
     "*u^2*t^2-1866240*w*u*t^3*(-2*b*t^3-3*t^3+2*a*u+2*b*u+4*u)"},
    {2, 4,
     "-1399680*t^2*u^2*((31+4*a+10*b)*t^3-2*(17+5*a+5*b)*u)+1866240*w*t^3*(t^3-u)*u^2"},
    {2, 5,
     "-5598720*t^2*(t^3-u)*u^3"},
    {3, 0,
     "w^3*(-(2304*b+1152)*t^3+(2304*a+2304*b+2304)*u)"},
    {3, 1,
     "34560*(2*b+1)*(18*a^2*t^3+18*a*b*t^3+45*a*t^3+9*b*t^3+22*t^3-4*u)-51840*w*t*(2*b+1)*(6*a*t^3+7*t^3"
     "-4*u)+41472*w^2*t^2*(t^3-u)*(2*b+1)-4608*w^3*u*(t^3-u)"},
    {3, 2,
     "-311040*(2*b+3)*(2*b+1)*t^6+(1244160*a^2+3732480*a*b+1244160*b^2+6842880*a+4354560*b+4320000)*u*t^3"
     "-276480*u^2-103680*w*t*u*(6*a*t^3+7*t^3-4*u)+82944*w^2*t^2*u*(t^3-u)"},
    {3, 3,
     "1244160*t^3*u*(-(3+2*b)*t^3+2*(2+a+b)*u)"},
    {3, 4,
     "-1244160*t^3*(t^3-u)*u^2"},
    {4, 0,
     "3456*w^2*((1+2*b)*t^3-2*(1+a+b)*u)"},
    {4, 1,
     "25920*t*(2*b+1)*(6*a*t^3+7*t^3-4*u)-51840*w*t^2*(t^3-u)*(2*b+1)+13824*w^2*u*(t^3-u)"},
    {4, 2,
     "51840*t*((7+6*a)*t^3-4*u)*u-103680*w*t^2*(t^3-u)*u"},
    {5, 0,
     "3456*w*(-(1+2*b)*t^3+2*(1+a+b)*u)"},
    {5, 1,
     "20736*(1+2*b)*t^2*(t^3-u)-13824*w*(t^3-u)*u"},
    {5, 2,
     "41472*t^2*(t^3-u)*u"},
    {6, 0,
     "1152*((1+2*b)*t^3-2*(1+a+b)*u)"},
    {6, 1,
     "4608*(t^3-u)*u"},
};
const std::size_t kI12TableK3Size = sizeof(kI12TableK3) / sizeof(kI12TableK3[0]);
}  // namespace ttw::detail
